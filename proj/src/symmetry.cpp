#include "cktweb/symmetry.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "cktweb/errors.hpp"

namespace cktweb {

namespace {

using Key = std::pair<int, MultiPoly::Monomial>;

constexpr int kSlotIndex[6][2] = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};

// Flattens polynomial collections into coefficient vectors over a growing key set.
class Flattener {
public:
    std::size_t key(const Key& k) {
        auto [it, fresh] = index_.try_emplace(k, index_.size());
        return it->second;
    }
    std::size_t size() const { return index_.size(); }
    std::optional<std::size_t> find(const Key& k) const {
        auto it = index_.find(k);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    template <class Polys>
    std::vector<std::pair<std::size_t, Rational>> sparse(const Polys& polys) {
        std::vector<std::pair<std::size_t, Rational>> out;
        int s = 0;
        for (const auto& p : polys) {
            for (const auto& t : p.terms()) out.emplace_back(key({s, t.mono}), t.coeff);
            ++s;
        }
        return out;
    }

    // Columns given sparsely; rows = keys seen so far.
    RationalMatrix matrix(const std::vector<std::vector<std::pair<std::size_t, Rational>>>& cols) const {
        RationalMatrix m(size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& [r, v] : cols[c]) m(r, c) = v;
        return m;
    }

private:
    std::map<Key, std::size_t> index_;
};

std::array<MultiPoly, 6> components(const SymTensorField& k) {
    std::array<MultiPoly, 6> out;
    for (int s = 0; s < 6; ++s) out[s] = k(kSlotIndex[s][0], kSlotIndex[s][1]);
    return out;
}

struct TckSolver {
    Flattener keys;
    RationalMatrix basis;  // keys x 35
    std::vector<std::size_t> rows;
    RationalMatrix pinv;

    TckSolver() {
        std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;
        for (const auto& c : tck_basis()) cols.push_back(keys.sparse(components(assemble_ckt(c))));
        basis = keys.matrix(cols);
        auto e = row_reduce(basis.transpose());
        if (e.pivots.size() != static_cast<std::size_t>(kTckDimension))
            throw InternalError("trace-free basis has rank " + std::to_string(e.pivots.size()));
        rows = e.pivots;
        RationalMatrix p(rows.size(), basis.cols());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < basis.cols(); ++c) p(r, c) = basis(rows[r], c);
        pinv = inverse(p);
    }

    RationalVector coordinates(const SymTensorField& k) const {
        RationalVector v(keys.size());
        auto comps = components(k);
        for (int s = 0; s < 6; ++s)
            for (const auto& t : comps[s].terms()) {
                auto r = keys.find({s, t.mono});
                if (!r) throw ValidationError("tensor is not in the trace-free conformal Killing space");
                v[*r] = t.coeff;
            }
        RationalVector sub(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) sub[r] = v[rows[r]];
        RationalVector x = pinv * sub;
        if (basis * x != v) throw ValidationError("tensor is not in the trace-free conformal Killing space");
        return x;
    }
};

const TckSolver& solver() {
    static const TckSolver s;
    return s;
}

std::vector<CktCoefficients> combine_all(const std::vector<CktCoefficients>& basis, const std::vector<RationalVector>& vs) {
    std::vector<CktCoefficients> out;
    for (const auto& v : vs) {
        CktCoefficients c;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) c += v[i] * basis[i];
        out.push_back(c);
    }
    return out;
}

CktCoefficients random_member(const std::vector<CktCoefficients>& basis, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-1000, 1000);
    CktCoefficients c;
    for (const auto& b : basis) c += Rational(d(rng)) * b;
    return c;
}

}  // namespace

RationalVector tck_coordinates(const SymTensorField& k) { return solver().coordinates(k); }

CktCoefficients tck_combine(const RationalVector& coords) {
    if (coords.size() != static_cast<std::size_t>(kTckDimension)) throw DomainError("expected 35 coordinates");
    return combine_all(tck_basis(), {coords}).front();
}

RationalMatrix lie_matrix(const VectorField& v) {
    const auto& basis = tck_basis();
    RationalMatrix m(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        auto col = tck_coordinates(lie_derivative(v, assemble_ckt(basis[j])));
        for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
    }
    return m;
}

SymmetryScan symmetry_subspace(const VectorField& v, SymmetryMode mode) {
    SymmetryScan scan;
    const auto& basis = tck_basis();
    RationalMatrix m = lie_matrix(v);
    if (mode == SymmetryMode::HZero) {
        scan.spaces.push_back({Rational(0), combine_all(basis, kernel(m))});
        return scan;
    }
    scan.characteristic_polynomial = characteristic_polynomial(m);
    for (const auto& f : squarefree_decomposition(scan.characteristic_polynomial)) {
        auto roots = rational_roots(f.factor);
        int real = real_root_count(f.factor);
        scan.irrational_real_eigenvalues += real - static_cast<int>(roots.size());
        scan.nonreal_eigenvalues += f.factor.degree() - real;
        for (const auto& h : roots) {
            RationalMatrix a = m;
            for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) -= h;
            scan.spaces.push_back({h, combine_all(basis, kernel(a))});
        }
    }
    std::sort(scan.spaces.begin(), scan.spaces.end(), [](const auto& a, const auto& b) { return a.h < b.h; });
    return scan;
}

TsnFilter tsn_filter(const std::vector<CktCoefficients>& basis, const VectorField& symmetry, std::uint64_t seed) {
    TsnFilter out;
    if (basis.empty()) {
        out.whole_space = out.certified = true;
        return out;
    }
    std::mt19937_64 rng(seed);
    bool whole = true;
    for (int trial = 0; trial < 3 && whole; ++trial) whole = tsn_check(assemble_ckt(random_member(basis, rng)));
    if (whole) {
        out.dimension = static_cast<int>(basis.size());
        out.whole_space = out.certified = true;
        out.basis = basis;
        return out;
    }
    // Linear candidate: the symmetry field is an eigenvector.
    Flattener keys;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;
    for (const auto& b : basis) {
        VectorField kv = assemble_ckt(b).contract(symmetry);
        std::array<MultiPoly, 3> cross = {kv[1] * symmetry[2] - kv[2] * symmetry[1],
                                          kv[2] * symmetry[0] - kv[0] * symmetry[2],
                                          kv[0] * symmetry[1] - kv[1] * symmetry[0]};
        cols.push_back(keys.sparse(cross));
    }
    auto sub = combine_all(basis, kernel(keys.matrix(cols)));
    for (int trial = 0; trial < 3 && !sub.empty(); ++trial)
        if (!tsn_check(assemble_ckt(random_member(sub, rng)))) return out;
    out.dimension = static_cast<int>(sub.size());
    out.basis = sub;
    if (sub.empty()) return out;
    // Tangent space of the normality locus at a random point of the candidate.
    SymTensorField base = assemble_ckt(random_member(sub, rng));
    const MultiPoly eps = MultiPoly::var(3);
    Flattener jkeys;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> jcols;
    for (const auto& b : basis) {
        SymTensorField dir = assemble_ckt(b);
        dir *= eps;
        auto r = tsn_residuals(base + dir);
        std::array<MultiPoly, 3> lin;
        for (int i = 0; i < 3; ++i) lin[i] = r[i].coefficient_of(3, 1);
        jcols.push_back(jkeys.sparse(lin));
    }
    std::size_t jr = jkeys.size() ? rank(jkeys.matrix(jcols)) : 0;
    out.certified = basis.size() - jr == sub.size();
    return out;
}

}  // namespace cktweb
