#include "cktweb/linalg.hpp"

#include "cktweb/errors.hpp"

namespace cktweb {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void RationalMatrix::append_row(const RationalVector& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw DomainError("row length mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

RationalVector RationalMatrix::row(std::size_t r) const {
    return RationalVector(a_.begin() + static_cast<long>(r * cols_), a_.begin() + static_cast<long>((r + 1) * cols_));
}

RationalVector RationalMatrix::column(std::size_t c) const {
    RationalVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
    if (v.size() != cols_) throw DomainError("matrix-vector size mismatch");
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != 0 && v[c] != 0) out[r] += (*this)(r, c) * v[c];
    return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product size mismatch");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix size mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Echelon row_reduce(const RationalMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    // Integer rows.
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    // Bareiss forward elimination.
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t sel = pr;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[pr]);
        for (std::size_t r = pr + 1; r < rows; ++r) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[r][j] = a[pr][c] * a[r][j] - a[r][c] * a[pr][j];
                mpz_divexact(a[r][j].get_mpz_t(), a[r][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[r][c] = 0;
        }
        prev = a[pr][c];
        pivots.push_back(c);
        ++pr;
    }
    // Back to rationals, normalise pivots to one and clear above.
    RationalMatrix red(pivots.size(), cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const Integer& p = a[r][pivots[r]];
        for (std::size_t c = 0; c < cols; ++c)
            if (a[r][c] != 0) red(r, c) = Rational(a[r][c], p), red(r, c).canonicalize();
    }
    for (std::size_t r = pivots.size(); r-- > 0;) {
        for (std::size_t above = 0; above < r; ++above) {
            Rational f = red(above, pivots[r]);
            if (f == 0) continue;
            for (std::size_t c = pivots[r]; c < cols; ++c)
                if (red(r, c) != 0) red(above, c) -= f * red(r, c);
        }
    }
    return {std::move(red), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<RationalVector> kernel(const RationalMatrix& m) {
    auto e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
    if (b.size() != a.rows()) throw DomainError("right-hand side size mismatch");
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    auto e = row_reduce(aug);
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    RationalVector x(a.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
    return x;
}

RationalMatrix inverse(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw DomainError("inverse of a non-square matrix");
    RationalMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    auto e = row_reduce(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw DomainError("singular matrix");
    RationalMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

UniPoly characteristic_polynomial(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw DomainError("characteristic polynomial of a non-square matrix");
    RationalMatrix h = m;
    // Similarity reduction to upper Hessenberg form.
    for (std::size_t k = 1; k + 1 < n; ++k) {
        std::size_t i = k;
        while (i < n && h(i, k - 1) == 0) ++i;
        if (i == n) continue;
        if (i != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(k, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, k));
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            if (h(r, k - 1) == 0) continue;
            Rational u = h(r, k - 1) / h(k, k - 1);
            for (std::size_t c = 0; c < n; ++c) h(r, c) -= u * h(k, c);
            for (std::size_t rr = 0; rr < n; ++rr) h(rr, k) += u * h(rr, r);
        }
    }
    // p_j = (x - h_jj) p_{j-1} - sum_i h_{j-i,j} (prod of subdiagonal) p_{j-i-1}, 1-indexed.
    auto H = [&](std::size_t r, std::size_t c) -> const Rational& { return h(r - 1, c - 1); };
    std::vector<UniPoly> p{UniPoly{Rational(1)}};
    const UniPoly x{Rational(0), Rational(1)};
    for (std::size_t j = 1; j <= n; ++j) {
        UniPoly next = (x - UniPoly{H(j, j)}) * p[j - 1];
        Rational t = 1;
        for (std::size_t i = 1; i < j; ++i) {
            t *= H(j - i + 1, j - i);
            if (t == 0) break;
            next -= (H(j - i, j) * t) * p[j - i - 1];
        }
        p.push_back(std::move(next));
    }
    return p.back();
}

}  // namespace cktweb
