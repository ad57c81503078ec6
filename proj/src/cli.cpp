#include "cktweb/cli.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cktweb/catalog.hpp"
#include "cktweb/expr.hpp"
#include "cktweb/json_io.hpp"
#include "cktweb/numeric_roots.hpp"
#include "cktweb/sampling.hpp"
#include "cktweb/symmetry.hpp"

namespace cktweb {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Report {
    Json inputs = Json::object();
    Json results = Json::object();
    Json findings = Json::array();
    bool inconsistent = false;

    void finding(const std::string& severity, const std::string& message, Json detail = nullptr) {
        Json f{{"severity", severity}, {"message", message}};
        if (!detail.is_null()) f["detail"] = std::move(detail);
        findings.push_back(std::move(f));
        if (severity == "inconsistency") inconsistent = true;
    }
};

std::vector<Rational> parse_list(const std::string& text, std::size_t expected, const std::string& what) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.size() != expected)
        throw InputError(what + " needs " + std::to_string(expected) + " comma-separated rationals, got " +
                         std::to_string(out.size()));
    return out;
}

std::string sign_name(FormSign s) { return to_string(s); }

// Floating-point look at the same quartic: discriminant sign and number of real roots on P^1.
Json float_probe(const BinaryQuartic& q, const RootStructure& rs, const Invariants& inv) {
    const double m = to_double(q.M33), l = to_double(q.L3), h = to_double(q.H), d = to_double(q.D3), a = to_double(q.A33);
    const double i = 12 * a * m - 3 * l * d + h * h;
    const double j = 72 * a * m * h - 27 * a * l * l - 27 * d * d * m + 9 * d * l * h - 2 * h * h * h;
    const double delta = 4 * i * i * i - j * j;
    const int exact_sign = sign(inv.Delta);
    const double scale = std::max(std::abs(4 * i * i * i), j * j);
    const int float_sign = std::abs(delta) <= 1e-9 * scale ? 0 : (delta > 0 ? 1 : -1);
    int real_count = rs.infinity_multiplicity;
    const UniPoly p = q.dehomogenized();
    if (p.degree() > 0)
        for (const auto& sf : squarefree_decomposition(p))
            for (const auto& z : complex_roots(sf.factor))
                if (std::abs(z.imag()) <= 1e-9L * std::max<long double>(1, std::abs(z))) real_count += sf.multiplicity;
    int exact_count = 0;
    for (int r : rs.partition.real) exact_count += r;
    return {{"delta", delta},
            {"delta_sign_agrees", float_sign == exact_sign},
            {"real_roots_with_multiplicity", real_count},
            {"real_roots_agree", real_count == exact_count}};
}

void cmd_classify(Report& rep, const std::string& params_text, const std::string& quartic_text, bool probe) {
    if (params_text.empty() == quartic_text.empty()) throw InputError("classify needs exactly one of --params, --quartic");
    BinaryQuartic q;
    if (!params_text.empty()) {
        const auto v = parse_list(params_text, 6, "--params");
        const RotParams p = RotParams::from_array({v[0], v[1], v[2], v[3], v[4], v[5]});
        rep.inputs["params"] = to_json(p);
        q = BinaryQuartic::from(p);
        rep.results["singular_polynomial"] = singular_polynomial(p).to_string();
    } else {
        const auto v = parse_list(quartic_text, 5, "--quartic");
        q = BinaryQuartic{v[0], v[1], v[2], v[3], v[4]};
        rep.inputs["quartic"] = to_json(q);
    }
    if (q.is_zero()) throw InputError(kNoWebMessage);

    const RootStructure rs = root_structure(q);
    const WebType type = web_type_of(rs.partition);
    const Invariants inv = invariants(q);
    rep.results["type"] = to_string(type);
    rep.results["root_structure"] = to_json(rs);
    rep.results["invariants"] = to_json(inv);
    const BinaryForm hes = hessian(q.form());
    rep.results["covariants"] = {{"hessian", to_json(hes)},
                                 {"hessian_sign", sign_name(form_sign(hes))},
                                 {"L_sign", sign_name(form_sign(covariant_L(q)))},
                                 {"M_sign", sign_name(form_sign(covariant_M(q)))}};
    Json by_inv;
    try {
        const auto ic = classify_by_invariants(q);
        by_inv = {{"type", to_string(ic.type)},
                  {"strict_order_type", ic.strict_order_type ? Json(to_string(*ic.strict_order_type)) : Json(nullptr)},
                  {"audit", to_json(ic.audit)}};
        if (ic.type != type)
            rep.finding("inconsistency", "invariant decision list gives " + to_string(ic.type) + ", root structure gives " +
                                             to_string(type));
        if (ic.strict_order_type != type)
            rep.finding("note", "reading the decision list strictly in printed order gives " +
                                    (ic.strict_order_type ? to_string(*ic.strict_order_type) : std::string("no type")));
    } catch (const ClassificationError& e) {
        by_inv = {{"type", nullptr}, {"error", e.what()}, {"audit", to_json(e.audit)}};
        rep.finding("inconsistency", e.what());
    }
    rep.results["invariant_classification"] = by_inv;
    rep.results["canonical"] = to_json(canonical_form(q));
    if (probe) {
        Json fp = float_probe(q, rs, inv);
        if (!fp["delta_sign_agrees"].get<bool>() || !fp["real_roots_agree"].get<bool>())
            rep.finding("note", "floating-point probe disagrees with the exact computation");
        rep.results["float_probe"] = std::move(fp);
    }
}

void cmd_tables(Report& rep, const std::vector<std::string>& scales) {
    Rational a = 1, k = Rational(1, 2);
    for (const auto& s : scales) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw InputError("--scale expects name=value, got '" + s + "'");
        const std::string name = s.substr(0, eq);
        const Rational v = parse_rational(s.substr(eq + 1));
        if (name == "a") a = v;
        else if (name == "k") k = v;
        else throw InputError("unknown scale constant '" + name + "'");
    }
    rep.inputs["a"] = to_json(a);
    rep.inputs["k"] = to_json(k);
    const Catalog cat = catalog(a, k);

    Json rows = Json::array();
    int matched = 0;
    for (const auto& r : cat.rows) {
        const BinaryQuartic q = BinaryQuartic::from(r.params);
        const WebType by_roots = classify_by_roots(q);
        Json row{{"name", r.name}, {"params", to_json(r.params)}, {"expected", to_string(r.expected_type)},
                 {"by_roots", to_string(by_roots)}};
        try {
            row["by_invariants"] = to_string(classify_by_invariants(q).type);
        } catch (const ClassificationError& e) {
            row["by_invariants"] = nullptr;
        }
        const bool ok = by_roots == r.expected_type && row["by_invariants"] == row["expected"];
        row["match"] = ok;
        if (r.equivalence_note) row["note"] = *r.equivalence_note;
        if (ok) ++matched;
        else rep.finding("inconsistency", "row " + r.name + " classifies as " + to_string(by_roots));
        rows.push_back(std::move(row));
    }

    Json eqs = Json::array();
    for (const auto& e : cat.equivalences) {
        const auto& from = cat.row(e.web);
        const auto& to = cat.row(e.equivalent_to);
        const bool same_type = classify_by_roots(BinaryQuartic::from(from.params)) ==
                               classify_by_roots(BinaryQuartic::from(to.params));
        Json j{{"web", e.web}, {"equivalent_to", e.equivalent_to}, {"transformation", e.transformation},
               {"type_level", same_type}};
        bool ok = same_type;
        if (e.witness) {
            const bool exact = apply(*e.witness, from.params) == to.params;
            j["witness"] = to_json(*e.witness);
            j["witness_check"] = exact ? "exact" : "failed";
            ok = ok && exact;
        } else {
            // No closed-form element; go through the common canonical form.
            const BinaryQuartic qf = BinaryQuartic::from(from.params), qt = BinaryQuartic::from(to.params);
            const auto cf = canonical_form(qf), ct = canonical_form(qt);
            const GroupElement w = compose(inverse(ct.witness), cf.witness);
            const auto got = apply(w, qf).as_array(), want = qt.as_array();
            double dev = 0, size = 0;
            for (std::size_t i = 0; i < 5; ++i) {
                dev = std::max(dev, std::abs(to_double(got[i] - want[i])));
                size = std::max(size, std::abs(to_double(want[i])));
            }
            const double residual = dev / size;
            j["witness_approx"] = {{"a0", to_double(w.a0)}, {"a1", to_double(w.a1)}, {"a2", to_double(w.a2)},
                                   {"a3", to_double(w.a3)}, {"a4", to_double(w.a4)}, {"discrete", w.discrete}};
            std::ostringstream r;
            r.precision(3);
            r << std::scientific << residual;
            j["witness_check"] = "numeric";
            j["witness_residual"] = r.str();
            ok = ok && residual <= 1e-9;
        }
        j["match"] = ok;
        if (!ok) rep.finding("inconsistency", "equivalence " + e.web + " ~ " + e.equivalent_to + " not confirmed");
        eqs.push_back(std::move(j));
    }
    rep.results["rows"] = std::move(rows);
    rep.results["rows_matched"] = matched;
    rep.results["rows_total"] = cat.rows.size();
    rep.results["equivalences"] = std::move(eqs);
}

void cmd_compat(Report& rep, const std::string& expr, const std::string& energy) {
    const Potential pot{parse_expression(expr), parse_rational(energy)};
    rep.inputs["potential"] = expr;
    rep.inputs["E"] = to_json(pot.E);
    const auto cls = classify_potential(pot);
    rep.results["solution"] = to_json(cls.solution);
    bool closed = true;
    for (const auto& b : cls.solution.basis) closed = closed && is_closed(compatibility_form(b, pot));
    rep.results["basis_verified_closed"] = closed;
    if (!closed) rep.finding("inconsistency", "a returned solution fails the closedness check");
    rep.results["type"] = cls.type ? Json(to_string(*cls.type)) : Json(nullptr);
    rep.results["quartic"] = cls.quartic ? to_json(*cls.quartic) : Json(nullptr);
    rep.results["diagnostics"] = cls.diagnostics;
}

Json tsn_json(const TsnFilter& f) {
    Json basis = Json::array();
    for (const auto& b : f.basis) basis.push_back(to_json(b));
    return {{"dimension", f.dimension}, {"whole_space", f.whole_space}, {"certified", f.certified}, {"basis", basis}};
}

void cmd_symmetry(Report& rep, const std::string& generator, const std::string& h, std::uint64_t seed) {
    const auto which = ckv_from_name(generator);
    if (!which) throw InputError("unknown generator '" + generator + "'");
    SymmetryMode mode;
    if (h == "0") mode = SymmetryMode::HZero;
    else if (h == "const") mode = SymmetryMode::HConstant;
    else throw InputError("--h must be 0 or const");
    rep.inputs["generator"] = generator;
    rep.inputs["h"] = h;
    const VectorField& v = ckv(*which);
    const SymmetryScan scan = symmetry_subspace(v, mode);
    Json spaces = Json::array();
    for (const auto& s : scan.spaces) {
        Json basis = Json::array();
        for (const auto& b : s.basis) basis.push_back(to_json(b));
        spaces.push_back({{"h", to_json(s.h)}, {"dimension", s.basis.size()}, {"basis", basis},
                          {"tsn", tsn_json(tsn_filter(s.basis, v, seed))}});
    }
    rep.results["spaces"] = std::move(spaces);
    if (mode == SymmetryMode::HConstant) {
        Json ints = Json::array();
        for (const auto& s : scan.spaces)
            if (is_integer(s.h)) ints.push_back(to_json(s.h));
        rep.results["integer_eigenvalues"] = std::move(ints);
        rep.results["characteristic_polynomial"] = scan.characteristic_polynomial.to_string("h");
        rep.results["irrational_real_eigenvalues"] = scan.irrational_real_eigenvalues;
        rep.results["nonreal_eigenvalues"] = scan.nonreal_eigenvalues;
    }
}

void cmd_crosscheck(Report& rep, std::uint64_t seed, int per_type) {
    if (per_type <= 0) throw InputError("--per-type must be positive");
    rep.inputs["seed"] = seed;
    rep.inputs["per_type"] = per_type;
    const auto s = crosscheck(seed, per_type);
    Json types = Json::array();
    for (std::size_t i = 0; i < 9; ++i) {
        const auto& t = s.tally[i];
        types.push_back({{"type", to_string(all_web_types[i])},
                         {"generated", t.generated},
                         {"roots_recovered", t.roots_recovered},
                         {"invariants_agree", t.invariants_agree},
                         {"strict_order_agree", t.strict_order_agree}});
    }
    rep.results["types"] = std::move(types);
    rep.results["total"] = s.total();
    rep.results["roots_recovered"] = s.roots_recovered();
    rep.results["invariants_agree"] = s.invariants_agree();
    for (const auto& f : s.findings)
        rep.finding("inconsistency", f.message,
                    {{"generated", to_string(f.generated)}, {"quartic", to_json(f.quartic)}, {"element", to_json(f.element)},
                     {"audit", to_json(f.audit)}});
}

void render_value(std::ostream& out, const std::string& key, const Json& v, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        out << pad << key << ":\n";
        for (const auto& [k, x] : v.items()) render_value(out, k, x, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
        out << pad << key << ":\n";
        for (std::size_t i = 0; i < v.size(); ++i) render_value(out, "[" + std::to_string(i) + "]", v[i], indent + 2);
    } else {
        out << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

void render_tables_matrix(std::ostream& out, const Json& results) {
    out << std::left << std::setw(28) << "row" << std::setw(26) << "expected" << std::setw(26) << "by roots"
        << std::setw(26) << "by invariants"
        << "match\n";
    for (const auto& r : results["rows"]) {
        out << std::setw(28) << r["name"].get<std::string>() << std::setw(26) << r["expected"].get<std::string>()
            << std::setw(26) << r["by_roots"].get<std::string>() << std::setw(26)
            << (r["by_invariants"].is_null() ? std::string("-") : r["by_invariants"].get<std::string>())
            << (r["match"].get<bool>() ? "yes" : "NO") << "\n";
    }
    out << "\n";
    for (const auto& e : results["equivalences"])
        out << e["web"].get<std::string>() << " ~ " << e["equivalent_to"].get<std::string>() << " ("
            << e["transformation"].get<std::string>() << "): type " << (e["type_level"].get<bool>() ? "ok" : "NO")
            << ", witness " << e["witness_check"].get<std::string>() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classification of rotational conformal Killing tensors and their separable webs", "cktweb"};
    app.require_subcommand(1);
    bool json_flag = false, table = false, probe = false;
    app.add_flag("--json", json_flag, "JSON output (default)");
    app.add_flag("--table", table, "Human-readable output");
    app.add_flag("--float-probe", probe, "Compare against floating-point evaluation");

    auto* classify = app.add_subcommand("classify", "Classify six parameters or a binary quartic")->fallthrough();
    std::string params_text, quartic_text;
    classify->add_option("--params", params_text, "M33,L3,H,C33,D3,A33");
    classify->add_option("--quartic", quartic_text, "M33,L3,H,D3,A33");

    auto* tables = app.add_subcommand("tables", "Reproduce the catalog and its equivalences")->fallthrough();
    std::vector<std::string> scales;
    tables->add_option("--scale", scales, "Scale constant, e.g. a=2 or k=1/3");

    auto* compat = app.add_subcommand("compat", "Rotational tensors compatible with a potential")->fallthrough();
    std::string expr, energy = "0";
    compat->add_option("potential", expr, "Potential in x, y, z")->required();
    compat->add_option("--E", energy, "Energy (rational)");

    auto* symmetry = app.add_subcommand("symmetry", "Tensors invariant under a conformal Killing vector")->fallthrough();
    symmetry->set_help_flag("--help", "Print this help message and exit");
    std::string generator, h = "0";
    std::uint64_t seed = 1;
    symmetry->add_option("generator", generator, "X1..X3, R1..R3, D, I1..I3")->required();
    symmetry->add_option("--h", h, "0 or const");
    symmetry->add_option("--seed", seed, "Seed for the randomized normality test");

    auto* cross = app.add_subcommand("crosscheck", "Cross-validate the two classifiers on random orbits")->fallthrough();
    int per_type = 100;
    cross->add_option("--seed", seed, "Random seed");
    cross->add_option("--per-type", per_type, "Instances per web type");

    std::vector<const char*> argv{"cktweb"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    Report rep;
    std::string command;
    const auto start = std::chrono::steady_clock::now();
    try {
        if (classify->parsed()) {
            command = "classify";
            cmd_classify(rep, params_text, quartic_text, probe);
        } else if (tables->parsed()) {
            command = "tables";
            cmd_tables(rep, scales);
        } else if (compat->parsed()) {
            command = "compat";
            cmd_compat(rep, expr, energy);
        } else if (symmetry->parsed()) {
            command = "symmetry";
            cmd_symmetry(rep, generator, h, seed);
        } else {
            command = "crosscheck";
            cmd_crosscheck(rep, seed, per_type);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ClassificationError& e) {
        err << "inconsistency: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInconsistent;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    Json report{{"schema", "cktweb.report/1"},
                {"command", command},
                {"inputs", rep.inputs},
                {"results", rep.results},
                {"findings", rep.findings},
                {"timing", {{"seconds", seconds}}}};
    if (table && !json_flag) {
        out << command << "\n";
        if (command == "tables") render_tables_matrix(out, rep.results);
        else
            for (const auto& [k, v] : rep.results.items()) render_value(out, k, v, 0);
        for (const auto& f : rep.findings)
            out << f["severity"].get<std::string>() << ": " << f["message"].get<std::string>() << "\n";
        out << std::fixed << std::setprecision(3) << "time: " << seconds << " s\n";
    } else {
        out << report.dump(2) << "\n";
    }
    return rep.inconsistent ? kExitInconsistent : kExitOk;
}

}  // namespace cktweb
