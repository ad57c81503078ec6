#include "cktweb/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cktweb/expr.hpp"

namespace cktweb {

const CatalogEntry& Catalog::row(const std::string& name) const {
    for (const auto& r : rows)
        if (r.name == name) return r;
    throw DomainError("catalog has no row '" + name + "'");
}

std::string catalog_json_text() {
    if (const char* path = std::getenv("CKTWEB_CATALOG"); path && *path) {
        std::ifstream in(path);
        if (!in) throw ParseError(std::string("cannot read catalog file ") + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return std::string(embedded_catalog_json());
}

Catalog catalog_from_json(std::string_view text, const Rational& a, const Rational& k) {
    if (sign(a) <= 0) throw DomainError("catalog: a must be positive");
    if (sign(k) <= 0 || k >= 1) throw DomainError("catalog: k must lie in (0, 1)");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("catalog: ") + e.what());
    }
    if (doc.value("schema", "") != "cktweb.catalog/1") throw ParseError("catalog: unsupported schema");

    const std::vector<std::string> names{"a", "k"};
    const std::vector<Rational> values{a, k};
    auto value = [&](const nlohmann::json& j) { return parse_constant(j.get<std::string>(), names, values); };

    Catalog c;
    c.a = a;
    c.k = k;
    try {
        for (const auto& r : doc.at("rows")) {
            const auto& p = r.at("params");
            if (p.size() != 6) throw ParseError("catalog: row needs six parameters");
            std::array<Rational, 6> v;
            for (std::size_t i = 0; i < 6; ++i) v[i] = value(p[i]);
            c.rows.push_back({r.at("name").get<std::string>(), RotParams::from_array(v),
                              parse_web_type(r.at("type").get<std::string>()), std::nullopt});
        }
        for (const auto& e : doc.at("equivalences")) {
            CatalogEquivalence q{e.at("web").get<std::string>(), e.at("equivalent_to").get<std::string>(),
                                 e.at("transformation").get<std::string>(), std::nullopt};
            if (e.contains("witness")) {
                const auto& w = e.at("witness");
                GroupElement g{value(w.at("a0")), value(w.at("a1")), value(w.at("a2")), value(w.at("a3")),
                               value(w.at("a4")), w.at("discrete").get<bool>()};
                g.validate();
                q.witness = g;
            }
            c.equivalences.push_back(std::move(q));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("catalog: ") + e.what());
    }
    for (const auto& q : c.equivalences) {
        c.row(q.equivalent_to);
        for (auto& r : c.rows)
            if (r.name == q.web) r.equivalence_note = "equivalent to " + q.equivalent_to + " (" + q.transformation + ")";
    }
    return c;
}

Catalog catalog(const Rational& a, const Rational& k) { return catalog_from_json(catalog_json_text(), a, k); }

}  // namespace cktweb
