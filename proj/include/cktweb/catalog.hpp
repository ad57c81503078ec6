#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cktweb/group_action.hpp"
#include "cktweb/quartic.hpp"
#include "cktweb/rotational.hpp"

namespace cktweb {

struct CatalogEntry {
    std::string name;
    RotParams params;
    WebType expected_type;
    std::optional<std::string> equivalence_note;  // "equivalent to X (transformation)"
};

struct CatalogEquivalence {
    std::string web, equivalent_to, transformation;
    std::optional<GroupElement> witness;  // exact, maps web's parameters onto equivalent_to's
};

struct Catalog {
    Rational a, k;
    std::vector<CatalogEntry> rows;
    std::vector<CatalogEquivalence> equivalences;

    const CatalogEntry& row(const std::string& name) const;  // DomainError if absent
};

std::string_view embedded_catalog_json();
// The catalog text: file named by CKTWEB_CATALOG if set, otherwise the copy built into the library.
std::string catalog_json_text();
// Instantiates the scale constants; DomainError outside a > 0, 0 < k < 1. ParseError on malformed data.
Catalog catalog(const Rational& a = 1, const Rational& k = Rational(1, 2));
Catalog catalog_from_json(std::string_view text, const Rational& a, const Rational& k);

}  // namespace cktweb
