#pragma once

#include "hl7/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hl7 {

// Exponents over the seven UCUM base units, in the order
// (m, g, s, rad, K, C, cd).
using DimVector = std::array<int, 7>;

inline constexpr std::array<std::string_view, 7> kBaseUnitNames = {
    "m", "g", "s", "rad", "K", "C", "cd",
};

// "m3", "m-1.g.s-2", ... ; the all-zero vector prints as "1".
std::string dims_to_string(const DimVector& dims);

struct UnitTerm {
    std::string atom;   // atom symbol with brackets, or a digit string factor
    std::string prefix; // empty or an SI prefix symbol
    int exponent = 1;

    friend bool operator==(const UnitTerm&, const UnitTerm&) = default;
};

struct UnitExpr {
    std::string source;
    std::vector<UnitTerm> terms;

    friend bool operator==(const UnitExpr& a, const UnitExpr& b) {
        return a.terms == b.terms;
    }
};

struct Canonical {
    Rational factor = Rational(1);
    DimVector dims{};

    friend bool operator==(const Canonical&, const Canonical&) = default;
};

// Atom catalogue loaded from the tab-separated registry file:
//   <symbol> TAB p TAB <power-of-ten>              prefix row
//   <symbol> TAB y TAB =base:<dim>                 base unit row
//   <symbol> TAB y|n TAB <decimal> TAB <unit>      derived atom row
// '#' starts a comment. Derived definitions may reference atoms declared
// anywhere in the file; expansion must terminate at base units.
class UnitRegistry {
public:
    static UnitRegistry load_file(const std::string& path);
    static UnitRegistry load_string(std::string_view text);

    bool has_atom(std::string_view symbol) const;
    bool atom_is_metric(std::string_view symbol) const;
    const Canonical& atom_canonical(std::string_view symbol) const; // throws UnknownAtom
    const Rational* prefix_factor(std::string_view symbol) const;   // null when unknown

    // Atom symbols in file order (used for deterministic sampling).
    const std::vector<std::string>& atom_symbols() const { return atom_order_; }

private:
    struct AtomInfo {
        bool metric = false;
        Canonical canonical;
    };

    std::unordered_map<std::string, AtomInfo> atoms_;
    std::unordered_map<std::string, Rational> prefixes_;
    std::vector<std::string> atom_order_;
};

UnitExpr unit_parse(std::string_view s, const UnitRegistry& reg);

Canonical canonicalize(const UnitExpr& u, const UnitRegistry& reg);
Canonical canonicalize(std::string_view s, const UnitRegistry& reg);

bool compares_units(const UnitExpr& a, const UnitExpr& b, const UnitRegistry& reg);
bool compares_units(std::string_view a, std::string_view b, const UnitRegistry& reg);

inline std::string unit_print(const UnitExpr& u) { return u.source; }

// Path of the registry shipped with the library: $HL7_REGISTRY if set, else
// the ucum.tsv next to the source tree.
std::string default_registry_path();

} // namespace hl7
