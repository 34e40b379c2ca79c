#pragma once

#include "hl7/nullflavor.hpp"
#include "hl7/rational.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace hl7 {

// REAL: an exact rational plus the significant-digit count of the source
// literal. Precision is display metadata; arithmetic does not propagate it.
struct Real {
    std::optional<NullFlavor> flavor;
    Rational value;
    std::optional<int> precision;

    static Real of(Rational v) { return Real{std::nullopt, std::move(v), std::nullopt}; }
    static Real flavored(NullFlavor nf) { return Real{nf, Rational(), std::nullopt}; }

    bool is_null() const { return flavor.has_value(); }
};

// Decimal literal -> (exact value, significant digits). Grammar:
// [+-]? digits ['.' digits] [eE [+-]? digits].
std::pair<Rational, int> parse_decimal(std::string_view literal);

// Accepts a decimal literal or a nullflavor token.
Real real_parse(std::string_view literal);

// Shortest exact decimal (scientific when needed to honor the stored
// precision), or half-even rounding to max_frac_digits for values whose
// denominator is not a product of twos and fives.
std::string real_print(const Real& r, int max_frac_digits = 20);

} // namespace hl7
