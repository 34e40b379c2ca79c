#include "hl7/real.hpp"

#include "hl7/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace hl7 {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

std::pair<Rational, int> parse_decimal(std::string_view literal) {
    std::string_view s = literal;
    if (s.empty()) {
        throw ParseError("empty numeric literal");
    }
    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    int exp = 0;
    if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
        std::string_view etext = s.substr(epos + 1);
        s = s.substr(0, epos);
        bool eneg = false;
        if (!etext.empty() && (etext.front() == '+' || etext.front() == '-')) {
            eneg = etext.front() == '-';
            etext.remove_prefix(1);
        }
        if (!all_digits(etext) || etext.size() > 4) {
            throw ParseError("malformed exponent in '" + std::string(literal) + "'");
        }
        exp = std::atoi(std::string(etext).c_str());
        if (eneg) {
            exp = -exp;
        }
    }
    std::string_view intpart = s;
    std::string_view fracpart;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        intpart = s.substr(0, dot);
        fracpart = s.substr(dot + 1);
        if (fracpart.empty()) {
            throw ParseError("missing fraction digits in '" + std::string(literal) + "'");
        }
        if (!all_digits(fracpart)) {
            throw ParseError("malformed fraction in '" + std::string(literal) + "'");
        }
    }
    if (!all_digits(intpart)) {
        throw ParseError("malformed numeric literal '" + std::string(literal) + "'");
    }

    std::string digits;
    digits.reserve(intpart.size() + fracpart.size());
    digits.append(intpart);
    digits.append(fracpart);
    // cpp_int reads a leading 0 as an octal prefix; feed it trimmed digits.
    const std::size_t nz = digits.find_first_not_of('0');
    BigInt mant(nz == std::string::npos ? "0" : digits.substr(nz));
    if (neg) {
        mant = -mant;
    }
    Rational value = Rational::scaled(std::move(mant), exp - static_cast<int>(fracpart.size()));

    // Significant digits: from the first nonzero digit onward, trailing
    // zeros included. A literal with no nonzero digit counts as 1.
    std::size_t first = digits.find_first_not_of('0');
    int precision = first == std::string::npos
                        ? 1
                        : static_cast<int>(digits.size() - first);
    return {std::move(value), precision};
}

Real real_parse(std::string_view literal) {
    try {
        auto [value, precision] = parse_decimal(literal);
        return Real{std::nullopt, std::move(value), precision};
    } catch (const ParseError&) {
        // fall through to nullflavor tokens
    }
    try {
        return Real::flavored(parse_nullflavor(literal));
    } catch (const UnknownNullFlavor&) {
        throw ParseError("malformed real literal '" + std::string(literal) + "'");
    }
}

std::string real_print(const Real& r, int max_frac_digits) {
    if (r.is_null()) {
        return std::string(nf_token(*r.flavor));
    }
    auto dm = r.value.decimal_mantissa();
    if (!dm) {
        return r.value.to_decimal_string(max_frac_digits);
    }
    auto [mant, exp] = *dm;
    if (mant == 0) {
        return "0";
    }
    std::string digits = (mant < 0 ? BigInt(-mant) : mant).str();
    // Pad to the recorded significant-digit count so a literal like "2.50"
    // survives a print/parse cycle.
    if (r.precision && *r.precision > static_cast<int>(digits.size())) {
        const int pad = *r.precision - static_cast<int>(digits.size());
        digits.append(static_cast<std::size_t>(pad), '0');
        exp -= pad;
    }
    std::string out;
    if (mant < 0) {
        out.push_back('-');
    }
    if (exp > 0) {
        // Plain rendering would append non-significant zeros; use scientific
        // form with the significant digits as mantissa.
        out += digits.substr(0, 1);
        if (digits.size() > 1) {
            out.push_back('.');
            out += digits.substr(1);
        }
        out += "e";
        out += std::to_string(exp + static_cast<int>(digits.size()) - 1);
        return out;
    }
    const int frac = -exp;
    if (static_cast<std::size_t>(frac) >= digits.size()) {
        out += "0.";
        out.append(static_cast<std::size_t>(frac) - digits.size(), '0');
        out += digits;
    } else {
        out += digits.substr(0, digits.size() - static_cast<std::size_t>(frac));
        if (frac > 0) {
            out.push_back('.');
            out += digits.substr(digits.size() - static_cast<std::size_t>(frac));
        }
    }
    return out;
}

} // namespace hl7
