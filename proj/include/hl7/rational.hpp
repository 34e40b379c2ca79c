#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace hl7 {

using BigInt = boost::multiprecision::cpp_int;

// Exact signed rational, always reduced, denominator > 0. This is the value
// space behind real numbers, quantity magnitudes and timestamp offsets;
// keeping it exact is what makes canonical unit comparison reliable where
// IEEE-754 is not.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {} // NOLINT(google-explicit-constructor)
    Rational(BigInt n, BigInt d);

    // m * 10^exp, exact for either sign of exp.
    static Rational scaled(BigInt mantissa, int exp10);
    static BigInt pow10(unsigned k);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o); // throws DivideByZero

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational pow_int(int e) const; // throws DivideByZero for 0^negative

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // (mantissa, exp10) with value == mantissa * 10^exp10 and mantissa not
    // divisible by 10; empty when the denominator has a prime factor other
    // than 2 or 5. Zero maps to (0, 0).
    std::optional<std::pair<BigInt, int>> decimal_mantissa() const;

    // Shortest exact decimal when the value is decimal-representable,
    // otherwise rounded half-even to max_frac_digits.
    std::string to_decimal_string(int max_frac_digits) const;

    // "n" or "n/d"; exact, mostly for diagnostics and tests.
    std::string to_fraction_string() const;

    double to_double() const;

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

} // namespace hl7
