#include "hl7/rational.hpp"

#include "hl7/errors.hpp"

#include <utility>

namespace hl7 {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) {
        throw DivideByZero("rational with zero denominator");
    }
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

BigInt Rational::pow10(unsigned k) {
    return mp::pow(BigInt(10), k);
}

Rational Rational::scaled(BigInt mantissa, int exp10) {
    if (exp10 >= 0) {
        return Rational(mantissa * pow10(static_cast<unsigned>(exp10)), 1);
    }
    return Rational(std::move(mantissa), pow10(static_cast<unsigned>(-exp10)));
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) {
        throw DivideByZero("division by zero rational");
    }
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

Rational Rational::pow_int(int e) const {
    if (e == 0) {
        return Rational(1);
    }
    const unsigned mag = static_cast<unsigned>(e < 0 ? -(long long)e : e);
    BigInt n = mp::pow(num_, mag);
    BigInt d = mp::pow(den_, mag);
    if (e < 0) {
        if (num_ == 0) {
            throw DivideByZero("zero raised to a negative power");
        }
        return Rational(std::move(d), std::move(n));
    }
    return Rational(std::move(n), std::move(d));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::optional<std::pair<BigInt, int>> Rational::decimal_mantissa() const {
    if (num_ == 0) {
        return std::make_pair(BigInt(0), 0);
    }
    int twos = 0;
    int fives = 0;
    BigInt d = den_;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) {
        return std::nullopt;
    }
    // num/den = num * 2^(k-twos) * 5^(k-fives) / 10^k with k = max(twos,fives)
    const int k = twos > fives ? twos : fives;
    BigInt mant = num_ * mp::pow(BigInt(2), static_cast<unsigned>(k - twos)) *
                  mp::pow(BigInt(5), static_cast<unsigned>(k - fives));
    int exp = -k;
    while (mant % 10 == 0) {
        mant /= 10;
        ++exp;
    }
    return std::make_pair(std::move(mant), exp);
}

namespace {

std::string render_scaled(const BigInt& mantissa, int frac_digits) {
    BigInt mag = mantissa < 0 ? BigInt(-mantissa) : mantissa;
    std::string digits = mag.str();
    std::string out;
    if (mantissa < 0) {
        out.push_back('-');
    }
    if (frac_digits <= 0) {
        out += digits;
        out.append(static_cast<std::size_t>(-frac_digits), '0');
        return out;
    }
    if (digits.size() <= static_cast<std::size_t>(frac_digits)) {
        out += "0.";
        out.append(static_cast<std::size_t>(frac_digits) - digits.size(), '0');
        out += digits;
    } else {
        out += digits.substr(0, digits.size() - static_cast<std::size_t>(frac_digits));
        out.push_back('.');
        out += digits.substr(digits.size() - static_cast<std::size_t>(frac_digits));
    }
    // drop trailing fraction zeros
    while (out.back() == '0') {
        out.pop_back();
    }
    if (out.back() == '.') {
        out.pop_back();
    }
    return out;
}

} // namespace

std::string Rational::to_decimal_string(int max_frac_digits) const {
    if (auto dm = decimal_mantissa()) {
        return render_scaled(dm->first, -dm->second);
    }
    // Round half to even at max_frac_digits.
    const bool neg = num_ < 0;
    BigInt n = (neg ? BigInt(-num_) : num_) * pow10(static_cast<unsigned>(max_frac_digits));
    BigInt q = n / den_;
    BigInt r = n % den_;
    const BigInt twice = r * 2;
    if (twice > den_ || (twice == den_ && (q % 2) != 0)) {
        ++q;
    }
    if (neg) {
        q = -q;
    }
    return render_scaled(q, max_frac_digits);
}

std::string Rational::to_fraction_string() const {
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

double Rational::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

} // namespace hl7
