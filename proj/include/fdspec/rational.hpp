#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "fdspec/errors.hpp"

namespace fdspec {

using BigInt = mpz_class;

/// Exact rational number over arbitrary-precision integers.
///
/// Always held in canonical form: denominator > 0 and gcd(|num|, den) = 1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

    Rational(const BigInt& numerator, const BigInt& denominator) {
        if (denominator == 0) throw InvalidParameter("rational with zero denominator");
        value_ = mpq_class(numerator, denominator);
        value_.canonicalize();
    }

    static Rational from_mpq(mpq_class q) {
        q.canonicalize();
        Rational r;
        r.value_ = std::move(q);
        return r;
    }

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    const mpq_class& mpq() const noexcept { return value_; }

    int sign() const noexcept { return sgn(value_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const { return from_mpq(::abs(value_)); }
    Rational reciprocal() const {
        if (is_zero()) throw InvalidParameter("reciprocal of zero");
        return from_mpq(1 / value_);
    }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const { return value_.get_str(10); }

    /// Parses "p/q" or "p" (optional leading sign, no decimal point).
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto valid_int = [](std::string_view part, bool allow_sign) {
            if (part.empty()) return false;
            std::size_t i = 0;
            if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
            if (i == part.size()) return false;
            for (; i < part.size(); ++i)
                if (part[i] < '0' || part[i] > '9') return false;
            return true;
        };
        auto slash = s.find('/');
        std::string num = s.substr(0, slash);
        std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (!valid_int(num, true) || !valid_int(den, false))
            throw ParseError("not a fraction: '" + s + "'");
        if (num[0] == '+') num.erase(0, 1);
        BigInt n(num, 10), d(den, 10);
        if (d == 0) throw ParseError("zero denominator in '" + s + "'");
        return Rational(n, d);
    }

    /// Round-to-nearest-even conversion to a binary floating type.
    template <typename T = double>
    T to_floating() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InvalidParameter("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return from_mpq(-a.value_); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

template <typename T>
T Rational::to_floating() const {
    static_assert(std::numeric_limits<T>::is_iec559 || std::numeric_limits<T>::radix == 2);
    constexpr int digits = std::numeric_limits<T>::digits;
    static_assert(digits <= 64, "mantissa must fit an unsigned 64-bit word");
    if (is_zero()) return T(0);

    BigInt a = ::abs(value_.get_num());
    const BigInt& b = value_.get_den();
    const long la = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
    const long lb = static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2));

    // scale so the integer quotient carries digits + 2 or digits + 3 bits
    const long k = digits + 2 - (la - lb);
    BigInt scaled = a;
    BigInt den = b;
    if (k >= 0) mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    else mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));

    BigInt q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    const bool sticky = rem != 0;

    const long extra = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2)) - digits;
    BigInt low;
    mpz_tdiv_r_2exp(low.get_mpz_t(), q.get_mpz_t(), static_cast<mp_bitcnt_t>(extra));
    mpz_tdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), static_cast<mp_bitcnt_t>(extra));

    BigInt half;
    mpz_setbit(half.get_mpz_t(), static_cast<mp_bitcnt_t>(extra - 1));
    const int c = cmp(low, half);
    const bool round_up = c > 0 || (c == 0 && (sticky || mpz_odd_p(q.get_mpz_t())));
    if (round_up) q += 1;

    std::uint64_t mant = 0;
    mpz_export(&mant, nullptr, -1, sizeof(mant), 0, 0, q.get_mpz_t());
    T result = std::ldexp(static_cast<T>(mant), static_cast<int>(extra - k));
    return sign() < 0 ? -result : result;
}

inline Rational pow(const Rational& base, unsigned exponent) {
    // 0^0 = 1
    mpq_class r(1);
    mpq_class b = base.mpq();
    for (unsigned e = 0; e < exponent; ++e) r *= b;
    return Rational::from_mpq(r);
}

inline BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// H_n = 1 + 1/2 + ... + 1/n.
inline Rational harmonic(unsigned n) {
    mpq_class s(0);
    for (unsigned m = 1; m <= n; ++m) s += mpq_class(1, m);
    return Rational::from_mpq(s);
}

} // namespace fdspec
