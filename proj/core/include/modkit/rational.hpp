#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "modkit/arith.hpp"

namespace modkit {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(i64 num, i64 den = 1) {
    Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    r.canonicalize();
    return r;
}

Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);
// r - floor(r), in [0, 1).
Rational frac(const Rational& r);
i64 to_i64(const Integer& z);
bool is_integer(const Rational& r);

std::string to_string(const Rational& r);
std::string to_string(const Integer& z);
// Accepts "p", "p/q", "-p/q".
Rational parse_rational(std::string_view s);

// Bernoulli number B_k (B_1 = -1/2); the public contract accepts even k >= 2.
Rational bernoulli(int k);
Rational bernoulli_any(int n);

// e(x) with x taken mod 1.
class RootOfUnity {
public:
    RootOfUnity() = default;
    explicit RootOfUnity(const Rational& x) : x_(frac(x)) {}
    static RootOfUnity from_fraction(i64 num, i64 den) { return RootOfUnity(make_rational(num, den)); }
    static RootOfUnity minus_one() { return from_fraction(1, 2); }

    const Rational& exponent() const { return x_; }
    i64 order() const;
    bool is_one() const { return x_ == 0; }

    RootOfUnity operator*(const RootOfUnity& o) const { return RootOfUnity(x_ + o.x_); }
    RootOfUnity& operator*=(const RootOfUnity& o) { return *this = *this * o; }
    RootOfUnity inverse() const { return RootOfUnity(-x_); }
    RootOfUnity pow(i64 k) const { return RootOfUnity(x_ * Rational(static_cast<long>(k))); }
    bool operator==(const RootOfUnity& o) const { return x_ == o.x_; }
    bool operator!=(const RootOfUnity& o) const { return !(*this == o); }

    // "1", "-1", "i", "-i", else "e(p/q)".
    std::string to_string() const;

private:
    Rational x_{0};
};

}  // namespace modkit
