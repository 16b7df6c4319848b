#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "modkit/rational.hpp"

namespace modkit {

// Element of Q(zeta_n) stored as rational combination of zeta_n^k over the
// canonical basis {k : (k mod q)/(q/p) <= p-2 for every prime power q || n}.
class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(const Rational& r);  // NOLINT: implicit promotion of rationals
    Cyclotomic(i64 v) : Cyclotomic(Rational(static_cast<long>(v))) {}  // NOLINT

    static Cyclotomic zeta(i64 n, i64 k);
    static Cyclotomic from_root(const RootOfUnity& z);

    i64 order() const { return n_; }
    const std::map<i64, Rational>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_rational() const;
    Rational rational_value() const;  // throws if not rational

    Cyclotomic lifted(i64 m) const;  // requires order() | m
    Cyclotomic conj() const;
    Cyclotomic galois(i64 u) const;  // zeta -> zeta^u, gcd(u, n) = 1
    Cyclotomic inverse() const;      // throws on zero
    Rational norm_sq_if_rational() const;

    std::optional<RootOfUnity> as_root_of_unity() const;
    std::complex<double> embed() const;  // diagnostic only

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Rational& r) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic pow(i64 e) const;

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    std::string to_string() const;

    // Raw constructor; terms are reduced on construction.
    Cyclotomic(i64 n, std::map<i64, Rational> raw);

private:
    void reduce();

    i64 n_ = 1;
    std::map<i64, Rational> c_;
};

}  // namespace modkit
