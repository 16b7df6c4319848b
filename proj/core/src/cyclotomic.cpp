#include "modkit/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace modkit {

namespace {

struct PrimeBlock {
    i64 p, q, m, idem;
};

std::vector<PrimeBlock> blocks_of(i64 n) {
    std::vector<PrimeBlock> out;
    for (auto [p, e] : factorize(n)) {
        i64 q = ipow(p, e);
        i64 rest = n / q;
        // idempotent: 1 mod q, 0 mod rest
        i64 idem = rest == 1 ? 1 : mod(rest * inv_mod(rest, q), n);
        out.push_back({p, q, q / p, idem});
    }
    return out;
}

void add_term(std::map<i64, Rational>& c, i64 k, const Rational& v) {
    auto [it, inserted] = c.emplace(k, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) c.erase(it);
    } else if (v == 0) {
        c.erase(it);
    }
}

}  // namespace

Cyclotomic::Cyclotomic(const Rational& r) {
    if (r != 0) c_.emplace(0, r);
}

Cyclotomic::Cyclotomic(i64 n, std::map<i64, Rational> raw) : n_(n) {
    if (n <= 0) throw std::domain_error("cyclotomic order must be positive");
    for (auto& [k, v] : raw) {
        if (v != 0) add_term(c_, mod(k, n), v);
    }
    reduce();
}

void Cyclotomic::reduce() {
    for (const auto& b : blocks_of(n_)) {
        std::vector<std::pair<i64, Rational>> bad;
        for (const auto& [k, v] : c_) {
            i64 s = (k % b.q) / b.m;
            if (s == b.p - 1) bad.emplace_back(k, v);
        }
        for (auto& [k, v] : bad) {
            c_.erase(k);
            i64 j = k % b.q;
            i64 r = j % b.m;
            for (i64 s = 0; s <= b.p - 2; ++s) {
                i64 jn = r + s * b.m;
                i64 kn = mod(k + static_cast<i64>((static_cast<i128>(jn - j) * b.idem) % n_), n_);
                add_term(c_, kn, -v);
            }
        }
    }
}

Cyclotomic Cyclotomic::zeta(i64 n, i64 k) {
    return Cyclotomic(n, std::map<i64, Rational>{{mod(k, n), Rational(1)}});
}

Cyclotomic Cyclotomic::from_root(const RootOfUnity& z) {
    i64 n = z.order();
    i64 k = to_i64(z.exponent().get_num());
    return zeta(n, k);
}

bool Cyclotomic::is_rational() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
    return c_.empty() ? Rational(0) : c_.begin()->second;
}

Cyclotomic Cyclotomic::lifted(i64 m) const {
    if (m % n_ != 0) throw std::domain_error("lift order must be a multiple");
    if (m == n_) return *this;
    std::map<i64, Rational> raw;
    i64 f = m / n_;
    for (const auto& [k, v] : c_) raw.emplace(k * f, v);
    return Cyclotomic(m, std::move(raw));
}

Cyclotomic Cyclotomic::galois(i64 u) const {
    std::map<i64, Rational> raw;
    for (const auto& [k, v] : c_) add_term(raw, mod(static_cast<i64>(static_cast<i128>(k) * u % n_), n_), v);
    return Cyclotomic(n_, std::move(raw));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (is_rational()) return Cyclotomic(Rational(1) / rational_value());
    Cyclotomic prod(Rational(1));
    for (i64 u = 2; u < n_; ++u) {
        if (gcd(u, n_) == 1) prod = prod * galois(u);
    }
    Cyclotomic nrm = *this * prod;
    return prod * (Rational(1) / nrm.rational_value());
}

Rational Cyclotomic::norm_sq_if_rational() const { return (*this * conj()).rational_value(); }

std::optional<RootOfUnity> Cyclotomic::as_root_of_unity() const {
    if (c_.empty()) return std::nullopt;
    i64 n = n_ % 2 == 0 ? n_ : 2 * n_;
    for (i64 k = 0; k < n; ++k) {
        if (*this == zeta(n, k)) return RootOfUnity::from_fraction(k, n);
    }
    return std::nullopt;
}

std::complex<double> Cyclotomic::embed() const {
    std::complex<double> z = 0;
    for (const auto& [k, v] : c_) {
        double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_);
        z += v.get_d() * std::complex<double>(std::cos(a), std::sin(a));
    }
    return z;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    i64 m = lcm(n_, o.n_);
    if (m != n_) return lifted(m) + o;
    if (m != o.n_) return *this + o.lifted(m);
    Cyclotomic r = *this;
    for (const auto& [k, v] : o.c_) add_term(r.c_, k, v);
    return r;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& [k, v] : r.c_) v = -v;
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Rational& r) const {
    if (r == 0) return Cyclotomic();
    Cyclotomic out = *this;
    for (auto& [k, v] : out.c_) v *= r;
    return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    i64 m = lcm(n_, o.n_);
    if (m != n_) return lifted(m) * o;
    if (m != o.n_) return *this * o.lifted(m);
    std::map<i64, Rational> raw;
    for (const auto& [k1, v1] : c_) {
        for (const auto& [k2, v2] : o.c_) add_term(raw, (k1 + k2) % m, v1 * v2);
    }
    return Cyclotomic(m, std::move(raw));
}

Cyclotomic Cyclotomic::pow(i64 e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic r(Rational(1)), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (n_ == o.n_) return c_ == o.c_;
    i64 m = lcm(n_, o.n_);
    return lifted(m).c_ == o.lifted(m).c_;
}

std::string Cyclotomic::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : c_) {
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << v.get_str();
        } else {
            os << v.get_str() << "*z" << n_ << "^" << k;
        }
    }
    return os.str();
}

}  // namespace modkit
