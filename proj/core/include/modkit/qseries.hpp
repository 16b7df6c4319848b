#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "modkit/cyclotomic.hpp"
#include "modkit/dirichlet.hpp"

namespace modkit {

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const Cyclotomic& c) { return c.is_zero(); }
inline std::string coeff_string(const Rational& c) { return c.get_str(); }
inline std::string coeff_string(const Cyclotomic& c) { return c.to_string(); }

// Sum of c_k q^{k/d}, known exactly for exponents below the precision (nullopt: exact).
template <class C>
class BasicQSeries {
public:
    using Prec = std::optional<Rational>;

    BasicQSeries() = default;
    explicit BasicQSeries(i64 denominator, Prec precision = std::nullopt) : d_(denominator), prec_(precision) {
        if (d_ <= 0) throw std::invalid_argument("exponent denominator must be positive");
    }

    static BasicQSeries monomial(const Rational& exponent, const C& coeff, Prec precision = std::nullopt) {
        i64 d = to_i64(exponent.get_den());
        BasicQSeries s(d, precision);
        s.set(to_i64(exponent.get_num()), coeff);
        return s;
    }
    static BasicQSeries constant(const C& c, Prec precision = std::nullopt) {
        return monomial(Rational(0), c, precision);
    }

    i64 denominator() const { return d_; }
    const Prec& precision() const { return prec_; }
    const std::map<i64, C>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    Rational exponent_of(i64 k) const { return make_rational(k, d_); }

    // Lowest exponent with nonzero coefficient.
    std::optional<Rational> valuation() const {
        if (t_.empty()) return std::nullopt;
        return exponent_of(t_.begin()->first);
    }

    C coefficient(const Rational& e) const {
        if (prec_ && e >= *prec_) throw std::out_of_range("coefficient beyond precision");
        Rational k = e * Rational(static_cast<long>(d_));
        if (!is_integer(k)) return C();
        auto it = t_.find(to_i64(k.get_num()));
        return it == t_.end() ? C() : it->second;
    }
    C coefficient(i64 e) const { return coefficient(Rational(static_cast<long>(e))); }

    // Inserts a term; ignored if at or beyond precision.
    void set(i64 k, const C& c) {
        if (prec_ && exponent_of(k) >= *prec_) return;
        if (coeff_is_zero(c)) {
            t_.erase(k);
        } else {
            t_[k] = c;
        }
    }
    void add_term(i64 k, const C& c) {
        if (prec_ && exponent_of(k) >= *prec_) return;
        auto it = t_.find(k);
        if (it == t_.end()) {
            if (!coeff_is_zero(c)) t_.emplace(k, c);
            return;
        }
        it->second += c;
        if (coeff_is_zero(it->second)) t_.erase(it);
    }

    BasicQSeries with_denominator(i64 d) const {
        if (d % d_ != 0) throw std::invalid_argument("denominator must be a multiple");
        BasicQSeries r(d, prec_);
        for (const auto& [k, c] : t_) r.t_.emplace(k * (d / d_), c);
        return r;
    }

    BasicQSeries truncated(const Rational& p) const {
        Prec np = prec_ ? std::min(*prec_, p) : Prec(p);
        BasicQSeries r(d_, np);
        for (const auto& [k, c] : t_) r.set(k, c);
        return r;
    }

    BasicQSeries operator+(const BasicQSeries& o) const {
        i64 d = lcm(d_, o.d_);
        if (d != d_) return with_denominator(d) + o;
        if (d != o.d_) return *this + o.with_denominator(d);
        BasicQSeries r(d, min_prec(prec_, o.prec_));
        for (const auto& [k, c] : t_) r.add_term(k, c);
        for (const auto& [k, c] : o.t_) r.add_term(k, c);
        return r;
    }
    BasicQSeries operator-() const {
        BasicQSeries r = *this;
        for (auto& [k, c] : r.t_) c = -c;
        return r;
    }
    BasicQSeries operator-(const BasicQSeries& o) const { return *this + (-o); }
    BasicQSeries scaled(const C& s) const {
        BasicQSeries r(d_, prec_);
        for (const auto& [k, c] : t_) r.set(k, c * s);
        return r;
    }

    BasicQSeries operator*(const BasicQSeries& o) const {
        i64 d = lcm(d_, o.d_);
        if (d != d_) return with_denominator(d) * o;
        if (d != o.d_) return *this * o.with_denominator(d);
        Prec np;
        auto lead = [](const BasicQSeries& s) -> Prec {
            if (!s.t_.empty()) return s.exponent_of(s.t_.begin()->first);
            return s.prec_;
        };
        Prec v1 = lead(*this), v2 = lead(o);
        if (t_.empty() && !prec_) return BasicQSeries(d);
        if (o.t_.empty() && !o.prec_) return BasicQSeries(d);
        if (o.prec_) np = *v1 + *o.prec_;
        if (prec_) np = min_prec(np, *v2 + *prec_);
        BasicQSeries r(d, np);
        std::optional<i64> kmax;
        if (np) kmax = to_i64(ceil_of(*np * Rational(static_cast<long>(d))));
        for (const auto& [k1, c1] : t_) {
            for (const auto& [k2, c2] : o.t_) {
                if (kmax && k1 + k2 >= *kmax) break;
                r.add_term(k1 + k2, c1 * c2);
            }
        }
        return r;
    }
    BasicQSeries& operator+=(const BasicQSeries& o) { return *this = *this + o; }
    BasicQSeries& operator-=(const BasicQSeries& o) { return *this = *this - o; }
    BasicQSeries& operator*=(const BasicQSeries& o) { return *this = *this * o; }

    BasicQSeries inverse() const {
        if (t_.empty()) throw std::domain_error("qs_invert: no nonzero term below precision");
        i64 v = t_.begin()->first;
        C c0 = t_.begin()->second;
        C c0inv = invert_coeff(c0);
        Prec np;
        if (prec_) np = *prec_ - Rational(2) * exponent_of(v);
        BasicQSeries r(d_, np);
        // relative series g = f / (c0 q^v) - 1, solved term by term
        std::optional<i64> kmax;
        if (np) kmax = to_i64(ceil_of(*np * Rational(static_cast<long>(d_))));
        if (!kmax) throw std::domain_error("qs_invert of an exact series needs a precision");
        std::map<i64, C> b;  // inverse of the normalized series, offsets >= 0
        i64 span = *kmax + v;
        for (i64 j = 0; j < span; ++j) {
            C s = j == 0 ? C(Rational(1)) : C();
            for (const auto& [k, c] : t_) {
                i64 off = k - v;
                if (off == 0) continue;
                if (off > j) break;
                auto it = b.find(j - off);
                if (it != b.end()) s -= c * c0inv * it->second;
            }
            if (!coeff_is_zero(s)) b.emplace(j, s);
        }
        for (const auto& [j, c] : b) r.set(j - v, c * c0inv);
        return r;
    }

    BasicQSeries pow(i64 e) const {
        if (e < 0) return inverse().pow(-e);
        BasicQSeries r = constant(C(Rational(1)));
        r = r.with_denominator(d_);
        BasicQSeries b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    // q -> q^t (tau -> t tau).
    BasicQSeries scale_exponent(const Rational& t) const {
        if (t <= 0) throw std::invalid_argument("scale must be positive");
        i64 a = to_i64(t.get_num()), b = to_i64(t.get_den());
        Prec np;
        if (prec_) np = *prec_ * t;
        BasicQSeries r(d_ * b, np);
        for (const auto& [k, c] : t_) r.set(k * a, c);
        r.normalize_denominator();
        return r;
    }

    // Reduce the exponent denominator as far as the stored terms allow.
    void normalize_denominator() {
        i64 g = d_;
        for (const auto& [k, c] : t_) g = gcd(g, k);
        if (g <= 1) return;
        std::map<i64, C> nt;
        for (auto& [k, c] : t_) nt.emplace(k / g, c);
        t_ = std::move(nt);
        d_ /= g;
    }

    bool operator==(const BasicQSeries& o) const {
        i64 d = lcm(d_, o.d_);
        auto a = with_denominator(d), b = o.with_denominator(d);
        return a.prec_ == b.prec_ && a.t_ == b.t_;
    }

    // Agreement of all coefficients below min precision.
    bool agrees_with(const BasicQSeries& o) const {
        BasicQSeries diff = *this - o;
        return diff.is_zero();
    }

    std::string to_string(std::size_t max_terms = 12) const {
        std::ostringstream os;
        std::size_t n = 0;
        for (const auto& [k, c] : t_) {
            if (n++ == max_terms) {
                os << " + ...";
                break;
            }
            if (n > 1) os << " + ";
            os << "(" << coeff_string(c) << ")";
            if (k != 0) os << "q^" << exponent_of(k).get_str();
        }
        if (t_.empty()) os << "0";
        if (prec_) os << " + O(q^" << prec_->get_str() << ")";
        return os.str();
    }

private:
    static Prec min_prec(const Prec& a, const Prec& b) {
        if (!a) return b;
        if (!b) return a;
        return std::min(*a, *b);
    }
    static Rational invert_coeff(const Rational& c) { return Rational(1) / c; }
    static Cyclotomic invert_coeff(const Cyclotomic& c) { return c.inverse(); }

    i64 d_ = 1;
    std::map<i64, C> t_;
    Prec prec_;
};

using QSeries = BasicQSeries<Rational>;
using CycloQSeries = BasicQSeries<Cyclotomic>;

CycloQSeries to_cyclo(const QSeries& s);
// Throws if a coefficient is irrational.
QSeries to_rational(const CycloQSeries& s);

std::string qseries_to_json(const QSeries& s);
QSeries qseries_from_json(const std::string& text);

// q^{t/24} prod_{n>=1} (1 - q^{tn}), exponents below `precision`.
QSeries eta_series(i64 t, const Rational& precision);
// prod_delta eta(delta tau)^{r_delta}.
QSeries eta_product(const std::map<i64, i64>& exponents, const Rational& precision);

QSeries eisenstein_level1(int k, const Rational& precision);
CycloQSeries eisenstein_chi(int k, const DirichletCharacter& chi, const Rational& precision);
CycloQSeries eisenstein_weight1(const DirichletCharacter& chi, const Rational& precision);

// Rational symmetric positive definite matrix given row-major.
struct GramMatrix {
    int n = 0;
    std::vector<Rational> g;

    const Rational& at(int i, int j) const { return g[static_cast<std::size_t>(i) * n + j]; }
    static GramMatrix from_int(int n, const std::vector<i64>& entries);
    bool is_integral_even() const;
    bool is_positive_definite() const;
    Rational determinant() const;
    GramMatrix inverse() const;
    GramMatrix scaled(const Rational& s) const;
};

GramMatrix gram_A(int n);
GramMatrix gram_D(int n);

// theta_L = sum_{lambda} q^{lambda^2/2} for exponents below `precision`.
QSeries lattice_theta(const GramMatrix& g, const Rational& precision);

}  // namespace modkit
