#pragma once

#include <map>
#include <string>
#include <vector>

#include "modkit/characters.hpp"
#include "modkit/cyclotomic.hpp"
#include "modkit/qseries.hpp"

namespace modkit {

// prod_{delta | N} eta(delta tau)^{r_delta}; zero exponents are dropped.
struct EtaQuotient {
    i64 N = 1;
    std::map<i64, i64> r;

    EtaQuotient() = default;
    EtaQuotient(i64 level, std::map<i64, i64> exponents);

    // "1:-2,2:5,4:-2" or "1^{-2}2^{5}4^{-2}".
    static EtaQuotient parse(i64 level, const std::string& text);
    std::string to_string() const;
    std::string exponent_string() const;

    i64 exponent(i64 delta) const;
    // Exponents over divisors(N) in increasing order.
    std::vector<i64> vector() const;
    bool is_constant() const { return r.empty(); }
    bool admissible() const;
    i64 two_weight() const;
    Rational weight() const { return make_rational(two_weight(), 2); }

    EtaQuotient operator*(const EtaQuotient& o) const;
    EtaQuotient inverse() const;
    bool operator==(const EtaQuotient&) const = default;
    bool operator<(const EtaQuotient& o) const;
};

struct WeightCharacter {
    Rational weight;
    CharacterSpec chi;
};

// Smallest positive |A| with |A| / prod delta^{r_delta} a rational square.
i64 etaq_minimal_order(const EtaQuotient& e);
WeightCharacter etaq_weight_char(const EtaQuotient& e, i64 order_A);
WeightCharacter etaq_weight_char(const EtaQuotient& e);

// sum_t r_t (t, c)^2 / 24t.
Rational etaq_order_raw(const EtaQuotient& e, i64 c);
// Order in the local parameter q_h, h the width of a/c.
Rational etaq_order_at_cusp(const EtaQuotient& e, i64 c);

// e(phase) tau^{tau_power} sqrt(radicand).
struct EtaPrefactor {
    Rational tau_power;
    RootOfUnity phase;
    Rational radicand = 1;

    Cyclotomic constant() const;
    std::string to_string() const;
    EtaPrefactor operator*(const EtaPrefactor& o) const {
        return {tau_power + o.tau_power, phase * o.phase, radicand * o.radicand};
    }
    bool operator==(const EtaPrefactor&) const = default;
};

struct CuspExpansion {
    EtaPrefactor prefactor;
    QSeries series;
};

QSeries etaq_expand_infinity(const EtaQuotient& e, const Rational& precision);
// f(-1/tau) = prefactor * series, series = prod eta(tau/delta)^{r_delta} in q^{1/N}.
CuspExpansion etaq_expand_zero(const EtaQuotient& e, const Rational& precision);
// f(-1/(N tau)) = prefactor * f'(tau) with f' the quotient r'_{N/delta} = r_delta.
std::pair<EtaPrefactor, EtaQuotient> etaq_fricke(const EtaQuotient& e);

// Admissible non-constant quotients of level N with every cusp order in [0, max_order]
// (or [-max_order, max_order] when poles are allowed), sorted by exponent vector.
std::vector<EtaQuotient> classify_bounded(i64 N, const Rational& max_order, bool require_holomorphic = true);

}  // namespace modkit
