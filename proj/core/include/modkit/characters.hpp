#pragma once

#include <string>

#include "modkit/gamma0.hpp"
#include "modkit/rational.hpp"

namespace modkit {

// chi_theta^e * chi_m on the metaplectic Gamma_0(N); m is kept squarefree.
struct CharacterSpec {
    i64 N = 1;
    int e = 0;
    i64 m = 1;

    CharacterSpec() = default;
    CharacterSpec(i64 level, i64 theta_exponent, i64 quad);

    bool admissible() const;
    bool is_trivial() const { return e == 0 && m == 1; }
    CharacterSpec conjugate() const;
    CharacterSpec operator*(const CharacterSpec& o) const;
    bool operator==(const CharacterSpec& o) const = default;
    std::string to_string() const;
};

RootOfUnity chi_theta(const MetaplecticElement& g);
RootOfUnity chi_eta(const MetaplecticElement& g);
RootOfUnity char_eval(const CharacterSpec& spec, const MetaplecticElement& g);

// Compares values on Z, T and a searched set of elements with c > 0, d > 0.
bool same_character(const CharacterSpec& x, const CharacterSpec& y);

// chi_A from the order, signature mod 8 and level of a discriminant form.
CharacterSpec chi_of_discriminant_form(i64 order, int signature, i64 level);

RootOfUnity char_at_cusp(const CharacterSpec& spec, i64 a, i64 c);
RootOfUnity char_at_elliptic(const CharacterSpec& spec, int nu);

// Character of prod eta(delta tau)^r_delta with the given |A| (any value making the ratio a square).
CharacterSpec eta_quotient_character(i64 N, i64 two_k, i64 order_A);

}  // namespace modkit
