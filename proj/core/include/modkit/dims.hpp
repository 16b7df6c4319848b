#pragma once

#include <optional>
#include <vector>

#include "modkit/characters.hpp"
#include "modkit/dirichlet.hpp"
#include "modkit/qseries.hpp"

namespace modkit {

// Eigenvalues e(-beta_j) of a finite-order X: sum (1/2 - beta_j).
Rational delta_infinity(const std::vector<RootOfUnity>& eigenvalues);
// delta_infinity - dim / 2n.
Rational delta_order(i64 n, const std::vector<RootOfUnity>& eigenvalues);
// Same quantity from (1/n) sum_{0<j<n} Tr(X^j) / (1 - e(j/n)); requires X^n = 1.
Rational delta_order_by_traces(i64 n, const std::vector<RootOfUnity>& eigenvalues);

struct DimQuery {
    i64 N = 1;
    Rational weight;
    CharacterSpec chi;
    bool cusp = false;
};

// Weight-k Riemann-Roch value for the character on the metaplectic Gamma_0(N), before projecting on Z.
Rational riemann_roch(i64 N, const Rational& k, const CharacterSpec& chi);
// Eisenstein series count: cusp classes on which chi is trivial.
i64 eisenstein_count(const CharacterSpec& chi);
// True iff Z acts as e(-k/2), the only case with nonzero forms.
bool z_compatible(const Rational& k, const CharacterSpec& chi);

// k > 2; throws std::logic_error if the formula is not integral.
i64 dim_modforms(const DimQuery& q);
i64 dim_cuspforms(const DimQuery& q);

struct SerreStarkTheta {
    DirichletCharacter psi;
    i64 t = 1;
    bool cusp = false;  // psi not totally even
    QSeries series(const Rational& precision) const;
    CycloQSeries cyclo_series(const Rational& precision) const;
};

// chi_theta * chi with chi even mod N, 4 | N.
std::vector<SerreStarkTheta> serre_stark_basis(i64 N, const DirichletCharacter& chi);
// The Dirichlet character chi with spec = chi_theta * chi, or nullopt when spec is not of that shape.
std::optional<DirichletCharacter> weight_half_character(const CharacterSpec& spec);

// nullopt: weight 1 outside the override table.
std::optional<i64> dim_any_weight(const DimQuery& q);
std::optional<i64> weight_one_override(const CharacterSpec& chi, bool cusp);

// dim CuspForm(2 - k, conjugate chi), the obstruction space for singular weight k.
std::optional<i64> obstruction_dim(i64 N, const Rational& k, const CharacterSpec& chi);

// Admissible characters (N, e, m): the dual of Gamma_0(N) / Gamma_0^2(N).
std::vector<CharacterSpec> admissible_characters(i64 N);

}  // namespace modkit
