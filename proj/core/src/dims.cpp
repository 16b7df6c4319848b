#include "modkit/dims.hpp"

#include <map>
#include <stdexcept>

#include "modkit/arith.hpp"
#include "modkit/gamma0.hpp"

namespace modkit {

namespace {

// beta in [0, 1) with z = e(-beta).
Rational beta_of(const RootOfUnity& z) { return frac(-z.exponent()); }

}  // namespace

Rational delta_infinity(const std::vector<RootOfUnity>& eigenvalues) {
    Rational s = 0;
    for (const auto& z : eigenvalues) s += make_rational(1, 2) - beta_of(z);
    return s;
}

Rational delta_order(i64 n, const std::vector<RootOfUnity>& eigenvalues) {
    return delta_infinity(eigenvalues) - make_rational(static_cast<i64>(eigenvalues.size()), 2 * n);
}

Rational delta_order_by_traces(i64 n, const std::vector<RootOfUnity>& eigenvalues) {
    Cyclotomic s;
    for (i64 j = 1; j < n; ++j) {
        Cyclotomic tr;
        for (const auto& z : eigenvalues) {
            if (!is_integer(z.exponent() * Rational(static_cast<long>(n)))) throw std::invalid_argument("eigenvalue order does not divide n");
            tr += Cyclotomic::from_root(z.pow(j));
        }
        s += tr / (Cyclotomic(1) - Cyclotomic::zeta(n, j));
    }
    return s.rational_value() / Rational(static_cast<long>(n));
}

bool z_compatible(const Rational& k, const CharacterSpec& chi) {
    return char_eval(chi, mp_Z()) == RootOfUnity(-k / 2);
}

Rational riemann_roch(i64 N, const Rational& k, const CharacterSpec& chi) {
    if (chi.N != N) throw std::invalid_argument("character level mismatch");
    if (!chi.admissible()) throw std::invalid_argument("inadmissible character " + chi.to_string());
    const auto data = gamma0_data(N);
    const i64 cusps = static_cast<i64>(data.cusps.size());
    Rational area = Rational(static_cast<long>(2 * data.genus - 2 + cusps)) + make_rational(data.nu2, 2) + make_rational(2 * data.nu3, 3);
    Rational v = (k - 1) * area / 2;
    for (const auto& R : elliptic_elements(N, 2)) v += delta_order(2, {RootOfUnity(k / 4) * char_eval(chi, R)});
    for (const auto& R : elliptic_elements(N, 3)) v += delta_order(3, {RootOfUnity(k / 6) * char_eval(chi, R)});
    for (const auto& c : data.cusps) v += delta_infinity({char_at_cusp(chi, c.a, c.c)});
    return v;
}

i64 eisenstein_count(const CharacterSpec& chi) {
    i64 n = 0;
    for (const auto& c : cusp_representatives(chi.N))
        if (char_at_cusp(chi, c.a, c.c) == RootOfUnity()) ++n;
    return n;
}

namespace {

i64 check_half_weight(const DimQuery& q) {
    Rational twice = q.weight * 2;
    if (!is_integer(twice)) throw std::invalid_argument("weight must be a half-integer");
    i64 tk = to_i64(twice.get_num());
    if (mod(tk, 2) != 0 && q.N % 4 != 0) throw std::invalid_argument("half-integral weight needs 4 | N");
    return tk;
}

// (1/4) sum_j e(jk/2) chi(Z)^j psi(1).
i64 project_on_z(const Rational& value, const Rational& k, const CharacterSpec& chi) {
    Cyclotomic avg;
    const RootOfUnity z = char_eval(chi, mp_Z());
    for (int j = 0; j < 4; ++j) avg += Cyclotomic::from_root(RootOfUnity(k * j / 2) * z.pow(j));
    Rational r = avg.rational_value() * value / 4;
    if (!is_integer(r)) throw std::logic_error("non-integral dimension " + to_string(r) + " for " + chi.to_string() + " weight " + to_string(k));
    return to_i64(r.get_num());
}

}  // namespace

i64 dim_modforms(const DimQuery& q) {
    check_half_weight(q);
    if (q.weight <= 2) throw std::domain_error("dim_modforms needs weight > 2");
    return project_on_z(riemann_roch(q.N, q.weight, q.chi), q.weight, q.chi);
}

i64 dim_cuspforms(const DimQuery& q) {
    i64 m = dim_modforms(q);
    if (m == 0) return 0;
    return m - eisenstein_count(q.chi);
}

QSeries SerreStarkTheta::series(const Rational& precision) const { return to_rational(cyclo_series(precision)); }

CycloQSeries SerreStarkTheta::cyclo_series(const Rational& precision) const {
    CycloQSeries s(1, precision);
    if (psi.modulus() == 1) s.set(0, Cyclotomic(1));
    for (i64 n = 1; Rational(static_cast<long>(t * n * n)) < precision; ++n) {
        auto v = psi.value(n);
        if (v) s.add_term(t * n * n, Cyclotomic::from_root(*v) * Rational(2));
    }
    return s;
}

namespace {

// Discriminant of Q(sqrt t).
i64 field_discriminant(i64 t) {
    i64 d = squarefree_part(t);
    return mod(d, 4) == 1 ? d : 4 * d;
}

bool totally_even(const DirichletCharacter& psi) {
    const i64 r = psi.modulus();
    for (auto [p, a] : factorize(r)) {
        i64 q = ipow(p, a), rest = r / q;
        // n = -1 mod q, 1 mod rest
        i64 n = mod(-1, q);
        if (rest > 1) {
            i64 x, y;
            ext_gcd(q, rest, x, y);
            n = mod(-1 * rest * y + 1 * q * x, r);
        }
        if (psi.value(n) != RootOfUnity()) return false;
    }
    return true;
}

}  // namespace

std::vector<SerreStarkTheta> serre_stark_basis(i64 N, const DirichletCharacter& chi) {
    if (N % 4 != 0) throw std::domain_error("weight 1/2 forms need 4 | N");
    if (chi.modulus() != N) throw std::invalid_argument("character modulus must be N");
    if (!chi.is_even()) return {};
    std::vector<SerreStarkTheta> out;
    for (i64 r = 1; 4 * r * r <= N; ++r) {
        if (N % (4 * r * r) != 0) continue;
        for (i64 t = 1; 4 * r * r * t <= N; ++t) {
            if (N % (4 * r * r * t) != 0) continue;
            const i64 D = field_discriminant(t);
            for (const auto& psi : dirichlet_characters(r)) {
                if (psi.conductor() != r || !psi.is_even()) continue;
                bool match = true;
                for (i64 n = 1; n < N && match; ++n) {
                    if (gcd(n, N) != 1) continue;
                    RootOfUnity want = *psi.value(n) * (kronecker(D, n) < 0 ? RootOfUnity::minus_one() : RootOfUnity());
                    match = chi.value(n) == want;
                }
                if (match) out.push_back({psi, t, !totally_even(psi)});
            }
        }
    }
    return out;
}

std::optional<DirichletCharacter> weight_half_character(const CharacterSpec& spec) {
    if (spec.N % 4 != 0 || mod(spec.e, 2) == 0) return std::nullopt;
    const int twist = mod(spec.e, 4) == 3 ? 1 : 0;
    return DirichletCharacter::from_function(spec.N, [&](i64 d) -> std::optional<RootOfUnity> {
        if (gcd(d, spec.N) != 1) return std::nullopt;
        int v = kronecker(d, spec.m);
        if (twist) v *= kronecker(-4, d);
        return v < 0 ? RootOfUnity::minus_one() : RootOfUnity();
    });
}

namespace {

// dim M_{1/2} or S_{1/2}; zero unless chi = chi_theta * (even Dirichlet character).
i64 weight_half_dim(const CharacterSpec& spec, bool cusp) {
    auto chi = weight_half_character(spec);
    if (!chi) return 0;
    i64 n = 0;
    for (const auto& b : serre_stark_basis(spec.N, *chi))
        if (!cusp || b.cusp) ++n;
    return n;
}

struct OverrideKey {
    i64 N, e, m;
    bool operator<(const OverrideKey& o) const { return std::tie(N, e, m) < std::tie(o.N, o.e, o.m); }
};

// Weight 1 dimensions read off explicit generator lists and Hilbert series.
const std::map<OverrideKey, i64>& weight_one_table() {
    static const std::map<OverrideKey, i64> t = {
        {{3, 0, 3}, 1},  {{4, 2, 1}, 1},  {{6, 0, 3}, 2},  {{7, 0, 7}, 1},  {{8, 2, 1}, 2},  {{8, 2, 2}, 1},
        {{9, 0, 3}, 2},  {{11, 0, 11}, 1}, {{12, 0, 3}, 3}, {{12, 2, 1}, 2}, {{14, 0, 7}, 2},
        {{15, 0, 3}, 2}, {{16, 2, 1}, 3}, {{16, 2, 2}, 2}, {{18, 0, 3}, 4}, {{23, 0, 23}, 2},
    };
    return t;
}

// Levels whose odd characters are all covered above (characters missing from the table have dimension 0).
bool weight_one_level_complete(i64 N) {
    switch (N) {
    case 1: case 2: case 3: case 4: case 5: case 6: case 7: case 8: case 9: case 10:
    case 11: case 12: case 13: case 14: case 16: case 17: case 18: case 23:
        return true;
    default:
        return false;
    }
}

}  // namespace

std::optional<i64> weight_one_override(const CharacterSpec& chi, bool cusp) {
    if (!z_compatible(1, chi)) return 0;
    if (cusp) {
        // The first weight 1 cusp form appears at level 23.
        if (chi.N < 23) return 0;
        if (chi == CharacterSpec(23, 0, 23)) return 1;
        return std::nullopt;
    }
    auto it = weight_one_table().find({chi.N, chi.e, chi.m});
    if (it != weight_one_table().end()) return it->second;
    if (weight_one_level_complete(chi.N)) return 0;
    return std::nullopt;
}

std::optional<i64> dim_any_weight(const DimQuery& q) {
    const i64 tk = check_half_weight(q);
    if (!q.chi.admissible() || q.chi.N != q.N) throw std::invalid_argument("character does not match the level");
    if (tk < 0) return 0;
    if (tk == 0) return q.cusp ? 0 : (q.chi.is_trivial() ? 1 : 0);
    if (!z_compatible(q.weight, q.chi)) return 0;
    if (tk == 1) return weight_half_dim(q.chi, q.cusp);
    if (tk == 2) return weight_one_override(q.chi, q.cusp);
    const Rational rr = riemann_roch(q.N, q.weight, q.chi);
    const i64 base = project_on_z(rr, q.weight, q.chi);
    if (tk == 3) {
        // dim M_{3/2}(chi) - dim S_{1/2}(chi*) = RR; cusp version with M_{1/2}(chi*).
        const auto dual = q.chi.conjugate();
        if (!q.cusp) return base + weight_half_dim(dual, true);
        return base - eisenstein_count(q.chi) + weight_half_dim(dual, false);
    }
    if (tk == 4) {
        if (!q.cusp) return base;
        return base - eisenstein_count(q.chi) + (q.chi.is_trivial() ? 1 : 0);
    }
    return q.cusp ? dim_cuspforms(q) : dim_modforms(q);
}

std::optional<i64> obstruction_dim(i64 N, const Rational& k, const CharacterSpec& chi) {
    return dim_any_weight({N, Rational(2) - k, chi.conjugate(), true});
}

std::vector<CharacterSpec> admissible_characters(i64 N) {
    std::vector<CharacterSpec> out;
    std::vector<i64> ms{1};
    for (i64 p : prime_divisors(N)) {
        auto cur = ms;
        for (i64 m : cur) ms.push_back(m * p);
    }
    std::sort(ms.begin(), ms.end());
    for (int e = 0; e < (N % 4 == 0 ? 4 : 1); ++e)
        for (i64 m : ms) {
            CharacterSpec s(N, e, m);
            if (s.admissible()) out.push_back(s);
        }
    return out;
}

}  // namespace modkit
