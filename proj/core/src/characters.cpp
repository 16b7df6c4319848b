#include "modkit/characters.hpp"

#include <stdexcept>

#include "modkit/arith.hpp"

namespace modkit {

namespace {

RootOfUnity sign_root(int s) { return s < 0 ? RootOfUnity::minus_one() : RootOfUnity(); }

RootOfUnity e24(i64 x) { return RootOfUnity::from_fraction(mod(x, 24), 24); }

i64 kron_minus_one(i64 n) { return kronecker(-1, n); }

CharacterSpec level_character(i64 N, i64 s, i64 order) {
    if (order <= 0) throw std::invalid_argument("order must be positive");
    if (N % 4 != 0) return CharacterSpec(N, 0, order);
    i64 e = s + kron_minus_one(order) - 1;
    i64 m = (mod(s, 2) == 1 ? 2 : 1) * squarefree_part(order);
    return CharacterSpec(N, e, m);
}

}  // namespace

CharacterSpec::CharacterSpec(i64 level, i64 theta_exponent, i64 quad) : N(level) {
    if (level <= 0) throw std::invalid_argument("level must be positive");
    if (quad <= 0) throw std::invalid_argument("quadratic modulus must be positive");
    e = static_cast<int>(mod(theta_exponent, 4));
    m = squarefree_part(quad);
}

bool CharacterSpec::admissible() const {
    if (e != 0 && N % 4 != 0) return false;
    for (i64 p : prime_divisors(m)) {
        if (p == 2 && N % 8 != 0) return false;
        if (N % p != 0) return false;
    }
    return true;
}

CharacterSpec CharacterSpec::conjugate() const { return CharacterSpec(N, -e, m); }

CharacterSpec CharacterSpec::operator*(const CharacterSpec& o) const {
    if (N != o.N) throw std::invalid_argument("characters at different levels");
    return CharacterSpec(N, e + o.e, m * o.m);
}

std::string CharacterSpec::to_string() const {
    std::string s;
    if (e == 1) s = "chi_theta";
    else if (e > 1) s = "chi_theta^" + std::to_string(e);
    if (m != 1) s += (s.empty() ? "" : "*") + std::string("chi_") + std::to_string(m);
    return s.empty() ? "trivial" : s;
}

RootOfUnity chi_theta(const MetaplecticElement& g) {
    const Mat2& x = g.m;
    if (mod(x.c, 4) != 0) throw std::domain_error("chi_theta: matrix not in Gamma_0(4)");
    RootOfUnity v = sign_root(g.branch * kronecker(x.c, x.d));
    if (mod(x.d, 4) == 3) v *= RootOfUnity::from_fraction(3, 4);
    return v;
}

RootOfUnity chi_eta(const MetaplecticElement& g) {
    const i64 a = g.m.a, b = g.m.b, c = g.m.c, d = g.m.d;
    int sym;
    i64 x;
    if (mod(c, 2) == 1) {
        i64 common = b * d * (1 - c * c) + c * (a + d);
        if (c > 0) {
            sym = kronecker(d, c);
            x = -3 * c + common;
        } else {
            sym = kronecker(-d, -c);
            x = 3 * c - 6 + common;
        }
    } else {
        i64 common = a * c * (1 - d * d) + d * (b - c);
        if (c >= 0) {
            sym = kronecker(c, d);
            x = 3 * d - 3 + common;
        } else {
            sym = kronecker(-c, d);
            x = -3 * d - 9 + common;
        }
    }
    // The printed c < 0 rows are stated for the branch -i sqrt(-(c tau + d)), the negative of ours.
    if (c < 0) sym = -sym;
    return sign_root(g.branch * sym) * e24(x);
}

RootOfUnity char_eval(const CharacterSpec& spec, const MetaplecticElement& g) {
    if (!spec.admissible()) throw std::invalid_argument("inadmissible character " + spec.to_string());
    if (!in_gamma0(g.m, spec.N)) throw std::domain_error("char_eval: matrix not in Gamma_0(N)");
    RootOfUnity v;
    if (spec.e != 0) v = chi_theta(g).pow(spec.e);
    return v * sign_root(kronecker(g.m.d, spec.m));
}

bool same_character(const CharacterSpec& x, const CharacterSpec& y) {
    if (x.N != y.N) return false;
    const i64 N = x.N;
    auto agree = [&](const MetaplecticElement& g) { return char_eval(x, g) == char_eval(y, g); };
    if (!agree(mp_Z()) || !agree(mp_T())) return false;
    const i64 span = 4 * lcm(N, 8) * lcm(x.m, y.m);
    for (i64 k = 1; k <= 8; ++k) {
        const i64 c = N * k;
        for (i64 d = 1; d <= span; ++d) {
            if (gcd(c, d) != 1) continue;
            if (N % 4 == 0 && d % 4 != 1) continue;
            i64 s = 0, t = 0;
            ext_gcd(d, c, s, t);
            // s d + t c = 1, so (s, -t; c, d) has determinant 1.
            if (!agree(mp(s, -t, c, d))) return false;
        }
    }
    return true;
}

CharacterSpec chi_of_discriminant_form(i64 order, int signature, i64 level) {
    return level_character(level, mod(signature, 8), order);
}

CharacterSpec eta_quotient_character(i64 N, i64 two_k, i64 order_A) {
    return level_character(N, two_k, order_A);
}

RootOfUnity char_at_cusp(const CharacterSpec& spec, i64 a, i64 c) {
    if (!spec.admissible()) throw std::invalid_argument("inadmissible character " + spec.to_string());
    const i64 N = spec.N;
    if (c < 0 || gcd(a, c) != 1) throw std::invalid_argument("char_at_cusp: need c >= 0 and gcd(a, c) = 1");
    const i64 t = N / gcd(static_cast<i64>(static_cast<i128>(c) * c % N), N);
    const int vc = valuation(c, 2);
    const int vN = valuation(N, 2);
    RootOfUnity v;
    if (spec.m % 2 == 0) {
        bool neg = (vc == 1 && vN == 3) || (vc == 2 && vN == 3) || (vc == 2 && vN == 4);
        if (neg) v *= RootOfUnity::minus_one();
    }
    if (spec.e != 0) {
        RootOfUnity th;
        if (vc == 1 && vN == 2) th = RootOfUnity::minus_one() * RootOfUnity::from_fraction(mod(t, 4), 4);
        else if (vc == 1 && vN == 3) th = RootOfUnity::minus_one();
        v *= th.pow(spec.e);
    }
    return v;
}

RootOfUnity char_at_elliptic(const CharacterSpec& spec, int nu) {
    if (nu != 2 && nu != 3) throw std::invalid_argument("elliptic order must be 2 or 3");
    const i64 count = nu == 2 ? gamma0_nu2(spec.N) : gamma0_nu3(spec.N);
    if (count == 0) throw std::domain_error("Gamma_0(" + std::to_string(spec.N) + ") has no elliptic points of order " + std::to_string(nu));
    if (!spec.admissible()) throw std::invalid_argument("inadmissible character " + spec.to_string());
    int s = 1;
    for (i64 p : prime_divisors(spec.m)) {
        i64 ex = nu == 2 ? (p - 1) / 4 : (p - 1) / 2;
        if (ex % 2) s = -s;
    }
    return sign_root(s);
}

}  // namespace modkit
