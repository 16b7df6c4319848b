#include "modkit/gamma0.hpp"

#include <sstream>
#include <stdexcept>

namespace modkit {

Mat2 Mat2::operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

std::string Mat2::to_string() const {
    std::ostringstream os;
    os << "(" << a << "," << b << ";" << c << "," << d << ")";
    return os.str();
}

namespace {

// Arg in (0, pi]: upper; Arg in (-pi, 0]: lower.
bool upper(i128 re, i128 im) { return im > 0 || (im == 0 && re < 0); }

}  // namespace

int metaplectic_cocycle(const Mat2& A, const Mat2& B) {
    Mat2 AB = A * B;
    // z2 = j(B, i), z3 = j(AB, i), z1 = z3 / z2 classified through z3 * conj(z2)
    i128 r2 = B.d, i2 = B.c;
    i128 r3 = AB.d, i3 = AB.c;
    i128 rw = r3 * r2 + i3 * i2;
    i128 iw = i3 * r2 - r3 * i2;
    bool u1 = upper(rw, iw), u2 = upper(r2, i2);
    if (u1 && u2) {
        if (i3 < 0 || (i3 == 0 && r3 > 0)) return -1;
    } else if (!u1 && !u2) {
        if (i3 > 0 || (i3 == 0 && r3 < 0)) return -1;
    }
    return 1;
}

MetaplecticElement MetaplecticElement::operator*(const MetaplecticElement& o) const {
    return {m * o.m, branch * o.branch * metaplectic_cocycle(m, o.m)};
}

MetaplecticElement MetaplecticElement::inverse() const {
    Mat2 inv = m.inverse();
    return {inv, branch * metaplectic_cocycle(m, inv)};
}

MetaplecticElement MetaplecticElement::pow(i64 e) const {
    if (e < 0) return inverse().pow(-e);
    MetaplecticElement r{}, b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::string MetaplecticElement::to_string() const {
    return m.to_string() + (branch > 0 ? "+" : "-");
}

MetaplecticElement mp(i64 a, i64 b, i64 c, i64 d, int branch) {
    Mat2 m{a, b, c, d};
    if (m.det() != 1) throw std::invalid_argument("matrix must have determinant 1: " + m.to_string());
    if (branch != 1 && branch != -1) throw std::invalid_argument("branch must be +1 or -1");
    return {m, branch};
}

MetaplecticElement mp_S() { return mp(0, -1, 1, 0); }
MetaplecticElement mp_T(i64 k) { return mp(1, k, 0, 1); }
MetaplecticElement mp_Z() { return mp(-1, 0, 0, -1); }

bool in_gamma0(const Mat2& m, i64 N) { return m.det() == 1 && mod(m.c, N) == 0; }

MetaplecticElement mp_lift(const Mat2& m, i64 N) {
    if (N % 4 != 0) throw std::invalid_argument("mp_lift: level must be divisible by 4");
    if (!in_gamma0(m, N) || mod(m.d, 4) != 1) throw std::invalid_argument("mp_lift: matrix outside Gamma_1(4) ∩ Gamma_0(N)");
    return {m, kronecker(m.c, m.d)};
}

CuspInvariant cusp_invariant(i64 N, i64 a, i64 c) {
    if (c < 0) {
        a = -a;
        c = -c;
    }
    if (c == 0) return {N, 0};
    i64 g = gcd(c, N);
    i64 m = gcd(g, N / g);
    return {g, m == 1 ? 0 : mod(mod(a, m) * mod(c / g, m), m)};
}

i64 cusp_width(i64 N, i64 c) {
    i64 c2 = static_cast<i64>(static_cast<i128>(c) * c % N);
    return N / gcd(c2, N);
}

std::vector<CuspClass> cusp_representatives(i64 N) {
    std::vector<CuspClass> out;
    for (i64 c : divisors(N)) {
        i64 m = gcd(c, N / c);
        for (i64 u = 0; u < m; ++u) {
            if (m > 1 && gcd(u, m) != 1) continue;
            i64 a = u == 0 ? 1 : u;
            while (gcd(a, c) != 1 || mod(a, m) != mod(u, m)) ++a;
            CuspClass cc;
            cc.N = N;
            cc.a = a;
            cc.c = c;
            cc.width = cusp_width(N, c);
            auto inv = cusp_invariant(N, a, c);
            cc.inv_gcd = inv.g;
            cc.inv_unit = inv.u;
            if (c == N) {
                cc.label = "i∞";
            } else if (c == 1) {
                cc.label = "0";
            } else {
                cc.label = std::to_string(a) + "/" + std::to_string(c);
            }
            out.push_back(cc);
        }
    }
    return out;
}

std::size_t cusp_class_of(i64 N, i64 a, i64 c) {
    auto inv = cusp_invariant(N, a, c);
    auto reps = cusp_representatives(N);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (reps[i].inv_gcd == inv.g && reps[i].inv_unit == inv.u) return i;
    }
    throw std::logic_error("cusp class not found");
}

i64 gamma0_index(i64 N) {
    i64 r = N;
    for (i64 p : prime_divisors(N)) r = r / p * (p + 1);
    return r;
}

i64 gamma0_nu2(i64 N) {
    if (N % 4 == 0) return 0;
    i64 r = 1;
    for (i64 p : prime_divisors(N)) r *= 1 + kronecker(-4, p);
    return r;
}

i64 gamma0_nu3(i64 N) {
    if (N % 9 == 0) return 0;
    i64 r = 1;
    for (i64 p : prime_divisors(N)) r *= 1 + kronecker(-3, p);
    return r;
}

Gamma0Data gamma0_data(i64 N) {
    if (N < 1) throw std::invalid_argument("level must be positive");
    Gamma0Data g;
    g.N = N;
    g.index = gamma0_index(N);
    g.nu2 = gamma0_nu2(N);
    g.nu3 = gamma0_nu3(N);
    g.cusps = cusp_representatives(N);
    // 12 g = 12 + mu - 3 nu2 - 4 nu3 - 6 nu_inf
    i64 twelve_g = 12 + g.index - 3 * g.nu2 - 4 * g.nu3 - 6 * static_cast<i64>(g.cusps.size());
    if (twelve_g % 12 != 0) throw std::logic_error("genus formula not integral");
    g.genus = twelve_g / 12;
    return g;
}

MetaplecticElement parabolic_generator(i64 N, i64 a, i64 c) {
    if (gcd(a, c) != 1) throw std::invalid_argument("parabolic_generator: a and c must be coprime");
    i64 t = N / gcd(static_cast<i64>(static_cast<i128>(c) * c % N), N);
    return mp(1 + a * c * t, -a * a * t, c * c * t, 1 - a * c * t);
}

std::vector<MetaplecticElement> elliptic_elements(i64 N, int nu) {
    std::vector<MetaplecticElement> out;
    for (i64 a = 0; a < N; ++a) {
        if (nu == 2) {
            i64 v = a * a + 1;
            if (v % N == 0) out.push_back(mp(a, -v / N, N, -a));
        } else if (nu == 3) {
            i64 v = a * a - a + 1;
            if (v % N == 0) out.push_back(mp(a, -v / N, N, 1 - a));
        } else {
            throw std::invalid_argument("elliptic order must be 2 or 3");
        }
    }
    return out;
}

std::pair<i64, i64> act_on_cusp(const Mat2& m, i64 a, i64 c) {
    i64 na = m.a * a + m.b * c;
    i64 nc = m.c * a + m.d * c;
    if (nc < 0 || (nc == 0 && na < 0)) {
        na = -na;
        nc = -nc;
    }
    i64 g = gcd(na, nc);
    return {na / g, nc / g};
}

}  // namespace modkit
