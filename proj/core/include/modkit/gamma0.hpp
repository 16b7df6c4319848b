#pragma once

#include <string>
#include <vector>

#include "modkit/rational.hpp"

namespace modkit {

struct Mat2 {
    i64 a = 1, b = 0, c = 0, d = 1;

    Mat2 operator*(const Mat2& o) const;
    Mat2 inverse() const { return {d, -b, -c, a}; }
    Mat2 operator-() const { return {-a, -b, -c, -d}; }
    i64 det() const { return a * d - b * c; }
    bool operator==(const Mat2& o) const = default;
    std::string to_string() const;
};

// (matrix, branch * principal sqrt(c tau + d)); principal branch has -pi/2 < arg <= pi/2.
struct MetaplecticElement {
    Mat2 m;
    int branch = 1;

    MetaplecticElement operator*(const MetaplecticElement& o) const;
    MetaplecticElement inverse() const;
    MetaplecticElement pow(i64 e) const;
    bool operator==(const MetaplecticElement& o) const = default;
    std::string to_string() const;
};

MetaplecticElement mp(i64 a, i64 b, i64 c, i64 d, int branch = 1);
MetaplecticElement mp_S();
MetaplecticElement mp_T(i64 k = 1);
MetaplecticElement mp_Z();
// Sign (+1/-1) relating sqrt(j(A, B tau)) sqrt(j(B, tau)) to sqrt(j(AB, tau)) for principal roots.
int metaplectic_cocycle(const Mat2& A, const Mat2& B);

// Lift via the (c/d) sqrt(c tau + d) branch for Gamma_1(4) ∩ Gamma_0(N).
MetaplecticElement mp_lift(const Mat2& m, i64 N);

struct CuspClass {
    i64 N = 1;
    i64 a = 1, c = 1;
    i64 width = 1;
    i64 inv_gcd = 1;   // gcd(c, N)
    i64 inv_unit = 0;  // a * (c / gcd(c, N)) mod gcd(gcd(c,N), N / gcd(c,N))
    std::string label;
};

struct CuspInvariant {
    i64 g;
    i64 u;
    bool operator==(const CuspInvariant&) const = default;
};

CuspInvariant cusp_invariant(i64 N, i64 a, i64 c);
i64 cusp_width(i64 N, i64 c);
std::vector<CuspClass> cusp_representatives(i64 N);
// Index into cusp_representatives(N).
std::size_t cusp_class_of(i64 N, i64 a, i64 c);

struct Gamma0Data {
    i64 N = 1;
    i64 index = 1;
    i64 nu2 = 0, nu3 = 0;
    std::vector<CuspClass> cusps;
    i64 genus = 0;
};

Gamma0Data gamma0_data(i64 N);
i64 gamma0_index(i64 N);
i64 gamma0_nu2(i64 N);
i64 gamma0_nu3(i64 N);

// Generator of the stabilizer of a/c in Gamma_0(N).
MetaplecticElement parabolic_generator(i64 N, i64 a, i64 c);

// One element of order 4 (nu = 2) or 6 (nu = 3) in the matrix group per elliptic class.
std::vector<MetaplecticElement> elliptic_elements(i64 N, int nu);

bool in_gamma0(const Mat2& m, i64 N);

// Moebius action on a cusp a/c (c = 0 is infinity); returns reduced (a', c') with c' >= 0.
std::pair<i64, i64> act_on_cusp(const Mat2& m, i64 a, i64 c);

}  // namespace modkit
