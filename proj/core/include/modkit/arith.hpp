#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace modkit {

using i64 = std::int64_t;
using i128 = __int128;

// Least nonnegative residue.
inline i64 mod(i64 a, i64 n) {
    i64 r = a % n;
    return r < 0 ? r + n : r;
}

i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);
i64 floor_div(i64 a, i64 b);

// Returns g = gcd(a, b) and sets x, y with a*x + b*y = g.
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y);

// Inverse of a modulo n; throws std::domain_error if gcd(a, n) != 1.
i64 inv_mod(i64 a, i64 n);
i64 pow_mod(i64 a, i64 e, i64 n);
i64 ipow(i64 a, int e);

bool is_prime(i64 n);
std::vector<std::pair<i64, int>> factorize(i64 n);
std::vector<i64> prime_divisors(i64 n);
std::vector<i64> divisors(i64 n);
i64 euler_phi(i64 n);
int valuation(i64 n, i64 p);

// Squarefree kernel of a positive integer up to squares: m / (largest square dividing m).
i64 squarefree_part(i64 m);
bool is_square(i64 n);
bool is_hall_divisor(i64 d, i64 n);

// Kronecker symbol (c|d); 0 when gcd(c, d) > 1.
int kronecker(i64 c, i64 d);

// Nearest integer to a/b, ties rounded toward zero.
i64 nearest_div(i64 a, i64 b);

}  // namespace modkit
