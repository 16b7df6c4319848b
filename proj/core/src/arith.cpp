#include "modkit/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace modkit {

i64 gcd(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 lcm(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    i64 g = gcd(a, b);
    i64 r = (a / g) * b;
    return r < 0 ? -r : r;
}

i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    i64 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        i64 q = floor_div(a, b);
        i64 t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return a;
}

i64 inv_mod(i64 a, i64 n) {
    if (n == 1) return 0;
    i64 x, y;
    if (ext_gcd(mod(a, n), n, x, y) != 1) throw std::domain_error("inv_mod: not a unit");
    return mod(x, n);
}

i64 pow_mod(i64 a, i64 e, i64 n) {
    i128 r = 1 % n, b = mod(a, n);
    while (e > 0) {
        if (e & 1) r = r * b % n;
        b = b * b % n;
        e >>= 1;
    }
    return static_cast<i64>(r);
}

i64 ipow(i64 a, int e) {
    i64 r = 1;
    while (e-- > 0) r *= a;
    return r;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    i64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        i128 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    if (n < 0) n = -n;
    std::vector<std::pair<i64, int>> out;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<i64> prime_divisors(i64 n) {
    std::vector<i64> out;
    for (auto [p, e] : factorize(n)) out.push_back(p);
    return out;
}

std::vector<i64> divisors(i64 n) {
    std::vector<i64> out{1};
    for (auto [p, e] : factorize(n)) {
        std::size_t k = out.size();
        i64 pk = 1;
        for (int j = 1; j <= e; ++j) {
            pk *= p;
            for (std::size_t i = 0; i < k; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 euler_phi(i64 n) {
    i64 r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

int valuation(i64 n, i64 p) {
    if (n == 0) return 1 << 20;
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

i64 squarefree_part(i64 m) {
    i64 r = 1;
    for (auto [p, e] : factorize(m)) {
        if (e % 2) r *= p;
    }
    return r;
}

bool is_square(i64 n) {
    if (n < 0) return false;
    i64 r = 0;
    while ((r + 1) * (r + 1) <= n) {
        i64 step = 1;
        while ((r + 2 * step) * (r + 2 * step) <= n) step *= 2;
        r += step;
    }
    return r * r == n;
}

bool is_hall_divisor(i64 d, i64 n) {
    return d > 0 && n % d == 0 && gcd(d, n / d) == 1;
}

namespace {

int jacobi(i64 a, i64 n) {
    a = mod(a, n);
    int r = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            i64 m8 = n & 7;
            if (m8 == 3 || m8 == 5) r = -r;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) r = -r;
        a %= n;
    }
    return n == 1 ? r : 0;
}

}  // namespace

int kronecker(i64 c, i64 d) {
    if (d == 0) return (c == 1 || c == -1) ? 1 : 0;
    int r = 1;
    if (d < 0) {
        d = -d;
        if (c < 0) r = -r;
    }
    while ((d & 1) == 0) {
        d >>= 1;
        if ((c & 1) == 0) return 0;
        i64 m8 = mod(c, 8);
        if (m8 == 3 || m8 == 5) r = -r;
    }
    if (d == 1) return r;
    return r * jacobi(c, d);
}

i64 nearest_div(i64 a, i64 b) {
    if (b < 0) {
        a = -a;
        b = -b;
    }
    i64 q = floor_div(2 * a + b, 2 * b);
    // tie (2a + b divisible by 2b with exact half) goes toward zero
    if (2 * (a - q * b) == -b && q > 0) --q;
    if (2 * (a - q * b) == b && q < 0) ++q;
    return q;
}

}  // namespace modkit
