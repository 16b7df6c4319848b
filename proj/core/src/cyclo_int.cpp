#include "modkit/cyclo_int.hpp"

#include <stdexcept>

namespace modkit {

CycloIntRing::CycloIntRing(i64 L) : L_(L) {
    if (L <= 0) throw std::invalid_argument("cyclotomic order must be positive");
    for (auto [p, e] : factorize(L)) {
        i64 q = ipow(p, e);
        i64 rest = L / q;
        i64 idem = rest == 1 ? 1 : mod(rest * inv_mod(rest, q), L);
        blocks_.push_back({p, q, q / p, idem});
    }
    // Prime P = 1 + L*j just above 2^30, so products of residues fit in 64 bits.
    std::uint64_t j = (std::uint64_t{1} << 30) / static_cast<std::uint64_t>(L) + 1;
    while (!is_prime(static_cast<i64>(1 + j * L))) ++j;
    P_ = 1 + j * static_cast<std::uint64_t>(L);
    const auto primes = prime_divisors(L);
    std::uint64_t omega = 0;
    for (std::uint64_t g = 2;; ++g) {
        std::uint64_t w = powmod(g, (P_ - 1) / static_cast<std::uint64_t>(L));
        bool exact = true;
        for (i64 p : primes) exact = exact && powmod(w, static_cast<std::uint64_t>(L / p)) != 1;
        if (exact) {
            omega = w;
            break;
        }
    }
    pw_.resize(static_cast<std::size_t>(L));
    std::uint64_t x = 1;
    for (i64 e = 0; e < L; ++e) {
        pw_[static_cast<std::size_t>(e)] = x;
        log_.emplace(x, e);
        x = mulmod(x, omega);
    }
}

std::uint64_t CycloIntRing::mulmod(std::uint64_t a, std::uint64_t b) const { return a * b % P_; }

std::uint64_t CycloIntRing::powmod(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= P_;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

void CycloIntRing::canonicalize(std::vector<i64>& v) const {
    for (const auto& b : blocks_) {
        for (i64 k = 0; k < L_; ++k) {
            const i64 val = v[static_cast<std::size_t>(k)];
            if (val == 0) continue;
            const i64 j = k % b.q;
            if (j / b.m != b.p - 1) continue;
            v[static_cast<std::size_t>(k)] = 0;
            const i64 r = j % b.m;
            for (i64 s = 0; s <= b.p - 2; ++s) {
                i64 jn = r + s * b.m;
                i64 kn = mod(k + static_cast<i64>(static_cast<i128>(jn - j) * b.idem % L_), L_);
                v[static_cast<std::size_t>(kn)] -= val;
            }
        }
    }
}

std::vector<i64> CycloIntRing::rotated(const std::vector<i64>& v, i64 e) const {
    std::vector<i64> out(v.size(), 0);
    const i64 s = mod(e, L_);
    for (i64 k = 0; k < L_; ++k) out[static_cast<std::size_t>((k + s) % L_)] = v[static_cast<std::size_t>(k)];
    return out;
}

std::vector<i64> CycloIntRing::conj(const std::vector<i64>& v) const {
    std::vector<i64> out(v.size(), 0);
    for (i64 k = 0; k < L_; ++k) out[static_cast<std::size_t>(mod(-k, L_))] = v[static_cast<std::size_t>(k)];
    return out;
}

std::vector<i64> CycloIntRing::multiply(const std::vector<i64>& a, const std::vector<i64>& b) const {
    std::vector<i64> out(static_cast<std::size_t>(L_), 0);
    for (i64 i = 0; i < L_; ++i) {
        const i64 x = a[static_cast<std::size_t>(i)];
        if (x == 0) continue;
        for (i64 j = 0; j < L_; ++j) {
            const i64 y = b[static_cast<std::size_t>(j)];
            if (y != 0) out[static_cast<std::size_t>((i + j) % L_)] += x * y;
        }
    }
    canonicalize(out);
    return out;
}

std::uint64_t CycloIntRing::hash(const std::vector<i64>& v) const {
    std::uint64_t h = 0;
    const i64 P = static_cast<i64>(P_);
    for (i64 k = 0; k < L_; ++k) {
        const i64 c = v[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        h = (h + mulmod(static_cast<std::uint64_t>(mod(c, P)), pw_[static_cast<std::size_t>(k)])) % P_;
    }
    return h;
}

std::optional<i64> CycloIntRing::log_root(std::uint64_t x) const {
    auto it = log_.find(x);
    if (it == log_.end()) return std::nullopt;
    return it->second;
}

}  // namespace modkit
