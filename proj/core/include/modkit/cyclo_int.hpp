#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "modkit/arith.hpp"

namespace modkit {

// Integer cyclotomic arithmetic in Z[zeta_L] on dense coefficient vectors of length L.
// Canonical vectors are supported on the tensor-power basis used by Cyclotomic.
class CycloIntRing {
public:
    explicit CycloIntRing(i64 L);

    i64 order() const { return L_; }
    std::vector<i64> zero() const { return std::vector<i64>(static_cast<std::size_t>(L_), 0); }
    void canonicalize(std::vector<i64>& v) const;
    std::vector<i64> rotated(const std::vector<i64>& v, i64 e) const;  // multiply by zeta^e
    std::vector<i64> multiply(const std::vector<i64>& a, const std::vector<i64>& b) const;
    std::vector<i64> conj(const std::vector<i64>& v) const;

    // Ring homomorphism to F_P sending zeta to an element of exact order L.
    std::uint64_t hash(const std::vector<i64>& v) const;
    std::uint64_t prime() const { return P_; }
    std::uint64_t omega_pow(i64 e) const { return pw_[static_cast<std::size_t>(mod(e, L_))]; }
    // e with omega^e = x, if x is an L-th root of unity.
    std::optional<i64> log_root(std::uint64_t x) const;
    std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t powmod(std::uint64_t a, std::uint64_t e) const;

private:
    struct Block {
        i64 p, q, m, idem;
    };
    i64 L_;
    std::vector<Block> blocks_;
    std::uint64_t P_ = 0;
    std::vector<std::uint64_t> pw_;
    std::unordered_map<std::uint64_t, i64> log_;
};

}  // namespace modkit
