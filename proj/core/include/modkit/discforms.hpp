#pragma once

#include <optional>
#include <tuple>
#include <string>
#include <vector>

#include "modkit/cyclotomic.hpp"
#include "modkit/rational.hpp"

namespace modkit {

enum class TwoAdicType { none, even, odd };

// q^{sign n} for odd p; q^{sign n}_{II} (even) or q^{sign n}_t (odd) when p = 2.
struct JordanComponent {
    i64 p = 2;
    int k = 1;
    int n = 1;
    int sign = 1;
    TwoAdicType type = TwoAdicType::none;
    int t = 0;

    i64 q() const;
    bool valid() const;
    i64 order() const;
    i64 level() const;
    int antisquare() const;
    int signature() const;
    std::string to_string() const;
    bool operator==(const JordanComponent&) const = default;
};

class GenusSymbol {
public:
    GenusSymbol() = default;
    // Merges components sharing a prime power; throws on an invalid result.
    explicit GenusSymbol(std::vector<JordanComponent> comps);
    static GenusSymbol parse(const std::string& text);

    const std::vector<JordanComponent>& components() const { return c_; }
    bool is_trivial() const { return c_.empty(); }
    i64 order() const;
    i64 level() const;
    int signature() const;
    std::string to_string() const;
    bool operator==(const GenusSymbol&) const = default;

private:
    std::vector<JordanComponent> c_;
};

GenusSymbol symbol_compose(const GenusSymbol& a, const GenusSymbol& b);
inline int symbol_signature(const GenusSymbol& s) { return s.signature(); }
inline i64 symbol_level(const GenusSymbol& s) { return s.level(); }
inline i64 symbol_order(const GenusSymbol& s) { return s.order(); }

// Finite abelian group on cyclic generators; elements are indexed in mixed radix (first generator fastest).
class DiscriminantGroup {
public:
    DiscriminantGroup() = default;
    // norms[i] = gamma_i^2 mod 2, bilinear[i][j] = (gamma_i, gamma_j) mod 1 off the diagonal.
    DiscriminantGroup(std::vector<i64> orders, std::vector<Rational> norms, std::vector<std::vector<Rational>> bilinear);

    std::size_t rank() const { return ord_.size(); }
    const std::vector<i64>& orders() const { return ord_; }
    i64 size() const { return size_; }
    i64 level() const { return level_; }

    std::vector<i64> coords(i64 idx) const;
    i64 index(const std::vector<i64>& x) const;
    i64 add(i64 x, i64 y) const;
    i64 neg(i64 x) const { return scale(-1, x); }
    i64 scale(i64 n, i64 x) const;

    Rational norm(i64 x) const;  // gamma^2 in [0, 2)
    Rational quad(i64 x) const;  // gamma^2 / 2 in [0, 1)
    Rational bilinear(i64 x, i64 y) const;  // in [0, 1)

    // Common denominator D with D * gamma^2 / 2 and D * (gamma, delta) integral.
    i64 denominator() const { return den_; }
    // D * gamma^2/2 mod D and D * (gamma, delta) mod D from coordinates.
    i64 quad_num(i64 x) const;
    i64 bil_num(i64 x, i64 y) const;

    struct ProfileEntry {
        i64 element_order;
        Rational norm;
        i64 count;
        bool operator==(const ProfileEntry&) const = default;
    };
    // Counts of (element order, norm) pairs; an isomorphism invariant used for deduplication.
    std::vector<ProfileEntry> norm_profile() const;

private:
    std::vector<i64> ord_;
    std::vector<Rational> nrm_;
    std::vector<std::vector<Rational>> bil_;
    i64 size_ = 1;
    i64 level_ = 1;
    i64 den_ = 1;
    std::vector<i64> qn_;              // D * gamma_i^2 / 2 reduced mod D * ord_i (well-defined lift)
    std::vector<std::vector<i64>> bn_; // D * (gamma_i, gamma_j) mod D
};

DiscriminantGroup realize_group(const GenusSymbol& s);

// Odd 2-adic component as rank-one pieces with oddities in {1,3,5,7}; nullopt if none exists.
std::optional<std::vector<int>> odd_two_adic_pieces(int n, int sign, int t);

// sqrt(n) as an element of a cyclotomic field.
Cyclotomic cyclotomic_sqrt(i64 n);

// Unique s mod 8 with sum e(gamma^2/2) = sqrt|G| e(s/8); throws if the form is degenerate.
int milgram_signature(const DiscriminantGroup& g);

struct SubgroupData {
    std::vector<i64> torsion;  // A_n
    std::vector<i64> powers;   // A^n
    std::vector<i64> coset;    // A^{n*}
};

SubgroupData subgroup_data(const DiscriminantGroup& g, i64 n);
Cyclotomic gauss_sum(const DiscriminantGroup& g, i64 n, i64 delta);

// Symbols with level dividing N (N = 0: any level), order <= max_order, optional signature filter.
std::vector<GenusSymbol> enumerate_symbols(i64 N, i64 max_order, std::optional<int> signature = std::nullopt);

// Keeps the first symbol of each (order, level, signature, norm profile) class.
std::vector<GenusSymbol> dedupe_symbols(const std::vector<GenusSymbol>& symbols);

}  // namespace modkit
