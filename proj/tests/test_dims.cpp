#include <doctest.h>

#include <map>
#include <random>
#include <tuple>

#include "modkit/dims.hpp"
#include "modkit/qseries.hpp"

using namespace modkit;

namespace {

struct Mono {
    i64 coef;
    int two_k;
    CharacterSpec chi;
};

using Graded = std::map<std::tuple<int, int, i64>, i64>;

// Coefficients of num / prod (1 - den_i) up to weight max_two_k / 2, graded by character.
Graded expand(i64 N, const std::vector<Mono>& num, const std::vector<Mono>& den, int max_two_k) {
    Graded cur;
    for (const auto& m : num) cur[{m.two_k, m.chi.e, m.chi.m}] += m.coef;
    for (const auto& d : den) {
        Graded next;
        for (const auto& [key, v] : cur) {
            auto [tk, e, m] = key;
            CharacterSpec c(N, e, m);
            for (int p = 0; tk + p * d.two_k <= max_two_k; ++p) {
                next[{tk + p * d.two_k, c.e, c.m}] += v;
                c = c * d.chi;
            }
        }
        cur = next;
    }
    return cur;
}

struct Hilbert {
    i64 N;
    bool graded;
    bool half;
    std::vector<Mono> num, den;
    std::vector<CharacterSpec> only;  // restrict to these characters when non-empty
};

CharacterSpec ch(i64 N, int e = 0, i64 m = 1) { return CharacterSpec(N, e, m); }

std::vector<Hilbert> hilbert_table() {
    return {
        {1, false, false, {{1, 0, ch(1)}}, {{1, 8, ch(1)}, {1, 12, ch(1)}}, {}},
        {2, false, false, {{1, 0, ch(2)}}, {{1, 4, ch(2)}, {1, 8, ch(2)}}, {}},
        {3, true, false, {{1, 0, ch(3)}}, {{1, 2, ch(3, 0, 3)}, {1, 6, ch(3, 0, 3)}}, {}},
        {5, true, false, {{1, 0, ch(5)}, {1, 4, ch(5)}}, {{1, 4, ch(5, 0, 5)}, {1, 4, ch(5, 0, 5)}}, {}},
        {6, true, false, {{1, 0, ch(6)}}, {{1, 2, ch(6, 0, 3)}, {1, 2, ch(6, 0, 3)}}, {}},
        {7, true, false, {{1, 0, ch(7)}, {1, 6, ch(7, 0, 7)}}, {{1, 2, ch(7, 0, 7)}, {1, 6, ch(7, 0, 7)}}, {}},
        {9, false, false, {{1, 0, ch(9)}}, {{1, 2, ch(9)}, {1, 2, ch(9)}}, {}},
        // odd weights vanish at level 10: every admissible character is even
        {10, false, false, {{1, 0, ch(10)}, {5, 4, ch(10)}}, {{1, 4, ch(10)}, {1, 4, ch(10)}}, {}},
        {11, false, false, {{1, 0, ch(11)}, {1, 6, ch(11)}}, {{1, 2, ch(11)}, {1, 4, ch(11)}}, {}},
        {13, false, false, {{1, 0, ch(13)}, {2, 4, ch(13)}, {6, 8, ch(13)}, {5, 12, ch(13)}}, {{1, 4, ch(13)}, {1, 12, ch(13)}}, {}},
        {14, false, false, {{1, 0, ch(14)}, {1, 4, ch(14)}}, {{1, 2, ch(14)}, {1, 2, ch(14)}}, {}},
        // the ring generated by forms of trivial and chi_3 character
        {15, false, false, {{1, 0, ch(15)}, {1, 4, ch(15)}}, {{1, 2, ch(15)}, {1, 2, ch(15)}}, {ch(15), ch(15, 0, 3)}},
        {16, true, true, {{1, 0, ch(16)}, {1, 1, ch(16, 1, 2)}}, {{1, 1, ch(16, 1)}, {1, 1, ch(16, 1)}}, {}},
        {23, false, false, {{1, 0, ch(23)}, {1, 6, ch(23)}}, {{1, 2, ch(23)}, {1, 2, ch(23)}}, {}},
        {4, true, true, {{1, 0, ch(4)}}, {{1, 1, ch(4, 1)}, {1, 4, ch(4)}}, {}},
        {8, true, true, {{1, 0, ch(8)}}, {{1, 1, ch(8, 1, 2)}, {1, 1, ch(8, 1)}}, {}},
        {12, false, true, {{1, 0, ch(12)}, {1, 1, ch(12)}, {2, 2, ch(12)}}, {{1, 1, ch(12)}, {1, 2, ch(12)}}, {}},
        {17, true, false,
         {{1, 0, ch(17)}, {1, 4, ch(17)}, {2, 4, ch(17, 0, 17)}, {3, 8, ch(17)}, {4, 8, ch(17, 0, 17)}, {1, 12, ch(17)}},
         {{1, 4, ch(17)}, {1, 8, ch(17)}}, {}},
        {18, true, false, {{1, 0, ch(18)}, {2, 2, ch(18, 0, 3)}}, {{1, 2, ch(18, 0, 3)}, {1, 2, ch(18, 0, 3)}}, {}},
    };
}

}  // namespace

TEST_CASE("delta invariants") {
    CHECK(delta_infinity({RootOfUnity()}) == make_rational(1, 2));
    CHECK(delta_order(1, {RootOfUnity()}) == 0);
    CHECK(delta_infinity({RootOfUnity(make_rational(-1, 3))}) == make_rational(1, 2) - make_rational(1, 3));
    CHECK(delta_order(2, {RootOfUnity::minus_one()}) == make_rational(-1, 4));
    CHECK(delta_infinity({RootOfUnity::minus_one()}) == 0);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 60; ++i) {
        i64 n = 1 + static_cast<i64>(rng() % 12);
        std::vector<RootOfUnity> eig;
        for (int j = 0, d = 1 + static_cast<int>(rng() % 3); j < d; ++j) eig.push_back(RootOfUnity::from_fraction(static_cast<i64>(rng() % n), n));
        CHECK(delta_order(n, eig) == delta_order_by_traces(n, eig));
    }
}

TEST_CASE("dimension examples") {
    CHECK(dim_modforms({1, 4, ch(1)}) == 1);
    CHECK(dim_modforms({1, 6, ch(1)}) == 1);
    CHECK(dim_modforms({1, 12, ch(1)}) == 2);
    CHECK(dim_modforms({3, 3, ch(3, 0, 3)}) == 2);
    CHECK(dim_modforms({11, 4, ch(11)}) == 4);
    CHECK(dim_cuspforms({3, 9, ch(3, 0, 3), true}) == 2);
    CHECK(dim_cuspforms({1, 12, ch(1), true}) == 1);
    CHECK(dim_cuspforms({1, 14, ch(1), true}) == 0);
    CHECK(dim_modforms({3, 4, ch(3, 0, 3)}) == 0);
    CHECK_THROWS(dim_modforms({1, 2, ch(1)}));
    CHECK_THROWS(dim_modforms({3, make_rational(5, 2), ch(3)}));
}

TEST_CASE("level one against the classical formula") {
    for (int k = 4; k <= 60; k += 2) {
        i64 want = k / 12 + (k % 12 == 2 ? 0 : 1);
        CHECK(dim_modforms({1, k, ch(1)}) == want);
        CHECK(dim_cuspforms({1, k, ch(1), true}) == want - 1);
    }
}

TEST_CASE("integrality for all admissible characters") {
    for (i64 N = 1; N <= 40; ++N)
        for (const auto& c : admissible_characters(N))
            for (int tk = 5; tk <= 26; ++tk) {
                if (tk % 2 && N % 4) continue;
                CAPTURE(N);
                CAPTURE(c.to_string());
                CAPTURE(tk);
                i64 m = -1, s = -1;
                CHECK_NOTHROW(m = dim_modforms({N, make_rational(tk, 2), c}));
                CHECK_NOTHROW(s = dim_cuspforms({N, make_rational(tk, 2), c, true}));
                CHECK(m >= 0);
                CHECK(s >= 0);
                CHECK(s <= m);
            }
}

TEST_CASE("Hilbert series") {
    for (const auto& h : hilbert_table()) {
        CAPTURE(h.N);
        auto series = expand(h.N, h.num, h.den, 24);
        for (int tk = 0; tk <= 24; ++tk) {
            if (!h.half && tk % 2) continue;
            CAPTURE(tk);
            i64 total = 0, want_total = 0;
            for (const auto& c : admissible_characters(h.N)) {
                if (!h.only.empty() && std::find(h.only.begin(), h.only.end(), c) == h.only.end()) continue;
                auto d = dim_any_weight({h.N, make_rational(tk, 2), c});
                REQUIRE(d.has_value());
                auto it = series.find({tk, c.e, c.m});
                i64 want = it == series.end() ? 0 : it->second;
                if (h.graded) CHECK(*d == want);
                total += *d;
                want_total += want;
            }
            CHECK(total == want_total);
        }
    }
}

TEST_CASE("weight one half") {
    auto b4 = serre_stark_basis(4, DirichletCharacter::principal(4));
    REQUIRE(b4.size() == 1);
    CHECK(b4[0].t == 1);
    CHECK(b4[0].series(30) == lattice_theta(gram_A(1).scaled(make_rational(1, 1)), 30));
    i64 total16 = 0;
    for (const auto& chi : dirichlet_characters(16)) total16 += static_cast<i64>(serre_stark_basis(16, chi).size());
    CHECK(total16 == 3);
    i64 total8 = 0;
    for (const auto& chi : dirichlet_characters(8)) total8 += static_cast<i64>(serre_stark_basis(8, chi).size());
    CHECK(total8 == 2);
    CHECK_THROWS(serre_stark_basis(6, DirichletCharacter::principal(6)));
    CHECK(dim_any_weight({4, make_rational(1, 2), ch(4, 1)}) == 1);
    CHECK(dim_any_weight({4, make_rational(1, 2), ch(4, 3)}) == 0);
    // theta(tau) theta(2 tau) style check: every basis element is a genuine series in q^t n^2
    for (const auto& chi : dirichlet_characters(16))
        for (const auto& b : serre_stark_basis(16, chi)) {
            auto s = b.series(40);
            for (const auto& [k, c] : s.terms()) {
                i64 n2 = k / b.t;
                CHECK(k % b.t == 0);
                CHECK(is_square(n2));
            }
        }
}

TEST_CASE("any weight and obstructions") {
    CHECK(dim_any_weight({3, -7, ch(3, 0, 3)}) == 0);
    CHECK(dim_any_weight({5, 0, ch(5)}) == 1);
    CHECK(dim_any_weight({5, 0, ch(5, 0, 5)}) == 0);
    CHECK(dim_any_weight({3, 1, ch(3, 0, 3)}) == 1);
    CHECK(dim_any_weight({23, 1, ch(23, 0, 23), true}) == 1);
    CHECK_FALSE(dim_any_weight({15, 1, ch(15, 0, 15)}).has_value());
    CHECK_FALSE(dim_any_weight({31, 1, ch(31, 0, 31)}).has_value());
    CHECK(obstruction_dim(3, -7, ch(3, 0, 3)) == 2);
    CHECK(obstruction_dim(1, -12, ch(1)) == 0);
    CHECK(obstruction_dim(1, -16, ch(1)) == 1);
    // weight 2 trivial character: g + c - 1 forms, g cusp forms
    for (i64 N : {1, 2, 11, 23, 37, 60}) {
        auto data = gamma0_data(N);
        CHECK(dim_any_weight({N, 2, ch(N)}) == data.genus + static_cast<i64>(data.cusps.size()) - 1);
        CHECK(dim_any_weight({N, 2, ch(N), true}) == data.genus);
    }
}
