#include <doctest.h>

#include <random>

#include "modkit/weil.hpp"

using namespace modkit;

namespace {

DiscriminantGroup grp(const std::string& s) { return realize_group(GenusSymbol::parse(s)); }

CycloMatrix identity(i64 n) {
    CycloMatrix m(n, std::vector<Cyclotomic>(n));
    for (i64 i = 0; i < n; ++i) m[i][i] = Cyclotomic(1);
    return m;
}

CycloMatrix power(const CycloMatrix& m, i64 e) {
    CycloMatrix r = identity(static_cast<i64>(m.size()));
    CycloMatrix b = e < 0 ? conj_transpose(m) : m;
    for (i64 k = 0; k < std::abs(e); ++k) r = matmul(r, b);
    return r;
}

// Dense evaluation from the explicit generator matrices.
CycloMatrix dense_word(const DiscriminantGroup& g, const WeilWord& w) {
    const auto S = rho_S(g), T = rho_T(g), Z = rho_Z(g);
    CycloMatrix r = identity(g.size());
    for (const auto& l : w) {
        const CycloMatrix& base = l.kind == 'S' ? S : l.kind == 'T' ? T : Z;
        r = matmul(r, power(base, l.kind == 'Z' ? ((l.power % 4) + 4) % 4 : l.power));
    }
    return r;
}

WeilWord random_word(std::mt19937_64& rng, int max_s) {
    WeilWord w;
    int ns = static_cast<int>(rng() % (max_s + 1));
    for (int j = 0; j <= ns; ++j) {
        if (rng() % 2) w.push_back({'Z', static_cast<i64>(rng() % 4)});
        w.push_back({'T', static_cast<i64>(rng() % 11) - 5});
        if (j < ns) w.push_back({'S', rng() % 2 ? 1 : -1});
    }
    return w;
}

const char* kSmall[] = {"2_1^{+1}", "2_7^{+1}", "3^{-1}", "3^{+1}", "2^{-2}", "2^{+2}", "2_2^{+2}", "4_1^{+1}",
                        "5^{+1}", "3^{+2}", "2_1^{+1} 3^{-1}", "4^{-2}", "8^{-1}_3", "2^{+2}_2 3^{+1}", "9^{+1}"};

}  // namespace

TEST_CASE("words and decomposition") {
    CHECK(word_to_string(parse_word("S T^2 S")) == "S T^2 S");
    CHECK(word_element(parse_word("S S")) == mp_Z());
    CHECK(word_element(parse_word("S T S T S T")) == mp_Z());
    CHECK_THROWS(parse_word("X"));
    std::mt19937_64 rng(7);
    for (i64 N : {1, 2, 3, 4, 12, 25}) {
        for (int i = 0; i < 50; ++i) {
            auto g = random_gamma0_bc(N, rng);
            CHECK(mod(g.m.b, N) == 0);
            CHECK(mod(g.m.c, N) == 0);
            CHECK(word_element(decompose(g)) == g);
            CHECK(word_element(word_inverse(decompose(g))) * g == MetaplecticElement());
        }
    }
}

TEST_CASE("generator matrices for A1") {
    auto g = grp("2_1^{+1}");
    auto T = rho_T(g);
    CHECK(T[0][0] == Cyclotomic(1));
    CHECK(T[1][1] == Cyclotomic::zeta(4, 1));
    auto v = rho_word_apply_e0(g, parse_word("S T^2 S"));
    REQUIRE(v.size() == 1);
    CHECK(v.begin()->first == 1);
    CHECK(v.begin()->second == Cyclotomic::zeta(4, -1));
    CHECK(support_e0(g, 2) == std::vector<i64>{1});
    CHECK_THROWS_AS(rho_S(grp("3^{+6}")), BudgetExceeded);
}

TEST_CASE("Z squared is a scalar") {
    for (const char* s : kSmall) {
        auto g = grp(s);
        int sig = milgram_signature(g);
        auto Z2 = dense_word(g, parse_word("Z^2"));
        for (i64 x = 0; x < g.size(); ++x)
            CHECK(Z2[x][x] == Cyclotomic::zeta(4, -1).pow(2 * sig));
    }
}

TEST_CASE("dense generators satisfy the relations") {
    for (const char* s : kSmall) {
        CAPTURE(s);
        auto g = grp(s);
        auto S = rho_S(g), T = rho_T(g), Z = rho_Z(g);
        CHECK(matmul(S, conj_transpose(S)) == identity(g.size()));
        CHECK(matmul(S, S) == Z);
        auto ST = matmul(S, T);
        CHECK(matmul(matmul(ST, ST), ST) == Z);
    }
}

TEST_CASE("engine agrees with dense evaluation") {
    std::mt19937_64 rng(11);
    for (const char* s : kSmall) {
        CAPTURE(s);
        auto g = grp(s);
        WeilEngine e(g);
        for (int i = 0; i < 12; ++i) {
            auto w = random_word(rng, 3);
            CAPTURE(word_to_string(w));
            auto M = dense_word(g, w);
            for (i64 x = 0; x < g.size(); ++x) {
                auto v = e.apply(w, x);
                for (i64 y = 0; y < g.size(); ++y) {
                    auto it = v.find(y);
                    CHECK(M[y][x] == (it == v.end() ? Cyclotomic() : it->second));
                }
                if (word_s_count(w) <= 2) {
                    std::vector<i64> sup;
                    for (i64 y = 0; y < g.size(); ++y)
                        if (!M[y][x].is_zero()) sup.push_back(y);
                    CHECK(e.support(w, x) == sup);
                }
            }
        }
    }
}

TEST_CASE("engine relation checks match dense ones") {
    std::mt19937_64 rng(5);
    for (const char* s : kSmall) {
        CAPTURE(s);
        auto g = grp(s);
        WeilEngine e(g);
        CHECK(e.relation_holds(parse_word("S^-1 S"), {}));
        CHECK(e.relation_holds(parse_word("S S"), parse_word("Z")));
        CHECK(e.relation_holds(parse_word("S T S T"), parse_word("Z T^-1 S^-1")));
        CHECK_FALSE(e.relation_holds(parse_word("S"), parse_word("S^-1")) != (dense_word(g, parse_word("S")) == dense_word(g, parse_word("S^-1"))));
        for (int i = 0; i < 10; ++i) {
            auto a = random_word(rng, 2), b = random_word(rng, 2);
            CHECK(e.relation_holds(a, b) == (dense_word(g, a) == dense_word(g, b)));
        }
    }
}

TEST_CASE("scalar-permutation check against dense matrices") {
    std::mt19937_64 rng(3);
    for (const char* s : kSmall) {
        CAPTURE(s);
        auto g = grp(s);
        WeilEngine e(g);
        const i64 N = g.level();
        for (int i = 0; i < 6; ++i) {
            auto m = random_gamma0_bc(N, rng);
            auto r = gamma0_action_check(e, m);
            auto M = dense_word(g, WeilWord(r.word.rbegin(), r.word.rend()));
            Cyclotomic chi = Cyclotomic::from_root(r.scalar);
            bool dense_ok = true;
            for (i64 x = 0; x < g.size(); ++x)
                for (i64 y = 0; y < g.size(); ++y) {
                    Cyclotomic want = y == g.scale(m.m.a, x) ? chi : Cyclotomic();
                    if (M[y][x] != want) dense_ok = false;
                }
            CHECK(r.holds == dense_ok);
            CHECK(r.holds);
            CHECK(e.scalar_permutation(r.word, r.scalar, m.m.d));
        }
    }
}

TEST_CASE("level 3 example scalar") {
    auto g = grp("3^{-1}");
    auto r = gamma0_action_check(g, mp(1, 3, 3, 10));
    CHECK(r.holds);
    CHECK(Cyclotomic::from_root(r.scalar) == Cyclotomic(kronecker(10, 3)));
}

TEST_CASE("suite on small symbols") {
    for (const auto& s : enumerate_symbols(0, 40)) {
        CAPTURE(s.to_string());
        auto rep = weil_suite(realize_group(s), {6, 6, 2});
        CHECK(rep.unitary);
        CHECK(rep.s_squared);
        CHECK(rep.st_cubed);
        CHECK(rep.character_passed == rep.character_total);
        CHECK(rep.support_passed == rep.support_total);
    }
}
