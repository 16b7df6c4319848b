#include <doctest.h>

#include <random>
#include <set>

#include "modkit/arith.hpp"
#include "modkit/gamma0.hpp"

using namespace modkit;

namespace {

i64 projective_line_size(i64 N) {
    std::set<std::pair<i64, i64>> pts;
    for (i64 c = 0; c < N; ++c)
        for (i64 d = 0; d < N; ++d) {
            if (gcd(gcd(c, d), N) != 1) continue;
            std::pair<i64, i64> best{N, N};
            for (i64 u = 1; u < N || (N == 1 && u == 1); ++u) {
                if (gcd(u, N) != 1) continue;
                best = std::min(best, std::pair<i64, i64>{u * c % N, u * d % N});
            }
            pts.insert(best);
        }
    return static_cast<i64>(pts.size());
}

i64 count_roots(i64 N, i64 b, i64 c) {
    i64 n = 0;
    for (i64 x = 0; x < N; ++x) n += mod(x * x + b * x + c, N) == 0;
    return n;
}

MetaplecticElement random_gamma0(std::mt19937_64& rng, i64 N) {
    while (true) {
        i64 c = N * (static_cast<i64>(rng() % 9) - 4);
        i64 d = static_cast<i64>(rng() % 61) - 30;
        if (gcd(c, d) != 1) continue;
        i64 x = 0, y = 0;
        ext_gcd(d, c, x, y);
        i64 k = static_cast<i64>(rng() % 7) - 3;
        return mp(x + k * c, -y + k * d, c, d, rng() % 2 ? 1 : -1);
    }
}

}  // namespace

TEST_CASE("gamma0 table rows") {
    auto d12 = gamma0_data(12);
    CHECK(d12.index == 24);
    CHECK(d12.nu2 == 0);
    CHECK(d12.nu3 == 0);
    CHECK(d12.cusps.size() == 6);
    CHECK(d12.genus == 0);
    auto d17 = gamma0_data(17);
    CHECK(d17.index == 18);
    CHECK(d17.nu2 == 2);
    CHECK(d17.nu3 == 0);
    CHECK(d17.cusps.size() == 2);
    CHECK(d17.genus == 1);
    auto d23 = gamma0_data(23);
    CHECK(d23.index == 24);
    CHECK(d23.cusps.size() == 2);
    CHECK(d23.genus == 2);
}

TEST_CASE("index and elliptic counts against brute force") {
    for (i64 N = 1; N <= 60; ++N) {
        CAPTURE(N);
        CHECK(gamma0_index(N) == projective_line_size(N));
        CHECK(gamma0_nu2(N) == count_roots(N, 0, 1));
        CHECK(gamma0_nu3(N) == count_roots(N, 1, 1));
        auto d = gamma0_data(N);
        i64 wsum = 0;
        for (const auto& c : d.cusps) wsum += c.width;
        CHECK(wsum == d.index);
        CHECK(12 * d.genus == 12 + d.index - 3 * d.nu2 - 4 * d.nu3 - 6 * static_cast<i64>(d.cusps.size()));
    }
}

TEST_CASE("cusp representatives") {
    auto c12 = cusp_representatives(12);
    std::multiset<i64> widths;
    for (const auto& c : c12) widths.insert(c.width);
    CHECK(widths == std::multiset<i64>{12, 3, 4, 3, 1, 1});
    auto c18 = cusp_representatives(18);
    CHECK(c18.size() == 8);
    std::set<std::pair<i64, i64>> reps;
    for (const auto& c : c18) reps.insert({c.a, c.c});
    CHECK(reps.count({1, 3}));
    CHECK(reps.count({2, 3}));
    CHECK(reps.count({1, 6}));
    CHECK(reps.count({5, 6}));
    CHECK(cusp_representatives(1).size() == 1);
}

TEST_CASE("cusp classes are invariant under Gamma_0(N)") {
    std::mt19937_64 rng(5);
    for (i64 N : {4, 9, 12, 18, 25, 36, 50, 60}) {
        auto reps = cusp_representatives(N);
        for (std::size_t i = 0; i < reps.size(); ++i) {
            CHECK(cusp_class_of(N, reps[i].a, reps[i].c) == i);
            for (int t = 0; t < 10; ++t) {
                auto g = random_gamma0(rng, N);
                auto [a2, c2] = act_on_cusp(g.m, reps[i].a, reps[i].c);
                CHECK(cusp_class_of(N, a2, c2) == i);
            }
            auto p = parabolic_generator(N, reps[i].a, reps[i].c);
            CHECK(in_gamma0(p.m, N));
            auto fixed = act_on_cusp(p.m, reps[i].a, reps[i].c);
            CHECK(fixed == std::pair<i64, i64>{reps[i].a, reps[i].c});
        }
    }
}

TEST_CASE("parabolic generator examples") {
    auto inf = parabolic_generator(1, 1, 0);
    CHECK(inf.m == Mat2{1, -1, 0, 1});
    CHECK(inf.branch == 1);
    auto half = parabolic_generator(4, 1, 2);
    CHECK(half.m == Mat2{3, -1, 4, -1});
    CHECK_THROWS(parabolic_generator(4, 2, 2));
}

TEST_CASE("metaplectic relations") {
    auto S = mp_S(), T = mp_T(), Z = mp_Z();
    CHECK(S * S == Z);
    CHECK((S * T).pow(3) == Z);
    CHECK(Z.pow(2).m == Mat2{});
    CHECK(Z.pow(2).branch == -1);
    CHECK(Z.pow(4) == MetaplecticElement{});
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        auto a = random_gamma0(rng, 1), b = random_gamma0(rng, 1), c = random_gamma0(rng, 1);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * a.inverse() == MetaplecticElement{});
    }
}

TEST_CASE("lift of Gamma_1(4) is a homomorphism") {
    std::mt19937_64 rng(9);
    for (i64 N : {4, 8, 12, 16, 20}) {
        std::vector<Mat2> pool;
        while (pool.size() < 30) {
            auto g = random_gamma0(rng, N).m;
            if (mod(g.d, 4) == 1) pool.push_back(g);
        }
        CHECK(mp_lift(Mat2{}, N) == MetaplecticElement{});
        for (std::size_t i = 0; i + 1 < pool.size(); ++i) {
            auto x = pool[i], y = pool[i + 1];
            CHECK(mp_lift(x * y, N) == mp_lift(x, N) * mp_lift(y, N));
        }
        CHECK_THROWS(mp_lift(Mat2{1, 0, 1, 1}, N));
    }
}
