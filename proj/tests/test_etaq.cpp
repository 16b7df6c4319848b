#include <doctest.h>

#include <complex>
#include <random>
#include <set>

#include "modkit/arith.hpp"
#include "modkit/etaq.hpp"
#include "modkit/gamma0.hpp"

using namespace modkit;

namespace {

using cd = std::complex<double>;
const double kPi = std::acos(-1.0);

cd e_of(cd z) { return std::exp(cd(0, 2 * kPi) * z); }

// Product formula, truncated once the terms are negligible.
cd eta_numeric(cd tau) {
    cd v = e_of(tau / 24.0);
    for (int n = 1; n < 400; ++n) v *= 1.0 - e_of(tau * static_cast<double>(n));
    return v;
}

cd eta_quotient_numeric(const EtaQuotient& e, cd tau) {
    cd v = 1;
    for (auto [d, r] : e.r) v *= std::pow(eta_numeric(tau * static_cast<double>(d)), static_cast<double>(r));
    return v;
}

cd series_numeric(const QSeries& s, cd tau) {
    cd v = 0;
    for (const auto& [k, c] : s.terms()) v += c.get_d() * e_of(tau * (static_cast<double>(k) / static_cast<double>(s.denominator())));
    return v;
}

cd prefactor_numeric(const EtaPrefactor& p, cd tau) {
    return std::pow(tau, p.tau_power.get_d()) * e_of(p.phase.exponent().get_d()) * std::sqrt(p.radicand.get_d());
}

EtaQuotient eq(i64 N, const std::string& s) { return EtaQuotient::parse(N, s); }

// Direct scan of a box of exponent vectors.
std::set<std::vector<i64>> brute_classify(i64 N, i64 bound) {
    std::set<std::vector<i64>> out;
    const auto ds = divisors(N);
    const auto cusps = cusp_representatives(N);
    std::vector<i64> r(ds.size(), -bound);
    while (true) {
        std::map<i64, i64> ex;
        for (std::size_t i = 0; i < ds.size(); ++i) ex[ds[i]] = r[i];
        EtaQuotient e(N, ex);
        if (!e.is_constant() && e.admissible()) {
            bool ok = true;
            for (const auto& c : cusps) {
                Rational o = etaq_order_at_cusp(e, c.c);
                if (o < 0 || o > 1) ok = false;
            }
            if (ok) out.insert(e.vector());
        }
        std::size_t i = 0;
        while (i < r.size() && r[i] == bound) r[i++] = -bound;
        if (i == r.size()) break;
        ++r[i];
    }
    return out;
}

}  // namespace

TEST_CASE("parse and print") {
    auto e = eq(4, "1^{-2}2^{5}4^{-2}");
    CHECK(e == eq(4, "1:-2,2:5,4:-2"));
    CHECK(e.exponent_string() == "1:-2,2:5,4:-2");
    CHECK(e.to_string() == "1^{-2} 2^{5} 4^{-2}");
    CHECK(eq(6, "1^{ 6} 2^{-3} 3^{-2} 6^{ 1}").vector() == std::vector<i64>{6, -3, -2, 1});
    CHECK_THROWS(eq(4, "3:1"));
    CHECK_THROWS(eq(4, "1:1,1:2"));
    CHECK(eq(4, "1:0").is_constant());
}

TEST_CASE("weight and character") {
    auto d23 = etaq_weight_char(eq(23, "1:1,23:1"));
    CHECK(d23.weight == 1);
    CHECK(d23.chi == CharacterSpec(23, 0, 23));
    auto delta = etaq_weight_char(eq(1, "1:24"));
    CHECK(delta.weight == 12);
    CHECK(delta.chi.is_trivial());
    auto th = etaq_weight_char(eq(4, "1:-2,2:5,4:-2"));
    CHECK(th.weight == make_rational(1, 2));
    CHECK(th.chi == CharacterSpec(4, 1, 1));
    CHECK(etaq_weight_char(eq(4, "1:-2,2:5,4:-2"), 8).chi == th.chi);
    CHECK_THROWS(etaq_weight_char(eq(4, "1:-2,2:5,4:-2"), 3));
    CHECK_THROWS(etaq_weight_char(eq(2, "1:1")));
    CHECK(eq(3, "1:-3,3:9").admissible());
    CHECK_FALSE(eq(3, "1:1,3:1").admissible());
}

TEST_CASE("orders at cusps") {
    CHECK(etaq_order_at_cusp(eq(4, "1:-2,2:5,4:-2"), 2) == make_rational(1, 4));
    CHECK(etaq_order_at_cusp(eq(2, "1:16,2:-8"), 1) == 1);
    CHECK(etaq_order_at_cusp(eq(1, "1:24"), 1) == 1);
    CHECK(etaq_order_raw(eq(2, "1:16,2:-8"), 1) == make_rational(1, 2));
}

TEST_CASE("valence formula and cusp character") {
    std::mt19937_64 rng(9);
    for (i64 N : {1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 16, 18, 20, 25}) {
        const auto ds = divisors(N);
        const auto data = gamma0_data(N);
        int seen = 0;
        for (int it = 0; it < 400 && seen < 40; ++it) {
            std::map<i64, i64> ex;
            for (i64 d : ds) ex[d] = static_cast<i64>(rng() % 25) - 12;
            EtaQuotient e(N, ex);
            if (!e.admissible()) continue;
            ++seen;
            Rational total = 0;
            auto wc = etaq_weight_char(e);
            for (const auto& c : data.cusps) {
                Rational o = etaq_order_at_cusp(e, c.c);
                total += o;
                CHECK(RootOfUnity(-o) == char_at_cusp(wc.chi, c.a, c.c));
            }
            CHECK(total == e.weight() * Rational(static_cast<long>(data.index)) / 12);
        }
    }
}

TEST_CASE("expansion at infinity") {
    auto s = etaq_expand_infinity(eq(3, "1:-3,3:9"), 6);
    std::vector<int> want{0, 1, 3, 9, 13, 24};
    for (int n = 0; n < 6; ++n) CHECK(s.coefficient(n) == want[n]);
    auto inv = etaq_expand_infinity(eq(1, "1:-24"), 2);
    CHECK(inv.coefficient(-1) == 1);
    CHECK(inv.coefficient(0) == 24);
    CHECK(inv.coefficient(1) == 324);
}

TEST_CASE("expansion at zero against numeric evaluation") {
    const cd tau(0.137, 1.31);
    for (auto [N, text] : std::vector<std::pair<i64, std::string>>{
             {1, "1:24"}, {3, "1:-3,3:9"}, {4, "1:-2,2:5,4:-2"}, {6, "1:1,2:-2,3:-3,6:6"}, {2, "1:16,2:-8"}, {8, "2:-2,4:5,8:-2"}}) {
        CAPTURE(text);
        auto e = eq(N, text);
        auto z = etaq_expand_zero(e, 8);
        cd lhs = eta_quotient_numeric(e, -1.0 / tau);
        cd rhs = prefactor_numeric(z.prefactor, tau) * series_numeric(z.series, tau);
        CHECK(std::abs(lhs - rhs) < 1e-9 * std::abs(lhs));
        cd c = z.prefactor.constant().embed();
        CHECK(std::abs(c - e_of(z.prefactor.phase.exponent().get_d()) * std::sqrt(z.prefactor.radicand.get_d())) < 1e-12);
    }
    auto d = etaq_expand_zero(eq(1, "1:24"), 4);
    CHECK(d.prefactor.tau_power == 12);
    CHECK(d.prefactor.constant() == Cyclotomic(1));
    CHECK(d.series == etaq_expand_infinity(eq(1, "1:24"), 4));
}

TEST_CASE("Fricke involution") {
    const cd tau(-0.21, 0.93);
    for (auto [N, text] : std::vector<std::pair<i64, std::string>>{{4, "1:-2,2:5,4:-2"}, {6, "1:7,2:-5,3:-5,6:7"}, {3, "1:-3,3:9"}}) {
        auto e = eq(N, text);
        auto [p1, f1] = etaq_fricke(e);
        auto [p2, f2] = etaq_fricke(f1);
        CHECK(f2 == e);
        cd w = -1.0 / (static_cast<double>(N) * tau);
        CHECK(std::abs(eta_quotient_numeric(e, w) - prefactor_numeric(p1, tau) * eta_quotient_numeric(f1, tau)) <
              1e-9 * std::abs(eta_quotient_numeric(e, w)));
    }
}

TEST_CASE("bounded classifier") {
    auto one = classify_bounded(1, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == eq(1, "1:24"));
    for (auto [N, bound] : std::vector<std::pair<i64, i64>>{{2, 24}, {3, 24}, {4, 24}, {6, 10}}) {
        CAPTURE(N);
        std::set<std::vector<i64>> got;
        for (const auto& e : classify_bounded(N, 1)) {
            got.insert(e.vector());
            for (i64 x : e.vector()) CHECK(std::abs(x) <= bound);
        }
        CHECK(got == brute_classify(N, bound));
    }
}

TEST_CASE("level 6 list") {
    std::set<EtaQuotient> printed;
    for (const char* s : {"1^{ 6} 2^{-3} 3^{-2} 6^{ 1}", "1^{-3} 2^{ 6} 3^{ 1} 6^{-2}", "1^{-2} 2^{ 1} 3^{ 6} 6^{-3}",
                          "1^{ 1} 2^{-2} 3^{-3} 6^{ 6}", "1^{ 3} 2^{ 3} 3^{-1} 6^{-1}", "1^{-1} 2^{-1} 3^{ 3} 6^{ 3}",
                          "1^{ 4} 2^{-2} 3^{ 4} 6^{-2}", "1^{-2} 2^{ 4} 3^{-2} 6^{ 4}", "1^{ 7} 2^{-5} 3^{-5} 6^{ 7}",
                          "1^{-5} 2^{ 7} 3^{ 7} 6^{-5}", "1^{ 1} 2^{ 4} 3^{ 5} 6^{-4}", "1^{ 4} 2^{ 1} 3^{-4} 6^{ 5}",
                          "1^{ 5} 2^{-4} 3^{ 1} 6^{ 4}", "1^{-4} 2^{ 5} 3^{ 4} 6^{ 1}", "1^{ 2} 2^{ 2} 3^{ 2} 6^{ 2}"})
        printed.insert(eq(6, s));
    auto got = classify_bounded(6, 1);
    CHECK(std::set<EtaQuotient>(got.begin(), got.end()) == printed);
}

TEST_CASE("level 4 bounded quotients") {
    auto got = classify_bounded(4, 1);
    CHECK(got.size() == 19);
    int three_quarters = 0;
    for (const auto& e : got)
        if (etaq_order_at_cusp(e, 2) == make_rational(3, 4)) ++three_quarters;
    CHECK(three_quarters == 4);
    std::set<EtaQuotient> s(got.begin(), got.end());
    CHECK(s.count(eq(4, "1:-2,2:5,4:-2")));
    CHECK(s.count(eq(4, "2:12")));
    CHECK_FALSE(s.count(eq(4, "2:-12")));
}
