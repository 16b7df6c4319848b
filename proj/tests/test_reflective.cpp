#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "modkit/arith.hpp"
#include "modkit/dims.hpp"
#include "modkit/etaq.hpp"
#include "modkit/reflective.hpp"
#include "modkit/weil.hpp"

using namespace modkit;

namespace {

const CuspClass& cusp_at(const Gamma0Data& d, i64 a, i64 c) { return d.cusps[cusp_class_of(d.N, a, c)]; }

std::set<Rational> local_orders(const std::vector<SingularitySlot>& slots) {
    std::set<Rational> out;
    for (const auto& s : slots) out.insert(s.local_order());
    return out;
}

std::set<Rational> ints(std::initializer_list<long> xs) {
    std::set<Rational> out;
    for (long x : xs) out.insert(Rational(x));
    return out;
}

const CandidateReport* find(const std::vector<CandidateReport>& rs, const std::string& sym, int sig) {
    for (const auto& r : rs)
        if (r.symbol.to_string() == sym && r.signature == sig) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("allowed exponents") {
    auto d1 = gamma0_data(1);
    auto a1 = allowed_exponents(1, CharacterSpec(1, 0, 1), d1.cusps[0]);
    CHECK(a1.offset == 0);
    CHECK(a1.spacing == 1);
    auto d4 = gamma0_data(4);
    auto a4 = allowed_exponents(4, CharacterSpec(4, 1, 1), cusp_at(d4, 1, 2));
    CHECK(a4.offset == make_rational(1, 4));
    CHECK(a4.spacing == 1);
    auto d2 = gamma0_data(2);
    auto a2 = allowed_exponents(2, CharacterSpec(2, 0, 1), cusp_at(d2, 0, 1));
    CHECK(a2.offset == 0);
    CHECK(a2.spacing == make_rational(1, 2));
    CHECK(a2.contains(make_rational(-1, 2)));
    CHECK_FALSE(a2.contains(make_rational(-1, 4)));
}

TEST_CASE("eta quotient orders lie in the allowed exponents") {
    std::mt19937_64 rng(17);
    for (i64 N = 1; N <= 16; ++N) {
        const auto ds = divisors(N);
        const auto data = gamma0_data(N);
        int seen = 0;
        for (int it = 0; it < 300 && seen < 25; ++it) {
            std::map<i64, i64> ex;
            for (i64 d : ds) ex[d] = static_cast<i64>(rng() % 13) - 6;
            EtaQuotient e(N, ex);
            if (!e.admissible()) continue;
            ++seen;
            const auto wc = etaq_weight_char(e);
            for (const auto& c : data.cusps) {
                CAPTURE(e.to_string());
                CAPTURE(c.label);
                Rational order = etaq_order_at_cusp(e, c.c);
                CHECK(allowed_exponents(N, wc.chi, c).contains(order / Rational(static_cast<long>(c.width))));
            }
        }
    }
}

TEST_CASE("reflective orders") {
    auto d1 = gamma0_data(1);
    auto trivial = reflective_orders(realize_group(GenusSymbol()), 1, d1.cusps[0]);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].exponent == -1);
    CHECK(trivial[0].why == Justification::hall_divisor);

    auto d3 = gamma0_data(3);
    auto a3 = realize_group(GenusSymbol::parse("3^{-1}"));
    CHECK(local_orders(reflective_orders(a3, 3, cusp_at(d3, 0, 1))) == ints({1, 3}));
    CHECK(local_orders(reflective_orders(a3, 3, cusp_at(d3, 1, 3))) == ints({1}));

    auto d5 = gamma0_data(5);
    auto plus = realize_group(GenusSymbol::parse("5^{+1}"));
    auto minus = realize_group(GenusSymbol::parse("5^{-1}"));
    const auto& zero5 = cusp_at(d5, 0, 1);
    CHECK(local_orders(reflective_orders(plus, 5, zero5)) == ints({1, 4, 5}));
    ReflectiveOptions strict{PoleRule::unit_fraction};
    CHECK(local_orders(reflective_orders(plus, 5, zero5, strict)) == ints({1, 5}));
    CHECK(local_orders(reflective_orders(minus, 5, zero5, strict)) == ints({1, 5}));

    ReflectiveOptions tiny;
    tiny.budget = 2;
    CHECK_THROWS_AS(reflective_orders(a3, 3, cusp_at(d3, 0, 1), tiny), BudgetExceeded);
    CHECK_THROWS(reflective_orders(a3, 2, gamma0_data(2).cusps[0]));
}

TEST_CASE("level 4 exponent 2 forms") {
    auto d = gamma0_data(4);
    const auto& half = cusp_at(d, 1, 2);
    const auto& zero = cusp_at(d, 0, 1);
    ReflectiveOptions strict{PoleRule::unit_fraction};
    int checked = 0;
    for (const auto& s : enumerate_symbols(4, 256)) {
        const auto A = realize_group(s);
        bool exponent_two = true;
        for (i64 o : A.orders()) exponent_two = exponent_two && o == 2;
        if (!exponent_two || A.level() != 4) continue;
        ++checked;
        CAPTURE(s.to_string());
        const auto chi = chi_of_discriminant_form(A.size(), s.signature(), 4);
        // poles of order 1/4 and 1/2 at the cusp 1/2 are reflective whenever allowed
        for (const Rational x : {make_rational(-1, 4), make_rational(-1, 2)}) {
            bool allowed = allowed_exponents(4, chi, half).contains(x);
            bool listed = false;
            for (const auto& sl : reflective_orders(A, 4, half, strict)) listed = listed || sl.exponent == x;
            CHECK(listed == allowed);
        }
        // at the cusp 0, q^{-1} is reflective iff 0 is the only norm 0 element
        bool norm_zero = false;
        for (i64 g = 1; g < A.size(); ++g) norm_zero = norm_zero || A.quad(g) == 0;
        if (allowed_exponents(4, chi, zero).contains(Rational(-1))) CHECK(pole_is_reflective(A, 1, Rational(-1)) == !norm_zero);
        CHECK(pole_is_reflective(A, 1, make_rational(-1, 4)));
        CHECK(pole_is_reflective(A, 1, make_rational(-1, 2)));
    }
    CHECK(checked > 0);
}

TEST_CASE("hall divisor fast path agrees with the norm check") {
    i64 cases = 0;
    for (i64 N = 1; N <= 30; ++N) {
        const auto data = gamma0_data(N);
        for (const auto& s : enumerate_symbols(N, 1000)) {
            const auto A = realize_group(s);
            if (A.level() != N) continue;
            for (const auto& c : data.cusps) {
                if (!is_hall_divisor(gcd(c.c, N), N)) continue;
                ++cases;
                CAPTURE(s.to_string());
                CAPTURE(c.label);
                CHECK(pole_is_reflective(A, c.c, make_rational(-1, c.width)));
            }
        }
    }
    CHECK(cases > 100);
}

TEST_CASE("equivalent cusps give the same slots") {
    for (i64 N : {4, 6, 8, 9, 12, 16, 18}) {
        const auto data = gamma0_data(N);
        int checked = 0;
        for (const auto& s : enumerate_symbols(N, 64)) {
            if (++checked > 6) break;
            const auto A = realize_group(s);
            for (i64 c = 1; c <= 2 * N; ++c)
                for (i64 a = 0; a < c + N; ++a) {
                    if (gcd(a, c) != 1) continue;
                    const auto& rep = data.cusps[cusp_class_of(N, a, c)];
                    CuspClass alt = rep;
                    alt.a = a;
                    alt.c = c;
                    CAPTURE(s.to_string());
                    CAPTURE(N);
                    CAPTURE(a);
                    CAPTURE(c);
                    std::set<Rational> x, y;
                    for (const auto& sl : reflective_orders(A, N, rep)) x.insert(sl.exponent);
                    for (const auto& sl : reflective_orders(A, N, alt)) y.insert(sl.exponent);
                    CHECK(x == y);
                }
        }
    }
}

TEST_CASE("existence bounds") {
    auto leech = existence_bound(GenusSymbol(), -24);
    CHECK(leech.slot_count() == 1);
    CHECK(leech.obstruction == 0);
    CHECK(leech.verdict == Verdict::guaranteed);
    CHECK(leech.weight == -12);
    auto beyond = existence_bound(GenusSymbol(), -32);
    CHECK(beyond.slot_count() == 1);
    CHECK(beyond.obstruction == 1);
    CHECK(beyond.verdict == Verdict::undecided);

    // weight -7, character chi_3: q^{-1} at infinity, q_3^{-1} and q_3^{-3} at 0 against S_9(chi_3)
    auto r3 = existence_bound(GenusSymbol::parse("3^{-1}"), -14);
    CHECK(r3.weight == -7);
    CHECK(r3.chi == CharacterSpec(3, 0, 3));
    CHECK(r3.slot_count() == 3);
    CHECK(r3.obstruction == 2);
    CHECK(r3.verdict == Verdict::guaranteed);

    auto r5 = existence_bound(GenusSymbol::parse("5^{+1}"), -12);
    CHECK(r5.slot_count() == 4);
    CHECK(r5.obstruction == 2);

    CHECK_THROWS(existence_bound(GenusSymbol(), -12));
    CHECK_THROWS(existence_bound(GenusSymbol::parse("3^{-1}"), -14, 5));

    // weight one obstruction outside the known table
    auto gap = existence_bound(GenusSymbol::parse("31^{+1}"), 2);
    CHECK(gap.weight == 1);
    CHECK_FALSE(gap.obstruction.has_value());
    CHECK(gap.verdict == (gap.slots.empty() ? Verdict::none : Verdict::undecided));
}

TEST_CASE("search regressions") {
    auto r1 = search(1, -32, 0, {1});
    REQUIRE(r1.size() == 5);
    for (int sig : {-24, -16, -8}) CHECK(find(r1, "1", sig)->verdict == Verdict::guaranteed);
    CHECK(find(r1, "1", -32)->verdict == Verdict::undecided);

    auto r5 = search(5, -8, -8, {25});
    REQUIRE(find(r5, "5^{-1}", -8));
    CHECK(find(r5, "5^{-1}", -8)->verdict == Verdict::guaranteed);

    auto r23 = search(23, -2, 0, {23});
    int level23 = 0;
    for (const auto& r : r23) {
        if (r.symbol.level() != 23) continue;
        ++level23;
        CHECK(r.verdict == Verdict::guaranteed);
    }
    CHECK(level23 > 0);

    // the bound alone is not sharp here: 1 / eta(tau) eta(23 tau) exists but 3 slots meet 3 obstructions
    SearchOptions strict{23};
    strict.reflective.rule = PoleRule::unit_fraction;
    auto s23 = search(23, -2, -2, strict);
    REQUIRE(find(s23, "23^{-1}", -2));
    CHECK(find(s23, "23^{-1}", -2)->slot_count() == 3);
    CHECK(find(s23, "23^{-1}", -2)->verdict == Verdict::undecided);
}

TEST_CASE("search properties") {
    auto small = search(6, -8, 0, {12});
    auto large = search(6, -8, 0, {36});
    for (const auto& r : small) {
        const auto* other = find(large, r.symbol.to_string(), r.signature);
        REQUIRE(other);
        CHECK(other->slot_count() == r.slot_count());
        CHECK(other->obstruction == r.obstruction);
    }
    CHECK(large.size() >= small.size());
    auto serial = search(6, -8, 0, {36, {}, 1});
    REQUIRE(serial.size() == large.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].symbol == large[i].symbol);
        CHECK(serial[i].signature == large[i].signature);
        CHECK(serial[i].verdict == large[i].verdict);
    }
    for (const auto& r : large) {
        CHECK(r.weight * 2 == r.signature);
        CHECK(r.N == 6);
        bool consistent = r.slots.empty() ? r.verdict == Verdict::none
                          : r.obstruction && r.slot_count() > *r.obstruction ? r.verdict == Verdict::guaranteed
                                                                             : r.verdict == Verdict::undecided;
        CHECK(consistent);
    }
}
