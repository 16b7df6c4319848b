#include <doctest.h>

#include "modkit/qseries.hpp"

using namespace modkit;

namespace {

Rational R(i64 n, i64 d = 1) { return make_rational(n, d); }

// Counts integer vectors by exhaustive search in a box.
std::vector<i64> theta_oracle(const std::vector<std::vector<i64>>& gram, int box, int terms) {
    const int n = static_cast<int>(gram.size());
    std::vector<i64> out(terms, 0);
    std::vector<i64> x(n, -box);
    while (true) {
        i64 norm = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) norm += x[i] * gram[i][j] * x[j];
        if (norm % 2 == 0 && norm / 2 < terms) ++out[norm / 2];
        int i = 0;
        while (i < n && x[i] == box) x[i++] = -box;
        if (i == n) break;
        ++x[i];
    }
    return out;
}

std::vector<i64> pentagonal_oracle(int terms) {
    std::vector<i64> c(terms, 0);
    for (i64 k = -terms; k <= terms; ++k) {
        i64 e = k * (3 * k - 1) / 2;
        if (e >= 0 && e < terms) c[e] += (k % 2 == 0) ? 1 : -1;
    }
    return c;
}

}  // namespace

TEST_CASE("eta series against the pentagonal number theorem") {
    auto eta = eta_series(1, R(60));
    auto pent = pentagonal_oracle(59);
    for (int n = 0; n < 59; ++n) CHECK(eta.coefficient(R(24 * n + 1, 24)) == pent[n]);
    for (const auto& [k, c] : eta.terms()) CHECK((c == 1 || c == -1));
}

TEST_CASE("delta and its inverse") {
    auto delta = eta_series(1, R(8)).with_denominator(24);
    QSeries d24 = eta_product({{1, 24}}, R(8));
    const i64 tau[] = {1, -24, 252, -1472, 4830, -6048, -16744};
    for (int n = 1; n <= 7; ++n) CHECK(d24.coefficient(R(n)) == tau[n - 1]);
    auto inv = d24.inverse();
    CHECK(inv.valuation() == R(-1));
    CHECK(inv.coefficient(R(-1)) == 1);
    CHECK(inv.coefficient(R(0)) == 24);
    CHECK(inv.coefficient(R(1)) == 324);
    auto one = d24 * inv;
    CHECK(one.coefficient(R(0)) == 1);
    for (int n = 1; n < 6; ++n) CHECK(one.coefficient(R(n)) == 0);
    auto p = delta.truncated(R(8));
    CHECK(p.coefficient(R(1, 24)) == 1);
}

TEST_CASE("eta quotient of level 3 equals E_3(chi_3)") {
    auto f = eta_product({{1, -3}, {3, 9}}, R(6));
    const i64 want[] = {1, 3, 9, 13, 24};
    for (int n = 1; n <= 5; ++n) CHECK(f.coefficient(R(n)) == want[n - 1]);
    auto chi3 = DirichletCharacter::kronecker_char(-3, 3);
    auto e3 = to_rational(eisenstein_chi(3, chi3, R(12)));
    auto f12 = eta_product({{1, -3}, {3, 9}}, R(12));
    for (int n = 0; n < 12; ++n) CHECK(e3.coefficient(R(n)) == f12.coefficient(R(n)));
    CHECK_THROWS(eisenstein_chi(2, chi3, R(5)));
}

TEST_CASE("lattice theta series") {
    auto a1 = lattice_theta(GramMatrix::from_int(1, {2}), R(9));
    auto a1o = theta_oracle({{2}}, 4, 9);
    for (int n = 0; n < 9; ++n) CHECK(a1.coefficient(R(n)) == a1o[n]);
    CHECK(a1.coefficient(R(1)) == 2);
    CHECK(a1.coefficient(R(4)) == 2);

    auto a2 = lattice_theta(gram_A(2), R(7));
    auto a2o = theta_oracle({{2, -1}, {-1, 2}}, 6, 7);
    for (int n = 0; n < 7; ++n) CHECK(a2.coefficient(R(n)) == a2o[n]);

    auto d4 = lattice_theta(gram_D(4), R(4));
    const auto& g = gram_D(4);
    std::vector<std::vector<i64>> gi(4, std::vector<i64>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) gi[i][j] = to_i64(g.at(i, j).get_num());
    auto d4o = theta_oracle(gi, 3, 4);
    for (int n = 0; n < 4; ++n) CHECK(d4.coefficient(R(n)) == d4o[n]);
    CHECK(d4.coefficient(R(1)) == 24);
    CHECK(d4.coefficient(R(2)) == 24);
    for (const auto& [k, c] : d4.terms())
        if (k != 0) CHECK(mpz_class(c.get_num()) % 2 == 0);

    CHECK_THROWS(lattice_theta(GramMatrix::from_int(2, {2, 3, 3, 2}), R(3)));
}

TEST_CASE("eisenstein series") {
    auto e4 = eisenstein_level1(4, R(4));
    CHECK(e4.coefficient(R(0)) == 1);
    CHECK(e4.coefficient(R(1)) == 240);
    CHECK(e4.coefficient(R(2)) == 2160);
    auto e6 = eisenstein_level1(6, R(3));
    CHECK(e6.coefficient(R(1)) == -504);
    CHECK_THROWS(eisenstein_level1(5, R(3)));

    auto e2 = eisenstein_level1(2, R(12));
    QSeries e2x2(1, R(12));
    for (const auto& [k, c] : e2.terms()) e2x2.set(2 * k, c);
    auto combo = e2.scaled(R(-1)) + e2x2.scaled(R(2));
    auto d4 = lattice_theta(gram_D(4), R(12));
    for (int n = 0; n < 12; ++n) CHECK(combo.coefficient(R(n)) == d4.coefficient(R(n)));

    auto chi3 = DirichletCharacter::kronecker_char(-3, 3);
    auto e1 = to_rational(eisenstein_weight1(chi3, R(7)));
    auto a2 = lattice_theta(gram_A(2), R(7));
    for (int n = 0; n < 7; ++n) CHECK(e1.coefficient(R(n)) == a2.coefficient(R(n)));
    CHECK_THROWS(eisenstein_weight1(DirichletCharacter::kronecker_char(5, 5), R(4)));

    for (const auto& chi : dirichlet_characters(5)) {
        if (chi.is_principal() || !chi.is_even()) continue;
        CHECK(eisenstein_chi(2, chi, R(3)).coefficient(R(1)) == Cyclotomic(1));
    }
}

TEST_CASE("precision bookkeeping") {
    auto a = eta_series(1, R(10));
    auto b = eta_series(2, R(7));
    auto prod = a * b;
    auto prod_hi = eta_series(1, R(20)) * eta_series(2, R(20));
    REQUIRE(prod.precision());
    for (const auto& [k, c] : prod_hi.terms()) {
        Rational e = prod_hi.exponent_of(k);
        if (e < *prod.precision()) CHECK(prod.coefficient(e) == c);
    }
    auto sum = a + b;
    CHECK(*sum.precision() == R(7));
    auto x = eta_product({{1, 1}, {2, 1}}, R(5));
    auto rt = qseries_from_json(qseries_to_json(x));
    CHECK(rt == x);
}
