#include <map>
#include <stdexcept>
#include <vector>

#include "modkit/rational.hpp"

namespace modkit {

Integer floor_of(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ceil_of(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Rational frac(const Rational& r) {
    if (r.get_den() == 1) return Rational(0);
    Rational f = r - Rational(floor_of(r));
    f.canonicalize();
    return f;
}

i64 to_i64(const Integer& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
    return z.get_si();
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view s) {
    std::string str(s);
    while (!str.empty() && str.front() == ' ') str.erase(str.begin());
    while (!str.empty() && str.back() == ' ') str.pop_back();
    if (!str.empty() && str.front() == '+') str.erase(str.begin());
    Rational r;
    if (str.empty() || r.set_str(str, 10) != 0) throw std::invalid_argument("bad rational: " + std::string(s));
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
    r.canonicalize();
    return r;
}

Rational bernoulli_any(int n) {
    if (n < 0) throw std::domain_error("bernoulli: negative index");
    std::vector<Rational> b(n + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        Rational s = 0;
        Integer binom = 1;
        for (int j = 0; j < m; ++j) {
            s += Rational(binom) * b[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        b[m] = -s / Rational(m + 1);
    }
    return b[n];
}

Rational bernoulli(int k) {
    if (k < 2 || k % 2 != 0) throw std::domain_error("bernoulli: k must be even and >= 2");
    return bernoulli_any(k);
}

i64 RootOfUnity::order() const { return to_i64(x_.get_den()); }

std::string RootOfUnity::to_string() const {
    if (x_ == 0) return "1";
    if (x_ == Rational(1, 2)) return "-1";
    if (x_ == Rational(1, 4)) return "i";
    if (x_ == Rational(3, 4)) return "-i";
    return "e(" + x_.get_str() + ")";
}

}  // namespace modkit
