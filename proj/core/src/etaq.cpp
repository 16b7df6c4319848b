#include "modkit/etaq.hpp"

#include <functional>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "modkit/arith.hpp"
#include "modkit/discforms.hpp"
#include "modkit/gamma0.hpp"

namespace modkit {

EtaQuotient::EtaQuotient(i64 level, std::map<i64, i64> exponents) : N(level) {
    if (N < 1) throw std::invalid_argument("eta quotient level must be positive");
    for (auto [d, e] : exponents) {
        if (d < 1 || N % d != 0) throw std::invalid_argument("eta exponent index " + std::to_string(d) + " does not divide " + std::to_string(N));
        if (e != 0) r[d] = e;
    }
}

EtaQuotient EtaQuotient::parse(i64 level, const std::string& text) {
    std::map<i64, i64> ex;
    auto put = [&](i64 d, i64 e) {
        if (!ex.emplace(d, e).second) throw std::invalid_argument("repeated eta index " + std::to_string(d));
    };
    if (text.find(':') != std::string::npos) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos) throw std::invalid_argument("bad exponent item: " + item);
            put(std::stoll(item.substr(0, colon)), std::stoll(item.substr(colon + 1)));
        }
    } else {
        static const std::regex term(R"((\d+)\s*\^\s*\{?\s*([+-]?\s*\d+)\s*\}?)");
        std::string rest = text;
        std::smatch m;
        while (std::regex_search(rest, m, term)) {
            std::string ex_str = m[2].str();
            ex_str.erase(std::remove(ex_str.begin(), ex_str.end(), ' '), ex_str.end());
            put(std::stoll(m[1].str()), std::stoll(ex_str));
            std::string gap = m.prefix().str();
            if (gap.find_first_not_of(" ") != std::string::npos) throw std::invalid_argument("bad eta quotient: " + text);
            rest = m.suffix().str();
        }
        if (rest.find_first_not_of(" ") != std::string::npos && rest != "1") throw std::invalid_argument("bad eta quotient: " + text);
    }
    return EtaQuotient(level, ex);
}

std::string EtaQuotient::to_string() const {
    if (r.empty()) return "1";
    std::string s;
    for (auto [d, e] : r) {
        if (!s.empty()) s += " ";
        s += std::to_string(d) + "^{" + std::to_string(e) + "}";
    }
    return s;
}

std::string EtaQuotient::exponent_string() const {
    std::string s;
    for (auto [d, e] : r) {
        if (!s.empty()) s += ",";
        s += std::to_string(d) + ":" + std::to_string(e);
    }
    return s;
}

i64 EtaQuotient::exponent(i64 delta) const {
    auto it = r.find(delta);
    return it == r.end() ? 0 : it->second;
}

std::vector<i64> EtaQuotient::vector() const {
    std::vector<i64> v;
    for (i64 d : divisors(N)) v.push_back(exponent(d));
    return v;
}

bool EtaQuotient::admissible() const {
    i64 a = 0, b = 0;
    for (auto [d, e] : r) {
        a += e * d;
        b += e * (N / d);
    }
    return mod(a, 24) == 0 && mod(b, 24) == 0;
}

i64 EtaQuotient::two_weight() const {
    i64 s = 0;
    for (auto [d, e] : r) s += e;
    return s;
}

EtaQuotient EtaQuotient::operator*(const EtaQuotient& o) const {
    if (N != o.N) throw std::invalid_argument("eta quotients of different levels");
    auto ex = r;
    for (auto [d, e] : o.r) ex[d] += e;
    return EtaQuotient(N, ex);
}

EtaQuotient EtaQuotient::inverse() const {
    auto ex = r;
    for (auto& [d, e] : ex) e = -e;
    return EtaQuotient(N, ex);
}

bool EtaQuotient::operator<(const EtaQuotient& o) const {
    if (N != o.N) return N < o.N;
    return vector() < o.vector();
}

namespace {

// Exponent of each prime in prod delta^{r_delta}.
std::map<i64, i64> product_exponents(const EtaQuotient& e) {
    std::map<i64, i64> pe;
    for (auto [d, x] : e.r)
        for (auto [p, k] : factorize(d)) pe[p] += x * k;
    return pe;
}

Rational prime_power_rational(const std::map<i64, i64>& pe) {
    Rational r = 1;
    for (auto [p, k] : pe) {
        Integer v;
        mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(std::abs(k)));
        r *= k >= 0 ? Rational(v) : Rational(1) / Rational(v);
    }
    return r;
}

}  // namespace

i64 etaq_minimal_order(const EtaQuotient& e) {
    i64 m = 1;
    for (auto [p, k] : product_exponents(e))
        if (mod(k, 2)) m *= p;
    return m;
}

WeightCharacter etaq_weight_char(const EtaQuotient& e, i64 order_A) {
    if (!e.admissible()) throw std::invalid_argument("inadmissible eta quotient " + e.to_string());
    if (order_A < 1) throw std::invalid_argument("declared order must be positive");
    if (squarefree_part(order_A) != etaq_minimal_order(e))
        throw std::invalid_argument("|A| / prod delta^r is not a rational square for |A| = " + std::to_string(order_A));
    return {e.weight(), eta_quotient_character(e.N, e.two_weight(), order_A)};
}

WeightCharacter etaq_weight_char(const EtaQuotient& e) { return etaq_weight_char(e, etaq_minimal_order(e)); }

Rational etaq_order_raw(const EtaQuotient& e, i64 c) {
    Rational s = 0;
    for (auto [t, x] : e.r) {
        i64 g = gcd(t, c);
        s += make_rational(x * g * g, 24 * t);
    }
    return s;
}

Rational etaq_order_at_cusp(const EtaQuotient& e, i64 c) {
    return etaq_order_raw(e, c) * Rational(static_cast<long>(cusp_width(e.N, c)));
}

Cyclotomic EtaPrefactor::constant() const {
    // sqrt(a/b) = sqrt(ab)/b, with square factors pulled out.
    Integer num = radicand.get_num(), den = radicand.get_den();
    Integer ab = num * den;
    Integer outside = 1, inside = 1;
    for (unsigned long p = 2; ab > 1; ++p) {
        if (p * p > ab) {
            inside *= ab;
            break;
        }
        while (mpz_divisible_ui_p(ab.get_mpz_t(), p)) {
            ab /= p;
            if (mpz_divisible_ui_p(ab.get_mpz_t(), p)) {
                ab /= p;
                outside *= p;
            } else {
                inside *= p;
            }
        }
    }
    Cyclotomic c = cyclotomic_sqrt(to_i64(inside)) * (Rational(outside) / Rational(den));
    return c * Cyclotomic::from_root(phase);
}

std::string EtaPrefactor::to_string() const {
    std::ostringstream os;
    os << "e(" << modkit::to_string(phase.exponent()) << ") * sqrt(" << modkit::to_string(radicand) << ") * tau^("
       << modkit::to_string(tau_power) << ")";
    return os.str();
}

QSeries etaq_expand_infinity(const EtaQuotient& e, const Rational& precision) { return eta_product(e.r, precision); }

CuspExpansion etaq_expand_zero(const EtaQuotient& e, const Rational& precision) {
    CuspExpansion out;
    const Rational k = e.weight();
    out.prefactor.tau_power = k;
    out.prefactor.phase = RootOfUnity(-k / 4);
    std::map<i64, i64> pe;
    for (auto [p, x] : product_exponents(e)) pe[p] = -x;
    out.prefactor.radicand = prime_power_rational(pe);
    std::vector<Rational> val;
    Rational total = 0;
    for (auto [d, x] : e.r) {
        val.push_back(make_rational(x, 24 * d));
        total += val.back();
    }
    QSeries s = QSeries::constant(Rational(1));
    std::size_t i = 0;
    for (auto [d, x] : e.r) {
        // factor precision so that the product is exact below `precision`
        Rational need = precision - (total - val[i]);
        Rational p = need * Rational(static_cast<long>(d));
        if (p <= make_rational(x, 24)) p = make_rational(x + 1, 24);
        QSeries f = eta_product({{1, x}}, p);
        s = s * f.scale_exponent(make_rational(1, d));
        ++i;
    }
    out.series = s.truncated(precision);
    return out;
}

std::pair<EtaPrefactor, EtaQuotient> etaq_fricke(const EtaQuotient& e) {
    EtaPrefactor pf;
    const Rational k = e.weight();
    pf.tau_power = k;
    pf.phase = RootOfUnity(-k / 4);
    std::map<i64, i64> ex;
    std::map<i64, i64> pe;
    for (auto [d, x] : e.r) {
        ex[e.N / d] = x;
        for (auto [p, a] : factorize(e.N / d)) pe[p] += a * x;
    }
    pf.radicand = prime_power_rational(pe);
    return {pf, EtaQuotient(e.N, ex)};
}

namespace {

std::vector<std::vector<Rational>> rational_inverse(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("singular cusp order matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational f = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= f;
            inv[col][j] /= f;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rational g = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= g * a[col][j];
                inv[i][j] -= g * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace

std::vector<EtaQuotient> classify_bounded(i64 N, const Rational& max_order, bool require_holomorphic) {
    if (max_order < 0) throw std::invalid_argument("max_order must be nonnegative");
    const auto ds = divisors(N);
    const std::size_t n = ds.size();
    // Integer form: (24 N) * order_c = sum_t B[c][t] r_t.
    std::vector<std::vector<i64>> B(n, std::vector<i64>(n));
    std::vector<std::vector<Rational>> Bq(n, std::vector<Rational>(n));
    for (std::size_t ci = 0; ci < n; ++ci)
        for (std::size_t ti = 0; ti < n; ++ti) {
            i64 g = gcd(ds[ti], ds[ci]);
            B[ci][ti] = cusp_width(N, ds[ci]) * g * g * (N / ds[ti]);
            Bq[ci][ti] = Rational(static_cast<long>(B[ci][ti]));
        }
    const Rational scale(static_cast<long>(24 * N));
    const Rational lo_q = require_holomorphic ? Rational(0) : Rational(-max_order);
    const i64 LO = to_i64(ceil_of(lo_q * scale));
    const i64 HI = to_i64(floor_of(max_order * scale));
    auto Binv = rational_inverse(Bq);
    std::vector<i64> rlo(n), rhi(n);
    for (std::size_t ti = 0; ti < n; ++ti) {
        Rational mn = 0, mx = 0;
        for (std::size_t ci = 0; ci < n; ++ci) {
            Rational a = Binv[ti][ci] * Rational(static_cast<long>(LO)), b = Binv[ti][ci] * Rational(static_cast<long>(HI));
            mn += a < b ? a : b;
            mx += a < b ? b : a;
        }
        rlo[ti] = to_i64(ceil_of(mn));
        rhi[ti] = to_i64(floor_of(mx));
    }
    // tail[k][c] = (min, max) of sum_{t >= k} B[c][t] r_t over the box.
    std::vector<std::vector<std::pair<i64, i64>>> tail(n + 1, std::vector<std::pair<i64, i64>>(n, {0, 0}));
    for (std::size_t k = n; k-- > 0;)
        for (std::size_t ci = 0; ci < n; ++ci) {
            i64 a = B[ci][k] * rlo[k], b = B[ci][k] * rhi[k];
            tail[k][ci] = {tail[k + 1][ci].first + std::min(a, b), tail[k + 1][ci].second + std::max(a, b)};
        }
    std::vector<EtaQuotient> out;
    std::vector<i64> r(n, 0), partial(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        for (std::size_t ci = 0; ci < n; ++ci)
            if (partial[ci] + tail[k][ci].second < LO || partial[ci] + tail[k][ci].first > HI) return;
        if (k == n) {
            std::map<i64, i64> ex;
            for (std::size_t i = 0; i < n; ++i) ex[ds[i]] = r[i];
            EtaQuotient e(N, ex);
            if (!e.is_constant() && e.admissible()) out.push_back(e);
            return;
        }
        for (i64 v = rlo[k]; v <= rhi[k]; ++v) {
            r[k] = v;
            for (std::size_t ci = 0; ci < n; ++ci) partial[ci] += B[ci][k] * v;
            rec(k + 1);
            for (std::size_t ci = 0; ci < n; ++ci) partial[ci] -= B[ci][k] * v;
        }
        r[k] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace modkit
