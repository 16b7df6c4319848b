#include "modkit/qseries.hpp"

#include <json.hpp>

namespace modkit {

CycloQSeries to_cyclo(const QSeries& s) {
    CycloQSeries r(s.denominator(), s.precision());
    for (const auto& [k, c] : s.terms()) r.set(k, Cyclotomic(c));
    return r;
}

QSeries to_rational(const CycloQSeries& s) {
    QSeries r(s.denominator(), s.precision());
    for (const auto& [k, c] : s.terms()) r.set(k, c.rational_value());
    return r;
}

std::string qseries_to_json(const QSeries& s) {
    nlohmann::json j;
    j["denominator"] = s.denominator();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : s.terms()) terms.push_back(nlohmann::json::array({k, c.get_str()}));
    j["terms"] = terms;
    j["precision"] = s.precision() ? nlohmann::json(s.precision()->get_str()) : nlohmann::json(nullptr);
    return j.dump();
}

QSeries qseries_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    QSeries::Prec p;
    if (!j.at("precision").is_null()) p = parse_rational(j.at("precision").get<std::string>());
    QSeries s(j.at("denominator").get<i64>(), p);
    for (const auto& t : j.at("terms")) s.set(t.at(0).get<i64>(), parse_rational(t.at(1).get<std::string>()));
    return s;
}

QSeries eta_series(i64 t, const Rational& precision) {
    if (t < 1) throw std::invalid_argument("eta_series: scale must be positive");
    QSeries s(24, precision);
    // exponents (t + 24 j)/24 < precision
    Rational span = precision * Rational(24) - Rational(static_cast<long>(t));
    if (span <= 0) return s;
    i64 jmax = to_i64(ceil_of(span / Rational(24)));  // j < jmax
    std::vector<Integer> poly(static_cast<std::size_t>(jmax), 0);
    poly[0] = 1;
    for (i64 n = 1; t * n < jmax; ++n) {
        i64 step = t * n;
        for (i64 j = jmax - 1; j >= step; --j) poly[j] -= poly[j - step];
    }
    for (i64 j = 0; j < jmax; ++j) {
        if (poly[j] != 0) s.set(t + 24 * j, Rational(poly[j]));
    }
    return s;
}

QSeries eta_product(const std::map<i64, i64>& exponents, const Rational& precision) {
    Rational lead = 0;
    for (auto [d, r] : exponents) lead += make_rational(d * r, 24);
    // every normalized factor needs relative precision precision - lead
    Rational rel = precision - lead;
    if (rel <= 0) rel = make_rational(1, 24);
    QSeries out = QSeries::constant(Rational(1));
    for (auto [d, r] : exponents) {
        if (r == 0) continue;
        QSeries f = eta_series(d, make_rational(d, 24) + rel);
        out = out * f.pow(r);
    }
    return out.truncated(precision);
}

QSeries eisenstein_level1(int k, const Rational& precision) {
    if (k < 2 || k % 2) throw std::domain_error("eisenstein_level1: k must be even and >= 2");
    Rational c = Rational(-2 * k) / bernoulli(k);
    QSeries s(1, precision);
    s.set(0, Rational(1));
    for (i64 n = 1; Rational(static_cast<long>(n)) < precision; ++n) {
        Integer sig = 0;
        for (i64 d : divisors(n)) {
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k - 1));
            sig += p;
        }
        s.set(n, c * Rational(sig));
    }
    return s;
}

CycloQSeries eisenstein_chi(int k, const DirichletCharacter& chi, const Rational& precision) {
    if (chi.is_principal()) throw std::domain_error("eisenstein_chi: principal character");
    if (k < 2) throw std::domain_error("eisenstein_chi: weight must be >= 2");
    if (chi.is_even() != (k % 2 == 0)) throw std::domain_error("eisenstein_chi: parity mismatch");
    CycloQSeries s(1, precision);
    for (i64 n = 1; Rational(static_cast<long>(n)) < precision; ++n) {
        Cyclotomic c;
        for (i64 d : divisors(n)) {
            auto v = chi.value(n / d);
            if (!v) continue;
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k - 1));
            c += Cyclotomic::from_root(*v) * Rational(p);
        }
        s.set(n, c);
    }
    return s;
}

CycloQSeries eisenstein_weight1(const DirichletCharacter& chi, const Rational& precision) {
    if (chi.is_principal() || chi.is_even()) throw std::domain_error("eisenstein_weight1: needs an odd character");
    Cyclotomic l0 = -generalized_bernoulli_B1(chi);
    Cyclotomic factor = Cyclotomic(Rational(2)) * l0.inverse();
    CycloQSeries s(1, precision);
    s.set(0, Cyclotomic(Rational(1)));
    for (i64 n = 1; Rational(static_cast<long>(n)) < precision; ++n) {
        Cyclotomic c;
        for (i64 d : divisors(n)) c += chi.value_cyc(n / d);
        s.set(n, c * factor);
    }
    return s;
}

}  // namespace modkit
