#include <cmath>
#include <functional>

#include "modkit/qseries.hpp"

namespace modkit {

GramMatrix GramMatrix::from_int(int n, const std::vector<i64>& entries) {
    if (static_cast<int>(entries.size()) != n * n) throw std::invalid_argument("gram: wrong entry count");
    GramMatrix m;
    m.n = n;
    for (i64 e : entries) m.g.push_back(Rational(static_cast<long>(e)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (m.at(i, j) != m.at(j, i)) throw std::invalid_argument("gram: not symmetric");
        }
    }
    return m;
}

bool GramMatrix::is_integral_even() const {
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!is_integer(at(i, j))) return false;
        }
        if (at(i, i).get_num() % 2 != 0) return false;
    }
    return true;
}

bool GramMatrix::is_positive_definite() const {
    // leading principal minors via elimination without pivoting
    std::vector<Rational> a = g;
    for (int k = 0; k < n; ++k) {
        Rational piv = a[k * n + k];
        if (piv <= 0) return false;
        for (int i = k + 1; i < n; ++i) {
            Rational f = a[i * n + k] / piv;
            for (int j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
        }
    }
    return true;
}

Rational GramMatrix::determinant() const {
    std::vector<Rational> a = g;
    Rational det = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && a[p * n + k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(a[p * n + j], a[k * n + j]);
            det = -det;
        }
        det *= a[k * n + k];
        for (int i = k + 1; i < n; ++i) {
            Rational f = a[i * n + k] / a[k * n + k];
            for (int j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
        }
    }
    return det;
}

GramMatrix GramMatrix::inverse() const {
    std::vector<Rational> a = g;
    std::vector<Rational> b(static_cast<std::size_t>(n) * n, Rational(0));
    for (int i = 0; i < n; ++i) b[i * n + i] = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && a[p * n + k] == 0) ++p;
        if (p == n) throw std::domain_error("gram: singular");
        for (int j = 0; j < n; ++j) {
            std::swap(a[p * n + j], a[k * n + j]);
            std::swap(b[p * n + j], b[k * n + j]);
        }
        Rational piv = a[k * n + k];
        for (int j = 0; j < n; ++j) {
            a[k * n + j] /= piv;
            b[k * n + j] /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || a[i * n + k] == 0) continue;
            Rational f = a[i * n + k];
            for (int j = 0; j < n; ++j) {
                a[i * n + j] -= f * a[k * n + j];
                b[i * n + j] -= f * b[k * n + j];
            }
        }
    }
    GramMatrix r;
    r.n = n;
    r.g = std::move(b);
    return r;
}

GramMatrix GramMatrix::scaled(const Rational& s) const {
    GramMatrix r = *this;
    for (auto& x : r.g) x *= s;
    return r;
}

GramMatrix gram_A(int n) {
    std::vector<i64> e(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        e[i * n + i] = 2;
        if (i + 1 < n) e[i * n + i + 1] = e[(i + 1) * n + i] = -1;
    }
    return GramMatrix::from_int(n, e);
}

GramMatrix gram_D(int n) {
    std::vector<i64> e(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) e[i * n + i] = 2;
    for (int i = 0; i + 2 < n; ++i) e[i * n + i + 1] = e[(i + 1) * n + i] = -1;
    e[(n - 1) * n + (n - 3)] = e[(n - 3) * n + (n - 1)] = -1;
    return GramMatrix::from_int(n, e);
}

QSeries lattice_theta(const GramMatrix& gm, const Rational& precision) {
    if (!gm.is_positive_definite()) throw std::domain_error("lattice_theta: Gram matrix is not positive definite");
    const int n = gm.n;
    // Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
    std::vector<Rational> q = gm.g;
    auto Q = [&](int i, int j) -> Rational& { return q[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Q(j, i) = Q(i, j);
            Q(i, j) = Q(i, j) / Q(i, i);
        }
        for (int k = i + 1; k < n; ++k) {
            for (int l = k; l < n; ++l) Q(k, l) -= Q(k, i) * Q(i, l);
        }
    }
    Rational bound = precision * Rational(2);
    std::map<Rational, Integer> counts;
    std::vector<i64> x(n, 0);

    std::function<void(int, const Rational&)> rec = [&](int i, const Rational& remaining) {
        if (i < 0) {
            Rational nrm = 0;
            for (int a = 0; a < n; ++a) {
                if (x[a] == 0) continue;
                for (int b = 0; b < n; ++b) nrm += gm.at(a, b) * Rational(static_cast<long>(x[a] * x[b]));
            }
            if (nrm < bound) counts[nrm / Rational(2)] += 1;
            return;
        }
        Rational c = 0;
        for (int j = i + 1; j < n; ++j) c += Q(i, j) * Rational(static_cast<long>(x[j]));
        const Rational& qii = Q(i, i);
        auto fits = [&](i64 v) {
            Rational t = Rational(static_cast<long>(v)) + c;
            return qii * t * t <= remaining;
        };
        double s = std::sqrt(std::max(0.0, Rational(remaining / qii).get_d()));
        double cd = c.get_d();
        i64 lo = static_cast<i64>(std::floor(-cd - s)) - 1;
        i64 hi = static_cast<i64>(std::ceil(-cd + s)) + 1;
        while (fits(lo - 1)) --lo;
        while (hi >= lo && !fits(lo)) ++lo;
        while (fits(hi + 1)) ++hi;
        while (hi >= lo && !fits(hi)) --hi;
        for (i64 v = lo; v <= hi; ++v) {
            x[i] = v;
            Rational t = Rational(static_cast<long>(v)) + c;
            rec(i - 1, remaining - qii * t * t);
        }
        x[i] = 0;
    };
    rec(n - 1, bound);

    i64 den = 1;
    for (const auto& [e, cnt] : counts) den = lcm(den, to_i64(e.get_den()));
    QSeries s(den, precision);
    for (const auto& [e, cnt] : counts) s.set(to_i64(Rational(e * Rational(static_cast<long>(den))).get_num()), Rational(cnt));
    return s;
}

}  // namespace modkit
