#include "modkit/discforms.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "modkit/arith.hpp"

namespace modkit {

namespace {

int mod8(i64 x) { return static_cast<int>(mod(x, 8)); }

std::string signed_rank(int sign, int n) { return std::string(sign > 0 ? "+" : "-") + std::to_string(n); }

Cyclotomic sum_of_roots(i64 den, const std::vector<i64>& counts) {
    Cyclotomic s;
    for (i64 k = 0; k < den; ++k)
        if (counts[k] != 0) s += Cyclotomic::zeta(den, k) * Rational(static_cast<long>(counts[k]));
    return s;
}

}  // namespace

i64 JordanComponent::q() const { return ipow(p, k); }

i64 JordanComponent::order() const { return ipow(q(), n); }

i64 JordanComponent::level() const { return type == TwoAdicType::odd ? 2 * q() : q(); }

int JordanComponent::antisquare() const { return (k % 2 == 1 && sign < 0) ? 1 : 0; }

bool JordanComponent::valid() const {
    if (!is_prime(p) || k < 1 || n < 1 || (sign != 1 && sign != -1)) return false;
    if (p != 2) return type == TwoAdicType::none;
    if (type == TwoAdicType::even) return n % 2 == 0;
    if (type == TwoAdicType::odd) return t >= 0 && t < 8 && odd_two_adic_pieces(n, sign, t).has_value();
    return false;
}

int JordanComponent::signature() const {
    const int anti = 4 * antisquare();
    switch (type) {
    case TwoAdicType::none: return mod8(-static_cast<i64>(n) * (q() - 1) + anti);
    case TwoAdicType::odd: return mod8(t + anti);
    case TwoAdicType::even: return mod8(anti);
    }
    return 0;
}

std::string JordanComponent::to_string() const {
    std::string s = std::to_string(q()) + "^{" + signed_rank(sign, n) + "}";
    if (type == TwoAdicType::odd) s += "_" + std::to_string(t);
    return s;
}

std::optional<std::vector<int>> odd_two_adic_pieces(int n, int sign, int t) {
    if (n < 1) return std::nullopt;
    for (int c1 = n; c1 >= 0; --c1)
        for (int c7 = n - c1; c7 >= 0; --c7)
            for (int c3 = n - c1 - c7; c3 >= 0; --c3) {
                int c5 = n - c1 - c7 - c3;
                if (mod8(c1 + 3 * c3 + 5 * c5 + 7 * c7) != mod8(t)) continue;
                if (((c3 + c5) % 2 == 0 ? 1 : -1) != sign) continue;
                std::vector<int> out;
                out.insert(out.end(), c1, 1);
                out.insert(out.end(), c3, 3);
                out.insert(out.end(), c5, 5);
                out.insert(out.end(), c7, 7);
                return out;
            }
    return std::nullopt;
}

GenusSymbol::GenusSymbol(std::vector<JordanComponent> comps) {
    std::map<std::pair<i64, int>, JordanComponent> by_q;
    for (auto c : comps) {
        if (!c.valid()) throw std::invalid_argument("invalid Jordan component " + c.to_string());
        auto key = std::make_pair(c.p, c.k);
        auto it = by_q.find(key);
        if (it == by_q.end()) {
            by_q.emplace(key, c);
            continue;
        }
        JordanComponent& m = it->second;
        m.n += c.n;
        m.sign *= c.sign;
        if (c.p == 2) {
            int tsum = (m.type == TwoAdicType::odd ? m.t : 0) + (c.type == TwoAdicType::odd ? c.t : 0);
            if (m.type == TwoAdicType::odd || c.type == TwoAdicType::odd) m.type = TwoAdicType::odd;
            m.t = m.type == TwoAdicType::odd ? mod8(tsum) : 0;
        }
        if (!m.valid()) throw std::invalid_argument("composition produced an invalid component " + m.to_string());
    }
    for (auto& [key, c] : by_q) c_.push_back(c);
}

i64 GenusSymbol::order() const {
    i64 r = 1;
    for (const auto& c : c_) r *= c.order();
    return r;
}

i64 GenusSymbol::level() const {
    i64 r = 1;
    for (const auto& c : c_) r = lcm(r, c.level());
    return r;
}

int GenusSymbol::signature() const {
    int s = 0;
    for (const auto& c : c_) s += c.signature();
    return mod8(s);
}

std::string GenusSymbol::to_string() const {
    if (c_.empty()) return "1";
    std::string s;
    for (const auto& c : c_) {
        if (!s.empty()) s += " ";
        s += c.to_string();
    }
    return s;
}

GenusSymbol GenusSymbol::parse(const std::string& text) {
    std::string src;
    // Accept a unicode minus sign.
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
            src += '-';
            i += 2;
        } else {
            src += text[i];
        }
    }
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> GenusSymbol {
        throw std::invalid_argument("cannot parse genus symbol '" + text + "': " + why);
    };
    auto skip_ws = [&] {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    };
    auto read_int = [&]() -> i64 {
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        return std::stoll(src.substr(start, pos - start));
    };
    // Reads "x" or "{x}" where x is the rest of a group.
    auto read_group = [&]() -> std::string {
        if (pos < src.size() && src[pos] == '{') {
            std::size_t close = src.find('}', pos);
            if (close == std::string::npos) fail("unbalanced brace");
            std::string g = src.substr(pos + 1, close - pos - 1);
            pos = close + 1;
            return g;
        }
        std::size_t start = pos;
        if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) ++pos;
        while (pos < src.size() && std::isalnum(static_cast<unsigned char>(src[pos]))) ++pos;
        return src.substr(start, pos - start);
    };

    std::vector<JordanComponent> comps;
    skip_ws();
    if (src.substr(pos) == "1" || pos == src.size()) return GenusSymbol();
    while (true) {
        skip_ws();
        if (pos >= src.size()) break;
        i64 q = read_int();
        auto f = factorize(q);
        if (f.size() != 1) fail("component base must be a prime power");
        JordanComponent c;
        c.p = f[0].first;
        c.k = f[0].second;
        bool have_rank = false, have_sub = false;
        std::string sub;
        while (pos < src.size() && (src[pos] == '^' || src[pos] == '_')) {
            char kind = src[pos++];
            std::string g = read_group();
            if (kind == '^') {
                if (g.empty() || (g[0] != '+' && g[0] != '-')) fail("rank needs a sign");
                c.sign = g[0] == '+' ? 1 : -1;
                c.n = std::stoi(g.substr(1));
                have_rank = true;
            } else {
                sub = g;
                have_sub = true;
            }
        }
        if (!have_rank) fail("missing ^{+-n}");
        if (c.p == 2) {
            if (!have_sub || sub == "II") {
                c.type = TwoAdicType::even;
            } else {
                c.type = TwoAdicType::odd;
                c.t = mod8(std::stoll(sub));
            }
        } else if (have_sub) {
            fail("subscripts only apply to p = 2");
        }
        comps.push_back(c);
    }
    return GenusSymbol(std::move(comps));
}

GenusSymbol symbol_compose(const GenusSymbol& a, const GenusSymbol& b) {
    auto all = a.components();
    all.insert(all.end(), b.components().begin(), b.components().end());
    return GenusSymbol(std::move(all));
}

DiscriminantGroup::DiscriminantGroup(std::vector<i64> orders, std::vector<Rational> norms,
                                     std::vector<std::vector<Rational>> bilinear)
    : ord_(std::move(orders)), nrm_(std::move(norms)), bil_(std::move(bilinear)) {
    const std::size_t r = ord_.size();
    if (nrm_.size() != r || bil_.size() != r) throw std::invalid_argument("discriminant group: size mismatch");
    size_ = 1;
    for (i64 o : ord_) {
        if (o < 2) throw std::invalid_argument("generator orders must be >= 2");
        size_ *= o;
    }
    for (auto& x : nrm_) x = Rational(2) * frac(x / 2);
    den_ = 1;
    for (std::size_t i = 0; i < r; ++i) {
        den_ = lcm(den_, to_i64(Rational(nrm_[i] / 2).get_den()));
        for (std::size_t j = 0; j < r; ++j) {
            bil_[i][j] = i == j ? frac(nrm_[i]) : frac(bil_[i][j]);
            den_ = lcm(den_, to_i64(bil_[i][j].get_den()));
        }
    }
    level_ = den_;
    qn_.resize(r);
    bn_.assign(r, std::vector<i64>(r));
    const Rational D(static_cast<long>(den_));
    for (std::size_t i = 0; i < r; ++i) {
        qn_[i] = to_i64(Rational(frac(nrm_[i] / 2) * D).get_num());
        for (std::size_t j = 0; j < r; ++j) bn_[i][j] = to_i64(Rational(bil_[i][j] * D).get_num());
    }
}

std::vector<i64> DiscriminantGroup::coords(i64 idx) const {
    std::vector<i64> x(ord_.size());
    for (std::size_t i = 0; i < ord_.size(); ++i) {
        x[i] = idx % ord_[i];
        idx /= ord_[i];
    }
    return x;
}

i64 DiscriminantGroup::index(const std::vector<i64>& x) const {
    i64 idx = 0;
    for (std::size_t i = ord_.size(); i-- > 0;) idx = idx * ord_[i] + mod(x[i], ord_[i]);
    return idx;
}

i64 DiscriminantGroup::add(i64 x, i64 y) const {
    i64 idx = 0, stride = 1;
    for (i64 o : ord_) {
        idx += ((x % o + y % o) % o) * stride;
        x /= o;
        y /= o;
        stride *= o;
    }
    return idx;
}

i64 DiscriminantGroup::scale(i64 n, i64 x) const {
    i64 idx = 0, stride = 1;
    for (i64 o : ord_) {
        idx += mod(static_cast<i64>(static_cast<i128>(x % o) * mod(n, o) % o), o) * stride;
        x /= o;
        stride *= o;
    }
    return idx;
}

i64 DiscriminantGroup::quad_num(i64 x) const {
    auto c = coords(x);
    i128 s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        s += static_cast<i128>(c[i]) * c[i] % den_ * qn_[i];
        for (std::size_t j = i + 1; j < c.size(); ++j) s += static_cast<i128>(c[i]) * c[j] % den_ * bn_[i][j];
        s %= den_;
    }
    return static_cast<i64>(s % den_);
}

i64 DiscriminantGroup::bil_num(i64 x, i64 y) const {
    auto a = coords(x), b = coords(y);
    i128 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) s += static_cast<i128>(a[i]) * b[j] % den_ * bn_[i][j];
        s %= den_;
    }
    return static_cast<i64>(s % den_);
}

Rational DiscriminantGroup::quad(i64 x) const { return make_rational(quad_num(x), den_); }

Rational DiscriminantGroup::norm(i64 x) const { return Rational(2) * quad(x); }

Rational DiscriminantGroup::bilinear(i64 x, i64 y) const { return make_rational(bil_num(x, y), den_); }

std::vector<DiscriminantGroup::ProfileEntry> DiscriminantGroup::norm_profile() const {
    std::map<std::pair<i64, i64>, i64> counts;
    for (i64 x = 0; x < size_; ++x) {
        i64 o = 1;
        for (i64 y = x; y != 0; y = add(y, x)) ++o;
        ++counts[{o, quad_num(x)}];
    }
    std::vector<ProfileEntry> out;
    for (const auto& [key, n] : counts) out.push_back({key.first, Rational(2) * make_rational(key.second, den_), n});
    return out;
}

DiscriminantGroup realize_group(const GenusSymbol& s) {
    std::vector<i64> orders;
    std::vector<Rational> norms;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // generator pairs with (gamma, delta) = 1/q
    std::vector<i64> pair_q;
    for (const auto& c : s.components()) {
        const i64 q = c.q();
        if (c.type == TwoAdicType::none) {
            auto residue = [&](int want) {
                for (i64 a = 2;; a += 2)
                    if (kronecker(a, c.p) == want) return a;
            };
            for (int i = 0; i < c.n; ++i) {
                orders.push_back(q);
                norms.push_back(make_rational(residue(i == 0 ? c.sign : 1), q));
            }
        } else if (c.type == TwoAdicType::odd) {
            const auto pieces = odd_two_adic_pieces(c.n, c.sign, c.t);
            for (int ti : *pieces) {
                orders.push_back(q);
                norms.push_back(make_rational(ti, q));
            }
        } else {
            for (int i = 0; i < c.n / 2; ++i) {
                Rational nv = (i == 0 && c.sign < 0) ? make_rational(2, q) : Rational(0);
                pairs.push_back({orders.size(), orders.size() + 1});
                pair_q.push_back(q);
                for (int j = 0; j < 2; ++j) {
                    orders.push_back(q);
                    norms.push_back(nv);
                }
            }
        }
    }
    std::vector<std::vector<Rational>> bil(orders.size(), std::vector<Rational>(orders.size(), Rational(0)));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [x, y] = pairs[i];
        bil[x][y] = bil[y][x] = make_rational(1, pair_q[i]);
    }
    return DiscriminantGroup(std::move(orders), std::move(norms), std::move(bil));
}

Cyclotomic cyclotomic_sqrt(i64 n) {
    if (n <= 0) throw std::invalid_argument("cyclotomic_sqrt needs a positive integer");
    Cyclotomic r(1);
    for (auto [p, e] : factorize(n)) {
        for (int i = 0; i < e / 2; ++i) r = r * Rational(static_cast<long>(p));
        if (e % 2 == 0) continue;
        if (p == 2) {
            r *= Cyclotomic::zeta(8, 1) + Cyclotomic::zeta(8, 7);
            continue;
        }
        Cyclotomic g;
        for (i64 x = 0; x < p; ++x) g += Cyclotomic::zeta(p, x * x % p);
        if (p % 4 == 3) g *= Cyclotomic::zeta(4, 3);
        r *= g;
    }
    return r;
}

int milgram_signature(const DiscriminantGroup& g) {
    const i64 D = g.denominator();
    std::vector<i64> counts(D, 0);
    for (i64 x = 0; x < g.size(); ++x) ++counts[g.quad_num(x)];
    Cyclotomic sum = sum_of_roots(D, counts);
    Cyclotomic root = cyclotomic_sqrt(g.size());
    for (int s = 0; s < 8; ++s)
        if (sum == root * Cyclotomic::zeta(8, s)) return s;
    throw std::domain_error("milgram_signature: Gauss sum has the wrong absolute value (degenerate form)");
}

SubgroupData subgroup_data(const DiscriminantGroup& g, i64 n) {
    SubgroupData out;
    std::vector<char> seen(g.size(), 0);
    for (i64 x = 0; x < g.size(); ++x) {
        if (g.scale(n, x) == 0) out.torsion.push_back(x);
        i64 y = g.scale(n, x);
        if (!seen[y]) {
            seen[y] = 1;
            out.powers.push_back(y);
        }
    }
    std::sort(out.powers.begin(), out.powers.end());
    const i64 D = g.denominator();
    std::vector<i64> target;
    for (i64 x : out.torsion) target.push_back(mod(static_cast<i64>(static_cast<i128>(mod(n, D)) * g.quad_num(x) % D), D));
    for (i64 d = 0; d < g.size(); ++d) {
        bool ok = true;
        for (std::size_t i = 0; i < out.torsion.size() && ok; ++i) ok = g.bil_num(out.torsion[i], d) == target[i];
        if (ok) out.coset.push_back(d);
    }
    return out;
}

Cyclotomic gauss_sum(const DiscriminantGroup& g, i64 n, i64 delta) {
    const i64 D = g.denominator();
    std::vector<i64> counts(D, 0);
    const i64 nn = mod(n, D);
    for (i64 x = 0; x < g.size(); ++x) {
        i64 e = g.bil_num(x, delta) - static_cast<i64>(static_cast<i128>(nn) * g.quad_num(x) % D);
        ++counts[mod(e, D)];
    }
    return sum_of_roots(D, counts);
}

namespace {

// All components of a single prime power q = p^k with order at most `bound`.
std::vector<JordanComponent> components_at(i64 p, int k, i64 bound, bool allow_even, bool allow_odd) {
    std::vector<JordanComponent> out;
    const i64 q = ipow(p, k);
    i64 ord = 1;
    for (int n = 1;; ++n) {
        if (ord > bound / q) break;
        ord *= q;
        for (int sign : {1, -1}) {
            JordanComponent c;
            c.p = p;
            c.k = k;
            c.n = n;
            c.sign = sign;
            if (p != 2) {
                c.type = TwoAdicType::none;
                out.push_back(c);
                continue;
            }
            if (allow_even && n % 2 == 0) {
                c.type = TwoAdicType::even;
                out.push_back(c);
            }
            if (allow_odd) {
                c.type = TwoAdicType::odd;
                for (int t = 0; t < 8; ++t) {
                    c.t = t;
                    if (c.valid()) out.push_back(c);
                }
            }
        }
    }
    return out;
}

// p-primary symbols (lists of components with increasing k) with order <= bound.
void p_parts(i64 p, int k, int kmax_even, int kmax_odd, i64 bound, std::vector<JordanComponent>& cur,
             std::vector<std::pair<std::vector<JordanComponent>, i64>>& out, i64 ord) {
    int kmax = std::max(kmax_even, kmax_odd);
    if (k > kmax) {
        out.push_back({cur, ord});
        return;
    }
    p_parts(p, k + 1, kmax_even, kmax_odd, bound, cur, out, ord);
    for (const auto& c : components_at(p, k, bound / ord, k <= kmax_even, k <= kmax_odd)) {
        cur.push_back(c);
        p_parts(p, k + 1, kmax_even, kmax_odd, bound, cur, out, ord * c.order());
        cur.pop_back();
    }
}

}  // namespace

std::vector<GenusSymbol> enumerate_symbols(i64 N, i64 max_order, std::optional<int> signature) {
    if (N < 0 || max_order < 1) throw std::invalid_argument("enumerate_symbols: need N >= 0 and max_order >= 1");
    std::vector<i64> primes;
    if (N == 0) {
        for (i64 p = 2; p <= max_order; ++p)
            if (is_prime(p)) primes.push_back(p);
    } else {
        primes = prime_divisors(N);
    }
    std::vector<std::vector<std::pair<std::vector<JordanComponent>, i64>>> per_prime;
    for (i64 p : primes) {
        int kmax = 0;
        while (ipow(p, kmax + 1) <= max_order) ++kmax;
        int ke = kmax, ko = kmax;
        if (N != 0) {
            int v = valuation(N, p);
            ke = std::min(kmax, v);
            ko = p == 2 ? std::min(kmax, v - 1) : ke;
        }
        std::vector<JordanComponent> cur;
        std::vector<std::pair<std::vector<JordanComponent>, i64>> parts;
        p_parts(p, 1, ke, ko, max_order, cur, parts, 1);
        per_prime.push_back(std::move(parts));
    }
    std::vector<GenusSymbol> out;
    std::vector<JordanComponent> acc;
    std::function<void(std::size_t, i64)> rec = [&](std::size_t i, i64 ord) {
        if (i == per_prime.size()) {
            GenusSymbol s(acc);
            if (!signature || s.signature() == mod8(*signature)) out.push_back(std::move(s));
            return;
        }
        for (const auto& [comps, o] : per_prime[i]) {
            if (o > max_order / ord) continue;
            acc.insert(acc.end(), comps.begin(), comps.end());
            rec(i + 1, ord * o);
            acc.resize(acc.size() - comps.size());
        }
    };
    rec(0, 1);
    std::stable_sort(out.begin(), out.end(), [](const GenusSymbol& a, const GenusSymbol& b) { return a.order() < b.order(); });
    return out;
}

std::vector<GenusSymbol> dedupe_symbols(const std::vector<GenusSymbol>& symbols) {
    std::set<std::string> seen;
    std::vector<GenusSymbol> out;
    for (const auto& s : symbols) {
        const DiscriminantGroup g = realize_group(s);
        std::string key = std::to_string(g.size()) + "|" + std::to_string(g.level()) + "|" + std::to_string(s.signature());
        for (const auto& e : g.norm_profile())
            key += "|" + std::to_string(e.element_order) + ":" + e.norm.get_str() + ":" + std::to_string(e.count);
        if (seen.insert(key).second) out.push_back(s);
    }
    return out;
}

}  // namespace modkit
