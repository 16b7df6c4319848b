#include "modkit/weil.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "modkit/arith.hpp"

namespace modkit {

MetaplecticElement word_element(const WeilWord& w) {
    MetaplecticElement r;
    for (const auto& l : w) {
        switch (l.kind) {
        case 'S': r = r * mp_S().pow(l.power); break;
        case 'T': r = r * mp_T(l.power); break;
        case 'Z': r = r * mp_Z().pow(mod(l.power, 4)); break;
        default: throw std::invalid_argument("unknown letter");
        }
    }
    return r;
}

WeilWord word_inverse(const WeilWord& w) {
    WeilWord r(w.rbegin(), w.rend());
    for (auto& l : r) l.power = -l.power;
    return r;
}

int word_s_count(const WeilWord& w) {
    int n = 0;
    for (const auto& l : w) n += l.kind == 'S' ? static_cast<int>(std::abs(l.power)) : 0;
    return n;
}

std::string word_to_string(const WeilWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (const auto& l : w) {
        if (!s.empty()) s += " ";
        s += l.kind;
        if (l.power != 1) s += "^" + std::to_string(l.power);
    }
    return s;
}

WeilWord parse_word(const std::string& text) {
    WeilWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;
        char k = tok[0];
        if (k == 't' || k == 's' || k == 'z') k = static_cast<char>(k - 'a' + 'A');
        if (k != 'S' && k != 'T' && k != 'Z') throw std::invalid_argument("bad letter in word: " + tok);
        i64 p = 1;
        if (tok.size() > 1) {
            if (tok[1] != '^') throw std::invalid_argument("bad letter in word: " + tok);
            std::string e = tok.substr(2);
            if (!e.empty() && e.front() == '{' && e.back() == '}') e = e.substr(1, e.size() - 2);
            p = std::stoll(e);
        }
        w.push_back({k, p});
    }
    return w;
}

WeilWord decompose(const MetaplecticElement& g) {
    WeilWord w;
    Mat2 cur = g.m;
    while (cur.c != 0) {
        i64 q = nearest_div(cur.a, cur.c);
        if (q != 0) w.push_back({'T', q});
        cur = Mat2{cur.a - q * cur.c, cur.b - q * cur.d, cur.c, cur.d};
        w.push_back({'S', 1});
        cur = Mat2{cur.c, cur.d, -cur.a, -cur.b};
    }
    if (cur.a == -1) {
        w.push_back({'Z', 1});
        cur = -cur;
    }
    if (cur.b != 0) w.push_back({'T', cur.b});
    if (word_element(w).branch != g.branch) w.push_back({'Z', 2});
    if (!(word_element(w) == g)) throw std::logic_error("decompose: word does not reproduce the element");
    return w;
}

namespace {

// One segment e_gamma -> zeta^{c + x q(gamma)} e_{eps gamma}.
struct Mono {
    i64 x = 0;
    int eps = 1;
    i64 c = 0;
};

struct Segments {
    std::vector<Mono> monos;  // monos[0] acts first
    std::vector<int> sigmas;  // S exponents between monos
};

}  // namespace

struct WeilEngine::Impl {
    DiscriminantGroup g;
    i64 n = 1;
    int sign = 0;
    i64 D = 1;
    i64 L = 8;
    CycloIntRing ring;
    std::vector<i64> qL;
    std::vector<std::int32_t> BL;
    std::vector<std::int32_t> addt;
    std::vector<std::int32_t> negt;
    std::vector<i64> Gvec;
    i64 zs = 0;  // L * sign / 4

    struct Coeff {
        int cls = -1;
        i64 content = 0;
        i64 f = 0;
    };
    struct Entry {
        int cls = -1;
        i64 content = 0;
        int apow = 0;
        int gpow = 0;
        i64 f = 0;
    };

    std::vector<std::vector<i64>> reps;
    std::vector<std::uint64_t> rep_hash;
    std::unordered_map<std::uint64_t, std::vector<int>> by_key;
    std::unordered_map<int, Coeff> times_g;
    std::map<i64, std::vector<Coeff>> kernels;

    explicit Impl(const DiscriminantGroup& grp)
        : g(grp), n(grp.size()), D(grp.denominator()), L(lcm(grp.denominator(), 8)), ring(L) {
        sign = milgram_signature(g);
        zs = L * sign / 4;
        const i64 s = L / D;
        qL.resize(n);
        negt.resize(n);
        BL.resize(n * n);
        addt.resize(n * n);
        for (i64 x = 0; x < n; ++x) {
            qL[x] = g.quad_num(x) * s;
            negt[x] = static_cast<std::int32_t>(g.neg(x));
        }
        for (i64 x = 0; x < n; ++x)
            for (i64 y = x; y < n; ++y) {
                auto b = static_cast<std::int32_t>(g.bil_num(x, y) * s);
                BL[x * n + y] = BL[y * n + x] = b;
                auto a = static_cast<std::int32_t>(g.add(x, y));
                addt[x * n + y] = addt[y * n + x] = a;
            }
        Gvec = ring.zero();
        for (i64 x = 0; x < n; ++x) ++Gvec[qL[x]];
        ring.canonicalize(Gvec);
        auto gg = ring.multiply(Gvec, ring.conj(Gvec));
        auto want = ring.zero();
        want[0] = n;
        ring.canonicalize(want);
        if (gg != want) throw std::logic_error("Gauss sum does not have absolute value sqrt|A|");
        auto g2 = ring.multiply(Gvec, Gvec);
        auto w2 = ring.zero();
        w2[mod(zs, L)] = n;
        ring.canonicalize(w2);
        if (g2 != w2) throw std::logic_error("Gauss sum square does not match the signature");
        std::vector<i64> one = ring.zero();
        one[0] = 1;
        enroll(one);
    }

    i64 B(i64 x, i64 y) const { return BL[x * n + y]; }
    i64 add(i64 x, i64 y) const { return addt[x * n + y]; }
    i64 signed_elt(int s, i64 x) const { return s > 0 ? x : negt[x]; }

    Coeff enroll(std::vector<i64> v) {
        i64 content = 0;
        for (i64 c : v) content = std::gcd(content, c < 0 ? -c : c);
        if (content == 0) return {};
        for (auto& c : v) c /= content;
        std::uint64_t h = ring.hash(v);
        std::uint64_t key = ring.powmod(h, static_cast<std::uint64_t>(L));
        auto& cands = by_key[key];
        for (int cls : cands) {
            std::vector<i64> e_try;
            if (h != 0 && rep_hash[cls] != 0) {
                std::uint64_t ratio = ring.mulmod(h, ring.powmod(rep_hash[cls], ring.prime() - 2));
                auto e = ring.log_root(ratio);
                if (e) e_try.push_back(*e);
            } else {
                e_try.resize(L);
                std::iota(e_try.begin(), e_try.end(), 0);
            }
            for (i64 e : e_try) {
                auto r = ring.rotated(reps[cls], e);
                ring.canonicalize(r);
                if (r == v) return {cls, content, e};
            }
        }
        int cls = static_cast<int>(reps.size());
        reps.push_back(std::move(v));
        rep_hash.push_back(h);
        cands.push_back(cls);
        return {cls, content, 0};
    }

    const std::vector<Coeff>& kernel(i64 x) {
        x = mod(x, D);
        auto it = kernels.find(x);
        if (it != kernels.end()) return it->second;
        std::vector<i64> xq(n);
        for (i64 d = 0; d < n; ++d) xq[d] = static_cast<i64>(static_cast<i128>(x) * qL[d] % L);
        std::vector<Coeff> out(n);
        std::vector<i64> cnt(L);
        for (i64 a = 0; a < n; ++a) {
            std::fill(cnt.begin(), cnt.end(), 0);
            const std::int32_t* row = &BL[a * n];
            for (i64 d = 0; d < n; ++d) {
                i64 k = xq[d] - row[d];
                if (k < 0) k += L;
                ++cnt[k];
            }
            ring.canonicalize(cnt);
            out[a] = enroll(cnt);
        }
        return kernels.emplace(x, std::move(out)).first->second;
    }

    Coeff times_gauss(int cls) {
        auto it = times_g.find(cls);
        if (it != times_g.end()) return it->second;
        Coeff c = enroll(ring.multiply(reps[cls], Gvec));
        times_g.emplace(cls, c);
        return c;
    }

    void normalize(Entry& e) const {
        while (e.gpow >= 2) {
            e.gpow -= 2;
            e.apow += 1;
            e.f += zs;
        }
        while (e.gpow < 0) {
            e.gpow += 2;
            e.apow -= 1;
            e.f -= zs;
        }
        e.f = mod(e.f, L);
    }

    Segments segments(const WeilWord& w) const {
        Segments s;
        s.monos.emplace_back();
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            Mono& m = s.monos.back();
            switch (it->kind) {
            case 'T': m.x += it->power; break;
            case 'Z': {
                i64 k = mod(it->power, 4);
                if (k % 2) m.eps = -m.eps;
                m.c = mod(m.c - k * zs, L);
                break;
            }
            case 'S': {
                int sigma = it->power > 0 ? 1 : -1;
                for (i64 r = 0; r < std::abs(it->power); ++r) {
                    s.sigmas.push_back(sigma);
                    s.monos.emplace_back();
                }
                break;
            }
            default: throw std::invalid_argument("unknown letter");
            }
        }
        return s;
    }

    i64 mono_phase(const Mono& m, i64 x) const {
        return m.c + static_cast<i64>(static_cast<i128>(mod(m.x, D)) * qL[x] % L);
    }

    // Column of rho(w) at e_gamma, indexed by target; words with at most two S letters.
    std::vector<Entry> column(const Segments& s, i64 gamma) {
        const std::size_t k = s.sigmas.size();
        if (k > 2) throw std::logic_error("column: more than two S letters");
        std::vector<Entry> col(n);
        auto kappa = [&](int sigma, Entry& e) {
            if (sigma > 0) {
                e.gpow -= 1;
            } else {
                e.gpow += 1;
                e.apow -= 1;
            }
        };
        const Mono& m0 = s.monos[0];
        const i64 g0 = signed_elt(m0.eps, gamma);
        const i64 ph0 = mono_phase(m0, gamma);
        if (k == 0) {
            Entry& e = col[g0];
            e = {0, 1, 0, 0, ph0};
            normalize(e);
            return col;
        }
        if (k == 1) {
            const Mono& m1 = s.monos[1];
            for (i64 d = 0; d < n; ++d) {
                Entry e{0, 1, 0, 0, ph0 + mono_phase(m1, d) - s.sigmas[0] * B(g0, d)};
                kappa(s.sigmas[0], e);
                normalize(e);
                col[signed_elt(m1.eps, d)] = e;
            }
            return col;
        }
        const Mono& m1 = s.monos[1];
        const Mono& m2 = s.monos[2];
        const auto& K = kernel(m1.x);
        const i64 a1 = signed_elt(s.sigmas[0], g0);
        const int s2 = s.sigmas[1] * m1.eps;
        for (i64 eta = 0; eta < n; ++eta) {
            i64 alpha = add(a1, signed_elt(s2, eta));
            const Coeff& kc = K[alpha];
            Entry& e = col[signed_elt(m2.eps, eta)];
            if (kc.cls < 0) {
                e = {};
                continue;
            }
            e = {kc.cls, kc.content, 0, 0, ph0 + m1.c + mono_phase(m2, eta) + kc.f};
            kappa(s.sigmas[0], e);
            kappa(s.sigmas[1], e);
            normalize(e);
        }
        return col;
    }

    static bool scaled_equal(i64 c1, int a1, i64 c2, int a2, i64 base) {
        if (a1 < a2) return scaled_equal(c2, a2, c1, a1, base);
        i128 v = c1;
        for (int i = 0; i < a1 - a2; ++i) {
            v *= base;
            if (v > (static_cast<i128>(1) << 100)) return false;
        }
        return v == c2;
    }

    bool equal(Entry x, Entry y) {
        if (x.cls < 0 || y.cls < 0) return x.cls < 0 && y.cls < 0;
        if (x.gpow != y.gpow) {
            Entry& z = x.gpow == 1 ? x : y;
            Coeff c = times_gauss(z.cls);
            z.cls = c.cls;
            z.content *= c.content;
            z.f = mod(z.f + c.f, L);
            z.gpow = 0;
        }
        return x.cls == y.cls && mod(x.f - y.f, L) == 0 && scaled_equal(x.content, x.apow, y.content, y.apow, n);
    }

    // Generic exact application for any number of S letters.
    WeilVector apply(const WeilWord& w, i64 gamma, i64 budget) const {
        const int ns = word_s_count(w);
        if (static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(L) * ns > static_cast<double>(budget) * 1000.0)
            throw BudgetExceeded("word application exceeds the enumeration budget");
        double growth = 1;
        for (int i = 0; i < ns; ++i) growth *= static_cast<double>(n);
        if (growth > 1e15) throw BudgetExceeded("word too long for exact 64-bit evaluation");
        std::vector<std::vector<i64>> v(n);
        v[gamma] = ring.zero();
        v[gamma][0] = 1;
        int gpow = 0, apow = 0;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            if (it->kind == 'T') {
                for (i64 d = 0; d < n; ++d)
                    if (!v[d].empty()) v[d] = ring.rotated(v[d], static_cast<i64>(static_cast<i128>(mod(it->power, D)) * qL[d] % L));
            } else if (it->kind == 'Z') {
                i64 k = mod(it->power, 4);
                std::vector<std::vector<i64>> nv(n);
                for (i64 d = 0; d < n; ++d)
                    if (!v[d].empty()) nv[k % 2 ? negt[d] : d] = ring.rotated(v[d], -k * zs);
                v = std::move(nv);
            } else {
                int sigma = it->power > 0 ? 1 : -1;
                for (i64 r = 0; r < std::abs(it->power); ++r) {
                    std::vector<std::vector<i64>> nv(n, ring.zero());
                    for (i64 c = 0; c < n; ++c) {
                        if (v[c].empty()) continue;
                        for (i64 k = 0; k < L; ++k) {
                            const i64 val = v[c][k];
                            if (val == 0) continue;
                            for (i64 d = 0; d < n; ++d) {
                                i64 idx = k - sigma * B(c, d);
                                idx %= L;
                                if (idx < 0) idx += L;
                                nv[d][idx] += val;
                            }
                        }
                    }
                    v = std::move(nv);
                    if (sigma > 0) {
                        gpow -= 1;
                    } else {
                        gpow += 1;
                        apow -= 1;
                    }
                }
            }
        }
        Cyclotomic scale(1);
        Cyclotomic G = to_cyclotomic(Gvec);
        while (gpow >= 2) {
            gpow -= 2;
            apow += 1;
            scale *= Cyclotomic::zeta(L, zs);
        }
        while (gpow < 0) {
            gpow += 2;
            apow -= 1;
            scale *= Cyclotomic::zeta(L, -zs);
        }
        if (gpow == 1) scale *= G;
        Rational an = 1;
        for (int i = 0; i < std::abs(apow); ++i) an *= Rational(static_cast<long>(n));
        if (apow < 0) an = 1 / an;
        scale = scale * an;
        WeilVector out;
        for (i64 d = 0; d < n; ++d) {
            if (v[d].empty()) continue;
            ring.canonicalize(v[d]);
            Cyclotomic c = to_cyclotomic(v[d]);
            if (!c.is_zero()) out.emplace(d, c * scale);
        }
        return out;
    }

    Cyclotomic to_cyclotomic(const std::vector<i64>& v) const {
        Cyclotomic c;
        for (i64 k = 0; k < L; ++k)
            if (v[k] != 0) c += Cyclotomic::zeta(L, k) * Rational(static_cast<long>(v[k]));
        return c;
    }
};

WeilEngine::WeilEngine(const DiscriminantGroup& g) : impl_(std::make_unique<Impl>(g)) {}
WeilEngine::~WeilEngine() = default;

const DiscriminantGroup& WeilEngine::group() const { return impl_->g; }
int WeilEngine::signature() const { return impl_->sign; }
i64 WeilEngine::cyclotomic_order() const { return impl_->L; }

WeilVector WeilEngine::apply(const WeilWord& w, i64 gamma) const { return impl_->apply(w, gamma, 1000000); }

std::vector<i64> WeilEngine::support(const WeilWord& w, i64 gamma) const {
    auto col = impl_->column(impl_->segments(w), gamma);
    std::vector<i64> out;
    for (i64 d = 0; d < impl_->n; ++d)
        if (col[d].cls >= 0) out.push_back(d);
    return out;
}

bool WeilEngine::relation_holds(const WeilWord& left, const WeilWord& right) const {
    auto sl = impl_->segments(left), sr = impl_->segments(right);
    for (i64 gamma = 0; gamma < impl_->n; ++gamma) {
        auto a = impl_->column(sl, gamma), b = impl_->column(sr, gamma);
        for (i64 d = 0; d < impl_->n; ++d)
            if (!impl_->equal(a[d], b[d])) return false;
    }
    return true;
}

bool WeilEngine::scalar_permutation(const WeilWord& w, const RootOfUnity& chi, i64 a) const {
    Impl& I = *impl_;
    const Rational chi_l = chi.exponent() * Rational(static_cast<long>(I.L));
    if (!is_integer(chi_l)) throw std::invalid_argument("character value outside the cyclotomic field");
    const i64 chi_f = to_i64(chi_l.get_num());
    // Split w = U V with at most two S letters in V, scanning from the right.
    std::size_t cut = w.size();
    int seen = 0;
    while (cut > 0) {
        const auto& l = w[cut - 1];
        int s = l.kind == 'S' ? static_cast<int>(std::abs(l.power)) : 0;
        if (seen + s > 2) break;
        seen += s;
        --cut;
    }
    WeilWord U(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
    WeilWord V(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
    if (word_s_count(U) > 2) {
        // Long words: exact generic application column by column.
        Cyclotomic c = Cyclotomic::from_root(chi);
        for (i64 gamma = 0; gamma < I.n; ++gamma) {
            auto v = I.apply(w, gamma, 1000000);
            i64 tgt = I.g.scale(a, gamma);
            if (v.size() != 1 || v.begin()->first != tgt || v.begin()->second != c) return false;
        }
        return true;
    }
    auto sv = I.segments(V), su = I.segments(word_inverse(U));
    for (i64 gamma = 0; gamma < I.n; ++gamma) {
        auto left = I.column(sv, gamma);
        auto right = I.column(su, I.g.scale(a, gamma));
        for (i64 d = 0; d < I.n; ++d) {
            auto r = right[d];
            r.f = mod(r.f + chi_f, I.L);
            if (!I.equal(left[d], r)) return false;
        }
    }
    return true;
}

namespace {

void check_budget(const DiscriminantGroup& g, i64 budget) {
    if (g.size() > budget) throw BudgetExceeded("group of order " + std::to_string(g.size()) + " exceeds budget " + std::to_string(budget));
}

Cyclotomic inverse_gauss(const DiscriminantGroup& g) {
    const i64 D = g.denominator();
    Cyclotomic G;
    std::vector<i64> cnt(D, 0);
    for (i64 x = 0; x < g.size(); ++x) ++cnt[g.quad_num(x)];
    for (i64 k = 0; k < D; ++k)
        if (cnt[k]) G += Cyclotomic::zeta(D, k) * Rational(static_cast<long>(cnt[k]));
    return G.conj() * make_rational(1, g.size());
}

}  // namespace

CycloMatrix rho_T(const DiscriminantGroup& g, i64 budget) {
    check_budget(g, budget);
    const i64 n = g.size();
    CycloMatrix m(n, std::vector<Cyclotomic>(n));
    for (i64 x = 0; x < n; ++x) m[x][x] = Cyclotomic::zeta(g.denominator(), g.quad_num(x));
    return m;
}

CycloMatrix rho_S(const DiscriminantGroup& g, i64 budget) {
    check_budget(g, budget);
    const i64 n = g.size();
    const i64 D = g.denominator();
    const Cyclotomic k = inverse_gauss(g);
    CycloMatrix m(n, std::vector<Cyclotomic>(n));
    for (i64 x = 0; x < n; ++x)
        for (i64 y = 0; y < n; ++y) m[y][x] = k * Cyclotomic::zeta(D, -g.bil_num(x, y));
    return m;
}

CycloMatrix rho_Z(const DiscriminantGroup& g, i64 budget) {
    check_budget(g, budget);
    const i64 n = g.size();
    CycloMatrix m(n, std::vector<Cyclotomic>(n));
    for (i64 x = 0; x < n; ++x) {
        auto [s, y] = rho_Z_action(g, x);
        m[y][x] = Cyclotomic::from_root(s);
    }
    return m;
}

CycloMatrix matmul(const CycloMatrix& x, const CycloMatrix& y) {
    const std::size_t n = x.size(), k = y.size(), m = y.empty() ? 0 : y[0].size();
    CycloMatrix r(n, std::vector<Cyclotomic>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (x[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!y[l][j].is_zero()) r[i][j] += x[i][l] * y[l][j];
        }
    return r;
}

CycloMatrix conj_transpose(const CycloMatrix& x) {
    const std::size_t n = x.size(), m = x.empty() ? 0 : x[0].size();
    CycloMatrix r(m, std::vector<Cyclotomic>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) r[j][i] = x[i][j].conj();
    return r;
}

std::pair<RootOfUnity, i64> rho_Z_action(const DiscriminantGroup& g, i64 gamma) {
    int s = milgram_signature(g);
    return {RootOfUnity::from_fraction(-s, 4), g.neg(gamma)};
}

WeilVector rho_word_apply_e0(const DiscriminantGroup& g, const WeilWord& w, i64 budget) {
    check_budget(g, budget);
    WeilEngine e(g);
    return e.apply(w, 0);
}

std::vector<i64> support_e0(const DiscriminantGroup& g, i64 c) {
    WeilEngine e(g);
    i64 n = gcd(g.level(), c);
    return e.support({{'S', 1}, {'T', n}, {'S', 1}}, 0);
}

Gamma0ActionResult gamma0_action_check(const WeilEngine& engine, const MetaplecticElement& m) {
    const auto& g = engine.group();
    const i64 N = g.level();
    if (mod(m.m.b, N) != 0 || mod(m.m.c, N) != 0) throw std::invalid_argument("gamma0_action_check: need N | b and N | c");
    Gamma0ActionResult r;
    r.spec = chi_of_discriminant_form(g.size(), engine.signature(), N);
    r.scalar = char_eval(r.spec, m);
    r.word = decompose(m);
    r.holds = engine.scalar_permutation(WeilWord(r.word.rbegin(), r.word.rend()), r.scalar, m.m.a);
    return r;
}

Gamma0ActionResult gamma0_action_check(const DiscriminantGroup& g, const MetaplecticElement& m) {
    WeilEngine e(g);
    return gamma0_action_check(e, m);
}

MetaplecticElement random_gamma0_bc(i64 N, std::mt19937_64& rng) {
    auto uni = [&](i64 lo, i64 hi) { return lo + static_cast<i64>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    i64 a, ap;
    if (N == 1) {
        a = uni(-4, 4);
        ap = uni(-4, 4);
    } else {
        do a = uni(1, 3 * N); while (gcd(a, N) != 1);
        ap = inv_mod(a, N) + N * uni(-1, 1);
    }
    Mat2 g0{a * (2 - a * ap), a * ap - 1, 1 - a * ap, ap};
    Mat2 m = Mat2{1, N * uni(-2, 2), 0, 1} * g0 * Mat2{1, N * uni(-2, 2), 0, 1};
    if (rng() % 2) m = -m;
    return mp(m.a, m.b, m.c, m.d, rng() % 2 ? 1 : -1);
}

WeilSuiteReport weil_suite(const DiscriminantGroup& g, const WeilSuiteOptions& opt) {
    WeilEngine e(g);
    WeilSuiteReport r;
    const WeilLetter S{'S', 1}, Si{'S', -1}, T{'T', 1}, Ti{'T', -1}, Z{'Z', 1};
    r.unitary = e.relation_holds({Si, S}, {});
    r.s_squared = e.relation_holds({S, S}, {Z});
    r.st_cubed = e.relation_holds({S, T, S, T}, {Z, Ti, Si});
    std::mt19937_64 rng(opt.seed);
    const i64 N = g.level();
    for (int i = 0; i < opt.character_samples; ++i) {
        MetaplecticElement m;
        for (int tries = 0; tries < 100; ++tries) {
            m = random_gamma0_bc(N, rng);
            if (word_s_count(decompose(m)) <= 4) break;
        }
        ++r.character_total;
        if (gamma0_action_check(e, m).holds) ++r.character_passed;
    }
    for (int i = 0; i < opt.support_samples; ++i) {
        WeilWord w;
        int ns = static_cast<int>(rng() % 3);
        auto rand_t = [&] { return static_cast<i64>(rng() % static_cast<std::uint64_t>(4 * N + 1)) - 2 * N; };
        for (int j = 0; j <= ns; ++j) {
            i64 t = rand_t();
            for (i64 u = 0; u < std::abs(t); ++u) w.push_back(t > 0 ? T : Ti);
            if (j < ns) w.push_back(S);
        }
        i64 c = word_element(w).m.c;
        auto coset = subgroup_data(g, c).coset;
        auto sup = e.support(w, 0);
        ++r.support_total;
        if (std::includes(coset.begin(), coset.end(), sup.begin(), sup.end())) ++r.support_passed;
    }
    return r;
}

}  // namespace modkit
