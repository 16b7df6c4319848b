#include "modkit/dirichlet.hpp"

#include <sstream>
#include <stdexcept>

namespace modkit {

namespace {

i64 primitive_root_prime_power(i64 p, int e) {
    i64 q = ipow(p, e);
    i64 phi = q / p * (p - 1);
    auto pf = prime_divisors(phi);
    for (i64 g = 2; g < q; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (i64 r : pf) {
            if (pow_mod(g, phi / r, q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    return 1;
}

struct UnitGenerator {
    i64 modulus_part;  // prime power q
    i64 gen;           // generator modulo q
    i64 order;
    std::vector<i64> log;  // discrete log mod q (-1 off units)
};

std::vector<UnitGenerator> unit_generators(i64 n) {
    std::vector<UnitGenerator> out;
    for (auto [p, e] : factorize(n)) {
        i64 q = ipow(p, e);
        if (p != 2) {
            UnitGenerator g{q, primitive_root_prime_power(p, e), q / p * (p - 1), std::vector<i64>(q, -1)};
            i64 x = 1;
            for (i64 k = 0; k < g.order; ++k) {
                g.log[x] = k;
                x = x * g.gen % q;
            }
            out.push_back(std::move(g));
        } else if (e >= 2) {
            UnitGenerator m1{q, q - 1, 2, std::vector<i64>(q, -1)};
            UnitGenerator g5{q, 5 % q, e >= 3 ? q / 4 : 1, std::vector<i64>(q, -1)};
            i64 x = 1;
            for (i64 k = 0; k < g5.order; ++k) {
                m1.log[x] = 0;
                g5.log[x] = k;
                m1.log[q - x] = 1;
                g5.log[q - x] = k;
                x = x * 5 % q;
            }
            out.push_back(std::move(m1));
            if (g5.order > 1) out.push_back(std::move(g5));
        }
    }
    return out;
}

}  // namespace

DirichletCharacter::DirichletCharacter(i64 modulus, std::vector<std::optional<RootOfUnity>> values)
    : n_(modulus), v_(std::move(values)) {
    if (n_ <= 0 || static_cast<i64>(v_.size()) != n_) throw std::invalid_argument("bad character table");
    for (i64 a = 0; a < n_; ++a) {
        if ((gcd(a, n_) == 1) != v_[a].has_value()) throw std::invalid_argument("character table support mismatch");
    }
    even_ = value(-1)->is_one();
    for (i64 d : divisors(n_)) {
        bool ok = true;
        for (i64 u = 1; u < n_ && ok; u += d) {
            if (gcd(u, n_) == 1 && !v_[u]->is_one()) ok = false;
        }
        if (ok) {
            conductor_ = d;
            break;
        }
    }
}

DirichletCharacter DirichletCharacter::principal(i64 modulus) {
    std::vector<std::optional<RootOfUnity>> v(modulus);
    for (i64 a = 0; a < modulus; ++a) {
        if (gcd(a, modulus) == 1) v[a] = RootOfUnity();
    }
    return DirichletCharacter(modulus, std::move(v));
}

DirichletCharacter DirichletCharacter::from_function(i64 modulus,
                                                     const std::function<std::optional<RootOfUnity>(i64)>& f) {
    std::vector<std::optional<RootOfUnity>> v(modulus);
    for (i64 a = 0; a < modulus; ++a) {
        if (gcd(a, modulus) == 1) v[a] = f(a);
    }
    return DirichletCharacter(modulus, std::move(v));
}

DirichletCharacter DirichletCharacter::kronecker_char(i64 d, i64 modulus) {
    return from_function(modulus, [&](i64 a) -> std::optional<RootOfUnity> {
        int k = kronecker(d, a);
        if (k == 0) throw std::invalid_argument("kronecker character vanishes on a unit");
        return k == 1 ? RootOfUnity() : RootOfUnity::minus_one();
    });
}

bool DirichletCharacter::is_principal() const { return conductor_ == 1; }

bool DirichletCharacter::is_real() const {
    for (const auto& x : v_) {
        if (x && x->order() > 2) return false;
    }
    return true;
}

i64 DirichletCharacter::order() const {
    i64 o = 1;
    for (const auto& x : v_) {
        if (x) o = lcm(o, x->order());
    }
    return o;
}

Cyclotomic DirichletCharacter::value_cyc(i64 a) const {
    auto v = value(a);
    return v ? Cyclotomic::from_root(*v) : Cyclotomic();
}

int DirichletCharacter::value_int(i64 a) const {
    auto v = value(a);
    if (!v) return 0;
    if (v->is_one()) return 1;
    if (*v == RootOfUnity::minus_one()) return -1;
    throw std::domain_error("character value is not real");
}

DirichletCharacter DirichletCharacter::primitive() const {
    i64 f = conductor_;
    return from_function(f, [&](i64 a) -> std::optional<RootOfUnity> {
        for (i64 u = a; ; u += f) {
            if (gcd(u, n_) == 1) return value(u);
        }
    });
}

DirichletCharacter DirichletCharacter::induced(i64 modulus) const {
    if (modulus % n_ != 0) throw std::invalid_argument("induced modulus must be a multiple");
    return from_function(modulus, [&](i64 a) { return value(a); });
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& o) const {
    i64 m = lcm(n_, o.n_);
    return from_function(m, [&](i64 a) -> std::optional<RootOfUnity> { return *value(a) * *o.value(a); });
}

std::string DirichletCharacter::to_string() const {
    std::ostringstream os;
    os << "chi mod " << n_ << " (conductor " << conductor_ << ", " << (even_ ? "even" : "odd") << ")";
    return os.str();
}

std::vector<DirichletCharacter> dirichlet_characters(i64 modulus) {
    auto gens = unit_generators(modulus);
    std::vector<DirichletCharacter> out;
    std::vector<i64> exps(gens.size(), 0);
    while (true) {
        std::vector<std::optional<RootOfUnity>> v(modulus);
        for (i64 a = 0; a < modulus; ++a) {
            if (gcd(a, modulus) != 1) continue;
            Rational x = 0;
            for (std::size_t j = 0; j < gens.size(); ++j) {
                i64 lg = gens[j].log[a % gens[j].modulus_part];
                x += make_rational(exps[j] * lg, gens[j].order);
            }
            v[a] = RootOfUnity(x);
        }
        out.emplace_back(modulus, std::move(v));
        std::size_t j = 0;
        while (j < gens.size() && ++exps[j] == gens[j].order) exps[j++] = 0;
        if (j == gens.size()) break;
    }
    return out;
}

Cyclotomic generalized_bernoulli_B1(const DirichletCharacter& chi) {
    if (chi.is_principal() || chi.is_even()) throw std::domain_error("B1 requires an odd non-principal character");
    i64 n = chi.modulus();
    Cyclotomic s;
    for (i64 a = 1; a < n; ++a) {
        if (gcd(a, n) == 1) s += chi.value_cyc(a) * make_rational(a, n);
    }
    return s;
}

}  // namespace modkit
