#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "modkit/cyclotomic.hpp"

namespace modkit {

class DirichletCharacter {
public:
    // Values indexed by residue mod modulus; nullopt off the units.
    DirichletCharacter(i64 modulus, std::vector<std::optional<RootOfUnity>> values);

    static DirichletCharacter principal(i64 modulus);
    // n -> kronecker(d, n) as a character mod `modulus`; requires it to be one.
    static DirichletCharacter kronecker_char(i64 d, i64 modulus);
    static DirichletCharacter from_function(i64 modulus, const std::function<std::optional<RootOfUnity>(i64)>& f);

    i64 modulus() const { return n_; }
    i64 conductor() const { return conductor_; }
    bool is_even() const { return even_; }
    bool is_principal() const;
    bool is_real() const;
    i64 order() const;

    std::optional<RootOfUnity> value(i64 a) const { return v_[mod(a, n_)]; }
    Cyclotomic value_cyc(i64 a) const;
    // Integer value for real characters.
    int value_int(i64 a) const;

    DirichletCharacter primitive() const;
    DirichletCharacter induced(i64 modulus) const;  // requires modulus() | modulus
    DirichletCharacter operator*(const DirichletCharacter& o) const;
    bool operator==(const DirichletCharacter& o) const { return n_ == o.n_ && v_ == o.v_; }

    std::string to_string() const;

private:
    i64 n_;
    std::vector<std::optional<RootOfUnity>> v_;
    i64 conductor_ = 1;
    bool even_ = true;
};

std::vector<DirichletCharacter> dirichlet_characters(i64 modulus);

// B_{1,chi} = sum_{0<n<N} chi(n) n / N over the modulus N; chi odd, non-principal.
Cyclotomic generalized_bernoulli_B1(const DirichletCharacter& chi);

}  // namespace modkit
