#pragma once

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "modkit/characters.hpp"
#include "modkit/cyclo_int.hpp"
#include "modkit/cyclotomic.hpp"
#include "modkit/discforms.hpp"
#include "modkit/gamma0.hpp"

namespace modkit {

// Letters S^{+-1}, T^x and Z^k. A word lists letters in matrix-product order.
struct WeilLetter {
    char kind = 'T';
    i64 power = 1;
    bool operator==(const WeilLetter&) const = default;
};
using WeilWord = std::vector<WeilLetter>;

MetaplecticElement word_element(const WeilWord& w);
WeilWord word_inverse(const WeilWord& w);
int word_s_count(const WeilWord& w);
std::string word_to_string(const WeilWord& w);
WeilWord parse_word(const std::string& text);
// Nearest-integer Euclid on the first column; exact including the branch.
WeilWord decompose(const MetaplecticElement& g);

using CycloMatrix = std::vector<std::vector<Cyclotomic>>;
using WeilVector = std::map<i64, Cyclotomic>;

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Column gamma of a matrix is the image of e_gamma.
CycloMatrix rho_T(const DiscriminantGroup& g, i64 budget = 512);
CycloMatrix rho_S(const DiscriminantGroup& g, i64 budget = 512);
CycloMatrix rho_Z(const DiscriminantGroup& g, i64 budget = 512);
CycloMatrix matmul(const CycloMatrix& x, const CycloMatrix& y);
CycloMatrix conj_transpose(const CycloMatrix& x);

// ((-i)^sign, -gamma).
std::pair<RootOfUnity, i64> rho_Z_action(const DiscriminantGroup& g, i64 gamma);

WeilVector rho_word_apply_e0(const DiscriminantGroup& g, const WeilWord& w, i64 budget = 1000000);
// Support of T^0 S T^n S (e_0) with n = gcd(level, c).
std::vector<i64> support_e0(const DiscriminantGroup& g, i64 c);

// Exact evaluation engine for the Weil representation of one realized group.
class WeilEngine {
public:
    explicit WeilEngine(const DiscriminantGroup& g);
    ~WeilEngine();
    WeilEngine(const WeilEngine&) = delete;
    WeilEngine& operator=(const WeilEngine&) = delete;

    const DiscriminantGroup& group() const;
    int signature() const;
    i64 cyclotomic_order() const;

    // rho(w) e_gamma as a Cyclotomic vector (any number of S letters).
    WeilVector apply(const WeilWord& w, i64 gamma) const;
    // Nonzero targets of rho(w) e_gamma; w must contain at most two S letters.
    std::vector<i64> support(const WeilWord& w, i64 gamma) const;
    // rho(left) == rho(right) as matrices; each side needs at most two S letters.
    bool relation_holds(const WeilWord& left, const WeilWord& right) const;
    // rho(w) e_gamma == chi e_{a gamma} for all gamma.
    bool scalar_permutation(const WeilWord& w, const RootOfUnity& chi, i64 a) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

struct Gamma0ActionResult {
    bool holds = false;
    RootOfUnity scalar;
    CharacterSpec spec;
    WeilWord word;
};

// Row action e_gamma rho(g) = chi_A(g) e_{a gamma}, i.e. the reversed word acting on columns.
// Equivalently rho(g) e_gamma = chi_A(g) e_{d gamma}.
Gamma0ActionResult gamma0_action_check(const WeilEngine& engine, const MetaplecticElement& g);
Gamma0ActionResult gamma0_action_check(const DiscriminantGroup& g, const MetaplecticElement& m);

struct WeilSuiteOptions {
    int character_samples = 20;
    int support_samples = 20;
    std::uint64_t seed = 1;
};

struct WeilSuiteReport {
    bool unitary = false;
    bool s_squared = false;
    bool st_cubed = false;
    int character_passed = 0, character_total = 0;
    int support_passed = 0, support_total = 0;
    bool ok() const {
        return unitary && s_squared && st_cubed && character_passed == character_total && support_passed == support_total;
    }
};

WeilSuiteReport weil_suite(const DiscriminantGroup& g, const WeilSuiteOptions& opt = {});

// Random element of the form T^{Nm} g0 T^{Nk} (+-I) with N | b, N | c and an arbitrary branch.
MetaplecticElement random_gamma0_bc(i64 N, std::mt19937_64& rng);

}  // namespace modkit
