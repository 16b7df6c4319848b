#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modkit/characters.hpp"
#include "modkit/discforms.hpp"
#include "modkit/gamma0.hpp"

namespace modkit {

// Local exponents at a cusp of width h: x with h * x - offset integral (x in powers of q = e(tau)).
struct AllowedExponents {
    Rational offset;   // in [0, 1), in the local parameter q_h
    Rational spacing;  // 1 / h
    bool contains(const Rational& x) const;
};

AllowedExponents allowed_exponents(i64 N, const CharacterSpec& spec, const CuspClass& cusp);

enum class Justification { hall_divisor, norm_profile };

struct SingularitySlot {
    CuspClass cusp;
    Rational exponent;  // q^{exponent} after slashing to the cusp, in [-1, 0)
    Justification why = Justification::norm_profile;
    // m with q^{exponent} = q_h^{-m}
    Rational local_order() const;
};

// Every gamma in A^{c*} with gamma^2/2 = x mod 1 has order dividing -1/x (none allowed when -1/x is not integral).
bool pole_is_reflective(const DiscriminantGroup& A, i64 c, const Rational& x);

// unit_fraction: only poles q^{-1/n}. extended: any q^x with -1 <= x < 0 passing pole_is_reflective,
// which admits poles such as q_5^{-4} whose norm class is empty.
enum class PoleRule { unit_fraction, extended };

struct ReflectiveOptions {
    PoleRule rule = PoleRule::extended;
    i64 budget = 1000000;
};

// Reflective poles at the cusp for chi_A on Gamma_0(N); throws BudgetExceeded when |A| exceeds the budget.
std::vector<SingularitySlot> reflective_orders(const DiscriminantGroup& A, i64 N, const CuspClass& cusp, const ReflectiveOptions& opt = {});

enum class Verdict { guaranteed, undecided, none };
std::string to_string(Verdict v);
std::string to_string(Justification j);
std::string to_string(PoleRule r);

struct CandidateReport {
    GenusSymbol symbol;
    i64 N = 1;
    int signature = 0;
    Rational weight;
    CharacterSpec chi;
    std::vector<SingularitySlot> slots;
    std::optional<i64> obstruction;
    std::optional<i64> holomorphic;  // dim of holomorphic forms of the weight, informational
    Verdict verdict = Verdict::none;
    bool realizability_unverified = true;

    i64 slot_count() const { return static_cast<i64>(slots.size()); }
};

// Forms of weight signature/2 and character chi_A on Gamma_0(N); N = 0 uses the level of the symbol.
CandidateReport existence_bound(const GenusSymbol& symbol, int signature, i64 N = 0, const ReflectiveOptions& opt = {});

struct SearchOptions {
    i64 max_order = 1;  // largest |A| enumerated
    ReflectiveOptions reflective;
    unsigned threads = 0;  // 0: hardware concurrency
};

// All symbols of level dividing N with |A| <= max_order, each at every signature in range congruent mod 8.
std::vector<CandidateReport> search(i64 N, int sig_min, int sig_max, const SearchOptions& opt = {});

}  // namespace modkit
