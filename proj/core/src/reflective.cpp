#include "modkit/reflective.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "modkit/arith.hpp"
#include "modkit/dims.hpp"
#include "modkit/weil.hpp"

namespace modkit {

namespace {

i64 element_order(const DiscriminantGroup& A, i64 x) {
    i64 o = 1;
    const auto c = A.coords(x);
    for (std::size_t i = 0; i < c.size(); ++i) o = lcm(o, A.orders()[i] / gcd(c[i], A.orders()[i]));
    return o;
}

}  // namespace

bool AllowedExponents::contains(const Rational& x) const { return is_integer(Rational(x / spacing - offset)); }

AllowedExponents allowed_exponents(i64 N, const CharacterSpec& spec, const CuspClass& cusp) {
    if (spec.N != N) throw std::invalid_argument("allowed_exponents: character level differs from N");
    RootOfUnity v = char_at_cusp(spec, cusp.a, cusp.c);
    return {frac(-v.exponent()), make_rational(1, cusp.width)};
}


Rational SingularitySlot::local_order() const { return -exponent * Rational(static_cast<long>(cusp.width)); }

bool pole_is_reflective(const DiscriminantGroup& A, i64 c, const Rational& x) {
    const Rational target = frac(x);
    const Rational n = -1 / x;
    for (i64 g : subgroup_data(A, c).coset) {
        if (A.quad(g) != target) continue;
        if (!is_integer(Rational(n / Rational(static_cast<long>(element_order(A, g)))))) return false;
    }
    return true;
}

std::vector<SingularitySlot> reflective_orders(const DiscriminantGroup& A, i64 N, const CuspClass& cusp, const ReflectiveOptions& opt) {
    if (A.size() > opt.budget) throw BudgetExceeded("reflective_orders: |A| = " + std::to_string(A.size()));
    if (N % A.level() != 0) throw std::invalid_argument("reflective_orders: level of A does not divide N");
    const CharacterSpec chi = chi_of_discriminant_form(A.size(), milgram_signature(A), N);
    const auto allowed = allowed_exponents(N, chi, cusp);
    const i64 h = cusp.width;
    const bool hall = A.level() == N && is_hall_divisor(gcd(cusp.c, N), N);
    std::vector<SingularitySlot> out;
    // local orders m = offset' + j in (0, h], offset' = -offset mod 1
    const Rational start = frac(-allowed.offset);
    for (Rational m = start == 0 ? Rational(1) : start; m <= Rational(static_cast<long>(h)); m += 1) {
        const Rational x = -m / Rational(static_cast<long>(h));
        if (opt.rule == PoleRule::unit_fraction && x.get_num() != -1) continue;
        if (hall && m == 1) {
            out.push_back({cusp, x, Justification::hall_divisor});
        } else if (pole_is_reflective(A, cusp.c, x)) {
            out.push_back({cusp, x, Justification::norm_profile});
        }
    }
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::guaranteed: return "guaranteed";
        case Verdict::undecided: return "undecided";
        case Verdict::none: return "none";
    }
    return "?";
}

std::string to_string(PoleRule r) { return r == PoleRule::unit_fraction ? "unit-fraction" : "extended"; }

std::string to_string(Justification j) { return j == Justification::hall_divisor ? "hall-divisor" : "norm-profile"; }

CandidateReport existence_bound(const GenusSymbol& symbol, int signature, i64 N, const ReflectiveOptions& opt) {
    if (mod(signature - symbol.signature(), 8) != 0)
        throw std::invalid_argument("signature " + std::to_string(signature) + " is not congruent to the signature of " + symbol.to_string());
    if (N == 0) N = symbol.level();
    if (N % symbol.level() != 0) throw std::invalid_argument("level of " + symbol.to_string() + " does not divide " + std::to_string(N));
    if (symbol.order() > opt.budget) throw BudgetExceeded("existence_bound: |A| = " + std::to_string(symbol.order()));
    CandidateReport r;
    r.symbol = symbol;
    r.N = N;
    r.signature = signature;
    r.weight = make_rational(signature, 2);
    r.chi = chi_of_discriminant_form(symbol.order(), signature, N);
    const DiscriminantGroup A = realize_group(symbol);
    for (const auto& cusp : gamma0_data(N).cusps)
        for (auto& s : reflective_orders(A, N, cusp, opt)) r.slots.push_back(s);
    r.obstruction = obstruction_dim(N, r.weight, r.chi);
    r.holomorphic = dim_any_weight({N, r.weight, r.chi});
    if (r.slots.empty()) r.verdict = Verdict::none;
    else if (r.obstruction && r.slot_count() > *r.obstruction) r.verdict = Verdict::guaranteed;
    else r.verdict = Verdict::undecided;
    return r;
}

std::vector<CandidateReport> search(i64 N, int sig_min, int sig_max, const SearchOptions& opt) {
    const std::vector<GenusSymbol> symbols = dedupe_symbols(enumerate_symbols(N, opt.max_order));
    struct Job {
        GenusSymbol symbol;
        int signature;
    };
    std::vector<Job> jobs;
    for (const auto& s : symbols) {
        const std::size_t rank = realize_group(s).rank();
        for (int sig = sig_min; sig <= sig_max; ++sig) {
            if (mod(sig - s.signature(), 8) != 0) continue;
            // the lattice would have signature (2, 2 - sig)
            if (static_cast<i64>(rank) > 4 - static_cast<i64>(sig)) continue;
            jobs.push_back({s, sig});
        }
    }
    std::vector<CandidateReport> out(jobs.size());
    unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));
    std::vector<std::future<void>> workers;
    for (unsigned t = 0; t < threads; ++t)
        workers.push_back(std::async(std::launch::async, [&, t] {
            for (std::size_t i = t; i < jobs.size(); i += threads) out[i] = existence_bound(jobs[i].symbol, jobs[i].signature, N, opt.reflective);
        }));
    for (auto& w : workers) w.get();
    std::stable_sort(out.begin(), out.end(), [](const CandidateReport& a, const CandidateReport& b) {
        return std::make_tuple(a.N, a.symbol.order(), a.signature, a.symbol.to_string()) <
               std::make_tuple(b.N, b.symbol.order(), b.signature, b.symbol.to_string());
    });
    return out;
}

}  // namespace modkit
