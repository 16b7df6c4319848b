#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "modkit/characters.hpp"
#include "modkit/dims.hpp"
#include "modkit/discforms.hpp"
#include "modkit/etaq.hpp"
#include "modkit/gamma0.hpp"
#include "modkit/reflective.hpp"
#include "modkit/weil.hpp"
#include "selftest.hpp"

using namespace modkit;
using json = nlohmann::ordered_json;

namespace {

constexpr int exit_precondition = 2;
constexpr int exit_usage = 64;

struct Output {
    std::string format = "json";
    std::string out;
};

// One subcommand result: a JSON payload plus the equivalent TSV rows.
struct Result {
    json params = json::object();
    json results;
    std::vector<std::string> tsv_header;
    std::vector<std::vector<std::string>> tsv_rows;
};

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

void emit(const std::string& command, const Output& o, const Result& r, double seconds) {
    std::ostringstream os;
    if (o.format == "tsv") {
        os << join(r.tsv_header, "\t") << "\n";
        for (const auto& row : r.tsv_rows) os << join(row, "\t") << "\n";
    } else {
        json env;
        env["command"] = command;
        env["version"] = MODKIT_VERSION;
        env["params"] = r.params;
        env["results"] = r.results;
        env["timing"] = {{"seconds", seconds}};
        os << env.dump(2) << "\n";
    }
    if (o.out.empty()) {
        std::cout << os.str();
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw std::invalid_argument("cannot write " + o.out);
    f << os.str();
}

std::string str(i64 v) { return std::to_string(v); }
std::string str(const Rational& r) { return to_string(r); }

json character_json(const CharacterSpec& c) { return {{"level", c.N}, {"theta", c.e}, {"quad", c.m}, {"label", c.to_string()}}; }

Result gamma0_info(i64 N) {
    const auto d = gamma0_data(N);
    Result r;
    r.params = {{"level", N}};
    json cusps = json::array();
    r.tsv_header = {"N", "index", "nu2", "nu3", "nu_inf", "genus", "cusp", "width"};
    for (const auto& c : d.cusps) {
        cusps.push_back({{"cusp", c.label}, {"a", c.a}, {"c", c.c}, {"width", c.width}});
        r.tsv_rows.push_back({str(N), str(d.index), str(d.nu2), str(d.nu3), str(static_cast<i64>(d.cusps.size())), str(d.genus), c.label, str(c.width)});
    }
    r.results = {{"N", N}, {"index", d.index}, {"nu2", d.nu2}, {"nu3", d.nu3}, {"nu_inf", d.cusps.size()}, {"genus", d.genus}, {"cusps", cusps}};
    return r;
}

std::vector<i64> parse_ints(const std::string& s) {
    std::vector<i64> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(std::stoll(item));
    return v;
}

Result char_eval_cmd(i64 N, int e, i64 m, const std::string& matrix) {
    const auto v = parse_ints(matrix);
    if (v.size() != 4 && v.size() != 5) throw std::invalid_argument("--matrix expects a,b,c,d[,branch]");
    const int branch = v.size() == 5 ? static_cast<int>(v[4]) : 1;
    if (branch != 1 && branch != -1) throw std::invalid_argument("branch must be 1 or -1");
    const auto g = mp(v[0], v[1], v[2], v[3], branch);
    if (g.m.det() != 1) throw std::invalid_argument("matrix must have determinant 1");
    if (!in_gamma0(g.m, N)) throw std::invalid_argument("matrix is not in Gamma_0(N)");
    const CharacterSpec spec(N, e, m);
    if (!spec.admissible()) throw std::invalid_argument("character " + spec.to_string() + " is not admissible at this level");
    const auto val = char_eval(spec, g);
    Result r;
    r.params = {{"level", N}, {"theta", e}, {"quad", m}, {"matrix", matrix}};
    r.results = {{"character", character_json(spec)}, {"element", g.to_string()}, {"value", val.to_string()}, {"exponent", str(val.exponent())}};
    r.tsv_header = {"character", "element", "value", "exponent"};
    r.tsv_rows = {{spec.to_string(), g.to_string(), val.to_string(), str(val.exponent())}};
    return r;
}

Result disc_enumerate(i64 N, i64 max_order, std::optional<int> sign) {
    Result r;
    r.params = {{"level", N}, {"max_order", max_order}};
    if (sign) r.params["sign"] = *sign;
    r.results = json::array();
    r.tsv_header = {"symbol", "order", "level", "signature"};
    for (const auto& s : enumerate_symbols(N, max_order, sign)) {
        r.results.push_back({{"symbol", s.to_string()}, {"order", s.order()}, {"level", s.level()}, {"signature", s.signature()}});
        r.tsv_rows.push_back({s.to_string(), str(s.order()), str(s.level()), std::to_string(s.signature())});
    }
    return r;
}

Result weil_check(const std::string& text, i64 budget) {
    const auto sym = GenusSymbol::parse(text);
    if (sym.order() > budget) throw BudgetExceeded("|A| = " + str(sym.order()) + " exceeds budget " + str(budget));
    const auto g = realize_group(sym);
    const auto rep = weil_suite(g);
    Result r;
    r.params = {{"symbol", text}, {"budget", budget}};
    r.results = {{"symbol", sym.to_string()},
                 {"order", g.size()},
                 {"level", g.level()},
                 {"milgram_signature", milgram_signature(g)},
                 {"unitary", rep.unitary},
                 {"s_squared", rep.s_squared},
                 {"st_cubed", rep.st_cubed},
                 {"character_passed", rep.character_passed},
                 {"character_total", rep.character_total},
                 {"support_passed", rep.support_passed},
                 {"support_total", rep.support_total},
                 {"ok", rep.ok()}};
    r.tsv_header = {"symbol", "order", "level", "unitary", "s_squared", "st_cubed", "character", "support", "ok"};
    auto b = [](bool x) { return std::string(x ? "true" : "false"); };
    r.tsv_rows = {{sym.to_string(), str(g.size()), str(g.level()), b(rep.unitary), b(rep.s_squared), b(rep.st_cubed),
                   std::to_string(rep.character_passed) + "/" + std::to_string(rep.character_total),
                   std::to_string(rep.support_passed) + "/" + std::to_string(rep.support_total), b(rep.ok())}};
    return r;
}

Result eta_classify(i64 N, const std::string& max_order, bool allow_poles) {
    const Rational bound = parse_rational(max_order);
    const auto cusps = cusp_representatives(N);
    Result r;
    r.params = {{"level", N}, {"max_order", max_order}, {"allow_poles", allow_poles}};
    r.results = json::array();
    r.tsv_header = {"eta", "weight", "character"};
    for (const auto& c : cusps) r.tsv_header.push_back("ord_" + c.label);
    for (const auto& e : classify_bounded(N, bound, !allow_poles)) {
        const auto wc = etaq_weight_char(e);
        json orders = json::object();
        std::vector<std::string> row = {e.exponent_string(), str(wc.weight), wc.chi.to_string()};
        for (const auto& c : cusps) {
            const auto o = etaq_order_at_cusp(e, c.c);
            orders[c.label] = str(o);
            row.push_back(str(o));
        }
        r.results.push_back({{"eta", e.exponent_string()}, {"weight", str(wc.weight)}, {"character", character_json(wc.chi)}, {"orders", orders}});
        r.tsv_rows.push_back(row);
    }
    return r;
}

json series_json(const QSeries& s) {
    json terms = json::array();
    for (const auto& [k, c] : s.terms()) terms.push_back({{"exponent", str(s.exponent_of(k))}, {"coefficient", c.get_str()}});
    json j = {{"terms", terms}};
    if (s.precision()) j["precision"] = str(*s.precision());
    return j;
}

Result eta_expand(i64 N, const std::string& exponents, const std::string& at, i64 prec) {
    const auto e = EtaQuotient::parse(N, exponents);
    Result r;
    r.params = {{"level", N}, {"exponents", exponents}, {"at", at}, {"prec", prec}};
    QSeries s;
    if (at == "inf") {
        s = etaq_expand_infinity(e, Rational(static_cast<long>(prec)));
        r.results = {{"eta", e.exponent_string()}, {"series", series_json(s)}};
    } else if (at == "zero") {
        auto z = etaq_expand_zero(e, Rational(static_cast<long>(prec)));
        s = z.series;
        r.results = {{"eta", e.exponent_string()}, {"prefactor", z.prefactor.to_string()}, {"series", series_json(s)}};
    } else {
        throw std::invalid_argument("--at must be inf or zero");
    }
    r.tsv_header = {"exponent", "coefficient"};
    for (const auto& [k, c] : s.terms()) r.tsv_rows.push_back({str(s.exponent_of(k)), c.get_str()});
    return r;
}

Result dims_cmd(i64 N, const std::string& weight, int e, i64 m, bool cusp) {
    const CharacterSpec spec(N, e, m);
    const Rational k = parse_rational(weight);
    const auto d = dim_any_weight({N, k, spec, cusp});
    Result r;
    r.params = {{"level", N}, {"weight", weight}, {"theta", e}, {"quad", m}, {"cusp_forms", cusp}};
    r.results = {{"character", character_json(spec)}, {"space", cusp ? "cusp" : "modular"}, {"dimension", d ? json(*d) : json(nullptr)}};
    r.tsv_header = {"level", "weight", "character", "space", "dimension"};
    r.tsv_rows = {{str(N), weight, spec.to_string(), cusp ? "cusp" : "modular", d ? str(*d) : "unknown"}};
    return r;
}

PoleRule parse_rule(const std::string& s) {
    if (s == "extended") return PoleRule::extended;
    if (s == "unit-fraction" || s == "unit_fraction") return PoleRule::unit_fraction;
    throw std::invalid_argument("--rule must be extended or unit-fraction");
}

json report_json(const CandidateReport& c) {
    json slots = json::array();
    for (const auto& s : c.slots)
        slots.push_back({{"cusp", s.cusp.label}, {"exponent", str(s.exponent)}, {"local_order", str(s.local_order())}, {"justification", to_string(s.why)}});
    return {{"symbol", c.symbol.to_string()},
            {"symbol_level", c.symbol.level()},
            {"order", c.symbol.order()},
            {"level", c.N},
            {"signature", c.signature},
            {"weight", str(c.weight)},
            {"character", character_json(c.chi)},
            {"slots", slots},
            {"slot_count", c.slot_count()},
            {"obstruction", c.obstruction ? json(*c.obstruction) : json(nullptr)},
            {"holomorphic", c.holomorphic ? json(*c.holomorphic) : json(nullptr)},
            {"verdict", to_string(c.verdict)},
            {"realizability_unverified", c.realizability_unverified}};
}

Result reflective_search(i64 N, int lo, int hi, i64 max_order, const std::string& rule, i64 budget) {
    SearchOptions opt;
    opt.max_order = max_order;
    opt.reflective.rule = parse_rule(rule);
    opt.reflective.budget = budget;
    Result r;
    r.params = {{"level", N}, {"sig_min", lo}, {"sig_max", hi}, {"max_order", max_order}, {"rule", rule}, {"budget", budget}};
    r.results = json::array();
    r.tsv_header = {"symbol", "level", "signature", "weight", "character", "slots", "obstruction", "verdict"};
    for (const auto& c : search(N, lo, hi, opt)) {
        r.results.push_back(report_json(c));
        r.tsv_rows.push_back({c.symbol.to_string(), str(c.N), std::to_string(c.signature), str(c.weight), c.chi.to_string(), str(c.slot_count()),
                              c.obstruction ? str(*c.obstruction) : "unknown", to_string(c.verdict)});
    }
    return r;
}

void add_output_flags(CLI::App* sub, Output& o) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();
    sub->add_option("--out", o.out, "Write output to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modkit: discriminant forms, modular-form characters, dimensions, eta quotients and reflective searches"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(MODKIT_VERSION));
    Output out;
    std::function<Result()> action;
    std::string command;

    auto* g0 = app.add_subcommand("gamma0", "Gamma_0(N) invariants");
    g0->require_subcommand(1);
    auto* g0info = g0->add_subcommand("info", "Index, elliptic points, cusps and genus");
    i64 level = 1;
    g0info->add_option("N", level, "Level")->required()->check(CLI::PositiveNumber);
    add_output_flags(g0info, out);
    g0info->callback([&] {
        command = "gamma0 info";
        action = [&] { return gamma0_info(level); };
    });

    auto* chr = app.add_subcommand("char", "Characters of the metaplectic Gamma_0(N)");
    chr->require_subcommand(1);
    auto* chr_eval = chr->add_subcommand("eval", "Evaluate chi_theta^e chi_m on an element");
    int theta = 0;
    i64 quad = 1;
    std::string matrix;
    chr_eval->add_option("--level", level, "Level")->required()->check(CLI::PositiveNumber);
    chr_eval->add_option("--theta", theta, "Exponent of chi_theta (mod 4)")->capture_default_str();
    chr_eval->add_option("--quad", quad, "Quadratic character parameter m")->capture_default_str();
    chr_eval->add_option("--matrix", matrix, "a,b,c,d[,branch]")->required();
    add_output_flags(chr_eval, out);
    chr_eval->callback([&] {
        command = "char eval";
        action = [&] { return char_eval_cmd(level, theta, quad, matrix); };
    });

    auto* disc = app.add_subcommand("disc", "Discriminant forms");
    disc->require_subcommand(1);
    auto* disc_enum = disc->add_subcommand("enumerate", "Genus symbols of level dividing N");
    i64 max_order = 1;
    std::optional<int> sign;
    disc_enum->add_option("--level", level, "Level")->required()->check(CLI::PositiveNumber);
    disc_enum->add_option("--max-order", max_order, "Bound on |A|")->required()->check(CLI::PositiveNumber);
    disc_enum->add_option("--sign", sign, "Signature mod 8");
    add_output_flags(disc_enum, out);
    disc_enum->callback([&] {
        command = "disc enumerate";
        action = [&] { return disc_enumerate(level, max_order, sign); };
    });

    auto* weil = app.add_subcommand("weil", "Weil representation");
    weil->require_subcommand(1);
    auto* weil_chk = weil->add_subcommand("check", "Relation, support and character checks");
    std::string symbol;
    i64 budget = 1000000;
    weil_chk->add_option("--symbol", symbol, "Genus symbol, e.g. \"2^{+2}_6 3^{-1}\"")->required();
    weil_chk->add_option("--budget", budget, "Bound on |A|")->capture_default_str();
    add_output_flags(weil_chk, out);
    weil_chk->callback([&] {
        command = "weil check";
        action = [&] { return weil_check(symbol, budget); };
    });

    auto* eta = app.add_subcommand("eta", "Eta quotients");
    eta->require_subcommand(1);
    auto* eta_cls = eta->add_subcommand("classify", "Quotients with bounded cusp orders");
    std::string eta_max = "1";
    bool allow_poles = false;
    eta_cls->add_option("N", level, "Level")->required()->check(CLI::PositiveNumber);
    eta_cls->add_option("--max-order", eta_max, "Bound on the local cusp orders")->capture_default_str();
    eta_cls->add_flag("--allow-poles", allow_poles, "Allow orders down to -max-order");
    add_output_flags(eta_cls, out);
    eta_cls->callback([&] {
        command = "eta classify";
        action = [&] { return eta_classify(level, eta_max, allow_poles); };
    });
    auto* eta_exp = eta->add_subcommand("expand", "q-expansion at infinity or zero");
    std::string exponents, at = "inf";
    i64 prec = 25;
    eta_exp->add_option("--level", level, "Level")->required()->check(CLI::PositiveNumber);
    eta_exp->add_option("--exponents", exponents, "\"1:-2,2:5,4:-2\" or \"1^{-2}2^{5}4^{-2}\"")->required();
    eta_exp->add_option("--at", at, "inf or zero")->check(CLI::IsMember({"inf", "zero"}))->capture_default_str();
    eta_exp->add_option("--prec", prec, "Precision in q")->check(CLI::PositiveNumber)->capture_default_str();
    add_output_flags(eta_exp, out);
    eta_exp->callback([&] {
        command = "eta expand";
        action = [&] { return eta_expand(level, exponents, at, prec); };
    });

    auto* dims = app.add_subcommand("dims", "Dimension of M_k or S_k with character");
    std::string weight;
    bool cusp_forms = false;
    dims->add_option("--level", level, "Level")->required()->check(CLI::PositiveNumber);
    dims->add_option("--weight", weight, "Weight, integral or half-integral (e.g. 5/2)")->required();
    dims->add_option("--theta", theta, "Exponent of chi_theta")->capture_default_str();
    dims->add_option("--quad", quad, "Quadratic character parameter m")->capture_default_str();
    dims->add_flag("--cusp-forms", cusp_forms, "Cusp forms instead of modular forms");
    add_output_flags(dims, out);
    dims->callback([&] {
        command = "dims";
        action = [&] { return dims_cmd(level, weight, theta, quad, cusp_forms); };
    });

    auto* refl = app.add_subcommand("reflective", "Reflective modular forms");
    refl->require_subcommand(1);
    auto* refl_search = refl->add_subcommand("search", "Existence bounds for symbols of level dividing N");
    int sig_min = 0, sig_max = 0;
    i64 search_order = 1;
    std::string rule = "extended";
    refl_search->add_option("--level", level, "Ambient level N")->required()->check(CLI::PositiveNumber);
    refl_search->add_option("--sig-min", sig_min, "Smallest signature")->required();
    refl_search->add_option("--sig-max", sig_max, "Largest signature")->required();
    refl_search->add_option("--max-order", search_order, "Bound on |A|")->check(CLI::PositiveNumber)->capture_default_str();
    refl_search->add_option("--rule", rule, "Pole rule: extended or unit-fraction")->capture_default_str();
    refl_search->add_option("--budget", budget, "Bound on |A| for the norm-profile check")->capture_default_str();
    add_output_flags(refl_search, out);
    refl_search->callback([&] {
        command = "reflective search";
        action = [&] { return reflective_search(level, sig_min, sig_max, search_order, rule, budget); };
    });

    auto* st = app.add_subcommand("selftest", "Run the acceptance suite against the table corpus");
    std::string tables = MODKIT_TABLES_DIR;
    unsigned threads = 0;
    st->add_option("--tables", tables, "Directory holding the TSV tables")->capture_default_str();
    st->add_option("--threads", threads, "Worker threads (0: hardware concurrency)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return exit_usage;
    }

    if (st->parsed()) {
        selftest::Options opt{tables, threads};
        int failed = 0;
        for (const auto& c : selftest::criteria()) {
            auto r = selftest::run(c, opt);
            std::cout << selftest::format_line(r) << std::endl;
            if (!r.pass) ++failed;
        }
        return failed ? 1 : 0;
    }

    try {
        const auto t0 = std::chrono::steady_clock::now();
        Result r = action();
        emit(command, out, r, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", "precondition"}, {"command", command}, {"message", e.what()}}.dump() << "\n";
        return exit_precondition;
    } catch (const BudgetExceeded& e) {
        std::cerr << json{{"error", "budget"}, {"command", command}, {"message", e.what()}}.dump() << "\n";
        return exit_precondition;
    } catch (const std::out_of_range& e) {
        std::cerr << json{{"error", "precondition"}, {"command", command}, {"message", e.what()}}.dump() << "\n";
        return exit_precondition;
    }
    return 0;
}
