#include "qfoulkes/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "qfoulkes/cache.hpp"
#include "qfoulkes/configsearch.hpp"
#include "qfoulkes/foulkes.hpp"
#include "qfoulkes/hall_littlewood.hpp"
#include "qfoulkes/json_io.hpp"
#include "qfoulkes/suites.hpp"

namespace qfoulkes {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Mode { q, q0, q1 };

struct Args {
    int a = 0, b = 0, c = 0, d = 0, n = 0, k = 0;
    bool q = false, q0 = false, q1 = false;
    bool want_q_configs = false, check_table = false, conj4 = false, guess = false;
    bool alternating = false, immanant = false;
    std::string lambda, mu, seq, suite;
    std::string alpha, beta, gamma, delta;
};

Mode mode_of(const Args& args)
{
    if (int(args.q) + int(args.q0) + int(args.q1) > 1)
        throw UsageError("--q, --q0 and --q1 are mutually exclusive");
    return args.q0 ? Mode::q0 : args.q1 ? Mode::q1 : Mode::q;
}

void require_degree(const RunConfig& cfg, int degree)
{
    if (degree > cfg.degree_cap)
        throw UsageError("degree " + std::to_string(degree) + " exceeds --degree-cap " +
                         std::to_string(cfg.degree_cap));
}

std::string mode_suffix(Mode m) { return m == Mode::q ? "q" : m == Mode::q0 ? "0" : "1"; }

struct Printer {
    const RunConfig& cfg;
    std::ostream& out;

    void report(const FoulkesReport& r, const std::string& label) const
    {
        if (cfg.emit == Emit::json) {
            out << to_json(r, !cfg.verdict_only, cfg.timing).dump(2) << '\n';
            return;
        }
        if (!cfg.verdict_only)
            out << label << " = " << r.expansion.str() << '\n';
        out << "verdict: " << (r.positive ? "Schur-positive" : "NOT Schur-positive") << '\n';
        if (r.witness)
            out << "witness: s" << r.witness->first.str() << " with coefficient " << r.witness->second.str() << '\n';
        if (cfg.timing)
            out << "time: " << r.ms << " ms\n";
    }

    void checks(const std::vector<CheckResult>& results) const
    {
        if (cfg.emit == Emit::json) {
            Json arr = Json::array();
            for (const auto& r : results)
                arr.push_back(to_json(r, cfg.timing));
            out << arr.dump(2) << '\n';
            return;
        }
        for (const auto& r : results) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name;
            if (!r.detail.empty())
                out << "  (" << r.detail << ")";
            if (cfg.timing)
                out << "  [" << r.ms << " ms]";
            out << '\n';
        }
    }
};

int verdict(bool ok) { return ok ? exit_verified : exit_negative; }

int all_passed(const std::vector<CheckResult>& results)
{
    return verdict(std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; }));
}

std::vector<int> parse_seq(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    if (out.empty())
        throw UsageError("--seq needs a comma-separated list of integers");
    return out;
}

std::string form_str(const SymFunc& f)
{
    const auto form = H1H2E2Form::from_symfunc(f);
    return form ? form->str() : "(not in Q[h1,h2,e2]) " + to_schur(f).str();
}

int cmd_foulkes(const RunConfig& cfg, const Args& args, std::ostream& out)
{
    const Mode m = mode_of(args);
    require_degree(cfg, args.a * args.b);
    const Printer print{cfg, out};
    const std::string ab = std::to_string(args.a) + "," + std::to_string(args.b);
    const auto t0 = std::chrono::steady_clock::now();
    if (m == Mode::q) {
        const auto r = check_conjecture1(args.a, args.b);
        print.report(r, "F_{" + ab + "}(x;q)");
        return verdict(r.positive);
    }
    if (m == Mode::q0) {
        const auto r = make_report("foulkes-classical", {{"a", args.a}, {"b", args.b}}, f_classic(args.a, args.b), t0);
        print.report(r, "f_{" + ab + "}");
        return verdict(r.positive);
    }
    const SymFunc at1 = f_q_at1(args.a, args.b);
    const auto r = make_report("foulkes-q1", {{"a", args.a}, {"b", args.b}}, to_schur(at1), t0);
    std::optional<bool> closed;
    if (args.a > 1 && args.a < args.b)
        closed = f_q1_closed(args.a, args.b) == at1;
    if (cfg.emit == Emit::json) {
        Json j = to_json(r, !cfg.verdict_only, cfg.timing);
        j["h1h2e2"] = form_str(at1);
        j["closed_form_agrees"] = closed ? Json(*closed) : Json(nullptr);
        out << j.dump(2) << '\n';
    } else {
        print.report(r, "F_{" + ab + "}(x;1)");
        out << "in h1, h2, e2: " << form_str(at1) << '\n';
        if (closed)
            out << "closed form: " << (*closed ? "agrees" : "DISAGREES") << '\n';
    }
    return verdict(r.positive && closed.value_or(true));
}

int cmd_stability(const RunConfig& cfg, const Args& args, std::ostream& out, bool manivel)
{
    const Mode m = mode_of(args);
    require_degree(cfg, (args.a + (manivel ? 1 : 0)) * (args.b + 1));
    const auto t0 = std::chrono::steady_clock::now();
    SchurExpansion e;
    if (manivel) {
        e = m == Mode::q0 ? manivel_diff(args.a, args.b).at_q(0) : manivel_diff(args.a, args.b);
    } else {
        e = m == Mode::q0 ? stability_diff_classic(args.a, args.b) : stability_diff(args.a, args.b);
    }
    if (m == Mode::q1)
        e = e.at_q(1);
    const std::string kind = manivel ? "manivel" : "stability";
    const auto r = make_report(kind + "-" + mode_suffix(m), {{"a", args.a}, {"b", args.b}}, e, t0);
    Printer{cfg, out}.report(r, kind + " difference");
    return verdict(r.positive);
}

int cmd_dims(const RunConfig& cfg, const Args& args, std::ostream& out)
{
    require_degree(cfg, args.a * args.b);
    const Integer hab = dim_h_plethysm(args.a, args.b);
    const Integer hba = dim_h_plethysm(args.b, args.a);
    bool ok = dim_of(h_plethysm(args.a, args.b)) == QPoly(Rational(hab)) &&
              dim_of(h_plethysm(args.b, args.a)) == QPoly(Rational(hba));
    Json j{{"a", args.a}, {"b", args.b}, {"dim_h_a_h_b", hab.get_str()}, {"dim_h_b_h_a", hba.get_str()}};
    if (args.a < args.b) {
        const QPoly closed = dim_Fq_closed(args.a, args.b);
        const QPoly engine = dim_of(from_schur(f_q(args.a, args.b)));
        const Rational at1 = dim_Fq_at1(args.a, args.b);
        ok = ok && closed == engine && engine.eval(1) == at1;
        j["dim_F_closed"] = to_json(closed);
        j["dim_F_engine"] = to_json(engine);
        j["dim_F_at_1"] = rational_str(at1);
    }
    j["agrees"] = ok;
    if (cfg.emit == Emit::json) {
        out << j.dump(2) << '\n';
    } else {
        out << "dim h_" << args.a << "[h_" << args.b << "] = " << hab << '\n';
        out << "dim h_" << args.b << "[h_" << args.a << "] = " << hba << '\n';
        if (args.a < args.b) {
            out << "dim F (closed form) = " << dim_Fq_closed(args.a, args.b).str() << '\n';
            out << "dim F at q=1        = " << rational_str(dim_Fq_at1(args.a, args.b)) << '\n';
        }
        out << "engine agreement: " << (ok ? "yes" : "NO") << '\n';
    }
    return verdict(ok);
}

int cmd_q1_forms(const RunConfig& cfg, const Args& args, std::ostream& out)
{
    require_degree(cfg, args.a * args.b);
    const SymFunc l = lemma31(args.a, args.b);
    const bool lemma_ok = l == lemma31_engine(args.a, args.b);
    Json j{{"a", args.a}, {"b", args.b}, {"lemma31", form_str(l)}, {"lemma31_agrees", lemma_ok}};
    bool ok = lemma_ok;
    std::string closed_text;
    if (args.a > 1 && args.a < args.b) {
        const SymFunc closed = f_q1_closed(args.a, args.b);
        const bool closed_ok = closed == f_q_at1(args.a, args.b);
        ok = ok && closed_ok;
        closed_text = form_str(closed);
        j["F_at_1"] = closed_text;
        j["F_at_1_agrees"] = closed_ok;
    }
    if (cfg.emit == Emit::json) {
        out << j.dump(2) << '\n';
    } else {
        out << "lim (h1^ab - H_a[H_b])/(1-q) = " << form_str(l) << "  [" << (lemma_ok ? "agrees" : "DISAGREES")
            << "]\n";
        if (!closed_text.empty())
            out << "F_{" << args.a << "," << args.b << "}(x;1) = " << closed_text << '\n';
        out << "engine agreement: " << (ok ? "yes" : "NO") << '\n';
    }
    return verdict(ok);
}

int cmd_theta(const RunConfig& cfg, const Args& args, std::ostream& out)
{
    const int bmax = args.b > 0 ? args.b : args.a + 4;
    require_degree(cfg, args.a * (bmax + 1));
    const ThetaReport r = theta_recurrence_check(args.a, bmax);
    const bool ok = std::all_of(r.rows.begin(), r.rows.end(), [](const ThetaRow& row) { return row.direct_natural; });
    if (cfg.emit == Emit::json) {
        Json j = to_json(r);
        j["all_direct_natural"] = ok;
        out << j.dump(2) << '\n';
        return verdict(ok);
    }
    auto yn = [](bool v) { return v ? "agrees" : "differs"; };
    for (const auto& row : r.rows) {
        out << "Theta_" << r.a << "(" << row.b << ") = " << (row.direct ? form_str(*row.direct) : "no solution")
            << (row.direct_natural ? "  [in N[h1,h2,e2]]" : "  [NOT in N[h1,h2,e2]]") << '\n';
        out << "  initial values + recurrence: " << yn(row.chain_agrees);
        if (row.recurrence_agrees)
            out << "; recurrence from direct values: " << yn(*row.recurrence_agrees);
        out << "; bridge h2^b theta_{b-a}(e2/h2): " << (row.bridge ? yn(row.bridge_agrees) : "not polynomial") << '\n';
    }
    return verdict(ok);
}

int cmd_generalized(const RunConfig& cfg, const Args& args, std::ostream& out)
{
    const Mode m = mode_of(args);
    require_degree(cfg, args.a * args.b);
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::pair<std::string, int>> params{{"a", args.a}, {"b", args.b}, {"c", args.c}, {"d", args.d}};
    const Printer print{cfg, out};
    if (m == Mode::q) {
        const auto r = make_report("generalized", params, generalized_f_q(args.a, args.b, args.c, args.d), t0);
        print.report(r, "(H_c[H_d] - H_a[H_b])/(1-q)");
        return verdict(r.positive);
    }
    if (m == Mode::q0) {
        const auto r = make_report("generalized-classical", params, generalized_classic(args.a, args.b, args.c, args.d), t0);
        print.report(r, "h_c[h_d] - h_a[h_b]");
        return verdict(r.positive);
    }
    const SymFunc at1 = generalized_at1(args.a, args.b, args.c, args.d);
    const bool closed = at1 == generalized_q1_closed(args.a, args.b, args.c, args.d);
    const auto r = make_report("generalized-q1", params, to_schur(at1), t0);
    if (cfg.emit == Emit::json) {
        Json j = to_json(r, !cfg.verdict_only, cfg.timing);
        j["h1h2e2"] = form_str(at1);
        j["closed_form_agrees"] = closed;
        out << j.dump(2) << '\n';
    } else {
        print.report(r, "limit at q=1");
        out << "in h1, h2, e2: " << form_str(at1) << '\n';
        out << "closed form: " << (closed ? "agrees" : "DISAGREES") << '\n';
    }
    return verdict(r.positive && closed);
}

int cmd_single_config(const RunConfig& cfg, const Args& args, std::ostream& out)
{
    if (args.alpha.empty() || args.beta.empty() || args.gamma.empty() || args.delta.empty())
        throw UsageError("--alpha, --beta, --gamma and --delta go together");
    const Partition alpha = Partition::parse(args.alpha), beta = Partition::parse(args.beta);
    const Partition gamma = Partition::parse(args.gamma), delta = Partition::parse(args.delta);
    require_degree(cfg, alpha.weight() * beta.weight());
    const ConfigCheck check = args.want_q_configs ? is_q_foulkes_config(alpha, beta, gamma, delta)
                                                  : is_foulkes_config(alpha, beta, gamma, delta);
    if (cfg.emit == Emit::json) {
        Json j{{"alpha", to_json(alpha)}, {"beta", to_json(beta)}, {"gamma", to_json(gamma)}, {"delta", to_json(delta)}};
        j["q"] = args.want_q_configs;
        j["holds"] = check.holds;
        if (!cfg.verdict_only)
            j["difference"] = to_json(check.difference);
        j["witness"] = check.witness ? Json{{"partition", to_json(check.witness->first)},
                                            {"coeff", to_json(check.witness->second)}}
                                     : Json(nullptr);
        out << j.dump(2) << '\n';
    } else {
        if (!cfg.verdict_only)
            out << "difference = " << check.difference.str() << '\n';
        out << "<" << alpha.str() << "," << beta.str() << " : " << gamma.str() << "," << delta.str() << ">"
            << (args.want_q_configs ? "_q" : "") << (check.holds ? " is" : " is NOT") << " a configuration\n";
        if (check.witness)
            out << "witness: s" << check.witness->first.str() << " with coefficient " << check.witness->second.str()
                << '\n';
    }
    return verdict(check.holds);
}

int cmd_configs(const RunConfig& cfg, const Args& args, std::ostream& out)
{
    if (!args.alpha.empty() || !args.beta.empty() || !args.gamma.empty() || !args.delta.empty())
        return cmd_single_config(cfg, args, out);
    if (args.guess && args.k > 0) {
        require_degree(cfg, args.a * args.b * args.k);
        const GuessVerdict v = check_guess_pattern(args.a, args.b, args.c, args.d, args.k);
        if (cfg.emit == Emit::json)
            out << to_json(v).dump(2) << '\n';
        else
            out << "<[" << v.a << "," << v.b << "^" << v.k << "] : [" << v.c << "," << v.d << "^" << v.k
                << "]>_q: " << v.q_config << ", s-pattern " << v.schur_pattern << ", h-pattern " << v.h_power_pattern
                << '\n';
        return verdict(v.q_config && v.schur_pattern && v.h_power_pattern);
    }
    if (args.n < 1)
        throw UsageError("configs needs --n, a quadruple, or --guess with --a --b --c --d --k");
    require_degree(cfg, args.n);
    const int n = args.n;
    if (args.conj4) {
        const auto r = check_conjecture4(n, cfg.jobs);
        if (cfg.emit == Emit::json) {
            out << to_json(r).dump(2) << '\n';
        } else {
            out << "n=" << n << ": " << r.e_pairs << " pairs satisfy the e-condition; " << r.both << " both, "
                << r.neither << " neither, " << r.one_sided.size() << " one-sided\n";
            for (const auto& c : r.one_sided)
                out << "  one-sided: " << c.str() << " foulkes=" << c.is_foulkes << '\n';
        }
        return verdict(r.holds());
    }
    if (args.guess) {
        const auto verdicts = check_guess_patterns(n, cfg.jobs);
        bool ok = true;
        Json arr = Json::array();
        for (const auto& v : verdicts) {
            ok = ok && v.q_config && v.schur_pattern && v.h_power_pattern;
            arr.push_back(to_json(v));
            if (cfg.emit == Emit::text)
                out << "(a,b,c,d,k)=(" << v.a << "," << v.b << "," << v.c << "," << v.d << "," << v.k
                    << "): q-config " << v.q_config << ", s-pattern " << v.schur_pattern << ", h-pattern "
                    << v.h_power_pattern << '\n';
        }
        if (cfg.emit == Emit::json)
            out << arr.dump(2) << '\n';
        else if (verdicts.empty())
            out << "no admissible (a,b,c,d,k) for n=" << n << '\n';
        return verdict(ok);
    }
    const auto found = args.want_q_configs ? enumerate_q_configs(n, cfg.jobs) : enumerate_foulkes_configs(n, cfg.jobs);
    std::optional<int> expected;
    const auto& table = args.want_q_configs ? reference::q_foulkes_counts() : reference::foulkes_counts();
    if (n >= 1 && n <= static_cast<int>(table.size()))
        expected = table[static_cast<std::size_t>(n - 1)];
    if (args.check_table && !expected)
        throw UsageError("no table entry for n=" + std::to_string(n));
    const bool matches = !expected || static_cast<int>(found.size()) == *expected;
    if (cfg.emit == Emit::json) {
        Json arr = Json::array();
        for (const auto& c : found)
            arr.push_back(to_json(c, !cfg.verdict_only));
        Json j{{"n", n}, {"q", args.want_q_configs}, {"count", found.size()}};
        j["table"] = expected ? Json(*expected) : Json(nullptr);
        j["configurations"] = std::move(arr);
        out << j.dump(2) << '\n';
    } else {
        out << "n=" << n << ": " << found.size() << (args.want_q_configs ? " q-Foulkes" : " Foulkes")
            << " configurations";
        if (expected)
            out << " (table: " << *expected << ")";
        out << '\n';
        if (!cfg.verdict_only)
            for (const auto& c : found)
                out << "  " << c.str() << '\n';
    }
    return args.check_table ? verdict(matches) : exit_verified;
}

int cmd_kostka(const RunConfig& cfg, const Args& args, std::ostream& out)
{
    const Partition lambda = Partition::parse(args.lambda);
    const Partition mu = Partition::parse(args.mu);
    require_degree(cfg, lambda.weight());
    const QPoly k = kostka_foulkes(lambda, mu);
    if (cfg.emit == Emit::json)
        out << Json{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"K", to_json(k)}, {"K_at_1", rational_str(k.eval(1))}}
                   .dump(2)
            << '\n';
    else
        out << "K_{" << lambda.str() << "," << mu.str() << "}(q) = " << k.str() << "   (at q=1: " << rational_str(k.eval(1))
            << ")\n";
    return exit_verified;
}

int cmd_iterated(const RunConfig& cfg, const Args& args, std::ostream& out)
{
    const std::vector<int> seq = parse_seq(args.seq);
    int degree = 1;
    for (int x : seq)
        degree *= x;
    require_degree(cfg, degree);
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, int>> params;
    for (std::size_t i = 0; i < seq.size(); ++i)
        params.emplace_back("a" + std::to_string(i + 1), seq[i]);
    if (args.alternating && args.immanant)
        throw UsageError("--alternating and --immanant are mutually exclusive");
    if (args.immanant) {
        if (seq.size() != 3)
            throw UsageError("--immanant needs exactly three entries a,b,c");
        const auto r = make_report("immanant", params, immanant_case(seq[0], seq[1], seq[2]), t0);
        Printer{cfg, out}.report(r, "2h<c,b,a> - h<b,a,c> - h<a,c,b>");
        return verdict(r.positive);
    }
    if (args.alternating) {
        const auto r = make_report("alternating", params, alternating_sum(seq), t0);
        Printer{cfg, out}.report(r, "alternating sum");
        return verdict(r.positive);
    }
    const auto r = make_report("iterated", params, to_schur(iterated_h(seq)), t0);
    Printer{cfg, out}.report(r, "h<" + args.seq + ">");
    return exit_verified;
}

int cmd_check35(const RunConfig& cfg, const Args& args, std::ostream& out)
{
    require_degree(cfg, args.a * args.b);
    const auto r = check_3_5(args.a, args.b);
    Printer{cfg, out}.report(r, "h_{b-1}[h_a] h_{a-1} - h_{a-1}[h_b] h_{b-1}");
    return verdict(r.positive);
}

int cmd_suite(const RunConfig& cfg, const Args& args, std::ostream& out)
{
    std::vector<CheckResult> results;
    if (args.suite == "paper-goldens")
        results = suite_paper_goldens();
    else if (args.suite == "tables")
        results = suite_tables(cfg.degree_cap, cfg.jobs);
    else if (args.suite == "properties")
        results = suite_properties(cfg.seed);
    else
        throw UsageError("unknown suite '" + args.suite + "' (paper-goldens, tables, properties)");
    Printer{cfg, out}.checks(results);
    return all_passed(results);
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact checks of q-analogs of Foulkes' conjecture", "qfoulkes"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    Args args;
    std::string emit = "text";
    std::string cache;
    bool no_cache = false;
    bool no_timing = false;
    app.add_option("--degree-cap", cfg.degree_cap, "Refuse computations above this degree")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cache", cache, "Table cache file (default $QFOULKES_CACHE or ~/.cache/qfoulkes/tables.cache)");
    app.add_flag("--no-cache", no_cache, "Neither read nor write the table cache");
    app.add_option("--emit", emit, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", cfg.seed, "Seed for randomized suites");
    app.add_flag("--verdict-only", cfg.verdict_only, "Suppress expansions");
    app.add_flag("--no-timing", no_timing, "Omit timing fields");

    auto ab = [&args](CLI::App* sub, bool need_b = true) {
        sub->add_option("--a", args.a)->required()->check(CLI::PositiveNumber);
        auto* b = sub->add_option("--b", args.b)->check(CLI::PositiveNumber);
        if (need_b)
            b->required();
    };
    auto modes = [&args](CLI::App* sub) {
        sub->add_flag("--q", args.q, "q-version (default)");
        sub->add_flag("--q0", args.q0, "classical specialization q=0");
        sub->add_flag("--q1", args.q1, "specialization q=1");
    };

    auto* foulkes = app.add_subcommand("foulkes", "F_{a,b}(x;q) and its positivity");
    ab(foulkes);
    modes(foulkes);
    auto* stability = app.add_subcommand("stability", "bar F_{a,b+1} - bar F_{a,b}");
    ab(stability);
    modes(stability);
    auto* manivel = app.add_subcommand("manivel", "double stability difference, a < b");
    ab(manivel);
    modes(manivel);
    auto* dims = app.add_subcommand("dims", "dimension identities");
    ab(dims);
    auto* q1forms = app.add_subcommand("q1-forms", "closed forms at q=1 against the engine");
    ab(q1forms);
    auto* theta = app.add_subcommand("theta", "Theta_a(b) extraction and recurrence diagnostics (--b is bmax)");
    ab(theta, false);
    auto* generalized = app.add_subcommand("generalized", "(H_c[H_d] - H_a[H_b])/(1-q)");
    ab(generalized);
    generalized->add_option("--c", args.c)->required()->check(CLI::PositiveNumber);
    generalized->add_option("--d", args.d)->required()->check(CLI::PositiveNumber);
    modes(generalized);
    auto* configs = app.add_subcommand("configs", "Foulkes and q-Foulkes configurations of degree n");
    configs->add_option("--n", args.n)->check(CLI::PositiveNumber);
    configs->add_option("--alpha", args.alpha, "check one quadruple, e.g. --alpha [2]");
    configs->add_option("--beta", args.beta);
    configs->add_option("--gamma", args.gamma);
    configs->add_option("--delta", args.delta);
    configs->add_option("--a", args.a);
    configs->add_option("--b", args.b);
    configs->add_option("--c", args.c);
    configs->add_option("--d", args.d);
    configs->add_option("--k", args.k, "with --guess: one instance [a, b^k] : [c, d^k]");
    configs->add_flag("--q", args.want_q_configs, "q-Foulkes configurations");
    configs->add_flag("--check-table", args.check_table, "compare the count with the reference table");
    configs->add_flag("--conj4", args.conj4, "check the e-condition biconditional");
    configs->add_flag("--guess", args.guess, "check the [a, b^k] : [c, d^k] patterns");
    auto* kostka = app.add_subcommand("kostka", "Kostka-Foulkes polynomial");
    kostka->add_option("--lambda", args.lambda)->required();
    kostka->add_option("--mu", args.mu)->required();
    auto* iterated = app.add_subcommand("iterated", "iterated plethysm h<a1,...,an>");
    iterated->add_option("--seq", args.seq, "comma-separated, e.g. 4,3,2")->required();
    iterated->add_flag("--alternating", args.alternating, "signed sum over permutations");
    iterated->add_flag("--immanant", args.immanant, "2h<c,b,a> - h<b,a,c> - h<a,c,b> for --seq a,b,c");
    auto* check35 = app.add_subcommand("check35", "(h_{b-1}[h_a]) h_{a-1} - (h_{a-1}[h_b]) h_{b-1}");
    ab(check35);
    auto* suite = app.add_subcommand("suite", "paper-goldens, tables or properties");
    suite->add_option("name", args.suite)->required();

    std::vector<std::string> rest(argv.rbegin(), argv.rend() - (argv.empty() ? 0 : 1));
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_verified;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_error;
    }

    cfg.emit = emit == "json" ? Emit::json : Emit::text;
    cfg.timing = !no_timing;
    cfg.use_cache = !no_cache;
    cfg.cache_path = cache.empty() ? default_cache_path() : std::filesystem::path(cache);

    if (cfg.use_cache) {
        const auto status = cache_load(cfg.cache_path);
        if (!status.warning.empty())
            err << "warning: " << status.warning << '\n';
    }

    int code = exit_error;
    try {
        if (foulkes->parsed())
            code = cmd_foulkes(cfg, args, out);
        else if (stability->parsed())
            code = cmd_stability(cfg, args, out, false);
        else if (manivel->parsed())
            code = cmd_stability(cfg, args, out, true);
        else if (dims->parsed())
            code = cmd_dims(cfg, args, out);
        else if (q1forms->parsed())
            code = cmd_q1_forms(cfg, args, out);
        else if (theta->parsed())
            code = cmd_theta(cfg, args, out);
        else if (generalized->parsed())
            code = cmd_generalized(cfg, args, out);
        else if (configs->parsed())
            code = cmd_configs(cfg, args, out);
        else if (kostka->parsed())
            code = cmd_kostka(cfg, args, out);
        else if (iterated->parsed())
            code = cmd_iterated(cfg, args, out);
        else if (check35->parsed())
            code = cmd_check35(cfg, args, out);
        else if (suite->parsed())
            code = cmd_suite(cfg, args, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_error;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }

    if (cfg.use_cache) {
        try {
            cache_store(cfg.cache_path);
        } catch (const std::exception& e) {
            err << "warning: could not write cache: " << e.what() << '\n';
        }
    }
    return code;
}

}  // namespace qfoulkes
