// trigrat: exact decisions about rational powers of trigonometric values,
// plus the supporting cyclotomic and Kummer-theory checks.
//
// Exit codes: 0 success / confirmed, 1 a check or verification failed,
// 2 usage error (bad arguments, malformed numbers, out-of-range bounds).

#include "trigrat/json_io.hpp"
#include "trigrat/trigrat.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace trigrat;
using trigrat::json::Json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;

    std::string func;
    std::string theta;
    std::uint64_t power = 1;
    std::uint64_t modulus = 1;
    std::string alpha;
    std::uint64_t n = 2;
    bool oracle = false;

    std::uint64_t q_max = 24;
    std::uint64_t n_max = 8;
    std::string funcs = "cos,sin,tan";
    unsigned threads = 1;
    std::uint64_t m_max = 60;
    std::uint64_t group_n_max = 12;
};

void emit(const Options& opt, const Json& j, const std::string& text)
{
    if (opt.json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

Rational positive_alpha(const std::string& s)
{
    Rational a = Rational::parse(s);
    if (a.sign() <= 0)
        throw UsageError("alpha must be a positive rational, got '" + s + "'");
    return a;
}

std::vector<TrigFunc> parse_funcs(const std::string& list)
{
    std::vector<TrigFunc> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(parse_trig_func(item));
    if (out.empty())
        throw UsageError("--funcs must name at least one of cos,sin,tan");
    return out;
}

int cmd_classify(const Options& opt)
{
    const auto f = parse_trig_func(opt.func);
    const auto a = Angle::parse(opt.theta);
    const auto c = classify(f, a);
    std::ostringstream os;
    os << to_string(f) << "(pi*" << a.to_string() << "): " << to_string(c.verdict);
    if (c.minimal_n)
        os << ", n=" << *c.minimal_n << ", value " << c.value_at_minimal_n->to_string();
    os << '\n';
    if (c.witness)
        os << "witness in Q(zeta_" << c.witness->modulus() << "): " << c.witness->to_string() << '\n';
    emit(opt, json::to_json(c), os.str());
    return kOk;
}

int cmd_eval(const Options& opt)
{
    const auto f = parse_trig_func(opt.func);
    const auto a = Angle::parse(opt.theta);
    if (opt.power < 1)
        throw UsageError("--pow must be >= 1");
    const std::string label = std::string(to_string(f)) + "(pi*" + a.to_string() + ")^" + std::to_string(opt.power);
    Json j{{"func", std::string(to_string(f))}, {"theta", a.to_string()}, {"n", opt.power}};
    if (is_pole(f, a)) {
        j["value"] = nullptr;
        j["undefined"] = true;
        emit(opt, j, label + " is undefined\n");
        return kOk;
    }
    const auto r = power_rational(f, a, opt.power);
    j["value"] = r ? json::to_json(*r) : Json(nullptr);
    j["rational"] = r.has_value();
    emit(opt, j, r ? label + " = " + r->to_string() + "\n" : label + " is irrational\n");
    return kOk;
}

int cmd_gauss(const Options& opt)
{
    if (opt.modulus < 1)
        throw UsageError("m must be >= 1");
    const auto g = gauss_sum(opt.modulus);
    const bool ok = gauss_sum_case_check(opt.modulus);
    Json j{{"m", opt.modulus}, {"gauss_sum", json::to_json(g)}, {"case_check", ok}};
    emit(opt, j,
         "g(" + std::to_string(opt.modulus) + ") = " + g.to_string() + "\ncase check (m mod 4 = "
             + std::to_string(opt.modulus % 4) + "): " + (ok ? "holds" : "FAILS") + "\n");
    return ok ? kOk : kFailed;
}

int cmd_sqrt_embed(const Options& opt)
{
    const auto alpha = positive_alpha(opt.alpha);
    const auto s = sqrt_in_cyclotomic(alpha);
    const bool squares = s.witness * s.witness == CycElem(s.modulus, alpha);
    const bool positive = s.witness.numeric().real() > 0;
    Json j = json::to_json(s);
    j["verified"] = squares && positive;
    emit(opt, j,
         "sqrt(" + alpha.to_string() + ") in Q(zeta_" + std::to_string(s.modulus) + "): " + s.witness.to_string()
             + "\nwitness^2 == alpha: " + (squares ? "yes" : "NO") + ", positive: " + (positive ? "yes" : "NO") + "\n");
    return squares && positive ? kOk : kFailed;
}

int cmd_root_member(const Options& opt)
{
    const auto alpha = positive_alpha(opt.alpha);
    if (opt.n < 1 || opt.modulus < 1)
        throw UsageError("n and m must be >= 1");
    const auto v = nth_root_in_cyclotomic(alpha, opt.n, opt.modulus);
    std::ostringstream os;
    os << alpha.to_string() << "^(1/" << opt.n << ") in Q(zeta_" << opt.modulus << "): " << to_string(v.answer) << " ("
       << to_string(v.justification) << ")\n";
    if (v.witness)
        os << "witness: " << v.witness->to_string() << '\n';
    emit(opt, json::to_json(v), os.str());
    return kOk;
}

int cmd_irreducible(const Options& opt)
{
    const auto alpha = positive_alpha(opt.alpha);
    if (opt.n < 2)
        throw UsageError("n must be >= 2");
    const RatPoly binom = RatPoly::binomial(opt.n, alpha);
    const bool irreducible = binomial_irreducible(alpha, opt.n);
    Json j{{"alpha", alpha.to_string()}, {"n", opt.n}, {"irreducible", irreducible}};
    std::ostringstream os;
    os << binom.to_string() << " is " << (irreducible ? "irreducible" : "reducible") << " over Q\n";
    if (auto f = binomial_rational_factor(alpha, opt.n)) {
        j["factor"] = json::to_json(*f);
        os << "factor: " << f->to_string() << '\n';
    }
    int code = kOk;
    if (opt.oracle) {
        if (opt.n > 12)
            throw UsageError("--oracle supports n <= 12");
        const auto res = subset_factorization_oracle(alpha, static_cast<unsigned>(opt.n));
        const bool agree = res.reducible == !irreducible;
        Json hits = Json::array();
        for (const auto& h : res.hits)
            hits.push_back(json::to_json(h, static_cast<unsigned>(opt.n)));
        j["oracle"] = Json{{"reducible", res.reducible}, {"agrees", agree}, {"hits", std::move(hits)}};
        os << "oracle: " << (res.reducible ? "reducible" : "irreducible");
        if (res.reducible) {
            os << ", factor " << res.hits.front().factor.to_string() << " (roots";
            for (unsigned i : subset_indices(res.hits.front().subset, static_cast<unsigned>(opt.n)))
                os << ' ' << i;
            os << ')';
        }
        os << (agree ? " - agrees\n" : " - DISAGREES\n");
        if (!agree)
            code = kFailed;
    }
    emit(opt, j, os.str());
    return code;
}

bool group_ok(const MetaGroupReport& r)
{
    return r.axioms_hold && r.order == r.n * euler_phi(r.n) && r.abelian == (r.n <= 2) && r.relation_holds
           && r.translations_normal;
}

std::string group_line(const MetaGroupReport& r)
{
    std::ostringstream os;
    os << "n=" << r.n << ": order " << r.order << ", " << (r.abelian ? "abelian" : "non-abelian")
       << ", group axioms " << (r.axioms_hold ? "hold" : "FAIL") << ", tau_c sigma = sigma^c tau_c "
       << (r.relation_holds ? "holds" : "FAILS") << ", translations normal " << (r.translations_normal ? "yes" : "NO")
       << (group_ok(r) ? "" : "  <-- unexpected") << '\n';
    return os.str();
}

int cmd_group(const Options& opt)
{
    if (opt.n < 2)
        throw UsageError("n must be >= 2");
    const auto r = meta_group_checks(opt.n);
    emit(opt, json::to_json(r), group_line(r));
    return group_ok(r) ? kOk : kFailed;
}

int cmd_verify_sweep(const Options& opt)
{
    SweepConfig cfg;
    cfg.q_max = opt.q_max;
    cfg.n_max = opt.n_max;
    cfg.funcs = parse_funcs(opt.funcs);
    cfg.threads = opt.threads;
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto report = verify_theorem_sweep(cfg);
    std::ostringstream os;
    const auto& t = report.totals;
    os << "sweep q<=" << cfg.q_max << ", n<=" << cfg.n_max << ": " << t.queries << " queries, " << t.power_queries
       << " powers, " << report.hits.size() << " rational hits\n"
       << "  VALUE_RATIONAL " << t.value_rational << ", SQUARE_RATIONAL " << t.square_rational << ", NEVER " << t.never
       << ", UNDEFINED " << t.undefined << '\n';
    for (const auto& v : report.violations)
        os << "  VIOLATION " << to_string(v.func) << "(pi*" << v.angle.to_string() << ") n=" << v.n << ": " << v.reason
           << '\n';
    os << (report.confirmed() ? "confirmed: no violations\n" : "FAILED\n");
    emit(opt, json::to_json(report), os.str());
    return report.confirmed() ? kOk : kFailed;
}

int cmd_verify_gauss(const Options& opt)
{
    if (opt.m_max < 1)
        throw UsageError("--m-max must be >= 1");
    Json failures = Json::array();
    for (std::uint64_t m = 1; m <= opt.m_max; ++m)
        if (!gauss_sum_case_check(m))
            failures.push_back(m);
    const bool ok = failures.empty();
    emit(opt, Json{{"m_max", opt.m_max}, {"failures", failures}, {"confirmed", ok}},
         "gauss sum cases for 1 <= m <= " + std::to_string(opt.m_max) + ": "
             + (ok ? "all hold\n" : "FAILED at " + failures.dump() + "\n"));
    return ok ? kOk : kFailed;
}

int cmd_verify_group(const Options& opt)
{
    if (opt.group_n_max < 2)
        throw UsageError("--n-max must be >= 2");
    Json reports = Json::array();
    std::string text;
    bool ok = true;
    for (std::uint64_t n = 2; n <= opt.group_n_max; ++n) {
        const auto r = meta_group_checks(n);
        ok = ok && group_ok(r);
        reports.push_back(json::to_json(r));
        text += group_line(r);
    }
    text += ok ? "confirmed\n" : "FAILED\n";
    emit(opt, Json{{"groups", reports}, {"confirmed", ok}}, text);
    return ok ? kOk : kFailed;
}

int cmd_verify_remark(const Options& opt)
{
    const bool ok = verify_remark_factorization();
    const auto product = quartic_pair_product(-1, 1);
    emit(opt, Json{{"identity", "x^8 - 2 = (x^4 - s)(x^4 + s), s = zeta_8 + zeta_8^-1"}, {"confirmed", ok}},
         "(x^4 - s)(x^4 + s) = " + product.to_string() + " over Q(zeta_8), s = zeta_8 + zeta_8^-1\n"
             + (ok ? "confirmed: equals x^8 - 2\n" : "FAILED\n"));
    return ok ? kOk : kFailed;
}

} // namespace

int main(int argc, char** argv)
{
    Options opt;
    CLI::App app{"Exact rationality of powers of cos, sin and tan at rational multiples of pi"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", opt.json, "Emit a single JSON document");

    int (*handler)(const Options&) = nullptr;
    auto bind = [&](CLI::App* sub, int (*h)(const Options&)) { sub->callback([&handler, h] { handler = h; }); };

    auto* classify_cmd = app.add_subcommand("classify", "Which powers of f(pi*theta) are rational");
    classify_cmd->add_option("func", opt.func, "cos, sin or tan")->required();
    classify_cmd->add_option("theta", opt.theta, "p/q")->required();
    bind(classify_cmd, cmd_classify);

    auto* eval_cmd = app.add_subcommand("eval", "Exact f(pi*theta)^n if rational");
    eval_cmd->add_option("func", opt.func, "cos, sin or tan")->required();
    eval_cmd->add_option("theta", opt.theta, "p/q")->required();
    eval_cmd->add_option("--pow", opt.power, "Exponent n >= 1")->default_val(1);
    bind(eval_cmd, cmd_eval);

    auto* gauss_cmd = app.add_subcommand("gauss", "Quadratic Gauss sum in Q(zeta_m)");
    gauss_cmd->add_option("m", opt.modulus, "m >= 1")->required();
    bind(gauss_cmd, cmd_gauss);

    auto* sqrt_cmd = app.add_subcommand("sqrt-embed", "Explicit sqrt(alpha) inside a cyclotomic field");
    sqrt_cmd->add_option("alpha", opt.alpha, "positive rational a/b")->required();
    bind(sqrt_cmd, cmd_sqrt_embed);

    auto* member_cmd = app.add_subcommand("root-member", "Does Q(zeta_m) contain alpha^(1/n)?");
    member_cmd->add_option("alpha", opt.alpha, "positive rational a/b")->required();
    member_cmd->add_option("n", opt.n, "n >= 1")->required();
    member_cmd->add_option("m", opt.modulus, "m >= 1")->required();
    bind(member_cmd, cmd_root_member);

    auto* irr_cmd = app.add_subcommand("irreducible", "Is x^n - alpha irreducible over Q?");
    irr_cmd->add_option("alpha", opt.alpha, "positive rational a/b")->required();
    irr_cmd->add_option("n", opt.n, "n >= 2")->required();
    irr_cmd->add_flag("--oracle", opt.oracle, "Cross-check by brute-force root-subset factorization (n <= 12)");
    bind(irr_cmd, cmd_irreducible);

    auto* group_cmd = app.add_subcommand("group", "Exhaustive checks on Z/n x| (Z/n)^x");
    group_cmd->add_option("n", opt.n, "n >= 2")->required();
    bind(group_cmd, cmd_group);

    auto* verify_cmd = app.add_subcommand("verify", "Batch verification runs");
    verify_cmd->require_subcommand(1);
    verify_cmd->fallthrough();
    auto* sweep_cmd = verify_cmd->add_subcommand("sweep", "All angles p/q with q <= q-max, all n <= n-max");
    sweep_cmd->add_option("--q-max", opt.q_max, "Largest denominator")->default_val(24);
    sweep_cmd->add_option("--n-max", opt.n_max, "Largest exponent")->default_val(8);
    sweep_cmd->add_option("--funcs", opt.funcs, "Comma-separated subset of cos,sin,tan")->default_val("cos,sin,tan");
    sweep_cmd->add_option("--threads", opt.threads, "Worker threads")->default_val(1);
    bind(sweep_cmd, cmd_verify_sweep);
    auto* vgauss_cmd = verify_cmd->add_subcommand("gauss", "Gauss sum residue cases for 1 <= m <= m-max");
    vgauss_cmd->add_option("--m-max", opt.m_max, "Largest m")->default_val(60);
    bind(vgauss_cmd, cmd_verify_gauss);
    auto* vgroup_cmd = verify_cmd->add_subcommand("group", "Metacyclic group checks for 2 <= n <= n-max");
    vgroup_cmd->add_option("--n-max", opt.group_n_max, "Largest n")->default_val(12);
    bind(vgroup_cmd, cmd_verify_group);
    auto* vremark_cmd = verify_cmd->add_subcommand("remark", "x^8 - 2 splits over Q(zeta_8)");
    bind(vremark_cmd, cmd_verify_remark);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        return handler(opt);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}
