#include "planar/cli.hpp"

#include "planar/char_sums.hpp"
#include "planar/errors.hpp"
#include "planar/function_spec.hpp"
#include "planar/json_io.hpp"
#include "planar/pg2.hpp"
#include "planar/planarity.hpp"
#include "planar/search.hpp"
#include "planar/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>

namespace planar::cli {

namespace {

struct RunConfig {
    std::string subcommand;
    unsigned p = 0;
    unsigned n = 2;
    std::string f = "x^2";
    std::uint64_t seed = kDefaultSeed;
    int threads = 0;
    bool extended = false;
    std::string json_path;
    std::string action;
    std::string a;
    std::string b;
    std::string t;
    bool all_t = false;
    std::optional<std::uint64_t> node_cap;
    std::optional<double> time_cap;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json echo(const RunConfig& c)
{
    Json j{{"subcommand", c.subcommand}, {"p", c.p},         {"n", c.n},
           {"f", c.f},                   {"seed", c.seed},   {"threads", c.threads},
           {"extended", c.extended},     {"json", nullptr}};
    if (!c.json_path.empty())
        j["json"] = c.json_path;
    if (!c.action.empty())
        j["action"] = c.action;
    if (!c.a.empty())
        j["a"] = c.a;
    if (!c.b.empty())
        j["b"] = c.b;
    if (!c.t.empty())
        j["t"] = c.t;
    if (c.all_t)
        j["all_t"] = true;
    if (c.node_cap)
        j["node_cap"] = *c.node_cap;
    if (c.time_cap)
        j["time_cap"] = *c.time_cap;
    return j;
}

FieldContext context_for(const RunConfig& c)
{
    if (c.n != 2)
        throw UsageError(c.subcommand + " works over F_{p^2} only (got --n " + std::to_string(c.n) + ")");
    return build_context(c.p);
}

struct Outcome {
    Json body;
    int code = kExitOk;
};

Outcome cmd_ctx(const RunConfig& c)
{
    const auto ctx = context_for(c);
    const Field& field = ctx.field();
    Json t = Json::array();
    for (auto y : ctx.transversal())
        t.push_back(element_to_json(field, y));
    return {{{"p", ctx.p()},
             {"n", field.n()},
             {"q", ctx.q()},
             {"modulus", field.modulus()},
             {"s", ctx.s()},
             {"beta", element_to_json(field, ctx.beta())},
             {"gamma", element_to_json(field, ctx.gamma())},
             {"T", t}}};
}

Outcome cmd_planar(const RunConfig& c)
{
    const Field field(c.p, c.n);
    const auto f = parse_function_spec(field, c.f);
    const auto rep = is_planar(field, f, c.threads);
    const auto hom = detect_homogeneity(field, f);
    Json j{{"planar", rep.is_planar}, {"homogeneous", hom.is_homogeneous}, {"d", nullptr}};
    if (hom.d)
        j["d"] = *hom.d;
    if (c.n == 2) {
        const auto two = check_two_to_one(build_context(c.p), f);
        j["two_to_one"] = two.holds;
        if (!two.holds)
            j["two_to_one_counterexample"] = two.counterexample;
    } else {
        j["two_to_one"] = nullptr;
    }
    if (rep.witness) {
        const auto& w = *rep.witness;
        j["witness"] = {{"a", element_to_json(field, w.a)},
                        {"x", element_to_json(field, w.x)},
                        {"y", element_to_json(field, w.y)},
                        {"delta", element_to_json(field, w.delta)}};
    }
    return {j, rep.is_planar ? kExitOk : kExitVerificationFailed};
}

Json elements_json(const Field& field, const std::vector<Element>& xs)
{
    Json out = Json::array();
    for (auto x : xs)
        out.push_back(element_to_json(field, x));
    return out;
}

Outcome cmd_charsum(const RunConfig& c)
{
    const auto ctx = context_for(c);
    const Field& field = ctx.field();
    const auto f = parse_function_spec(field, c.f);
    const Element a = parse_element(field, c.a);
    const Element b = parse_element(field, c.b);
    if (a == field.zero())
        throw UsageError("--a must be nonzero");

    const auto w = w_sum(field, f, a, b);
    const auto dec = decompose(w, c.p);
    const auto z = z_set(ctx, f, a);
    Json j{{"a", element_to_json(field, a)},
           {"b", element_to_json(field, b)},
           {"W_coeffs", cyclotomic_to_json(w)},
           {"epsilon", nullptr},
           {"l", nullptr},
           {"Z_a", elements_json(field, z)},
           {"y_b", nullptr},
           {"n_i", nullptr}};
    if (!dec)
        return {j, kExitVerificationFailed};
    j["epsilon"] = dec->epsilon;
    j["l"] = dec->l;
    if (b == field.zero())
        return {j, kExitOk};
    const auto pr = compute_profile(ctx, f, a, b);
    j["y_b"] = element_to_json(field, pr.y_b);
    j["n_i"] = pr.n;
    j["c"] = pr.c;
    const auto bad = profile_violations(pr, c.p);
    j["violations"] = bad;
    return {j, bad.empty() ? kExitOk : kExitVerificationFailed};
}

Outcome cmd_zset(const RunConfig& c)
{
    const auto ctx = context_for(c);
    const Field& field = ctx.field();
    const auto f = parse_function_spec(field, c.f);
    const Element a = parse_element(field, c.a);
    if (a == field.zero())
        throw UsageError("--a must be nonzero");
    const auto z = z_set(ctx, f, a);
    const bool ok = z.size() == 0 || z.size() == 2;
    return {{{"a", element_to_json(field, a)}, {"Z_a", elements_json(field, z)}, {"size", z.size()}},
            ok ? kExitOk : kExitVerificationFailed};
}

Json matrix_json(const MatrixFp& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(m(r, k));
        rows.push_back(row);
    }
    return rows;
}

// One t; returns the report and whether every check passed.
std::pair<Json, bool> oval_for(const FieldContext& ctx, const FiniteFunction& f, Element t)
{
    const Field& field = ctx.field();
    const Residue p = ctx.p();
    Json j{{"t", element_to_json(field, t)}, {"normalized", is_normalized(ctx, f)}};
    std::vector<ProjPoint> points;
    try {
        points = s_t(ctx, f, t);
    } catch (const ContractViolation& e) {
        j["error"] = e.what();
        return {j, false};
    }
    Json pts = Json::array();
    for (const auto& pt : points)
        pts.push_back(point_to_json(pt));
    j["points"] = pts;
    const auto oval = is_oval(points, p);
    j["is_oval"] = oval.is_oval;
    if (oval.violating_line)
        j["violating_line"] = line_to_json(*oval.violating_line);
    bool ok = oval.is_oval && points.size() == std::size_t(p) + 1;

    std::vector<NamedCheck> checks{{"p + 1 points", points.size() == std::size_t(p) + 1}, {"oval", oval.is_oval}};
    j["conic"] = nullptr;
    if (oval.is_oval) {
        try {
            auto conic = fit_conic(points, p);
            if (is_normalized(ctx, f))
                check_conic_against_t(ctx, t, conic);
            Json cj{{"c", conic.c}, {"nullspace_dim", conic.nullspace_dim}, {"lambda", nullptr}, {"h", conic.h},
                    {"M", matrix_json(conic.m)}};
            if (conic.lambda)
                cj["lambda"] = *conic.lambda;
            j["conic"] = cj;
            checks.insert(checks.end(), conic.checks.begin(), conic.checks.end());
            const auto ip = internal_point_check(ctx, f, t, conic);
            checks.insert(checks.end(), ip.checks.begin(), ip.checks.end());
        } catch (const NotConic& e) {
            j["conic_error"] = e.what();
            if (p > 3)
                checks.push_back({"conic fit", false});
        } catch (const ContractViolation& e) {
            j["conic_error"] = e.what();
            checks.push_back({"conic fit", false});
        }
    }
    for (const auto& ch : checks)
        ok = ok && ch.passed;
    j["checks"] = checks_to_json(checks);
    return {j, ok};
}

Outcome cmd_oval(const RunConfig& c)
{
    const auto ctx = context_for(c);
    const Field& field = ctx.field();
    const auto f = parse_function_spec(field, c.f);
    if (c.all_t == !c.t.empty())
        throw UsageError("oval needs exactly one of --t or --all-t");
    if (!c.all_t) {
        const Element t = parse_element(field, c.t);
        if (t == field.zero())
            throw UsageError("--t must be nonzero");
        auto [j, ok] = oval_for(ctx, f, t);
        return {j, ok ? kExitOk : kExitVerificationFailed};
    }
    Json results = Json::array();
    bool all = true;
    for (std::uint32_t t = 1; t < field.q(); ++t) {
        auto [j, ok] = oval_for(ctx, f, {t});
        results.push_back(std::move(j));
        all = all && ok;
    }
    return {{{"results", results}, {"all_passed", all}}, all ? kExitOk : kExitVerificationFailed};
}

Json search_json(const FieldContext& ctx, const SearchResult& r)
{
    Json sols = Json::array();
    for (const auto& f : r.solutions)
        sols.push_back(function_to_json(ctx.field(), f));
    return {{"p", ctx.p()},
            {"solutions", sols},
            {"solution_count", r.solutions.size()},
            {"nodes", r.nodes},
            {"seconds", r.seconds}};
}

Outcome cmd_search(const RunConfig& c)
{
    if (c.p >= 11 && !c.extended)
        throw UsageError("search at p >= 11 is a long-running job; pass --extended");
    const auto ctx = context_for(c);
    SearchLimits limits;
    if (c.node_cap)
        limits.node_cap = *c.node_cap;
    if (c.time_cap)
        limits.wall_cap = std::chrono::duration<double>(*c.time_cap);
    try {
        const auto r = enumerate(SearchProblem::normalized(ctx), c.threads, limits);
        const bool ok = verify_theorem(ctx, r);
        Json j = search_json(ctx, r);
        j["complete"] = true;
        j["theorem_verified"] = ok;
        return {j, ok ? kExitOk : kExitVerificationFailed};
    } catch (const SearchLimitExceeded& e) {
        Json j = search_json(ctx, e.partial());
        j["complete"] = false;
        j["theorem_verified"] = false;
        j["limit"] = e.what();
        j["frontier"] = elements_json(ctx.field(), e.frontier());
        return {j, kExitVerificationFailed};
    }
}

Outcome cmd_verify_all(const RunConfig& c)
{
    const auto ctx = context_for(c);
    const auto f = parse_function_spec(ctx.field(), c.f);
    const auto report = verify_all(ctx, f, {c.seed, c.threads});
    Json checks = Json::array();
    for (const auto& ch : report.checks) {
        Json cj{{"name", ch.name}, {"passed", ch.passed}, {"skipped", ch.skipped}};
        if (!ch.detail.empty())
            cj["detail"] = ch.detail;
        checks.push_back(cj);
    }
    const bool ok = report.all_passed();
    return {{{"checks", checks}, {"all_passed", ok}}, ok ? kExitOk : kExitVerificationFailed};
}

void add_common(CLI::App* sub, RunConfig& c, bool needs_function)
{
    sub->add_option("--p", c.p, "odd prime")->required();
    sub->add_option("--n", c.n, "extension degree")->capture_default_str();
    if (needs_function)
        sub->add_option("--f", c.f, "x^K | do:[(i,j,c),...] | table:@file.json")->capture_default_str();
    sub->add_option("--seed", c.seed, "seed for randomized cross-checks")->capture_default_str();
    sub->add_option("--threads", c.threads, "OpenMP threads (0: runtime default)")->capture_default_str();
    sub->add_option("--json", c.json_path, "write the JSON report to this file instead of stdout");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig c;
    CLI::App app{"Homogeneous planar functions over F_{p^2}", "planarfn"};
    app.require_subcommand(1, 1);

    auto* ctx = app.add_subcommand("ctx", "field context: modulus, s, beta, gamma, T");
    add_common(ctx, c, false);
    auto* planar = app.add_subcommand("planar", "planarity, homogeneity and two-to-one checks");
    add_common(planar, c, true);
    planar->add_option("action", c.action)->check(CLI::IsMember({"check"}));
    auto* charsum = app.add_subcommand("charsum", "W(a,b), its decomposition, Z_a, y_b and n_i");
    add_common(charsum, c, true);
    charsum->add_option("--a", c.a, "nonzero element: c or a0,a1")->required();
    charsum->add_option("--b", c.b, "element: c or a0,a1")->required();
    auto* zset = app.add_subcommand("zset", "Z_a = {z in T : Tr(a f(z)) = 0}");
    add_common(zset, c, true);
    zset->add_option("--a", c.a, "nonzero element")->required();
    auto* oval = app.add_subcommand("oval", "S_t, oval and conic checks");
    add_common(oval, c, true);
    oval->add_option("--t", c.t, "nonzero element");
    oval->add_flag("--all-t", c.all_t, "every t != 0");
    auto* search = app.add_subcommand("search", "exhaustive normalized search");
    add_common(search, c, false);
    search->add_flag("--extended", c.extended, "allow p >= 11");
    search->add_option("--node-cap", c.node_cap, "stop after this many nodes");
    search->add_option("--time-cap", c.time_cap, "stop after this many seconds");
    auto* verify = app.add_subcommand("verify-all", "run every structural check for (p, f)");
    add_common(verify, c, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    c.subcommand = app.get_subcommands().front()->get_name();

    Outcome result;
    try {
        if (c.subcommand == "ctx")
            result = cmd_ctx(c);
        else if (c.subcommand == "planar")
            result = cmd_planar(c);
        else if (c.subcommand == "charsum")
            result = cmd_charsum(c);
        else if (c.subcommand == "zset")
            result = cmd_zset(c);
        else if (c.subcommand == "oval")
            result = cmd_oval(c);
        else if (c.subcommand == "search")
            result = cmd_search(c);
        else
            result = cmd_verify_all(c);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "verification failed: " << e.what() << "\n";
        return kExitVerificationFailed;
    }

    Json doc = result.body;
    doc["config"] = echo(c);
    const std::string text = render(doc);
    if (c.json_path.empty()) {
        out << text;
    } else {
        std::ofstream file(c.json_path);
        if (!(file << text)) {
            err << "error: cannot write " << c.json_path << "\n";
            return kExitUsage;
        }
    }
    return result.code;
}

} // namespace planar::cli
