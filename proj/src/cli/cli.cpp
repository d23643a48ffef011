#include "merton/cli/cli.hpp"

#include "merton/analytic/analytic.hpp"
#include "merton/builder/builder.hpp"
#include "merton/core/spec_io.hpp"
#include "merton/core/validate.hpp"
#include "merton/mpc/mpc.hpp"
#include "merton/simulator/simulator.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#ifndef MERTON_VERSION
#define MERTON_VERSION "unknown"
#endif

namespace merton::cli {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string version() { return MERTON_VERSION; }

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string subcommand;
    std::string spec_path;
    std::string out_dir = "out";
    int K = 100;
    std::vector<int> Ks;
    double h_sim = 1.0 / 250.0;
    std::size_t paths = 1000;
    std::uint64_t seed = 42;
    std::string backend = "clarabel";
    std::optional<double> tol;
    unsigned max_iter = 200;
    unsigned threads = 0;
    std::vector<std::string> extensions;
    std::string scheme = "euler";
    std::string policy = "analytic";
    std::size_t record = 10;
    double replan = 0.25;
    double step = 0.05;
    int grid = 100;
};

// Writes through a temporary file and renames it into place.
void write_file(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw std::ios_base::failure("cannot write " + tmp.string());
        f << content;
        f.flush();
        if (!f) throw std::ios_base::failure("cannot write " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) throw std::ios_base::failure("cannot rename " + tmp.string() + ": " + ec.message());
}

std::string read_file(const fs::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::ios_base::failure("cannot read " + path.string());
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

ProblemSpec load(const Options& o) {
    ProblemSpec spec = load_spec(o.spec_path);
    for (const std::string& ext : o.extensions) {
        const auto eq = ext.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--extension expects <name>=<file-or-inline JSON>");
        const std::string name = ext.substr(0, eq);
        const std::string value = ext.substr(eq + 1);
        std::error_code ec;
        const std::string text = fs::is_regular_file(value, ec) ? read_file(value) : value;
        set_extension(spec, name, text);
    }
    require_valid(spec);
    return spec;
}

conic::SolverSettings solver_settings(const Options& o, const ProblemSpec& spec) {
    conic::SolverSettings s = conic::SolverSettings::for_universe(static_cast<std::size_t>(spec.num_assets()));
    s.backend = o.backend;
    if (o.tol) s.tol_feas = s.tol_gap = *o.tol;
    s.max_iter = o.max_iter;
    return s;
}

sim::SimOptions sim_options(const Options& o) {
    sim::SimOptions s;
    s.h_sim = o.h_sim;
    s.scheme = sim::parse_scheme(o.scheme);
    s.threads = o.threads;
    s.record_paths = o.record;
    return s;
}

mpc::MpcConfig mpc_config(const Options& o, const ProblemSpec& spec) {
    mpc::MpcConfig c;
    c.replan_interval = std::min(o.replan, spec.horizon);
    c.step = o.step;
    c.solver = solver_settings(o, spec);
    return c;
}

ordered_json vec_json(const Vector& v) { return ordered_json(std::vector<double>(v.data(), v.data() + v.size())); }

ordered_json opt_json(const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

struct Context {
    Options opt;
    fs::path out;
    ordered_json timing = ordered_json::object();
    std::ostream& log;
};

int cmd_validate(Context& ctx) {
    ProblemSpec spec = load_spec(ctx.opt.spec_path);
    const auto violations = validate(spec);
    ordered_json j;
    j["valid"] = violations.empty();
    j["violations"] = ordered_json::array();
    for (const auto& v : violations) {
        j["violations"].push_back({{"code", v.code}, {"message", v.message}});
        ctx.log << v.code << ": " << v.message << "\n";
    }
    write_file(ctx.out / "summary.json", dump(j));
    if (violations.empty()) ctx.log << "spec is valid\n";
    return violations.empty() ? kOk : kValidation;
}

int cmd_analytic(Context& ctx) {
    const ProblemSpec spec = load(ctx.opt);
    const auto sol = analytic::solve_analytic(spec);
    std::ostringstream csv;
    csv << std::setprecision(17) << "t,a_t,c_over_w\n";
    for (double t : analytic::uniform_grid(0.0, spec.horizon, static_cast<std::size_t>(ctx.opt.grid))) {
        csv << t << ',' << sol.a(t) << ',' << sol.consumption_ratio(t) << '\n';
    }
    write_file(ctx.out / "analytic.csv", csv.str());
    ordered_json j;
    j["theta_ce"] = vec_json(sol.theta_ce);
    j["r_ce"] = sol.r_ce;
    j["a_0"] = sol.a(0.0);
    j["c_over_w_0"] = sol.consumption_ratio(0.0);
    j["value_0"] = sol.value(0.0, spec.w_init);
    write_file(ctx.out / "summary.json", dump(j));
    ctx.log << "r_ce = " << sol.r_ce << ", a_0 = " << sol.a(0.0) << "\n";
    return kOk;
}

builder::Trajectory run_plan(Context& ctx, const ProblemSpec& spec, int K) {
    builder::BuildOptions bo;
    bo.K = K;
    const auto start = std::chrono::steady_clock::now();
    const builder::CeBuilder b = builder::make_builder(spec, bo);
    builder::BuiltProblem built = b.build();
    const double build_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const conic::SolveResult r = conic::solve(built.program, solver_settings(ctx.opt, spec));
    if (!r.has_solution()) {
        throw builder::PlanError(std::string("solver status ") + conic::to_string(r.status), r.status,
                                 std::move(built.program));
    }
    ctx.timing["build_seconds"] = build_s;
    ctx.timing["solve_seconds"] = r.stats.solve_seconds;
    ctx.timing["solve_wall_seconds"] = r.stats.wall_seconds;
    builder::Trajectory tr = b.decode(r, built.layout);
    const auto rep = conic::verify(built.program, r);
    tr.stats.backend = r.stats.backend;
    ctx.timing["variables"] = built.program.num_variables();
    if (rep) ctx.timing["residual"] = rep->worst();
    return tr;
}

int cmd_plan(Context& ctx) {
    const ProblemSpec spec = load(ctx.opt);
    const builder::Trajectory tr = run_plan(ctx, spec, ctx.opt.K);
    std::ostringstream csv;
    builder::write_trajectory_csv(csv, tr);
    write_file(ctx.out / "trajectory.csv", csv.str());
    ordered_json j;
    j["K"] = ctx.opt.K;
    j["status"] = conic::to_string(tr.status);
    j["objective"] = tr.objective;
    j["iterations"] = tr.stats.iterations;
    j["backend"] = tr.stats.backend;
    j["tower_fallback"] = tr.stats.tower_fallback;
    j["max_slack"] = tr.slack.maxCoeff();
    j["max_row_slack"] = tr.row_slack.maxCoeff();
    j["c0_over_w0"] = tr.c(0) / tr.w(0);
    j["theta0"] = vec_json(tr.theta(0));
    write_file(ctx.out / "summary.json", dump(j));
    ctx.log << "objective " << tr.objective << ", max slack " << tr.slack.maxCoeff() << "\n";
    return kOk;
}

std::unique_ptr<sim::Policy> make_policy(Context& ctx, const ProblemSpec& spec) {
    if (ctx.opt.policy == "analytic") return std::make_unique<sim::AnalyticPolicy>(analytic::solve_analytic(spec));
    if (ctx.opt.policy == "mpc") return std::make_unique<mpc::MpcPolicy>(spec, mpc_config(ctx.opt, spec));
    throw UsageError("--policy must be analytic or mpc");
}

void require_paths(const Options& o) {
    if (o.paths == 0) throw UsageError("--paths must be at least 1");
}

int cmd_simulate(Context& ctx) {
    require_paths(ctx.opt);
    const ProblemSpec spec = load(ctx.opt);
    const auto policy = make_policy(ctx, spec);
    const auto start = std::chrono::steady_clock::now();
    const auto r = sim::monte_carlo(*policy, spec, ctx.opt.paths, sim_options(ctx.opt), ctx.opt.seed);
    ctx.timing["simulate_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream csv;
    sim::write_paths_csv(csv, r.paths);
    write_file(ctx.out / "paths.csv", csv.str());
    ordered_json j;
    j["policy"] = ctx.opt.policy;
    j["paths"] = r.num_paths;
    j["mean_utility"] = r.mean;
    j["std_error"] = opt_json(r.std_error);
    j["ruin_rate"] = r.ruin_rate;
    j["death_rate"] = r.death_rate;
    j["mean_terminal_wealth"] = r.mean_terminal;
    try {
        const auto sol = analytic::solve_analytic(spec);
        j["analytic_value_0"] = sol.value(0.0, spec.w_init);
    } catch (const std::invalid_argument&) {
        j["analytic_value_0"] = nullptr;
    }
    write_file(ctx.out / "summary.json", dump(j));
    ctx.log << "mean utility " << r.mean;
    if (r.std_error) ctx.log << " +/- " << *r.std_error;
    ctx.log << "\n";
    return kOk;
}

void add_timing(Context& ctx, const mpc::TimingSummary& t) {
    ctx.timing["mpc_solves"] = t.solves;
    ctx.timing["mpc_solve_seconds"] = {{"p50", t.p50}, {"p90", t.p90}, {"max", t.max}, {"total", t.total}};
}

int cmd_backtest(Context& ctx) {
    require_paths(ctx.opt);
    const ProblemSpec spec = load(ctx.opt);
    const auto rep = mpc::backtest(spec, mpc_config(ctx.opt, spec), ctx.opt.paths, ctx.opt.seed, sim_options(ctx.opt));
    add_timing(ctx, rep.timing);
    write_file(ctx.out / "summary.json", mpc::backtest_to_json(rep) + "\n");
    ctx.log << "mpc " << rep.mpc.mean_utility;
    if (rep.analytic) ctx.log << ", analytic " << rep.analytic->mean_utility;
    ctx.log << "\n";
    return kOk;
}

int cmd_compare(Context& ctx) {
    const ProblemSpec spec = load(ctx.opt);
    const int n = spec.num_assets();
    std::vector<int> Ks = ctx.opt.Ks.empty() ? std::vector<int>{ctx.opt.K} : ctx.opt.Ks;
    std::ostringstream csv;
    csv << std::setprecision(17) << "method,K,c0_over_w0";
    for (int i = 0; i < n; ++i) csv << ",theta_" << (i + 1);
    csv << ",mean_utility,std_error\n";
    auto row = [&](const std::string& method, std::optional<int> K, double c, const Vector& th,
                   std::optional<double> mean, std::optional<double> se) {
        csv << method << ',';
        if (K) csv << *K;
        csv << ',' << c;
        for (int i = 0; i < n; ++i) csv << ',' << th(i);
        csv << ',';
        if (mean) csv << *mean;
        csv << ',';
        if (se) csv << *se;
        csv << '\n';
    };
    ordered_json j;
    j["plans"] = ordered_json::array();

    std::optional<analytic::AnalyticSolution> sol;
    try {
        sol = analytic::solve_analytic(spec);
    } catch (const std::invalid_argument&) {
    }
    const sim::SimOptions so = sim_options(ctx.opt);
    std::optional<double> a_c0;
    if (sol) {
        const Action a = sol->policy(0.0, spec.w_init);
        a_c0 = a.consumption / spec.w_init;
        std::optional<double> mean, se;
        if (ctx.opt.paths > 0) {
            const auto r = sim::monte_carlo(sim::AnalyticPolicy(*sol), spec, ctx.opt.paths, so, sim::path_seed(ctx.opt.seed, 1));
            mean = r.mean;
            se = r.std_error;
        }
        row("analytic", std::nullopt, *a_c0, a.theta, mean, se);
        j["analytic"] = {{"c0_over_w0", *a_c0}, {"theta0", vec_json(a.theta)}, {"mean_utility", opt_json(mean)},
                         {"std_error", opt_json(se)}};
    } else {
        j["analytic"] = nullptr;
    }
    for (int K : Ks) {
        const builder::Trajectory tr = run_plan(ctx, spec, K);
        const double c0 = tr.c(0) / tr.w(0);
        std::optional<double> mean, se;
        if (ctx.opt.paths > 0) {
            // the plan followed open loop: one solve, plan ratios applied thereafter
            mpc::MpcConfig once = mpc_config(ctx.opt, spec);
            once.replan_interval = spec.horizon;
            once.horizon = mpc::MpcConfig::Horizon::FixedK;
            once.periods = K;
            const auto r = sim::monte_carlo(mpc::MpcPolicy(spec, once), spec, ctx.opt.paths, so, sim::path_seed(ctx.opt.seed, 2));
            mean = r.mean;
            se = r.std_error;
        }
        row("ce_plan", K, c0, tr.theta(0), mean, se);
        ordered_json p = {{"K", K}, {"objective", tr.objective}, {"c0_over_w0", c0}, {"theta0", vec_json(tr.theta(0))},
                          {"mean_utility", opt_json(mean)}, {"std_error", opt_json(se)}};
        if (a_c0) p["c0_error"] = std::abs(c0 - *a_c0);
        j["plans"].push_back(p);
    }
    {
        const mpc::MpcConfig cfg = mpc_config(ctx.opt, spec);
        const mpc::MpcDecision d = mpc::mpc_act(0.0, spec.w_init, spec, cfg);
        std::optional<double> mean, se;
        if (ctx.opt.paths > 0) {
            const mpc::MpcPolicy policy(spec, cfg);
            const auto r = sim::monte_carlo(policy, spec, ctx.opt.paths, so, sim::path_seed(ctx.opt.seed, 0));
            mean = r.mean;
            se = r.std_error;
            add_timing(ctx, mpc::summarize_timing(policy.solve_seconds()));
        }
        row("mpc", cfg.periods_at(0.0, spec.horizon), d.action.consumption / spec.w_init, d.action.theta, mean, se);
        j["mpc"] = {{"c0_over_w0", d.action.consumption / spec.w_init}, {"theta0", vec_json(d.action.theta)},
                    {"mean_utility", opt_json(mean)}, {"std_error", opt_json(se)}};
    }
    write_file(ctx.out / "compare.csv", csv.str());
    write_file(ctx.out / "summary.json", dump(j));
    ctx.log << csv.str();
    return kOk;
}

void write_manifest(const Context& ctx, int code, double wall) {
    const Options& o = ctx.opt;
    ordered_json m;
    m["subcommand"] = o.subcommand;
    m["spec"] = o.spec_path;
    m["out"] = o.out_dir;
    m["version"] = version();
    m["seed"] = o.seed;
    m["exit_code"] = code;
    m["options"] = {{"K", o.K},
                    {"Ks", o.Ks},
                    {"h_sim", o.h_sim},
                    {"paths", o.paths},
                    {"backend", o.backend},
                    {"tol", opt_json(o.tol)},
                    {"max_iter", o.max_iter},
                    {"threads", o.threads},
                    {"extensions", o.extensions},
                    {"scheme", o.scheme},
                    {"policy", o.policy},
                    {"record", o.record},
                    {"replan", o.replan},
                    {"step", o.step},
                    {"grid", o.grid}};
    m["wall_seconds"] = wall;
    m["timing"] = ctx.timing;
    write_file(ctx.out / "manifest.json", dump(m));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Merton consumption-investment solver", "merton"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version());

    auto common = [&o](CLI::App* sub) {
        sub->add_option("--spec", o.spec_path, "problem spec (JSON)")->required();
        sub->add_option("--out", o.out_dir, "output directory")->capture_default_str();
        sub->add_option("--extension", o.extensions, "<name>=<file or inline JSON>, repeatable");
        sub->add_option("--backend", o.backend, "conic backend: clarabel or clarabel-socp")->capture_default_str();
        sub->add_option("--tol", o.tol, "solver feasibility and gap tolerance");
        sub->add_option("--max-iter", o.max_iter, "solver iteration limit")->capture_default_str();
    };
    auto simulation = [&o](CLI::App* sub) {
        sub->add_option("--h-sim", o.h_sim, "simulation step (years)")->capture_default_str();
        sub->add_option("--paths", o.paths, "number of Monte Carlo paths")->capture_default_str();
        sub->add_option("--seed", o.seed, "master seed")->capture_default_str();
        sub->add_option("--threads", o.threads, "worker threads (0 = all cores)")->capture_default_str();
        sub->add_option("--scheme", o.scheme, "euler or exact")->capture_default_str();
        sub->add_option("--replan", o.replan, "MPC replan interval (years)")->capture_default_str();
        sub->add_option("--step", o.step, "MPC plan step (years)")->capture_default_str();
    };

    auto* validate_cmd = app.add_subcommand("validate", "check a spec and list violations");
    validate_cmd->add_option("--spec", o.spec_path, "problem spec (JSON)")->required();
    validate_cmd->add_option("--out", o.out_dir, "output directory")->capture_default_str();

    auto* analytic_cmd = app.add_subcommand("analytic", "closed-form policy and value coefficient");
    common(analytic_cmd);
    analytic_cmd->add_option("--grid", o.grid, "intervals of the a_t table")->capture_default_str();

    auto* plan_cmd = app.add_subcommand("plan", "solve the discretized certainty-equivalent program");
    common(plan_cmd);
    plan_cmd->add_option("-K", o.K, "number of periods")->capture_default_str();

    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo simulation of a policy");
    common(simulate_cmd);
    simulation(simulate_cmd);
    simulate_cmd->add_option("--policy", o.policy, "analytic or mpc")->capture_default_str();
    simulate_cmd->add_option("--record", o.record, "paths written to paths.csv")->capture_default_str();

    auto* backtest_cmd = app.add_subcommand("backtest", "MPC against the analytic policy");
    common(backtest_cmd);
    simulation(backtest_cmd);

    auto* compare_cmd = app.add_subcommand("compare", "analytic vs CE plan vs MPC");
    common(compare_cmd);
    simulation(compare_cmd);
    compare_cmd->add_option("-K", o.Ks, "plan periods (repeatable)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    for (auto* sub : app.get_subcommands()) o.subcommand = sub->get_name();
    if (o.subcommand != "compare") o.record = std::min<std::size_t>(o.record, o.paths);
    else o.record = 0;

    const auto start = std::chrono::steady_clock::now();
    Context ctx{o, fs::path(o.out_dir), ordered_json::object(), err};
    int code = kOk;
    try {
        fs::create_directories(ctx.out);
        if (o.subcommand == "validate") code = cmd_validate(ctx);
        else if (o.subcommand == "analytic") code = cmd_analytic(ctx);
        else if (o.subcommand == "plan") code = cmd_plan(ctx);
        else if (o.subcommand == "simulate") code = cmd_simulate(ctx);
        else if (o.subcommand == "backtest") code = cmd_backtest(ctx);
        else if (o.subcommand == "compare") code = cmd_compare(ctx);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ValidationError& e) {
        err << "invalid spec:\n";
        for (const auto& v : e.violations()) err << "  " << v.code << ": " << v.message << "\n";
        code = kValidation;
    } catch (const SpecFormatError& e) {
        err << "malformed spec: " << e.what() << "\n";
        code = kValidation;
    } catch (const builder::PlanError& e) {
        err << "solver failure: " << e.what() << "\n";
        try {
            write_file(ctx.out / "failed_program.txt", e.program().to_text());
            err << "failing program written to " << (ctx.out / "failed_program.txt").string() << "\n";
        } catch (const std::exception&) {
        }
        code = kSolver;
    } catch (const conic::CapabilityError& e) {
        err << "solver failure: " << e.what() << "\n";
        code = kSolver;
    } catch (const std::ios_base::failure& e) {
        err << "I/O error: " << e.what() << "\n";
        return kIo;
    } catch (const fs::filesystem_error& e) {
        err << "I/O error: " << e.what() << "\n";
        return kIo;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        code = kValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        code = kSolver;
    }
    try {
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        write_manifest(ctx, code, wall);
    } catch (const std::exception& e) {
        err << "I/O error: " << e.what() << "\n";
        return kIo;
    }
    (void)out;
    return code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

}  // namespace merton::cli
