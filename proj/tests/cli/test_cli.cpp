#include "merton/cli/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace merton;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const char* kBase = R"({
  "schema": "merton-spec/1",
  "market": {"mu": [0.10, 0.02], "cov": {"dense": [[0.04, 0], [0, 0.04]]}},
  "utility": {"gamma": 0.5, "beta": 0.8},
  "theta_set": {"eq": [{"a": [1, 1], "b": 1}]},
  "horizon": 10,
  "w_init": 1
})";

class Sandbox {
public:
    Sandbox() {
        static int counter = 0;
        dir_ = fs::temp_directory_path() / ("merton_cli_test_" + std::to_string(counter++));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        spec_ = write("spec.json", kBase);
    }
    ~Sandbox() { fs::remove_all(dir_); }

    fs::path write(const std::string& name, const std::string& text) const {
        std::ofstream(dir_ / name) << text;
        return dir_ / name;
    }
    std::string spec() const { return spec_.string(); }
    std::string out(const std::string& name) const { return (dir_ / name).string(); }

private:
    fs::path dir_;
    fs::path spec_;
};

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::string first_line(const fs::path& p) {
    std::ifstream f(p);
    std::string line;
    std::getline(f, line);
    return line;
}

json read_json(const fs::path& p) { return json::parse(slurp(p)); }

}  // namespace

TEST_CASE("usage errors exit 1, help exits 0") {
    Sandbox box;
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"bogus"}).code == cli::kUsage);
    CHECK(run({"plan"}).code == cli::kUsage);  // --spec is required
    CHECK(run({"plan", "--spec", box.spec(), "-K", "ten"}).code == cli::kUsage);
    CHECK(run({"simulate", "--spec", box.spec(), "--out", box.out("o"), "--paths", "0"}).code == cli::kUsage);
    CHECK(run({"plan", "--spec", box.spec(), "--out", box.out("o"), "--extension", "income"}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kOk);
    const Run v = run({"--version"});
    CHECK(v.code == cli::kOk);
    CHECK(v.out.find(cli::version()) != std::string::npos);
}

TEST_CASE("validation errors exit 2") {
    Sandbox box;
    std::string bad = kBase;
    bad.replace(bad.find("\"gamma\": 0.5"), 12, "\"gamma\": 1.5");
    const auto bad_spec = box.write("bad.json", bad);
    const Run r = run({"validate", "--spec", bad_spec.string(), "--out", box.out("v")});
    CHECK(r.code == cli::kValidation);
    const json summary = read_json(fs::path(box.out("v")) / "summary.json");
    CHECK_FALSE(summary["valid"].get<bool>());
    CHECK(summary["violations"].size() >= 1);

    CHECK(run({"plan", "--spec", bad_spec.string(), "--out", box.out("p")}).code == cli::kValidation);
    const auto malformed = box.write("malformed.json", "{\"schema\": ");
    CHECK(run({"plan", "--spec", malformed.string(), "--out", box.out("p")}).code == cli::kValidation);
    CHECK(run({"validate", "--spec", box.spec(), "--out", box.out("ok")}).code == cli::kOk);
}

TEST_CASE("missing files and unwritable outputs exit 4") {
    Sandbox box;
    CHECK(run({"plan", "--spec", box.out("absent.json"), "--out", box.out("p")}).code == cli::kIo);
    // --out names an existing regular file
    const auto file = box.write("occupied", "x");
    CHECK(run({"analytic", "--spec", box.spec(), "--out", file.string()}).code == cli::kIo);
}

TEST_CASE("solver failure exits 3 and dumps the program") {
    Sandbox box;
    // a consumption floor above anything the spending limit allows
    const Run r = run({"plan", "--spec", box.spec(), "--out", box.out("f"), "-K", "10", "--extension",
                       "consumption_floor=5", "--extension", R"(spending_limit={"eta": 1, "dividend_yield": 0.01})"});
    CHECK(r.code == cli::kSolver);
    CHECK(fs::exists(fs::path(box.out("f")) / "failed_program.txt"));
    CHECK(read_json(fs::path(box.out("f")) / "manifest.json")["exit_code"] == cli::kSolver);
    CHECK(run({"plan", "--spec", box.spec(), "--out", box.out("g"), "--backend", "cplex"}).code == cli::kSolver);
}

TEST_CASE("analytic table: columns, a_T = beta, c/w = beta^(1/(gamma-1)) at T") {
    Sandbox box;
    REQUIRE(run({"analytic", "--spec", box.spec(), "--out", box.out("a"), "--grid", "10"}).code == cli::kOk);
    const fs::path dir = box.out("a");
    CHECK(first_line(dir / "analytic.csv") == "t,a_t,c_over_w");
    std::ifstream f(dir / "analytic.csv");
    std::string line, last;
    int rows = 0;
    std::getline(f, line);
    while (std::getline(f, line)) {
        last = line;
        ++rows;
    }
    CHECK(rows == 11);
    double t = 0, a = 0, cw = 0;
    char comma = 0;
    std::istringstream(last) >> t >> comma >> a >> comma >> cw;
    CHECK(t == doctest::Approx(10.0));
    CHECK(a == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(cw == doctest::Approx(std::pow(0.8, 1.0 / (0.5 - 1.0))).epsilon(1e-14));
    const json s = read_json(dir / "summary.json");
    CHECK(s["r_ce"].get<double>() == doctest::Approx(0.135));
    CHECK(s["theta_ce"].size() == 2);
    CHECK(fs::exists(dir / "manifest.json"));
}

TEST_CASE("plan writes the trajectory contract") {
    Sandbox box;
    REQUIRE(run({"plan", "--spec", box.spec(), "--out", box.out("p"), "-K", "8"}).code == cli::kOk);
    const fs::path dir = box.out("p");
    CHECK(first_line(dir / "trajectory.csv") == "k,t,w,c,theta_1,theta_2,slack");
    const json s = read_json(dir / "summary.json");
    CHECK(s["status"] == "optimal");
    CHECK(s["K"] == 8);
    CHECK(s["max_slack"].get<double>() <= 1e-6);
    const json m = read_json(dir / "manifest.json");
    CHECK(m["subcommand"] == "plan");
    CHECK(m["version"] == cli::version());
    CHECK(m["timing"].contains("solve_seconds"));
}

TEST_CASE("simulate and backtest are byte-identical for a fixed seed") {
    Sandbox box;
    const std::vector<std::string> sim = {"simulate", "--spec", box.spec(), "--paths", "64", "--h-sim", "0.05",
                                          "--seed", "7", "--record", "3"};
    auto with_out = [](std::vector<std::string> a, const std::string& out, const std::string& threads) {
        a.insert(a.end(), {"--out", out, "--threads", threads});
        return a;
    };
    REQUIRE(run(with_out(sim, box.out("s1"), "1")).code == cli::kOk);
    REQUIRE(run(with_out(sim, box.out("s2"), "4")).code == cli::kOk);
    for (const char* name : {"summary.json", "paths.csv"}) {
        CHECK(slurp(fs::path(box.out("s1")) / name) == slurp(fs::path(box.out("s2")) / name));
    }
    CHECK(first_line(fs::path(box.out("s1")) / "paths.csv") == "path_id,t,w,c,theta_1,theta_2");

    const std::vector<std::string> bt = {"backtest", "--spec", box.spec(), "--paths", "24", "--h-sim", "0.05",
                                         "--seed", "9", "--replan", "2.5"};
    REQUIRE(run(with_out(bt, box.out("b1"), "1")).code == cli::kOk);
    REQUIRE(run(with_out(bt, box.out("b2"), "3")).code == cli::kOk);
    const std::string a = slurp(fs::path(box.out("b1")) / "summary.json");
    CHECK(a == slurp(fs::path(box.out("b2")) / "summary.json"));
    CHECK(a.find("timing") == std::string::npos);
    const json m = read_json(fs::path(box.out("b1")) / "manifest.json");
    CHECK(m["timing"]["mpc_solves"].get<int>() >= 4);

    REQUIRE(run(with_out(bt, box.out("b3"), "1")).code == cli::kOk);
    const std::vector<std::string> other_seed = {"backtest", "--spec", box.spec(), "--paths", "24", "--h-sim",
                                                 "0.05", "--seed", "10", "--replan", "2.5"};
    REQUIRE(run(with_out(other_seed, box.out("b4"), "1")).code == cli::kOk);
    CHECK(a == slurp(fs::path(box.out("b3")) / "summary.json"));
    CHECK(a != slurp(fs::path(box.out("b4")) / "summary.json"));
}

TEST_CASE("--extension accepts inline JSON and files") {
    Sandbox box;
    const std::string mortality = R"({"t": [0, 10], "density": [0.05, 0.05], "terminal_survival": 0.5})";
    const auto file = box.write("mortality.json", mortality);
    REQUIRE(run({"plan", "--spec", box.spec(), "--out", box.out("inline"), "-K", "10", "--extension",
                 "mortality=" + mortality})
                .code == cli::kOk);
    REQUIRE(run({"plan", "--spec", box.spec(), "--out", box.out("file"), "-K", "10", "--extension",
                 "mortality=" + file.string()})
                .code == cli::kOk);
    REQUIRE(run({"plan", "--spec", box.spec(), "--out", box.out("base"), "-K", "10"}).code == cli::kOk);
    const std::string a = slurp(fs::path(box.out("inline")) / "trajectory.csv");
    CHECK(a == slurp(fs::path(box.out("file")) / "trajectory.csv"));
    CHECK(a != slurp(fs::path(box.out("base")) / "trajectory.csv"));
    CHECK(run({"plan", "--spec", box.spec(), "--out", box.out("x"), "--extension", "teleport=1"}).code ==
          cli::kValidation);
}

TEST_CASE("compare: one row per method and K, plan error shrinks with K") {
    Sandbox box;
    REQUIRE(run({"compare", "--spec", box.spec(), "--out", box.out("c"), "-K", "10", "-K", "40", "--paths", "0"})
                .code == cli::kOk);
    const fs::path dir = box.out("c");
    CHECK(first_line(dir / "compare.csv") == "method,K,c0_over_w0,theta_1,theta_2,mean_utility,std_error");
    std::ifstream f(dir / "compare.csv");
    std::string line;
    std::vector<std::string> methods;
    std::getline(f, line);
    while (std::getline(f, line)) methods.push_back(line.substr(0, line.find(',')));
    CHECK(methods == std::vector<std::string>{"analytic", "ce_plan", "ce_plan", "mpc"});
    const json s = read_json(dir / "summary.json");
    REQUIRE(s["plans"].size() == 2);
    CHECK(s["plans"][1]["c0_error"].get<double>() < s["plans"][0]["c0_error"].get<double>());
    CHECK(s["analytic"]["mean_utility"].is_null());
}
