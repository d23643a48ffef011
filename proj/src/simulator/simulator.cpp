#include "merton/simulator/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iomanip>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace merton::sim {

const char* to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::EulerMaruyama: return "euler";
        case Scheme::ExactLognormal: return "exact";
    }
    return "?";
}

Scheme parse_scheme(const std::string& name) {
    if (name == "euler") return Scheme::EulerMaruyama;
    if (name == "exact") return Scheme::ExactLognormal;
    throw std::invalid_argument("unknown simulation scheme '" + name + "' (expected euler or exact)");
}

void AnalyticPolicy::act(double t, double w, Action& out) {
    if (sol_.human_capital) {
        out = analytic::analytic_policy(sol_, t, w);
        return;
    }
    if (!(w > 0.0)) throw std::invalid_argument("analytic policy: wealth must be positive");
    out.consumption = sol_.consumption_ratio(t) * w;
    out.theta = sol_.theta_ce;
    out.premium = 0.0;
}

MarketSchedule::MarketSchedule(const ProblemSpec& spec) {
    const auto rf = spec.market.risk_free_index;
    regimes_.push_back({-std::numeric_limits<double>::infinity(), spec.market.mu, expand_covariance(spec.market)});
    for (const auto& r : spec.extensions.time_varying) {
        regimes_.push_back({r.start, r.mu, expand_covariance(r.cov, rf)});
    }
}

const MarketSchedule::Regime& MarketSchedule::regime(double t) const {
    const Regime* active = &regimes_.front();
    for (const auto& r : regimes_) {
        if (r.start <= t + 1e-12 * std::max(1.0, std::abs(t))) active = &r;
    }
    return *active;
}

std::uint64_t path_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    if (spare_) {
        const double z = *spare_;
        spare_.reset();
        return z;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    return r * std::cos(a);
}

std::optional<double> sample_death(const MortalityModel& m, double u) {
    const auto& s = m.survival;
    const auto& g = m.grid;
    if (u < m.terminal_survival()) return std::nullopt;
    // s is nonincreasing; find the first grid point with s <= u
    for (std::size_t i = 1; i < g.size(); ++i) {
        if (s[i] <= u) {
            if (s[i - 1] == s[i]) return g[i];
            const double frac = (s[i - 1] - u) / (s[i - 1] - s[i]);
            return g[i - 1] + std::clamp(frac, 0.0, 1.0) * (g[i] - g[i - 1]);
        }
    }
    return g.back();
}

std::optional<double> sample_death(const MortalityModel& mortality, std::uint64_t seed) {
    Rng rng(seed);
    return sample_death(mortality, rng.uniform());
}

double realized_utility(const SimPath& path, const UtilityParams& utility, double ruin_utility) {
    const double rho = utility.utility_exponent();
    double u = 0.0;
    for (std::size_t k = 0; k < path.c.size(); ++k) {
        const double dt = path.t[k + 1] - path.t[k];
        const double alpha = utility.discount ? (*utility.discount)(path.t[k]) : 1.0;
        const double c = path.c[k];
        if (c <= 0.0) {
            if (rho < 0.0) return ruin_utility;
            continue;
        }
        u += dt * alpha * std::pow(c, rho) / rho;
    }
    if (path.ruined || path.estate <= 0.0) return rho < 0.0 ? ruin_utility : u;
    return u + utility.beta * std::pow(path.estate, rho) / rho;
}

namespace {

SimPath run_path(Policy& policy, const ProblemSpec& spec, const MarketSchedule& market, const SimOptions& opt,
                 std::uint64_t seed, bool negate) {
    const auto& ex = spec.extensions;
    if (opt.scheme == Scheme::ExactLognormal && (!policy.proportional() || ex.income)) {
        throw std::invalid_argument("simulate_path: the exact lognormal scheme needs a proportional policy and no income");
    }
    if (!(opt.h_sim > 0.0)) throw std::invalid_argument("simulate_path: h_sim must be positive");
    const double T = spec.horizon;
    const long steps = std::max(1L, std::lround(T / opt.h_sim));
    const double h = T / static_cast<double>(steps);

    policy.reset();
    Rng rng(seed);
    SimPath path;
    path.seed = seed;
    std::optional<double> death;
    if (ex.mortality) death = sample_death(*ex.mortality, rng.uniform());

    const int n = spec.num_assets();
    path.t.reserve(static_cast<std::size_t>(steps) + 1);
    path.w.reserve(static_cast<std::size_t>(steps) + 1);
    std::vector<double> thetas;
    thetas.reserve(static_cast<std::size_t>(steps * n));

    Action a;
    const MarketSchedule::Regime* cached_regime = nullptr;
    Vector cached_theta;
    double drift = 0.0;
    double var = 0.0;

    double w = spec.w_init;
    path.t.push_back(0.0);
    path.w.push_back(w);
    path.estate = w;
    if (death && *death <= 0.0) {
        path.death_time = 0.0;
        path.theta.resize(n, 0);
        path.utility = realized_utility(path, spec.utility, opt.ruin_utility);
        return path;
    }
    for (long k = 0; k < steps; ++k) {
        const double t = T * static_cast<double>(k) / static_cast<double>(steps);
        const bool dies = death && *death < t + h;
        const double dt = dies ? *death - t : h;
        policy.act(t, w, a);
        path.c.push_back(a.consumption);
        path.premium.push_back(a.premium);
        thetas.insert(thetas.end(), a.theta.data(), a.theta.data() + n);

        const auto& regime = market.regime(t);
        if (&regime != cached_regime || a.theta.size() != cached_theta.size() || a.theta != cached_theta) {
            cached_regime = &regime;
            cached_theta = a.theta;
            drift = regime.mu.dot(a.theta);
            var = regime.root.quad(a.theta);
        }
        double z = rng.normal();
        if (negate) z = -z;
        double next;
        if (opt.scheme == Scheme::ExactLognormal) {
            const double kappa = (a.consumption + a.premium) / w;
            next = w * std::exp((drift - kappa - 0.5 * var) * dt + std::sqrt(var * dt) * z);
        } else {
            const double y = ex.income ? ex.income->rate(t) : 0.0;
            next = w + (drift * w + y - a.consumption - a.premium) * dt + std::sqrt(var * dt) * w * z;
        }
        path.t.push_back(t + dt);
        path.w.push_back(next);
        if (dies) {
            path.death_time = *death;
            const double lambda = ex.insurance ? ex.insurance->payout_ratio(*death) : 0.0;
            path.estate = next + lambda * a.premium;
            break;
        }
        if (!(next > 0.0)) {
            path.ruined = true;
            path.estate = next;
            break;
        }
        w = next;
        path.estate = w;
    }
    path.theta = Eigen::Map<const Matrix>(thetas.data(), n, static_cast<Eigen::Index>(path.c.size()));
    path.utility = realized_utility(path, spec.utility, opt.ruin_utility);
    return path;
}

}  // namespace

SimPath simulate_path(Policy& policy, const ProblemSpec& spec, const SimOptions& options, std::uint64_t seed,
                      bool negate) {
    return run_path(policy, spec, MarketSchedule(spec), options, seed, negate);
}

MonteCarloResult monte_carlo(const Policy& policy, const ProblemSpec& spec, std::size_t N, const SimOptions& options,
                             std::uint64_t seed) {
    if (N == 0) throw std::invalid_argument("monte_carlo: need at least one path");
    const MarketSchedule market(spec);
    MonteCarloResult res;
    res.num_paths = N;
    res.utilities.assign(N, 0.0);
    std::vector<double> estate(N, 0.0);
    std::vector<char> ruined(N, 0), died(N, 0);
    res.paths.resize(std::min(N, options.record_paths));

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, N));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            const auto local = policy.clone();
            for (std::size_t i = next++; i < N; i = next++) {
                const std::uint64_t s = path_seed(seed, options.antithetic ? i / 2 : i);
                SimPath p = run_path(*local, spec, market, options, s, options.antithetic && i % 2 == 1);
                res.utilities[i] = p.utility;
                estate[i] = p.estate;
                ruined[i] = p.ruined;
                died[i] = p.death_time.has_value();
                if (i < res.paths.size()) res.paths[i] = std::move(p);
            }
        } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = N;
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    double sum = 0.0;
    double sum_estate = 0.0;
    double sum_log = 0.0;
    std::size_t n_log = 0;
    std::size_t n_ruin = 0;
    std::size_t n_dead = 0;
    for (std::size_t i = 0; i < N; ++i) {
        sum += res.utilities[i];
        sum_estate += estate[i];
        n_ruin += ruined[i];
        n_dead += died[i];
        if (!ruined[i] && !died[i]) {
            sum_log += std::log(estate[i]);
            ++n_log;
        }
    }
    const double dN = static_cast<double>(N);
    res.mean = sum / dN;
    res.mean_terminal = sum_estate / dN;
    res.mean_log_terminal = n_log ? sum_log / static_cast<double>(n_log) : 0.0;
    res.ruin_rate = static_cast<double>(n_ruin) / dN;
    res.death_rate = static_cast<double>(n_dead) / dN;

    // antithetic pairs are the independent units
    const bool paired = options.antithetic && N % 2 == 0;
    const std::size_t units = paired ? N / 2 : N;
    if (units > 1) {
        double ss = 0.0;
        for (std::size_t j = 0; j < units; ++j) {
            const double v = paired ? 0.5 * (res.utilities[2 * j] + res.utilities[2 * j + 1]) : res.utilities[j];
            ss += (v - res.mean) * (v - res.mean);
        }
        const double du = static_cast<double>(units);
        res.std_error = std::sqrt(ss / (du - 1.0) / du);
    }
    return res;
}

void write_paths_csv(std::ostream& out, const std::vector<SimPath>& paths) {
    const auto old = out.precision();
    out << std::setprecision(17);
    const Eigen::Index n = paths.empty() ? 0 : paths.front().theta.rows();
    out << "path_id,t,w,c";
    for (Eigen::Index i = 0; i < n; ++i) out << ",theta_" << (i + 1);
    out << '\n';
    for (std::size_t p = 0; p < paths.size(); ++p) {
        const SimPath& path = paths[p];
        for (std::size_t k = 0; k < path.w.size(); ++k) {
            out << p << ',' << path.t[k] << ',' << path.w[k] << ',';
            if (k < path.c.size()) out << path.c[k];
            for (Eigen::Index i = 0; i < n; ++i) {
                out << ',';
                if (k < path.c.size()) out << path.theta(i, static_cast<Eigen::Index>(k));
            }
            out << '\n';
        }
    }
    out.precision(old);
}

}  // namespace merton::sim
