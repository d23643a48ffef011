#include "merton/core/spec_io.hpp"

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

namespace merton {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw SpecFormatError(where + ": " + what);
}

void check_keys(const json& j, const std::string& where, std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) fail(where, "expected an object");
    for (const auto& [key, _] : j.items()) {
        bool ok = false;
        for (auto a : allowed) ok = ok || key == a;
        if (!ok) fail(where, "unknown key '" + key + "'");
    }
}

const json& need(const json& j, const std::string& where, const char* key) {
    if (!j.contains(key)) fail(where, std::string("missing required key '") + key + "'");
    return j.at(key);
}

double number(const json& j, const std::string& where) {
    if (!j.is_number()) fail(where, "expected a number");
    return j.get<double>();
}

int integer(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<int>();
}

std::vector<double> numbers(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

Vector vector(const json& j, const std::string& where) {
    const auto v = numbers(j, where);
    return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Matrix matrix(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    if (rows == 0) return Matrix(0, 0);
    const auto cols = static_cast<Eigen::Index>(numbers(j[0], where + "[0]").size());
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const auto row = numbers(j[static_cast<std::size_t>(r)], where + "[" + std::to_string(r) + "]");
        if (static_cast<Eigen::Index>(row.size()) != cols) fail(where, "ragged matrix");
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = row[static_cast<std::size_t>(c)];
    }
    return m;
}

json to_json(const Vector& v) { return json(std::vector<double>(v.data(), v.data() + v.size())); }

json to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        std::vector<double> row(static_cast<std::size_t>(m.cols()));
        for (Eigen::Index c = 0; c < m.cols(); ++c) row[static_cast<std::size_t>(c)] = m(r, c);
        rows.push_back(row);
    }
    return rows;
}

// A curve is either {"t": [...], "value": [...]} or a bare number meaning a
// constant over [0, T].
SampledCurve curve(const json& j, const std::string& where, double horizon) {
    if (j.is_number()) return SampledCurve::constant(j.get<double>(), 0.0, horizon);
    check_keys(j, where, {"t", "value"});
    SampledCurve c;
    c.t = numbers(need(j, where, "t"), where + ".t");
    c.v = numbers(need(j, where, "value"), where + ".value");
    return c;
}

json curve_json(const SampledCurve& c) { return json{{"t", c.t}, {"value", c.v}}; }

Covariance covariance(const json& j, const std::string& where) {
    check_keys(j, where, {"dense", "factor"});
    if (j.contains("dense") == j.contains("factor")) fail(where, "exactly one of 'dense' or 'factor' is required");
    if (j.contains("dense")) return DenseCovariance{matrix(j.at("dense"), where + ".dense")};
    const json& f = j.at("factor");
    const std::string fw = where + ".factor";
    check_keys(f, fw, {"loadings", "factor_cov", "idio_var"});
    return FactorCovariance{matrix(need(f, fw, "loadings"), fw + ".loadings"),
                            matrix(need(f, fw, "factor_cov"), fw + ".factor_cov"),
                            vector(need(f, fw, "idio_var"), fw + ".idio_var")};
}

json covariance_json(const Covariance& cov) {
    if (const auto* d = std::get_if<DenseCovariance>(&cov)) return json{{"dense", to_json(d->sigma)}};
    const auto& f = std::get<FactorCovariance>(cov);
    return json{{"factor",
                 {{"loadings", to_json(f.loadings)}, {"factor_cov", to_json(f.factor_cov)}, {"idio_var", to_json(f.idio_var)}}}};
}

ConstraintSet constraint_set(const json& j, const std::string& where) {
    check_keys(j, where, {"eq", "ineq", "soc"});
    ConstraintSet s;
    if (j.contains("eq")) {
        const json& a = j.at("eq");
        if (!a.is_array()) fail(where + ".eq", "expected an array");
        for (std::size_t i = 0; i < a.size(); ++i) {
            const std::string w = where + ".eq[" + std::to_string(i) + "]";
            check_keys(a[i], w, {"a", "b"});
            s.eq.push_back({vector(need(a[i], w, "a"), w + ".a"), number(need(a[i], w, "b"), w + ".b")});
        }
    }
    if (j.contains("ineq")) {
        const json& a = j.at("ineq");
        if (!a.is_array()) fail(where + ".ineq", "expected an array");
        for (std::size_t i = 0; i < a.size(); ++i) {
            const std::string w = where + ".ineq[" + std::to_string(i) + "]";
            check_keys(a[i], w, {"g", "h"});
            s.ineq.push_back({vector(need(a[i], w, "g"), w + ".g"), number(need(a[i], w, "h"), w + ".h")});
        }
    }
    if (j.contains("soc")) {
        const json& a = j.at("soc");
        if (!a.is_array()) fail(where + ".soc", "expected an array");
        for (std::size_t i = 0; i < a.size(); ++i) {
            const std::string w = where + ".soc[" + std::to_string(i) + "]";
            check_keys(a[i], w, {"P", "q", "r"});
            s.socs.push_back({matrix(need(a[i], w, "P"), w + ".P"), vector(need(a[i], w, "q"), w + ".q"),
                              number(need(a[i], w, "r"), w + ".r")});
        }
    }
    return s;
}

json constraint_set_json(const ConstraintSet& s) {
    json j = json::object();
    if (!s.eq.empty()) {
        j["eq"] = json::array();
        for (const auto& e : s.eq) j["eq"].push_back({{"a", to_json(e.a)}, {"b", e.b}});
    }
    if (!s.ineq.empty()) {
        j["ineq"] = json::array();
        for (const auto& g : s.ineq) j["ineq"].push_back({{"g", to_json(g.g)}, {"h", g.h}});
    }
    if (!s.socs.empty()) {
        j["soc"] = json::array();
        for (const auto& c : s.socs) j["soc"].push_back({{"P", to_json(c.P)}, {"q", to_json(c.q)}, {"r", c.r}});
    }
    return j;
}

MortalityModel mortality(const json& j, const std::string& where) {
    check_keys(j, where, {"t", "density", "survival", "terminal_survival"});
    auto grid = numbers(need(j, where, "t"), where + ".t");
    auto density = numbers(need(j, where, "density"), where + ".density");
    if (j.contains("survival")) {
        if (j.contains("terminal_survival")) fail(where, "give either 'survival' or 'terminal_survival', not both");
        MortalityModel m;
        m.grid = std::move(grid);
        m.density = std::move(density);
        m.survival = numbers(j.at("survival"), where + ".survival");
        return m;
    }
    const double s_T = j.contains("terminal_survival") ? number(j.at("terminal_survival"), where + ".terminal_survival") : 0.0;
    if (grid.size() != density.size() || grid.empty()) fail(where, "'t' and 'density' must have equal non-zero length");
    return MortalityModel::from_density(std::move(grid), std::move(density), s_T);
}

void extension(Extensions& ex, std::string_view name, const json& j, double horizon, int n) {
    const std::string where = "extensions." + std::string(name);
    if (name == "mortality") {
        ex.mortality = mortality(j, where);
    } else if (name == "income") {
        if (j.is_object() && j.contains("rate")) {
            check_keys(j, where, {"rate"});
            ex.income = IncomeModel{curve(j.at("rate"), where + ".rate", horizon)};
        } else {
            ex.income = IncomeModel{curve(j, where, horizon)};
        }
    } else if (name == "insurance") {
        if (j.is_object() && j.contains("payout_ratio")) {
            check_keys(j, where, {"payout_ratio"});
            ex.insurance = InsuranceModel{curve(j.at("payout_ratio"), where + ".payout_ratio", horizon)};
        } else {
            ex.insurance = InsuranceModel{curve(j, where, horizon)};
        }
    } else if (name == "consumption_floor") {
        ex.consumption_floor = curve(j, where, horizon);
    } else if (name == "spending_limit") {
        check_keys(j, where, {"eta", "dividend_yield"});
        SpendingLimit s;
        if (j.contains("eta")) s.eta = number(j.at("eta"), where + ".eta");
        if (j.contains("dividend_yield")) {
            const json& d = j.at("dividend_yield");
            s.dividend_yield = d.is_number() ? Vector::Constant(n, d.get<double>()) : vector(d, where + ".dividend_yield");
        }
        ex.spending_limit = s;
    } else if (name == "minimum_cash") {
        check_keys(j, where, {"asset", "floor", "consumption_multiple"});
        MinimumCash m;
        m.asset = integer(need(j, where, "asset"), where + ".asset");
        if (j.contains("floor")) m.floor = curve(j.at("floor"), where + ".floor", horizon);
        if (j.contains("consumption_multiple")) {
            m.consumption_multiple = number(j.at("consumption_multiple"), where + ".consumption_multiple");
        }
        ex.minimum_cash = m;
    } else if (name == "max_min_consumption") {
        if (!j.is_boolean()) fail(where, "expected a boolean");
        ex.max_min_consumption = j.get<bool>();
    } else if (name == "time_varying") {
        if (!j.is_array()) fail(where, "expected an array of regimes");
        ex.time_varying.clear();
        for (std::size_t i = 0; i < j.size(); ++i) {
            const std::string w = where + "[" + std::to_string(i) + "]";
            check_keys(j[i], w, {"start", "mu", "cov", "theta_set"});
            MarketRegime r;
            r.start = number(need(j[i], w, "start"), w + ".start");
            r.mu = vector(need(j[i], w, "mu"), w + ".mu");
            r.cov = covariance(need(j[i], w, "cov"), w + ".cov");
            if (j[i].contains("theta_set")) r.theta_set = constraint_set(j[i].at("theta_set"), w + ".theta_set");
            ex.time_varying.push_back(std::move(r));
        }
    } else {
        fail("extensions", "unknown extension '" + std::string(name) + "'");
    }
}

json extensions_json(const Extensions& ex) {
    json j = json::object();
    if (ex.mortality) {
        j["mortality"] = {{"t", ex.mortality->grid}, {"density", ex.mortality->density}, {"survival", ex.mortality->survival}};
    }
    if (ex.income) j["income"] = {{"rate", curve_json(ex.income->rate)}};
    if (ex.insurance) j["insurance"] = {{"payout_ratio", curve_json(ex.insurance->payout_ratio)}};
    if (ex.consumption_floor) j["consumption_floor"] = curve_json(*ex.consumption_floor);
    if (ex.spending_limit) {
        j["spending_limit"] = {{"eta", ex.spending_limit->eta}};
        if (ex.spending_limit->dividend_yield.size() > 0) {
            j["spending_limit"]["dividend_yield"] = to_json(ex.spending_limit->dividend_yield);
        }
    }
    if (ex.minimum_cash) {
        json m = {{"asset", ex.minimum_cash->asset}, {"consumption_multiple", ex.minimum_cash->consumption_multiple}};
        if (ex.minimum_cash->floor) m["floor"] = curve_json(*ex.minimum_cash->floor);
        j["minimum_cash"] = m;
    }
    if (ex.max_min_consumption) j["max_min_consumption"] = true;
    if (!ex.time_varying.empty()) {
        json regimes = json::array();
        for (const auto& r : ex.time_varying) {
            json rj = {{"start", r.start}, {"mu", to_json(r.mu)}, {"cov", covariance_json(r.cov)}};
            if (r.theta_set) rj["theta_set"] = constraint_set_json(*r.theta_set);
            regimes.push_back(rj);
        }
        j["time_varying"] = regimes;
    }
    return j;
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecFormatError(what + ": " + e.what());
    }
}

}  // namespace

ProblemSpec parse_spec(const std::string& json_text) {
    const json j = parse_json(json_text, "spec");
    check_keys(j, "spec", {"schema", "market", "utility", "theta_set", "horizon", "w_init", "extensions"});
    const json& schema = need(j, "spec", "schema");
    if (!schema.is_string() || schema.get<std::string>() != kSpecSchema) {
        fail("spec.schema", "unsupported schema (expected \"" + std::string(kSpecSchema) + "\")");
    }

    ProblemSpec spec;
    spec.horizon = number(need(j, "spec", "horizon"), "spec.horizon");
    spec.w_init = j.contains("w_init") ? number(j.at("w_init"), "spec.w_init") : 1.0;

    const json& m = need(j, "spec", "market");
    check_keys(m, "market", {"mu", "cov", "risk_free_index"});
    spec.market.mu = vector(need(m, "market", "mu"), "market.mu");
    spec.market.cov = covariance(need(m, "market", "cov"), "market.cov");
    if (m.contains("risk_free_index") && !m.at("risk_free_index").is_null()) {
        spec.market.risk_free_index = integer(m.at("risk_free_index"), "market.risk_free_index");
    }

    const json& u = need(j, "spec", "utility");
    check_keys(u, "utility", {"gamma", "beta", "rho", "discount"});
    spec.utility.gamma = number(need(u, "utility", "gamma"), "utility.gamma");
    spec.utility.beta = u.contains("beta") ? number(u.at("beta"), "utility.beta") : 1.0;
    if (u.contains("rho") && !u.at("rho").is_null()) spec.utility.rho = number(u.at("rho"), "utility.rho");
    if (u.contains("discount")) spec.utility.discount = curve(u.at("discount"), "utility.discount", spec.horizon);

    if (j.contains("theta_set")) spec.theta_set = constraint_set(j.at("theta_set"), "theta_set");

    if (j.contains("extensions")) {
        const json& ex = j.at("extensions");
        if (!ex.is_object()) fail("extensions", "expected an object");
        for (const auto& [name, block] : ex.items()) {
            extension(spec.extensions, name, block, spec.horizon, spec.market.num_assets());
        }
    }
    return spec;
}

std::string spec_to_json(const ProblemSpec& spec, int indent) {
    json j;
    j["schema"] = kSpecSchema;
    j["horizon"] = spec.horizon;
    j["w_init"] = spec.w_init;
    j["market"] = {{"mu", to_json(spec.market.mu)}, {"cov", covariance_json(spec.market.cov)}};
    if (spec.market.risk_free_index) j["market"]["risk_free_index"] = *spec.market.risk_free_index;
    j["utility"] = {{"gamma", spec.utility.gamma}, {"beta", spec.utility.beta}};
    if (spec.utility.rho) j["utility"]["rho"] = *spec.utility.rho;
    if (spec.utility.discount) j["utility"]["discount"] = curve_json(*spec.utility.discount);
    j["theta_set"] = constraint_set_json(spec.theta_set);
    const json ex = extensions_json(spec.extensions);
    if (!ex.empty()) j["extensions"] = ex;
    return j.dump(indent);
}

ProblemSpec load_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open spec file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

void save_spec(const ProblemSpec& spec, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot write spec file '" + path.string() + "'");
    out << spec_to_json(spec) << '\n';
}

void set_extension(ProblemSpec& spec, std::string_view name, const std::string& json_text) {
    const json j = parse_json(json_text, "extension " + std::string(name));
    extension(spec.extensions, name, j, spec.horizon, spec.market.num_assets());
}

}  // namespace merton
