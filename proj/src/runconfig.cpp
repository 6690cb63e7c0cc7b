#include "bfam/runconfig.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

namespace bfam {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw config_error("config: key '" + key + "': cannot parse '" + v + "' as a number");
    }
}

int to_int(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        const int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw config_error("config: key '" + key + "': cannot parse '" + v + "' as an integer");
    }
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "on" || v == "1") return true;
    if (v == "false" || v == "off" || v == "0") return false;
    throw config_error("config: key '" + key + "': cannot parse '" + v + "' as a boolean");
}

} // namespace

RunConfig parse_run_config_text(const std::string& text) {
    RunConfig cfg;
    using Setter = std::function<void(const std::string&, const std::string&)>;
    const std::map<std::string, Setter> setters = {
        {"equation.b", [&](auto& k, auto& v) { cfg.parameters.b = to_double(k, v); }},
        {"equation.c", [&](auto& k, auto& v) { cfg.parameters.c = to_double(k, v); }},
        {"equation.p", [&](auto& k, auto& v) { cfg.parameters.p = to_int(k, v); }},
        {"equation.dealias", [&](auto& k, auto& v) { cfg.dealias = to_bool(k, v); }},
        {"grid.n", [&](auto& k, auto& v) { cfg.grid_n = to_int(k, v); }},
        {"step.dt", [&](auto& k, auto& v) { cfg.step.dt = to_double(k, v); }},
        {"step.t_end", [&](auto& k, auto& v) { cfg.step.t_end = to_double(k, v); }},
        {"step.formulation",
         [&](auto&, auto& v) { cfg.step.formulation = formulation_from_string(v); }},
        {"step.cfl_limit", [&](auto& k, auto& v) { cfg.step.cfl_limit = to_double(k, v); }},
        {"step.max_value_guard",
         [&](auto& k, auto& v) { cfg.step.max_value_guard = to_double(k, v); }},
        {"init.kind", [&](auto&, auto& v) { cfg.init.kind = init_kind_from_string(v); }},
        {"init.offset", [&](auto& k, auto& v) { cfg.init.offset = to_double(k, v); }},
        {"init.amplitude", [&](auto& k, auto& v) { cfg.init.amplitude = to_double(k, v); }},
        {"init.mode", [&](auto& k, auto& v) { cfg.init.mode = to_int(k, v); }},
        {"init.center", [&](auto& k, auto& v) { cfg.init.center = to_double(k, v); }},
        {"init.width", [&](auto& k, auto& v) { cfg.init.width = to_double(k, v); }},
        {"init.sign", [&](auto&, auto& v) { cfg.init.sign = sign_constraint_from_string(v); }},
        {"observe.stride", [&](auto& k, auto& v) { cfg.observe_stride = to_int(k, v); }},
        {"output.frame_stride", [&](auto& k, auto& v) { cfg.frame_file_stride = to_int(k, v); }},
        {"checks.energy", [&](auto& k, auto& v) { cfg.check_energy = to_bool(k, v); }},
        {"checks.energy_tol", [&](auto& k, auto& v) { cfg.energy_tol = to_double(k, v); }},
        {"checks.mean", [&](auto& k, auto& v) { cfg.check_mean = to_bool(k, v); }},
        {"checks.mean_tol", [&](auto& k, auto& v) { cfg.mean_tol = to_double(k, v); }},
        {"checks.sign", [&](auto& k, auto& v) { cfg.check_sign = to_bool(k, v); }},
        {"checks.sign_tol", [&](auto& k, auto& v) { cfg.sign_tol = to_double(k, v); }},
        {"checks.l1", [&](auto& k, auto& v) { cfg.check_l1 = to_bool(k, v); }},
        {"checks.l1_tol", [&](auto& k, auto& v) { cfg.l1_tol = to_double(k, v); }},
        {"checks.identity", [&](auto& k, auto& v) { cfg.check_identity = to_bool(k, v); }},
        {"checks.identity_tol", [&](auto& k, auto& v) { cfg.identity_tol = to_double(k, v); }},
        {"checks.growth", [&](auto& k, auto& v) { cfg.check_growth = to_bool(k, v); }},
        {"checks.ux_bound", [&](auto& k, auto& v) { cfg.check_ux_bound = to_bool(k, v); }},
        {"checks.characteristics",
         [&](auto& k, auto& v) { cfg.check_characteristics = to_bool(k, v); }},
        {"checks.characteristics_tol",
         [&](auto& k, auto& v) { cfg.characteristics_tol = to_double(k, v); }},
        {"checks.characteristics_seeds",
         [&](auto& k, auto& v) { cfg.characteristics_seeds = to_int(k, v); }},
        {"checks.continuation", [&](auto& k, auto& v) { cfg.check_continuation = to_bool(k, v); }},
        {"checks.continuation_window_a",
         [&](auto& k, auto& v) { cfg.continuation_window_a = to_double(k, v); }},
        {"checks.continuation_window_b",
         [&](auto& k, auto& v) { cfg.continuation_window_b = to_double(k, v); }},
        {"checks.continuation_delta",
         [&](auto& k, auto& v) { cfg.continuation_delta = to_double(k, v); }},
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end())
            throw config_error("config line " + std::to_string(lineno) + ": unknown key '" + key +
                               "'");
        it->second(key, value);
    }

    cfg.parameters.validate();
    cfg.step.validate();
    cfg.init.validate();
    if (cfg.grid_n < 8 || cfg.grid_n % 2 != 0)
        throw config_error("config: grid.n must be even and >= 8");
    if (cfg.observe_stride < 1) throw config_error("config: observe.stride must be >= 1");
    if (cfg.frame_file_stride < 0) throw config_error("config: output.frame_stride must be >= 0");
    return cfg;
}

RunConfig parse_run_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_run_config_text(ss.str());
}

namespace {
std::string fmt(double x) {
    char buf[32];
    snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}
std::string fmt(int x) { return std::to_string(x); }
std::string fmt(bool x) { return x ? "true" : "false"; }
std::string fmt_kind(InitKind k) {
    switch (k) {
        case InitKind::fourier_modes: return "fourier-modes";
        case InitKind::momentum_first: return "momentum-first";
        case InitKind::gaussian_bump_periodic: return "gaussian-bump-periodic";
        case InitKind::peakon_profile: return "peakon-profile";
    }
    return "?";
}
std::string fmt_sign(SignConstraint s) {
    switch (s) {
        case SignConstraint::none: return "none";
        case SignConstraint::non_negative: return "non-negative";
        case SignConstraint::non_positive: return "non-positive";
    }
    return "?";
}
} // namespace

std::map<std::string, std::string> RunConfig::echo() const {
    return {
        {"equation.b", fmt(parameters.b)},
        {"equation.c", fmt(parameters.c)},
        {"equation.p", fmt(parameters.p)},
        {"equation.dealias", fmt(dealias)},
        {"grid.n", fmt(grid_n)},
        {"step.dt", fmt(step.dt)},
        {"step.t_end", fmt(step.t_end)},
        {"step.formulation", to_string(step.formulation)},
        {"step.cfl_limit", fmt(step.cfl_limit)},
        {"step.max_value_guard", fmt(step.max_value_guard)},
        {"init.kind", fmt_kind(init.kind)},
        {"init.offset", fmt(init.offset)},
        {"init.amplitude", fmt(init.amplitude)},
        {"init.mode", fmt(init.mode)},
        {"init.center", fmt(init.center)},
        {"init.width", fmt(init.width)},
        {"init.sign", fmt_sign(init.sign)},
        {"observe.stride", fmt(observe_stride)},
        {"output.frame_stride", fmt(frame_file_stride)},
        {"checks.energy", fmt(check_energy)},
        {"checks.mean", fmt(check_mean)},
        {"checks.sign", fmt(check_sign)},
        {"checks.l1", fmt(check_l1)},
        {"checks.identity", fmt(check_identity)},
        {"checks.growth", fmt(check_growth)},
        {"checks.ux_bound", fmt(check_ux_bound)},
        {"checks.characteristics", fmt(check_characteristics)},
        {"checks.continuation", fmt(check_continuation)},
    };
}

} // namespace bfam
