#pragma once

// Flat `key = value` run configuration layered over the built-in defaults.
// '#' starts a comment, blank lines are skipped, and an unknown key or an
// unparsable value is rejected with its line number so typos cannot silently
// fall back to defaults.

#include <sskcf/tracker.hpp>

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sskcf {

namespace detail {

inline double parse_number(const std::string& value, const std::string& where) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        throw std::runtime_error(where + ": bad number '" + value + "'");
    }
    if (used != value.size()) throw std::runtime_error(where + ": bad number '" + value + "'");
    return v;
}

inline int parse_int(const std::string& value, const std::string& where) {
    const double v = parse_number(value, where);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw std::runtime_error(where + ": expected an integer, got '" + value + "'");
    return i;
}

}  // namespace detail

inline TrackerConfig parse_config(const std::string& text, TrackerConfig base = {}) {
    std::map<std::string, std::function<void(const std::string&, const std::string&)>> setters;
    auto num = [&](const char* key, double* field) {
        setters[key] = [field](const std::string& v, const std::string& w) {
            *field = detail::parse_number(v, w);
        };
    };
    auto integer = [&](const char* key, int* field) {
        setters[key] = [field](const std::string& v, const std::string& w) {
            *field = detail::parse_int(v, w);
        };
    };

    num("padding", &base.padding);
    num("psr_threshold", &base.psr_threshold);
    num("sim_threshold", &base.sim_threshold);
    num("learning_rate", &base.learning_rate);
    num("fusion_mix", &base.fusion_mix);
    num("sim_gamma", &base.sim_gamma);
    num("scale_smoothing", &base.scale_smoothing);
    integer("canonical_size", &base.canonical_size);
    num("label_gain", &base.label_gain);
    num("label_eta_scale", &base.label_eta_scale);
    num("label_exponent", &base.label_exponent);
    num("theta_lower", &base.theta_lower);
    num("theta_upper", &base.theta_upper);
    integer("hist_bins", &base.hist_bins);
    num("C", &base.solver.C);
    num("delta", &base.solver.delta);
    num("beta", &base.solver.beta);
    num("kappa", &base.solver.kappa);
    num("tau", &base.solver.tau);
    integer("max_iter_first", &base.solver.max_iter_first);
    integer("max_iter_update", &base.solver.max_iter_update);
    num("sigma", &base.solver.kernel.sigma);
    integer("cell_size", &base.hog.cell_size);
    setters["kernel"] = [&base](const std::string& v, const std::string& w) {
        if (v == "gaussian")
            base.solver.kernel.type = KernelType::gaussian;
        else if (v == "linear")
            base.solver.kernel.type = KernelType::linear;
        else
            throw std::runtime_error(w + ": kernel must be gaussian or linear, got '" + v + "'");
    };
    setters["orientations"] = [&base](const std::string& v, const std::string& w) {
        base.hog.orientations = detail::parse_int(v, w);
        base.hog.channels = 3 * base.hog.orientations + 4;
    };

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const std::string where = "config line " + std::to_string(line_no);
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error(where + ": expected key = value");
        auto trim = [](std::string s) {
            const std::size_t b = s.find_first_not_of(" \t\r");
            const std::size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end())
            throw std::runtime_error(where + ": unknown key '" + key + "'");
        it->second(value, where);
    }
    return base;
}

inline TrackerConfig load_config(const std::string& path, TrackerConfig base = {}) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_config: cannot open " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), base);
}

}  // namespace sskcf
