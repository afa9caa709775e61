#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "attsync/simulator.hpp"

namespace attsync {

/// Full experiment description, parsed from the line-oriented config format:
///
///   [graph]
///   n 5
///   edge 5 1 1.0          # information flows 5 -> 1, weight a_15 = 1.0
///   [initial]
///   q 1 0.0 -0.6894 -0.6140 0.3843
///   [integrator]
///   dt 0.01
///   t_final 60
///   record_every 100
///   renormalize true
///   canonicalize_init true
///   transform_mode auto   # auto | none | explicit <eps> <q1> <q2> <q3>
///   [output]
///   output_path out/case1
///   emit_svg false
///
/// '#' starts a comment; blank lines are ignored.
struct SimConfig {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::array<double, 4>> initial;  // raw quadruples, scalar first
    IntegratorSettings integrator;
    bool canonicalize_init = true;
    TransformMode transform_mode = TransformMode::Auto;
    UnitQuaternion explicit_v;
    std::string output_path = "trace";
    bool emit_svg = false;

    /// Quadruples in configs come from truncated decimal data; accept up to this
    /// squared-norm defect and renormalize.
    static constexpr double kConfigUnityTol = 1e-3;

    DirectedGraph graph() const { return DirectedGraph::build(n, edges); }

    std::vector<UnitQuaternion> initial_attitudes() const {
        std::vector<UnitQuaternion> out;
        out.reserve(initial.size());
        for (size_t i = 0; i < initial.size(); ++i) {
            const auto& q = initial[i];
            const double n2 = q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3];
            if (std::abs(n2 - 1.0) > kConfigUnityTol)
                throw validation_error("config: initial quaternion of node " +
                                       std::to_string(i + 1) + " is not unit (|q|^2 = " +
                                       std::to_string(n2) + ")");
            const double nn = std::sqrt(n2);
            UnitQuaternion u;
            u.eps = q[0] / nn;
            u.vec = Vec3{q[1] / nn, q[2] / nn, q[3] / nn};
            out.push_back(u);
        }
        return out;
    }

    SimOptions options() const {
        return {canonicalize_init, transform_mode, explicit_v};
    }
};

namespace detail {

inline std::vector<std::string> tokens_of(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream is(body);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

inline double parse_real(const std::string& s, int lineno) {
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || !std::isfinite(v))
        throw validation_error("config line " + std::to_string(lineno) +
                               ": expected a finite number, got '" + s + "'");
    return v;
}

inline int parse_int(const std::string& s, int lineno) {
    const double v = parse_real(s, lineno);
    const int i = static_cast<int>(std::lround(v));
    if (static_cast<double>(i) != v)
        throw validation_error("config line " + std::to_string(lineno) +
                               ": expected an integer, got '" + s + "'");
    return i;
}

inline bool parse_bool(const std::string& s, int lineno) {
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    throw validation_error("config line " + std::to_string(lineno) +
                           ": expected true/false, got '" + s + "'");
}

}  // namespace detail

inline SimConfig parse_config(const std::string& text) {
    SimConfig cfg;
    std::string section;
    std::vector<std::optional<std::array<double, 4>>> quads;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    const auto fail = [&](const std::string& msg) -> void {
        throw validation_error("config line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        const auto toks = detail::tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0].front() == '[') {
            if (toks.size() != 1 || toks[0].back() != ']') fail("malformed section header");
            section = toks[0].substr(1, toks[0].size() - 2);
            if (section != "graph" && section != "initial" && section != "integrator" &&
                section != "output")
                fail("unknown section [" + section + "]");
            continue;
        }
        const std::string& key = toks[0];
        const auto need = [&](size_t count) {
            if (toks.size() != count + 1)
                fail("'" + key + "' expects " + std::to_string(count) + " value(s)");
        };
        if (section == "graph") {
            if (key == "n") {
                need(1);
                cfg.n = detail::parse_int(toks[1], lineno);
                if (cfg.n < 1) fail("n must be positive");
                quads.assign(cfg.n, std::nullopt);
            } else if (key == "edge") {
                need(3);
                cfg.edges.push_back({detail::parse_int(toks[1], lineno),
                                     detail::parse_int(toks[2], lineno),
                                     detail::parse_real(toks[3], lineno)});
            } else {
                fail("unknown key '" + key + "' in [graph]");
            }
        } else if (section == "initial") {
            if (key != "q") fail("unknown key '" + key + "' in [initial]");
            need(5);
            const int id = detail::parse_int(toks[1], lineno);
            if (id < 1 || id > cfg.n) fail("q id out of range 1.." + std::to_string(cfg.n));
            if (quads[id - 1]) fail("duplicate q entry for node " + std::to_string(id));
            quads[id - 1] = std::array<double, 4>{
                detail::parse_real(toks[2], lineno), detail::parse_real(toks[3], lineno),
                detail::parse_real(toks[4], lineno), detail::parse_real(toks[5], lineno)};
        } else if (section == "integrator") {
            if (key == "dt") {
                need(1);
                cfg.integrator.dt = detail::parse_real(toks[1], lineno);
            } else if (key == "t_final") {
                need(1);
                cfg.integrator.t_final = detail::parse_real(toks[1], lineno);
            } else if (key == "record_every") {
                need(1);
                cfg.integrator.record_every = detail::parse_int(toks[1], lineno);
            } else if (key == "renormalize") {
                need(1);
                cfg.integrator.renormalize = detail::parse_bool(toks[1], lineno);
            } else if (key == "canonicalize_init") {
                need(1);
                cfg.canonicalize_init = detail::parse_bool(toks[1], lineno);
            } else if (key == "transform_mode") {
                if (toks.size() < 2) fail("transform_mode expects a mode");
                if (toks[1] == "auto" && toks.size() == 2) {
                    cfg.transform_mode = TransformMode::Auto;
                } else if (toks[1] == "none" && toks.size() == 2) {
                    cfg.transform_mode = TransformMode::None;
                } else if (toks[1] == "explicit" && toks.size() == 6) {
                    cfg.transform_mode = TransformMode::Explicit;
                    cfg.explicit_v = UnitQuaternion(
                        detail::parse_real(toks[2], lineno),
                        Vec3{detail::parse_real(toks[3], lineno),
                             detail::parse_real(toks[4], lineno),
                             detail::parse_real(toks[5], lineno)});
                } else {
                    fail("transform_mode must be auto, none, or explicit eps q1 q2 q3");
                }
            } else {
                fail("unknown key '" + key + "' in [integrator]");
            }
        } else if (section == "output") {
            if (key == "output_path") {
                need(1);
                cfg.output_path = toks[1];
            } else if (key == "emit_svg") {
                need(1);
                cfg.emit_svg = detail::parse_bool(toks[1], lineno);
            } else {
                fail("unknown key '" + key + "' in [output]");
            }
        } else {
            fail("key '" + key + "' outside any section");
        }
    }

    if (cfg.n < 1) throw validation_error("config: missing 'n' in [graph]");
    for (int i = 0; i < cfg.n; ++i)
        if (!quads[i])
            throw validation_error("config: missing initial quaternion for node " +
                                   std::to_string(i + 1));
    cfg.initial.reserve(cfg.n);
    for (int i = 0; i < cfg.n; ++i) cfg.initial.push_back(*quads[i]);

    cfg.integrator.validate();
    cfg.graph();                // surfaces edge validation errors
    cfg.initial_attitudes();    // surfaces unity validation errors
    return cfg;
}

}  // namespace attsync
