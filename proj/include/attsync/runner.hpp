#pragma once

#include <chrono>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "attsync/config.hpp"
#include "attsync/trace_io.hpp"

namespace attsync {

struct RunSummary {
    std::string name;
    bool strongly_connected = false;
    bool quasi_strongly_connected = false;
    std::vector<int> roots;
    InitialConditionClass cls;
    bool classified = false;  // false when the root set is empty
    UnitQuaternion transform_v;
    double final_disagreement = 0.0;
    double final_eps_star = 0.0;  // measured limit constant estimate
    bool monotone_pass = false;
    double wall_seconds = 0.0;

    std::string to_text() const {
        std::ostringstream os;
        os << "case: " << name << '\n'
           << "strongly_connected: " << (strongly_connected ? "true" : "false") << '\n'
           << "quasi_strongly_connected: "
           << (quasi_strongly_connected ? "true" : "false") << '\n';
        os << "roots:";
        for (int r : roots) os << ' ' << r;
        os << '\n';
        if (classified)
            os << "initial_condition: " << to_string(cls.tag) << ' ' << to_string(cls.part)
               << '\n';
        else
            os << "initial_condition: unclassified (no roots)\n";
        os << "transform_v: " << detail::fmt17(transform_v.eps) << ' '
           << detail::fmt17(transform_v.vec.x1) << ' ' << detail::fmt17(transform_v.vec.x2)
           << ' ' << detail::fmt17(transform_v.vec.x3) << '\n'
           << "final_disagreement: " << detail::fmt17(final_disagreement) << '\n'
           << "final_eps_star: " << detail::fmt17(final_eps_star) << '\n'
           << "eps_star_monotone: " << (monotone_pass ? "pass" : "fail") << '\n'
           << "wall_seconds: " << wall_seconds << '\n';
        return os.str();
    }
};

struct RunResult {
    Trace trace;
    RunSummary summary;
};

/// Full pipeline: canonicalize, classify, transform, simulate, analyze. When
/// `write_files` is set, the trace CSVs, the summary text, and (optionally) the
/// SVG charts are written next to config.output_path.
inline RunResult run(const SimConfig& config, const std::string& name = "run",
                     bool write_files = true) {
    const auto t_start = std::chrono::steady_clock::now();
    RunResult r;
    r.trace = simulate(config.graph(), config.initial_attitudes(), config.integrator,
                       config.options());
    RunSummary& s = r.summary;
    s.name = name;
    s.strongly_connected = r.trace.strongly_connected;
    s.quasi_strongly_connected = r.trace.quasi_strongly_connected;
    s.roots = r.trace.roots.roots;
    s.transform_v = r.trace.frame;
    if (!s.roots.empty()) {
        std::vector<UnitQuaternion> canon;
        for (const auto& q : config.initial_attitudes()) canon.push_back(canonicalize(q));
        s.cls = classify_initial(canon, r.trace.roots);
        s.classified = true;
    }
    s.final_disagreement = r.trace.samples.back().metrics.disagreement;
    s.final_eps_star = r.trace.samples.back().metrics.eps_star_all;
    std::vector<int> all(config.n);
    for (int i = 0; i < config.n; ++i) all[i] = i + 1;
    s.monotone_pass = verify_monotone_eps_star(r.trace, all, 1e-9).pass;
    s.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();

    if (write_files) {
        export_csv(r.trace, config.output_path);
        auto f = detail::open_out(config.output_path + "_summary.txt");
        f << s.to_text();
        if (config.emit_svg) export_svg(r.trace, config.output_path);
    }
    return r;
}

}  // namespace attsync
