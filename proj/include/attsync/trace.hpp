#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "attsync/analysis.hpp"
#include "attsync/digraph.hpp"
#include "attsync/protocol.hpp"
#include "attsync/transform.hpp"

namespace attsync {

struct TraceSample {
    double t = 0.0;
    NetworkState state;  // raw (untransformed) attitudes and applied controls
    Metrics metrics;
};

/// Recorded time series of one simulation, together with the fixed analysis
/// frame and the connectivity facts it was run under.
struct Trace {
    std::vector<TraceSample> samples;
    UnitQuaternion frame;  // transform quaternion v (identity when none)
    RootAnalysis roots;
    bool quasi_strongly_connected = false;
    bool strongly_connected = false;
};

/// Evaluate all per-sample diagnostics. Scalar-part quantities are computed in
/// the frame given by `frame`; the disagreement is computed on raw attitudes.
inline Metrics compute_metrics(const NetworkState& state, const RootAnalysis& roots,
                               const UnitQuaternion& frame) {
    NetworkState hat = state;
    for (auto& q : hat.attitudes) q = apply_transform(q, frame);

    std::vector<int> all(state.attitudes.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i) + 1;
    const std::vector<int>& root_ids = roots.roots.empty() ? all : roots.roots;

    Metrics m;
    const auto [er, k] = min_scalar(hat, root_ids);
    m.eps_star_roots = er;
    m.k_index = k;
    m.eps_star_all = min_scalar(hat, all).first;
    m.w1 = energy_w1(hat, root_ids);
    m.w2 = energy_w2(hat, root_ids);
    m.v_energy = energy_v(hat);
    m.disagreement = disagreement(state);
    m.max_omega_norm = 0.0;
    for (const Vec3& w : state.omegas) m.max_omega_norm = std::max(m.max_omega_norm, norm(w));
    return m;
}

struct MonotoneVerdict {
    bool pass = true;
    double t = 0.0;      // first violating sample time
    double delta = 0.0;  // size of the decrease there
};

/// Check that the minimum transformed scalar over `subset` never drops by more
/// than `tol` between consecutive samples.
inline MonotoneVerdict verify_monotone_eps_star(const Trace& trace,
                                                const std::vector<int>& subset,
                                                double tol) {
    if (trace.samples.empty()) throw validation_error("verify_monotone_eps_star: empty trace");
    MonotoneVerdict v;
    double prev = 0.0;
    bool first = true;
    for (const TraceSample& s : trace.samples) {
        NetworkState hat = s.state;
        for (auto& q : hat.attitudes) q = apply_transform(q, trace.frame);
        const double cur = min_scalar(hat, subset).first;
        if (!first && cur < prev - tol) {
            v.pass = false;
            v.t = s.t;
            v.delta = prev - cur;
            return v;
        }
        prev = cur;
        first = false;
    }
    return v;
}

struct ConvergenceVerdict {
    bool pass = false;
    double c1 = 0.0;  // measured limit of the minimum scalar over all nodes
    double final_disagreement = 0.0;
};

/// Pass iff the final disagreement is below `tol` and the disagreement is
/// non-increasing (within 10*tol jitter) over the last `window` samples; the
/// limit constant estimate must come out positive.
inline ConvergenceVerdict verify_convergence(const Trace& trace, double tol, int window) {
    if (trace.samples.empty()) throw validation_error("verify_convergence: empty trace");
    ConvergenceVerdict v;
    v.final_disagreement = trace.samples.back().metrics.disagreement;
    v.c1 = trace.samples.back().metrics.eps_star_all;
    bool tail_ok = true;
    const int n = static_cast<int>(trace.samples.size());
    const int start = std::max(0, n - window);
    for (int i = start + 1; i < n; ++i) {
        if (trace.samples[i].metrics.disagreement >
            trace.samples[i - 1].metrics.disagreement + 10.0 * tol)
            tail_ok = false;
    }
    v.pass = (v.final_disagreement < tol) && tail_ok && (v.c1 > 0.0);
    return v;
}

}  // namespace attsync
