#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "attsync/trace.hpp"

namespace attsync {

struct IntegratorSettings {
    double dt = 0.01;
    double t_final = 60.0;
    int record_every = 1;
    bool renormalize = true;

    void validate() const {
        if (!(dt > 0.0) || dt > 0.1)
            throw validation_error("integrator: dt must lie in (0, 0.1]");
        if (!(t_final >= dt))
            throw validation_error("integrator: t_final must be at least dt");
        if (record_every < 1)
            throw validation_error("integrator: record_every must be >= 1");
    }
};

enum class TransformMode { Auto, None, Explicit };

struct SimOptions {
    bool canonicalize_init = true;
    TransformMode transform_mode = TransformMode::Auto;
    UnitQuaternion explicit_v;  // used only with TransformMode::Explicit
};

namespace detail {

// Flat derivative of the coupled 4N-dimensional system: control (6) evaluated
// from the stage attitudes, then the kinematics of each body. Stage values are
// not exactly unit; all formulas are applied raw.
struct FlatState {
    std::vector<double> eps;
    std::vector<Vec3> vec;
};

inline void closed_loop_rhs(const FlatState& s, const DirectedGraph& g,
                            FlatState& deriv, std::vector<Vec3>* omegas_out = nullptr) {
    const int n = g.size();
    deriv.eps.resize(n);
    deriv.vec.resize(n);
    for (int i = 1; i <= n; ++i) {
        Vec3 omega{};
        for (int j = 1; j <= n; ++j) {
            const double a = g.weight(i, j);
            if (a > 0.0) {
                double ee;
                Vec3 ev;
                mult_error_raw(s.eps[i - 1], s.vec[i - 1], s.eps[j - 1], s.vec[j - 1], ee, ev);
                omega = omega - a * ev;
            }
        }
        if (omegas_out) (*omegas_out)[i - 1] = omega;
        kinematics_raw(s.eps[i - 1], s.vec[i - 1], omega, deriv.eps[i - 1], deriv.vec[i - 1]);
    }
}

inline void axpy(FlatState& out, const FlatState& base, double h, const FlatState& d) {
    const size_t n = base.eps.size();
    out.eps.resize(n);
    out.vec.resize(n);
    for (size_t i = 0; i < n; ++i) {
        out.eps[i] = base.eps[i] + h * d.eps[i];
        out.vec[i] = base.vec[i] + h * d.vec[i];
    }
}

}  // namespace detail

/// One classical fourth-order Runge-Kutta step of the closed loop, with the
/// control re-evaluated at every internal stage. The returned state carries the
/// step-start control values in `omegas`; attitudes are renormalized after the
/// full step when requested.
inline NetworkState step(const NetworkState& state, const DirectedGraph& g, double dt,
                         bool renormalize = true) {
    if (!(dt > 0.0)) throw validation_error("step: dt must be positive");
    if (static_cast<int>(state.attitudes.size()) != g.size())
        throw validation_error("step: state size does not match graph");

    const int n = g.size();
    detail::FlatState y, k1, k2, k3, k4, tmp;
    y.eps.resize(n);
    y.vec.resize(n);
    for (int i = 0; i < n; ++i) {
        y.eps[i] = state.attitudes[i].eps;
        y.vec[i] = state.attitudes[i].vec;
    }

    std::vector<Vec3> omegas(n);
    detail::closed_loop_rhs(y, g, k1, &omegas);
    detail::axpy(tmp, y, 0.5 * dt, k1);
    detail::closed_loop_rhs(tmp, g, k2);
    detail::axpy(tmp, y, 0.5 * dt, k2);
    detail::closed_loop_rhs(tmp, g, k3);
    detail::axpy(tmp, y, dt, k3);
    detail::closed_loop_rhs(tmp, g, k4);

    NetworkState out;
    out.t = state.t + dt;
    out.omegas = std::move(omegas);
    out.attitudes.reserve(n);
    for (int i = 0; i < n; ++i) {
        double e = y.eps[i] +
                   dt / 6.0 * (k1.eps[i] + 2.0 * k2.eps[i] + 2.0 * k3.eps[i] + k4.eps[i]);
        Vec3 v = y.vec[i] +
                 dt / 6.0 * (k1.vec[i] + 2.0 * k2.vec[i] + 2.0 * k3.vec[i] + k4.vec[i]);
        if (!std::isfinite(e) || !is_finite(v))
            throw integration_error("step: non-finite state for agent " + std::to_string(i + 1),
                                    i + 1);
        if (renormalize) {
            const double nn = std::sqrt(e * e + dot(v, v));
            e /= nn;
            v = v * (1.0 / nn);
        }
        UnitQuaternion q;
        q.eps = e;
        q.vec = v;
        out.attitudes.push_back(q);
    }
    return out;
}

/// Run the closed loop from t = 0 to t_final with fixed-step RK4, recording
/// every record_every-th sample plus the first and last. The analysis frame is
/// chosen once from the canonicalized initial attitudes per `opts` and attached
/// to the trace; for graphs without roots the frame falls back to the identity.
inline Trace simulate(const DirectedGraph& g, std::vector<UnitQuaternion> initial,
                      const IntegratorSettings& settings, const SimOptions& opts = {}) {
    settings.validate();
    if (static_cast<int>(initial.size()) != g.size())
        throw validation_error("simulate: initial attitude count does not match graph");

    if (opts.canonicalize_init)
        for (auto& q : initial) q = canonicalize(q);

    Trace trace;
    trace.roots = root_analysis(g);
    trace.quasi_strongly_connected = !trace.roots.roots.empty();
    trace.strongly_connected =
        static_cast<int>(trace.roots.roots.size()) == g.size();

    trace.frame = UnitQuaternion(1.0, {0.0, 0.0, 0.0});
    if (opts.transform_mode == TransformMode::Explicit) {
        trace.frame = opts.explicit_v;
    } else if (opts.transform_mode == TransformMode::Auto &&
               trace.quasi_strongly_connected) {
        bool canonical = true;
        for (const auto& q : initial) {
            const Subspace s = classify_subspace(q);
            canonical = canonical && (s == Subspace::S1 || s == Subspace::S2);
        }
        if (canonical)
            trace.frame = find_transform(initial, trace.roots).v;
    }

    NetworkState state = NetworkState::initial(std::move(initial));
    state.omegas = control_all(state, g);  // controls applied over the first step

    const long n_steps = std::lround(settings.t_final / settings.dt);
    trace.samples.push_back({0.0, state, compute_metrics(state, trace.roots, trace.frame)});
    for (long k = 1; k <= n_steps; ++k) {
        state = step(state, g, settings.dt, settings.renormalize);
        state.t = static_cast<double>(k) * settings.dt;
        if (k % settings.record_every == 0 || k == n_steps)
            trace.samples.push_back(
                {state.t, state, compute_metrics(state, trace.roots, trace.frame)});
    }
    return trace;
}

}  // namespace attsync
