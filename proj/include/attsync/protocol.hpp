#pragma once

#include <vector>

#include "attsync/digraph.hpp"
#include "attsync/quaternion.hpp"

namespace attsync {

/// Snapshot of the whole network at one instant. `omegas` holds the last applied
/// control inputs (zero before the first step).
struct NetworkState {
    double t = 0.0;
    std::vector<UnitQuaternion> attitudes;
    std::vector<Vec3> omegas;

    static NetworkState initial(std::vector<UnitQuaternion> attitudes) {
        NetworkState s;
        s.omegas.assign(attitudes.size(), Vec3{});
        s.attitudes = std::move(attitudes);
        return s;
    }
};

/// Synchronization control law: omega_i = -sum_{j in N_i} a_ij * q_{i,j}.
inline Vec3 control_input(int i, const NetworkState& state, const DirectedGraph& g) {
    if (i < 1 || i > g.size())
        throw validation_error("control_input: node out of range");
    if (static_cast<int>(state.attitudes.size()) != g.size())
        throw validation_error("control_input: state size does not match graph");
    Vec3 omega{};
    const UnitQuaternion& qi = state.attitudes[i - 1];
    for (int j = 1; j <= g.size(); ++j) {
        const double a = g.weight(i, j);
        if (a > 0.0)
            omega = omega - a * mult_error(qi, state.attitudes[j - 1]).vec;
    }
    return omega;
}

inline std::vector<Vec3> control_all(const NetworkState& state, const DirectedGraph& g) {
    std::vector<Vec3> out(g.size());
    for (int i = 1; i <= g.size(); ++i) out[i - 1] = control_input(i, state, g);
    return out;
}

}  // namespace attsync
