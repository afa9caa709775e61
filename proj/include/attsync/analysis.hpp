#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "attsync/digraph.hpp"
#include "attsync/protocol.hpp"
#include "attsync/transform.hpp"

namespace attsync {

/// Per-sample diagnostic quantities. Scalar-part minima and the energies W1, W2,
/// V are evaluated in the analysis frame (the attitudes this module is handed,
/// which the simulator transforms by the frame quaternion when one is active).
struct Metrics {
    double eps_star_roots = 1.0;  // min scalar over the root set
    double eps_star_all = 1.0;    // min scalar over all nodes
    int k_index = 1;              // argmin over roots, ties broken by lowest id
    double w1 = 0.0;
    double w2 = 0.0;
    double v_energy = 0.0;
    double disagreement = 0.0;
    double max_omega_norm = 0.0;
};

/// Minimum scalar part over a node subset and its argmin, lowest id on ties
/// (the artifact's measurable index selection).
inline std::pair<double, int> min_scalar(const NetworkState& state,
                                         const std::vector<int>& subset) {
    if (subset.empty()) throw validation_error("min_scalar: empty node subset");
    double best = std::numeric_limits<double>::infinity();
    int idx = 0;
    for (int i : subset) {
        if (i < 1 || i > static_cast<int>(state.attitudes.size()))
            throw validation_error("min_scalar: node out of range");
        const double e = state.attitudes[i - 1].eps;
        if (e < best) {
            best = e;
            idx = i;
        }
    }
    return {best, idx};
}

/// ||q_k||^2 + (eps_k - 1)^2 for the minimum-scalar root k. Algebraically equal
/// to 2 - 2*eps_star for unit attitudes; both routes are kept for cross-checking.
inline double energy_w1(const NetworkState& state, const std::vector<int>& roots) {
    const auto [e, k] = min_scalar(state, roots);
    (void)e;
    const UnitQuaternion& q = state.attitudes[k - 1];
    return dot(q.vec, q.vec) + (q.eps - 1.0) * (q.eps - 1.0);
}

/// Sum over roots of ||q_i||^2 + (eps_i - 1)^2.
inline double energy_w2(const NetworkState& state, const std::vector<int>& roots) {
    double s = 0.0;
    for (int i : roots) {
        const UnitQuaternion& q = state.attitudes[i - 1];
        s += dot(q.vec, q.vec) + (q.eps - 1.0) * (q.eps - 1.0);
    }
    return s;
}

/// 2 - 2 * min over all nodes of the scalar part.
inline double energy_v(const NetworkState& state) {
    std::vector<int> all(state.attitudes.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i) + 1;
    return 2.0 - 2.0 * min_scalar(state, all).first;
}

/// Max over pairs of |eps_i - eps_j| + ||q_i - q_j||; zero iff synchronized.
inline double disagreement(const NetworkState& state) {
    const size_t n = state.attitudes.size();
    double worst = 0.0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            const UnitQuaternion& a = state.attitudes[i];
            const UnitQuaternion& b = state.attitudes[j];
            worst = std::max(worst, std::abs(a.eps - b.eps) + norm(a.vec - b.vec));
        }
    return worst;
}

}  // namespace attsync
