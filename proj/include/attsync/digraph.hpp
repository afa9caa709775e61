#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "attsync/errors.hpp"

namespace attsync {

/// Directed edge: information flows from `from` to `to`, i.e. (j, i) with j = from.
struct Edge {
    int from = 0;
    int to = 0;
    double weight = 0.0;
};

/// Weighted directed communication topology. Node ids are 1-based in the public
/// API (matching the 1..N labeling of the configs); storage is 0-based.
/// Immutable after construction.
class DirectedGraph {
public:
    static DirectedGraph build(int n, const std::vector<Edge>& edges) {
        if (n < 1) throw validation_error("graph: node count must be positive");
        DirectedGraph g(n);
        for (const Edge& e : edges) {
            const std::string tag = "edge (" + std::to_string(e.from) + "," +
                                    std::to_string(e.to) + ")";
            if (e.from < 1 || e.from > n || e.to < 1 || e.to > n)
                throw validation_error("graph: " + tag + " references node out of range 1.." +
                                       std::to_string(n));
            if (e.from == e.to)
                throw validation_error("graph: " + tag + " is a self-loop");
            if (!(e.weight > 0.0) || !std::isfinite(e.weight))
                throw validation_error("graph: " + tag + " has non-positive weight");
            double& slot = g.w_[static_cast<size_t>(e.to - 1) * n + (e.from - 1)];
            if (slot != 0.0)
                throw validation_error("graph: duplicate " + tag);
            slot = e.weight;
        }
        return g;
    }

    int size() const { return n_; }

    /// Adjacency entry a_ij: receiving weight at node i for neighbor j (1-based).
    double weight(int i, int j) const {
        return w_[static_cast<size_t>(i - 1) * n_ + (j - 1)];
    }

    /// In-neighbor degree d_i = sum_j a_ij.
    double degree(int i) const {
        double d = 0.0;
        for (int j = 1; j <= n_; ++j) d += weight(i, j);
        return d;
    }

    /// In-neighbors of i: nodes j with a_ij > 0, ascending.
    std::vector<int> neighbors(int i) const {
        std::vector<int> out;
        for (int j = 1; j <= n_; ++j)
            if (weight(i, j) > 0.0) out.push_back(j);
        return out;
    }

private:
    explicit DirectedGraph(int n) : n_(n), w_(static_cast<size_t>(n) * n, 0.0) {}

    int n_;
    std::vector<double> w_;
};

struct DegreeLaplacian {
    std::vector<double> degree;                  // diagonal of D
    std::vector<std::vector<double>> laplacian;  // L = D - A
};

inline DegreeLaplacian degree_and_laplacian(const DirectedGraph& g) {
    const int n = g.size();
    DegreeLaplacian out;
    out.degree.resize(n);
    out.laplacian.assign(n, std::vector<double>(n, 0.0));
    for (int i = 1; i <= n; ++i) {
        out.degree[i - 1] = g.degree(i);
        for (int j = 1; j <= n; ++j)
            out.laplacian[i - 1][j - 1] = (i == j ? g.degree(i) : 0.0) - g.weight(i, j);
    }
    return out;
}

/// Nodes reachable from i along the direction of information flow (i itself included).
/// An edge (j, i) carries information j -> i, so from node k we can step to any m
/// with a_mk > 0.
inline std::vector<int> reachable_set(const DirectedGraph& g, int i) {
    const int n = g.size();
    if (i < 1 || i > n) throw validation_error("reachable_set: node out of range");
    std::vector<char> seen(n + 1, 0);
    std::queue<int> q;
    seen[i] = 1;
    q.push(i);
    while (!q.empty()) {
        const int k = q.front();
        q.pop();
        for (int m = 1; m <= n; ++m) {
            if (!seen[m] && g.weight(m, k) > 0.0) {
                seen[m] = 1;
                q.push(m);
            }
        }
    }
    std::vector<int> out;
    for (int m = 1; m <= n; ++m)
        if (seen[m]) out.push_back(m);
    return out;
}

/// Root set, non-root set, and the induced root subgraph. The subgraph relabels
/// root k as its 1-based position in `roots` (ascending).
struct RootAnalysis {
    std::vector<int> roots;
    std::vector<int> non_roots;
    std::vector<Edge> root_edges;  // in subgraph labels

    bool is_root(int i) const {
        return std::binary_search(roots.begin(), roots.end(), i);
    }
};

inline RootAnalysis root_analysis(const DirectedGraph& g) {
    const int n = g.size();
    RootAnalysis out;
    for (int i = 1; i <= n; ++i) {
        if (static_cast<int>(reachable_set(g, i).size()) == n)
            out.roots.push_back(i);
        else
            out.non_roots.push_back(i);
    }
    std::vector<int> label(n + 1, 0);
    for (size_t k = 0; k < out.roots.size(); ++k) label[out.roots[k]] = static_cast<int>(k) + 1;
    for (int i : out.roots)
        for (int j : out.roots)
            if (g.weight(i, j) > 0.0)
                out.root_edges.push_back({label[j], label[i], g.weight(i, j)});
    return out;
}

inline DirectedGraph root_subgraph(const RootAnalysis& ra) {
    return DirectedGraph::build(static_cast<int>(ra.roots.size()), ra.root_edges);
}

inline bool is_quasi_strongly_connected(const DirectedGraph& g) {
    for (int i = 1; i <= g.size(); ++i)
        if (static_cast<int>(reachable_set(g, i).size()) == g.size()) return true;
    return false;
}

inline bool is_strongly_connected(const DirectedGraph& g) {
    for (int i = 1; i <= g.size(); ++i)
        if (static_cast<int>(reachable_set(g, i).size()) != g.size()) return false;
    return true;
}

}  // namespace attsync
