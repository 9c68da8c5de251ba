#pragma once

#include <stdexcept>
#include <vector>

#include "turan/graph.hpp"
#include "turan/solver.hpp"

namespace turan {

struct ClosureTrace {
    Graph initial;
    int k = 0;
    std::vector<Edge> added_edges;  // in addition order
    Graph final;
};

inline bool is_k_closed(const Graph& g, int k) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) >= k) return false;
    return true;
}

// cl_k(G): repeatedly join non-adjacent pairs with degree sum >= k until
// none remains. Scans pairs in lex order; the fixpoint is order-independent.
inline ClosureTrace k_closure(const Graph& g, int k) {
    ClosureTrace trace{g, k, {}, g};
    int n = g.vertex_count();
    bool added = true;
    while (added) {
        added = false;
        for (int u = 0; u < n && !added; ++u) {
            for (int v = u + 1; v < n && !added; ++v) {
                if (!trace.final.has_edge(u, v) &&
                    trace.final.degree(u) + trace.final.degree(v) >= k) {
                    trace.final = trace.final.with_edge(u, v);
                    trace.added_edges.emplace_back(u, v);
                    added = true;
                }
            }
        }
    }
    return trace;
}

// Closure of G under a caller-supplied pair order; used to test confluence.
inline Graph k_closure_ordered(const Graph& g, int k, const std::vector<Edge>& pair_order) {
    Graph h = g;
    bool added = true;
    while (added) {
        added = false;
        for (auto [u, v] : pair_order) {
            if (!h.has_edge(u, v) && h.degree(u) + h.degree(v) >= k) {
                h = h.with_edge(u, v);
                added = true;
            }
        }
    }
    return h;
}

// Checks that adding a qualifying edge does not change L_{n,k}-freeness.
// A false return means the stability lemma failed on this instance, which
// can only happen through a solver defect.
inline bool stability_check_lnk(const Graph& g, int k, int u, int v) {
    if (g.has_edge(u, v)) throw std::invalid_argument("stability_check_lnk: uv already an edge");
    if (g.degree(u) + g.degree(v) < k)
        throw std::invalid_argument("stability_check_lnk: degree sum below k");
    return is_lnk_free(g, k) == is_lnk_free(g.with_edge(u, v), k);
}

// Checks nu(G+uv) = k+1 implies nu(G) = k+1 when d(u)+d(v) >= 2k+1.
inline bool stability_check_matching(const Graph& g, int k, int u, int v) {
    if (g.has_edge(u, v)) throw std::invalid_argument("stability_check_matching: uv already an edge");
    if (g.degree(u) + g.degree(v) < 2 * k + 1)
        throw std::invalid_argument("stability_check_matching: degree sum below 2k+1");
    if (max_matching(g.with_edge(u, v)).value != k + 1) return true;  // vacuous
    return max_matching(g).value == k + 1;
}

}  // namespace turan
