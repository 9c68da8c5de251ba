#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "turan/graph.hpp"
#include "turan/linear_forest.hpp"

namespace turan {

inline constexpr int kSolverCap = 20;

// Raised when an exact solver is asked for an instance beyond its
// exponential-feasibility cap. Never silently approximated.
class SizeCapError : public std::runtime_error {
public:
    explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

struct SolveResult {
    int value = 0;
    std::vector<Edge> witness;
};

namespace detail {

inline void require_cap(const Graph& g, const char* op) {
    if (g.vertex_count() > kSolverCap)
        throw SizeCapError(std::string(op) + ": instance has " + std::to_string(g.vertex_count()) +
                           " vertices, exact cap is " + std::to_string(kSolverCap));
}

// Subset DP for minimum path cover (components are paths or isolated
// vertices). State: (covered set, endpoint of the currently open path).
// dp holds the component count; parent/extended record one optimal
// reconstruction path, chosen deterministically by ascending scan order.
struct PathCoverDP {
    int n;
    std::vector<std::uint8_t> dp;        // [mask * n + last], 0xFF = unreachable
    std::vector<std::int8_t> parent;     // previous open endpoint, -1 = path start
    std::vector<std::uint8_t> extended;  // 1 if edge (parent,last) was used

    explicit PathCoverDP(const Graph& g) : n(g.vertex_count()) {
        std::size_t states = (std::size_t{1} << n) * static_cast<std::size_t>(n);
        dp.assign(states, 0xFF);
        parent.assign(states, -1);
        extended.assign(states, 0);
        std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.neighbors(v).bits());

        for (int v = 0; v < n; ++v) dp[(std::size_t{1} << v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] = 1;
        std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
                int last = std::countr_zero(rest);
                std::size_t idx = std::size_t{mask} * static_cast<std::size_t>(n) + static_cast<std::size_t>(last);
                std::uint8_t cur = dp[idx];
                if (cur == 0xFF) continue;
                std::uint32_t outside = full & ~mask;
                for (std::uint32_t cand = outside; cand != 0; cand &= cand - 1) {
                    int v = std::countr_zero(cand);
                    std::uint32_t nmask = mask | (1u << v);
                    std::size_t nidx = std::size_t{nmask} * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
                    if ((adj[static_cast<std::size_t>(last)] >> v) & 1u) {
                        if (cur < dp[nidx]) {
                            dp[nidx] = cur;
                            parent[nidx] = static_cast<std::int8_t>(last);
                            extended[nidx] = 1;
                        }
                    }
                    std::uint8_t closed = static_cast<std::uint8_t>(cur + 1);
                    if (closed < dp[nidx]) {
                        dp[nidx] = closed;
                        parent[nidx] = static_cast<std::int8_t>(last);
                        extended[nidx] = 0;
                    }
                }
            }
        }
    }

    int min_components() const {
        if (n == 0) return 0;
        std::uint32_t full = (n == 32) ? ~0u : (1u << static_cast<unsigned>(n)) - 1;
        int best = n + 1;
        for (int last = 0; last < n; ++last)
            best = std::min(best, static_cast<int>(dp[std::size_t{full} * static_cast<std::size_t>(n) + static_cast<std::size_t>(last)]));
        return best;
    }

    std::vector<Edge> reconstruct() const {
        std::vector<Edge> forest;
        if (n == 0) return forest;
        std::uint32_t full = (1u << static_cast<unsigned>(n)) - 1;
        int best = min_components();
        int last = 0;
        for (int v = 0; v < n; ++v) {
            if (dp[std::size_t{full} * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] == best) {
                last = v;
                break;
            }
        }
        std::uint32_t mask = full;
        while (std::popcount(mask) > 1) {
            std::size_t idx = std::size_t{mask} * static_cast<std::size_t>(n) + static_cast<std::size_t>(last);
            int prev = parent[idx];
            if (extended[idx]) forest.emplace_back(std::min(prev, last), std::max(prev, last));
            mask &= ~(1u << last);
            last = prev;
        }
        std::sort(forest.begin(), forest.end());
        return forest;
    }
};

}  // namespace detail

// Maximum number of edges in a linear forest contained in G, with a
// deterministic witness. value = n - (minimum path-cover size).
inline SolveResult max_linear_forest(const Graph& g) {
    detail::require_cap(g, "max_linear_forest");
    if (g.vertex_count() == 0) return {0, {}};
    detail::PathCoverDP dp(g);
    return {g.vertex_count() - dp.min_components(), dp.reconstruct()};
}

inline bool is_lnk_free(const Graph& g, int k) {
    detail::require_cap(g, "is_lnk_free");
    return max_linear_forest(g).value < k;
}

// nu(G) for every induced vertex subset at once; entry [mask] is the
// matching number of G restricted to mask.
namespace detail {
inline std::vector<std::uint8_t> matching_dp(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.neighbors(v).bits());
    std::vector<std::uint8_t> dp(std::size_t{1} << n, 0);
    std::uint32_t full = (n == 0) ? 0 : (n == 32 ? ~0u : (1u << static_cast<unsigned>(n)) - 1);
    for (std::uint32_t mask = 1; mask <= full && n > 0; ++mask) {
        int v = std::countr_zero(mask);
        std::uint32_t without = mask & (mask - 1);
        std::uint8_t best = dp[without];  // leave v unmatched
        std::uint32_t partners = adj[static_cast<std::size_t>(v)] & without;
        for (std::uint32_t c = partners; c != 0; c &= c - 1) {
            int u = std::countr_zero(c);
            best = std::max(best, static_cast<std::uint8_t>(1 + dp[without & ~(1u << u)]));
        }
        dp[mask] = best;
    }
    return dp;
}
}  // namespace detail

// Maximum matching; witness is the lexicographically smallest maximum
// matching (greedy over edges in lex order against the subset DP table).
inline SolveResult max_matching(const Graph& g) {
    detail::require_cap(g, "max_matching");
    int n = g.vertex_count();
    auto dp = detail::matching_dp(g);
    std::uint32_t mask = (n == 0) ? 0 : (n == 32 ? ~0u : (1u << static_cast<unsigned>(n)) - 1);
    SolveResult res{dp[mask], {}};
    for (auto [u, v] : g.edges()) {
        if (!((mask >> u) & 1u) || !((mask >> v) & 1u)) continue;
        std::uint32_t rest = mask & ~(1u << u) & ~(1u << v);
        if (1 + dp[rest] == dp[mask]) {
            res.witness.emplace_back(u, v);
            mask = rest;
        }
    }
    return res;
}

inline bool is_hamiltonian(const Graph& g) {
    detail::require_cap(g, "is_hamiltonian");
    int n = g.vertex_count();
    if (n < 3) return false;  // C_n needs n >= 3
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.neighbors(v).bits());
    // Reach: cycles through vertex 0; state (visited mask, last).
    std::uint32_t full = (1u << static_cast<unsigned>(n)) - 1;
    std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);  // bit v: (mask,v) reachable
    reach[1] = 1;
    for (std::uint32_t mask = 1; mask <= full; mask += 2) {  // vertex 0 always visited
        std::uint32_t lasts = reach[mask];
        if (lasts == 0) continue;
        for (std::uint32_t c = lasts; c != 0; c &= c - 1) {
            int last = std::countr_zero(c);
            std::uint32_t nexts = adj[static_cast<std::size_t>(last)] & ~mask;
            for (std::uint32_t d = nexts; d != 0; d &= d - 1) {
                int v = std::countr_zero(d);
                reach[mask | (1u << v)] |= 1u << v;
            }
        }
    }
    return (reach[full] & adj[0]) != 0;
}

// h(G): minimum edges whose addition makes G Hamiltonian. Zero iff already
// Hamiltonian; otherwise n - L(G), closing the path components of a maximum
// spanning linear forest into a cycle.
inline int hamiltonian_completion(const Graph& g) {
    detail::require_cap(g, "hamiltonian_completion");
    if (is_hamiltonian(g)) return 0;
    return g.vertex_count() - max_linear_forest(g).value;
}

// Constructive side of the degree-sum augmentation lemma: given a linear
// forest F with k-1 edges and endpoints u, v of different components with
// d(u)+d(v) >= k, produce a k-edge linear forest in G.
inline LinearForest augment_linear_forest(const Graph& g, const LinearForest& f, int u, int v) {
    detail::require_cap(g, "augment_linear_forest");
    int n = g.vertex_count();
    if (f.host_n != n) throw std::invalid_argument("augment_linear_forest: host size mismatch");
    if (!is_linear_forest(n, f.edges)) throw std::invalid_argument("augment_linear_forest: F is not a linear forest");
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    detail::UnionFind uf(n);
    for (auto [a, b] : f.edges) {
        if (!g.has_edge(a, b)) throw std::invalid_argument("augment_linear_forest: F is not a subgraph of G");
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
        uf.unite(a, b);
    }
    auto is_endpoint = [&](int x) { return deg[static_cast<std::size_t>(x)] <= 1; };
    if (u < 0 || u >= n || v < 0 || v >= n || !is_endpoint(u) || !is_endpoint(v))
        throw std::invalid_argument("augment_linear_forest: u, v must be path endpoints of F");
    if (uf.find(u) == uf.find(v))
        throw std::invalid_argument("augment_linear_forest: u and v lie in the same component of F");
    int k = f.edge_count() + 1;
    if (g.degree(u) + g.degree(v) < k)
        throw std::invalid_argument("augment_linear_forest: degree sum below k");

    if (g.has_edge(u, v)) {
        auto edges = f.edges;
        edges.emplace_back(std::min(u, v), std::max(u, v));
        return make_linear_forest(n, std::move(edges));
    }
    // Fall back to an exact re-solve; the lemma guarantees a k-edge forest.
    SolveResult best = max_linear_forest(g);
    if (best.value < k)
        throw std::logic_error("augment_linear_forest: guaranteed forest missing (solver defect)");
    auto edges = best.witness;
    while (static_cast<int>(edges.size()) > k) edges.pop_back();
    return make_linear_forest(n, std::move(edges));
}

}  // namespace turan
