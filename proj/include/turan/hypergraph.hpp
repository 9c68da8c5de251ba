#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "turan/formulas.hpp"
#include "turan/solver.hpp"
#include "turan/verifier.hpp"

namespace turan {

using Triple = std::array<int, 3>;  // always sorted ascending

// 3-uniform hypergraph on at most 20 vertices.
struct Hypergraph3 {
    int n = 0;
    std::vector<Triple> edges;  // sorted, duplicate-free

    static Hypergraph3 from_triples(int n, std::vector<Triple> triples) {
        if (n < 0 || n > 20) throw std::invalid_argument("Hypergraph3: vertex count out of range [0,20]");
        for (auto& t : triples) {
            std::sort(t.begin(), t.end());
            if (t[0] == t[1] || t[1] == t[2]) throw std::invalid_argument("Hypergraph3: edge with repeated vertex");
            if (t[0] < 0 || t[2] >= n) throw std::invalid_argument("Hypergraph3: edge endpoint out of range");
        }
        std::sort(triples.begin(), triples.end());
        triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
        return Hypergraph3{n, std::move(triples)};
    }

    static Hypergraph3 complete(int n) {
        std::vector<Triple> triples;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) triples.push_back({a, b, c});
        return from_triples(n, std::move(triples));
    }

    int edge_count() const { return static_cast<int>(edges.size()); }
};

// Text format: "n m" then m lines "a b c" sorted ascending within line.
inline void emit_hypergraph(std::ostream& out, const Hypergraph3& h) {
    out << h.n << ' ' << h.edges.size() << '\n';
    for (const auto& t : h.edges) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

inline Hypergraph3 parse_hypergraph(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("hypergraph: missing header \"n m\"");
    std::vector<Triple> triples;
    for (int i = 0; i < m; ++i) {
        Triple t;
        if (!(in >> t[0] >> t[1] >> t[2])) throw std::invalid_argument("hypergraph: truncated edge lines");
        triples.push_back(t);
    }
    return Hypergraph3::from_triples(n, std::move(triples));
}

namespace detail {

// Colex index of a sorted triple: C(c,3) + C(b,2) + a.
inline int triple_index(int a, int b, int c) {
    return c * (c - 1) * (c - 2) / 6 + b * (b - 1) / 2 + a;
}

inline int triple_count(int n) { return n * (n - 1) * (n - 2) / 6; }

inline std::vector<Triple> triples_in_colex(int n) {
    std::vector<Triple> out(static_cast<std::size_t>(triple_count(n)));
    for (int c = 2; c < n; ++c)
        for (int b = 1; b < c; ++b)
            for (int a = 0; a < b; ++a) out[static_cast<std::size_t>(triple_index(a, b, c))] = {a, b, c};
    return out;
}

// DFS over systems of vertex-disjoint tight paths. `emit` sees every
// reachable state with its edge mask and count; returning true stops the
// search. Paths are built from an ordered seed pair, so both directions of
// every tight path are generated.
template <typename Emit>
bool tight_forest_dfs(int n, const std::vector<char>& has_edge, std::uint32_t used, int prev, int last,
                      std::uint32_t edge_mask, int edges, int target, Emit&& emit) {
    if (emit(edge_mask, edges)) return true;
    int remaining = n - std::popcount(used);
    int potential = (prev >= 0) ? remaining : std::max(remaining - 2, 0);
    if (edges + potential < target) return false;
    if (prev >= 0) {
        // Extend the open path.
        for (int c = 0; c < n; ++c) {
            if ((used >> c) & 1u) continue;
            int x = prev, y = last, z = c;
            if (x > y) std::swap(x, y);
            if (y > z) std::swap(y, z);
            if (x > y) std::swap(x, y);
            int idx = triple_index(x, y, z);
            if (!has_edge[static_cast<std::size_t>(idx)]) continue;
            if (tight_forest_dfs(n, has_edge, used | (1u << c), last, c,
                                 edge_mask | (std::uint32_t{1} << idx), edges + 1, target, emit))
                return true;
        }
        // Close it and possibly start another.
        return tight_forest_dfs(n, has_edge, used, -1, -1, edge_mask, edges, target, emit);
    }
    // Seed a new path with an ordered pair of unused vertices.
    for (int a = 0; a < n; ++a) {
        if ((used >> a) & 1u) continue;
        for (int b = 0; b < n; ++b) {
            if (b == a || ((used >> b) & 1u)) continue;
            if (tight_forest_dfs(n, has_edge, used | (1u << a) | (1u << b), a, b, edge_mask, edges, target,
                                 emit))
                return true;
        }
    }
    return false;
}

inline std::vector<char> edge_membership(const Hypergraph3& h) {
    std::vector<char> has(static_cast<std::size_t>(triple_count(h.n)), 0);
    for (const auto& t : h.edges) has[static_cast<std::size_t>(triple_index(t[0], t[1], t[2]))] = 1;
    return has;
}

}  // namespace detail

// True iff H contains vertex-disjoint tight paths with at least k edges in
// total (isolated vertices pad the forest to order n for free).
inline bool has_tight_linear_forest(const Hypergraph3& h, int k) {
    if (h.n > 10) throw SizeCapError("has_tight_linear_forest: exact search capped at n = 10");
    if (k <= 0) return true;
    auto has = detail::edge_membership(h);
    return detail::tight_forest_dfs(h.n, has, 0, -1, -1, 0, 0, k,
                                    [&](std::uint32_t, int edges) { return edges >= k; });
}

// All distinct edge sets of tight linear forests with exactly k edges on n
// vertices, as triple masks. A forest with >= k edges always contains one
// with exactly k (trim path ends), so freeness reduces to these.
inline std::vector<std::uint32_t> tight_forest_masks(int n, int k) {
    if (detail::triple_count(n) > 32) throw SizeCapError("tight_forest_masks: needs C(n,3) <= 32");
    Hypergraph3 complete = Hypergraph3::complete(n);
    auto has = detail::edge_membership(complete);
    std::unordered_set<std::uint32_t> masks;
    detail::tight_forest_dfs(n, has, 0, -1, -1, 0, 0, k, [&](std::uint32_t mask, int edges) {
        if (edges == k) masks.insert(mask);
        return false;
    });
    std::vector<std::uint32_t> out(masks.begin(), masks.end());
    std::sort(out.begin(), out.end());
    return out;
}

// Maximum edge count among 3-graphs on n vertices with no tight linear
// forest of >= k edges; full 2^C(n,3) sweep. Witness is the
// lexicographically smallest maximizing edge mask.
inline std::pair<int, Hypergraph3> brute_ex_tight(int n, int k) {
    if (n < 3 || detail::triple_count(n) > 20)
        throw SizeCapError("brute_ex_tight: full sweep needs C(n,3) <= 20 (n <= 6)");
    if (k < 4 || (k - 1) % 3 != 0)
        throw std::invalid_argument("brute_ex_tight: need k = 3m + 1 with m >= 1");
    auto forbidden = tight_forest_masks(n, k);
    int t = detail::triple_count(n);
    std::uint32_t total_mask = (t == 32) ? ~0u : (1u << static_cast<unsigned>(t)) - 1;
    int best = -1;
    std::uint32_t best_mask = 0;
    for (std::uint64_t h = 0; h <= total_mask; ++h) {
        std::uint32_t hm = static_cast<std::uint32_t>(h);
        int e = std::popcount(hm);
        if (e <= best) continue;
        bool free = true;
        for (std::uint32_t fm : forbidden) {
            if ((fm & hm) == fm) {
                free = false;
                break;
            }
        }
        if (free) {
            best = e;
            best_mask = hm;
        }
    }
    auto all = detail::triples_in_colex(n);
    std::vector<Triple> witness_edges;
    for (std::uint32_t rest = best_mask; rest != 0; rest &= rest - 1)
        witness_edges.push_back(all[static_cast<std::size_t>(std::countr_zero(rest))]);
    return {best, Hypergraph3::from_triples(n, std::move(witness_edges))};
}

// One conjecture row: exhaustive value vs. the closed-form prediction. A
// disagreement would be a counterexample and carries the witness.
inline VerifyRow verify_conjecture(int n, int k) {
    auto [brute, witness] = brute_ex_tight(n, k);
    std::uint64_t formula =
        ex_conjecture_r(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k), 3).value;
    std::string wtext;
    for (const auto& t : witness.edges) {
        if (!wtext.empty()) wtext.push_back(';');
        wtext += std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]);
    }
    return VerifyRow{n, k, formula, static_cast<std::uint64_t>(brute),
                     formula == static_cast<std::uint64_t>(brute), std::move(wtext)};
}

}  // namespace turan
