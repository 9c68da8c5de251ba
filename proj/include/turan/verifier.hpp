#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "turan/closure.hpp"
#include "turan/formulas.hpp"
#include "turan/graph.hpp"
#include "turan/solver.hpp"

namespace turan {

inline constexpr int kSweepCap = 7;  // full 2^C(n,2) labeled sweep

namespace detail {

// Edge bit order for enumeration masks: upper triangle column by column,
// bit index of (u,v), u < v, is v(v-1)/2 + u. Cliques on the lowest labels
// occupy the lowest bits, so good pruning bounds appear early.
struct EdgeTable {
    int n;
    int m;
    std::array<std::uint8_t, 21> us{}, vs{};

    explicit EdgeTable(int n_) : n(n_), m(n_ * (n_ - 1) / 2) {
        int idx = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++idx) {
                us[static_cast<std::size_t>(idx)] = static_cast<std::uint8_t>(u);
                vs[static_cast<std::size_t>(idx)] = static_cast<std::uint8_t>(v);
            }
    }

    void fill_adj(std::uint32_t mask, std::uint8_t* adj) const {
        for (int v = 0; v < n; ++v) adj[v] = 0;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            int i = std::countr_zero(rest);
            adj[us[static_cast<std::size_t>(i)]] |= static_cast<std::uint8_t>(1u << vs[static_cast<std::size_t>(i)]);
            adj[vs[static_cast<std::size_t>(i)]] |= static_cast<std::uint8_t>(1u << us[static_cast<std::size_t>(i)]);
        }
    }

    Graph to_graph(std::uint32_t mask) const {
        std::vector<Edge> edges;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            int i = std::countr_zero(rest);
            edges.emplace_back(us[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(i)]);
        }
        return Graph::from_edge_list(n, edges);
    }
};

// Exact L(G) for n <= 7: subset DP, stack-allocated.
inline int max_lf_small(const std::uint8_t* adj, int n) {
    if (n == 0) return 0;
    std::uint8_t dp[128][7];
    std::uint32_t full = (1u << static_cast<unsigned>(n)) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask)
        for (int last = 0; last < n; ++last) dp[mask][last] = 0xFF;
    for (int v = 0; v < n; ++v) dp[1u << v][v] = 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            int last = std::countr_zero(rest);
            std::uint8_t cur = dp[mask][last];
            if (cur == 0xFF) continue;
            for (std::uint32_t out = full & ~mask; out != 0; out &= out - 1) {
                int v = std::countr_zero(out);
                std::uint32_t nm = mask | (1u << v);
                std::uint8_t ext = ((adj[last] >> v) & 1u) ? cur : static_cast<std::uint8_t>(cur + 1);
                if (ext < dp[nm][v]) dp[nm][v] = ext;
            }
        }
    }
    int best = n;
    for (int last = 0; last < n; ++last) best = std::min(best, static_cast<int>(dp[full][last]));
    return n - best;
}

// Exact nu(G) for n <= 7.
inline int nu_small(const std::uint8_t* adj, int n) {
    if (n == 0) return 0;
    std::uint8_t dp[128];
    std::uint32_t full = (1u << static_cast<unsigned>(n)) - 1;
    dp[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int v = std::countr_zero(mask);
        std::uint32_t without = mask & (mask - 1);
        std::uint8_t best = dp[without];
        for (std::uint32_t c = static_cast<std::uint32_t>(adj[v]) & without; c != 0; c &= c - 1)
            best = std::max(best, static_cast<std::uint8_t>(1 + dp[without & ~(1u << std::countr_zero(c))]));
        dp[mask] = best;
    }
    return dp[full];
}

// Greedy lower bound on L(G): scan edges in bit order, keep degrees <= 2
// and acyclicity.
inline int greedy_lf_bound(std::uint32_t mask, const EdgeTable& et) {
    std::uint8_t deg[7] = {};
    std::uint8_t parent[7] = {0, 1, 2, 3, 4, 5, 6};
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };
    int got = 0;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
        int i = std::countr_zero(rest);
        int u = et.us[static_cast<std::size_t>(i)], v = et.vs[static_cast<std::size_t>(i)];
        if (deg[u] >= 2 || deg[v] >= 2) continue;
        int ru = find(u), rv = find(v);
        if (ru == rv) continue;
        parent[ru] = static_cast<std::uint8_t>(rv);
        ++deg[u];
        ++deg[v];
        ++got;
    }
    return got;
}

inline int greedy_matching_bound(std::uint32_t mask, const EdgeTable& et) {
    std::uint8_t used = 0;
    int got = 0;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
        int i = std::countr_zero(rest);
        int u = et.us[static_cast<std::size_t>(i)], v = et.vs[static_cast<std::size_t>(i)];
        if ((used >> u) & 1u || (used >> v) & 1u) continue;
        used |= static_cast<std::uint8_t>((1u << u) | (1u << v));
        ++got;
    }
    return got;
}

struct BestEntry {
    int value = -1;
    std::uint32_t mask = 0;
};

}  // namespace detail

struct VerifyRow {
    int n = 0;
    int k = 0;
    std::uint64_t formula_value = 0;
    std::uint64_t brute_value = 0;
    bool agree = false;
    std::string witness;  // graph6 (graphs) or triple list (hypergraphs)
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    double elapsed_seconds = 0.0;
    std::uint64_t graphs_scanned = 0;

    bool all_agree() const {
        return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.agree; });
    }
};

inline void write_tsv(std::ostream& out, const VerifyReport& report) {
    out << "n\tk\tformula\tbrute\tagree\twitness_g6\n";
    for (const auto& r : report.rows)
        out << r.n << '\t' << r.k << '\t' << r.formula_value << '\t' << r.brute_value << '\t'
            << (r.agree ? 1 : 0) << '\t' << r.witness << '\n';
}

// Maximum edge count over all labeled graphs on n vertices satisfying the
// predicate; witness is the lexicographically smallest edge mask attaining
// it (masks ascending, strict improvement).
inline std::pair<int, Graph> brute_ex(int n, const std::function<bool(const Graph&)>& free_predicate) {
    if (n < 0 || n > kSweepCap) throw SizeCapError("brute_ex: full labeled sweep capped at n = 7");
    detail::EdgeTable et(n);
    std::uint64_t total = std::uint64_t{1} << et.m;
    int best = -1;
    std::uint32_t best_mask = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        int e = std::popcount(mask);
        if (e <= best) continue;
        Graph g = et.to_graph(static_cast<std::uint32_t>(mask));
        if (free_predicate(g)) {
            best = e;
            best_mask = static_cast<std::uint32_t>(mask);
        }
    }
    if (best < 0) throw std::invalid_argument("brute_ex: predicate rejects every graph, including E_n");
    return {best, et.to_graph(best_mask)};
}

namespace detail {

// One full labeled sweep at a fixed n, shared by the theorem and the
// matching verifiers. For each graph the relevant statistic (L or nu) is
// computed at most once; freeness for parameter k is `stat + off <= k`.
// Returns, for each k in [k_lo, k_hi], the max edge count and lex-first
// witness mask over free graphs.
enum class SweepStat { linear_forest, matching };

inline std::vector<BestEntry> sweep(int n, int k_lo, int k_hi, SweepStat stat, int jobs) {
    EdgeTable et(n);
    int off = (stat == SweepStat::linear_forest) ? 1 : 0;
    std::uint64_t total = std::uint64_t{1} << et.m;
    int nk = k_hi - k_lo + 1;
    if (jobs < 1) jobs = 1;

    std::vector<std::atomic<int>> shared(static_cast<std::size_t>(nk));
    for (auto& s : shared) s.store(-1, std::memory_order_relaxed);

    std::vector<std::vector<BestEntry>> locals(static_cast<std::size_t>(jobs),
                                               std::vector<BestEntry>(static_cast<std::size_t>(nk)));

    auto work = [&](int job) {
        std::uint64_t lo = total * static_cast<std::uint64_t>(job) / static_cast<std::uint64_t>(jobs);
        std::uint64_t hi = total * static_cast<std::uint64_t>(job + 1) / static_cast<std::uint64_t>(jobs);
        auto& best = locals[static_cast<std::size_t>(job)];
        std::uint8_t adj[7];
        for (std::uint64_t mask64 = lo; mask64 < hi; ++mask64) {
            std::uint32_t mask = static_cast<std::uint32_t>(mask64);
            int e = std::popcount(mask);
            // Cheap lower bound on the statistic rules out most exact calls.
            int lb = -1;
            bool need = false;
            for (int i = 0; i < nk; ++i) {
                if (e <= best[static_cast<std::size_t>(i)].value) continue;
                if (e < shared[static_cast<std::size_t>(i)].load(std::memory_order_relaxed)) continue;
                if (lb < 0)
                    lb = (stat == SweepStat::linear_forest) ? greedy_lf_bound(mask, et)
                                                            : greedy_matching_bound(mask, et);
                if (lb + off <= k_lo + i) {
                    need = true;
                    break;
                }
            }
            if (!need) continue;
            et.fill_adj(mask, adj);
            int s = (stat == SweepStat::linear_forest) ? max_lf_small(adj, n) : nu_small(adj, n);
            for (int i = 0; i < nk; ++i) {
                int k = k_lo + i;
                if (s + off <= k && e > best[static_cast<std::size_t>(i)].value) {
                    best[static_cast<std::size_t>(i)] = {e, mask};
                    int cur = shared[static_cast<std::size_t>(i)].load(std::memory_order_relaxed);
                    while (cur < e &&
                           !shared[static_cast<std::size_t>(i)].compare_exchange_weak(cur, e, std::memory_order_relaxed)) {
                    }
                }
            }
        }
    };

    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j) threads.emplace_back(work, j);
        for (auto& t : threads) t.join();
    }

    // Merge: larger value wins; ties go to the smaller mask. Workers own
    // ascending disjoint ranges, so the result is independent of jobs.
    std::vector<BestEntry> merged(static_cast<std::size_t>(nk));
    merged = locals[0];
    for (int j = 1; j < jobs; ++j)
        for (int i = 0; i < nk; ++i) {
            const auto& cand = locals[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            auto& cur = merged[static_cast<std::size_t>(i)];
            if (cand.value > cur.value || (cand.value == cur.value && cand.mask < cur.mask)) cur = cand;
        }
    return merged;
}

}  // namespace detail

inline VerifyReport verify_theorem_13(int n_max, int jobs = 1) {
    if (n_max > kSweepCap) throw SizeCapError("verify_theorem_13: sweep capped at n = 7");
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport report;
    for (int n = 2; n <= n_max; ++n) {
        detail::EdgeTable et(n);
        report.graphs_scanned += std::uint64_t{1} << et.m;
        auto best = detail::sweep(n, 1, n - 1, detail::SweepStat::linear_forest, jobs);
        for (int k = 1; k <= n - 1; ++k) {
            const auto& b = best[static_cast<std::size_t>(k - 1)];
            std::uint64_t formula = ex_linear_forest(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)).value;
            VerifyRow row{n, k, formula, static_cast<std::uint64_t>(b.value),
                          formula == static_cast<std::uint64_t>(b.value), emit_graph6(et.to_graph(b.mask))};
            report.rows.push_back(std::move(row));
        }
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

inline VerifyReport verify_erdos_gallai(int n_max, int jobs = 1, int k_max = 3) {
    if (n_max > kSweepCap) throw SizeCapError("verify_erdos_gallai: sweep capped at n = 7");
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport report;
    for (int n = 2; n <= n_max; ++n) {
        detail::EdgeTable et(n);
        report.graphs_scanned += std::uint64_t{1} << et.m;
        // The Turan equality needs M_{k+1} to fit: n >= 2k+1.
        int hi = std::min(k_max, (n - 1) / 2);
        auto best = detail::sweep(n, 0, hi, detail::SweepStat::matching, jobs);
        for (int k = 0; k <= hi; ++k) {
            const auto& b = best[static_cast<std::size_t>(k)];
            std::uint64_t formula = ex_matching(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)).value;
            VerifyRow row{n, k, formula, static_cast<std::uint64_t>(b.value),
                          formula == static_cast<std::uint64_t>(b.value), emit_graph6(et.to_graph(b.mask))};
            report.rows.push_back(std::move(row));
        }
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

// --- structural audit of a k-closed L_{n,k}-free graph (proof skeleton) ---

struct AuditRecord {
    VertexSet high_degree_set;  // C: degree >= ceil(k/2)
    int c_size = 0;
    bool c_is_clique = false;
    VertexSet maximal_clique;  // S: greedy extension of C in vertex order
    int s = 0;
    bool s_bound_ok = false;       // s <= k
    bool degree_bound_ok = false;  // d(x) <= min(ceil(k/2)-1, k-s) outside S
    int case_tag = 0;              // 1: s <= ceil((k-1)/2); 2: otherwise
    std::int64_t bound_value = 0;  // case bound on e(G), floored
    bool edge_bound_ok = false;

    bool all_ok() const { return c_is_clique && s_bound_ok && degree_bound_ok && edge_bound_ok; }
};

inline AuditRecord audit_closed_graph(const Graph& g, int k) {
    if (!is_k_closed(g, k)) throw std::invalid_argument("audit_closed_graph: graph is not k-closed");
    if (!is_lnk_free(g, k)) throw std::invalid_argument("audit_closed_graph: graph is not L_{n,k}-free");
    int n = g.vertex_count();
    AuditRecord rec;
    int half_up = (k + 1) / 2;  // ceil(k/2)

    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= half_up) rec.high_degree_set.add(v);
    rec.c_size = rec.high_degree_set.size();

    rec.c_is_clique = true;
    auto members = rec.high_degree_set.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!g.has_edge(members[i], members[j])) rec.c_is_clique = false;

    rec.maximal_clique = rec.high_degree_set;
    for (int v = 0; v < n; ++v) {
        if (rec.maximal_clique.contains(v)) continue;
        bool all_adj = true;
        rec.maximal_clique.for_each([&](int u) {
            if (!g.has_edge(u, v)) all_adj = false;
        });
        if (all_adj) rec.maximal_clique.add(v);
    }
    rec.s = rec.maximal_clique.size();
    rec.s_bound_ok = rec.s <= k;

    int deg_cap = std::min(half_up - 1, k - rec.s);
    rec.degree_bound_ok = true;
    for (int x = 0; x < n; ++x) {
        if (rec.maximal_clique.contains(x)) continue;
        if (g.degree(x) > deg_cap) rec.degree_bound_ok = false;
    }

    std::int64_t s64 = rec.s, n64 = n;
    if (rec.s * 2 <= k) {  // s <= ceil((k-1)/2)
        rec.case_tag = 1;
        std::int64_t twice = s64 * (s64 - 1) + (s64 - 2 + half_up) * (n64 - s64);
        rec.bound_value = twice / 2;
    } else {
        rec.case_tag = 2;
        rec.bound_value = s64 * (s64 - 1) / 2 + static_cast<std::int64_t>(k - rec.s) * (n64 - s64);
    }
    rec.edge_bound_ok = g.edge_count() <= rec.bound_value;
    return rec;
}

}  // namespace turan
