#pragma once

#include <optional>
#include <stdexcept>

#include "turan/formulas.hpp"
#include "turan/graph.hpp"
#include "turan/solver.hpp"

namespace turan {

enum class Variant { clique, join };
enum class Family { lnk, matching };

// Extremal families for ex(n; L_{n,k}). Labeling: clique/dominating
// vertices first, then the K_2 pair (even join case), then the
// independent set.
inline Graph extremal_lnk(int n, int k, Variant variant) {
    if (k < 1 || k > n - 1) throw std::invalid_argument("extremal_lnk: need 1 <= k <= n-1");
    if (n > kMaxVertices) throw std::invalid_argument("extremal_lnk: n exceeds vertex cap");
    if (variant == Variant::clique) return disjoint_union(Graph::complete(k), Graph::empty(n - k));
    if (k % 2 == 1) {
        int half = (k - 1) / 2;
        return join(Graph::complete(half), Graph::empty(n - half));
    }
    int half = k / 2 - 1;
    return join(Graph::complete(half), disjoint_union(Graph::complete(2), Graph::empty(n - half - 2)));
}

// Extremal families for ex(n; M_{k+1}).
inline Graph extremal_matching(int n, int k, Variant variant) {
    if (k < 0 || n < 1) throw std::invalid_argument("extremal_matching: bad parameters");
    if (n > kMaxVertices) throw std::invalid_argument("extremal_matching: n exceeds vertex cap");
    if (variant == Variant::clique) {
        if (n < 2 * k + 1) throw std::invalid_argument("extremal_matching: clique variant needs n >= 2k+1");
        return disjoint_union(Graph::complete(2 * k + 1), Graph::empty(n - 2 * k - 1));
    }
    if (n < k) throw std::invalid_argument("extremal_matching: join variant needs n >= k");
    return join(Graph::complete(k), Graph::empty(n - k));
}

enum class FreenessVerdict { exact_free, exact_not_free, structural_only };

struct Certificate {
    int edge_count = 0;
    // The formula arm (clique or join) whose value equals the edge count,
    // when one does; otherwise unset.
    std::optional<std::uint64_t> matched_branch_value;
    FreenessVerdict verdict = FreenessVerdict::structural_only;
};

inline Certificate certify(const Graph& g, int k, Family family) {
    Certificate cert;
    cert.edge_count = g.edge_count();
    std::uint64_t n = static_cast<std::uint64_t>(g.vertex_count());
    std::uint64_t kk = static_cast<std::uint64_t>(k);
    std::uint64_t clique_arm, join_arm;
    if (family == Family::lnk) {
        clique_arm = binomial(kk, 2);
        std::uint64_t half = (kk - 1) / 2;
        join_arm = binomial(n, 2) - binomial(n - half, 2) + (kk % 2 == 1 ? 0 : 1);
    } else {
        clique_arm = binomial(2 * kk + 1, 2);
        join_arm = binomial(n, 2) - binomial(n - kk, 2);
    }
    std::uint64_t e = static_cast<std::uint64_t>(cert.edge_count);
    if (e == clique_arm) cert.matched_branch_value = clique_arm;
    else if (e == join_arm) cert.matched_branch_value = join_arm;

    if (g.vertex_count() <= kSolverCap) {
        bool free = (family == Family::lnk) ? is_lnk_free(g, k)
                                            : max_matching(g).value <= k;
        cert.verdict = free ? FreenessVerdict::exact_free : FreenessVerdict::exact_not_free;
    } else {
        cert.verdict = FreenessVerdict::structural_only;
    }
    return cert;
}

}  // namespace turan
