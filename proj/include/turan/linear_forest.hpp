#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// Edge subset of a host graph whose components are paths or isolated
// vertices. Edges are kept sorted for reproducible output.
struct LinearForest {
    int host_n = 0;
    std::vector<Edge> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int v) {
        while (parent_[static_cast<std::size_t>(v)] != v) {
            parent_[static_cast<std::size_t>(v)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
            v = parent_[static_cast<std::size_t>(v)];
        }
        return v;
    }
    // Returns false if u and v were already connected.
    bool unite(int u, int v) {
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent_[static_cast<std::size_t>(ru)] = rv;
        return true;
    }

private:
    std::vector<int> parent_;
};

}  // namespace detail

inline bool is_linear_forest(int host_n, const std::vector<Edge>& edges) {
    std::vector<int> deg(static_cast<std::size_t>(host_n), 0);
    detail::UnionFind uf(host_n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= host_n || v < 0 || v >= host_n || u == v)
            throw std::invalid_argument("is_linear_forest: edge endpoint out of range");
        if (++deg[static_cast<std::size_t>(u)] > 2) return false;
        if (++deg[static_cast<std::size_t>(v)] > 2) return false;
        if (!uf.unite(u, v)) return false;  // cycle
    }
    return true;
}

inline LinearForest make_linear_forest(int host_n, std::vector<Edge> edges) {
    for (auto& e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (!is_linear_forest(host_n, edges))
        throw std::invalid_argument("make_linear_forest: edge set is not a linear forest");
    return LinearForest{host_n, std::move(edges)};
}

}  // namespace turan
