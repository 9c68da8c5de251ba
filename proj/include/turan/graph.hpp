#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace turan {

inline constexpr int kMaxVertices = 64;

// Subset of [0, 64) as a bit mask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }

    constexpr void add(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr bool operator==(const VertexSet&) const = default;

    // Iterates set members in increasing order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::uint64_t m = bits_; m != 0; m &= m - 1) fn(std::countr_zero(m));
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;  // always stored with first < second

// Labeled simple graph on at most 64 vertices, adjacency as per-vertex bit
// masks. Immutable value type: mutating operations return a new graph.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices) throw std::invalid_argument("Graph: vertex count out of range [0,64]");
        adj_.assign(static_cast<std::size_t>(n), 0);
    }

    static Graph from_edge_list(int n, const std::vector<Edge>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge_in_place(u, v);
        return g;
    }

    static Graph complete(int s) {
        Graph g(s);
        for (int u = 0; u < s; ++u)
            for (int v = u + 1; v < s; ++v) g.add_edge_in_place(u, v);
        return g;
    }

    static Graph empty(int s) { return Graph(s); }

    static Graph path(int s) {
        Graph g(s);
        for (int v = 0; v + 1 < s; ++v) g.add_edge_in_place(v, v + 1);
        return g;
    }

    static Graph cycle(int s) {
        if (s < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
        Graph g = path(s);
        g.add_edge_in_place(s - 1, 0);
        return g;
    }

    int vertex_count() const { return n_; }

    int edge_count() const {
        int total = 0;
        for (std::uint64_t row : adj_) total += std::popcount(row);
        return total / 2;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return VertexSet(adj_[static_cast<std::size_t>(v)]);
    }

    int degree(int v) const { return neighbors(v).size(); }

    int degree_in(int v, VertexSet s) const {
        check_vertex(v);
        check_subset(s);
        return std::popcount(adj_[static_cast<std::size_t>(v)] & s.bits());
    }

    int edges_within(VertexSet s) const {
        check_subset(s);
        int total = 0;
        s.for_each([&](int v) { total += std::popcount(adj_[static_cast<std::size_t>(v)] & s.bits()); });
        return total / 2;
    }

    int edges_between(VertexSet s, VertexSet t) const {
        check_subset(s);
        check_subset(t);
        if (!(s & t).empty()) throw std::invalid_argument("edges_between: sets overlap");
        int total = 0;
        s.for_each([&](int v) { total += std::popcount(adj_[static_cast<std::size_t>(v)] & t.bits()); });
        return total;
    }

    Graph with_edge(int u, int v) const {
        Graph g = *this;
        g.add_edge_in_place(u, v);
        return g;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u) {
            VertexSet higher = neighbors(u) - VertexSet::range(u + 1);
            higher.for_each([&](int v) { out.emplace_back(u, v); });
        }
        return out;
    }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
    }
    void check_subset(VertexSet s) const {
        if (!(s - VertexSet::range(n_)).empty())
            throw std::invalid_argument("vertex set contains out-of-range members");
    }
    void add_edge_in_place(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge rejected");
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    friend Graph join(const Graph&, const Graph&);
    friend Graph disjoint_union(const Graph&, const Graph&);
};

inline Graph disjoint_union(const Graph& h1, const Graph& h2) {
    int n1 = h1.vertex_count(), n2 = h2.vertex_count();
    if (n1 + n2 > kMaxVertices) throw std::invalid_argument("disjoint_union: combined order exceeds 64");
    Graph g(n1 + n2);
    for (int v = 0; v < n1; ++v) g.adj_[static_cast<std::size_t>(v)] = h1.adj_[static_cast<std::size_t>(v)];
    for (int v = 0; v < n2; ++v)
        g.adj_[static_cast<std::size_t>(n1 + v)] = h2.adj_[static_cast<std::size_t>(v)] << n1;
    return g;
}

inline Graph join(const Graph& h1, const Graph& h2) {
    Graph g = disjoint_union(h1, h2);
    int n1 = h1.vertex_count(), n2 = h2.vertex_count();
    std::uint64_t left = VertexSet::range(n1).bits();
    std::uint64_t right = VertexSet::range(n1 + n2).bits() & ~left;
    for (int v = 0; v < n1; ++v) g.adj_[static_cast<std::size_t>(v)] |= right;
    for (int v = n1; v < n1 + n2; ++v) g.adj_[static_cast<std::size_t>(v)] |= left;
    return g;
}

// --- graph6 codec (Brendan McKay's format), n <= 62 ---

inline std::string emit_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("graph6: only n <= 62 supported");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    // Upper triangle, column by column: bit (u,v) for u < v, v ascending.
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    int n = static_cast<int>(static_cast<unsigned char>(text[0])) - 63;
    if (n < 0 || n > 62) throw std::invalid_argument("graph6: malformed header (n out of range)");
    std::size_t bits_needed = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t body = (bits_needed + 5) / 6;
    if (text.size() != 1 + body) throw std::invalid_argument("graph6: truncated or overlong bit stream");
    Graph g(n);
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int c = static_cast<unsigned char>(text[1 + bit / 6]) - 63;
            if (c < 0 || c > 63) throw std::invalid_argument("graph6: byte out of range");
            if ((c >> (5 - bit % 6)) & 1) g = g.with_edge(u, v);
        }
    }
    return g;
}

// --- edge-list text format: "n m" then m lines "u v" ---

inline Graph parse_edge_list(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing header \"n m\"");
    if (m < 0) throw std::invalid_argument("edge list: negative edge count");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated edge lines");
        edges.emplace_back(u, v);
    }
    return Graph::from_edge_list(n, edges);
}

inline void emit_edge_list(std::ostream& out, const Graph& g) {
    auto es = g.edges();
    out << g.vertex_count() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

}  // namespace turan
