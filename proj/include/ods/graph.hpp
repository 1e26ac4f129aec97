#ifndef ODS_GRAPH_HPP
#define ODS_GRAPH_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ods {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Sorted vector of distinct vertices. Cheap to scan, deterministic to print.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> items) : items_(std::move(items)) {
        std::sort(items_.begin(), items_.end());
        items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    }

    bool contains(Vertex v) const {
        return std::binary_search(items_.begin(), items_.end(), v);
    }
    void insert(Vertex v) {
        auto it = std::lower_bound(items_.begin(), items_.end(), v);
        if (it == items_.end() || *it != v) items_.insert(it, v);
    }
    void erase(Vertex v) {
        auto it = std::lower_bound(items_.begin(), items_.end(), v);
        if (it != items_.end() && *it == v) items_.erase(it);
    }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const std::vector<Vertex>& items() const { return items_; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    bool operator==(const VertexSet& other) const { return items_ == other.items_; }

private:
    std::vector<Vertex> items_;
};

// Immutable simple connected graph on vertices 0..n-1.
class Graph {
public:
    Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
        if (n < 1) throw Error("graph: need at least one vertex");
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n) throw Error("graph: edge endpoint out of range");
            if (u == v) throw Error("graph: self loop");
            if (u > v) std::swap(u, v);
            edges_.emplace_back(u, v);
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw Error("graph: duplicate edge");
        for (auto [u, v] : edges_) {
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
        if (!connected()) throw Error("graph: not connected");
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& nb = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }
    std::vector<Vertex> closed_neighborhood(Vertex v) const {
        std::vector<Vertex> out = neighbors(v);
        out.insert(std::lower_bound(out.begin(), out.end(), v), v);
        return out;
    }

private:
    bool connected() const {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<Vertex> stack = {0};
        seen[0] = 1;
        int count = 0;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            ++count;
            for (Vertex u : adj_[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    stack.push_back(u);
                }
            }
        }
        return count == n_;
    }
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_) throw Error("graph: vertex out of range");
    }

    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

// Direct check against the definition: every vertex is in the set or adjacent to a member.
inline bool is_dominating(const Graph& g, const std::vector<Vertex>& set) {
    std::vector<char> dominated(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex s : set) {
        if (s < 0 || s >= g.vertex_count()) throw Error("is_dominating: vertex out of range");
        dominated[static_cast<std::size_t>(s)] = 1;
        for (Vertex u : g.neighbors(s)) dominated[static_cast<std::size_t>(u)] = 1;
    }
    return std::all_of(dominated.begin(), dominated.end(), [](char c) { return c != 0; });
}

inline int max_degree(const Graph& g) {
    int d = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

// Lower bound gamma >= ceil(n / (Delta + 1)).
inline int berge_bound(int n, int delta) {
    if (delta < 1) throw Error("berge_bound: max degree must be at least 1");
    return (n + delta) / (delta + 1);
}

// Union of closed neighborhoods over a set; empty set maps to empty set.
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    std::vector<Vertex> out;
    for (Vertex v : s) {
        out.push_back(v);
        for (Vertex u : g.neighbors(v)) out.push_back(u);
    }
    return VertexSet(std::move(out));
}

}  // namespace ods

#endif
