#ifndef ODS_RECOGNIZERS_HPP
#define ODS_RECOGNIZERS_HPP

#include <algorithm>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "ods/graph.hpp"

namespace ods {

// Connected by construction, so edge count settles it.
inline bool is_tree(const Graph& g) {
    return g.edge_count() == g.vertex_count() - 1;
}

// Every biconnected component must be a single edge or a simple cycle.
inline bool is_cactus(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edge_stack;
    int timer = 0;

    // Iterative DFS frame: vertex, parent, index into adjacency list.
    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };
    std::vector<Frame> stack;
    disc[0] = low[0] = timer++;
    stack.push_back({0, -1, 0});

    auto component_ok = [&](const Edge& last) {
        std::set<Vertex> verts;
        int edges = 0;
        while (true) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            verts.insert(e.first);
            verts.insert(e.second);
            ++edges;
            if (e == last) break;
        }
        return edges == 1 || edges == static_cast<int>(verts.size());
    };

    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& nb = g.neighbors(f.v);
        if (f.next < nb.size()) {
            Vertex u = nb[f.next++];
            if (u == f.parent) continue;
            if (disc[static_cast<std::size_t>(u)] == -1) {
                Edge e{std::min(f.v, u), std::max(f.v, u)};
                edge_stack.push_back(e);
                disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
                stack.push_back({u, f.v, 0});
            } else if (disc[static_cast<std::size_t>(u)] < disc[static_cast<std::size_t>(f.v)]) {
                edge_stack.push_back({std::min(f.v, u), std::max(f.v, u)});
                low[static_cast<std::size_t>(f.v)] =
                    std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(u)]);
            }
        } else {
            Frame done = f;
            stack.pop_back();
            if (done.parent != -1) {
                auto p = static_cast<std::size_t>(done.parent);
                auto c = static_cast<std::size_t>(done.v);
                low[p] = std::min(low[p], low[c]);
                if (low[c] >= disc[p]) {
                    Edge last{std::min(done.parent, done.v), std::max(done.parent, done.v)};
                    if (!component_ok(last)) return false;
                }
            }
        }
    }
    return true;
}

inline bool is_bipartite(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::queue<Vertex> q;
    color[0] = 0;
    q.push(0);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex u : g.neighbors(v)) {
            if (color[static_cast<std::size_t>(u)] == -1) {
                color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
                q.push(u);
            } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
                return false;
            }
        }
    }
    return true;
}

// Edge-count necessary condition for simple planar bipartite graphs.
inline bool euler_planar_bipartite_bound(const Graph& g) {
    if (g.vertex_count() < 3) return true;
    return g.edge_count() <= 2 * g.vertex_count() - 4;
}

// True when no vertex has t pairwise non-adjacent neighbors.
inline bool is_k1t_free(const Graph& g, int t) {
    if (t < 3) throw Error("is_k1t_free: t must be at least 3");
    for (Vertex center = 0; center < g.vertex_count(); ++center) {
        const auto& nb = g.neighbors(center);
        if (static_cast<int>(nb.size()) < t) continue;
        std::vector<Vertex> chosen;
        // Search for an independent subset of nb of size t.
        auto search = [&](auto&& self, std::size_t idx) -> bool {
            if (static_cast<int>(chosen.size()) == t) return true;
            if (chosen.size() + (nb.size() - idx) < static_cast<std::size_t>(t)) return false;
            for (std::size_t i = idx; i < nb.size(); ++i) {
                Vertex cand = nb[i];
                bool ok = true;
                for (Vertex c : chosen) {
                    if (g.has_edge(c, cand)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                chosen.push_back(cand);
                if (self(self, i + 1)) return true;
                chosen.pop_back();
            }
            return false;
        };
        if (search(search, 0)) return false;
    }
    return true;
}

// Threshold graphs are exactly those that dismantle by repeatedly deleting a
// vertex that is currently isolated or currently universal.
inline bool is_threshold(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    int remaining = n;
    while (remaining > 0) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n && pick == -1; ++v) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            if (deg[static_cast<std::size_t>(v)] == 0 || deg[static_cast<std::size_t>(v)] == remaining - 1)
                pick = v;
        }
        if (pick == -1) return false;
        alive[static_cast<std::size_t>(pick)] = 0;
        --remaining;
        for (Vertex u : g.neighbors(pick))
            if (alive[static_cast<std::size_t>(u)]) --deg[static_cast<std::size_t>(u)];
    }
    return true;
}

// Reduce by deleting degree <= 1 vertices and bypassing degree-2 vertices,
// merging any parallel edge that a bypass would create. Everything reduces to
// a single vertex iff there is no K4 minor, i.e. treewidth is at most 2.
inline bool treewidth_at_most_2(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].insert(v);
        adj[static_cast<std::size_t>(v)].insert(u);
    }
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    int remaining = n;
    bool progress = true;
    while (remaining > 1 && progress) {
        progress = false;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            auto& nb = adj[static_cast<std::size_t>(v)];
            if (nb.size() <= 1) {
                for (Vertex u : nb) adj[static_cast<std::size_t>(u)].erase(v);
                nb.clear();
                alive[static_cast<std::size_t>(v)] = 0;
                --remaining;
                progress = true;
            } else if (nb.size() == 2) {
                auto it = nb.begin();
                Vertex a = *it++;
                Vertex b = *it;
                adj[static_cast<std::size_t>(a)].erase(v);
                adj[static_cast<std::size_t>(b)].erase(v);
                adj[static_cast<std::size_t>(a)].insert(b);
                adj[static_cast<std::size_t>(b)].insert(a);
                nb.clear();
                alive[static_cast<std::size_t>(v)] = 0;
                --remaining;
                progress = true;
            }
        }
    }
    return remaining <= 1;
}

}  // namespace ods

#endif
