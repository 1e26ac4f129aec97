#ifndef ODS_OPT_HPP
#define ODS_OPT_HPP

#include <algorithm>
#include <array>
#include <vector>

#include "ods/graph.hpp"
#include "ods/rational.hpp"
#include "ods/recognizers.hpp"

namespace ods {

namespace detail {

constexpr int kBruteForceCap = 26;

struct DominationSearch {
    int n;
    int delta_plus_one;
    std::vector<unsigned> closed;  // closed[v] = bitmask of N[v]

    explicit DominationSearch(const Graph& g)
        : n(g.vertex_count()), delta_plus_one(max_degree(g) + 1), closed(static_cast<std::size_t>(n), 0u) {
        for (Vertex v = 0; v < n; ++v) {
            unsigned m = 1u << v;
            for (Vertex u : g.neighbors(v)) m |= 1u << u;
            closed[static_cast<std::size_t>(v)] = m;
        }
    }

    unsigned full() const { return n == 32 ? ~0u : (1u << n) - 1u; }

    // True iff some dominating set of size <= budget extends the current
    // selection (encoded by its dominated mask) while avoiding 'excluded'.
    bool extend(unsigned dominated, unsigned excluded, int budget) const {
        unsigned open = full() & ~dominated;
        if (open == 0) return true;
        int undominated = __builtin_popcount(open);
        if ((undominated + delta_plus_one - 1) / delta_plus_one > budget) return false;
        Vertex v = __builtin_ctz(open);
        unsigned cands = closed[static_cast<std::size_t>(v)] & ~excluded;
        unsigned tried = 0;
        while (cands) {
            Vertex c = __builtin_ctz(cands);
            cands &= cands - 1;
            // Any solution using an earlier candidate lives in an earlier branch.
            if (extend(dominated | closed[static_cast<std::size_t>(c)], excluded | tried, budget - 1))
                return true;
            tried |= 1u << c;
        }
        return false;
    }
};

}  // namespace detail

// Exact minimum dominating set, lexicographically smallest among minimums.
inline std::vector<Vertex> brute_force_opt(const Graph& g) {
    int n = g.vertex_count();
    if (n > detail::kBruteForceCap) throw Error("brute_force_opt: instance too large for exact search");
    detail::DominationSearch search(g);
    int gamma = n;
    for (int size = (n + search.delta_plus_one - 1) / search.delta_plus_one; size <= n; ++size) {
        if (search.extend(0u, 0u, size)) {
            gamma = size;
            break;
        }
    }
    std::vector<Vertex> forced;
    unsigned dominated = 0u;
    unsigned excluded = 0u;
    for (Vertex v = 0; v < n && static_cast<int>(forced.size()) < gamma; ++v) {
        unsigned with_v = dominated | search.closed[static_cast<std::size_t>(v)];
        if (search.extend(with_v, excluded | (1u << v), gamma - static_cast<int>(forced.size()) - 1)) {
            forced.push_back(v);
            dominated = with_v;
        } else {
            excluded |= 1u << v;
        }
    }
    return forced;
}

// Minimum dominating set of a tree by dynamic programming over a root order.
// States: vertex selected; not selected but covered from below; not selected
// and relying on its parent.
inline std::vector<Vertex> tree_opt(const Graph& g) {
    if (!is_tree(g)) throw Error("tree_opt: graph is not a tree");
    int n = g.vertex_count();
    constexpr int IN = 0, COVERED = 1, NEEDS = 2;
    constexpr long long INF = 1'000'000'000'000'000LL;

    std::vector<Vertex> order;
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    order.push_back(0);
    seen[0] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        Vertex v = order[head];
        for (Vertex u : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                parent[static_cast<std::size_t>(u)] = v;
                order.push_back(u);
            }
        }
    }

    std::vector<std::array<long long, 3>> dp(static_cast<std::size_t>(n));
    std::vector<Vertex> swap_child(static_cast<std::size_t>(n), -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        long long in_cost = 1, needs_cost = 0, covered_base = 0;
        long long best_swap = INF;
        bool child_in = false;
        for (Vertex u : g.neighbors(v)) {
            if (u == parent[static_cast<std::size_t>(v)]) continue;
            const auto& c = dp[static_cast<std::size_t>(u)];
            in_cost += std::min({c[IN], c[COVERED], c[NEEDS]});
            long long free_min = std::min(c[IN], c[COVERED]);
            needs_cost = std::min(needs_cost + free_min, INF);
            covered_base = std::min(covered_base + free_min, INF);
            if (c[IN] <= c[COVERED]) child_in = true;
            if (c[IN] - free_min < best_swap) {
                best_swap = c[IN] - free_min;
                swap_child[static_cast<std::size_t>(v)] = u;
            }
        }
        long long covered_cost;
        if (g.degree(v) == (parent[static_cast<std::size_t>(v)] == -1 ? 0 : 1)) {
            covered_cost = INF;  // no children to cover from
        } else {
            covered_cost = child_in ? covered_base : std::min(covered_base + best_swap, INF);
        }
        dp[static_cast<std::size_t>(v)] = {std::min(in_cost, INF), covered_cost, needs_cost};
    }

    std::vector<int> state(static_cast<std::size_t>(n), -1);
    const auto& root_dp = dp[0];
    state[0] = root_dp[IN] <= root_dp[COVERED] ? IN : COVERED;
    std::vector<Vertex> result;
    for (Vertex v : order) {
        int s = state[static_cast<std::size_t>(v)];
        if (s == IN) result.push_back(v);
        bool need_swap = false;
        if (s == COVERED) {
            bool some_in = false;
            for (Vertex u : g.neighbors(v)) {
                if (u == parent[static_cast<std::size_t>(v)]) continue;
                const auto& c = dp[static_cast<std::size_t>(u)];
                if (c[IN] <= c[COVERED]) some_in = true;
            }
            need_swap = !some_in;
        }
        for (Vertex u : g.neighbors(v)) {
            if (u == parent[static_cast<std::size_t>(v)]) continue;
            const auto& c = dp[static_cast<std::size_t>(u)];
            int pick;
            if (s == IN) {
                long long m = std::min({c[IN], c[COVERED], c[NEEDS]});
                pick = c[IN] == m ? IN : (c[COVERED] == m ? COVERED : NEEDS);
            } else {
                pick = c[IN] <= c[COVERED] ? IN : COVERED;
                if (need_swap && u == swap_child[static_cast<std::size_t>(v)]) pick = IN;
            }
            state[static_cast<std::size_t>(u)] = pick;
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

// Exchange degree-1 vertices in a minimum dominating set for their unique
// neighbors. Errors if the input set is not actually minimum-like (a leaf
// whose neighbor is already in the set would mean the set is not minimum).
inline std::vector<Vertex> normalize_opt_no_leaves(const Graph& g, std::vector<Vertex> opt) {
    int n = g.vertex_count();
    if (n == 1) return opt;
    if (n == 2) throw Error("normalize_opt_no_leaves: every vertex of a two-vertex graph has degree 1");
    if (!is_dominating(g, opt)) throw Error("normalize_opt_no_leaves: input set is not dominating");
    VertexSet current(opt);
    std::size_t original = current.size();
    while (true) {
        Vertex leaf = -1;
        for (Vertex v : current) {
            if (g.degree(v) == 1) {
                leaf = v;
                break;
            }
        }
        if (leaf == -1) break;
        Vertex u = g.neighbors(leaf)[0];
        if (current.contains(u))
            throw Error("normalize_opt_no_leaves: redundant degree-1 vertex, input set is not minimum");
        current.erase(leaf);
        current.insert(u);
    }
    std::vector<Vertex> result = current.items();
    if (result.size() != original || !is_dominating(g, result))
        throw Error("normalize_opt_no_leaves: exchange failed");
    for (Vertex v : result)
        if (g.degree(v) == 1) throw Error("normalize_opt_no_leaves: degree-1 vertex survived");
    return result;
}

// Checks gamma(g) >= ceil(|independent| / (t - 1)) for a K_{1,t}-free graph:
// each dominating vertex covers at most t - 1 members of an independent set.
inline bool independent_set_bound_check(const Graph& g, const std::vector<Vertex>& independent, int t) {
    if (!is_k1t_free(g, t)) throw Error("independent_set_bound_check: graph has a forbidden star");
    for (std::size_t i = 0; i < independent.size(); ++i) {
        Vertex a = independent[i];
        if (a < 0 || a >= g.vertex_count()) throw Error("independent_set_bound_check: vertex out of range");
        for (std::size_t j = i + 1; j < independent.size(); ++j) {
            Vertex b = independent[j];
            if (a == b || g.has_edge(a, b)) throw Error("independent_set_bound_check: set is not independent");
        }
    }
    int gamma = static_cast<int>(brute_force_opt(g).size());
    long long needed = ceil_div(static_cast<long long>(independent.size()), t - 1);
    return gamma >= needed;
}

}  // namespace ods

#endif
