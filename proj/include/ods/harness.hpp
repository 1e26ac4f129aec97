#ifndef ODS_HARNESS_HPP
#define ODS_HARNESS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ods/adversaries.hpp"
#include "ods/algorithms.hpp"
#include "ods/graph.hpp"
#include "ods/opt.hpp"
#include "ods/rational.hpp"
#include "ods/recognizers.hpp"
#include "ods/revelation.hpp"

namespace ods {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Deterministic RNG with self-contained sampling, so reports are
// byte-identical across standard-library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw Error("Rng: empty range");
        std::uint64_t limit = ~0ULL - ~0ULL % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    bool chance(int percent) { return below(100) < static_cast<std::uint64_t>(percent); }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

  private:
    std::mt19937_64 engine_;
};

inline Graph random_tree(int n, Rng& rng) {
    if (n < 1) throw Error("random_tree: need at least one vertex");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1}});
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (int& s : seq) s = rng.below_int(n);
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int s : seq) ++degree[static_cast<std::size_t>(s)];
    std::vector<Edge> edges;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int s : seq) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (used[static_cast<std::size_t>(leaf)] || degree[static_cast<std::size_t>(leaf)] != 1) continue;
            edges.push_back({std::min(leaf, s), std::max(leaf, s)});
            used[static_cast<std::size_t>(leaf)] = true;
            --degree[static_cast<std::size_t>(s)];
            break;
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v) {
        if (used[static_cast<std::size_t>(v)] || degree[static_cast<std::size_t>(v)] != 1) continue;
        (a == -1 ? a : b) = v;
    }
    edges.push_back({a, b});
    return Graph(n, edges);
}

inline Graph random_tree(int n, std::uint64_t seed) {
    Rng rng(seed);
    return random_tree(n, rng);
}

// Random tree plus chords whose tree paths stay pairwise edge-disjoint, so
// every edge lies on at most one cycle.
inline Graph random_cactus(int n, Rng& rng) {
    Graph tree = random_tree(n, rng);
    if (n <= 2) return tree;
    std::vector<Edge> edges(tree.edges());
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : edges) {
        adj[static_cast<std::size_t>(e.first)].push_back(e.second);
        adj[static_cast<std::size_t>(e.second)].push_back(e.first);
    }
    std::vector<std::pair<int, int>> taken;  // tree edges already on a cycle
    auto edge_taken = [&](int u, int v) {
        return std::find(taken.begin(), taken.end(), std::make_pair(std::min(u, v), std::max(u, v))) != taken.end();
    };
    for (int attempt = 0; attempt < n; ++attempt) {
        int u = rng.below_int(n);
        int v = rng.below_int(n);
        if (u == v || tree.has_edge(u, v)) continue;
        std::vector<int> parent(static_cast<std::size_t>(n), -1);
        std::vector<int> queue{u};
        parent[static_cast<std::size_t>(u)] = u;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (Vertex w : adj[static_cast<std::size_t>(queue[head])]) {
                if (parent[static_cast<std::size_t>(w)] != -1) continue;
                parent[static_cast<std::size_t>(w)] = queue[head];
                queue.push_back(w);
            }
        }
        std::vector<std::pair<int, int>> path;
        bool free = true;
        for (int cur = v; cur != u; cur = parent[static_cast<std::size_t>(cur)]) {
            int p = parent[static_cast<std::size_t>(cur)];
            if (edge_taken(cur, p)) {
                free = false;
                break;
            }
            path.emplace_back(std::min(cur, p), std::max(cur, p));
        }
        if (!free) continue;
        bool duplicate = false;
        for (const Edge& e : edges)
            if (e.first == std::min(u, v) && e.second == std::max(u, v)) duplicate = true;
        if (duplicate) continue;
        edges.push_back({std::min(u, v), std::max(u, v)});
        taken.insert(taken.end(), path.begin(), path.end());
        taken.emplace_back(std::min(u, v), std::max(u, v));
    }
    return Graph(n, edges);
}

inline Graph random_cactus(int n, std::uint64_t seed) {
    Rng rng(seed);
    return random_cactus(n, rng);
}

// Degree-capped attachment tree with a few extra edges under the same cap.
inline Graph random_bounded(int n, int delta, Rng& rng) {
    if (n < 1) throw Error("random_bounded: need at least one vertex");
    if (delta < 2) throw Error("random_bounded: degree bound must be at least 2");
    if (n == 1) return Graph(1, {});
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        std::vector<int> candidates;
        for (int u = 0; u < v; ++u)
            if (degree[static_cast<std::size_t>(u)] < delta) candidates.push_back(u);
        int u = candidates[static_cast<std::size_t>(rng.below(candidates.size()))];
        edges.push_back({u, v});
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
    }
    auto present = [&](int u, int v) {
        return std::find(edges.begin(), edges.end(), Edge{std::min(u, v), std::max(u, v)}) != edges.end();
    };
    for (int attempt = 0; attempt < n; ++attempt) {
        int u = rng.below_int(n);
        int v = rng.below_int(n);
        if (u == v || present(u, v)) continue;
        if (degree[static_cast<std::size_t>(u)] >= delta || degree[static_cast<std::size_t>(v)] >= delta) continue;
        edges.push_back({std::min(u, v), std::max(u, v)});
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
    }
    return Graph(n, edges);
}

inline Graph random_bounded(int n, int delta, std::uint64_t seed) {
    Rng rng(seed);
    return random_bounded(n, delta, rng);
}

// Line graph of a tree: adjacent tree edges become adjacent vertices. Always
// free of induced stars with three or more leaves.
inline Graph line_graph_of_random_tree(int n, Rng& rng) {
    if (n < 1) throw Error("line_graph_of_random_tree: need at least one vertex");
    Graph tree = random_tree(n + 1, rng);
    const std::vector<Edge>& tree_edges = tree.edges();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < tree_edges.size(); ++i) {
        for (std::size_t j = i + 1; j < tree_edges.size(); ++j) {
            const Edge& e = tree_edges[i];
            const Edge& f = tree_edges[j];
            bool share = e.first == f.first || e.first == f.second || e.second == f.first || e.second == f.second;
            if (share) edges.push_back({static_cast<int>(i), static_cast<int>(j)});
        }
    }
    return Graph(n, edges);
}

// Density-ramped rejection sampler with a line-graph fallback, so the result
// is always a connected graph without induced t-leaf stars.
inline Graph random_k1t_free(int n, int t, Rng& rng) {
    if (t < 3) throw Error("random_k1t_free: t must be at least 3");
    if (n < 1) throw Error("random_k1t_free: need at least one vertex");
    for (int attempt = 0; attempt < 6; ++attempt) {
        Graph tree = random_tree(n, rng);
        std::vector<Edge> edges(tree.edges());
        int percent = 10 + 15 * attempt;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (tree.has_edge(u, v)) continue;
                if (rng.chance(percent)) edges.push_back({u, v});
            }
        }
        Graph g(n, edges);
        if (is_k1t_free(g, t)) return g;
    }
    return line_graph_of_random_tree(n, rng);
}

inline Graph random_k1t_free(int n, int t, std::uint64_t seed) {
    Rng rng(seed);
    return random_k1t_free(n, t, rng);
}

inline Graph generate_instance(const std::string& class_tag, int n, int param, Rng& rng) {
    if (class_tag == "tree") return random_tree(n, rng);
    if (class_tag == "cactus") return random_cactus(n, rng);
    if (class_tag == "bounded-degree") return random_bounded(n, param, rng);
    if (class_tag == "k1t-free") return random_k1t_free(n, param, rng);
    throw Error("generate_instance: no generator for class '" + class_tag + "'");
}

inline std::vector<Vertex> random_connected_order(const Graph& g, Rng& rng, const std::string& policy) {
    const int n = g.vertex_count();
    std::vector<Vertex> order;
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    Vertex root = rng.below_int(n);
    if (policy == "bfs") {
        std::vector<Vertex> queue{root};
        placed[static_cast<std::size_t>(root)] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            order.push_back(v);
            std::vector<Vertex> nbrs(g.neighbors(v));
            rng.shuffle(nbrs);
            for (Vertex u : nbrs) {
                if (placed[static_cast<std::size_t>(u)]) continue;
                placed[static_cast<std::size_t>(u)] = true;
                queue.push_back(u);
            }
        }
    } else if (policy == "dfs") {
        std::vector<Vertex> stack{root};
        placed[static_cast<std::size_t>(root)] = true;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            order.push_back(v);
            std::vector<Vertex> nbrs(g.neighbors(v));
            rng.shuffle(nbrs);
            for (Vertex u : nbrs) {
                if (placed[static_cast<std::size_t>(u)]) continue;
                placed[static_cast<std::size_t>(u)] = true;
                stack.push_back(u);
            }
        }
    } else if (policy == "random-connected") {
        std::vector<Vertex> frontier{root};
        placed[static_cast<std::size_t>(root)] = true;
        while (!frontier.empty()) {
            std::size_t pick = rng.below(frontier.size());
            Vertex v = frontier[pick];
            frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(pick));
            order.push_back(v);
            for (Vertex u : g.neighbors(v)) {
                if (placed[static_cast<std::size_t>(u)]) continue;
                placed[static_cast<std::size_t>(u)] = true;
                frontier.push_back(u);
            }
        }
    } else {
        throw Error("random_connected_order: unknown policy '" + policy + "'");
    }
    if (validate_order(g, order).has_value()) throw Error("random_connected_order: produced an invalid order");
    return order;
}

inline std::vector<Vertex> random_connected_order(const Graph& g, std::uint64_t seed, const std::string& policy) {
    Rng rng(seed);
    return random_connected_order(g, rng, policy);
}

struct ExperimentConfig {
    std::string class_tag;
    int n_min = 3;
    int n_max = 20;
    int param = 0;  // degree bound, forbidden-star size, or unused
    AlgorithmSpec algorithm;
    std::uint64_t seed = 1;
    int repetitions = 100;
    std::string order_policy = "bfs";
    int opt_cap = 26;
};

struct RunRow {
    std::string class_tag;
    int n = 0;
    int param = 0;
    std::string algorithm;
    int alg_size = 0;
    int opt_size = 0;
    Rational ratio;
    bool feasible = false;
    bool certificate = false;
};

struct RatioReport {
    std::vector<RunRow> rows;
    Rational max_ratio;
    Rational mean_ratio;
    int feasible_count = 0;
    int infeasible_count = 0;
};

inline RatioReport sweep(const ExperimentConfig& cfg) {
    if (cfg.repetitions < 1) throw Error("sweep: need at least one repetition");
    if (cfg.n_min < 1 || cfg.n_max < cfg.n_min) throw Error("sweep: bad size range");
    RatioReport report;
    Rational sum(0);
    std::uint64_t state = cfg.seed;
    for (int rep = 0; rep < cfg.repetitions; ++rep) {
        Rng rng(splitmix64(state));
        int n = cfg.n_min + rng.below_int(cfg.n_max - cfg.n_min + 1);
        Graph g = generate_instance(cfg.class_tag, n, cfg.param, rng);
        std::vector<Vertex> order = random_connected_order(g, rng, cfg.order_policy);
        GameTrace trace = run_algorithm(OnlineInstance{g, order}, cfg.algorithm);
        bool tree_instance = is_tree(g);
        if (!tree_instance && g.vertex_count() > cfg.opt_cap)
            throw Error("sweep: instance exceeds the exact-solver cap");
        std::vector<Vertex> opt = tree_instance ? tree_opt(g) : brute_force_opt(g);

        RunRow row;
        row.class_tag = cfg.class_tag;
        row.n = g.vertex_count();
        row.param = cfg.param;
        row.algorithm = algorithm_name(cfg.algorithm);
        row.alg_size = static_cast<int>(trace.selected.size());
        row.opt_size = static_cast<int>(opt.size());
        row.feasible = trace.feasible;
        row.certificate = cfg.class_tag == "tree" || cfg.class_tag == "cactus"
                              ? check_claimed_class(cfg.class_tag, g, 0)
                              : check_claimed_class(cfg.class_tag, g, cfg.param);
        if (row.feasible) {
            row.ratio = Rational(row.alg_size, row.opt_size);
            sum += row.ratio;
            report.max_ratio = std::max(report.max_ratio, row.ratio);
            ++report.feasible_count;
        } else {
            ++report.infeasible_count;
        }
        report.rows.push_back(std::move(row));
    }
    if (report.feasible_count > 0) report.mean_ratio = sum / Rational(report.feasible_count);
    return report;
}

inline std::string to_csv(const RatioReport& report) {
    std::string out = "class,n,param,algorithm,alg_size,opt_size,ratio_num,ratio_den,feasible,certificate\n";
    for (const RunRow& row : report.rows) {
        out += row.class_tag;
        out += ',';
        out += std::to_string(row.n);
        out += ',';
        out += std::to_string(row.param);
        out += ',';
        out += row.algorithm;
        out += ',';
        out += std::to_string(row.alg_size);
        out += ',';
        out += std::to_string(row.opt_size);
        out += ',';
        out += rational_num_string(row.ratio);
        out += ',';
        out += rational_den_string(row.ratio);
        out += ',';
        out += row.feasible ? '1' : '0';
        out += ',';
        out += row.certificate ? '1' : '0';
        out += '\n';
    }
    return out;
}

}  // namespace ods

#endif
