#ifndef ODS_REVELATION_HPP
#define ODS_REVELATION_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ods/graph.hpp"

namespace ods {

struct OnlineInstance {
    Graph graph;
    std::vector<Vertex> order;  // reveal order, a permutation of the vertices
};

// First 1-based step whose vertex is not adjacent to the revealed prefix, or
// nothing if every prefix stays connected. Errors if not a permutation.
inline std::optional<int> validate_order(const Graph& g, const std::vector<Vertex>& order) {
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) throw Error("validate_order: order has wrong length");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex v : order) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) throw Error("validate_order: not a permutation");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<char> revealed(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        Vertex v = order[static_cast<std::size_t>(i)];
        if (i > 0) {
            bool touches = false;
            for (Vertex u : g.neighbors(v)) {
                if (revealed[static_cast<std::size_t>(u)]) {
                    touches = true;
                    break;
                }
            }
            if (!touches) return i + 1;
        }
        revealed[static_cast<std::size_t>(v)] = 1;
    }
    return std::nullopt;
}

struct StepRecord {
    Vertex vertex = -1;
    bool decision = false;
    std::vector<Vertex> newly_visible;       // vertices first seen at this step
    std::vector<Vertex> save_set;            // vertices this step's reveal saves
    std::vector<Vertex> x_set;               // closed neighborhood of the vertex, undominated part
    std::vector<Vertex> undominated;         // all visible undominated vertices at the reveal
    int undominated_neighbor_count = 0;      // open-neighborhood part of x_set
    bool pending_undominated = false;
};

struct GameTrace {
    OnlineInstance instance;
    std::vector<bool> decisions;
    std::vector<Vertex> selected;
    bool feasible = false;
    std::vector<StepRecord> steps;
    std::vector<Edge> cross_edges;
    std::vector<Vertex> parent;  // parent in the revelation tree, -1 for the first vertex
};

struct DecisionView {
    int step = 0;  // 1-based
    Vertex pending = -1;
    const std::vector<Vertex>* neighbors = nullptr;
    bool pending_undominated = false;
    int undominated_neighbor_count = 0;
    const std::vector<Vertex>* save_set = nullptr;
};

using Decider = std::function<bool(const DecisionView&)>;

// Drives one online game. Either construct with a fixed vertex count and
// reveal an existing instance, or construct empty and create vertices on the
// fly while playing adversary.
class Game {
public:
    Game() = default;
    explicit Game(int n) {
        if (n < 1) throw Error("game: need at least one vertex");
        for (int i = 0; i < n; ++i) create_vertex();
    }

    Vertex create_vertex() {
        Vertex v = static_cast<Vertex>(states_.size());
        states_.push_back({});
        return v;
    }

    int vertex_count() const { return static_cast<int>(states_.size()); }
    bool has_pending() const { return pending_ >= 0; }
    int steps_taken() const { return static_cast<int>(steps_.size()); }

    void reveal(Vertex v, const std::vector<Vertex>& full_neighbors) {
        if (pending_ >= 0) throw Error("game: previous reveal still awaits a decision");
        if (v < 0 || v >= vertex_count()) throw Error("game: reveal of unknown vertex");
        VertexState& st = states_[static_cast<std::size_t>(v)];
        if (st.revealed) throw Error("game: vertex already revealed");
        if (!steps_.empty() && !visible(v)) throw Error("game: revealed vertex is not visible");

        std::vector<Vertex> full = full_neighbors;
        std::sort(full.begin(), full.end());
        if (std::adjacent_find(full.begin(), full.end()) != full.end())
            throw Error("game: duplicate neighbor in reveal");
        for (Vertex u : full) {
            if (u < 0 || u >= vertex_count()) throw Error("game: neighbor is not a created vertex");
            if (u == v) throw Error("game: self loop in reveal");
        }

        // Both directions of full-neighborhood consistency: every edge already
        // disclosed toward v must be listed, and every listed revealed vertex
        // must have disclosed v.
        std::vector<Vertex> listed_revealed;
        for (Vertex u : full)
            if (states_[static_cast<std::size_t>(u)].revealed) listed_revealed.push_back(u);
        if (listed_revealed != st.disclosed_from)
            throw Error("game: reveal contradicts previously disclosed edges");

        StepRecord rec;
        rec.vertex = v;
        st.revealed = true;
        st.reveal_step = static_cast<int>(steps_.size()) + 1;
        st.full_adj = full;
        if (steps_.empty()) {
            st.seen = true;
            rec.newly_visible.push_back(v);
        }

        int unrevealed = 0;
        for (Vertex u : full) {
            VertexState& us = states_[static_cast<std::size_t>(u)];
            if (us.revealed) continue;
            ++unrevealed;
            insert_sorted(us.disclosed_from, v);
            if (!us.seen) {
                us.seen = true;
                us.parent = v;
                rec.newly_visible.push_back(u);
            } else {
                cross_edges_.push_back({std::min(v, u), std::max(v, u)});
            }
        }
        st.unrevealed_neighbors = unrevealed;

        // Savior bookkeeping: this reveal may complete closed neighborhoods.
        std::vector<Vertex> completed;
        for (Vertex u : full) {
            VertexState& us = states_[static_cast<std::size_t>(u)];
            if (!us.revealed) continue;
            if (--us.unrevealed_neighbors == 0) completed.push_back(u);
        }
        if (unrevealed == 0) completed.push_back(v);
        for (Vertex w : completed) {
            const VertexState& ws = states_[static_cast<std::size_t>(w)];
            bool saved = !ws.selected;
            if (saved) {
                for (Vertex u : ws.full_adj) {
                    if (u != v && states_[static_cast<std::size_t>(u)].selected) {
                        saved = false;
                        break;
                    }
                }
            }
            if (saved) rec.save_set.push_back(w);
        }
        std::sort(rec.save_set.begin(), rec.save_set.end());

        for (Vertex u = 0; u < vertex_count(); ++u) {
            const VertexState& us = states_[static_cast<std::size_t>(u)];
            if (us.seen && !us.dominated) rec.undominated.push_back(u);
        }
        rec.pending_undominated = !st.dominated;
        for (Vertex u : full)
            if (!states_[static_cast<std::size_t>(u)].dominated) {
                rec.x_set.push_back(u);
                ++rec.undominated_neighbor_count;
            }
        if (!st.dominated) rec.x_set.push_back(v);
        std::sort(rec.x_set.begin(), rec.x_set.end());

        steps_.push_back(std::move(rec));
        pending_ = v;
    }

    DecisionView view() const {
        if (pending_ < 0) throw Error("game: no reveal awaiting a decision");
        const StepRecord& rec = steps_.back();
        DecisionView dv;
        dv.step = static_cast<int>(steps_.size());
        dv.pending = pending_;
        dv.neighbors = &states_[static_cast<std::size_t>(pending_)].full_adj;
        dv.pending_undominated = rec.pending_undominated;
        dv.undominated_neighbor_count = rec.undominated_neighbor_count;
        dv.save_set = &rec.save_set;
        return dv;
    }

    bool decide(bool take) {
        if (pending_ < 0) throw Error("game: no reveal awaiting a decision");
        Vertex v = pending_;
        pending_ = -1;
        VertexState& st = states_[static_cast<std::size_t>(v)];
        steps_.back().decision = take;
        if (take) {
            st.selected = true;
            st.dominated = true;
            for (Vertex u : st.full_adj) states_[static_cast<std::size_t>(u)].dominated = true;
        }
        return take;
    }

    GameTrace finalize() const {
        if (pending_ >= 0) throw Error("game: finalize with a decision still pending");
        int n = vertex_count();
        if (n == 0) throw Error("game: nothing was revealed");
        std::vector<Edge> edges;
        std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
        std::vector<Vertex> selected;
        for (Vertex v = 0; v < n; ++v) {
            const VertexState& st = states_[static_cast<std::size_t>(v)];
            if (!st.revealed) throw Error("game: finalize with unrevealed vertices");
            parent[static_cast<std::size_t>(v)] = st.parent;
            if (st.selected) selected.push_back(v);
            for (Vertex u : st.full_adj)
                if (v < u) edges.push_back({v, u});
        }
        GameTrace trace{OnlineInstance{Graph(n, edges), {}}, {}, {}, false, steps_, cross_edges_, parent};
        for (const StepRecord& rec : steps_) {
            trace.instance.order.push_back(rec.vertex);
            trace.decisions.push_back(rec.decision);
        }
        trace.selected = selected;
        trace.feasible = is_dominating(trace.instance.graph, selected);
        return trace;
    }

private:
    struct VertexState {
        bool revealed = false;
        bool seen = false;
        bool selected = false;
        bool dominated = false;
        Vertex parent = -1;
        int reveal_step = 0;
        int unrevealed_neighbors = 0;
        std::vector<Vertex> full_adj;
        std::vector<Vertex> disclosed_from;  // revealed vertices that listed this one
    };

    bool visible(Vertex v) const {
        const VertexState& st = states_[static_cast<std::size_t>(v)];
        return st.seen;
    }

    static void insert_sorted(std::vector<Vertex>& vec, Vertex v) {
        vec.insert(std::lower_bound(vec.begin(), vec.end(), v), v);
    }

    std::vector<VertexState> states_;
    std::vector<StepRecord> steps_;
    std::vector<Edge> cross_edges_;
    Vertex pending_ = -1;
};

// Plays a full instance against a decision callback.
inline GameTrace run_game(const OnlineInstance& inst, const Decider& decider) {
    Game game(inst.graph.vertex_count());
    for (Vertex v : inst.order) {
        game.reveal(v, inst.graph.neighbors(v));
        game.decide(decider(game.view()));
    }
    return game.finalize();
}

}  // namespace ods

#endif
