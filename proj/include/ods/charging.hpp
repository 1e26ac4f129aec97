#ifndef ODS_CHARGING_HPP
#define ODS_CHARGING_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "ods/graph.hpp"
#include "ods/rational.hpp"
#include "ods/revelation.hpp"

namespace ods {

struct ChargeMap {
    std::vector<Rational> charge;             // per vertex, zero when untouched
    std::vector<std::vector<Vertex>> sources;  // selected vertices that charged it

    explicit ChargeMap(int n)
        : charge(static_cast<std::size_t>(n), Rational(0)), sources(static_cast<std::size_t>(n)) {}
};

inline Rational total_charge(const ChargeMap& map) {
    Rational total(0);
    for (const Rational& c : map.charge) total += c;
    return total;
}

// Each selected vertex spreads one unit evenly across the vertices it newly
// dominates. Every vertex is charged at most once because newly dominated
// sets are disjoint across steps.
inline ChargeMap spread_even(const GameTrace& trace) {
    if (!trace.feasible) throw Error("spread_even: trace is not feasible");
    const int n = trace.instance.graph.vertex_count();
    ChargeMap map(n);
    for (const StepRecord& step : trace.steps) {
        if (!step.decision) continue;
        if (step.x_set.empty()) throw Error("spread_even: selected step dominated nothing new");
        Rational share(1, static_cast<long long>(step.x_set.size()));
        for (Vertex x : step.x_set) {
            if (!map.sources[static_cast<std::size_t>(x)].empty())
                throw Error("spread_even: vertex charged twice");
            map.charge[static_cast<std::size_t>(x)] += share;
            map.sources[static_cast<std::size_t>(x)].push_back(step.vertex);
        }
    }
    return map;
}

inline Rational closed_neighborhood_charge(const ChargeMap& map, const Graph& g, Vertex v) {
    Rational total = map.charge[static_cast<std::size_t>(v)];
    for (Vertex u : g.neighbors(v)) total += map.charge[static_cast<std::size_t>(u)];
    return total;
}

// Maximum charge any single dominating-set vertex is responsible for.
inline Rational concentration(const ChargeMap& map, const Graph& g, const std::vector<Vertex>& opt) {
    if (!is_dominating(g, opt)) throw Error("concentration: candidate set is not dominating");
    Rational best(0);
    for (Vertex v : opt) best = std::max(best, closed_neighborhood_charge(map, g, v));
    return best;
}

struct ChargeOneReport {
    std::vector<Vertex> charge_one;  // vertices whose total charge is exactly 1
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// Structural facts about fully charged vertices: pairwise non-adjacent, no
// shared neighbor, and no closed neighborhood holds two of them.
inline ChargeOneReport charge_one_structure(const ChargeMap& map, const GameTrace& trace) {
    const Graph& g = trace.instance.graph;
    ChargeOneReport report;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (map.charge[static_cast<std::size_t>(v)] == Rational(1)) report.charge_one.push_back(v);

    const auto& ones = report.charge_one;
    for (std::size_t a = 0; a < ones.size(); ++a) {
        for (std::size_t b = a + 1; b < ones.size(); ++b) {
            if (g.has_edge(ones[a], ones[b]))
                report.violations.push_back("adjacent fully charged vertices " + std::to_string(ones[a]) +
                                            " and " + std::to_string(ones[b]));
            for (Vertex w : g.neighbors(ones[a]))
                if (w != ones[b] && g.has_edge(w, ones[b]))
                    report.violations.push_back("fully charged vertices " + std::to_string(ones[a]) + " and " +
                                                std::to_string(ones[b]) + " share neighbor " + std::to_string(w));
        }
    }
    for (int w = 0; w < g.vertex_count(); ++w) {
        int inside = 0;
        for (Vertex v : ones)
            if (v == w || g.has_edge(v, w)) ++inside;
        if (inside > 1)
            report.violations.push_back("closed neighborhood of " + std::to_string(w) + " holds " +
                                        std::to_string(inside) + " fully charged vertices");
    }
    return report;
}

struct HeavyLightPartition {
    VertexSet heavy;
    VertexSet light;
    int threshold = 0;           // undominated-neighbor count that makes a selection heavy
    bool heavy_count_ok = true;  // |heavy| <= floor(n / threshold)
};

// Split the selected vertices by how many undominated neighbors they had at
// selection time; the heavy side is capped by n over the threshold.
inline HeavyLightPartition classify_heavy_light(const GameTrace& trace, int delta) {
    if (delta < 1) throw Error("classify_heavy_light: maximum degree must be at least 1");
    HeavyLightPartition part;
    part.threshold = static_cast<int>(isqrt_ceil(delta));
    std::vector<Vertex> heavy, light;
    for (const StepRecord& step : trace.steps) {
        if (!step.decision) continue;
        if (step.undominated_neighbor_count >= part.threshold)
            heavy.push_back(step.vertex);
        else
            light.push_back(step.vertex);
    }
    part.heavy = VertexSet(std::move(heavy));
    part.light = VertexSet(std::move(light));
    int cap = trace.instance.graph.vertex_count() / part.threshold;
    part.heavy_count_ok = static_cast<int>(part.heavy.size()) <= cap;
    return part;
}

struct BoundedDegreeCharge {
    ChargeMap map;                                   // nonzero only on the reference set
    std::vector<std::vector<Vertex>> light_chargers;  // distinct light sources per vertex
    std::vector<std::string> violations;
    bool conserved = false;

    explicit BoundedDegreeCharge(int n) : map(n), light_chargers(static_cast<std::size_t>(n)) {}
};

// Three-rule redistribution of the algorithm's selections onto a reference
// minimum dominating set: members keep their own unit, heavy outsiders
// average over the whole set, light outsiders follow the vertices they saved.
inline BoundedDegreeCharge spread_bounded_degree(const GameTrace& trace, const std::vector<Vertex>& opt,
                                                 const HeavyLightPartition& part) {
    const Graph& g = trace.instance.graph;
    if (!trace.feasible) throw Error("spread_bounded_degree: trace is not feasible");
    if (!is_dominating(g, opt)) throw Error("spread_bounded_degree: reference set is not dominating");

    const int n = g.vertex_count();
    BoundedDegreeCharge out(n);
    std::vector<bool> in_opt(static_cast<std::size_t>(n), false);
    for (Vertex v : opt) in_opt[static_cast<std::size_t>(v)] = true;

    std::vector<int> reveal_pos(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < trace.instance.order.size(); ++i)
        reveal_pos[static_cast<std::size_t>(trace.instance.order[i])] = static_cast<int>(i);

    // Route a dominated vertex to itself when in the set, otherwise to its
    // earliest revealed set neighbor.
    auto route = [&](Vertex v) {
        if (in_opt[static_cast<std::size_t>(v)]) return v;
        Vertex best = -1;
        for (Vertex u : g.neighbors(v)) {
            if (!in_opt[static_cast<std::size_t>(u)]) continue;
            if (best == -1 || reveal_pos[static_cast<std::size_t>(u)] < reveal_pos[static_cast<std::size_t>(best)])
                best = u;
        }
        return best;  // never -1 while the set dominates
    };

    auto add_light_charger = [&](Vertex target, Vertex source) {
        auto& list = out.light_chargers[static_cast<std::size_t>(target)];
        if (std::find(list.begin(), list.end(), source) == list.end()) list.push_back(source);
    };

    Rational opt_share(1, static_cast<long long>(opt.size()));
    for (const StepRecord& step : trace.steps) {
        if (!step.decision) continue;
        Vertex v = step.vertex;
        bool heavy = part.heavy.contains(v);
        if (in_opt[static_cast<std::size_t>(v)]) {
            out.map.charge[static_cast<std::size_t>(v)] += Rational(1);
            out.map.sources[static_cast<std::size_t>(v)].push_back(v);
            if (!heavy) add_light_charger(v, v);
            continue;
        }
        if (heavy) {
            for (Vertex u : opt) {
                out.map.charge[static_cast<std::size_t>(u)] += opt_share;
                out.map.sources[static_cast<std::size_t>(u)].push_back(v);
            }
            continue;
        }
        if (step.save_set.empty()) {
            out.violations.push_back("light selected vertex " + std::to_string(v) +
                                     " outside the reference set saved nothing");
            continue;
        }
        Rational share(1, static_cast<long long>(step.save_set.size()));
        for (Vertex saved : step.save_set) {
            Vertex target = route(saved);
            out.map.charge[static_cast<std::size_t>(target)] += share;
            out.map.sources[static_cast<std::size_t>(target)].push_back(v);
            add_light_charger(target, v);
        }
    }
    out.conserved = out.violations.empty() &&
                    total_charge(out.map) == Rational(static_cast<long long>(trace.selected.size()));
    return out;
}

inline int max_distinct_light_chargers(const BoundedDegreeCharge& charge, const std::vector<Vertex>& opt) {
    int best = 0;
    for (Vertex v : opt)
        best = std::max(best, static_cast<int>(charge.light_chargers[static_cast<std::size_t>(v)].size()));
    return best;
}

}  // namespace ods

#endif
