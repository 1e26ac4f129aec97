#ifndef ODS_ALGORITHMS_HPP
#define ODS_ALGORITHMS_HPP

#include <string>
#include <vector>

#include "ods/revelation.hpp"

namespace ods {

enum class AlgKind { Greedy, KDominate, AcceptAll, Scripted };

struct AlgorithmSpec {
    AlgKind kind = AlgKind::Greedy;
    int k = 2;                 // threshold for KDominate
    std::vector<bool> script;  // decisions for Scripted
};

// Select exactly the vertices that are undominated when revealed.
inline bool greedy_decide(const DecisionView& view) {
    return view.pending_undominated;
}

// Select when at least k visible neighbors are undominated, or when this
// reveal is the last chance for some vertex (a nonempty save set).
inline bool k_dominate_decide(int k, const DecisionView& view) {
    return view.undominated_neighbor_count >= k || !view.save_set->empty();
}

// cyclic: wrap the script around instead of requiring one entry per step.
inline Decider make_decider(const AlgorithmSpec& spec, bool cyclic = false) {
    switch (spec.kind) {
        case AlgKind::Greedy:
            return [](const DecisionView& v) { return greedy_decide(v); };
        case AlgKind::KDominate: {
            int k = spec.k;
            if (k < 1) throw Error("k-dominate: k must be positive");
            return [k](const DecisionView& v) { return k_dominate_decide(k, v); };
        }
        case AlgKind::AcceptAll:
            return [](const DecisionView&) { return true; };
        case AlgKind::Scripted: {
            std::vector<bool> script = spec.script;
            if (script.empty()) throw Error("scripted: empty script");
            if (cyclic) {
                return [script](const DecisionView& v) {
                    return script[static_cast<std::size_t>(v.step - 1) % script.size()];
                };
            }
            return [script](const DecisionView& v) {
                if (v.step < 1 || v.step > static_cast<int>(script.size()))
                    throw Error("scripted: script shorter than the instance");
                return script[static_cast<std::size_t>(v.step - 1)];
            };
        }
    }
    throw Error("algorithm: unknown kind");
}

inline GameTrace run_algorithm(const OnlineInstance& inst, const AlgorithmSpec& spec) {
    if (spec.kind == AlgKind::Scripted &&
        static_cast<int>(spec.script.size()) != inst.graph.vertex_count())
        throw Error("scripted: script length must match the vertex count");
    return run_game(inst, make_decider(spec));
}

inline std::string algorithm_name(const AlgorithmSpec& spec) {
    switch (spec.kind) {
        case AlgKind::Greedy: return "greedy";
        case AlgKind::KDominate: return std::to_string(spec.k) + "-dominate";
        case AlgKind::AcceptAll: return "accept-all";
        case AlgKind::Scripted: return "scripted";
    }
    return "unknown";
}

}  // namespace ods

#endif
