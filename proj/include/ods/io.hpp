#ifndef ODS_IO_HPP
#define ODS_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ods/adversaries.hpp"
#include "ods/charging.hpp"
#include "ods/graph.hpp"
#include "ods/harness.hpp"
#include "ods/rational.hpp"
#include "ods/revelation.hpp"

namespace ods {

// Raised for malformed input documents; callers map it to a usage-style exit.
struct ParseError : Error {
    using Error::Error;
};

using Json = nlohmann::json;

namespace detail {

inline const Json& require_field(const Json& j, const char* name, const char* ctx) {
    if (!j.is_object()) throw ParseError(std::string(ctx) + ": expected a JSON object");
    if (!j.contains(name)) throw ParseError(std::string(ctx) + ": missing field '" + name + "'");
    return j.at(name);
}

inline int field_int(const Json& j, const char* name, const char* ctx) {
    const Json& f = require_field(j, name, ctx);
    if (!f.is_number_integer()) throw ParseError(std::string(ctx) + ": field '" + name + "' must be an integer");
    return f.get<int>();
}

inline std::vector<int> field_int_array(const Json& j, const char* name, const char* ctx) {
    const Json& f = require_field(j, name, ctx);
    if (!f.is_array()) throw ParseError(std::string(ctx) + ": field '" + name + "' must be an array");
    std::vector<int> out;
    for (const Json& item : f) {
        if (!item.is_number_integer())
            throw ParseError(std::string(ctx) + ": field '" + name + "' must hold integers");
        out.push_back(item.get<int>());
    }
    return out;
}

inline std::vector<Edge> field_edges(const Json& j, const char* name, const char* ctx) {
    const Json& f = require_field(j, name, ctx);
    if (!f.is_array()) throw ParseError(std::string(ctx) + ": field '" + name + "' must be an array");
    std::vector<Edge> out;
    for (const Json& item : f) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer())
            throw ParseError(std::string(ctx) + ": field '" + name + "' must hold pairs of integers");
        int u = item[0].get<int>();
        int v = item[1].get<int>();
        out.push_back({std::min(u, v), std::max(u, v)});
    }
    return out;
}

}  // namespace detail

inline Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.vertex_count();
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back(Json::array({e.first, e.second}));
    j["edges"] = std::move(edges);
    return j;
}

inline Graph graph_from_json(const Json& j, const char* ctx = "graph") {
    int n = detail::field_int(j, "n", ctx);
    std::vector<Edge> edges = detail::field_edges(j, "edges", ctx);
    try {
        return Graph(n, edges);
    } catch (const Error& e) {
        throw ParseError(std::string(ctx) + ": " + e.what());
    }
}

inline Json instance_to_json(const OnlineInstance& inst) {
    Json j = graph_to_json(inst.graph);
    j["order"] = inst.order;
    return j;
}

inline OnlineInstance instance_from_json(const Json& j) {
    Graph g = graph_from_json(j, "instance");
    std::vector<int> order = detail::field_int_array(j, "order", "instance");
    try {
        if (auto step = validate_order(g, order))
            throw Error("order breaks connected revelation at step " + std::to_string(*step));
    } catch (const Error& e) {
        throw ParseError(std::string("instance: ") + e.what());
    }
    return OnlineInstance{std::move(g), std::move(order)};
}

inline Json trace_to_json(const GameTrace& trace) {
    Json j;
    j["decisions"] = trace.decisions;
    j["selected"] = trace.selected;
    j["feasible"] = trace.feasible;
    Json saves = Json::array();
    Json x_sets = Json::array();
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const StepRecord& step = trace.steps[i];
        if (!step.save_set.empty()) saves.push_back(Json::array({static_cast<int>(i + 1), step.save_set}));
        if (step.decision) x_sets.push_back(Json::array({static_cast<int>(i + 1), step.x_set}));
    }
    j["saves"] = std::move(saves);
    j["x_sets"] = std::move(x_sets);
    return j;
}

inline std::vector<bool> decisions_from_trace_json(const Json& j) {
    const Json& f = detail::require_field(j, "decisions", "trace");
    if (!f.is_array()) throw ParseError("trace: field 'decisions' must be an array");
    std::vector<bool> out;
    for (const Json& item : f) {
        if (!item.is_boolean()) throw ParseError("trace: field 'decisions' must hold booleans");
        out.push_back(item.get<bool>());
    }
    return out;
}

inline Json opt_to_json(const std::vector<Vertex>& opt) {
    Json j;
    j["opt"] = opt;
    j["size"] = static_cast<int>(opt.size());
    return j;
}

struct AuditReport {
    bool conserved = false;
    Rational concentration;
    std::vector<std::string> violations;
};

inline Json audit_report_to_json(const AuditReport& report) {
    Json j;
    j["conserved"] = report.conserved;
    j["concentration"] = rational_to_string(report.concentration);
    j["violations"] = report.violations;
    return j;
}

inline Json run_row_to_json(const RunRow& row) {
    Json j;
    j["class"] = row.class_tag;
    j["n"] = row.n;
    j["param"] = row.param;
    j["algorithm"] = row.algorithm;
    j["alg_size"] = row.alg_size;
    j["opt_size"] = row.opt_size;
    j["ratio_num"] = rational_num_string(row.ratio);
    j["ratio_den"] = rational_den_string(row.ratio);
    j["feasible"] = row.feasible;
    j["certificate"] = row.certificate;
    return j;
}

inline Json ratio_report_to_json(const RatioReport& report) {
    Json j;
    Json rows = Json::array();
    for (const RunRow& row : report.rows) rows.push_back(run_row_to_json(row));
    j["rows"] = std::move(rows);
    j["max_ratio"] = rational_to_string(report.max_ratio);
    j["mean_ratio"] = rational_to_string(report.mean_ratio);
    j["feasible_count"] = report.feasible_count;
    j["infeasible_count"] = report.infeasible_count;
    return j;
}

inline Json adversary_report_to_json(const AdversaryOutcome& outcome) {
    Json j;
    j["class"] = outcome.class_tag;
    j["param"] = outcome.class_param;
    j["n"] = outcome.instance.graph.vertex_count();
    j["alg_size"] = static_cast<int>(outcome.trace.selected.size());
    j["witness"] = outcome.opt_witness;
    j["witness_size"] = static_cast<int>(outcome.opt_witness.size());
    j["feasible"] = outcome.trace.feasible;
    j["guaranteed"] = rational_to_string(outcome.guaranteed_ratio_lower_bound);
    if (outcome.trace.feasible) {
        Rational ratio(static_cast<long long>(outcome.trace.selected.size()),
                       static_cast<long long>(outcome.opt_witness.size()));
        j["ratio"] = rational_to_string(ratio);
    }
    j["class_check"] = check_claimed_class(outcome.class_tag, outcome.instance.graph, outcome.class_param);
    if (!outcome.regions.empty()) {
        Json regions = Json::array();
        for (const RegionReport& r : outcome.regions) {
            Json region;
            region["vertices"] = r.vertices;
            region["witness"] = r.witness;
            region["closed"] = r.closed;
            region["alg_selected"] = r.alg_selected;
            regions.push_back(std::move(region));
        }
        j["regions"] = std::move(regions);
    }
    return j;
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError("file '" + path + "' is not valid JSON: " + std::string(e.what()));
    }
}

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file '" + path + "'");
    out << j.dump(2) << '\n';
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file '" + path + "'");
    out << text;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace ods

#endif
