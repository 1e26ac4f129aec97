#include <catch2/catch_amalgamated.hpp>

#include "ods/adversaries.hpp"
#include "ods/algorithms.hpp"
#include "ods/charging.hpp"
#include "ods/harness.hpp"
#include "ods/opt.hpp"

using ods::AdversaryOutcome;
using ods::AlgKind;
using ods::AlgorithmSpec;
using ods::Rational;

namespace {

using Builder = std::function<AdversaryOutcome(const ods::Decider&)>;

AdversaryOutcome build(const Builder& builder, const AlgorithmSpec& spec) {
    auto decider = ods::make_decider(spec);
    return builder(decider);
}

void check_outcome_wellformed(const AdversaryOutcome& out) {
    const ods::Graph& g = out.instance.graph;
    CHECK(ods::is_dominating(g, out.opt_witness));
    CHECK_FALSE(ods::validate_order(g, out.instance.order).has_value());
    CHECK(ods::check_claimed_class(out.class_tag, g, out.class_param));
    if (out.trace.feasible) {
        // every feasible play pays at least the advertised factor
        Rational ratio(static_cast<long long>(out.trace.selected.size()),
                       static_cast<long long>(out.opt_witness.size()));
        CHECK(ratio >= out.guaranteed_ratio_lower_bound);
    }
}

struct Frozen {
    AlgorithmSpec spec;
    int n;
    int alg_size;
    int witness_size;
};

void check_frozen(const Builder& builder, const std::vector<Frozen>& rows, const Rational& guaranteed) {
    for (const Frozen& row : rows) {
        AdversaryOutcome out = build(builder, row.spec);
        INFO("algorithm " << ods::algorithm_name(row.spec));
        CHECK(out.instance.graph.vertex_count() == row.n);
        CHECK(static_cast<int>(out.trace.selected.size()) == row.alg_size);
        CHECK(static_cast<int>(out.opt_witness.size()) == row.witness_size);
        CHECK(out.trace.feasible);
        CHECK(out.guaranteed_ratio_lower_bound == guaranteed);
        check_outcome_wellformed(out);
    }
}

// deterministic pseudo random scripts driving the adversary as a worst case
// style fuzz: every outcome must stay inside the advertised envelope
void fuzz_adversary(const Builder& builder, int runs, std::uint64_t seed_base, int brute_cap = 26) {
    for (int i = 0; i < runs; ++i) {
        ods::Rng rng(seed_base + static_cast<std::uint64_t>(i));
        std::vector<bool> script;
        int len = 1 + static_cast<int>(rng.below(8));
        for (int b = 0; b < len; ++b) script.push_back(rng.chance(50));
        auto decider = ods::make_decider({AlgKind::Scripted, 2, script}, true);
        AdversaryOutcome out = builder(decider);
        check_outcome_wellformed(out);
        if (out.instance.graph.vertex_count() <= brute_cap) {
            auto opt = ods::brute_force_opt(out.instance.graph);
            CHECK(opt.size() <= out.opt_witness.size());
        }
    }
}

}  // namespace

TEST_CASE("tree adversary") {
    Builder b4 = [](const ods::Decider& d) { return ods::adversary_tree(d, 4); };
    check_frozen(b4,
                 {{{AlgKind::Greedy, 2, {}}, 13, 9, 5},
                  {{AlgKind::KDominate, 2, {}}, 16, 8, 5},
                  {{AlgKind::AcceptAll, 2, {}}, 16, 16, 5}},
                 Rational(5, 4));

    Builder b50 = [](const ods::Decider& d) { return ods::adversary_tree(d, 50); };
    check_frozen(b50,
                 {{{AlgKind::Greedy, 2, {}}, 151, 101, 51},
                  {{AlgKind::KDominate, 2, {}}, 200, 100, 51},
                  {{AlgKind::AcceptAll, 2, {}}, 200, 200, 51}},
                 Rational(97, 50));

    auto greedy = ods::make_decider({AlgKind::Greedy, 2, {}});
    CHECK_THROWS_AS(ods::adversary_tree(greedy, 3), ods::Error);

    fuzz_adversary(b4, 120, 1000);
    // the witness stays within one of the true optimum for small traps
    for (int k = 4; k <= 6; ++k) {
        for (auto kind : {AlgKind::Greedy, AlgKind::KDominate}) {
            AdversaryOutcome out = build([k](const ods::Decider& d) { return ods::adversary_tree(d, k); },
                                         {kind, 2, {}});
            auto opt = ods::brute_force_opt(out.instance.graph);
            CHECK(out.opt_witness.size() <= opt.size() + 1);
        }
    }
}

TEST_CASE("cactus adversary") {
    Builder b1 = [](const ods::Decider& d) { return ods::adversary_cactus(d, 1); };
    Builder b2 = [](const ods::Decider& d) { return ods::adversary_cactus(d, 2); };
    Builder b3 = [](const ods::Decider& d) { return ods::adversary_cactus(d, 3); };

    check_frozen(b1, {{{AlgKind::AcceptAll, 2, {}}, 21, 21, 6}}, Rational(3, 2));
    check_frozen(b2,
                 {{{AlgKind::AcceptAll, 2, {}}, 30, 30, 8}, {{AlgKind::KDominate, 2, {}}, 30, 17, 8}},
                 Rational(11, 6));
    check_frozen(b3, {{{AlgKind::Greedy, 2, {}}, 13, 10, 4}}, Rational(2, 1));

    auto greedy = ods::make_decider({AlgKind::Greedy, 2, {}});
    CHECK_THROWS_AS(ods::adversary_cactus(greedy, 0), ods::Error);

    // closed regions force five halves on their own for feasible play
    for (int r = 1; r <= 3; ++r) {
        for (auto kind : {AlgKind::Greedy, AlgKind::KDominate, AlgKind::AcceptAll}) {
            AdversaryOutcome out = build(
                [r](const ods::Decider& d) { return ods::adversary_cactus(d, r); }, {kind, 2, {}});
            REQUIRE(out.trace.feasible);
            for (const auto& region : out.regions) {
                if (region.closed)
                    CHECK(2 * region.alg_selected >= 5 * static_cast<int>(region.witness.size()));
            }
        }
    }

    fuzz_adversary(b1, 120, 2000);
    fuzz_adversary(b2, 60, 2500);  // n=30 exceeds the exact-solver cap; envelope checks only
}

TEST_CASE("degree bounded adversary") {
    Builder b4 = [](const ods::Decider& d) { return ods::adversary_delta(d, 4); };
    check_frozen(b4,
                 {{{AlgKind::Greedy, 2, {}}, 13, 9, 5},
                  {{AlgKind::AcceptAll, 2, {}}, 15, 15, 3},
                  {{AlgKind::KDominate, 2, {}}, 15, 7, 3}},
                 Rational(1, 1));
    Builder b16 = [](const ods::Decider& d) { return ods::adversary_delta(d, 16); };
    check_frozen(b16, {{{AlgKind::KDominate, 4, {}}, 85, 21, 5}}, Rational(2, 1));

    auto greedy = ods::make_decider({AlgKind::Greedy, 2, {}});
    CHECK_THROWS_AS(ods::adversary_delta(greedy, 3), ods::Error);
    CHECK_THROWS_AS(ods::adversary_delta(greedy, 5), ods::Error);  // not a perfect square

    // the instance really respects the degree bound, and heavy selections
    // stay under the counting cap
    for (int delta : {4, 9, 16}) {
        for (auto kind : {AlgKind::Greedy, AlgKind::KDominate, AlgKind::AcceptAll}) {
            AdversaryOutcome out = build(
                [delta](const ods::Decider& d) { return ods::adversary_delta(d, delta); }, {kind, 2, {}});
            CHECK(ods::max_degree(out.instance.graph) <= delta);
            auto part = ods::classify_heavy_light(out.trace, delta);
            CHECK(part.heavy_count_ok);
            check_outcome_wellformed(out);
        }
    }

    fuzz_adversary(b4, 120, 3000);
}

TEST_CASE("forbidden star adversary") {
    Builder b5 = [](const ods::Decider& d) { return ods::adversary_claw(d, 5); };
    check_frozen(b5,
                 {{{AlgKind::Greedy, 2, {}}, 8, 4, 1}, {{AlgKind::AcceptAll, 2, {}}, 12, 12, 1}},
                 Rational(4, 1));
    Builder b3 = [](const ods::Decider& d) { return ods::adversary_claw(d, 3); };
    check_frozen(b3, {{{AlgKind::KDominate, 2, {}}, 4, 2, 1}}, Rational(2, 1));

    auto greedy = ods::make_decider({AlgKind::Greedy, 2, {}});
    CHECK_THROWS_AS(ods::adversary_claw(greedy, 2), ods::Error);

    // freedom from the forbidden star regardless of the opponent
    for (int t = 3; t <= 5; ++t) {
        for (auto kind : {AlgKind::Greedy, AlgKind::KDominate, AlgKind::AcceptAll}) {
            AdversaryOutcome out = build(
                [t](const ods::Decider& d) { return ods::adversary_claw(d, t); }, {kind, 2, {}});
            CHECK(ods::is_k1t_free(out.instance.graph, t));
            // single vertex witnesses make the ratio equal the selection count
            CHECK(out.opt_witness.size() == 1);
        }
    }

    fuzz_adversary(b3, 120, 4000);
    fuzz_adversary(b5, 120, 4500);
}

TEST_CASE("threshold adversary") {
    Builder b5 = [](const ods::Decider& d) { return ods::adversary_threshold(d, 5); };
    check_frozen(b5,
                 {{{AlgKind::Greedy, 2, {}}, 10, 6, 1}, {{AlgKind::KDominate, 2, {}}, 25, 5, 1}},
                 Rational(1, 1));
    Builder b3 = [](const ods::Decider& d) { return ods::adversary_threshold(d, 3); };
    check_frozen(b3, {{{AlgKind::AcceptAll, 2, {}}, 9, 9, 1}}, Rational(1, 1));

    auto greedy = ods::make_decider({AlgKind::Greedy, 2, {}});
    CHECK_THROWS_AS(ods::adversary_threshold(greedy, 2), ods::Error);

    // selections squared always reach the instance size
    for (int k = 3; k <= 10; ++k) {
        std::vector<AlgorithmSpec> specs = {{AlgKind::Greedy, 2, {}},
                                            {AlgKind::KDominate, 2, {}},
                                            {AlgKind::KDominate, 3, {}},
                                            {AlgKind::AcceptAll, 2, {}}};
        for (const auto& spec : specs) {
            AdversaryOutcome out = build(
                [k](const ods::Decider& d) { return ods::adversary_threshold(d, k); }, spec);
            REQUIRE(out.trace.feasible);
            long long s = static_cast<long long>(out.trace.selected.size());
            CHECK(s * s >= out.instance.graph.vertex_count());
            check_outcome_wellformed(out);
        }
    }

    // the real optimum is a single vertex
    for (int k = 3; k <= 5; ++k) {
        AdversaryOutcome out = build(
            [k](const ods::Decider& d) { return ods::adversary_threshold(d, k); }, {AlgKind::Greedy, 2, {}});
        CHECK(ods::brute_force_opt(out.instance.graph).size() == 1);
    }

    fuzz_adversary(b3, 120, 5000);
}

TEST_CASE("planar bipartite adversary") {
    Builder b4 = [](const ods::Decider& d) { return ods::adversary_planar_bipartite(d, 4); };
    check_frozen(b4, {{{AlgKind::Greedy, 2, {}}, 22, 11, 4}}, Rational(2, 1));
    Builder b10 = [](const ods::Decider& d) { return ods::adversary_planar_bipartite(d, 10); };
    check_frozen(b10, {{{AlgKind::KDominate, 2, {}}, 224, 20, 4}}, Rational(5, 1));
    Builder b2 = [](const ods::Decider& d) { return ods::adversary_planar_bipartite(d, 2); };
    check_frozen(b2, {{{AlgKind::Greedy, 2, {}}, 8, 4, 3}}, Rational(1, 1));

    AdversaryOutcome lv0 = ods::adversary_planar_bipartite(
        ods::make_decider({AlgKind::AcceptAll, 2, {}}), 3, 0);
    CHECK(lv0.instance.graph.vertex_count() == 14);
    CHECK(lv0.trace.selected.size() == 14);
    CHECK(lv0.opt_witness.size() == 2);
    check_outcome_wellformed(lv0);

    auto greedy = ods::make_decider({AlgKind::Greedy, 2, {}});
    CHECK_THROWS_AS(ods::adversary_planar_bipartite(greedy, 1), ods::Error);
    CHECK_THROWS_AS(ods::adversary_planar_bipartite(greedy, 3, -1), ods::Error);

    // both planarity budget and bipartiteness hold whatever the opponent does
    for (auto kind : {AlgKind::Greedy, AlgKind::KDominate, AlgKind::AcceptAll}) {
        AdversaryOutcome out = build(b4, {kind, 2, {}});
        CHECK(ods::is_bipartite(out.instance.graph));
        CHECK(ods::euler_planar_bipartite_bound(out.instance.graph));
    }

    fuzz_adversary(b2, 120, 6000);
}

TEST_CASE("series parallel adversary") {
    Builder b2 = [](const ods::Decider& d) { return ods::adversary_sp(d, 2); };
    check_frozen(b2,
                 {{{AlgKind::Greedy, 2, {}}, 12, 6, 3}, {{AlgKind::AcceptAll, 2, {}}, 8, 8, 2}},
                 Rational(1, 1));
    Builder b10 = [](const ods::Decider& d) { return ods::adversary_sp(d, 10); };
    check_frozen(b10,
                 {{{AlgKind::KDominate, 2, {}}, 112, 12, 2}, {{AlgKind::KDominate, 3, {}}, 112, 12, 2}},
                 Rational(5, 1));

    auto greedy = ods::make_decider({AlgKind::Greedy, 2, {}});
    CHECK_THROWS_AS(ods::adversary_sp(greedy, 1), ods::Error);

    for (auto kind : {AlgKind::Greedy, AlgKind::KDominate, AlgKind::AcceptAll}) {
        AdversaryOutcome out = build(b2, {kind, 2, {}});
        CHECK(ods::treewidth_at_most_2(out.instance.graph));
    }

    fuzz_adversary(b2, 120, 7000);
}

TEST_CASE("threshold builder") {
    ods::Graph triangle = ods::threshold_build(2, {0, 0});
    CHECK(triangle.vertex_count() == 3);
    CHECK(triangle.edge_count() == 3);

    ods::Graph g = ods::threshold_build(4, {3, 2, 0, 1});
    CHECK(ods::is_threshold(g));
    CHECK(ods::brute_force_opt(g).size() == 1);
    CHECK_THROWS_AS(ods::threshold_build(1, {0}), ods::Error);
}
