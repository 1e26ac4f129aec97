#ifndef ODS_ADVERSARIES_HPP
#define ODS_ADVERSARIES_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "ods/algorithms.hpp"
#include "ods/graph.hpp"
#include "ods/rational.hpp"
#include "ods/recognizers.hpp"
#include "ods/revelation.hpp"

namespace ods {

struct RegionReport {
    std::vector<Vertex> vertices;
    std::vector<Vertex> witness;
    bool closed = true;  // closed regions guarantee ratio at least 5/2 on their own
    int alg_selected = 0;
};

struct AdversaryOutcome {
    OnlineInstance instance;
    GameTrace trace;
    std::vector<Vertex> opt_witness;
    std::string class_tag;
    long long class_param = 0;
    Rational guaranteed_ratio_lower_bound;
    std::vector<RegionReport> regions;
};

namespace detail {

struct Driver {
    Game game;
    const Decider& alg;

    explicit Driver(const Decider& alg_in) : alg(alg_in) {}
    Vertex fresh() { return game.create_vertex(); }
    bool reveal(Vertex v, std::vector<Vertex> nbrs) {
        game.reveal(v, std::move(nbrs));
        return game.decide(alg(game.view()));
    }
};

inline AdversaryOutcome finish(Driver& d, std::string tag, long long param, Rational guaranteed,
                               std::vector<Vertex> witness, std::vector<RegionReport> regions = {}) {
    GameTrace trace = d.game.finalize();
    std::sort(witness.begin(), witness.end());
    witness.erase(std::unique(witness.begin(), witness.end()), witness.end());
    if (!is_dominating(trace.instance.graph, witness))
        throw Error("adversary: constructed witness is not dominating");
    for (RegionReport& r : regions) {
        std::sort(r.vertices.begin(), r.vertices.end());
        std::sort(r.witness.begin(), r.witness.end());
        r.alg_selected = 0;
        for (Vertex v : r.vertices)
            if (std::binary_search(trace.selected.begin(), trace.selected.end(), v)) ++r.alg_selected;
    }
    AdversaryOutcome out{trace.instance, std::move(trace), std::move(witness),
                         std::move(tag),  param,            std::move(guaranteed),
                         std::move(regions)};
    return out;
}

}  // namespace detail

// Revelation-tree trap: per-subtree chains of degree-3 vertices. Any algorithm
// ends at ratio at least (2k - 3) / k against the reported witness.
inline AdversaryOutcome adversary_tree(const Decider& alg, int k) {
    if (k < 4) throw Error("adversary_tree: k must be at least 4");
    detail::Driver d(alg);
    Vertex v1 = d.fresh();
    std::vector<Vertex> children;
    for (int i = 0; i < k; ++i) children.push_back(d.fresh());
    d.reveal(v1, children);

    std::vector<Vertex> witness{v1};
    bool stopped = false;
    for (int i = 0; i < k && !stopped; ++i) {
        std::vector<std::pair<Vertex, Vertex>> chain;  // selected vertex, side child
        Vertex cur = children[static_cast<std::size_t>(i)];
        Vertex parent = v1;
        while (true) {
            Vertex a = d.fresh();
            Vertex b = d.fresh();
            bool sel = d.reveal(cur, {parent, a, b});
            if (!sel) {
                d.reveal(a, {cur});
                d.reveal(b, {cur});
                for (auto [z, s] : chain) {
                    Vertex t = d.fresh();
                    d.reveal(s, {z, t});
                    d.reveal(t, {s});
                    witness.push_back(s);
                }
                witness.push_back(cur);
                break;
            }
            chain.emplace_back(cur, b);
            if (static_cast<int>(chain.size()) == k) {
                d.reveal(a, {cur});
                d.reveal(b, {cur});
                for (std::size_t m = 0; m + 1 < chain.size(); ++m) {
                    auto [z, s] = chain[m];
                    Vertex t = d.fresh();
                    d.reveal(s, {z, t});
                    d.reveal(t, {s});
                    witness.push_back(s);
                }
                witness.push_back(cur);
                for (int rest = i + 1; rest < k; ++rest)
                    d.reveal(children[static_cast<std::size_t>(rest)], {v1});
                stopped = true;
                break;
            }
            parent = cur;
            cur = a;
        }
    }
    return detail::finish(d, "tree", k, Rational(2 * k - 3, k), std::move(witness));
}

namespace detail {

struct GadgetResult {
    Vertex witness;
    std::vector<Vertex> vertices;
};

// Cactus gadget on a visible unrevealed root: forces two selections against
// one witness vertex. 'existing' lists the root's already disclosed neighbors.
inline GadgetResult cactus_gadget(Driver& d, Vertex root, std::vector<Vertex> existing) {
    Vertex cc = d.fresh();
    Vertex cd = d.fresh();
    std::vector<Vertex> nbrs = std::move(existing);
    nbrs.push_back(cc);
    nbrs.push_back(cd);
    bool sel = d.reveal(root, nbrs);
    if (!sel) {
        d.reveal(cc, {root});
        d.reveal(cd, {root});
        return {root, {root, cc, cd}};
    }
    d.reveal(cc, {root, cd});
    Vertex x = d.fresh();
    d.reveal(cd, {root, cc, x});
    d.reveal(x, {cd});
    return {cd, {root, cc, cd, x}};
}

}  // namespace detail

// Cycle-laced trap: every enclosed region yields ratio at least 5/2; the
// single open tail per game is amortized by the round budget.
inline AdversaryOutcome adversary_cactus(const Decider& alg, int rounds) {
    if (rounds < 1) throw Error("adversary_cactus: rounds must be at least 1");
    detail::Driver d(alg);
    Vertex v1 = d.fresh();
    std::vector<Vertex> children;
    for (int i = 0; i < rounds; ++i) children.push_back(d.fresh());
    d.reveal(v1, children);

    std::vector<Vertex> witness{v1};
    std::vector<RegionReport> regions;
    bool stopped = false;
    for (int t = 0; t < rounds; ++t) {
        Vertex c = children[static_cast<std::size_t>(t)];
        if (stopped) {
            d.reveal(c, {v1});
            continue;
        }
        Vertex k1 = d.fresh();
        Vertex k2 = d.fresh();
        Vertex k3 = d.fresh();
        if (!d.reveal(c, {v1, k1, k2, k3})) {
            d.reveal(k1, {c});
            d.reveal(k2, {c});
            d.reveal(k3, {c});
            regions.push_back({{c, k1, k2, k3}, {c}, true, 0});
            witness.push_back(c);
            continue;
        }
        Vertex x = d.fresh();
        Vertex y = d.fresh();
        if (!d.reveal(k1, {c, k2, x, y})) {
            d.reveal(x, {k1});
            d.reveal(y, {k1});
            auto gd = detail::cactus_gadget(d, k3, {c});
            d.reveal(k2, {c, k1});
            RegionReport region{{c, k1, k2, x, y}, {k1, gd.witness}, true, 0};
            region.vertices.insert(region.vertices.end(), gd.vertices.begin(), gd.vertices.end());
            regions.push_back(std::move(region));
            witness.push_back(k1);
            witness.push_back(gd.witness);
            continue;
        }
        auto g2 = detail::cactus_gadget(d, k2, {c, k1});
        auto g3 = detail::cactus_gadget(d, k3, {c});
        RegionReport head{{c}, {g2.witness, g3.witness}, true, 0};
        head.vertices.insert(head.vertices.end(), g2.vertices.begin(), g2.vertices.end());
        head.vertices.insert(head.vertices.end(), g3.vertices.begin(), g3.vertices.end());
        regions.push_back(std::move(head));
        witness.push_back(g2.witness);
        witness.push_back(g3.witness);

        Vertex r = k1;
        Vertex cx = x;
        Vertex cy = y;
        int budget = rounds;
        while (true) {
            if (budget == 0) {
                d.reveal(cx, {r});
                d.reveal(cy, {r});
                regions.push_back({{r, cx, cy}, {r}, false, 0});
                witness.push_back(r);
                stopped = true;
                break;
            }
            Vertex c31 = d.fresh();
            Vertex c32 = d.fresh();
            if (!d.reveal(cx, {r, cy, c31, c32})) {
                d.reveal(c31, {cx});
                d.reveal(c32, {cx});
                d.reveal(cy, {r, cx});
                regions.push_back({{r, cx, cy, c31, c32}, {cx}, true, 0});
                witness.push_back(cx);
                break;
            }
            Vertex p = d.fresh();
            Vertex q = d.fresh();
            if (!d.reveal(c31, {cx, c32, p, q})) {
                d.reveal(p, {c31});
                d.reveal(q, {c31});
                Vertex l = d.fresh();
                d.reveal(cy, {r, cx, l});
                d.reveal(l, {cy});
                d.reveal(c32, {cx, c31});
                regions.push_back({{r, cx, cy, l, c31, c32, p, q}, {c31, cy}, true, 0});
                witness.push_back(c31);
                witness.push_back(cy);
                break;
            }
            Vertex l = d.fresh();
            d.reveal(cy, {r, cx, l});
            d.reveal(l, {cy});
            auto gh = detail::cactus_gadget(d, c32, {cx, c31});
            RegionReport region{{r, cx, cy, l}, {cy, gh.witness}, true, 0};
            region.vertices.insert(region.vertices.end(), gh.vertices.begin(), gh.vertices.end());
            regions.push_back(std::move(region));
            witness.push_back(cy);
            witness.push_back(gh.witness);
            r = c31;
            cx = p;
            cy = q;
            --budget;
        }
    }
    return detail::finish(d, "cactus", rounds, Rational(5 * rounds + 1, 2 * rounds + 2),
                          std::move(witness), std::move(regions));
}

// Degree-capped trap: rejections force pendant selections, acceptances get
// their grandchildren funneled into common collectors.
inline AdversaryOutcome adversary_delta(const Decider& alg, int delta) {
    if (delta < 4) throw Error("adversary_delta: maximum degree must be at least 4");
    long long root = isqrt_floor(delta);
    if (root * root != delta) throw Error("adversary_delta: maximum degree must be a perfect square");
    int s = static_cast<int>(root);

    detail::Driver d(alg);
    Vertex v1 = d.fresh();
    std::vector<Vertex> children;
    for (int i = 0; i < delta; ++i) children.push_back(d.fresh());
    d.reveal(v1, children);

    std::vector<Vertex> witness{v1};
    std::vector<std::vector<Vertex>> kids(static_cast<std::size_t>(delta));
    std::vector<bool> took(static_cast<std::size_t>(delta), false);
    for (int i = 0; i < delta; ++i) {
        std::vector<Vertex> nbrs{v1};
        for (int j = 0; j < s; ++j) {
            Vertex g = d.fresh();
            kids[static_cast<std::size_t>(i)].push_back(g);
            nbrs.push_back(g);
        }
        took[static_cast<std::size_t>(i)] = d.reveal(children[static_cast<std::size_t>(i)], nbrs);
    }

    std::vector<std::pair<Vertex, Vertex>> pool;  // grandchild, its parent
    for (int i = 0; i < delta; ++i) {
        if (took[static_cast<std::size_t>(i)]) {
            for (Vertex g : kids[static_cast<std::size_t>(i)])
                pool.emplace_back(g, children[static_cast<std::size_t>(i)]);
        } else {
            for (Vertex g : kids[static_cast<std::size_t>(i)])
                d.reveal(g, {children[static_cast<std::size_t>(i)]});
            witness.push_back(children[static_cast<std::size_t>(i)]);
        }
    }

    for (std::size_t start = 0; start < pool.size(); start += static_cast<std::size_t>(delta)) {
        std::size_t stop = std::min(pool.size(), start + static_cast<std::size_t>(delta));
        Vertex y = d.fresh();
        std::vector<Vertex> members;
        for (std::size_t m = start; m < stop; ++m) {
            d.reveal(pool[m].first, {pool[m].second, y});
            members.push_back(pool[m].first);
        }
        d.reveal(y, members);
        witness.push_back(y);
    }
    return detail::finish(d, "bounded-degree", delta, Rational(s, 2), std::move(witness));
}

// Star-free trap: cliques close around whichever vertex the algorithm drops,
// so one witness vertex dominates while forced pendants pile up.
inline AdversaryOutcome adversary_claw(const Decider& alg, int t) {
    if (t < 3) throw Error("adversary_claw: t must be at least 3");
    detail::Driver d(alg);
    Vertex v1 = d.fresh();
    std::vector<Vertex> c;
    for (int i = 0; i < t - 1; ++i) c.push_back(d.fresh());
    if (!d.reveal(v1, c)) {
        for (Vertex ci : c) d.reveal(ci, {v1});
        return detail::finish(d, "k1t-free", t, Rational(t - 1, 1), {v1});
    }

    auto others = [&](std::size_t skip) {
        std::vector<Vertex> out{v1};
        for (std::size_t m = 0; m < c.size(); ++m)
            if (m != skip) out.push_back(c[m]);
        return out;
    };

    std::vector<Vertex> first_kids;
    for (int i = 0; i < t - 2; ++i) first_kids.push_back(d.fresh());
    std::vector<Vertex> nbrs = others(0);
    nbrs.insert(nbrs.end(), first_kids.begin(), first_kids.end());
    if (!d.reveal(c[0], nbrs)) {
        for (std::size_t m = 1; m < c.size(); ++m) d.reveal(c[m], others(m));
        for (Vertex kid : first_kids) d.reveal(kid, {c[0]});
        return detail::finish(d, "k1t-free", t, Rational(t - 1, 1), {c[0]});
    }

    std::vector<Vertex> clique = first_kids;                     // grandchildren revealed as a clique
    std::vector<std::vector<Vertex>> kid_groups{first_kids};     // kid_groups[i] belongs to c[i]
    auto reveal_clique = [&](std::size_t center_limit) {
        // every grandchild created so far becomes pairwise adjacent to the
        // others and to the centers revealed from its creation through
        // c[center_limit - 1]; pendants of a rejected center stay out.
        for (std::size_t gi = 0; gi < kid_groups.size(); ++gi) {
            for (Vertex g : kid_groups[gi]) {
                std::vector<Vertex> gn;
                for (std::size_t ci = gi; ci < center_limit; ++ci) gn.push_back(c[ci]);
                for (Vertex other : clique)
                    if (other != g) gn.push_back(other);
                d.reveal(g, gn);
            }
        }
    };

    for (int j = 1; j <= t - 3; ++j) {
        std::vector<Vertex> jk;
        for (int i = 0; i < t - 3; ++i) jk.push_back(d.fresh());
        std::vector<Vertex> jn = others(static_cast<std::size_t>(j));
        jn.insert(jn.end(), clique.begin(), clique.end());
        jn.insert(jn.end(), jk.begin(), jk.end());
        bool sel = d.reveal(c[static_cast<std::size_t>(j)], jn);
        if (!sel) {
            for (std::size_t m = static_cast<std::size_t>(j) + 1; m < c.size(); ++m) d.reveal(c[m], others(m));
            reveal_clique(static_cast<std::size_t>(j) + 1);
            for (Vertex kid : jk) d.reveal(kid, {c[static_cast<std::size_t>(j)]});
            return detail::finish(d, "k1t-free", t, Rational(t - 1, 1), {c[static_cast<std::size_t>(j)]});
        }
        kid_groups.push_back(jk);
        clique.insert(clique.end(), jk.begin(), jk.end());
    }

    d.reveal(c.back(), others(c.size() - 1));
    reveal_clique(kid_groups.size());
    return detail::finish(d, "k1t-free", t, Rational(t - 1, 1), {c[static_cast<std::size_t>(t - 3)]});
}

// Dismantlable trap: the input stays a threshold graph with a universal
// witness while the algorithm is pushed past sqrt(n) selections.
inline AdversaryOutcome adversary_threshold(const Decider& alg, int k) {
    if (k < 3) throw Error("adversary_threshold: k must be at least 3");
    detail::Driver d(alg);
    Vertex v1 = d.fresh();
    std::vector<Vertex> c;
    for (int i = 0; i < k - 1; ++i) c.push_back(d.fresh());
    if (!d.reveal(v1, c)) {
        for (Vertex ci : c) d.reveal(ci, {v1});
        return detail::finish(d, "threshold", k, Rational(1, 1), {v1});
    }

    auto others = [&](std::size_t skip) {
        std::vector<Vertex> out{v1};
        for (std::size_t m = 0; m < c.size(); ++m)
            if (m != skip) out.push_back(c[m]);
        return out;
    };

    std::vector<std::vector<Vertex>> kid_groups;
    std::vector<Vertex> grand;

    // Suffix adjacency: the kids of c[i] attach to every center from c[i] on.
    auto reveal_grandkids = [&](std::size_t owner_limit) {
        for (std::size_t gi = 0; gi < owner_limit; ++gi) {
            for (Vertex g : kid_groups[gi]) {
                std::vector<Vertex> gn;
                for (std::size_t ci = gi; ci < c.size(); ++ci) gn.push_back(c[ci]);
                d.reveal(g, gn);
            }
        }
    };

    for (int j = 0; j <= k - 2; ++j) {
        std::vector<Vertex> jk;
        for (int i = 0; i < k; ++i) jk.push_back(d.fresh());
        std::vector<Vertex> jn = others(static_cast<std::size_t>(j));
        jn.insert(jn.end(), grand.begin(), grand.end());
        jn.insert(jn.end(), jk.begin(), jk.end());
        bool sel = d.reveal(c[static_cast<std::size_t>(j)], jn);
        if (!sel) {
            for (std::size_t m = static_cast<std::size_t>(j) + 1; m < c.size(); ++m) {
                std::vector<Vertex> mn = others(m);
                mn.insert(mn.end(), grand.begin(), grand.end());
                d.reveal(c[m], mn);
            }
            reveal_grandkids(static_cast<std::size_t>(j));
            for (Vertex kid : jk) d.reveal(kid, {c[static_cast<std::size_t>(j)]});
            return detail::finish(d, "threshold", k, Rational(1, 1), {c[static_cast<std::size_t>(j)]});
        }
        kid_groups.push_back(jk);
        grand.insert(grand.end(), jk.begin(), jk.end());
    }

    reveal_grandkids(kid_groups.size());
    return detail::finish(d, "threshold", k, Rational(1, 1), {c.back()});
}

// Leaf-rerouting path trap on a planar bipartite input. Rejected path
// vertices turn their leaves into forced pendants; full acceptance re-routes
// everything into two collectors and optionally restarts one level deeper.
inline AdversaryOutcome adversary_planar_bipartite(const Decider& alg, int k, int levels = 1) {
    if (k < 2) throw Error("adversary_planar_bipartite: k must be at least 2");
    if (levels < 0) throw Error("adversary_planar_bipartite: levels must be nonnegative");
    detail::Driver d(alg);
    std::vector<Vertex> witness;

    Vertex attach = -1;    // pre-created first path vertex of the next level
    Vertex prev_hub = -1;  // collector the next level's first vertex hangs from
    for (int level = 0; ; ++level) {
        std::vector<Vertex> path;
        Vertex first = attach == -1 ? d.fresh() : attach;
        path.push_back(first);
        for (int i = 1; i < k; ++i) path.push_back(d.fresh());
        Vertex odd_hub = d.fresh();   // created at the reveal of path[0]
        Vertex even_hub = -1;
        std::vector<std::vector<Vertex>> leaves(static_cast<std::size_t>(k));
        std::vector<bool> took(static_cast<std::size_t>(k), false);

        for (int i = 0; i < k; ++i) {
            std::vector<Vertex> nbrs;
            if (i == 0 && prev_hub != -1) nbrs.push_back(prev_hub);
            if (i > 0) nbrs.push_back(path[static_cast<std::size_t>(i - 1)]);
            if (i + 1 < k) nbrs.push_back(path[static_cast<std::size_t>(i + 1)]);
            for (int m = 0; m < k; ++m) {
                Vertex leaf = d.fresh();
                leaves[static_cast<std::size_t>(i)].push_back(leaf);
                nbrs.push_back(leaf);
            }
            if (i == 1) even_hub = d.fresh();
            nbrs.push_back(i % 2 == 0 ? odd_hub : even_hub);
            took[static_cast<std::size_t>(i)] = d.reveal(path[static_cast<std::size_t>(i)], nbrs);
        }

        int rejected = 0;
        std::vector<Vertex> odd_extra, even_extra;  // rerouted leaves per hub
        for (int i = 0; i < k; ++i) {
            if (!took[static_cast<std::size_t>(i)]) {
                ++rejected;
                witness.push_back(path[static_cast<std::size_t>(i)]);
                for (Vertex leaf : leaves[static_cast<std::size_t>(i)])
                    d.reveal(leaf, {path[static_cast<std::size_t>(i)]});
            } else {
                Vertex hub = i % 2 == 0 ? even_hub : odd_hub;
                for (Vertex leaf : leaves[static_cast<std::size_t>(i)]) {
                    d.reveal(leaf, {path[static_cast<std::size_t>(i)], hub});
                    (i % 2 == 0 ? even_extra : odd_extra).push_back(leaf);
                }
            }
        }

        std::vector<Vertex> odd_nbrs, even_nbrs;
        for (int i = 0; i < k; i += 2) odd_nbrs.push_back(path[static_cast<std::size_t>(i)]);
        for (int i = 1; i < k; i += 2) even_nbrs.push_back(path[static_cast<std::size_t>(i)]);
        odd_nbrs.insert(odd_nbrs.end(), odd_extra.begin(), odd_extra.end());
        even_nbrs.insert(even_nbrs.end(), even_extra.begin(), even_extra.end());
        witness.push_back(odd_hub);
        witness.push_back(even_hub);

        bool extend = rejected == 0 && level < levels;
        if (extend) {
            Vertex u1 = d.fresh();
            odd_nbrs.push_back(u1);
            d.reveal(odd_hub, odd_nbrs);
            d.reveal(even_hub, even_nbrs);
            attach = u1;
            prev_hub = odd_hub;
            continue;
        }
        d.reveal(odd_hub, odd_nbrs);
        d.reveal(even_hub, even_nbrs);
        break;
    }
    return detail::finish(d, "planar-bipartite", k, Rational(k, 2), std::move(witness));
}

// Series-parallel trap: rejected hubs force one selection per pendant path,
// accepted hubs funnel everything into a common sink.
inline AdversaryOutcome adversary_sp(const Decider& alg, int k) {
    if (k < 2) throw Error("adversary_sp: k must be at least 2");
    detail::Driver d(alg);
    Vertex s = d.fresh();
    std::vector<Vertex> c;
    for (int i = 0; i < k; ++i) c.push_back(d.fresh());
    d.reveal(s, c);

    std::vector<std::vector<Vertex>> ds(static_cast<std::size_t>(k));
    std::vector<bool> took(static_cast<std::size_t>(k), false);
    for (int i = 0; i < k; ++i) {
        std::vector<Vertex> nbrs{s};
        for (int j = 0; j < k; ++j) {
            Vertex dv = d.fresh();
            ds[static_cast<std::size_t>(i)].push_back(dv);
            nbrs.push_back(dv);
        }
        took[static_cast<std::size_t>(i)] = d.reveal(c[static_cast<std::size_t>(i)], nbrs);
    }

    Vertex t = -1;
    auto ensure_t = [&]() {
        if (t == -1) t = d.fresh();
        return t;
    };
    std::vector<std::pair<Vertex, Vertex>> fs;  // f vertex, its d partner
    std::vector<Vertex> t_nbrs;
    int p = 0;
    for (int i = 0; i < k; ++i) {
        if (took[static_cast<std::size_t>(i)]) continue;
        for (Vertex dv : ds[static_cast<std::size_t>(i)]) {
            Vertex f = d.fresh();
            fs.emplace_back(f, dv);
            d.reveal(dv, {c[static_cast<std::size_t>(i)], f});
        }
    }
    for (int i = 0; i < k; ++i) {
        if (!took[static_cast<std::size_t>(i)]) continue;
        ++p;
        for (Vertex dv : ds[static_cast<std::size_t>(i)]) {
            d.reveal(dv, {c[static_cast<std::size_t>(i)], ensure_t()});
            t_nbrs.push_back(dv);
        }
    }
    for (auto [f, dv] : fs) {
        d.reveal(f, {dv, ensure_t()});
        t_nbrs.push_back(f);
    }
    d.reveal(ensure_t(), t_nbrs);

    std::vector<Vertex> witness;
    if (p == 0) {
        witness = c;
        witness.push_back(t);
    } else {
        witness.push_back(s);
        witness.push_back(t);
        for (int i = 0; i < k; ++i)
            if (!took[static_cast<std::size_t>(i)]) witness.push_back(c[static_cast<std::size_t>(i)]);
    }
    return detail::finish(d, "series-parallel", k, Rational(k, 2), std::move(witness));
}

// Offline threshold builder: hub, a clique, and nested independent groups.
// Group i has group_sizes[i-1] vertices adjacent to clique members i..k.
inline Graph threshold_build(int k, const std::vector<int>& group_sizes) {
    if (k < 2) throw Error("threshold_build: k must be at least 2");
    if (static_cast<int>(group_sizes.size()) != k) throw Error("threshold_build: need one group size per clique vertex");
    for (int s : group_sizes)
        if (s < 0) throw Error("threshold_build: group sizes must be nonnegative");
    std::vector<Edge> edges;
    for (int i = 1; i <= k; ++i) edges.push_back({0, i});
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) edges.push_back({i, j});
    int next = k + 1;
    for (int i = 1; i <= k; ++i) {
        for (int m = 0; m < group_sizes[static_cast<std::size_t>(i - 1)]; ++m) {
            for (int j = i; j <= k; ++j) edges.push_back({j, next});
            ++next;
        }
    }
    return Graph(next, edges);
}

// Does the finished graph belong to the class an adversary claims?
inline bool check_claimed_class(const std::string& tag, const Graph& g, long long param) {
    if (tag == "tree") return is_tree(g);
    if (tag == "cactus") return is_cactus(g);
    if (tag == "bounded-degree") return max_degree(g) <= param;
    if (tag == "k1t-free") return is_k1t_free(g, static_cast<int>(param));
    if (tag == "threshold") return is_threshold(g);
    if (tag == "planar-bipartite") return is_bipartite(g) && euler_planar_bipartite_bound(g);
    if (tag == "series-parallel") return treewidth_at_most_2(g);
    throw Error("check_claimed_class: unknown class tag");
}

}  // namespace ods

#endif
