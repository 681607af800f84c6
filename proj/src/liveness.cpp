// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#include "taz/liveness.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "taz/errors.hpp"
#include "taz/extrapolate.hpp"

namespace taz {
namespace {

struct GraphNode {
    int state;
    Dbm zone;
};

struct GraphEdge {
    int via_transition;
    int dst;
};

// Merged zone graph: a successor zone equivalent to an already stored zone
// at the same state (per the policy) reuses that node, closing cycles.
struct ZoneGraph {
    std::vector<GraphNode> nodes;
    std::vector<std::vector<GraphEdge>> edges;
    ExploreStats stats;
};

class Builder {
public:
    Builder(const TimedAutomaton& a, const Strategy& strategy, MergePolicy policy)
        : a_(a), strategy_(strategy), policy_(policy) {
        switch (strategy.kind) {
            case StrategyKind::Exact:
                break;
            case StrategyKind::ExtraK:
            case StrategyKind::ExtraLu:
                bounds_ = compute_bounds(a, strategy.bounds_mode);
                break;
            case StrategyKind::Sim:
                if (strategy.gmap) {
                    gmap_ = &*strategy.gmap;
                } else {
                    gmap_storage_ = compute_constraint_map(a, strategy.iteration_cap);
                    gmap_ = &gmap_storage_;
                }
                break;
        }
    }

    Dbm abstract(int state, Dbm z) const {
        if (strategy_.kind == StrategyKind::ExtraK) {
            auto k = canonicalize(extra_k(z, bounds_->k_row(state)));
            assert(k);
            return *std::move(k);
        }
        if (strategy_.kind == StrategyKind::ExtraLu) {
            auto k = canonicalize(extra_lu(z, bounds_->lower[state], bounds_->upper[state]));
            assert(k);
            return *std::move(k);
        }
        return z;
    }

    bool covers(int state, const Dbm& stored, const Dbm& z) const {
        if (strategy_.kind == StrategyKind::Sim)
            return simulates(state, z, stored, *gmap_, strategy_.split_budget);
        return is_included(z, stored);
    }

    bool mergeable(int state, const Dbm& stored, const Dbm& z) const {
        switch (policy_) {
            case MergePolicy::Equality:
                return stored == z;
            case MergePolicy::MutualSimulation:
                return covers(state, stored, z) && covers(state, z, stored);
            case MergePolicy::OneWaySubsumption:
                return covers(state, stored, z);
        }
        return false;
    }

    ZoneGraph build(std::int64_t budget) {
        ZoneGraph g;
        std::vector<std::vector<int>> by_state(a_.states.size());
        std::vector<std::vector<int>> outgoing = a_.transitions_by_src();
        std::deque<int> work;

        auto insert = [&](int state, Dbm z) -> std::pair<int, bool> {
            for (int other : by_state[state]) {
                if (mergeable(state, g.nodes[other].zone, z)) return {other, false};
            }
            if (g.stats.stored >= budget)
                throw BudgetExhaustedError("node budget exceeded: " + std::to_string(budget) +
                                           " zones stored");
            int id = static_cast<int>(g.nodes.size());
            g.nodes.push_back({state, std::move(z)});
            g.edges.emplace_back();
            by_state[state].push_back(id);
            ++g.stats.stored;
            work.push_back(id);
            return {id, true};
        };

        int s0 = a_.initial_state();
        insert(s0, abstract(s0, initial_zone(a_)));
        while (!work.empty()) {
            int cur = work.front();
            work.pop_front();
            for (int ti : outgoing[g.nodes[cur].state]) {
                const Transition& t = a_.transitions[ti];
                ++g.stats.visited;
                auto z = post(g.nodes[cur].zone, t);
                if (!z) continue;
                auto [dst, fresh] = insert(t.dst, abstract(t.dst, *std::move(z)));
                if (!fresh) ++g.stats.subsumed;
                g.edges[cur].push_back({ti, dst});
            }
        }
        return g;
    }

private:
    const TimedAutomaton& a_;
    const Strategy& strategy_;
    MergePolicy policy_;
    std::optional<ClockBounds> bounds_;
    const ConstraintMap* gmap_ = nullptr;
    ConstraintMap gmap_storage_;
};

bool accepts(const State& s, const std::string& arg) {
    if (s.accepting) return true;
    if (arg.empty()) return false;
    if (s.name == arg) return true;
    for (const std::string& l : s.labels) {
        if (l == arg) return true;
    }
    return false;
}

// Nested DFS for an accepting cycle. The outer (blue) DFS keeps its stack
// explicit; nodes on it are Cyan. When an accepting node is about to turn
// Blue, an inner (red) DFS from it searches for any Cyan node: hitting one
// closes a cycle through the accepting node.
struct Ndfs {
    const TimedAutomaton& a;
    const ZoneGraph& g;
    const std::string& accepting;

    enum Color : unsigned char { White, Cyan, Blue };
    std::vector<Color> color;
    std::vector<bool> red;

    struct BlueFrame {
        int node;
        int via_transition;  // edge taken from the previous frame, -1 at root
        size_t next_edge = 0;
    };
    std::vector<BlueFrame> stack;

    explicit Ndfs(const TimedAutomaton& a_, const ZoneGraph& g_, const std::string& acc)
        : a(a_), g(g_), accepting(acc), color(g_.nodes.size(), White), red(g_.nodes.size(), false) {}

    // Red path seed -> ... -> cyan node, as (stem position of the cyan
    // node, transition indices). Empty optional when no cyan reachable.
    struct Hit {
        int cyan;
        std::vector<int> path;
    };

    std::optional<Hit> red_search(int seed) {
        std::vector<std::pair<int, int>> pred(g.nodes.size(), {-1, -1});
        std::vector<int> work{seed};
        red[seed] = true;
        while (!work.empty()) {
            int u = work.back();
            work.pop_back();
            for (const GraphEdge& e : g.edges[u]) {
                if (color[e.dst] == Cyan) {
                    std::vector<int> path{e.via_transition};
                    for (int c = u; c != seed; c = pred[c].first) path.push_back(pred[c].second);
                    std::reverse(path.begin(), path.end());
                    return Hit{e.dst, std::move(path)};
                }
                if (!red[e.dst]) {
                    red[e.dst] = true;
                    pred[e.dst] = {u, e.via_transition};
                    work.push_back(e.dst);
                }
            }
        }
        return std::nullopt;
    }

    std::optional<BuchiResult> run(ExploreStats stats) {
        stack.push_back({0, -1});
        color[0] = Cyan;
        while (!stack.empty()) {
            BlueFrame& f = stack.back();
            if (f.next_edge < g.edges[f.node].size()) {
                const GraphEdge& e = g.edges[f.node][f.next_edge++];
                if (color[e.dst] == White) {
                    color[e.dst] = Cyan;
                    stack.push_back({e.dst, e.via_transition});
                }
                continue;
            }
            if (accepts(a.states[g.nodes[f.node].state], accepting)) {
                if (auto hit = red_search(f.node)) {
                    BuchiResult r;
                    r.empty = false;
                    r.stats = stats;
                    size_t pos = 0;
                    while (stack[pos].node != hit->cyan) ++pos;
                    for (size_t i = 1; i <= pos; ++i) r.stem.push_back(stack[i].via_transition);
                    for (size_t i = pos + 1; i < stack.size(); ++i)
                        r.lasso.push_back(stack[i].via_transition);
                    r.lasso.insert(r.lasso.end(), hit->path.begin(), hit->path.end());
                    return r;
                }
            }
            color[f.node] = Blue;
            stack.pop_back();
        }
        return std::nullopt;
    }
};

}  // namespace

BuchiResult buchi_check_with_policy(const TimedAutomaton& a, const Strategy& strategy,
                                    const std::string& accepting, MergePolicy policy,
                                    std::int64_t budget) {
    Builder builder(a, strategy, policy);
    ZoneGraph g = builder.build(budget);
    Ndfs search(a, g, accepting);
    if (auto found = search.run(g.stats)) return *std::move(found);
    BuchiResult r;
    r.empty = true;
    r.stats = g.stats;
    return r;
}

BuchiResult buchi_check(const TimedAutomaton& a, const Strategy& strategy,
                        const std::string& accepting, std::int64_t budget) {
    MergePolicy policy = strategy.kind == StrategyKind::Sim ? MergePolicy::MutualSimulation
                                                            : MergePolicy::Equality;
    return buchi_check_with_policy(a, strategy, accepting, policy, budget);
}

}  // namespace taz
