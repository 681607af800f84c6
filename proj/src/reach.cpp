// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#include "taz/reach.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "taz/errors.hpp"
#include "taz/extrapolate.hpp"

namespace taz {
namespace {

bool matches(const State& s, const std::string& target) {
    if (s.name == target) return true;
    for (const std::string& l : s.labels) {
        if (l == target) return true;
    }
    return false;
}

// Per-strategy zone pipeline: abstraction applied before storage, and the
// coverage relation used to skip an insertion.
struct Engine {
    const TimedAutomaton& a;
    const Strategy& strategy;
    std::optional<ClockBounds> bounds;
    const ConstraintMap* gmap = nullptr;
    ConstraintMap gmap_storage;

    explicit Engine(const TimedAutomaton& a_, const Strategy& s_) : a(a_), strategy(s_) {
        switch (strategy.kind) {
            case StrategyKind::Exact:
                break;
            case StrategyKind::ExtraK:
            case StrategyKind::ExtraLu:
                bounds = compute_bounds(a, strategy.bounds_mode);
                break;
            case StrategyKind::Sim:
                if (strategy.gmap) {
                    gmap = &*strategy.gmap;
                } else {
                    gmap_storage = compute_constraint_map(a, strategy.iteration_cap);
                    gmap = &gmap_storage;
                }
                break;
        }
    }

    Dbm abstract(int state, Dbm z) const {
        if (strategy.kind == StrategyKind::ExtraK) {
            auto k = canonicalize(extra_k(z, bounds->k_row(state)));
            assert(k);  // extrapolation only relaxes, emptiness is preserved
            return *std::move(k);
        }
        if (strategy.kind == StrategyKind::ExtraLu) {
            auto k = canonicalize(extra_lu(z, bounds->lower[state], bounds->upper[state]));
            assert(k);
            return *std::move(k);
        }
        return z;
    }

    // True when a fresh zone z at `state` need not be stored because
    // `stored` already covers its behaviour.
    bool covers(int state, const Dbm& stored, const Dbm& z) const {
        if (strategy.kind == StrategyKind::Sim)
            return simulates(state, z, stored, *gmap, strategy.split_budget);
        return is_included(z, stored);
    }
};

}  // namespace

Dbm initial_zone(const TimedAutomaton& a) { return future(Dbm::zero_point(a.clock_count())); }

std::optional<Dbm> post(const Dbm& zone, const Transition& t) {
    Dbm cur = zone;
    for (const AtomicConstraint& atom : t.guard) {
        auto c = constrain(cur, atom);
        if (!c) return std::nullopt;
        cur = *std::move(c);
    }
    return future(apply_update(cur, t.updates));
}

ExploreResult explore(const TimedAutomaton& a, const Strategy& strategy, const std::string& target,
                      Order order, std::int64_t budget) {
    Engine engine(a, strategy);
    ExploreResult r;
    std::vector<std::vector<int>> by_state(a.states.size());
    std::vector<std::vector<int>> outgoing = a.transitions_by_src();
    std::deque<int> work;

    auto witness_to = [&](int node) {
        std::vector<int> w;
        for (int c = node; r.nodes[c].parent != -1; c = r.nodes[c].parent)
            w.push_back(r.nodes[c].via_transition);
        std::reverse(w.begin(), w.end());
        return w;
    };

    // Returns the index of the target node once it is stored, -1 otherwise.
    auto insert = [&](int state, Dbm z, int parent, int via) -> int {
        for (int other : by_state[state]) {
            if (engine.covers(state, r.nodes[other].zone, z)) {
                ++r.stats.subsumed;
                r.cover_edges.push_back({parent, via, other});
                return -1;
            }
        }
        if (r.stats.stored >= budget)
            throw BudgetExhaustedError("node budget exceeded: " + std::to_string(budget) +
                                       " zones stored");
        int id = static_cast<int>(r.nodes.size());
        r.nodes.push_back({state, z, parent, via, true});
        by_state[state].push_back(id);
        ++r.stats.stored;
        for (int other : by_state[state]) {
            if (other != id && r.nodes[other].active &&
                engine.covers(state, r.nodes[id].zone, r.nodes[other].zone))
                r.nodes[other].active = false;
        }
        if (matches(a.states[state], target)) {
            r.reachable = true;
            r.witness = witness_to(id);
            return id;
        }
        work.push_back(id);
        return -1;
    };

    int s0 = a.initial_state();
    if (insert(s0, engine.abstract(s0, initial_zone(a)), -1, -1) != -1) return r;

    while (!work.empty()) {
        int cur;
        if (order == Order::Bfs) {
            cur = work.front();
            work.pop_front();
        } else {
            cur = work.back();
            work.pop_back();
        }
        if (strategy.prune_waiting && !r.nodes[cur].active) continue;
        const std::vector<int>& outs = outgoing[r.nodes[cur].state];
        // A stack pops in reverse push order; flip so the first-declared
        // transition is always explored first.
        for (size_t k = 0; k < outs.size(); ++k) {
            int ti = order == Order::Bfs ? outs[k] : outs[outs.size() - 1 - k];
            const Transition& t = a.transitions[ti];
            ++r.stats.visited;
            auto z = post(r.nodes[cur].zone, t);
            if (!z) continue;
            if (insert(t.dst, engine.abstract(t.dst, *std::move(z)), cur, ti) != -1) return r;
        }
    }
    return r;
}

std::string to_dot(const ExploreResult& r, const TimedAutomaton& a) {
    std::string out = "digraph zones {\n  node [shape=box];\n";
    for (size_t i = 0; i < r.nodes.size(); ++i) {
        const ExploreResult::Node& n = r.nodes[i];
        out += "  n" + std::to_string(i) + " [label=\"" + a.states[n.state].name + ": " +
               zone_to_string(n.zone, a.clock_names) + "\"";
        if (!n.active) out += ", color=gray, fontcolor=gray";
        out += "];\n";
    }
    for (size_t i = 0; i < r.nodes.size(); ++i) {
        if (r.nodes[i].parent != -1)
            out += "  n" + std::to_string(r.nodes[i].parent) + " -> n" + std::to_string(i) + ";\n";
    }
    for (const ExploreResult::CoverEdge& e : r.cover_edges) {
        out += "  n" + std::to_string(e.parent) + " -> n" + std::to_string(e.coverer) +
               " [style=dashed];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace taz
