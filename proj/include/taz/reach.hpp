// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef TAZ_REACH_HPP
#define TAZ_REACH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "taz/clock_bounds.hpp"
#include "taz/dbm.hpp"
#include "taz/gsim.hpp"
#include "taz/model.hpp"

namespace taz {

enum class StrategyKind { Exact, ExtraK, ExtraLu, Sim };

struct Strategy {
    StrategyKind kind = StrategyKind::Exact;
    // ExtraK/ExtraLu only.
    BoundsMode bounds_mode = BoundsMode::Global;
    // Sim only; computed from the automaton when absent.
    std::optional<ConstraintMap> gmap;
    std::int64_t split_budget = std::int64_t(1) << 12;
    std::int64_t iteration_cap = 10000;
    // Drop waiting nodes that a newly stored zone covers. Off by default;
    // verdicts are unaffected either way.
    bool prune_waiting = false;
};

enum class Order { Bfs, Dfs };

// visited = successor computations attempted, stored = nodes inserted,
// subsumed = insertions skipped because a stored zone covers the new one.
struct ExploreStats {
    std::int64_t visited = 0;
    std::int64_t stored = 0;
    std::int64_t subsumed = 0;
};

struct ExploreResult {
    bool reachable = false;
    ExploreStats stats;
    // Transition indices of the witness path from the initial state;
    // empty when the initial state itself is the target.
    std::vector<int> witness;

    struct Node {
        int state;
        Dbm zone;
        int parent;          // -1 for the root
        int via_transition;  // -1 for the root
        bool active;         // false once covered by a later zone
    };
    std::vector<Node> nodes;

    // Skipped insertion (parent --t--> covered by nodes[coverer]).
    struct CoverEdge {
        int parent;
        int via_transition;
        int coverer;
    };
    std::vector<CoverEdge> cover_edges;
};

// Initial symbolic zone: every clock equal, any non-negative value.
Dbm initial_zone(const TimedAutomaton& a);

// One-step successor: guard intersection, updates, time elapse.
// nullopt when the guard cuts the zone to nothing.
std::optional<Dbm> post(const Dbm& zone, const Transition& t);

// Forward saturation under the strategy's coverage rule. `target` matches
// a state name or label; reachable is decided at insertion time (the
// initial state included). Throws BudgetExhaustedError when more than
// `budget` nodes would be stored without reaching the target, and
// ClassMismatchError when the strategy does not support the automaton.
ExploreResult explore(const TimedAutomaton& a, const Strategy& strategy, const std::string& target,
                      Order order = Order::Bfs, std::int64_t budget = 1000000);

// Graphviz rendering: solid edges for successors, dashed for coverage.
std::string to_dot(const ExploreResult& r, const TimedAutomaton& a);

}  // namespace taz

#endif
