// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef TAZ_LIVENESS_HPP
#define TAZ_LIVENESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "taz/reach.hpp"

namespace taz {

// Node-merging rule for the zone graph underlying the emptiness check.
// Liveness is only sound for Equality (exact/extrapolated zones) and
// MutualSimulation; OneWaySubsumption exists for tests demonstrating the
// spurious lassos it admits and is never offered on the command line.
enum class MergePolicy { Equality, MutualSimulation, OneWaySubsumption };

struct BuchiResult {
    bool empty = true;
    // Transition indices: stem from the initial state to the loop entry,
    // then the lasso back to it. Empty stem is valid (loop at the root).
    std::vector<int> stem;
    std::vector<int> lasso;
    ExploreStats stats;
};

// Accepting-lasso search (nested DFS) over the merged zone graph.
// `accepting` matches the state attribute, a state name, or a label.
// EMPTY only when the graph saturates within budget.
BuchiResult buchi_check(const TimedAutomaton& a, const Strategy& strategy, const std::string& accepting,
                        std::int64_t budget = 1000000);

// Test-harness variant with an explicit merge policy.
BuchiResult buchi_check_with_policy(const TimedAutomaton& a, const Strategy& strategy,
                                    const std::string& accepting, MergePolicy policy,
                                    std::int64_t budget = 1000000);

}  // namespace taz

#endif
