// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef TAZ_GSIM_HPP
#define TAZ_GSIM_HPP

#include <cstdint>
#include <vector>

#include "taz/dbm.hpp"
#include "taz/model.hpp"

namespace taz {

// Per-state sets of guard atoms closed under backward propagation:
// G(q) contains the atoms of every guard leaving q, plus the pre-image of
// every atom of G(q') across each transition (q -> q'). The zone-level
// simulation test below only compares clocks that these atoms mention.
struct ConstraintMap {
    int clock_count = 0;
    // Insertion-ordered, exact-duplicate-free atom list per state.
    std::vector<std::vector<AtomicConstraint>> atoms;
    // A backward substitution produced an unsatisfiable variable-free
    // atom at this state. Conservative: the simulation test then falls
    // back to plain zone inclusion.
    std::vector<bool> has_false;
};

// Pre-image of one atom across a reset set (reset[i] true when clock i is
// reset to 0 by the edge). Result has 0 or 1 atoms: an atom on a reset
// clock drops that side (both sides reset: drops entirely).
std::vector<AtomicConstraint> pre_reset(const AtomicConstraint& phi, const std::vector<bool>& reset);

struct PreResult {
    std::vector<AtomicConstraint> atoms;
    // Substitution produced a variable-free contradiction.
    bool contradiction = false;
};

// Pre-image of one atom across general updates, by substituting each
// side's update expression and folding constants. Variable-free results
// drop when tautological and flag `contradiction` otherwise.
PreResult pre_update(const AtomicConstraint& phi, const std::vector<Update>& updates);

// Least-fixpoint constraint map via a backward worklist. Throws
// DivergedError when a state's atom count or max |constant| exceeds
// iteration_cap (possible with non-reset updates only).
ConstraintMap compute_constraint_map(const TimedAutomaton& a, std::int64_t iteration_cap = 10000);

// Zone-level simulation test: true iff every v in z has a v' in z2 such
// that for all delays d and all atoms f of G(state), v+d satisfying f
// implies v'+d satisfies f. Both zones canonical, non-empty and
// future-closed. Diagonal atoms in G trigger a recursive split bounded by
// split_budget leaves; exceeding the budget returns false (sound for the
// exploration use: the zone is kept instead of pruned).
bool simulates(int state, const Dbm& z, const Dbm& z2, const ConstraintMap& g,
               std::int64_t split_budget = std::int64_t(1) << 12);

}  // namespace taz

#endif
