// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef TAZ_CLOCK_BOUNDS_HPP
#define TAZ_CLOCK_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "taz/model.hpp"

namespace taz {

enum class BoundsMode { Global, PerState };

// Per-state, per-clock maximal guard constants relevant to the state:
// L from lower-bound comparisons (x > d, x >= d), U from upper-bound
// comparisons (x < c, x <= c); x = c feeds both. nullopt means the clock
// is never compared on any path that matters at the state.
struct ClockBounds {
    BoundsMode mode = BoundsMode::Global;
    // [state][clock], clock index 0 unused; Global mode stores the same
    // row for every state.
    std::vector<std::vector<std::optional<std::int64_t>>> lower;
    std::vector<std::vector<std::optional<std::int64_t>>> upper;

    // Pointwise max(L,U) for one state.
    std::vector<std::optional<std::int64_t>> k_row(int state) const;
};

// Least fixpoint of backward propagation: a bound relevant at the target
// of (q,g,Y,q') is relevant at q unless the clock is reset on the edge;
// guard atoms contribute at their source state. Negative guard constants
// clamp to 0. Requires a diagonal-free, reset-only automaton
// (ClassMismatchError otherwise).
ClockBounds compute_bounds(const TimedAutomaton& a, BoundsMode mode);

}  // namespace taz

#endif
