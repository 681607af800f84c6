// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef TAZ_MODEL_HPP
#define TAZ_MODEL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "taz/constraint.hpp"
#include "taz/dbm.hpp"

namespace taz {

// Clock assignment target := source + offset, applied simultaneously with
// the other updates of a transition. source == 0 encodes a constant
// (target := offset); a plain reset is {target, 0, 0}.
struct Update {
    int target = 0;
    int source = 0;
    std::int64_t offset = 0;

    friend bool operator==(const Update&, const Update&) = default;

    bool is_reset() const { return source == 0 && offset == 0; }
};

struct Transition {
    int src = 0;
    Guard guard;
    std::vector<Update> updates;
    int dst = 0;

    friend bool operator==(const Transition&, const Transition&) = default;
};

struct State {
    std::string name;
    bool initial = false;
    bool accepting = false;
    std::vector<std::string> labels;

    friend bool operator==(const State&, const State&) = default;
};

struct TimedAutomaton {
    std::string name;
    // clock_names[i] names clock i; index 0 is the reference clock "0".
    std::vector<std::string> clock_names;
    std::vector<State> states;
    std::vector<Transition> transitions;

    int clock_count() const { return static_cast<int>(clock_names.size()) - 1; }
    // Index lookups return -1 when the name is unknown.
    int state_index(std::string_view name) const;
    int clock_index(std::string_view name) const;
    int initial_state() const;
    // Transition indices grouped by source state.
    std::vector<std::vector<int>> transitions_by_src() const;

    friend bool operator==(const TimedAutomaton&, const TimedAutomaton&) = default;
};

struct ModelClass {
    bool diagonal_free = true;
    bool reset_only = true;
};

// diagonal_free: no guard atom relates two real clocks.
// reset_only: every update is a plain reset to 0.
ModelClass classify(const TimedAutomaton& a);

// Image of a canonical non-empty zone under a transition's simultaneous
// updates. Result is canonical. Throws NegativeClockError when some
// valuation in the zone would map a clock below 0.
Dbm apply_update(const Dbm& m, const std::vector<Update>& updates);

// Transition rendered like the input syntax minus the leading keyword,
// e.g. "q0 -> q1 {guard: x <= 3; do: x = 0;}".
std::string to_string(const Transition& t, const TimedAutomaton& a);

}  // namespace taz

#endif
