// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#include "taz/model.hpp"

#include <cassert>

#include "taz/errors.hpp"

namespace taz {

int TimedAutomaton::state_index(std::string_view name) const {
    for (size_t i = 0; i < states.size(); ++i)
        if (states[i].name == name) return static_cast<int>(i);
    return -1;
}

int TimedAutomaton::clock_index(std::string_view name) const {
    for (size_t i = 1; i < clock_names.size(); ++i)
        if (clock_names[i] == name) return static_cast<int>(i);
    return -1;
}

int TimedAutomaton::initial_state() const {
    for (size_t i = 0; i < states.size(); ++i)
        if (states[i].initial) return static_cast<int>(i);
    return -1;
}

std::vector<std::vector<int>> TimedAutomaton::transitions_by_src() const {
    std::vector<std::vector<int>> out(states.size());
    for (size_t i = 0; i < transitions.size(); ++i)
        out[transitions[i].src].push_back(static_cast<int>(i));
    return out;
}

ModelClass classify(const TimedAutomaton& a) {
    ModelClass c;
    for (const Transition& t : a.transitions) {
        for (const AtomicConstraint& atom : t.guard)
            if (atom.is_diagonal()) c.diagonal_free = false;
        for (const Update& u : t.updates)
            if (!u.is_reset()) c.reset_only = false;
    }
    return c;
}

Dbm apply_update(const Dbm& m, const std::vector<Update>& updates) {
    assert(m.canonical());
    if (updates.empty()) return m;

    bool all_resets = true;
    for (const Update& u : updates) all_resets &= u.is_reset();
    if (all_resets) {
        std::vector<int> targets;
        targets.reserve(updates.size());
        for (const Update& u : updates) targets.push_back(u.target);
        return reset_clocks(m, targets);
    }

    // Simultaneous assignment x_i := x_{src(i)} + off(i). The image's
    // difference bounds are m(src(i), src(j)) + off(i) - off(j), which is
    // already shortest-path closed when m is (path inequalities carry
    // over entry by entry), so no re-canonicalization is needed.
    const int d = m.dim();
    std::vector<int> src(d);
    std::vector<std::int64_t> off(d, 0);
    for (int i = 0; i < d; ++i) src[i] = i;
    for (const Update& u : updates) {
        src[u.target] = u.source;
        off[u.target] = u.offset;
    }
    Dbm out = m;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out.set(i, j, m.at(src[i], src[j]).shift(off[i] - off[j]));
    for (int x = 1; x < d; ++x)
        if (Bound::zero() < out.at(0, x))
            throw NegativeClockError("update can drive clock " + std::to_string(x) +
                                     " below zero on the current zone");
    out.mark_canonical(true);
    return out;
}

std::string to_string(const Transition& t, const TimedAutomaton& a) {
    std::string s = a.states[t.src].name + " -> " + a.states[t.dst].name + " {guard: " +
                    to_string(t.guard, a.clock_names) + ";";
    if (!t.updates.empty()) {
        s += " do: ";
        for (size_t i = 0; i < t.updates.size(); ++i) {
            const Update& u = t.updates[i];
            if (i) s += ", ";
            s += a.clock_names[u.target] + " = ";
            if (u.source == 0) {
                s += std::to_string(u.offset);
            } else if (u.offset < 0) {
                s += a.clock_names[u.source] + " - " + std::to_string(-u.offset);
            } else {
                s += a.clock_names[u.source] + " + " + std::to_string(u.offset);
            }
        }
        s += ";";
    }
    s += "}";
    return s;
}

}  // namespace taz
