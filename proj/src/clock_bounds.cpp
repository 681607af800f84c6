// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#include "taz/clock_bounds.hpp"

#include <algorithm>

#include "taz/errors.hpp"

namespace taz {
namespace {

void merge(std::optional<std::int64_t>& into, std::optional<std::int64_t> from) {
    if (!from) return;
    if (!into || *into < *from) into = from;
}

// Records the threshold a single guard atom imposes on its clock.
// Constants are clamped at zero: a negative threshold constrains nothing
// a nonnegative clock can do.
void seed_atom(ClockBounds& b, int state, const AtomicConstraint& atom) {
    int clock = atom.left;
    Rel rel = atom.rel;
    std::int64_t c = atom.constant;
    if (clock == 0) {
        // 0 - y rel c written directly; flip to y rel' -c.
        clock = atom.right;
        c = -c;
        switch (rel) {
            case Rel::Lt: rel = Rel::Gt; break;
            case Rel::Le: rel = Rel::Ge; break;
            case Rel::Eq: break;
            case Rel::Ge: rel = Rel::Le; break;
            case Rel::Gt: rel = Rel::Lt; break;
        }
        if (clock == 0) return;
    }
    std::int64_t v = std::max<std::int64_t>(c, 0);
    switch (rel) {
        case Rel::Lt:
        case Rel::Le:
            merge(b.upper[state][clock], v);
            break;
        case Rel::Gt:
        case Rel::Ge:
            merge(b.lower[state][clock], v);
            break;
        case Rel::Eq:
            merge(b.lower[state][clock], v);
            merge(b.upper[state][clock], v);
            break;
    }
}

}  // namespace

std::vector<std::optional<std::int64_t>> ClockBounds::k_row(int state) const {
    std::vector<std::optional<std::int64_t>> k = lower[state];
    for (size_t i = 0; i < k.size(); ++i) merge(k[i], upper[state][i]);
    return k;
}

ClockBounds compute_bounds(const TimedAutomaton& a, BoundsMode mode) {
    ModelClass cls = classify(a);
    if (!cls.diagonal_free)
        throw ClassMismatchError(
            "clock bound analysis requires diagonal-free guards (no x - y comparisons)");
    if (!cls.reset_only)
        throw ClassMismatchError("clock bound analysis requires reset-only updates (x = 0)");

    int ns = static_cast<int>(a.states.size());
    int nc = a.clock_count();
    ClockBounds b;
    b.mode = mode;
    b.lower.assign(ns, std::vector<std::optional<std::int64_t>>(nc + 1));
    b.upper.assign(ns, std::vector<std::optional<std::int64_t>>(nc + 1));

    for (const Transition& t : a.transitions)
        for (const AtomicConstraint& atom : t.guard) seed_atom(b, t.src, atom);

    // A bound at the target of an edge flows back to the source for every
    // clock the edge leaves untouched. Iterate to a fixpoint; values are
    // maxima over a finite seed set, so this terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Transition& t : a.transitions) {
            for (int x = 1; x <= nc; ++x) {
                bool updated = false;
                for (const Update& u : t.updates) updated |= u.target == x;
                if (updated) continue;
                auto before_l = b.lower[t.src][x];
                auto before_u = b.upper[t.src][x];
                merge(b.lower[t.src][x], b.lower[t.dst][x]);
                merge(b.upper[t.src][x], b.upper[t.dst][x]);
                changed |= b.lower[t.src][x] != before_l || b.upper[t.src][x] != before_u;
            }
        }
    }

    if (mode == BoundsMode::Global) {
        std::vector<std::optional<std::int64_t>> gl(nc + 1), gu(nc + 1);
        for (int s = 0; s < ns; ++s)
            for (int x = 1; x <= nc; ++x) {
                merge(gl[x], b.lower[s][x]);
                merge(gu[x], b.upper[s][x]);
            }
        for (int s = 0; s < ns; ++s) {
            b.lower[s] = gl;
            b.upper[s] = gu;
        }
    }
    return b;
}

}  // namespace taz
