// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#include <deque>
#include <optional>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "taz/clock_bounds.hpp"
#include "taz/errors.hpp"
#include "taz/parser.hpp"

using namespace taz;
using test::Rng;

namespace {

using Row = std::vector<std::optional<std::int64_t>>;

// Reference computation by explicit backward reachability: a guard atom
// seeded at state s is relevant at q iff some path q ->* s never touches
// the clock. Structured differently from the production fixpoint on
// purpose.
ClockBounds closure_bounds(const TimedAutomaton& a) {
    int ns = static_cast<int>(a.states.size());
    int nc = a.clock_count();
    ClockBounds b;
    b.mode = BoundsMode::PerState;
    b.lower.assign(ns, Row(nc + 1));
    b.upper.assign(ns, Row(nc + 1));

    auto spread = [&](int seed_state, int clock, Rel rel, std::int64_t c) {
        c = std::max<std::int64_t>(c, 0);
        // Backward closure over edges that do not reset the clock.
        std::vector<bool> in(ns, false);
        std::deque<int> work{seed_state};
        in[seed_state] = true;
        while (!work.empty()) {
            int q = work.front();
            work.pop_front();
            for (const Transition& t : a.transitions) {
                if (t.dst != q || in[t.src]) continue;
                bool touched = false;
                for (const Update& u : t.updates) touched |= u.target == clock;
                if (touched) continue;
                in[t.src] = true;
                work.push_back(t.src);
            }
        }
        for (int q = 0; q < ns; ++q) {
            if (!in[q]) continue;
            auto bump = [&](Row& row) {
                if (!row[clock] || *row[clock] < c) row[clock] = c;
            };
            if (rel == Rel::Lt || rel == Rel::Le || rel == Rel::Eq) bump(b.upper[q]);
            if (rel == Rel::Gt || rel == Rel::Ge || rel == Rel::Eq) bump(b.lower[q]);
        }
    };

    for (const Transition& t : a.transitions)
        for (const AtomicConstraint& atom : t.guard) spread(t.src, atom.left, atom.rel, atom.constant);
    return b;
}

TimedAutomaton random_reset_only_model(Rng& rng) {
    TimedAutomaton a;
    a.name = "r";
    const int nc = static_cast<int>(rng.range(1, 3));
    a.clock_names = {"0"};
    for (int i = 1; i <= nc; ++i) a.clock_names.push_back("x" + std::to_string(i));
    const int ns = static_cast<int>(rng.range(2, 6));
    for (int i = 0; i < ns; ++i) a.states.push_back({"q" + std::to_string(i), i == 0, false, {}});
    const int nt = static_cast<int>(rng.range(1, 2 * ns));
    for (int i = 0; i < nt; ++i) {
        Transition t;
        t.src = static_cast<int>(rng.range(0, ns - 1));
        t.dst = static_cast<int>(rng.range(0, ns - 1));
        const int atoms = static_cast<int>(rng.range(0, 2));
        for (int k = 0; k < atoms; ++k) {
            AtomicConstraint atom;
            atom.left = static_cast<int>(rng.range(1, nc));
            atom.right = 0;
            atom.rel = static_cast<Rel>(rng.range(0, 4));
            atom.constant = rng.range(-3, 10);
            t.guard.push_back(atom);
        }
        for (int x = 1; x <= nc; ++x)
            if (rng.range(0, 2) == 0) t.updates.push_back({x, 0, 0});
        a.transitions.push_back(std::move(t));
    }
    return a;
}

}  // namespace

TEST_CASE("guard bounds stop at resets") {
    TimedAutomaton a = parse_model(
        "system chain\n"
        "clock x\n"
        "state q0 [initial]\n"
        "state q1\n"
        "state q2\n"
        "trans q0 -> q1 { guard: x <= 3; do: x = 0; }\n"
        "trans q1 -> q2 { guard: x >= 5; }\n");

    ClockBounds b = compute_bounds(a, BoundsMode::PerState);
    CHECK(b.upper[0][1] == 3);
    CHECK_FALSE(b.lower[0][1].has_value());  // x >= 5 is blocked by the reset
    CHECK(b.lower[1][1] == 5);
    CHECK_FALSE(b.upper[1][1].has_value());
    CHECK_FALSE(b.lower[2][1].has_value());
    CHECK_FALSE(b.upper[2][1].has_value());

    CHECK(b.k_row(0) == Row{std::nullopt, 3});
    CHECK(b.k_row(1) == Row{std::nullopt, 5});

    ClockBounds g = compute_bounds(a, BoundsMode::Global);
    for (int q = 0; q < 3; ++q) {
        CHECK(g.lower[q][1] == 5);
        CHECK(g.upper[q][1] == 3);
        CHECK(g.k_row(q) == Row{std::nullopt, 5});
    }
}

TEST_CASE("bounds flow through non-resetting edges") {
    TimedAutomaton a = parse_model(
        "system flow\n"
        "clock x y\n"
        "state q0 [initial]\n"
        "state q1\n"
        "trans q0 -> q1 { do: y = 0; }\n"
        "trans q1 -> q1 { guard: x < 7 && y == 2; }\n");
    ClockBounds b = compute_bounds(a, BoundsMode::PerState);
    CHECK(b.upper[0][1] == 7);   // x untouched on the way in
    CHECK_FALSE(b.lower[0][1].has_value());
    CHECK_FALSE(b.upper[0][2].has_value());  // y reset on the edge
    CHECK(b.upper[1][2] == 2);
    CHECK(b.lower[1][2] == 2);  // equality feeds both sides
}

TEST_CASE("negative guard constants clamp to zero") {
    TimedAutomaton a = parse_model(
        "system neg\nclock x\nstate q0 [initial]\n"
        "trans q0 -> q0 { guard: x >= -4; }\n");
    ClockBounds b = compute_bounds(a, BoundsMode::PerState);
    CHECK(b.lower[0][1] == 0);
    CHECK_FALSE(b.upper[0][1].has_value());
}

TEST_CASE("reference-side atoms are flipped before seeding") {
    TimedAutomaton a;
    a.name = "flip";
    a.clock_names = {"0", "x"};
    a.states = {{"q0", true, false, {}}};
    Transition t;
    t.src = t.dst = 0;
    t.guard.push_back({0, 1, Rel::Le, -3});  // -x <= -3, i.e. x >= 3
    a.transitions.push_back(t);
    ClockBounds b = compute_bounds(a, BoundsMode::PerState);
    CHECK(b.lower[0][1] == 3);
    CHECK_FALSE(b.upper[0][1].has_value());
}

TEST_CASE("unsupported model classes are rejected") {
    TimedAutomaton diag = parse_model(
        "system d\nclock x y\nstate q0 [initial]\n"
        "trans q0 -> q0 { guard: x - y < 1; }\n");
    CHECK_THROWS_WITH_AS(compute_bounds(diag, BoundsMode::Global),
                         doctest::Contains("diagonal-free"), ClassMismatchError);

    TimedAutomaton upd = parse_model(
        "system u\nclock x y\nstate q0 [initial]\n"
        "trans q0 -> q0 { do: x = y + 1; }\n");
    CHECK_THROWS_WITH_AS(compute_bounds(upd, BoundsMode::Global),
                         doctest::Contains("reset-only"), ClassMismatchError);
}

TEST_CASE("fixpoint agrees with the backward-closure reference") {
    Rng rng(0xB0B5);
    for (int round = 0; round < 200; ++round) {
        TimedAutomaton a = random_reset_only_model(rng);
        ClockBounds got = compute_bounds(a, BoundsMode::PerState);
        ClockBounds want = closure_bounds(a);
        CHECK(got.lower == want.lower);
        CHECK(got.upper == want.upper);

        // Global mode is the row-wise maximum of the per-state table.
        ClockBounds g = compute_bounds(a, BoundsMode::Global);
        Row gl(a.clock_count() + 1), gu(a.clock_count() + 1);
        for (size_t s = 0; s < a.states.size(); ++s)
            for (int x = 1; x <= a.clock_count(); ++x) {
                auto bump = [](std::optional<std::int64_t>& into, std::optional<std::int64_t> v) {
                    if (v && (!into || *into < *v)) into = v;
                };
                bump(gl[x], want.lower[s][x]);
                bump(gu[x], want.upper[s][x]);
            }
        for (size_t s = 0; s < a.states.size(); ++s) {
            CHECK(g.lower[s] == gl);
            CHECK(g.upper[s] == gu);
        }
    }
}
