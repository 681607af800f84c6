// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#include <string>
#include <vector>

#include "doctest.h"
#include "taz/errors.hpp"
#include "taz/liveness.hpp"
#include "taz/parser.hpp"
#include "taz/reach.hpp"

using namespace taz;

namespace {

TimedAutomaton load(const char* name) {
    return parse_model_file(std::string(TAZ_MODELS_DIR) + "/" + name);
}

Strategy strat(StrategyKind k) {
    Strategy s;
    s.kind = k;
    return s;
}

bool state_accepts(const TimedAutomaton& a, int s, const std::string& arg) {
    const State& st = a.states[static_cast<size_t>(s)];
    if (st.accepting) return true;
    if (arg.empty()) return false;
    if (st.name == arg) return true;
    for (const auto& l : st.labels)
        if (l == arg) return true;
    return false;
}

// Replay the reported run: the stem must chain from the initial state, the
// lasso must loop back to the stem's end, touch an accepting state, and
// stay non-empty for one pass at the zone level.
void check_run(const TimedAutomaton& a, const BuchiResult& r, const std::string& arg) {
    REQUIRE_FALSE(r.empty);
    REQUIRE_FALSE(r.lasso.empty());
    int s = a.initial_state();
    Dbm z = initial_zone(a);
    for (int ti : r.stem) {
        const Transition& t = a.transitions[static_cast<size_t>(ti)];
        REQUIRE(t.src == s);
        auto nz = post(z, t);
        REQUIRE(nz.has_value());
        s = t.dst;
        z = *nz;
    }
    int entry = s;
    bool accepting = false;
    for (int ti : r.lasso) {
        const Transition& t = a.transitions[static_cast<size_t>(ti)];
        REQUIRE(t.src == s);
        auto nz = post(z, t);
        REQUIRE(nz.has_value());
        s = t.dst;
        z = *nz;
        accepting |= state_accepts(a, s, arg);
    }
    CHECK(s == entry);
    CHECK(accepting);
}

}  // namespace

TEST_CASE("a shrinking accepting loop has an empty language") {
    TimedAutomaton a = load("spurious.ta");

    BuchiResult exact = buchi_check(a, strat(StrategyKind::Exact), "");
    CHECK(exact.empty);
    CHECK(exact.stats.stored == 4);  // q0 plus the three distinct zones at A
    CHECK(exact.stats.subsumed == 0);

    BuchiResult sim = buchi_check(a, strat(StrategyKind::Sim), "");
    CHECK(sim.empty);
    CHECK(sim.stats.stored == 4);  // mutual simulation keeps them apart too
}

TEST_CASE("one-way subsumption fabricates a cycle on the shrinking loop") {
    TimedAutomaton a = load("spurious.ta");
    BuchiResult r =
        buchi_check_with_policy(a, strat(StrategyKind::Exact), "", MergePolicy::OneWaySubsumption);
    CHECK_FALSE(r.empty);
    CHECK(r.stem == std::vector<int>{0});
    CHECK(r.lasso == std::vector<int>{1});
    CHECK(r.stats.stored == 2);
    CHECK(r.stats.subsumed == 1);
    // The reported loop is not a real run: it fires at most twice from the
    // merged zone, then the x <= 2 guard is out of reach for good.
    Dbm z = initial_zone(a);
    z = *post(z, a.transitions[0]);
    auto once = post(z, a.transitions[1]);
    REQUIRE(once.has_value());
    auto twice = post(*once, a.transitions[1]);
    REQUIRE(twice.has_value());
    CHECK_FALSE(post(*twice, a.transitions[1]).has_value());
}

TEST_CASE("the explicit policies agree with the strategy-derived ones") {
    TimedAutomaton a = load("spurious.ta");
    BuchiResult eq =
        buchi_check_with_policy(a, strat(StrategyKind::Exact), "", MergePolicy::Equality);
    CHECK(eq.empty);
    CHECK(eq.stats.stored == 4);
    BuchiResult mu =
        buchi_check_with_policy(a, strat(StrategyKind::Sim), "", MergePolicy::MutualSimulation);
    CHECK(mu.empty);
}

TEST_CASE("the oscillator has a genuine accepting cycle at the root") {
    TimedAutomaton a = load("toggle.ta");
    for (StrategyKind k : {StrategyKind::Exact, StrategyKind::ExtraK, StrategyKind::ExtraLu,
                           StrategyKind::Sim}) {
        BuchiResult r = buchi_check(a, strat(k), "on");
        CHECK_FALSE(r.empty);
        CHECK(r.stem.empty());  // the loop passes through the initial state
        CHECK(r.lasso == std::vector<int>{0, 1});
        check_run(a, r, "on");
    }

    // Naming the other state accepts the same loop one step later.
    BuchiResult off = buchi_check(a, strat(StrategyKind::Exact), "off");
    CHECK_FALSE(off.empty);
    check_run(a, off, "off");

    // No state matches, so nothing accepts.
    BuchiResult none = buchi_check(a, strat(StrategyKind::Exact), "nonexistent");
    CHECK(none.empty);
}

TEST_CASE("stems are reported up to the loop entry") {
    TimedAutomaton a = parse_model(
        "system lasso\n"
        "clock x\n"
        "state start [initial]\n"
        "state loop [accepting, label=Spin]\n"
        "trans start -> loop { guard: x >= 1; do: x = 0; }\n"
        "trans loop -> loop { guard: x >= 1; do: x = 0; }\n");

    BuchiResult r = buchi_check(a, strat(StrategyKind::Exact), "");
    CHECK_FALSE(r.empty);
    CHECK(r.stem == std::vector<int>{0});
    CHECK(r.lasso == std::vector<int>{1});
    check_run(a, r, "");

    // Attribute, label and name all select the same accepting state.
    for (const char* arg : {"Spin", "loop"}) {
        BuchiResult by = buchi_check(a, strat(StrategyKind::Exact), arg);
        CHECK_FALSE(by.empty);
        check_run(a, by, arg);
    }
}

TEST_CASE("the four-clock chain has no accepting cycle under simulation") {
    TimedAutomaton a = load("abug.ta");
    BuchiResult r = buchi_check(a, strat(StrategyKind::Sim), "Error");
    CHECK(r.empty);

    // Exact zones at q2 grow forever, so saturation never happens.
    CHECK_THROWS_AS(buchi_check(a, strat(StrategyKind::Exact), "Error", 20),
                    BudgetExhaustedError);
}
