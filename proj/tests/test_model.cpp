// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#include <string>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "taz/errors.hpp"
#include "taz/model.hpp"
#include "taz/parser.hpp"

using namespace taz;
using test::Rng;

namespace {

const char* kDemo = R"(# two-clock widget
system demo
clock x y
state s0 [initial]
state s1 [accepting, label=Done]
trans s0 -> s1 { guard: x <= 3 && y - x < 2; do: x = 0; }
trans s1 -> s0 { guard: true; }
trans s1 -> s1 { do: x = y + 1, y = 2; }
)";

int parse_error_line(const std::string& text) {
    try {
        parse_model(text);
    } catch (const ParseError& e) {
        return e.line;
    }
    return -1;
}

}  // namespace

TEST_CASE("parser builds the expected structures") {
    TimedAutomaton a = parse_model(kDemo);
    CHECK(a.name == "demo");
    CHECK(a.clock_count() == 2);
    CHECK(a.clock_index("x") == 1);
    CHECK(a.clock_index("y") == 2);
    CHECK(a.clock_index("z") == -1);
    REQUIRE(a.states.size() == 2);
    CHECK(a.states[0].initial);
    CHECK_FALSE(a.states[0].accepting);
    CHECK(a.states[1].accepting);
    CHECK(a.states[1].labels == std::vector<std::string>{"Done"});
    CHECK(a.initial_state() == 0);
    CHECK(a.state_index("s1") == 1);

    REQUIRE(a.transitions.size() == 3);
    const Transition& t0 = a.transitions[0];
    CHECK(t0.guard == Guard{{1, 0, Rel::Le, 3}, {2, 1, Rel::Lt, 2}});
    CHECK(t0.updates == std::vector<Update>{{1, 0, 0}});
    CHECK(a.transitions[1].guard.empty());
    CHECK(a.transitions[1].updates.empty());
    CHECK(a.transitions[2].updates == std::vector<Update>{{1, 2, 1}, {2, 0, 2}});

    auto by_src = a.transitions_by_src();
    CHECK(by_src[0] == std::vector<int>{0});
    CHECK(by_src[1] == std::vector<int>{1, 2});
}

TEST_CASE("diagonal sugar and comparison forms") {
    TimedAutomaton a = parse_model(
        "system t\n"
        "clock x y\n"
        "state a [initial]\n"
        "trans a -> a { guard: x > y + 2 && x - y <= 4 && x == 3 && y >= 1; }\n");
    CHECK(a.transitions[0].guard == Guard{{1, 2, Rel::Gt, 2},
                                          {1, 2, Rel::Le, 4},
                                          {1, 0, Rel::Eq, 3},
                                          {2, 0, Rel::Ge, 1}});
    // "x < y - 1" moves the negative offset into the constant.
    TimedAutomaton b = parse_model(
        "system t\nclock x y\nstate a [initial]\n"
        "trans a -> a { guard: x < y - 1; }\n");
    CHECK(b.transitions[0].guard == Guard{{1, 2, Rel::Lt, -1}});
}

TEST_CASE("print_model round-trips") {
    TimedAutomaton a = parse_model(kDemo);
    std::string text = print_model(a);
    TimedAutomaton b = parse_model(text);
    CHECK(a == b);
    CHECK(print_model(b) == text);
}

TEST_CASE("transition rendering matches the input syntax") {
    TimedAutomaton a = parse_model(kDemo);
    CHECK(to_string(a.transitions[0], a) == "s0 -> s1 {guard: x <= 3 && y - x < 2; do: x = 0;}");
    CHECK(to_string(a.transitions[1], a) == "s1 -> s0 {guard: true;}");
    CHECK(to_string(a.transitions[2], a) == "s1 -> s1 {guard: true; do: x = y + 1, y = 2;}");
}

TEST_CASE("parse errors carry 1-based positions") {
    try {
        parse_model("system t\nklock x\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 1);
        CHECK(std::string(e.what()).find("parse error at 2:1:") == 0);
        CHECK(std::string(e.what()).find("unknown statement 'klock'") != std::string::npos);
    }
}

TEST_CASE("parser rejects malformed models") {
    const std::string head = "system t\nclock x\nstate a [initial]\n";
    CHECK(parse_error_line("clock x\nstate a [initial]\n") > 0);             // missing system
    CHECK(parse_error_line("system t\nstate a [initial]\n") > 0);           // no clocks
    CHECK(parse_error_line("system t\nclock x x\nstate a [initial]\n") == 2);
    CHECK(parse_error_line("system t\nclock x\nstate a\nstate a\n") == 4);  // duplicate state
    CHECK(parse_error_line("system t\nclock x\nstate a\n") > 0);            // no initial state
    CHECK(parse_error_line(head + "state b [initial]\n") > 0);              // two initial states
    CHECK(parse_error_line(head + "trans a -> b {}\n") == 4);               // undeclared state
    CHECK(parse_error_line(head + "trans a -> a { guard: z < 1; }\n") == 4);
    CHECK(parse_error_line(head + "trans a -> a { guard: x < ; }\n") == 4);
    CHECK(parse_error_line(head + "trans a -> a { do: x = -1; }\n") == 4);  // negative update
    CHECK(parse_error_line(head + "trans a -> a { do: x = 0, x = 1; }\n") == 4);
    CHECK(parse_error_line(head + "trans a -> a { guard: x < 1073741825; }\n") == 4);
    CHECK(parse_error_line(head + "trans a -> a { guard: x < 12345678901234567890; }\n") == 4);
    CHECK(parse_error_line(head + "state c [shiny]\n") == 4);               // unknown attribute
    CHECK(parse_error_line("system t\nsystem t\nclock x\nstate a [initial]\n") == 2);
}

TEST_CASE("classify reports guard and update classes") {
    ModelClass demo = classify(parse_model(kDemo));
    CHECK_FALSE(demo.diagonal_free);  // y - x < 2
    CHECK_FALSE(demo.reset_only);     // x = y + 1

    ModelClass plain = classify(parse_model(
        "system t\nclock x\nstate a [initial]\n"
        "trans a -> a { guard: x <= 2; do: x = 0; }\n"));
    CHECK(plain.diagonal_free);
    CHECK(plain.reset_only);
}

TEST_CASE("apply_update handles resets, copies and offsets") {
    // x in [1,3] with y pinned to 0.
    auto z0 = from_guard(Guard{{1, 0, Rel::Ge, 1}, {1, 0, Rel::Le, 3}}, 2);
    REQUIRE(z0.has_value());
    Dbm z = reset_clocks(*z0, {2});

    SUBCASE("all resets take the reset path") {
        Dbm direct = reset_clocks(z, {1});
        CHECK(apply_update(z, {{1, 0, 0}}) == direct);
    }
    SUBCASE("empty update list is the identity") { CHECK(apply_update(z, {}) == z); }
    SUBCASE("copy makes the clocks equal") {
        Dbm out = apply_update(z, {{2, 1, 0}});  // y = x
        CHECK(out.at(1, 2) == Bound::zero());
        CHECK(out.at(2, 1) == Bound::zero());
        CHECK(out.at(2, 0) == Bound::le(3));
        CHECK(out.at(0, 2) == Bound::le(-1));
    }
    SUBCASE("offset shifts the range") {
        Dbm out = apply_update(z, {{1, 1, 2}});  // x = x + 2
        CHECK(out.at(1, 0) == Bound::le(5));
        CHECK(out.at(0, 1) == Bound::le(-3));
    }
    SUBCASE("swap is simultaneous") {
        Dbm out = apply_update(z, {{1, 2, 0}, {2, 1, 0}});  // x = y, y = x
        CHECK(out.at(1, 0) == Bound::zero());   // new x is old y = 0
        CHECK(out.at(2, 0) == Bound::le(3));    // new y is old x
        CHECK(out.at(0, 2) == Bound::le(-1));
    }
    SUBCASE("constant assignment") {
        Dbm out = apply_update(z, {{2, 0, 4}});  // y = 4
        CHECK(out.at(2, 0) == Bound::le(4));
        CHECK(out.at(0, 2) == Bound::le(-4));
        CHECK(out.at(2, 1) == Bound::le(3));  // y - x = 4 - [1,3]
        CHECK(out.at(1, 2) == Bound::le(-1));
    }
    SUBCASE("an update that can go negative throws") {
        CHECK_THROWS_AS(apply_update(z, {{2, 1, -2}}), NegativeClockError);  // y = x - 2, x may be 1
        Dbm ok = apply_update(z, {{2, 1, -1}});                              // x - 1 >= 0 always
        CHECK(ok.at(0, 2) == Bound::zero());
        CHECK(ok.at(2, 0) == Bound::le(2));
    }
}

TEST_CASE("apply_update images are canonical and contain mapped points") {
    Rng rng(0xAB5E7);
    for (int round = 0; round < 300; ++round) {
        const int n = static_cast<int>(rng.range(2, 3));
        Dbm z = test::random_zone(rng, n, 4, 6, rng.flip());

        std::vector<Update> ups;
        for (int x = 1; x <= n; ++x) {
            if (!rng.flip()) continue;
            Update u;
            u.target = x;
            u.source = static_cast<int>(rng.range(0, n));
            u.offset = u.source == 0 ? rng.range(0, 3) : rng.range(-2, 2);
            ups.push_back(u);
        }

        // The throw condition is exactly "the source can sit below the
        // subtracted offset somewhere in the zone".
        bool expect_throw = false;
        for (const Update& u : ups)
            if (Bound::zero() < z.at(0, u.source).shift(-u.offset)) expect_throw = true;

        if (expect_throw) {
            CHECK_THROWS_AS(apply_update(z, ups), NegativeClockError);
            continue;
        }
        Dbm out = apply_update(z, ups);
        CHECK(*canonicalize(out) == out);

        const std::int64_t q = n + 1;
        auto v = test::pick_point(z);
        std::vector<std::int64_t> w = v;
        for (const Update& u : ups) w[u.target] = v[u.source] + u.offset * q;
        CHECK(test::member(out, w, q));
    }
}
