// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef TAZ_ERRORS_HPP
#define TAZ_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace taz {

// Base class for all taz-specific failures.
struct Error : std::runtime_error {
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Input text rejected; line/col are 1-based positions of the offending token.
struct ParseError : Error {
    int line;
    int col;
    ParseError(int line_, int col_, const std::string& msg)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
          line(line_),
          col(col_) {}
};

// An algorithm was asked to run on a model outside its supported class
// (e.g. clock-bound analysis on a model with diagonal guards).
struct ClassMismatchError : Error {
    explicit ClassMismatchError(const std::string& msg) : Error(msg) {}
};

// Node budget exceeded during exploration.
struct BudgetExhaustedError : Error {
    explicit BudgetExhaustedError(const std::string& msg) : Error(msg) {}
};

// The constraint-map fixpoint failed to stabilize within its cap.
// The witness lists atoms added to the diverging state, in insertion order.
struct DivergedError : Error {
    std::string state;
    std::vector<std::string> witness;
    DivergedError(const std::string& state_, std::vector<std::string> witness_)
        : Error("constraint propagation diverged at state " + state_),
          state(state_),
          witness(std::move(witness_)) {}
};

// An update would assign a value that can be negative (e.g. x := y - 2
// with y unconstrained below 2 in the current zone).
struct NegativeClockError : Error {
    explicit NegativeClockError(const std::string& msg) : Error(msg) {}
};

}  // namespace taz

#endif
