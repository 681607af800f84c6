// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef TAZ_CONSTRAINT_HPP
#define TAZ_CONSTRAINT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "taz/bound.hpp"

namespace taz {

enum class Rel { Lt, Le, Eq, Ge, Gt };

std::string to_string(Rel r);

// One conjunct of a guard: left - right <rel> constant, where clock index 0
// is the constant-zero reference clock. right == 0 gives "x <rel> c",
// left == 0 gives "-y <rel> c" (equivalently y inv(rel) -c).
struct AtomicConstraint {
    int left = 0;
    int right = 0;
    Rel rel = Rel::Le;
    std::int64_t constant = 0;

    friend bool operator==(const AtomicConstraint&, const AtomicConstraint&) = default;

    bool is_diagonal() const { return left != 0 && right != 0; }
    // True when neither side mentions a real clock.
    bool is_variable_free() const { return left == 0 && right == 0; }
    // Constant truth value of a variable-free atom (0 <rel> constant).
    bool constant_truth() const;
};

using Guard = std::vector<AtomicConstraint>;

// Guard atom rendered with names, e.g. "x1 - x2 <= 5" or "-x2 < 3".
// `eq_token` selects "==" (input syntax) or "=" (display syntax).
std::string to_string(const AtomicConstraint& a, const std::vector<std::string>& clock_names,
                      const char* eq_token = "==");
std::string to_string(const Guard& g, const std::vector<std::string>& clock_names,
                      const char* eq_token = "==");

// Difference constraint in matrix form: lhs - rhs bounded by `bound`.
struct DiffConstraint {
    int lhs = 0;
    int rhs = 0;
    Bound bound;

    friend bool operator==(const DiffConstraint&, const DiffConstraint&) = default;
};

// Lower an atom to one or two difference constraints. Equality produces both
// directions; Ge/Gt flip sides so the bound is always an upper bound on
// lhs - rhs.
std::vector<DiffConstraint> to_difference_constraints(const AtomicConstraint& a);

}  // namespace taz

#endif
