// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef TAZ_BOUND_HPP
#define TAZ_BOUND_HPP

#include <cstdint>
#include <string>

namespace taz {

// A bound on a clock difference: either "infinity" or a pair (value, strict?)
// standing for "< value" or "<= value". Ordering: infinity is the unique
// maximum, and (< m) is tighter than (<= m). Addition adds values and ORs
// strictness; infinity absorbs.
class Bound {
public:
    constexpr Bound() : value_(0), strict_(false), inf_(true) {}

    static constexpr Bound le(std::int64_t v) { return Bound(v, false); }
    static constexpr Bound lt(std::int64_t v) { return Bound(v, true); }
    static constexpr Bound inf() { return Bound(); }
    static constexpr Bound zero() { return Bound(0, false); }

    constexpr bool is_inf() const { return inf_; }
    constexpr bool is_strict() const { return strict_; }
    // Value of a finite bound; meaningless for infinity.
    constexpr std::int64_t value() const { return value_; }

    friend constexpr bool operator==(const Bound& a, const Bound& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.value_ == b.value_ && a.strict_ == b.strict_;
    }
    friend constexpr bool operator!=(const Bound& a, const Bound& b) { return !(a == b); }

    friend constexpr bool operator<(const Bound& a, const Bound& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        if (a.value_ != b.value_) return a.value_ < b.value_;
        return a.strict_ && !b.strict_;
    }
    friend constexpr bool operator<=(const Bound& a, const Bound& b) { return !(b < a); }
    friend constexpr bool operator>(const Bound& a, const Bound& b) { return b < a; }
    friend constexpr bool operator>=(const Bound& a, const Bound& b) { return !(a < b); }

    friend constexpr Bound operator+(const Bound& a, const Bound& b) {
        if (a.inf_ || b.inf_) return inf();
        return Bound(a.value_ + b.value_, a.strict_ || b.strict_);
    }

    // Finite translate; infinity is unchanged.
    constexpr Bound shift(std::int64_t d) const {
        if (inf_) return *this;
        return Bound(value_ + d, strict_);
    }

    // Complement of "x - y (<,<=) v" expressed as a bound on y - x:
    // strictness flips, value negates. Callers must handle infinity
    // themselves (its complement is empty).
    constexpr Bound negated_dual() const { return Bound(-value_, !strict_); }

    std::string to_string() const {
        if (inf_) return "inf";
        return (strict_ ? "<" : "<=") + std::string(" ") + std::to_string(value_);
    }

private:
    constexpr Bound(std::int64_t v, bool strict) : value_(v), strict_(strict), inf_(false) {}

    std::int64_t value_;
    bool strict_;
    bool inf_;
};

constexpr Bound min(const Bound& a, const Bound& b) { return a < b ? a : b; }
constexpr Bound max(const Bound& a, const Bound& b) { return a < b ? b : a; }

}  // namespace taz

#endif
