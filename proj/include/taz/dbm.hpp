// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef TAZ_DBM_HPP
#define TAZ_DBM_HPP

#include <optional>
#include <string>
#include <vector>

#include "taz/bound.hpp"
#include "taz/constraint.hpp"

namespace taz {

// Difference bound matrix over clocks x1..xn plus the constant-zero
// reference clock x0. Entry (i,j) bounds x_i - x_j. The canonical flag
// records whether entries are known to realize all-pairs shortest paths
// (with diagonal and row 0 at most (<=,0)); operations that need canonical
// input say so, and canonicalize() establishes it.
class Dbm {
public:
    // All clock values >= 0, nothing else constrained.
    static Dbm universal_positive(int clock_count);
    // The single valuation with every clock equal to 0.
    static Dbm zero_point(int clock_count);

    int clock_count() const { return n_; }
    int dim() const { return n_ + 1; }

    const Bound& at(int i, int j) const { return m_[static_cast<size_t>(i) * (n_ + 1) + j]; }
    // Raw entry write; drops the canonical flag.
    void set(int i, int j, const Bound& b) {
        m_[static_cast<size_t>(i) * (n_ + 1) + j] = b;
        canonical_ = false;
    }
    bool canonical() const { return canonical_; }
    // Kernel use only: record that shortest-path closure has been
    // established (or broken) without re-running canonicalize.
    void mark_canonical(bool c) { canonical_ = c; }

    // Entrywise equality on the same dimension; the canonical flag is a
    // cache hint and does not participate.
    friend bool operator==(const Dbm& a, const Dbm& b) { return a.n_ == b.n_ && a.m_ == b.m_; }
    friend bool operator!=(const Dbm& a, const Dbm& b) { return !(a == b); }

    // Matrix dump with clock-name headers; names[i] names clock i and
    // names[0] is the reference clock (defaults x0..xn).
    std::string to_debug_string(const std::vector<std::string>* names = nullptr) const;

private:
    Dbm(int n, const Bound& fill) : n_(n), canonical_(false), m_(static_cast<size_t>(n + 1) * (n + 1), fill) {}

    int n_;
    bool canonical_;
    std::vector<Bound> m_;
};

// Shortest-path closure. Clamps the diagonal and row 0 to (<=,0) first
// (zones live in non-negative clock space), then runs Floyd-Warshall.
// Returns nullopt when the zone is empty (some negative diagonal).
std::optional<Dbm> canonicalize(Dbm m);

// Zone inclusion a included-in b, as pointwise entry comparison.
// Requires a canonical; b may be any representation.
bool is_included(const Dbm& a, const Dbm& b);

// Add one difference constraint to a canonical DBM, restoring canonical
// form in O(n^2) without a full closure. nullopt when the result is empty.
std::optional<Dbm> constrain(const Dbm& m, const DiffConstraint& c);
// Same for a guard atom (equality lowers to two difference constraints).
std::optional<Dbm> constrain(const Dbm& m, const AtomicConstraint& a);

// Pointwise minimum, then canonicalize.
std::optional<Dbm> intersect(const Dbm& a, const Dbm& b);

// Reset every listed clock to 0. Requires canonical non-empty input;
// result stays canonical.
Dbm reset_clocks(const Dbm& m, const std::vector<int>& clocks);

// Time elapse: drop all upper bounds (i,0). Requires canonical non-empty
// input; result stays canonical.
Dbm future(Dbm m);

// Canonical DBM of a guard's zone (within non-negative space);
// nullopt when unsatisfiable.
std::optional<Dbm> from_guard(const Guard& g, int clock_count);

// Human-readable conjunction of the non-trivial constraints of a
// canonical DBM, e.g. "x1 <= 3 && x1 - x2 <= 4". "true" when universal.
std::string zone_to_string(const Dbm& m, const std::vector<std::string>& clock_names);

}  // namespace taz

#endif
