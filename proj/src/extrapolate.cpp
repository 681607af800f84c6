// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#include "taz/extrapolate.hpp"

#include <cassert>

namespace taz {
namespace {

// Relax threshold for row i: the reference row acts as bound 0, and an
// absent bound also relaxes exactly the finite positive entries, which is
// the threshold-0 condition in the bound order.
std::int64_t relax_threshold(int i, const std::vector<std::optional<std::int64_t>>& l) {
    if (i == 0 || !l[i]) return 0;
    return *l[i];
}

}  // namespace

Dbm extra_lu(const Dbm& m, const std::vector<std::optional<std::int64_t>>& l,
             const std::vector<std::optional<std::int64_t>>& u) {
    assert(m.canonical());
    assert(static_cast<int>(l.size()) == m.dim() && static_cast<int>(u.size()) == m.dim());
    Dbm out = m;
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (i == j) continue;
            const Bound& e = m.at(i, j);
            if (e > Bound::le(relax_threshold(i, l))) {
                if (!e.is_inf()) out.set(i, j, Bound::inf());
                continue;
            }
            // An absent upper bound never floors its column.
            if (j != 0 && !u[j]) continue;
            Bound floor = Bound::lt(j == 0 ? 0 : -*u[j]);
            if (e < floor) out.set(i, j, floor);
        }
    }
    return out;
}

Dbm extra_k(const Dbm& m, const std::vector<std::optional<std::int64_t>>& k) {
    return extra_lu(m, k, k);
}

}  // namespace taz
