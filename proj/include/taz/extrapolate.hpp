// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef TAZ_EXTRAPOLATE_HPP
#define TAZ_EXTRAPOLATE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "taz/dbm.hpp"

namespace taz {

// Max-bound extrapolation. k is indexed by clock (index 0 ignored, the
// reference clock acts as bound 0). Entry (i,j) relaxes to infinity when
// above (<=, k[i]) and floors to (<, -k[j]) when below (<, -k[j]).
// An absent bound relaxes every finite positive entry of its row and
// never floors its column. Input must be canonical and non-empty; the
// result is generally NOT canonical.
Dbm extra_k(const Dbm& m, const std::vector<std::optional<std::int64_t>>& k);

// Lower/upper-bound extrapolation: relax above (<=, l[i]), floor below
// (<, -u[j]). Coincides with extra_k when l == u == k.
Dbm extra_lu(const Dbm& m, const std::vector<std::optional<std::int64_t>>& l,
             const std::vector<std::optional<std::int64_t>>& u);

}  // namespace taz

#endif
