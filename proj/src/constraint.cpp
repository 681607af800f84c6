// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#include "taz/constraint.hpp"

namespace taz {

std::string to_string(Rel r) {
    switch (r) {
        case Rel::Lt: return "<";
        case Rel::Le: return "<=";
        case Rel::Eq: return "==";
        case Rel::Ge: return ">=";
        case Rel::Gt: return ">";
    }
    return "?";
}

bool AtomicConstraint::constant_truth() const {
    switch (rel) {
        case Rel::Lt: return 0 < constant;
        case Rel::Le: return 0 <= constant;
        case Rel::Eq: return constant == 0;
        case Rel::Ge: return 0 >= constant;
        case Rel::Gt: return 0 > constant;
    }
    return false;
}

std::string to_string(const AtomicConstraint& a, const std::vector<std::string>& clock_names,
                      const char* eq_token) {
    std::string rel = a.rel == Rel::Eq ? std::string(eq_token) : to_string(a.rel);
    std::string lhs;
    if (a.left != 0 && a.right != 0) {
        lhs = clock_names[a.left] + " - " + clock_names[a.right];
    } else if (a.left != 0) {
        lhs = clock_names[a.left];
    } else if (a.right != 0) {
        lhs = "-" + clock_names[a.right];
    } else {
        lhs = "0";
    }
    return lhs + " " + rel + " " + std::to_string(a.constant);
}

std::string to_string(const Guard& g, const std::vector<std::string>& clock_names,
                      const char* eq_token) {
    if (g.empty()) return "true";
    std::string out;
    for (size_t i = 0; i < g.size(); ++i) {
        if (i) out += " && ";
        out += to_string(g[i], clock_names, eq_token);
    }
    return out;
}

std::vector<DiffConstraint> to_difference_constraints(const AtomicConstraint& a) {
    switch (a.rel) {
        case Rel::Lt: return {{a.left, a.right, Bound::lt(a.constant)}};
        case Rel::Le: return {{a.left, a.right, Bound::le(a.constant)}};
        case Rel::Eq:
            return {{a.left, a.right, Bound::le(a.constant)}, {a.right, a.left, Bound::le(-a.constant)}};
        case Rel::Ge: return {{a.right, a.left, Bound::le(-a.constant)}};
        case Rel::Gt: return {{a.right, a.left, Bound::lt(-a.constant)}};
    }
    return {};
}

}  // namespace taz
