// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#include "taz/dbm.hpp"

#include <cassert>

namespace taz {

Dbm Dbm::universal_positive(int clock_count) {
    Dbm m(clock_count, Bound::inf());
    for (int j = 0; j <= clock_count; ++j) m.m_[j] = Bound::zero();
    for (int i = 0; i <= clock_count; ++i) m.m_[static_cast<size_t>(i) * (clock_count + 1) + i] = Bound::zero();
    m.canonical_ = true;
    return m;
}

Dbm Dbm::zero_point(int clock_count) {
    Dbm m(clock_count, Bound::zero());
    m.canonical_ = true;
    return m;
}

std::string Dbm::to_debug_string(const std::vector<std::string>* names) const {
    auto name = [&](int i) {
        if (names && i < static_cast<int>(names->size())) return (*names)[i];
        return "x" + std::to_string(i);
    };
    auto cell = [](const Bound& b) {
        if (b.is_inf()) return std::string("inf");
        return (b.is_strict() ? "<" : "<=") + std::to_string(b.value());
    };
    std::vector<std::vector<std::string>> grid(dim() + 1, std::vector<std::string>(dim() + 1));
    for (int j = 0; j < dim(); ++j) grid[0][j + 1] = name(j);
    for (int i = 0; i < dim(); ++i) {
        grid[i + 1][0] = name(i);
        for (int j = 0; j < dim(); ++j) grid[i + 1][j + 1] = cell(at(i, j));
    }
    std::vector<size_t> width(dim() + 1, 0);
    for (auto& row : grid)
        for (size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
    std::string out;
    for (auto& row : grid) {
        for (size_t j = 0; j < row.size(); ++j) {
            out += std::string(width[j] - row[j].size(), ' ') + row[j];
            out += j + 1 < row.size() ? "  " : "";
        }
        out += "\n";
    }
    return out;
}

std::optional<Dbm> canonicalize(Dbm m) {
    const int d = m.dim();
    for (int i = 0; i < d; ++i)
        if (Bound::zero() < m.at(i, i)) m.set(i, i, Bound::zero());
    for (int j = 0; j < d; ++j)
        if (Bound::zero() < m.at(0, j)) m.set(0, j, Bound::zero());
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i) {
            const Bound ik = m.at(i, k);
            if (ik.is_inf()) continue;
            for (int j = 0; j < d; ++j) {
                const Bound through = ik + m.at(k, j);
                if (through < m.at(i, j)) m.set(i, j, through);
            }
        }
    for (int i = 0; i < d; ++i)
        if (m.at(i, i) < Bound::zero()) return std::nullopt;
    m.mark_canonical(true);
    return m;
}

bool is_included(const Dbm& a, const Dbm& b) {
    assert(a.canonical());
    if (a.clock_count() != b.clock_count()) return false;
    const int d = a.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (!(a.at(i, j) <= b.at(i, j))) return false;
    return true;
}

std::optional<Dbm> constrain(const Dbm& m, const DiffConstraint& c) {
    assert(m.canonical());
    const int i = c.lhs, j = c.rhs;
    if (c.bound + m.at(j, i) < Bound::zero()) return std::nullopt;
    if (m.at(i, j) <= c.bound) return m;
    Dbm out = m;
    const int d = m.dim();
    for (int k = 0; k < d; ++k) {
        const Bound ki = m.at(k, i);
        if (ki.is_inf()) continue;
        const Bound head = ki + c.bound;
        for (int l = 0; l < d; ++l) {
            const Bound through = head + m.at(j, l);
            if (through < out.at(k, l)) out.set(k, l, through);
        }
    }
    out.mark_canonical(true);
    return out;
}

std::optional<Dbm> constrain(const Dbm& m, const AtomicConstraint& a) {
    std::optional<Dbm> cur = m;
    for (const DiffConstraint& dc : to_difference_constraints(a)) {
        cur = constrain(*cur, dc);
        if (!cur) return std::nullopt;
    }
    return cur;
}

std::optional<Dbm> intersect(const Dbm& a, const Dbm& b) {
    assert(a.clock_count() == b.clock_count());
    Dbm m = a;
    const int d = a.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (b.at(i, j) < m.at(i, j)) m.set(i, j, b.at(i, j));
    return canonicalize(std::move(m));
}

Dbm reset_clocks(const Dbm& m, const std::vector<int>& clocks) {
    assert(m.canonical());
    Dbm out = m;
    const int d = m.dim();
    for (int x : clocks) {
        for (int l = 0; l < d; ++l) {
            out.set(x, l, out.at(0, l));
            out.set(l, x, out.at(l, 0));
        }
        out.set(x, x, Bound::zero());
        out.set(x, 0, Bound::zero());
        out.set(0, x, Bound::zero());
    }
    out.mark_canonical(true);
    return out;
}

Dbm future(Dbm m) {
    assert(m.canonical());
    for (int i = 1; i < m.dim(); ++i) m.set(i, 0, Bound::inf());
    m.mark_canonical(true);
    return m;
}

std::optional<Dbm> from_guard(const Guard& g, int clock_count) {
    std::optional<Dbm> m = Dbm::universal_positive(clock_count);
    for (const AtomicConstraint& a : g) {
        m = constrain(*m, a);
        if (!m) return std::nullopt;
    }
    return m;
}

std::string zone_to_string(const Dbm& m, const std::vector<std::string>& clock_names) {
    std::string out;
    auto add = [&](const std::string& s) {
        if (!out.empty()) out += " && ";
        out += s;
    };
    auto name = [&](int i) {
        if (i < static_cast<int>(clock_names.size())) return clock_names[i];
        return "x" + std::to_string(i);
    };
    const int d = m.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;
            const Bound b = m.at(i, j);
            if (b.is_inf()) continue;
            if (i == 0) {
                // 0 - xj <= c, i.e. xj >= -c; skip the trivial xj >= 0.
                if (b == Bound::zero()) continue;
                add(name(j) + (b.is_strict() ? " > " : " >= ") + std::to_string(-b.value()));
            } else if (j == 0) {
                add(name(i) + (b.is_strict() ? " < " : " <= ") + std::to_string(b.value()));
            } else {
                add(name(i) + " - " + name(j) + (b.is_strict() ? " < " : " <= ") +
                    std::to_string(b.value()));
            }
        }
    return out.empty() ? "true" : out;
}

}  // namespace taz
