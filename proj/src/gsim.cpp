// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#include "taz/gsim.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdlib>
#include <deque>

#include "taz/errors.hpp"

namespace taz {
namespace {

// Mirror "0 - x rel c" into "x rel' -c".
Rel mirror(Rel r) {
    switch (r) {
        case Rel::Lt: return Rel::Gt;
        case Rel::Le: return Rel::Ge;
        case Rel::Eq: return Rel::Eq;
        case Rel::Ge: return Rel::Le;
        case Rel::Gt: return Rel::Lt;
    }
    return r;
}

// Logical negation of a non-equality atom over the same difference.
AtomicConstraint negate(const AtomicConstraint& a) {
    AtomicConstraint out = a;
    switch (a.rel) {
        case Rel::Lt: out.rel = Rel::Ge; break;
        case Rel::Le: out.rel = Rel::Gt; break;
        case Rel::Ge: out.rel = Rel::Lt; break;
        case Rel::Gt: out.rel = Rel::Le; break;
        case Rel::Eq: assert(false && "equality is split three ways, not negated"); break;
    }
    return out;
}

// What the single-clock atoms of G(q) demand of clock x, aggregated.
// Only the weakest bite threshold and the strongest requirement per
// direction matter:
//  - theta: a valuation with v(x) within theta has some upper-bound or
//    equality atom that can still be satisfied under delay, which forces
//    the simulating valuation to keep v'(x) <= v(x).
//  - eq_c: largest equality constant; within it the atom pins v'(x) to
//    exactly v(x).
//  - lambda: strongest lower-bound atom "x >= d" / "x > d" written as a
//    bound on -x, i.e. (<=,-d) / (<,-d). It forces v'(x) >= min(v(x), d).
struct ClockCond {
    std::optional<Bound> theta;
    std::optional<std::int64_t> eq_c;
    std::optional<Bound> lambda;
};

void add_cond(std::vector<ClockCond>& cond, int clock, Rel rel, std::int64_t c) {
    ClockCond& cc = cond[clock];
    auto raise_theta = [&](Bound b) { cc.theta = cc.theta ? max(*cc.theta, b) : b; };
    auto lower_lambda = [&](Bound b) { cc.lambda = cc.lambda ? min(*cc.lambda, b) : b; };
    switch (rel) {
        case Rel::Lt: raise_theta(Bound::lt(c)); break;
        case Rel::Le: raise_theta(Bound::le(c)); break;
        case Rel::Eq:
            raise_theta(Bound::le(c));
            cc.eq_c = cc.eq_c ? std::max(*cc.eq_c, c) : c;
            break;
        case Rel::Ge: lower_lambda(Bound::le(-c)); break;
        case Rel::Gt: lower_lambda(Bound::lt(-c)); break;
    }
}

// Difference graph over the reference clock and one or two real clocks,
// seeded from a canonical zone (which already contracts every path through
// the remaining clocks). Extra edges encode one candidate violation; the
// violation is real iff the graph stays consistent.
class MiniGraph {
public:
    MiniGraph(const Dbm& z, int x, int y = -1) : nn_(y < 0 ? 2 : 3) {
        const std::array<int, 3> nodes{0, x, y < 0 ? 0 : y};
        for (int i = 0; i < nn_; ++i)
            for (int j = 0; j < nn_; ++j)
                b_[i][j] = i == j ? Bound::zero() : z.at(nodes[i], nodes[j]);
    }

    void add(int i, int j, const Bound& b) { b_[i][j] = min(b_[i][j], b); }

    bool feasible() {
        for (int k = 0; k < nn_; ++k)
            for (int i = 0; i < nn_; ++i)
                for (int j = 0; j < nn_; ++j) b_[i][j] = min(b_[i][j], b_[i][k] + b_[k][j]);
        for (int i = 0; i < nn_; ++i)
            if (b_[i][i] < Bound::zero()) return false;
        return true;
    }

private:
    int nn_;
    std::array<std::array<Bound, 3>, 3> b_;
};

// No valuation of z may witness a violation against z2. A violation is a
// v in z whose admissible set B(v) = {v' : all single-clock atoms stay
// implied under every delay} misses z2 entirely. B(v) is a per-clock
// interval box around v, so a miss is a negative cycle through at most one
// box upper edge (v'(x) <= v(x), needs the atom to bite: v(x) within
// theta) and one box lower edge (v'(y) >= v(y) within eq_c, or
// v'(y) >= min(v(y), d) from lambda), joined by z2's own contracted paths.
// Families: A = upper vs z2's lower on the same clock, B = lower vs z2's
// upper on the same clock, C = upper on x plus lower on y through z2(y,x).
bool leaf_ok(const Dbm& z, const Dbm& z2, const std::vector<ClockCond>& cond) {
    int n = z.clock_count();
    for (int x = 1; x <= n; ++x) {
        const ClockCond& cx = cond[x];
        if (cx.theta && !z2.at(0, x).is_inf()) {
            // A: v(x) bites and lies strictly below every v'(x) in z2.
            MiniGraph g(z, x);
            g.add(1, 0, min(*cx.theta, z2.at(0, x).negated_dual()));
            if (g.feasible()) return false;
        }
        if (!z2.at(x, 0).is_inf()) {
            const Bound& up2 = z2.at(x, 0);
            if (cx.eq_c) {
                // B, pinned: v(x) within eq_c yet above every v'(x).
                MiniGraph g(z, x);
                g.add(1, 0, Bound::le(*cx.eq_c));
                g.add(0, 1, up2.negated_dual());
                if (g.feasible()) return false;
            }
            if (cx.lambda && *cx.lambda + up2 < Bound::zero()) {
                // B, lower bound: the atom's threshold exceeds z2's
                // maximum, so any v(x) above that maximum violates.
                // Within eq_c the pinned case already covers v.
                Bound e = up2.negated_dual();
                if (cx.eq_c) e = min(e, Bound::lt(-*cx.eq_c));
                MiniGraph g(z, x);
                g.add(0, 1, e);
                if (g.feasible()) return false;
            }
        }
        if (!cx.theta) continue;
        for (int y = 1; y <= n; ++y) {
            if (y == x) continue;
            const ClockCond& cy = cond[y];
            const Bound& zyx = z2.at(y, x);
            if (zyx.is_inf()) continue;
            if (cy.eq_c) {
                // C, pinned y: v'(x) <= v(x), v'(y) = v(y), yet z2 caps
                // v'(y) - v'(x) below v(y) - v(x).
                MiniGraph g(z, x, y);
                g.add(1, 0, *cx.theta);
                g.add(2, 0, Bound::le(*cy.eq_c));
                g.add(1, 2, zyx.negated_dual());
                if (g.feasible()) return false;
            }
            if (cy.lambda) {
                // C, lower-bounded y: v'(y) >= min(v(y), d) pushed through
                // z2(y,x) contradicts v'(x) <= v(x).
                MiniGraph g(z, x, y);
                g.add(1, 0, min(*cx.theta, (*cy.lambda + zyx).negated_dual()));
                g.add(1, 2, zyx.negated_dual());
                if (cy.eq_c) g.add(0, 2, Bound::lt(-*cy.eq_c));
                if (g.feasible()) return false;
            }
        }
    }
    return true;
}

struct SplitCtx {
    const std::vector<AtomicConstraint>& diags;
    const std::vector<ClockCond>& cond;
    std::int64_t budget;
    std::int64_t leaves = 0;
};

// Diagonal atoms are delay-invariant, so z splits into cells on which the
// atom either always or never bites. Where it bites, the simulating
// valuation must satisfy it too (empty z2 cell = no candidate left).
// Where it never bites, z2 stays unrestricted.
bool split_ok(SplitCtx& ctx, const Dbm& z, const Dbm& z2, size_t di) {
    if (di == ctx.diags.size()) {
        if (++ctx.leaves > ctx.budget) return false;
        return leaf_ok(z, z2, ctx.cond);
    }
    const AtomicConstraint& phi = ctx.diags[di];
    if (phi.rel == Rel::Eq) {
        if (auto ze = constrain(z, phi)) {
            auto z2e = constrain(z2, phi);
            if (!z2e) return false;
            if (!split_ok(ctx, *ze, *z2e, di + 1)) return false;
        }
        AtomicConstraint below = phi;
        below.rel = Rel::Lt;
        if (auto zb = constrain(z, below); zb && !split_ok(ctx, *zb, z2, di + 1)) return false;
        AtomicConstraint above = phi;
        above.rel = Rel::Gt;
        if (auto za = constrain(z, above); za && !split_ok(ctx, *za, z2, di + 1)) return false;
        return true;
    }
    if (auto zp = constrain(z, phi)) {
        auto z2p = constrain(z2, phi);
        if (!z2p) return false;
        if (!split_ok(ctx, *zp, *z2p, di + 1)) return false;
    }
    if (auto zn = constrain(z, negate(phi)); zn && !split_ok(ctx, *zn, z2, di + 1)) return false;
    return true;
}

}  // namespace

std::vector<AtomicConstraint> pre_reset(const AtomicConstraint& phi,
                                        const std::vector<bool>& reset) {
    // A reset clock holds the same value in both valuations afterwards,
    // so its side of the atom stops discriminating: replace it by the
    // reference clock. With no real clock left the atom drops.
    AtomicConstraint out = phi;
    if (out.left != 0 && reset[out.left]) out.left = 0;
    if (out.right != 0 && reset[out.right]) out.right = 0;
    if (out.is_variable_free()) return {};
    return {out};
}

PreResult pre_update(const AtomicConstraint& phi, const std::vector<Update>& updates) {
    PreResult r;
    auto substitute = [&](int side, std::int64_t& offset) {
        offset = 0;
        if (side == 0) return 0;
        for (const Update& u : updates)
            if (u.target == side) {
                offset = u.offset;
                return u.source;
            }
        return side;
    };
    std::int64_t off_l = 0, off_r = 0;
    AtomicConstraint out = phi;
    out.left = substitute(phi.left, off_l);
    out.right = substitute(phi.right, off_r);
    out.constant = phi.constant - off_l + off_r;
    if (out.left == out.right) {
        // Both sides collapse to the same expression: constant truth.
        out.left = out.right = 0;
        if (!out.constant_truth()) r.contradiction = true;
        return r;
    }
    r.atoms.push_back(out);
    return r;
}

ConstraintMap compute_constraint_map(const TimedAutomaton& a, std::int64_t iteration_cap) {
    int ns = static_cast<int>(a.states.size());
    ConstraintMap g;
    g.clock_count = a.clock_count();
    g.atoms.resize(ns);
    g.has_false.assign(ns, false);

    // Constants never grow under resets, only under offset updates, so a
    // model whose guards legitimately use constants above the cap still
    // passes: divergence means growth beyond both the cap and the seeds.
    std::int64_t constant_cap = iteration_cap;
    for (const Transition& t : a.transitions)
        for (const AtomicConstraint& atom : t.guard)
            constant_cap = std::max(constant_cap, std::abs(atom.constant));

    auto diverged = [&](int s) -> DivergedError {
        std::vector<std::string> witness;
        for (const AtomicConstraint& atom : g.atoms[s])
            witness.push_back(to_string(atom, a.clock_names, "="));
        return DivergedError(a.states[s].name, std::move(witness));
    };

    auto add_atom = [&](int s, const AtomicConstraint& atom) -> bool {
        for (const AtomicConstraint& have : g.atoms[s])
            if (have == atom) return false;
        g.atoms[s].push_back(atom);
        if (static_cast<std::int64_t>(g.atoms[s].size()) > iteration_cap ||
            std::abs(atom.constant) > constant_cap)
            throw diverged(s);
        return true;
    };

    for (const Transition& t : a.transitions)
        for (const AtomicConstraint& atom : t.guard) add_atom(t.src, atom);

    std::vector<std::vector<int>> incoming(ns);
    for (size_t ti = 0; ti < a.transitions.size(); ++ti)
        incoming[a.transitions[ti].dst].push_back(static_cast<int>(ti));

    std::deque<int> queue;
    std::vector<bool> queued(ns, true);
    for (int s = 0; s < ns; ++s) queue.push_back(s);

    // atoms[dst] is append-only, so per transition it suffices to propagate
    // each atom once: re-running pre on an old atom reproduces an atom that
    // add_atom already rejected.
    std::vector<size_t> propagated(a.transitions.size(), 0);

    while (!queue.empty()) {
        int dst = queue.front();
        queue.pop_front();
        queued[dst] = false;
        for (int ti : incoming[dst]) {
            const Transition& t = a.transitions[ti];
            bool all_resets = true;
            for (const Update& u : t.updates) all_resets &= u.is_reset();
            bool changed = false;
            // Index loop over a snapshot: add_atom may grow atoms[dst]
            // when t is a self loop.
            size_t snapshot = g.atoms[dst].size();
            for (size_t k = propagated[ti]; k < snapshot; ++k) {
                AtomicConstraint atom = g.atoms[dst][k];
                if (all_resets) {
                    std::vector<bool> reset(a.clock_count() + 1, false);
                    for (const Update& u : t.updates) reset[u.target] = true;
                    for (const AtomicConstraint& p : pre_reset(atom, reset))
                        changed |= add_atom(t.src, p);
                } else {
                    PreResult p = pre_update(atom, t.updates);
                    for (const AtomicConstraint& q : p.atoms) changed |= add_atom(t.src, q);
                    if (p.contradiction && !g.has_false[t.src]) {
                        g.has_false[t.src] = true;
                        changed = true;
                    }
                }
            }
            propagated[ti] = snapshot;
            if (g.has_false[dst] && !g.has_false[t.src]) {
                g.has_false[t.src] = true;
                changed = true;
            }
            if (changed && !queued[t.src]) {
                queued[t.src] = true;
                queue.push_back(t.src);
            }
        }
    }
    return g;
}

bool simulates(int state, const Dbm& z, const Dbm& z2, const ConstraintMap& g,
               std::int64_t split_budget) {
    assert(z.canonical() && z2.canonical());
    assert(z.dim() == z2.dim());
    if (is_included(z, z2)) return true;
    // An unsatisfiable atom reached this state: fall back to inclusion,
    // which just failed.
    if (g.has_false[state]) return false;

    std::vector<AtomicConstraint> diags;
    std::vector<ClockCond> cond(z.dim());
    for (const AtomicConstraint& atom : g.atoms[state]) {
        if (atom.is_variable_free()) continue;
        if (atom.is_diagonal()) {
            diags.push_back(atom);
        } else if (atom.right == 0) {
            add_cond(cond, atom.left, atom.rel, atom.constant);
        } else {
            add_cond(cond, atom.right, mirror(atom.rel), -atom.constant);
        }
    }
    SplitCtx ctx{diags, cond, split_budget, 0};
    return split_ok(ctx, z, z2, 0);
}

}  // namespace taz
