#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "fibers.hpp"

// omega-primality and the tame degree.  Both rest on the minimal elements of
// pi^{-1}(a + N A) = { u in N^n : u*A - a in N A }, computed by solving
// u*A - w*A = a over pairs (u,w) in N^(2n) and projecting the minimal
// solutions onto u.

namespace catena {

struct MinimalFiberCover {
    IntVector target;
    std::vector<IntVector> minimals; // antichain, lex sorted
};

inline MinimalFiberCover minimal_fiber_cover(const AffineSemigroup& s, const IntVector& a,
                                             const Limits& lim = {}) {
    if (a.size() != s.dim()) fail(errc::bad_input, "element width mismatch");
    MinimalFiberCover cover;
    cover.target = a;
    if (is_zero(a)) {
        cover.minimals.push_back(IntVector(s.count(), 0));
        return cover;
    }
    const std::size_t n = s.count();
    IntMatrix stacked;
    stacked.reserve(2 * n);
    for (const auto& g : s.generators()) stacked.push_back(g);
    for (const auto& g : s.generators()) {
        IntVector neg(g.size());
        for (std::size_t j = 0; j < g.size(); ++j) neg[j] = checked_neg(g[j]);
        stacked.push_back(std::move(neg));
    }
    // A minimal u and any factorization w of u*A - a never share an atom:
    // a shared atom could be removed from both, contradicting minimality of
    // u.  Restricting the pair search to disjoint supports is therefore
    // complete for the projections we keep, and prunes hard.
    std::vector<std::pair<std::size_t, std::size_t>> exclusive;
    exclusive.reserve(n);
    for (std::size_t i = 0; i < n; ++i) exclusive.emplace_back(i, n + i);
    std::set<IntVector> projected;
    for (const auto& uw : minimal_nonneg_solutions(stacked, a, lim, exclusive))
        projected.insert(IntVector(uw.begin(), uw.begin() + static_cast<std::ptrdiff_t>(n)));
    for (const auto& u : projected) {
        bool dominated = false;
        for (const auto& v : projected)
            if (v != u && leq(v, u)) {
                dominated = true;
                break;
            }
        if (!dominated) cover.minimals.push_back(u);
    }
    return cover;
}

// omega(a): the longest minimal element of pi^{-1}(a + N A).  Defined for
// monoids presented by their atoms.
inline std::int64_t omega_element(const AffineSemigroup& s, const IntVector& a,
                                  const Limits& lim = {}) {
    if (!s.minimal_generating())
        fail(errc::not_minimal_generating, "omega requires a minimal generating system");
    std::int64_t w = 0;
    for (const auto& u : minimal_fiber_cover(s, a, lim).minimals)
        w = std::max(w, coord_sum(u));
    return w;
}

inline std::int64_t omega_monoid(const AffineSemigroup& s, const Limits& lim = {}) {
    if (!s.minimal_generating())
        fail(errc::not_minimal_generating, "omega requires a minimal generating system");
    std::int64_t w = 0;
    for (const auto& g : s.generators()) w = std::max(w, omega_element(s, g, lim));
    return w;
}

// t(a): max over factorizations u of a and atoms a_i with a - a_i in the
// monoid of the least distance from u to a factorization containing a_i
// (zero when u itself does).
inline std::int64_t tame_element(const AffineSemigroup& s, const IntVector& a,
                                 const Limits& lim = {}) {
    auto fiber = factorizations(s, a, lim);
    if (fiber.empty()) fail(errc::bad_input, "element is not in the monoid: " + to_string(a));
    std::vector<bool> applicable(s.count());
    for (std::size_t i = 0; i < s.count(); ++i)
        applicable[i] = member(s, sub(a, s.generators()[i]));
    std::int64_t t = 0;
    for (const auto& u : fiber)
        for (std::size_t i = 0; i < s.count(); ++i) {
            if (!applicable[i] || u.exponents[i] >= 1) continue;
            std::int64_t best = -1;
            for (const auto& v : fiber) {
                if (v.exponents[i] < 1) continue;
                std::int64_t d = distance(u, v);
                if (best < 0 || d < best) best = d;
            }
            if (best < 0) fail(errc::internal, "tame: no factorization through the atom");
            t = std::max(t, best);
        }
    return t;
}

// t(monoid): max of t over the candidate elements pi(u), u minimal in some
// pi^{-1}(a_i + N A).  Candidate completeness is a cited result; the test
// suite cross-checks against a bounded exhaustive scan.
inline std::int64_t tame_monoid(const AffineSemigroup& s, const Limits& lim = {}) {
    if (!s.minimal_generating())
        fail(errc::not_minimal_generating, "tame degree requires a minimal generating system");
    std::set<IntVector> candidates;
    for (const auto& g : s.generators())
        for (const auto& u : minimal_fiber_cover(s, g, lim).minimals)
            candidates.insert(row_times_matrix(u, s.generators()));
    std::int64_t t = 0;
    for (const auto& a : candidates) t = std::max(t, tame_element(s, a, lim));
    return t;
}

// (t(S), t(lift_hom S)); the first never exceeds the second
inline std::pair<std::int64_t, std::int64_t> tame_lift_bound_check(const AffineSemigroup& s,
                                                                   const Limits& lim = {}) {
    std::int64_t t = tame_monoid(s, lim);
    std::int64_t th = tame_monoid(lift_hom(s, lim), lim);
    if (t > th) fail(errc::internal, "tame degree exceeds its homogenized bound");
    return {t, th};
}

} // namespace catena
