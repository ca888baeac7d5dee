#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

#include "limits.hpp"
#include "rational.hpp"
#include "vec.hpp"

// Exact linear solvers over Z and Q.  Everything here is deterministic:
// fixed pivot rules, fixed traversal orders, canonically sorted results.

namespace catena {

// Lattice basis of the left kernel { z in Z^n : z*A = 0 }, computed by
// unimodular row reduction of A with the transform accumulated in U.  Rows of
// U facing a zero row of the reduced A form the basis.  Basis vectors are
// sign-normalized (first nonzero entry positive) and sorted.
inline std::vector<IntVector> kernel_lattice_basis(const IntMatrix& a) {
    const std::size_t n = a.size();
    const std::size_t d = matrix_width(a);
    IntMatrix h = a;
    IntMatrix u = identity_matrix(n);
    std::size_t row = 0;
    for (std::size_t col = 0; col < d && row < n; ++col) {
        for (;;) {
            std::size_t best = n;
            std::size_t nonzero = 0;
            for (std::size_t r = row; r < n; ++r) {
                if (h[r][col] == 0) continue;
                ++nonzero;
                if (best == n || checked_abs(h[r][col]) < checked_abs(h[best][col])) best = r;
            }
            if (nonzero == 0) break;
            if (nonzero == 1) {
                std::swap(h[row], h[best]);
                std::swap(u[row], u[best]);
                ++row;
                break;
            }
            for (std::size_t r = row; r < n; ++r) {
                if (r == best || h[r][col] == 0) continue;
                std::int64_t q = h[r][col] / h[best][col];
                if (q != 0) {
                    sub_scaled(h[r], q, h[best]);
                    sub_scaled(u[r], q, u[best]);
                }
            }
        }
    }
    std::vector<IntVector> basis(u.begin() + static_cast<std::ptrdiff_t>(row), u.end());
    for (auto& z : basis) {
        for (auto x : z) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : z) y = checked_neg(y);
            break;
        }
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

// One exact rational solution of A*x = (1,...,1)^T, or nullopt if the system
// is inconsistent.  Gauss-Jordan with leftmost pivots, free variables zero.
inline std::optional<RatVector> rational_solve_all_ones(const IntMatrix& a) {
    const std::size_t n = a.size();
    const std::size_t d = matrix_width(a);
    std::vector<RatVector> m(n, RatVector(d + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) m[i][j] = Rational(a[i][j]);
        m[i][d] = Rational(1);
    }
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
    std::size_t row = 0;
    for (std::size_t col = 0; col < d && row < n; ++col) {
        std::size_t p = n;
        for (std::size_t r = row; r < n; ++r)
            if (!m[r][col].is_zero()) {
                p = r;
                break;
            }
        if (p == n) continue;
        std::swap(m[row], m[p]);
        Rational inv = Rational(1) / m[row][col];
        for (std::size_t j = col; j <= d; ++j) m[row][j] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (std::size_t j = col; j <= d; ++j) m[r][j] -= f * m[row][j];
        }
        pivots.emplace_back(row, col);
        ++row;
    }
    for (std::size_t r = row; r < n; ++r)
        if (!m[r][d].is_zero()) return std::nullopt;
    RatVector x(d, Rational(0));
    for (auto [r, c] : pivots) x[c] = m[r][d];
    return x;
}

namespace detail {

// one inequality c*x >= beta with integer data, normalized to content 1
struct Ineq {
    IntVector c;
    std::int64_t beta;
};

inline void push_normalized(std::map<IntVector, std::int64_t>& sys, IntVector c, std::int64_t beta,
                            bool& infeasible) {
    std::int64_t g = 0;
    for (auto x : c) g = gcd64(g, x);
    if (g == 0) {
        if (beta > 0) infeasible = true; // 0 >= beta with beta > 0
        return;
    }
    g = gcd64(g, beta);
    if (g > 1) {
        for (auto& x : c) x /= g;
        beta /= g;
    }
    auto it = sys.find(c);
    if (it == sys.end())
        sys.emplace(std::move(c), beta);
    else if (beta > it->second)
        it->second = beta; // keep the stronger bound
}

} // namespace detail

// Exact Fourier-Motzkin: a rational rho with a_i . rho >= 1 for every row of
// A, or nullopt when no such functional exists (equivalently, when some
// nonzero u >= 0 has u*A = 0, so the monoid generated by the rows is not
// reduced).  Variables are eliminated last to first and back-substituted with
// "max of lower bounds, else min of upper bounds, else 0".
inline std::optional<RatVector> positivity_witness(const IntMatrix& a) {
    const std::size_t d = matrix_width(a);
    if (d == 0 || a.empty()) return std::nullopt;
    bool infeasible = false;
    std::map<IntVector, std::int64_t> sys;
    for (const auto& row : a) detail::push_normalized(sys, row, 1, infeasible);
    if (infeasible) return std::nullopt;

    // stage[k] = system right before x_k is eliminated
    std::vector<std::vector<detail::Ineq>> stage(d);
    auto snapshot = [&sys]() {
        std::vector<detail::Ineq> v;
        v.reserve(sys.size());
        for (const auto& [c, b] : sys) v.push_back({c, b});
        return v;
    };
    for (std::size_t k = d; k-- > 1;) {
        stage[k] = snapshot();
        std::map<IntVector, std::int64_t> next;
        std::vector<detail::Ineq> pos, neg;
        for (const auto& q : stage[k]) {
            if (q.c[k] > 0)
                pos.push_back(q);
            else if (q.c[k] < 0)
                neg.push_back(q);
            else
                detail::push_normalized(next, q.c, q.beta, infeasible);
        }
        for (const auto& p : pos)
            for (const auto& m : neg) {
                const std::int64_t cp = p.c[k];
                const std::int64_t cm = checked_neg(m.c[k]);
                IntVector c(d, 0);
                for (std::size_t j = 0; j < d; ++j)
                    c[j] = checked_add(checked_mul(cm, p.c[j]), checked_mul(cp, m.c[j]));
                std::int64_t beta = checked_add(checked_mul(cm, p.beta), checked_mul(cp, m.beta));
                detail::push_normalized(next, std::move(c), beta, infeasible);
            }
        if (infeasible) return std::nullopt;
        sys = std::move(next);
    }
    stage[0] = snapshot();

    RatVector x(d, Rational(0));
    for (std::size_t k = 0; k < d; ++k) {
        std::optional<Rational> lo, hi;
        for (const auto& q : stage[k]) {
            if (q.c[k] == 0) continue;
            Rational rest(q.beta);
            for (std::size_t j = 0; j < k; ++j) rest -= Rational(q.c[j]) * x[j];
            Rational bound = rest / Rational(q.c[k]);
            if (q.c[k] > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        if (lo && hi && *lo > *hi) {
            if (k == 0) return std::nullopt; // the fully projected system is infeasible
            fail(errc::internal, "fourier-motzkin backsubstitution");
        }
        if (lo)
            x[k] = *lo;
        else if (hi)
            x[k] = *hi;
    }
    for (const auto& row : a)
        if (dot(row, x) < Rational(1)) fail(errc::internal, "fourier-motzkin witness check");
    return x;
}

namespace detail {

// Contejean-Devie breadth search for the minimal nonzero u >= 0 with
// u*rows = 0.  Children t+e_i are opened only when <defect(t), rows_i> < 0,
// which preserves completeness and prunes aggressively; nodes dominating a
// recorded solution die.  With cap_first set, coordinate 0 never exceeds 1
// (used for the inhomogeneous reduction below).  `partner` (empty or one
// entry per coordinate) lists coordinates that may never be positive
// together with it; conflicting children are discarded, which keeps every
// minimal conflict-free solution reachable because all nodes below one are
// themselves conflict-free.
inline std::vector<IntVector> contejean_devie(const IntMatrix& rows, bool cap_first,
                                              const Limits& lim,
                                              const std::vector<std::vector<std::size_t>>& partner = {}) {
    const std::size_t m = rows.size();
    std::vector<IntVector> solutions;
    auto dominates_some = [&solutions](const IntVector& t) {
        for (const auto& s : solutions)
            if (leq(s, t)) return true;
        return false;
    };
    struct Node {
        IntVector u;
        IntVector defect;
    };
    std::vector<Node> frontier;
    std::uint64_t created = 0;
    for (std::size_t i = 0; i < m; ++i) frontier.push_back({unit_vector(m, i), rows[i]});
    created += m;
    while (!frontier.empty()) {
        for (const auto& node : frontier)
            if (is_zero(node.defect)) solutions.push_back(node.u);
        std::vector<Node> next;
        std::unordered_set<IntVector, VecHash> seen;
        for (const auto& node : frontier) {
            if (is_zero(node.defect)) continue;
            if (dominates_some(node.u)) continue;
            for (std::size_t i = 0; i < m; ++i) {
                if (cap_first && i == 0 && node.u[0] >= 1) continue;
                if (dot(node.defect, rows[i]) >= 0) continue;
                if (!partner.empty()) {
                    bool conflict = false;
                    for (std::size_t j : partner[i])
                        if (node.u[j] > 0) {
                            conflict = true;
                            break;
                        }
                    if (conflict) continue;
                }
                IntVector u = node.u;
                u[i] = checked_add(u[i], 1);
                if (seen.count(u)) continue;
                if (dominates_some(u)) continue;
                if (++created > lim.solver_nodes)
                    fail(errc::budget_exceeded, "diophantine search budget exceeded");
                IntVector defect = add(node.defect, rows[i]);
                seen.insert(u);
                next.push_back({std::move(u), std::move(defect)});
            }
        }
        frontier = std::move(next);
    }
    std::sort(solutions.begin(), solutions.end());
    return solutions;
}

} // namespace detail

// Minimal elements of { u in N^m : u*C = b } under the componentwise order.
// For b = 0 the trivial solution is excluded, so the result is the Hilbert
// basis of the homogeneous system.  The inhomogeneous case runs the
// homogeneous search on [-b; C] with the slack coordinate capped at 1: the
// minimal lifted solutions with slack 1 project exactly onto the minimal
// solutions of u*C = b.
//
// `exclusive` lists coordinate pairs that may never both be positive.  The
// search discards conflicting nodes outright, so the result is the set of
// minimal solutions among the conflict-free ones.  Callers use this when
// every solution they care about satisfies the constraint anyway.
inline std::vector<IntVector>
minimal_nonneg_solutions(const IntMatrix& c_in, const IntVector& b_in, const Limits& lim = {},
                         const std::vector<std::pair<std::size_t, std::size_t>>& exclusive = {}) {
    if (c_in.empty()) fail(errc::bad_input, "empty coefficient matrix");
    if (b_in.size() != matrix_width(c_in)) fail(errc::bad_input, "target width mismatch");
    // Rescale each column to a comparable magnitude.  Multiplying a column
    // and its target entry by a positive integer leaves the solution set
    // untouched but equilibrates the defect geometry, which keeps the
    // breadth search from drifting along lightly weighted coordinates.
    IntMatrix c = c_in;
    IntVector b = b_in;
    {
        const std::size_t width = b.size();
        std::int64_t largest = 1;
        std::vector<std::int64_t> colmax(width, 0);
        for (std::size_t j = 0; j < width; ++j) {
            for (const auto& row : c) colmax[j] = std::max(colmax[j], std::abs(row[j]));
            colmax[j] = std::max(colmax[j], std::abs(b[j]));
            largest = std::max(largest, colmax[j]);
        }
        for (std::size_t j = 0; j < width; ++j) {
            if (colmax[j] == 0) continue;
            const std::int64_t scale = largest / colmax[j];
            if (scale <= 1) continue;
            for (auto& row : c) row[j] = checked_mul(row[j], scale);
            b[j] = checked_mul(b[j], scale);
        }
    }
    const bool inhomogeneous = !is_zero(b);
    std::vector<std::vector<std::size_t>> partner;
    if (!exclusive.empty()) {
        const std::size_t shift = inhomogeneous ? 1 : 0; // slack coordinate in front
        partner.resize(c.size() + shift);
        for (const auto& [i, j] : exclusive) {
            if (i >= c.size() || j >= c.size() || i == j)
                fail(errc::bad_input, "bad exclusive coordinate pair");
            partner[i + shift].push_back(j + shift);
            partner[j + shift].push_back(i + shift);
        }
    }
    if (!inhomogeneous) return detail::contejean_devie(c, false, lim, partner);
    IntMatrix lifted;
    lifted.reserve(c.size() + 1);
    IntVector neg(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) neg[j] = checked_neg(b[j]);
    lifted.push_back(std::move(neg));
    for (const auto& row : c) lifted.push_back(row);
    auto sols = detail::contejean_devie(lifted, true, lim, partner);
    std::vector<IntVector> result;
    for (const auto& s : sols) {
        if (s[0] != 1) continue;
        result.emplace_back(s.begin() + 1, s.end());
    }
    // projections of an antichain need not be an antichain; refilter
    std::vector<IntVector> minimal;
    for (const auto& u : result) {
        bool dominated = false;
        for (const auto& v : result)
            if (v != u && leq(v, u)) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(u);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

} // namespace catena
