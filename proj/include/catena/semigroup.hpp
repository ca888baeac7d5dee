#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "diophantine.hpp"

// A finitely generated commutative monoid given by integer generators
// a_1..a_n in Z^d, together with the data every algorithm downstream needs:
// a positivity witness rho (a_i . rho >= 1, certifying the monoid is reduced
// and grading it), integer weights derived from rho, the half-factoriality
// witness omega when A*omega = (1,..,1) is solvable, and per-generator atom
// flags.

namespace catena {

class AffineSemigroup {
public:
    // Validates and computes the derived data.  Throws errc::zero_generator,
    // errc::duplicate_generator, errc::bad_input on malformed rows and
    // errc::not_reduced when no positivity witness exists.  A caller may
    // supply its own rho (validated); var_base only affects variable names in
    // printed output (0 for monoids whose first generator plays a unit-degree
    // role, as in the homogenizing lift).
    static AffineSemigroup create(IntMatrix gens, std::optional<RatVector> rho = std::nullopt,
                                  int var_base = 1, const Limits& lim = {});

    const IntMatrix& generators() const { return gens_; }
    std::size_t count() const { return gens_.size(); }  // n
    std::size_t dim() const { return dim_; }            // d
    const RatVector& rho() const { return rho_; }
    const IntVector& weights() const { return weights_; }

    // rational witness with a_i . omega = 1 for all i, when one exists
    const std::optional<RatVector>& half_factorial_witness() const { return omega_; }
    bool half_factorial() const { return omega_.has_value(); }

    bool is_atom(std::size_t i) const { return atom_[i]; }
    bool minimal_generating() const { return minimal_; }

    int var_base() const { return var_base_; }

    std::int64_t gen_degree(std::size_t i) const { return gen_degree_[i]; }
    std::int64_t max_gen_degree() const { return max_gen_degree_; }
    std::int64_t degree(const IntVector& x) const { return dot(x, weights_); }

private:
    AffineSemigroup() = default;

    IntMatrix gens_;
    std::size_t dim_ = 0;
    RatVector rho_;
    IntVector weights_;
    std::optional<RatVector> omega_;
    std::vector<bool> atom_;
    bool minimal_ = false;
    int var_base_ = 1;
    std::vector<std::int64_t> gen_degree_;
    std::int64_t max_gen_degree_ = 0;
};

namespace detail {

// Depth-first walk of { u in N^n : u*A = x }.  Coordinates are chosen in
// index order with ascending values, so callbacks see exponent vectors in
// lexicographic order.  The weight grading bounds every branch: coordinate i
// can take at most deg(x)/w_i more steps.  The last coordinate is solved
// directly instead of scanned.  fn returns false to abort the whole walk.
template <class Fn>
bool walk_fiber(const AffineSemigroup& s, const IntVector& x, Fn&& fn) {
    const std::size_t n = s.count();
    IntVector expo(n, 0);
    IntVector residual = x;
    std::int64_t deg = s.degree(x);
    if (deg < 0) return true;

    auto solve_last = [&](const IntVector& rem) -> std::optional<std::int64_t> {
        const IntVector& g = s.generators()[n - 1];
        std::size_t j = 0;
        while (j < g.size() && g[j] == 0) ++j;
        if (j == g.size()) return std::nullopt; // unreachable: zero generators rejected
        if (rem[j] % g[j] != 0) return std::nullopt;
        std::int64_t t = rem[j] / g[j];
        if (t < 0) return std::nullopt;
        for (std::size_t k = 0; k < g.size(); ++k)
            if (checked_mul(g[k], t) != rem[k]) return std::nullopt;
        return t;
    };

    auto rec = [&](auto&& self, std::size_t i, std::int64_t deg_rem) -> bool {
        if (i + 1 == n) {
            auto t = solve_last(residual);
            if (t) {
                expo[n - 1] = *t;
                bool keep = fn(static_cast<const IntVector&>(expo));
                expo[n - 1] = 0;
                if (!keep) return false;
            }
            return true;
        }
        const IntVector& g = s.generators()[i];
        const std::int64_t w = s.gen_degree(i);
        const std::int64_t bound = deg_rem / w;
        for (std::int64_t t = 0; t <= bound; ++t) {
            expo[i] = t;
            if (!self(self, i + 1, deg_rem - t * w)) {
                for (std::size_t k = 0; k < g.size(); ++k)
                    residual[k] = checked_add(residual[k], checked_mul(t, g[k]));
                expo[i] = 0;
                return false;
            }
            for (std::size_t k = 0; k < g.size(); ++k)
                residual[k] = checked_sub(residual[k], g[k]);
        }
        const std::int64_t taken = checked_add(bound, 1);
        for (std::size_t k = 0; k < g.size(); ++k)
            residual[k] = checked_add(residual[k], checked_mul(taken, g[k]));
        expo[i] = 0;
        return true;
    };
    return rec(rec, 0, deg);
}

} // namespace detail

// x in N-span of the generators?
inline bool member(const AffineSemigroup& s, const IntVector& x) {
    if (x.size() != s.dim()) fail(errc::bad_input, "element width mismatch");
    bool found = false;
    detail::walk_fiber(s, x, [&found](const IntVector&) {
        found = true;
        return false;
    });
    return found;
}

// An element certified to lie in the monoid, with its weight degree.
struct Element {
    IntVector value;
    std::int64_t degree = 0;

    friend bool operator==(const Element& a, const Element& b) { return a.value == b.value; }
    friend bool operator<(const Element& a, const Element& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.value < b.value;
    }
};

inline Element make_element(const AffineSemigroup& s, IntVector x) {
    if (!member(s, x)) fail(errc::bad_input, "element is not in the monoid: " + to_string(x));
    std::int64_t deg = s.degree(x);
    return Element{std::move(x), deg};
}

inline AffineSemigroup AffineSemigroup::create(IntMatrix gens, std::optional<RatVector> rho,
                                               int var_base, const Limits& lim) {
    (void)lim;
    if (gens.empty()) fail(errc::bad_input, "no generators");
    const std::size_t d = gens.front().size();
    if (d == 0) fail(errc::bad_input, "generators of dimension zero");
    for (const auto& g : gens) {
        if (g.size() != d) fail(errc::bad_input, "generators of mixed dimension");
        if (is_zero(g)) fail(errc::zero_generator, "zero generator");
    }
    {
        std::set<IntVector> uniq(gens.begin(), gens.end());
        if (uniq.size() != gens.size()) fail(errc::duplicate_generator, "duplicate generator");
    }
    AffineSemigroup s;
    s.gens_ = std::move(gens);
    s.dim_ = d;
    if (rho) {
        if (rho->size() != d) fail(errc::bad_input, "rho width mismatch");
        for (const auto& g : s.gens_)
            if (dot(g, *rho) < Rational(1))
                fail(errc::bad_input, "supplied rho is not a positivity witness");
        s.rho_ = std::move(*rho);
    } else {
        auto w = positivity_witness(s.gens_);
        if (!w)
            fail(errc::not_reduced,
                 "monoid is not reduced: no functional with a_i . rho >= 1 exists");
        s.rho_ = std::move(*w);
    }
    s.weights_ = primitive_integer_multiple(s.rho_);
    s.gen_degree_.resize(s.gens_.size());
    for (std::size_t i = 0; i < s.gens_.size(); ++i) {
        s.gen_degree_[i] = dot(s.gens_[i], s.weights_);
        if (s.gen_degree_[i] < 1) fail(errc::internal, "nonpositive generator degree");
        if (s.gen_degree_[i] > s.max_gen_degree_) s.max_gen_degree_ = s.gen_degree_[i];
    }
    s.omega_ = rational_solve_all_ones(s.gens_);
    s.var_base_ = var_base;
    s.atom_.resize(s.gens_.size());
    s.minimal_ = true;
    for (std::size_t i = 0; i < s.gens_.size(); ++i) {
        std::size_t hits = 0;
        detail::walk_fiber(s, s.gens_[i], [&hits](const IntVector&) { return ++hits < 2; });
        s.atom_[i] = hits == 1; // the trivial factorization e_i is always there
        if (!s.atom_[i]) s.minimal_ = false;
    }
    return s;
}

// generators that are atoms, in input order, plus the minimality flag
inline std::pair<IntMatrix, bool> atoms(const AffineSemigroup& s) {
    IntMatrix out;
    for (std::size_t i = 0; i < s.count(); ++i)
        if (s.is_atom(i)) out.push_back(s.generators()[i]);
    return {out, s.minimal_generating()};
}

// the same monoid presented by its atoms only
inline AffineSemigroup minimized(const AffineSemigroup& s, const Limits& lim = {}) {
    if (s.minimal_generating()) return s;
    auto [rows, flag] = atoms(s);
    (void)flag;
    return AffineSemigroup::create(std::move(rows), s.rho(), s.var_base(), lim);
}

// Equal-length lift: generators (1, a_i) in Z^(d+1).  A factorization of
// (L, a) is exactly a length-L factorization of a.
inline AffineSemigroup lift_eq(const AffineSemigroup& s, const Limits& lim = {}) {
    IntMatrix rows;
    rows.reserve(s.count());
    for (const auto& g : s.generators()) {
        IntVector r(s.dim() + 1);
        r[0] = 1;
        for (std::size_t j = 0; j < s.dim(); ++j) r[j + 1] = g[j];
        rows.push_back(std::move(r));
    }
    RatVector rho(s.dim() + 1, Rational(0));
    rho[0] = Rational(1);
    return AffineSemigroup::create(std::move(rows), rho, 1, lim);
}

// Homogenizing lift: an extra generator e_0 = (1,0,..,0) ahead of the lifted
// ones, so factorizations of (L, a) are the factorizations of a of length at
// most L, padded with e_0.
inline AffineSemigroup lift_hom(const AffineSemigroup& s, const Limits& lim = {}) {
    IntMatrix rows;
    rows.reserve(s.count() + 1);
    rows.push_back(unit_vector(s.dim() + 1, 0));
    for (const auto& g : s.generators()) {
        IntVector r(s.dim() + 1);
        r[0] = 1;
        for (std::size_t j = 0; j < s.dim(); ++j) r[j + 1] = g[j];
        rows.push_back(std::move(r));
    }
    RatVector rho(s.dim() + 1, Rational(0));
    rho[0] = Rational(1);
    return AffineSemigroup::create(std::move(rows), rho, 0, lim);
}

// All monoid elements of weight degree <= bound, sorted by (degree, value).
inline std::vector<IntVector> elements_up_to(const AffineSemigroup& s, std::int64_t bound,
                                             const Limits& lim = {}) {
    std::set<IntVector> seen;
    std::vector<IntVector> queue;
    IntVector zero(s.dim(), 0);
    seen.insert(zero);
    queue.push_back(zero);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        IntVector x = queue[head]; // copy: queue may reallocate
        std::int64_t deg = s.degree(x);
        for (std::size_t i = 0; i < s.count(); ++i) {
            if (deg + s.gen_degree(i) > bound) continue;
            IntVector y = add(x, s.generators()[i]);
            if (seen.insert(y).second) {
                if (seen.size() > lim.fiber_cap)
                    fail(errc::budget_exceeded, "element enumeration cap exceeded");
                queue.push_back(std::move(y));
            }
        }
    }
    std::vector<IntVector> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [&s](const IntVector& a, const IntVector& b) {
        std::int64_t da = s.degree(a), db = s.degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

} // namespace catena
