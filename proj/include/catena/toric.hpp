#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fibers.hpp"

// The toric ideal I_A = ( x^u - x^v : u*A = v*A ), computed exactly:
// a lattice basis of ker A seeds a binomial ideal, which is saturated at
// every variable by recomputing a Groebner basis with that variable cheapest
// (weight degree first, reverse-lex tie-break) and stripping the common
// variable power from each basis element, iterated to a fixpoint.  A final
// completion under the weight/lex order yields the canonical reduced basis.
// Betti elements and minimal presentations are read off from it through the
// support graphs of their fibers.

namespace catena {

// x^plus - x^minus with plus the lexicographically larger exponent vector
struct Binomial {
    Factorization plus, minus;
    Element a_degree;
    std::int64_t total_degree = 0; // max of the two lengths

    friend bool operator==(const Binomial& a, const Binomial& b) {
        return a.plus == b.plus && a.minus == b.minus;
    }
};

struct Presentation {
    std::vector<Binomial> relations;
    std::vector<std::pair<Element, std::size_t>> betti; // element, component count
    std::int64_t max_total_degree = 0;
};

namespace detail {

// Term order on exponent vectors: weighted degree first (w holds one weight
// per variable, the degree of the corresponding generator), ties broken
// either lexicographically (cheapest < 0) or reverse-lexicographically with
// the chosen variable scanned first so it is the cheapest one.
struct TermOrder {
    const IntVector* w = nullptr; // length n: per-variable degrees
    int cheapest = -1;

    std::int64_t wdeg(const IntVector& u) const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < u.size(); ++i)
            s = checked_add(s, checked_mul(u[i], (*w)[i]));
        return s;
    }

    int compare(const IntVector& u, const IntVector& v) const {
        std::int64_t du = wdeg(u), dv = wdeg(v);
        if (du != dv) return du < dv ? -1 : 1;
        const std::size_t n = u.size();
        if (cheapest < 0) {
            for (std::size_t i = 0; i < n; ++i)
                if (u[i] != v[i]) return u[i] > v[i] ? 1 : -1;
            return 0;
        }
        const std::size_t c = static_cast<std::size_t>(cheapest);
        if (u[c] != v[c]) return u[c] < v[c] ? 1 : -1;
        for (std::size_t i = n; i-- > 0;) {
            if (i == c) continue;
            if (u[i] != v[i]) return u[i] < v[i] ? 1 : -1;
        }
        return 0;
    }
};

struct Bino {
    IntVector lead, tail; // compare(lead, tail) > 0
};

inline IntVector nf_monomial(IntVector m, const std::vector<Bino>& basis) {
    bool reduced = true;
    while (reduced) {
        reduced = false;
        for (const auto& b : basis) {
            if (!leq(b.lead, m)) continue;
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = checked_add(checked_sub(m[i], b.lead[i]), b.tail[i]);
            reduced = true;
            break;
        }
    }
    return m;
}

// Buchberger completion specialized to binomials; returns the reduced basis
// under ord.  Critical pairs run FIFO with the coprime-lead criterion.
inline std::vector<Bino> complete(const std::vector<std::pair<IntVector, IntVector>>& gens,
                                  const TermOrder& ord, const Limits& lim) {
    std::vector<Bino> basis;
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    auto insert = [&](IntVector p, IntVector q) {
        p = nf_monomial(std::move(p), basis);
        q = nf_monomial(std::move(q), basis);
        int c = ord.compare(p, q);
        if (c == 0) return;
        Bino b = c > 0 ? Bino{std::move(p), std::move(q)} : Bino{std::move(q), std::move(p)};
        for (const auto& prev : basis)
            if (prev.lead == b.lead && prev.tail == b.tail) return;
        basis.push_back(std::move(b));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    };
    for (const auto& [p, q] : gens) insert(p, q);
    std::uint64_t processed = 0;
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        if (++processed > lim.completion_pairs)
            fail(errc::budget_exceeded, "completion budget exceeded");
        const IntVector& li = basis[i].lead;
        const IntVector& lj = basis[j].lead;
        bool coprime = true;
        for (std::size_t k = 0; k < li.size(); ++k)
            if (li[k] != 0 && lj[k] != 0) {
                coprime = false;
                break;
            }
        if (coprime) continue;
        IntVector m = max_of(li, lj);
        IntVector p(m.size()), q(m.size());
        for (std::size_t k = 0; k < m.size(); ++k) {
            p[k] = checked_add(checked_sub(m[k], li[k]), basis[i].tail[k]);
            q[k] = checked_add(checked_sub(m[k], lj[k]), basis[j].tail[k]);
        }
        insert(std::move(p), std::move(q));
    }
    // minimalize: drop any element whose lead another kept lead divides
    std::vector<std::size_t> order(basis.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        int c = ord.compare(basis[a].lead, basis[b].lead);
        if (c != 0) return c < 0;
        return ord.compare(basis[a].tail, basis[b].tail) < 0;
    });
    std::vector<Bino> kept;
    for (std::size_t idx : order) {
        bool divisible = false;
        for (const auto& k : kept)
            if (leq(k.lead, basis[idx].lead)) {
                divisible = true;
                break;
            }
        if (!divisible) kept.push_back(basis[idx]);
    }
    for (auto& b : kept) b.tail = nf_monomial(b.tail, kept);
    return kept;
}

// J : x_k^inf for the degree-homogeneous binomial ideal J: with x_k cheapest
// in the order, stripping the common x_k power from every reduced-basis
// element saturates at x_k.  var_degrees has one positive entry per variable.
inline std::vector<std::pair<IntVector, IntVector>> saturate(
    std::vector<std::pair<IntVector, IntVector>> current, const IntVector& var_degrees,
    const Limits& lim) {
    const std::size_t n = var_degrees.size();
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t k = 0; k < n; ++k) {
            TermOrder ord{&var_degrees, static_cast<int>(k)};
            auto gb = complete(current, ord, lim);
            current.clear();
            for (auto& b : gb) {
                std::int64_t m = std::min(b.lead[k], b.tail[k]);
                if (m > 0) {
                    b.lead[k] -= m;
                    b.tail[k] -= m;
                    changed = true;
                }
                current.emplace_back(std::move(b.lead), std::move(b.tail));
            }
        }
    }
    return current;
}

inline std::pair<IntVector, IntVector> split_signs(const IntVector& z) {
    IntVector p(z.size(), 0), q(z.size(), 0);
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] > 0) p[i] = z[i];
        if (z[i] < 0) q[i] = checked_neg(z[i]);
    }
    return {p, q};
}

} // namespace detail

// The canonical (reduced, weight/lex ordered) binomial generating set of the
// toric ideal of the monoid.  Every returned binomial satisfies
// pi(plus) = pi(minus); this is checked before returning.
inline std::vector<Binomial> toric_generators(const AffineSemigroup& s, const Limits& lim = {}) {
    auto kernel = kernel_lattice_basis(s.generators());
    if (kernel.empty()) return {};
    IntVector var_degrees(s.count());
    for (std::size_t i = 0; i < s.count(); ++i) var_degrees[i] = s.gen_degree(i);
    std::vector<std::pair<IntVector, IntVector>> gens;
    gens.reserve(kernel.size());
    for (const auto& z : kernel) gens.push_back(detail::split_signs(z));
    gens = detail::saturate(std::move(gens), var_degrees, lim);
    detail::TermOrder ord{&var_degrees, -1};
    auto gb = detail::complete(gens, ord, lim);

    std::vector<Binomial> out;
    out.reserve(gb.size());
    for (auto& b : gb) {
        IntVector u = std::move(b.lead), v = std::move(b.tail);
        if (v > u) std::swap(u, v); // canonical sign: plus side lex-larger
        IntVector au = row_times_matrix(u, s.generators());
        IntVector av = row_times_matrix(v, s.generators());
        if (au != av) fail(errc::internal, "toric generator fails pi(u) = pi(v)");
        const std::int64_t deg = s.degree(au);
        Binomial bin;
        bin.plus = make_factorization(std::move(u));
        bin.minus = make_factorization(std::move(v));
        bin.a_degree = Element{std::move(au), deg};
        bin.total_degree = std::max(bin.plus.length, bin.minus.length);
        out.push_back(std::move(bin));
    }
    std::sort(out.begin(), out.end(), [](const Binomial& a, const Binomial& b) {
        if (!(a.a_degree == b.a_degree)) return a.a_degree < b.a_degree;
        if (!(a.plus == b.plus)) return a.plus < b.plus;
        return a.minus < b.minus;
    });
    return out;
}

// Betti elements: A-degrees of toric generators whose fiber graph is
// disconnected (at least two components), with their component counts.
inline std::vector<std::pair<Element, std::size_t>> betti_elements(const AffineSemigroup& s,
                                                                   const Limits& lim = {}) {
    std::set<IntVector> degrees;
    for (const auto& b : toric_generators(s, lim)) degrees.insert(b.a_degree.value);
    std::vector<std::pair<Element, std::size_t>> out;
    for (const auto& d : degrees) {
        FiberGraph g = nabla_graph(s, d, lim);
        if (g.is_betti()) out.emplace_back(g.element, g.component_count);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// A minimal presentation: for each Betti element, the lexicographically
// least factorization of each nabla component is taken as its representative
// and the first component's representative is paired with each of the
// others, giving (components - 1) relations per Betti element.
inline Presentation minimal_generators(const AffineSemigroup& s, const Limits& lim = {}) {
    Presentation pres;
    pres.betti = betti_elements(s, lim);
    for (const auto& [elem, count] : pres.betti) {
        FiberGraph g = nabla_graph(s, elem.value, lim);
        std::vector<std::size_t> rep(count, g.vertices.size());
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            if (rep[g.component[i]] == g.vertices.size()) rep[g.component[i]] = i;
        std::sort(rep.begin(), rep.end()); // vertex order is lex order
        for (std::size_t c = 1; c < rep.size(); ++c) {
            Binomial bin;
            bin.plus = g.vertices[rep[c]]; // lex-larger of the two reps
            bin.minus = g.vertices[rep[0]];
            bin.a_degree = elem;
            bin.total_degree = std::max(bin.plus.length, bin.minus.length);
            pres.relations.push_back(std::move(bin));
        }
    }
    for (const auto& r : pres.relations)
        pres.max_total_degree = std::max(pres.max_total_degree, r.total_degree);
    return pres;
}

// Brute-force check: every monoid element of weight degree <= bound whose
// fiber graph is disconnected.  Independent of the toric route.
inline std::vector<std::pair<Element, std::size_t>> betti_oracle(const AffineSemigroup& s,
                                                                 std::int64_t bound,
                                                                 const Limits& lim = {}) {
    std::vector<std::pair<Element, std::size_t>> out;
    for (const auto& x : elements_up_to(s, bound, lim)) {
        if (is_zero(x)) continue;
        FiberGraph g = nabla_graph(s, x, lim);
        if (g.is_betti()) out.emplace_back(g.element, g.component_count);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// "x^13 y z^2 - ..." rendering, same variable names as the fiber graphs
inline std::string binomial_to_string(const AffineSemigroup& s, const Binomial& b) {
    return monomial_label(s, b.plus.exponents) + " - " + monomial_label(s, b.minus.exponents);
}

} // namespace catena
