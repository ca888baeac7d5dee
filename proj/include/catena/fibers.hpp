#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "semigroup.hpp"

// Factorization fibers Z(a) = { u in N^n : u*A = a }, the distance between
// factorizations, and the support graph nabla_a whose connectivity detects
// Betti elements.

namespace catena {

struct Factorization {
    IntVector exponents;
    std::int64_t length = 0;

    friend bool operator==(const Factorization& a, const Factorization& b) {
        return a.exponents == b.exponents;
    }
    friend bool operator<(const Factorization& a, const Factorization& b) {
        return a.exponents < b.exponents;
    }
};

inline Factorization make_factorization(IntVector expo) {
    if (!nonneg(expo)) fail(errc::bad_input, "factorization exponents must be nonnegative");
    std::int64_t len = coord_sum(expo);
    return Factorization{std::move(expo), len};
}

// d(u,v) = max(|u|,|v|) - |gcd|, where gcd is the componentwise minimum
inline std::int64_t distance(const Factorization& u, const Factorization& v) {
    if (u.exponents.size() != v.exponents.size())
        fail(errc::bad_input, "factorization width mismatch");
    std::int64_t common = 0;
    for (std::size_t i = 0; i < u.exponents.size(); ++i)
        common = checked_add(common, std::min(u.exponents[i], v.exponents[i]));
    return checked_sub(std::max(u.length, v.length), common);
}

// Z(x) in lexicographic order; empty when x is not in the monoid.
// Throws errc::fiber_cap_exceeded past lim.fiber_cap factorizations.
inline std::vector<Factorization> factorizations(const AffineSemigroup& s, const IntVector& x,
                                                 const Limits& lim = {}) {
    if (x.size() != s.dim()) fail(errc::bad_input, "element width mismatch");
    std::vector<Factorization> out;
    detail::walk_fiber(s, x, [&out, &lim](const IntVector& expo) {
        if (out.size() >= lim.fiber_cap)
            fail(errc::fiber_cap_exceeded, "fiber cap exceeded at " + std::to_string(out.size()));
        out.push_back(make_factorization(expo));
        return true;
    });
    return out;
}

// the distinct factorization lengths L(x), ascending
inline std::vector<std::int64_t> lengths(const AffineSemigroup& s, const IntVector& x,
                                         const Limits& lim = {}) {
    std::vector<std::int64_t> ls;
    for (const auto& f : factorizations(s, x, lim)) ls.push_back(f.length);
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    return ls;
}

// The graph nabla_x: vertices Z(x), an edge where two factorizations share
// support (u.v != 0), weighted by distance.  x is a Betti element iff the
// graph has at least two connected components.
struct FiberGraph {
    Element element;
    std::vector<Factorization> vertices; // lex order
    struct Edge {
        std::size_t i, j; // i < j
        std::int64_t weight;
    };
    std::vector<Edge> edges;
    std::vector<std::size_t> component; // per vertex, ids 0.. by first appearance
    std::size_t component_count = 0;

    bool is_betti() const { return component_count >= 2; }
};

namespace detail {

struct Dsu {
    std::vector<std::size_t> parent;
    explicit Dsu(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

inline bool shares_support(const IntVector& u, const IntVector& v) {
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != 0 && v[i] != 0) return true;
    return false;
}

} // namespace detail

inline FiberGraph nabla_graph(const AffineSemigroup& s, const IntVector& x,
                              const Limits& lim = {}) {
    FiberGraph g;
    g.vertices = factorizations(s, x, lim);
    if (g.vertices.empty()) fail(errc::bad_input, "element is not in the monoid: " + to_string(x));
    g.element = Element{x, s.degree(x)};
    const std::size_t f = g.vertices.size();
    detail::Dsu dsu(f);
    for (std::size_t i = 0; i < f; ++i)
        for (std::size_t j = i + 1; j < f; ++j)
            if (detail::shares_support(g.vertices[i].exponents, g.vertices[j].exponents)) {
                g.edges.push_back({i, j, distance(g.vertices[i], g.vertices[j])});
                dsu.unite(i, j);
            }
    g.component.assign(f, 0);
    std::vector<std::size_t> label(f, f);
    for (std::size_t i = 0; i < f; ++i) {
        std::size_t root = dsu.find(i);
        if (label[root] == f) label[root] = g.component_count++;
        g.component[i] = label[root];
    }
    return g;
}

// "x^13 y z^2" style label; variables are x,y,z for n <= 3, else indexed
// from the monoid's variable base
inline std::string monomial_label(const AffineSemigroup& s, const IntVector& expo) {
    static const char* xyz[] = {"x", "y", "z"};
    const bool short_names = s.count() <= 3 && s.var_base() == 1;
    std::string out;
    for (std::size_t i = 0; i < expo.size(); ++i) {
        if (expo[i] == 0) continue;
        if (!out.empty()) out += ' ';
        out += short_names ? xyz[i] : "x" + std::to_string(s.var_base() + static_cast<int>(i));
        if (expo[i] != 1) out += "^" + std::to_string(expo[i]);
    }
    return out.empty() ? "1" : out;
}

// Graphviz rendering.  With show_missing, non-edges of the support graph are
// drawn dashed with their distance, matching the usual presentation of these
// graphs.  Deterministic: vertices in lex order, edges in index order.
inline std::string to_dot(const AffineSemigroup& s, const FiberGraph& g, bool show_missing = false) {
    std::string out = "graph nabla {\n";
    out += "  label=\"nabla " + to_string(g.element.value) + "\";\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        out += "  v" + std::to_string(i) + " [label=\"" +
               monomial_label(s, g.vertices[i].exponents) + "\"];\n";
    for (const auto& e : g.edges)
        out += "  v" + std::to_string(e.i) + " -- v" + std::to_string(e.j) + " [label=\"" +
               std::to_string(e.weight) + "\"];\n";
    if (show_missing) {
        std::vector<std::vector<bool>> present(g.vertices.size(),
                                               std::vector<bool>(g.vertices.size(), false));
        for (const auto& e : g.edges) present[e.i][e.j] = true;
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
                if (!present[i][j])
                    out += "  v" + std::to_string(i) + " -- v" + std::to_string(j) + " [label=\"" +
                           std::to_string(distance(g.vertices[i], g.vertices[j])) +
                           "\", style=dashed];\n";
    }
    out += "}\n";
    return out;
}

} // namespace catena
