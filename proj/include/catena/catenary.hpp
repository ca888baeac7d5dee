#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <queue>
#include <thread>
#include <vector>

#include "toric.hpp"

// Catenary degrees.  For an element a with fiber Z(a), c(a) is the smallest
// N such that any two factorizations are joined by a chain with consecutive
// distances <= N; concretely the bottleneck value of the complete graph on
// Z(a) under the factorization distance, found by Kruskal.  The equal,
// monotone and homogeneous variants restrict the admissible chains (constant
// lengths / non-decreasing lengths / lengths capped by the endpoints).
// Monoid-level values come from Betti elements; the equal and homogeneous
// monoid degrees equal the ordinary degree of the lifted monoids and are
// cross-checked against the total degrees of a lifted minimal presentation.

namespace catena {

struct ChainWitness {
    Factorization from, to;
    std::vector<Factorization> chain; // from == chain.front(), to == chain.back()
};

struct CatenaryResult {
    std::int64_t value = 0;
    std::optional<ChainWitness> witness;
};

namespace detail {

inline std::vector<std::vector<std::int64_t>> distance_matrix(
    const std::vector<Factorization>& f) {
    std::vector<std::vector<std::int64_t>> d(f.size(), std::vector<std::int64_t>(f.size(), 0));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) d[i][j] = d[j][i] = distance(f[i], f[j]);
    return d;
}

struct WeightedEdge {
    std::int64_t w;
    std::size_t i, j;
    bool operator<(const WeightedEdge& o) const {
        if (w != o.w) return w < o.w;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

// Kruskal over the complete graph on `verts`; returns the bottleneck value
// (max edge of the minimax spanning tree), the edge realizing it, and the
// tree adjacency for path reconstruction.
struct BottleneckTree {
    std::int64_t value = 0;
    std::size_t a = 0, b = 0;                       // endpoints of the max tree edge
    std::vector<std::vector<std::size_t>> adjacent; // tree edges
};

inline BottleneckTree bottleneck_tree(const std::vector<std::size_t>& verts,
                                      const std::vector<std::vector<std::int64_t>>& dist) {
    BottleneckTree t;
    t.adjacent.resize(dist.size());
    if (verts.size() <= 1) return t;
    std::vector<WeightedEdge> edges;
    edges.reserve(verts.size() * (verts.size() - 1) / 2);
    for (std::size_t p = 0; p < verts.size(); ++p)
        for (std::size_t q = p + 1; q < verts.size(); ++q)
            edges.push_back({dist[verts[p]][verts[q]], verts[p], verts[q]});
    std::sort(edges.begin(), edges.end());
    Dsu dsu(dist.size());
    std::size_t joins = 0;
    for (const auto& e : edges) {
        if (!dsu.unite(e.i, e.j)) continue;
        t.adjacent[e.i].push_back(e.j);
        t.adjacent[e.j].push_back(e.i);
        if (e.w >= t.value) {
            t.value = e.w;
            t.a = e.i;
            t.b = e.j;
        }
        if (++joins == verts.size() - 1) break;
    }
    return t;
}

// path between a and b along tree edges
inline std::vector<std::size_t> tree_path(const BottleneckTree& t, std::size_t a, std::size_t b) {
    std::vector<std::size_t> parent(t.adjacent.size(), t.adjacent.size());
    std::vector<std::size_t> stack{a};
    parent[a] = a;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        if (v == b) break;
        for (std::size_t u : t.adjacent[v])
            if (parent[u] == t.adjacent.size()) {
                parent[u] = v;
                stack.push_back(u);
            }
    }
    std::vector<std::size_t> path;
    for (std::size_t v = b;; v = parent[v]) {
        path.push_back(v);
        if (v == a) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

inline ChainWitness make_witness(const std::vector<Factorization>& f,
                                 const std::vector<std::size_t>& path) {
    ChainWitness w;
    w.from = f[path.front()];
    w.to = f[path.back()];
    for (std::size_t v : path) w.chain.push_back(f[v]);
    return w;
}

// simple deterministic fan-out; results land in caller-indexed slots
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& body) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex guard;
    std::atomic<std::size_t> next{0};
    unsigned k = std::min<unsigned>(threads, static_cast<unsigned>(count));
    for (unsigned t = 0; t < k; ++t)
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(guard);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

inline std::vector<Factorization> fiber_checked(const AffineSemigroup& s, const IntVector& x,
                                                const Limits& lim) {
    auto f = factorizations(s, x, lim);
    if (f.empty()) fail(errc::bad_input, "element is not in the monoid: " + to_string(x));
    return f;
}

} // namespace detail

inline CatenaryResult catenary_element(const AffineSemigroup& s, const IntVector& x,
                                       const Limits& lim = {}) {
    auto f = detail::fiber_checked(s, x, lim);
    if (f.size() <= 1) return {};
    auto dist = detail::distance_matrix(f);
    std::vector<std::size_t> all(f.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    auto tree = detail::bottleneck_tree(all, dist);
    CatenaryResult r;
    r.value = tree.value;
    r.witness = detail::make_witness(f, detail::tree_path(tree, tree.a, tree.b));
    return r;
}

// max over length classes of the bottleneck within the class
inline CatenaryResult equal_catenary_element(const AffineSemigroup& s, const IntVector& x,
                                             const Limits& lim = {}) {
    auto f = detail::fiber_checked(s, x, lim);
    std::map<std::int64_t, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < f.size(); ++i) classes[f[i].length].push_back(i);
    auto dist = detail::distance_matrix(f);
    CatenaryResult r;
    for (const auto& [len, verts] : classes) {
        if (verts.size() <= 1) continue;
        auto tree = detail::bottleneck_tree(verts, dist);
        if (tree.value > r.value) {
            r.value = tree.value;
            r.witness = detail::make_witness(f, detail::tree_path(tree, tree.a, tree.b));
        }
    }
    return r;
}

// max over ordered pairs |u| <= |v| of the minimax over chains with
// non-decreasing lengths; bottleneck Dijkstra per source on the layered
// digraph (an edge goes from shorter to no-shorter factorization)
inline CatenaryResult monotone_catenary_element(const AffineSemigroup& s, const IntVector& x,
                                                const Limits& lim = {}) {
    auto f = detail::fiber_checked(s, x, lim);
    const std::size_t n = f.size();
    if (n <= 1) return {};
    auto dist = detail::distance_matrix(f);
    constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();

    auto dijkstra = [&](std::size_t src, std::vector<std::size_t>* pred) {
        std::vector<std::int64_t> best(n, inf);
        std::vector<bool> done(n, false);
        if (pred) pred->assign(n, n);
        best[src] = 0;
        using Item = std::pair<std::int64_t, std::size_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
        heap.emplace(0, src);
        while (!heap.empty()) {
            auto [bv, v] = heap.top();
            heap.pop();
            if (done[v] || bv > best[v]) continue;
            done[v] = true;
            for (std::size_t u = 0; u < n; ++u) {
                if (u == v || f[v].length > f[u].length) continue; // only non-decreasing steps
                std::int64_t cand = std::max(bv, dist[v][u]);
                if (cand < best[u]) {
                    best[u] = cand;
                    if (pred) (*pred)[u] = v;
                    heap.emplace(cand, u);
                }
            }
        }
        return best;
    };

    CatenaryResult r;
    std::size_t arg_src = 0, arg_dst = 0;
    for (std::size_t src = 0; src < n; ++src) {
        auto best = dijkstra(src, nullptr);
        for (std::size_t dst = 0; dst < n; ++dst) {
            if (dst == src || f[src].length > f[dst].length) continue;
            if (best[dst] > r.value) {
                r.value = best[dst];
                arg_src = src;
                arg_dst = dst;
            }
        }
    }
    if (r.value > 0) {
        std::vector<std::size_t> pred;
        dijkstra(arg_src, &pred);
        std::vector<std::size_t> path;
        for (std::size_t v = arg_dst; v != arg_src; v = pred[v]) path.push_back(v);
        path.push_back(arg_src);
        std::reverse(path.begin(), path.end());
        r.witness = detail::make_witness(f, path);
    }
    return r;
}

// max over pairs (u,v) of the bottleneck within the subfiber of lengths
// <= max(|u|,|v|); computed per length threshold
inline CatenaryResult homogeneous_catenary_element(const AffineSemigroup& s, const IntVector& x,
                                                   const Limits& lim = {}) {
    auto f = detail::fiber_checked(s, x, lim);
    const std::size_t n = f.size();
    if (n <= 1) return {};
    auto dist = detail::distance_matrix(f);
    std::vector<std::int64_t> ls;
    for (const auto& fac : f) ls.push_back(fac.length);
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());

    CatenaryResult r;
    std::int64_t witness_len = -1;
    std::size_t wa = 0, wb = 0;
    for (std::int64_t cap : ls) {
        std::vector<std::size_t> verts;
        for (std::size_t i = 0; i < n; ++i)
            if (f[i].length <= cap) verts.push_back(i);
        if (verts.size() <= 1) continue;
        auto tree = detail::bottleneck_tree(verts, dist);
        // pairwise bottleneck within the tree, restricted to pairs whose max
        // length is exactly the cap
        for (std::size_t p = 0; p < verts.size(); ++p) {
            std::size_t a = verts[p];
            // max tree edge along paths from a, by DFS
            std::vector<std::int64_t> up(n, -1);
            std::vector<std::size_t> stack{a};
            up[a] = 0;
            while (!stack.empty()) {
                std::size_t v = stack.back();
                stack.pop_back();
                for (std::size_t u : tree.adjacent[v])
                    if (up[u] < 0) {
                        up[u] = std::max(up[v], dist[v][u]);
                        stack.push_back(u);
                    }
            }
            for (std::size_t q = p + 1; q < verts.size(); ++q) {
                std::size_t b = verts[q];
                if (std::max(f[a].length, f[b].length) != cap) continue;
                if (up[b] > r.value) {
                    r.value = up[b];
                    witness_len = cap;
                    wa = a;
                    wb = b;
                }
            }
        }
    }
    if (r.value > 0) {
        std::vector<std::size_t> verts;
        for (std::size_t i = 0; i < n; ++i)
            if (f[i].length <= witness_len) verts.push_back(i);
        auto tree = detail::bottleneck_tree(verts, dist);
        r.witness = detail::make_witness(f, detail::tree_path(tree, wa, wb));
    }
    return r;
}

// c(monoid) = max over Betti elements of c(b); 0 for free monoids
inline std::int64_t catenary_monoid(const AffineSemigroup& s, const Limits& lim = {}) {
    std::int64_t value = 0;
    for (const auto& [b, comps] : betti_elements(s, lim))
        value = std::max(value, catenary_element(s, b.value, lim).value);
    return value;
}

namespace detail {

// catenary degree of a lifted monoid, computed twice: through its Betti
// elements and through the total degrees of a minimal presentation.  The two
// must agree (the lift is half-factorial).
inline std::int64_t lifted_catenary(const AffineSemigroup& lifted, const Limits& lim) {
    Presentation pres = minimal_generators(lifted, lim);
    std::int64_t via_betti = 0;
    for (const auto& [b, comps] : pres.betti)
        via_betti = std::max(via_betti, catenary_element(lifted, b.value, lim).value);
    if (via_betti != pres.max_total_degree)
        fail(errc::internal, "lifted catenary routes disagree");
    return via_betti;
}

} // namespace detail

inline std::int64_t equal_catenary_monoid(const AffineSemigroup& s, const Limits& lim = {}) {
    return detail::lifted_catenary(lift_eq(s, lim), lim);
}

inline std::int64_t homogeneous_catenary_monoid(const AffineSemigroup& s, const Limits& lim = {}) {
    return detail::lifted_catenary(lift_hom(s, lim), lim);
}

// Lower bound for the monotone catenary degree: max of the element values
// over all monoid elements of weight degree <= bound.  Exact per element;
// the bound is reported by callers as a bounded-scan label.
inline std::int64_t monotone_catenary_monoid_bounded(const AffineSemigroup& s, std::int64_t bound,
                                                     const Limits& lim = {}, unsigned threads = 1) {
    auto elems = elements_up_to(s, bound, lim);
    std::vector<std::int64_t> per(elems.size(), 0);
    detail::parallel_for(elems.size(), threads, [&](std::size_t i) {
        per[i] = monotone_catenary_element(s, elems[i], lim).value;
    });
    std::int64_t value = 0;
    for (auto v : per) value = std::max(value, v);
    return value;
}

} // namespace catena
