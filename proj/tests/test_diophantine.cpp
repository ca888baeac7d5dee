#include <catch2/catch_amalgamated.hpp>

#include <catena/catena.hpp>

#include "oracles.hpp"

using namespace catena;

namespace {

// row rank over the rationals, by cross-multiplication elimination
std::size_t rank_brute(IntMatrix m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][c] == 0) continue;
            const std::int64_t p = m[rank][c], q = m[r][c];
            for (std::size_t j = 0; j < cols; ++j) m[r][j] = m[r][j] * p - m[rank][j] * q;
        }
        ++rank;
    }
    return rank;
}

bool in_row_kernel(const IntVector& z, const IntMatrix& a) {
    IntVector img(a[0].size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < img.size(); ++j) img[j] += z[i] * a[i][j];
    return is_zero(img);
}

} // namespace

TEST_CASE("kernel lattice basis on fixed matrices", "[diophantine]") {
    CHECK(kernel_lattice_basis({{2}, {3}}) == std::vector<IntVector>{{3, -2}});

    auto k2 = kernel_lattice_basis({{31}, {47}, {57}});
    REQUIRE(k2.size() == 2);
    for (const auto& z : k2) CHECK(in_row_kernel(z, {{31}, {47}, {57}}));
    CHECK(rank_brute(IntMatrix(k2.begin(), k2.end())) == 2);

    auto k3 = kernel_lattice_basis({{10}, {11}, {14}, {19}});
    REQUIRE(k3.size() == 3);
    for (const auto& z : k3) CHECK(in_row_kernel(z, {{10}, {11}, {14}, {19}}));
    CHECK(rank_brute(IntMatrix(k3.begin(), k3.end())) == 3);

    CHECK(kernel_lattice_basis({{1, 0}, {0, 1}}).empty());
}

TEST_CASE("kernel lattice basis properties on random matrices", "[diophantine]") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> npick(1, 4), dpick(1, 3);
    std::uniform_int_distribution<std::int64_t> epick(-3, 3);
    for (int iter = 0; iter < 50; ++iter) {
        const int n = npick(rng), d = dpick(rng);
        IntMatrix a(n, IntVector(d));
        for (auto& row : a)
            for (auto& e : row) e = epick(rng);
        auto basis = kernel_lattice_basis(a);
        CHECK(basis.size() == static_cast<std::size_t>(n) - rank_brute(a));
        for (const auto& z : basis) {
            CHECK(in_row_kernel(z, a));
            CHECK(!is_zero(z));
        }
        if (!basis.empty())
            CHECK(rank_brute(IntMatrix(basis.begin(), basis.end())) == basis.size());
    }
}

TEST_CASE("rational solve of the all-ones system", "[diophantine]") {
    CHECK(!rational_solve_all_ones({{2}, {3}}).has_value());
    CHECK(!rational_solve_all_ones({{10}, {11}, {14}, {19}}).has_value());

    auto w1 = rational_solve_all_ones({{1, 10}, {1, 11}, {1, 14}, {1, 19}});
    REQUIRE(w1.has_value());
    CHECK(*w1 == RatVector{Rational(1), Rational(0)});

    auto w2 = rational_solve_all_ones({{1, 0}, {1, 3}, {1, 5}, {1, 7}});
    REQUIRE(w2.has_value());
    CHECK(*w2 == RatVector{Rational(1), Rational(0)});

    auto w3 = rational_solve_all_ones({{2, 0}, {0, 3}});
    REQUIRE(w3.has_value());
    CHECK(*w3 == RatVector{Rational(1, 2), Rational(1, 3)});
}

TEST_CASE("positivity witness on fixed matrices", "[diophantine]") {
    auto w = positivity_witness({{10}, {11}, {14}, {19}});
    REQUIRE(w.has_value());
    for (const auto& row : IntMatrix{{10}, {11}, {14}, {19}})
        CHECK(dot(row, *w) >= Rational(1));
    CHECK(primitive_integer_multiple(*w) == IntVector{1});

    CHECK(!positivity_witness({{1}, {-1}}).has_value());
    CHECK(!positivity_witness({{1, -1}, {-1, 1}}).has_value());

    auto w2 = positivity_witness({{2, -1}, {0, 1}});
    REQUIRE(w2.has_value());
    CHECK(dot(IntVector{2, -1}, *w2) >= Rational(1));
    CHECK(dot(IntVector{0, 1}, *w2) >= Rational(1));
}

TEST_CASE("minimal nonnegative solutions on fixed systems", "[diophantine]") {
    CHECK(minimal_nonneg_solutions({{1}, {2}}, {2}) ==
          std::vector<IntVector>{{0, 1}, {2, 0}});
    CHECK(minimal_nonneg_solutions({{1}, {-1}}, {0}) == std::vector<IntVector>{{1, 1}});
    CHECK(minimal_nonneg_solutions({{3}, {-2}}, {0}) == std::vector<IntVector>{{2, 3}});
    CHECK(minimal_nonneg_solutions({{31}, {47}, {57}}, {171}) ==
          std::vector<IntVector>{{0, 0, 3}, {4, 1, 0}});
    CHECK(minimal_nonneg_solutions({{2}, {3}}, {1}).empty());
}

TEST_CASE("minimal nonnegative solutions match brute enumeration", "[diophantine]") {
    std::mt19937_64 rng(20240812);
    std::uniform_int_distribution<int> npick(1, 4), dpick(1, 2);
    std::uniform_int_distribution<std::int64_t> epick(-3, 3), bpick(0, 4);
    for (int iter = 0; iter < 60; ++iter) {
        const int n = npick(rng), d = dpick(rng);
        IntMatrix c(n, IntVector(d));
        for (auto& row : c)
            for (auto& e : row) e = epick(rng);
        IntVector b(d, 0);
        if (iter % 2 == 0)
            for (auto& e : b) e = bpick(rng);

        auto lib = minimal_nonneg_solutions(c, b);
        std::int64_t cap = 8;
        for (const auto& u : lib) cap = std::max(cap, oracle::length_of(u) + 2);
        auto brute = oracle::minimal_solutions_brute(c, b, cap);
        CHECK(lib == brute);

        for (const auto& u : lib)
            for (const auto& v : lib) CHECK(!oracle::dominates(u, v));
    }
}

TEST_CASE("positivity witness and nonnegative kernel vectors are alternatives",
          "[diophantine]") {
    std::mt19937_64 rng(20240813);
    std::uniform_int_distribution<int> npick(1, 4), dpick(1, 3);
    std::uniform_int_distribution<std::int64_t> epick(-3, 3);
    for (int iter = 0; iter < 60; ++iter) {
        const int n = npick(rng), d = dpick(rng);
        IntMatrix a(n, IntVector(d));
        for (auto& row : a)
            for (auto& e : row) e = epick(rng);

        auto witness = positivity_witness(a);
        auto kernel = minimal_nonneg_solutions(a, IntVector(d, 0));
        CHECK(witness.has_value() == kernel.empty());
        if (witness)
            for (const auto& row : a) CHECK(dot(row, *witness) >= Rational(1));
        for (const auto& u : kernel) {
            CHECK(!is_zero(u));
            CHECK(in_row_kernel(u, a));
            CHECK(nonneg(u));
        }
    }
}
