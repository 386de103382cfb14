#include "doctest.h"
#include "hopfres/fp.hpp"

#include <numeric>

using namespace hopfres;

static FpMat from_rows(u64 p, const std::vector<std::vector<u32>>& rows) {
    FpMat m(p, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

TEST_CASE("field construction and prime selection") {
    CHECK(choose_prime(3, 9) == 13);
    CHECK(choose_prime(3, 81) == 97);
    CHECK(choose_prime(3, 243) == 271);
    PrimeField f = make_field_auto(3, 9);
    CHECK(f.p == 13);
    CHECK(fp_pow(f.q, 3, f.p) == 1);
    CHECK(f.q != 1);
    CHECK(fp_pow(f.q, 1, f.p) != 1);
    CHECK_THROWS_AS(make_field(12, 3, 3), Error);    // not prime
    CHECK_THROWS_AS(make_field(13, 3, 5), Error);    // 5^3 = 8 mod 13
}

TEST_CASE("rref on identity and zero") {
    FpMat id = FpMat::identity(7, 2);
    auto r = rref(id);
    CHECK(r.mat == id);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.rank == 2);

    FpMat z(7, 3, 3);
    auto rz = rref(z);
    CHECK(rz.mat.is_zero());
    CHECK(rz.rank == 0);
    CHECK(rz.pivots.empty());
}

TEST_CASE("rank-1 matrix over F_7") {
    // [[1,2],[2,4]]: second row is twice the first.
    FpMat m = from_rows(7, {{1, 2}, {2, 4}});
    CHECK(rank(m) == 1);

    FpMat ker = kernel_basis(m);
    REQUIRE(ker.rows() == 1);
    // m * v^T = 0 for the kernel row.
    auto v = ker.row_vec(0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        u64 acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc += u64(m.at(i, j)) * v[j];
        CHECK(acc % 7 == 0);
    }
}

TEST_CASE("rref is idempotent") {
    Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t rows = 1 + rng.below(8), cols = 1 + rng.below(8);
        FpMat m(101, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = u32(rng.below(101));
        auto r1 = rref(m);
        auto r2 = rref(r1.mat);
        CHECK(r1.mat == r2.mat);
        CHECK(r1.rank == r2.rank);
    }
}

TEST_CASE("rank-nullity on random matrices") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = 1 + rng.below(10), cols = 1 + rng.below(10);
        FpMat m(13, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = u32(rng.below(13));
        auto r = rref(m);
        FpMat ker = kernel_basis(m);
        CHECK(r.rank + ker.rows() == cols);
        if (ker.rows() > 0) CHECK(mul(m, ker.transpose()).is_zero());
    }
}

TEST_CASE("solve: identity, zero, and random full-rank") {
    FpMat id = FpMat::identity(7, 3);
    std::vector<u32> b{1, 5, 6};
    auto x = solve(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    FpMat z(7, 2, 2);
    CHECK_FALSE(solve(z, {1, 0}).has_value());

    // Random full-rank 5x5 over F_109, verified by substituting back.
    Rng rng(3);
    FpMat m(109, 5, 5);
    do {
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) m.at(i, j) = u32(rng.below(109));
    } while (rank(m) < 5);
    std::vector<u32> rhs(5);
    for (auto& v : rhs) v = u32(rng.below(109));
    auto sol = solve(m, rhs);
    REQUIRE(sol.has_value());
    CHECK(mul_vec(m, *sol) == rhs);
}

TEST_CASE("solve_lexmin picks the lexicographically least solution") {
    // x0 - x1 = 1 over F_5: solutions (1+t, t); lex-least is (0, 4).
    FpMat m = from_rows(5, {{1, 4}});
    auto x = solve_lexmin(m, {1});
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<u32>{0, 4});

    // Exhaustive cross-check on a random underdetermined system.
    Rng rng(11);
    FpMat a(5, 2, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 4; ++j) a.at(i, j) = u32(rng.below(5));
    std::vector<u32> t{u32(rng.below(5)), u32(rng.below(5)), u32(rng.below(5)),
                       u32(rng.below(5))};
    auto b = mul_vec(a, t);
    auto got = solve_lexmin(a, b);
    REQUIRE(got.has_value());
    // Enumerate all 5^4 vectors; the lex-least solution must match.
    std::vector<u32> best;
    for (u32 c0 = 0; c0 < 5; ++c0)
        for (u32 c1 = 0; c1 < 5; ++c1)
            for (u32 c2 = 0; c2 < 5; ++c2)
                for (u32 c3 = 0; c3 < 5; ++c3) {
                    std::vector<u32> cand{c0, c1, c2, c3};
                    if (mul_vec(a, cand) == b) {
                        if (best.empty() || cand < best) best = cand;
                    }
                }
    CHECK(*got == best);
}

TEST_CASE("inverse and matrix product") {
    Rng rng(5);
    FpMat m(97, 6, 6);
    do {
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = u32(rng.below(97));
    } while (rank(m) < 6);
    FpMat inv = inverse(m);
    CHECK(mul(m, inv) == FpMat::identity(97, 6));
    CHECK(mul(inv, m) == FpMat::identity(97, 6));
}

TEST_CASE("echelon basis accumulator") {
    EchelonBasis eb(7, 4);
    CHECK(eb.insert({1, 2, 3, 4}));
    CHECK(eb.insert({0, 1, 1, 0}));
    CHECK_FALSE(eb.insert({2, 4, 6, 1}));  // = 2 * (1,2,3,4) mod 7, already in span
    CHECK(eb.insert({0, 0, 1, 0}));
    CHECK(eb.dim() == 3);
    // Linear combination of the first two is contained.
    std::vector<u32> combo(4);
    for (std::size_t j = 0; j < 4; ++j)
        combo[j] = u32((u64(3) * eb.rows()[0][j] + 2 * eb.rows()[1][j]) % 7);
    CHECK(eb.contains(combo));
    CHECK_FALSE(eb.insert(combo));
    // Coordinates round-trip.
    auto c = eb.coordinates(combo);
    std::vector<u32> back(4, 0);
    for (std::size_t i = 0; i < eb.dim(); ++i)
        for (std::size_t j = 0; j < 4; ++j)
            back[j] = u32((back[j] + u64(c[i]) * eb.rows()[i][j]) % 7);
    CHECK(back == combo);
}
