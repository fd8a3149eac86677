#include <doctest.h>

#include "gpd/error.hpp"
#include "gpd/linalg.hpp"
#include "gpd/random.hpp"
#include "oracle.hpp"

using namespace gpd;

namespace
{

oracle::Mat columns_of(Matrix const& m)
{
    oracle::Mat out(m.cols(), oracle::Vec(m.rows()));
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            out[c][r] = m(r, c);
    return out;
}

// dim(U ∩ W) over GF(2) by listing every vector of U.
std::size_t brute_intersection_gf2(Subspace const& u, Subspace const& w)
{
    std::size_t const k = u.dim();
    std::size_t const n = u.ambient_dim;
    std::size_t count = 0;
    auto const w_cols = columns_of(w.basis);
    std::size_t const w_rank = oracle::rank(w_cols, 2);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask)
    {
        oracle::Vec v(n, 0);
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1)
                for (std::size_t r = 0; r < n; ++r)
                    v[r] ^= u.basis(r, i);
        auto with = w_cols;
        with.push_back(v);
        if (oracle::rank(with, 2) == w_rank)
            ++count;
    }
    std::size_t d = 0;
    while ((std::size_t{1} << d) < count)
        ++d;
    return d;
}

} // namespace

TEST_CASE("fields")
{
    CHECK_NOTHROW(Field(2));
    CHECK_NOTHROW(Field(65521));
    CHECK_THROWS_AS(Field(4), Error);
    CHECK_THROWS_AS(Field(1), Error);
    Field f(7);
    CHECK(f.residue(-1) == 6);
    CHECK(f.mul(f.inv(3), 3) == 1);
}

TEST_CASE("rank")
{
    Field const f2(2);
    CHECK(rank(Matrix::identity(3, f2)) == 3);
    CHECK(rank(Matrix(3, 4, f2)) == 0);
    CHECK(rank(Matrix::from_ints(2, 2, {1, 1, 1, 1}, f2)) == 1);
    CHECK(rank(Matrix(0, 5, f2)) == 0);
    CHECK(rank(Matrix(5, 0, f2)) == 0);

    SUBCASE("characteristic matters")
    {
        // det = 2: singular over GF(2), invertible over GF(3).
        auto const ints = std::vector<std::int64_t>{1, 1, 1, -1};
        CHECK(rank(Matrix::from_ints(2, 2, ints, Field(2))) == 1);
        CHECK(rank(Matrix::from_ints(2, 2, ints, Field(3))) == 2);
    }
    SUBCASE("random matrices against the oracle")
    {
        random::Rng rng(17);
        for (std::uint32_t p : {2u, 3u, 5u, 101u})
            for (int t = 0; t < 40; ++t)
            {
                std::size_t const r = 1 + t % 9, c = 1 + (t * 7) % 11;
                Matrix m = random::matrix(rng, r, c, Field(p));
                // Sparsify so ranks vary.
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < c; ++j)
                        if ((i + j + t) % 3 == 0)
                            m.set(i, j, 0);
                CHECK(rank(m) == oracle::rank(columns_of(m), p));
            }
    }
    SUBCASE("wide GF(2) rows cross word boundaries")
    {
        random::Rng rng(23);
        Matrix m = random::matrix(rng, 70, 150, Field(2));
        CHECK(rank(m) == oracle::rank(columns_of(m), 2));
    }
}

TEST_CASE("kernel basis")
{
    Field const f2(2);
    CHECK(kernel_basis(Matrix::identity(3, f2)).dim() == 0);
    CHECK(kernel_basis(Matrix(2, 3, f2)).dim() == 3);
    auto k = kernel_basis(Matrix::from_ints(1, 2, {1, 1}, f2));
    REQUIRE(k.dim() == 1);
    CHECK(k.basis(0, 0) == 1);
    CHECK(k.basis(1, 0) == 1);

    random::Rng rng(29);
    for (std::uint32_t p : {2u, 3u, 7u})
        for (int t = 0; t < 30; ++t)
        {
            Matrix m = random::matrix(rng, 1 + t % 5, 1 + t % 8, Field(p));
            auto ker = kernel_basis(m);
            CHECK((m * ker.basis).is_zero());
            CHECK(ker.dim() + rank(m) == m.cols());
            CHECK(rank(ker.basis) == ker.dim());
        }
}

TEST_CASE("intersection dimension")
{
    Field const f2(2);
    SUBCASE("idempotent")
    {
        auto u = column_space(Matrix::from_ints(3, 2, {1, 0, 1, 1, 0, 1}, f2));
        CHECK(intersection_dim(u, u) == u.dim());
    }
    SUBCASE("complementary planes")
    {
        Subspace u{3, Matrix::from_ints(3, 2, {1, 0, 0, 1, 0, 0}, f2)};
        Subspace w{3, Matrix::from_ints(3, 1, {0, 0, 1}, f2)};
        CHECK(intersection_dim(u, w) == 0);
    }
    SUBCASE("containment")
    {
        Subspace u{2, Matrix::identity(2, f2)};
        Subspace w{2, Matrix::from_ints(2, 1, {1, 1}, f2)};
        CHECK(intersection_dim(u, w) == 1);
    }
    SUBCASE("ambient mismatch")
    {
        CHECK_THROWS_AS(intersection_dim(zero_subspace(2, f2), zero_subspace(3, f2)), Error);
    }
    SUBCASE("brute force over GF(2)")
    {
        random::Rng rng(31);
        for (int t = 0; t < 60; ++t)
        {
            std::size_t const n = 2 + t % 6;
            auto u = column_space(random::matrix(rng, n, 1 + t % 4, f2));
            auto w = column_space(random::matrix(rng, n, 1 + (t / 2) % 4, f2));
            CHECK(intersection_dim(u, w) == brute_intersection_gf2(u, w));
        }
    }
}

TEST_CASE("solve, embed, complements")
{
    Field const f3(3);
    Matrix basis = Matrix::from_ints(3, 2, {1, 0, 1, 1, 0, 2}, f3);
    Matrix x = Matrix::from_ints(2, 1, {2, 1}, f3);
    Matrix rhs = basis * x;
    CHECK(solve(basis, rhs) == x);
    CHECK_THROWS_AS(solve(basis, Matrix::from_ints(3, 1, {1, 0, 0}, f3)), Error);

    Subspace s{2, Matrix::identity(2, f3)};
    std::vector<std::size_t> positions = {0, 2};
    auto e = embed(s, positions, 3);
    CHECK(e.ambient_dim == 3);
    CHECK(e.basis(2, 1) == 1);
    CHECK(e.basis(1, 0) == 0);

    auto extra = complement_columns(basis, Matrix::identity(3, f3));
    REQUIRE(extra.size() == 1);
    CHECK(rank(hconcat(basis, Matrix::identity(3, f3).select_columns(extra))) == 3);
}
