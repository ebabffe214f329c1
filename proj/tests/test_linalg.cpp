#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hopfcas/linalg.hpp>

#include <random>

using namespace hopfcas;

TEST_CASE("rank and nullspace of a rational matrix") {
    // rows of [[1,2,3],[2,4,6],[1,0,1]]
    std::vector<SparseRow> rows = {
        {{0, Cyclo(1)}, {1, Cyclo(2)}, {2, Cyclo(3)}},
        {{0, Cyclo(2)}, {1, Cyclo(4)}, {2, Cyclo(6)}},
        {{0, Cyclo(1)}, {2, Cyclo(1)}},
    };
    CHECK(sparse_rank(rows) == 2);
    auto ns = sparse_nullspace(rows, 3);
    REQUIRE(ns.size() == 1);
    // check A v = 0
    for (const auto& r : rows) {
        Cyclo acc(0);
        for (const auto& [c, a] : r) acc += a * ns[0][c];
        CHECK(acc.is_zero());
    }
}

TEST_CASE("nullspace over a cyclotomic field") {
    Cyclo i = Cyclo::i(4);
    // [[1, i]] has nullspace spanned by (i, 1)-ish
    std::vector<SparseRow> rows = {{{0, Cyclo(1).embedded(4)}, {1, i}}};
    auto ns = sparse_nullspace(rows, 2);
    REQUIRE(ns.size() == 1);
    CHECK((ns[0][0] + i * ns[0][1]).is_zero());
}

TEST_CASE("matrix inverse, det, kron") {
    Mat m(2, 2);
    m(0, 0) = Cyclo(1);
    m(0, 1) = Cyclo(1);
    m(1, 0) = Cyclo(2);
    m(1, 1) = Cyclo(-1);
    Mat mi = m.inverse();
    CHECK(m * mi == Mat::identity(2));
    CHECK(m.det() == Cyclo(-3));
    CHECK(m.rank() == 2);

    Mat k = kron(m, Mat::identity(2));
    CHECK(k.rows() == 4);
    CHECK(k(2, 0) == Cyclo(2));
    CHECK(k(3, 1) == Cyclo(2));

    Mat s(2, 2); // singular
    s(0, 0) = Cyclo(1);
    s(0, 1) = Cyclo(2);
    s(1, 0) = Cyclo(2);
    s(1, 1) = Cyclo(4);
    CHECK(s.det().is_zero());
    CHECK(s.rank() == 1);
    CHECK_THROWS_AS(s.inverse(), std::domain_error);
}

TEST_CASE("solve_columns") {
    std::vector<std::vector<Cyclo>> cols = {
        {Cyclo(1), Cyclo(0), Cyclo(1)},
        {Cyclo(1), Cyclo(1), Cyclo(0)},
    };
    std::vector<Cyclo> b = {Cyclo(3), Cyclo(1), Cyclo(2)};
    auto x = solve_columns(cols, b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Cyclo(2));
    CHECK((*x)[1] == Cyclo(1));
    std::vector<Cyclo> bad = {Cyclo(1), Cyclo(0), Cyclo(0)};
    CHECK_FALSE(solve_columns(cols, bad).has_value());
}

TEST_CASE("random rank agreement with a dense oracle") {
    // brute-force oracle: dense elimination over rationals via Mat::rank path
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> val(-3, 3);
    for (int iter = 0; iter < 20; ++iter) {
        long r = 4, c = 5;
        Mat m(r, c);
        std::vector<SparseRow> rows(r);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < c; ++j) {
                long v = val(rng);
                if (v != 0) {
                    m(i, j) = Cyclo(v);
                    rows[i].emplace_back(j, Cyclo(v));
                }
            }
        long rk = sparse_rank(rows);
        // oracle: rank = cols - nullity
        auto ns = sparse_nullspace(rows, c);
        CHECK(rk == c - static_cast<long>(ns.size()));
        CHECK(m.rank() == rk);
    }
}

TEST_CASE("echelon_basis") {
    std::vector<std::vector<Cyclo>> vecs = {
        {Cyclo(1), Cyclo(2)},
        {Cyclo(2), Cyclo(4)},
        {Cyclo(0), Cyclo(1)},
    };
    CHECK(echelon_basis(vecs) == 2);
    CHECK(vecs.size() == 2);
}
