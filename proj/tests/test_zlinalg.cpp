#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weylext/zlinalg.hpp"

#include <random>
#include <sstream>
#include <vector>

using namespace weylext;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    IntMatrix A(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            A.at(i, j) = rows[i][j];
    return A;
}

IntMatrix random_matrix(std::mt19937_64& rng, int r, int c, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    IntMatrix A(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            A.at(i, j) = d(rng);
    return A;
}

// Product of random elementary integer operations: unimodular by construction.
IntMatrix random_unimodular(std::mt19937_64& rng, int n, int ops) {
    IntMatrix U = IntMatrix::identity(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int k = 0; k < ops; ++k) {
        int i = pick(rng), j = pick(rng);
        switch (rng() % 3) {
        case 0:
            if (i != j) {
                Int c = coef(rng);
                for (int t = 0; t < n; ++t)
                    U.at(i, t) += c * U.at(j, t);
            }
            break;
        case 1:
            for (int t = 0; t < n; ++t)
                std::swap(U.at(i, t), U.at(j, t));
            break;
        default:
            for (int t = 0; t < n; ++t)
                U.at(i, t) = -U.at(i, t);
        }
    }
    return U;
}

std::vector<Int> mat_apply(const IntMatrix& A, const std::vector<Int>& x) {
    std::vector<Int> v(A.rows(), 0);
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            v[i] += A.at(i, j) * x[j];
    return v;
}

} // namespace

TEST_CASE("abelian group rendering") {
    CHECK(AbelianGroup{}.to_string() == "0");
    CHECK(AbelianGroup{1, {}}.to_string() == "Z");
    CHECK(AbelianGroup{0, {3}}.to_string() == "Z_3");
    CHECK(AbelianGroup{2, {2, 6}}.to_string() == "Z^2 (+) Z_2 (+) Z_6");
    CHECK(AbelianGroup{}.is_trivial());
    CHECK(!AbelianGroup{0, {2}}.is_trivial());
}

TEST_CASE("smith normal form fixtures") {
    auto s1 = smith_normal_form(from_rows({{3, 3}}));
    CHECK(s1.factors == std::vector<Int>{3});
    CHECK(s1.rank == 1);

    auto s2 = smith_normal_form(from_rows({{3, 3, 0}, {-2, 0, 2}, {0, -3, -3}}));
    CHECK(s2.factors == std::vector<Int>{1, 3});
    CHECK(s2.rank == 2);

    auto s3 = smith_normal_form(IntMatrix::identity(4));
    CHECK(s3.factors == std::vector<Int>(4, 1));

    auto s4 = smith_normal_form(from_rows({{4, 0}, {0, 6}}));
    CHECK(s4.factors == std::vector<Int>{2, 12});

    auto s5 = smith_normal_form(IntMatrix(3, 2));
    CHECK(s5.factors.empty());
    CHECK(s5.rank == 0);

    auto s6 = smith_normal_form(from_rows({{-5}}));
    CHECK(s6.factors == std::vector<Int>{5});

    auto s7 = smith_normal_form(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
    CHECK(s7.factors == std::vector<Int>{2, 2, 156});
}

TEST_CASE("smith transforms diagonalize") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 60; ++it) {
        int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
        IntMatrix A = random_matrix(rng, r, c, 9);
        auto st = smith_with_transforms(A);
        IntMatrix D = st.L * A * st.R;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                Int want = (i == j && i < st.rank) ? st.factors[i] : Int(0);
                CHECK(D.at(i, j) == want);
            }
        // transforms must be invertible over the integers
        CHECK(cokernel(st.L, r).is_trivial());
        CHECK(cokernel(st.R, c).is_trivial());
        for (size_t i = 1; i < st.factors.size(); ++i)
            CHECK(st.factors[i] % st.factors[i - 1] == 0);
    }
}

TEST_CASE("invariant factors are unimodular invariants") {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 60; ++it) {
        int r = 2 + static_cast<int>(rng() % 4), c = 2 + static_cast<int>(rng() % 4);
        IntMatrix A = random_matrix(rng, r, c, 9);
        IntMatrix U = random_unimodular(rng, r, 12);
        IntMatrix V = random_unimodular(rng, c, 12);
        auto sa = smith_normal_form(A);
        auto sb = smith_normal_form(U * A * V);
        CHECK(sa.factors == sb.factors);
        CHECK(sa.rank == sb.rank);
    }
}

TEST_CASE("hermite solve finds lattice members") {
    IntMatrix two = from_rows({{2}});
    auto h1 = hermite_solve(two, {4});
    REQUIRE(h1.has_value());
    CHECK((*h1)[0] == 2);
    CHECK(!hermite_solve(two, {3}).has_value());

    IntMatrix A = from_rows({{3, 1, 2}, {-2, 0, 4}, {0, 5, 1}});
    auto h2 = hermite_solve(A, {9, -6, 0});
    REQUIRE(h2.has_value());
    CHECK(mat_apply(A, *h2) == std::vector<Int>{9, -6, 0});

    IntMatrix tall = from_rows({{2}, {0}});
    CHECK(!hermite_solve(tall, {1, 0}).has_value());
    CHECK(!hermite_solve(tall, {0, 1}).has_value());
    auto h3 = hermite_solve(tall, {-6, 0});
    REQUIRE(h3.has_value());
    CHECK((*h3)[0] == -3);

    std::mt19937_64 rng(13);
    for (int it = 0; it < 80; ++it) {
        int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
        IntMatrix M = random_matrix(rng, r, c, 6);
        std::uniform_int_distribution<long> d(-5, 5);
        std::vector<Int> x(c);
        for (auto& e : x)
            e = d(rng);
        std::vector<Int> v = mat_apply(M, x);
        auto h = hermite_solve(M, v);
        REQUIRE(h.has_value());
        CHECK(mat_apply(M, *h) == v);
    }
}

TEST_CASE("cokernel extracts the quotient") {
    AbelianGroup g1 = cokernel(from_rows({{2, 0}, {0, 3}}), 2);
    CHECK(g1 == AbelianGroup{0, {6}});

    AbelianGroup g2 = cokernel(IntMatrix(2, 2), 2);
    CHECK(g2 == AbelianGroup{2, {}});

    AbelianGroup g3 = cokernel(from_rows({{2}, {4}}), 2);
    CHECK(g3 == AbelianGroup{1, {2}});

    AbelianGroup g4 = cokernel(from_rows({{1, 0}, {0, 1}}), 2);
    CHECK(g4.is_trivial());

    CHECK_THROWS(cokernel(IntMatrix(2, 2), 3));
}

TEST_CASE("coset order in the quotient lattice") {
    CHECK(coset_order(from_rows({{3}}), {1}) == Int(3));
    CHECK(coset_order(from_rows({{3}, {3}}), {1, 1}) == Int(3));
    CHECK(coset_order(from_rows({{3}, {3}}), {3, 3}) == Int(1));
    CHECK(coset_order(from_rows({{2, 0}, {0, 3}}), {1, 1}) == Int(6));
    CHECK(coset_order(from_rows({{2}, {0}}), {1, 0}) == Int(2));
    CHECK(!coset_order(from_rows({{2}, {0}}), {0, 1}).has_value());
    CHECK(!coset_order(IntMatrix(2, 1), {1, 1}).has_value());
    CHECK(coset_order(IntMatrix(2, 1), {0, 0}) == Int(1));

    std::mt19937_64 rng(17);
    for (int it = 0; it < 80; ++it) {
        int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
        IntMatrix M = random_matrix(rng, r, c, 5);
        std::uniform_int_distribution<long> d(-4, 4);
        std::vector<Int> v(r);
        for (auto& e : v)
            e = d(rng);
        auto ord = coset_order(M, v);
        auto sol = hermite_solve(M, v);
        CHECK((ord.has_value() && *ord == 1) == sol.has_value());
        if (ord.has_value()) {
            std::vector<Int> w(v);
            for (auto& e : w)
                e *= *ord;
            CHECK(hermite_solve(M, w).has_value());
            if (*ord > 1 && *ord <= 24) {
                // no smaller positive multiple may land in the lattice
                for (Int m = 1; m < *ord; ++m) {
                    std::vector<Int> u(v);
                    for (auto& e : u)
                        e *= m;
                    CHECK(!hermite_solve(M, u).has_value());
                }
            }
        }
    }
}

TEST_CASE("rank over prime fields") {
    IntMatrix A = from_rows({{2, 0}, {0, 3}});
    CHECK(rank_mod_p(A, 2) == 1);
    CHECK(rank_mod_p(A, 3) == 1);
    CHECK(rank_mod_p(A, 5) == 2);

    CHECK(rank_mod_p(from_rows({{1, 1}, {1, 1}}), 7) == 1);
    CHECK(rank_mod_p(IntMatrix(3, 3), 2) == 0);

    CHECK_THROWS(rank_mod_p(A, 4));
    CHECK_THROWS(rank_mod_p(A, 1));

    std::mt19937_64 rng(21);
    for (int it = 0; it < 60; ++it) {
        int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
        IntMatrix M = random_matrix(rng, r, c, 9);
        auto s = smith_normal_form(M);
        for (long p : {2L, 3L, 5L, 7L}) {
            int drop = 0;
            for (auto& f : s.factors)
                if (f % p == 0)
                    ++drop;
            CHECK(rank_mod_p(M, p) == s.rank - drop);
        }
    }
}

TEST_CASE("triplet text round trip") {
    std::istringstream in("2 3\n0 0 5\n1 2 -7\n");
    IntMatrix A = read_triplets(in);
    CHECK(A == from_rows({{5, 0, 0}, {0, 0, -7}}));

    std::mt19937_64 rng(29);
    for (int it = 0; it < 40; ++it) {
        int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
        IntMatrix M(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (rng() % 3 == 0)
                    M.at(i, j) = Int(static_cast<long>(rng() % 2001)) - 1000;
        std::ostringstream os;
        write_triplets(os, M);
        std::istringstream is(os.str());
        CHECK(read_triplets(is) == M);
    }

    std::istringstream bad("1 1\n5 0 1\n");
    CHECK_THROWS(read_triplets(bad));
}

TEST_CASE("matrix helpers") {
    IntMatrix A = from_rows({{1, 2, 3}, {4, 5, 6}});
    IntMatrix B = A.submatrix({1, 0}, {2, 0});
    CHECK(B == from_rows({{6, 4}, {3, 1}}));
    CHECK((-A).at(0, 2) == -3);
    CHECK(IntMatrix(2, 2).is_zero());
    CHECK(!A.is_zero());

    IntMatrix P = from_rows({{1, 0}, {0, 2}, {3, 1}}) * from_rows({{1, -1}, {2, 0}});
    CHECK(P == from_rows({{1, -1}, {4, 0}, {5, -3}}));
}
