#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "progen/matrix.hpp"
#include "progen/rng.hpp"

using namespace progen;

namespace {

Mat random_mat(const Field& F, size_t r, size_t c, Rng& rng) {
    Mat m(F, r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.set(i, j, static_cast<fel>(rng.below(F.q())));
    return m;
}

Mat random_sparse(const Field& F, size_t r, size_t c, double density, Rng& rng) {
    Mat m(F, r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j)
            if (rng.uniform01() < density) m.set(i, j, static_cast<fel>(1 + rng.below(F.q() - 1)));
    return m;
}

}  // namespace

TEST_CASE("rref on pinned examples") {
    const Field& F5 = Field::get(5);
    Mat id = Mat::identity(F5, 3);
    std::vector<size_t> piv;
    CHECK(id.rref(&piv) == 3);
    CHECK(piv == std::vector<size_t>{0, 1, 2});

    Mat z(F5, 2, 2);
    CHECK(z.rref() == 0);

    // [[1,2],[2,4]] over F5: rank 1, pivot column 0 (row2 = 2*row1).
    Mat a = Mat::from_rows(F5, {{1, 2}, {2, 4}});
    CHECK(a.rref(&piv) == 1);
    CHECK(piv == std::vector<size_t>{0});
}

TEST_CASE("kernel on pinned examples") {
    const Field& F2 = Field::get(2);
    CHECK(Mat::identity(F2, 4).kernel_right().rows() == 0);
    Mat z(F2, 3, 3);
    Mat k = z.kernel_right();
    CHECK(k.rows() == 3);
    CHECK(k.rank() == 3);
    // [[1,1]] over F2 -> single kernel row (1,1)
    Mat a = Mat::from_rows(F2, {{1, 1}});
    Mat ka = a.kernel_right();
    REQUIRE(ka.rows() == 1);
    CHECK(ka.get(0, 0) == 1);
    CHECK(ka.get(0, 1) == 1);
}

TEST_CASE("solve on pinned examples") {
    const Field& F3 = Field::get(3);
    Mat a = Mat::from_rows(F3, {{1, 2}, {0, 1}});
    auto x = a.solve_right({0, 1});
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<fel>{1, 1});

    Mat zero1(F3, 1, 1);
    CHECK(!zero1.solve_right({1}).has_value());

    const Field& F7 = Field::get(7);
    Mat id = Mat::identity(F7, 4);
    auto y = id.solve_right({3, 1, 4, 5});
    REQUIRE(y.has_value());
    CHECK(*y == std::vector<fel>{3, 1, 4, 5});
}

TEST_CASE("kron on pinned examples") {
    const Field& F2 = Field::get(2);
    Mat i2 = Mat::identity(F2, 2), i3 = Mat::identity(F2, 3);
    CHECK(i2.kron(i3) == Mat::identity(F2, 6));
    Mat a = Mat::from_rows(F2, {{1, 1}, {0, 1}});
    Mat one = Mat::from_rows(F2, {{1}});
    CHECK(a.kron(one) == a);
    Mat aa = a.kron(a);
    // 4x4 upper unitriangular expansion of [[A,A],[0,A]]
    Mat expect = Mat::from_rows(F2, {{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}});
    CHECK(aa == expect);
}

TEST_CASE("mixed-product property of kron") {
    Rng rng(7);
    const Field& F3 = Field::get(3);
    Mat a = random_mat(F3, 3, 2, rng), b = random_mat(F3, 2, 4, rng);
    Mat c = random_mat(F3, 2, 3, rng), d = random_mat(F3, 3, 2, rng);
    CHECK((a.kron(c)) * (b.kron(d)) == (a * b).kron(c * d));
}

TEST_CASE("rank identities on random matrices over several fields") {
    for (uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        const Field& F = Field::for_q(q);
        Rng rng(100 + q);
        for (int trial = 0; trial < 5; ++trial) {
            size_t r = 1 + rng.below(trial == 0 ? 200 : 60), c = 1 + rng.below(trial == 0 ? 200 : 60);
            Mat a = random_mat(F, r, c, rng);
            size_t rank = a.rank();
            Mat e = a;
            CHECK(e.rref() == rank);
            CHECK(e.rank() == rank);                       // rref is idempotent on rank
            CHECK(a.kernel_right().rows() == c - rank);    // rank-nullity
            CHECK(a.transpose().rank() == rank);           // row rank == column rank
            Mat k = a.kernel_right();
            if (k.rows()) {
                Mat prod = a * k.transpose();
                CHECK(prod.is_zero());
            }
        }
    }
}

TEST_CASE("solve round-trip on random systems") {
    for (uint32_t q : {2u, 3u, 5u, 9u}) {
        const Field& F = Field::for_q(q);
        Rng rng(300 + q);
        for (int trial = 0; trial < 6; ++trial) {
            size_t r = 1 + rng.below(30), c = 1 + rng.below(30);
            Mat a = random_mat(F, r, c, rng);
            std::vector<fel> x(c);
            for (auto& v : x) v = static_cast<fel>(rng.below(q));
            // b = a * x
            std::vector<fel> b(r, 0);
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < c; ++j) b[i] = F.add(b[i], F.mul(a.get(i, j), x[j]));
            auto sol = a.solve_right(b);
            REQUIRE(sol.has_value());
            for (size_t i = 0; i < r; ++i) {
                fel acc = 0;
                for (size_t j = 0; j < c; ++j) acc = F.add(acc, F.mul(a.get(i, j), (*sol)[j]));
                CHECK(acc == b[i]);
            }
        }
    }
}

TEST_CASE("matrix product against schoolbook on packed kinds") {
    for (uint32_t q : {2u, 3u}) {
        const Field& F = Field::for_q(q);
        Rng rng(40 + q);
        Mat a = random_mat(F, 17, 23, rng), b = random_mat(F, 23, 9, rng);
        Mat c = a * b;
        for (size_t i = 0; i < 17; ++i)
            for (size_t j = 0; j < 9; ++j) {
                fel acc = 0;
                for (size_t k = 0; k < 23; ++k) acc = F.add(acc, F.mul(a.get(i, k), b.get(k, j)));
                CHECK(c.get(i, j) == acc);
            }
    }
}

TEST_CASE("inverse of random invertible matrices") {
    const Field& F2 = Field::get(2);
    Rng rng(9);
    int found = 0;
    while (found < 3) {
        Mat a = random_mat(F2, 20, 20, rng);
        auto inv = a.inverse();
        if (!inv) continue;
        ++found;
        CHECK((a * *inv) == Mat::identity(F2, 20));
        CHECK((*inv * a) == Mat::identity(F2, 20));
    }
}

TEST_CASE("echelon basis insert/reduce") {
    const Field& F3 = Field::get(3);
    EchelonBasis eb(F3, 4);
    CHECK(eb.insert_codes({1, 2, 0, 1}));
    CHECK(eb.insert_codes({0, 1, 1, 0}));
    CHECK(!eb.insert_codes({1, 0, 1, 1}));  // = row1 - 2*row2
    CHECK(eb.size() == 2);
    CHECK(eb.contains({2, 0, 2, 2}));  // 2*row1 + 2*row2
    CHECK(!eb.contains({0, 0, 1, 0}));
}

TEST_CASE("sparse and dense ranks agree") {
    for (uint32_t q : {2u, 3u, 5u, 4u}) {
        const Field& F = Field::for_q(q);
        Rng rng(500 + q);
        for (int trial = 0; trial < 3; ++trial) {
            size_t r = 20 + rng.below(60), c = 20 + rng.below(60);
            Mat d = random_sparse(F, r, c, 0.06, rng);
            SparseMat s(F, r, c);
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < c; ++j)
                    if (d.get(i, j)) s.add(i, j, d.get(i, j));
            CHECK(s.rank() == d.rank());
            CHECK(s.to_dense() == d);
        }
    }
}

TEST_CASE("sparse rank exercises the dense fallback") {
    const Field& F2 = Field::get(2);
    Rng rng(77);
    Mat d = random_sparse(F2, 120, 100, 0.25, rng);
    SparseMat s(F2, 120, 100);
    for (size_t i = 0; i < 120; ++i)
        for (size_t j = 0; j < 100; ++j)
            if (d.get(i, j)) s.add(i, j, 1);
    CHECK(s.rank(0.05) == d.rank());
}
