#include <catch2/catch_amalgamated.hpp>

#include "lnd/linalg.hpp"
#include "test_util.hpp"

using namespace lnd;
using testutil::Lcg;

namespace {

QMatrix random_matrix(Lcg& rng, std::size_t rows, std::size_t cols) {
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = testutil::random_rational(rng, 5, 3);
    return m;
}

std::vector<Rational> mat_apply(const QMatrix& m, const std::vector<Rational>& v) {
    std::vector<Rational> out(m.rows, Rational(0));
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) out[r] += m.at(r, c) * v[c];
    return out;
}

bool all_zero(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("rank of known matrices") {
    QMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i) m.at(i, i) = 1;
    CHECK(matrix_rank(m) == 3);
    QMatrix z(4, 2);
    CHECK(matrix_rank(z) == 0);
    QMatrix r(2, 3);
    r.at(0, 0) = 1; r.at(0, 1) = 2; r.at(0, 2) = 3;
    r.at(1, 0) = 2; r.at(1, 1) = 4; r.at(1, 2) = 6;
    CHECK(matrix_rank(r) == 1);
}

TEST_CASE("nullspace vectors annihilate and span the right dimension") {
    Lcg rng(404);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(6);
        QMatrix m = random_matrix(rng, rows, cols);
        auto basis = nullspace_reduced(m);
        CHECK(basis.size() == cols - matrix_rank(m));
        for (const auto& v : basis) {
            CHECK(v.size() == cols);
            CHECK(!all_zero(v));
            CHECK(all_zero(mat_apply(m, v)));
        }
        // reduced basis vectors are linearly independent: stack and check rank
        if (!basis.empty()) {
            QMatrix stacked(basis.size(), cols);
            for (std::size_t r = 0; r < basis.size(); ++r)
                for (std::size_t c = 0; c < cols; ++c) stacked.at(r, c) = basis[r][c];
            CHECK(matrix_rank(stacked) == basis.size());
        }
    }
}

TEST_CASE("particular solutions") {
    Lcg rng(505);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
        QMatrix m = random_matrix(rng, rows, cols);
        std::vector<Rational> x;
        for (std::size_t c = 0; c < cols; ++c) x.push_back(testutil::random_rational(rng, 4, 2));
        auto b = mat_apply(m, x);
        auto sol = solve_particular(m, b);
        REQUIRE(sol.has_value());
        bool solves = mat_apply(m, *sol) == b;
        CHECK(solves);
    }
    // an inconsistent system has no solution
    QMatrix m(2, 1);
    m.at(0, 0) = 1;
    m.at(1, 0) = 0;
    CHECK(!solve_particular(m, {Rational(0), Rational(1)}).has_value());
}

TEST_CASE("matrix product is associative") {
    Lcg rng(606);
    QMatrix a = random_matrix(rng, 3, 4), b = random_matrix(rng, 4, 2), c = random_matrix(rng, 2, 5);
    auto lhs = qmat_mul(qmat_mul(a, b), c);
    auto rhs = qmat_mul(a, qmat_mul(b, c));
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t k = 0; k < 5; ++k) CHECK(lhs.at(r, k) == rhs.at(r, k));
}
