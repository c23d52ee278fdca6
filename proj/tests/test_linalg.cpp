#include "doctest.h"

#include "padicup/errors.hpp"
#include "padicup/linalg.hpp"
#include "support.hpp"

using namespace padicup;
using namespace padicup::testing;

namespace {

PMatrix random_matrix(Rng& rng, const Prime& p, std::size_t n) {
    std::vector<ExactRational> data(n * n);
    for (auto& x : data)
        x = random_rational(rng, p);
    return PMatrix(p, n, std::move(data));
}

PMatrix diag(const Prime& p, std::initializer_list<ExactRational> entries) {
    PMatrix m(p, entries.size());
    std::size_t i = 0;
    for (const auto& e : entries) {
        m(i, i) = e;
        ++i;
    }
    return m;
}

PMatrix swap2(const Prime& p) { return PMatrix(p, 2, {0, 1, 1, 0}); }

}  // namespace

TEST_CASE("sup_norm examples") {
    CHECK(sup_norm(vec(p7, {1, 7})) == UltraNorm::one());
    CHECK(sup_norm(vec(p7, {0, 0})) == UltraNorm::zero());
    // brute-force oracle: entrywise valuations 2 and -1 give |.| = 7^-2 and 7^1
    const auto v1 = brute_valuation(49, 3, 7);
    const auto v2 = brute_valuation(1, 7, 7);
    REQUIRE(v1 == 2);
    REQUIRE(v2 == -1);
    CHECK(sup_norm(vec(p7, {ExactRational(49, 3), ExactRational(1, 7)})) == UltraNorm::power(-std::min(*v1, *v2)));
}

TEST_CASE("inner_product examples") {
    CHECK(inner_product(PVector::unit(p5, 2, 0), PVector::unit(p5, 2, 1)) == ExactRational(0));
    // (576 + 49) / 625 = 1
    CHECK(inner_product(vec(p7, {ExactRational(24, 25), ExactRational(-7, 25)}),
                        vec(p7, {ExactRational(24, 25), ExactRational(-7, 25)})) == ExactRational(625, 625));
    CHECK(inner_product(vec(p5, {1, 2, 3}), vec(p5, {4, 5, 6})) == ExactRational(32));
    CHECK_THROWS_AS(inner_product(vec(p5, {1, 2}), vec(p5, {1, 2, 3})), UsageError);
    CHECK_THROWS_AS(inner_product(vec(p5, {1, 2}), vec(p7, {1, 2})), UsageError);
}

TEST_CASE("cauchy_schwarz examples") {
    CHECK(cauchy_schwarz_check(PVector::unit(p3, 2, 0), PVector::unit(p3, 2, 0)));
    // |14|_7 = 1/7 <= 1 * 1
    CHECK(padic_abs(inner_product(vec(p7, {7, 1}), vec(p7, {1, 7})), p7) == UltraNorm::power(-1));
    CHECK(cauchy_schwarz_check(vec(p7, {7, 1}), vec(p7, {1, 7})));
    CHECK(cauchy_schwarz_check(vec(p7, {ExactRational(1, 49), 3}), PVector::zero(p7, 2)));
}

TEST_CASE("matvec examples") {
    const PVector v = vec(p5, {ExactRational(2, 3), ExactRational(-1, 5)});
    CHECK(PMatrix::identity(p5, 2) * v == v);
    CHECK(swap2(p5) * v == vec(p5, {ExactRational(-1, 5), ExactRational(2, 3)}));
    CHECK(rotation_matrix() * PVector::unit(p7, 2, 0) == vec(p7, {ExactRational(24, 25), ExactRational(-7, 25)}));
    CHECK_THROWS_AS(PMatrix::identity(p5, 3) * v, UsageError);
}

TEST_CASE("operator_norm examples") {
    CHECK(operator_norm(PMatrix::identity(p5, 3)) == UltraNorm::one());
    CHECK(operator_norm(PMatrix(p5, 3)) == UltraNorm::zero());

    const PMatrix a(p7, 2, {0, ExactRational(7, 25), 0, 0});
    CHECK(operator_norm(a) == UltraNorm::power(-1));
    // sampling oracle: no x exceeds the ratio, e_2 attains it
    Rng rng = test_rng(3);
    for (int i = 0; i < 1000; ++i) {
        const PVector x = random_vector(rng, p7, 2);
        if (x.is_zero())
            continue;
        CHECK(sup_norm(a * x) <= UltraNorm::power(-1) * sup_norm(x));
    }
    CHECK(sup_norm(a * PVector::unit(p7, 2, 1)) == UltraNorm::power(-1));
}

TEST_CASE("operator norm is attained on a coordinate vector and bounds random vectors") {
    Rng rng = test_rng(4);
    for (const auto& p : kPrimes)
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t n = 1 + rng.below(5);
            const PMatrix a = random_matrix(rng, p, n);
            const UltraNorm norm = operator_norm(a);
            bool attained = false;
            for (std::size_t j = 0; j < n; ++j)
                attained = attained || sup_norm(a * PVector::unit(p, n, j)) == norm;
            CHECK(attained);
            for (int i = 0; i < 1000 / 20; ++i) {
                const PVector x = random_vector(rng, p, n);
                CHECK(sup_norm(a * x) <= norm * sup_norm(x));
            }
        }
}

TEST_CASE("operator norm is submultiplicative") {
    Rng rng = test_rng(5);
    for (const auto& p : kPrimes)
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 1 + rng.below(4);
            const PMatrix a = random_matrix(rng, p, n);
            const PMatrix b = random_matrix(rng, p, n);
            CHECK(operator_norm(a * b) <= operator_norm(a) * operator_norm(b));
        }
}

TEST_CASE("vector sup norm is ultrametric") {
    Rng rng = test_rng(6);
    for (const auto& p : kPrimes)
        for (int i = 0; i < 400; ++i) {
            const std::size_t n = 1 + rng.below(6);
            const PVector u = random_vector(rng, p, n);
            const PVector v = random_vector(rng, p, n);
            CHECK(sup_norm(u + v) <= max(sup_norm(u), sup_norm(v)));
        }
}

TEST_CASE("invert examples") {
    CHECK(invert(PMatrix::identity(p3, 3)) == PMatrix::identity(p3, 3));
    CHECK(invert(diag(p5, {2, 3})) == diag(p5, {ExactRational(1, 2), ExactRational(1, 3)}));
    const PMatrix r = rotation_matrix();
    REQUIRE(r.transpose() * r == PMatrix::identity(p7, 2));
    CHECK(invert(r) == r.transpose());
    CHECK_THROWS_AS(invert(PMatrix(p5, 2, {1, 2, 2, 4})), SingularMatrixError);
}

TEST_CASE("invert and determinant on random matrices") {
    Rng rng = test_rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Prime& p = kPrimes[trial % kPrimes.size()];
        const std::size_t n = 1 + rng.below(5);
        const PMatrix a = random_matrix(rng, p, n);
        const ExactRational det = determinant(a);
        if (det.is_zero()) {
            CHECK_THROWS_AS(invert(a), SingularMatrixError);
            continue;
        }
        const PMatrix inv = invert(a);
        CHECK(a * inv == PMatrix::identity(p, n));
        CHECK(inv * a == PMatrix::identity(p, n));
        CHECK(determinant(inv) * det == ExactRational(1));
    }
}

TEST_CASE("determinant of a 2x2 matches ad - bc") {
    Rng rng = test_rng(8);
    for (int i = 0; i < 200; ++i) {
        const PMatrix a = random_matrix(rng, p5, 2);
        CHECK(determinant(a) == a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0));
    }
}

TEST_CASE("nullspace") {
    // x + y = 0 in Q^3 leaves a 2-dimensional solution space
    const auto basis = nullspace({{1, 1, 0}}, 3);
    CHECK(basis.size() == 2);
    CHECK(nullspace({{1, 0}, {0, 1}}, 2).empty());
    CHECK(nullspace({}, 2).size() == 2);

    Rng rng = test_rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t cols = 1 + rng.below(5);
        const std::size_t rows = rng.below(7);
        std::vector<std::vector<ExactRational>> a(rows, std::vector<ExactRational>(cols));
        for (auto& r : a)
            for (auto& x : r)
                x = rng.below(3) == 0 ? ExactRational(0) : random_rational(rng, p3);
        const auto null = nullspace(a, cols);
        for (const auto& v : null)
            for (const auto& r : a) {
                ExactRational acc = 0;
                for (std::size_t j = 0; j < cols; ++j)
                    acc += r[j] * v[j];
                CHECK(acc.is_zero());
            }
        // square systems: trivial nullspace iff nonzero determinant
        if (rows == cols) {
            std::vector<ExactRational> flat;
            for (const auto& r : a)
                flat.insert(flat.end(), r.begin(), r.end());
            CHECK(null.empty() == !determinant(PMatrix(p3, cols, flat)).is_zero());
        }
    }
}

TEST_CASE("is_isometry examples") {
    CHECK(is_isometry(swap2(p7)));
    CHECK_FALSE(is_isometry(diag(p7, {7, 1})));
    CHECK(sup_norm(diag(p7, {7, 1}) * PVector::unit(p7, 2, 0)) == UltraNorm::power(-1));
    CHECK(is_isometry(rotation_matrix()));
    CHECK_FALSE(is_isometry(PMatrix(p5, 2, {1, 0, 0, 0})));
}

TEST_CASE("is_unitary examples") {
    CHECK(is_unitary(PMatrix::identity(p7, 3)));
    CHECK(is_unitary(diag(p7, {1, -1})));
    CHECK(is_unitary(swap2(p7)));
    CHECK_FALSE(is_unitary(PMatrix(p7, 2, {1, 0, 0, 0})));
}

TEST_CASE("isometry and form preservation are independent") {
    // diag(2, 1) over p = 7: unit entries, unit inverse, so an isometry;
    // but <Ae_1, Ae_1> = 4 != 1.
    const PMatrix scale = diag(p7, {2, 1});
    CHECK(is_isometry(scale));
    CHECK(inner_product(scale * PVector::unit(p7, 2, 0), scale * PVector::unit(p7, 2, 0)) == ExactRational(4));
    CHECK_FALSE(is_unitary(scale));

    // (3/5, 4/5) rotation over p = 5: A^T A = I, yet |A e_1| = 5 != 1.
    const PMatrix rot(p5, 2, {ExactRational(3, 5), ExactRational(-4, 5), ExactRational(4, 5), ExactRational(3, 5)});
    CHECK(rot.transpose() * rot == PMatrix::identity(p5, 2));
    CHECK(determinant(rot) == ExactRational(1));
    CHECK(sup_norm(rot * PVector::unit(p5, 2, 0)) == UltraNorm::power(1));
    CHECK_FALSE(is_isometry(rot));
    CHECK_FALSE(is_unitary(rot));
}

TEST_CASE("isometry decision agrees with sampled norm preservation") {
    Rng rng = test_rng(10);
    for (int trial = 0; trial < 60; ++trial) {
        const Prime& p = kPrimes[trial % kPrimes.size()];
        const std::size_t n = 1 + rng.below(3);
        std::vector<ExactRational> data(n * n);
        for (auto& x : data)
            x = random_rational(rng, p, 1);
        const PMatrix a(p, n, data);
        if (determinant(a).is_zero())
            continue;
        bool preserved = true;
        for (std::size_t j = 0; j < n; ++j)
            preserved = preserved && sup_norm(a * PVector::unit(p, n, j)) == UltraNorm::one();
        for (int i = 0; i < 200 && preserved; ++i) {
            const PVector x = random_vector(rng, p, n);
            preserved = sup_norm(a * x) == sup_norm(x);
        }
        // a sampled counterexample always refutes; passing samples must agree with the decision
        if (!preserved)
            CHECK_FALSE(is_isometry(a));
        if (is_isometry(a))
            CHECK(preserved);
    }
}
