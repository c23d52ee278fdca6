#include "doctest.h"

#include "padicup/banach.hpp"
#include "padicup/errors.hpp"
#include "padicup/scan.hpp"
#include "support.hpp"

using namespace padicup;
using namespace padicup::testing;

namespace {

IndexSubset one(std::size_t n, std::size_t i) { return IndexSubset(n, {i}); }

BiorthogonalSystem rotation_system() { return validate_system(p7, rotation_matrix(), rotation_matrix().transpose()); }

// omega_k = e_{sigma(k)} with sigma = (1 2 3), functionals the transposes
BiorthogonalSystem cyclic_system(const Prime& p) {
    const PMatrix t(p, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0});
    return validate_system(p, t, t.transpose());
}

}  // namespace

TEST_CASE("validate_system examples") {
    CHECK_NOTHROW(BiorthogonalSystem::canonical(p5, 4));
    CHECK_NOTHROW(rotation_system());
    CHECK(rotation_system().is_inner_product_induced());

    try {
        validate_system(p7, PMatrix::identity(p7, 2), PMatrix(p7, 2, {1, ExactRational(1, 7), 0, 1}));
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        bool norm_reported = false;
        for (const auto& v : e.violations())
            norm_reported = norm_reported || v.find("f_1: norm bound") != std::string::npos;
        CHECK(norm_reported);
    }
}

TEST_CASE("a triangular system is valid but not inner-product induced") {
    for (const auto& p : kPrimes) {
        const auto s = triangular_system(p);
        CHECK_FALSE(s.is_inner_product_induced());
        CHECK(s.functional_matrix() * s.basis_matrix() == PMatrix::identity(p, 2));
        // no ONB can induce it: tau_1 and tau_2 are not orthogonal
        CHECK(inner_product(s.basis_vector(0), s.basis_vector(1)) != ExactRational(0));
    }
}

TEST_CASE("functional_norm examples") {
    const auto s = BiorthogonalSystem::canonical(p7, 2);
    CHECK(functional_norm(s, s.functional(0)) == UltraNorm::one());
    CHECK(functional_norm(s, PVector::zero(p7, 2)) == UltraNorm::zero());
    const auto tri = triangular_system(p7);
    CHECK(functional_norm(tri, ExactRational(7) * tri.functional(0) + tri.functional(1)) == UltraNorm::one());
}

TEST_CASE("characterize_pair examples") {
    const auto canon = BiorthogonalSystem::canonical(p7, 2);
    CHECK(characterize_pair(rotation_system(), rotation_system()) == PMatrix::identity(p7, 2));
    CHECK(characterize_pair(canon, rotation_system()) == rotation_matrix());
    const auto cyc = cyclic_system(p7);
    CHECK(characterize_pair(BiorthogonalSystem::canonical(p7, 3), cyc) == cyc.basis_matrix());
}

TEST_CASE("check_nonarch_uncertainty examples") {
    const auto canon = BiorthogonalSystem::canonical(p7, 2);
    const auto rot = rotation_system();
    const auto zero = check_nonarch_uncertainty(canon, rot, one(2, 0), one(2, 1), PVector::zero(p7, 2));
    CHECK(zero.holds);

    const auto r = check_nonarch_uncertainty(canon, rot, one(2, 0), one(2, 1), PVector::unit(p7, 2, 0));
    CHECK(r.coherence == UltraNorm::power(-1));
    CHECK(r.bound_constant == ExactRational(7, 6));
    CHECK(r.lhs_norm == UltraNorm::one());
    CHECK(r.rhs_value == ExactRational(7, 6));
    CHECK(r.holds);

    CHECK_THROWS_AS(check_nonarch_uncertainty(canon, canon, one(2, 0), one(2, 0), PVector::unit(p7, 2, 0)),
                    HypothesisViolated);
}

TEST_CASE("check_nonarch_uncertainty_swapped examples") {
    const auto canon = BiorthogonalSystem::canonical(p5, 2);
    Rng rng = test_rng(40);
    for (int i = 0; i < 50; ++i) {
        const auto r = check_nonarch_uncertainty_swapped(canon, canon, one(2, 0), one(2, 1), random_vector(rng, p5, 2));
        CHECK(r.coherence == UltraNorm::zero());
        CHECK(r.holds);
    }
    CHECK(check_nonarch_uncertainty_swapped(canon, canon, one(2, 0), one(2, 1), PVector::zero(p5, 2)).holds);
}

TEST_CASE("the interchanged inequality needs f_k(omega_j), not f_j(omega_k)") {
    // With hypothesis max |f_j(omega_k)| the instance below would be admitted
    // (f_1(omega_2) = 0) although x = e_2 has lhs 1 and rhs 0.
    const auto canon = BiorthogonalSystem::canonical(p5, 3);
    const auto cyc = cyclic_system(p5);
    const auto m = one(3, 0);
    const auto n = one(3, 1);
    const PVector x = PVector::unit(p5, 3, 1);
    CHECK(canon.apply(0, cyc.basis_vector(1)) == ExactRational(0));
    CHECK(max(restricted_max(cyc, m.complement(), x), restricted_max(canon, n.complement(), x)) == UltraNorm::zero());
    CHECK(sup_norm(x) == UltraNorm::one());

    try {
        check_nonarch_uncertainty_swapped(canon, cyc, m, n, x);
        FAIL("expected HypothesisViolated");
    } catch (const HypothesisViolated& e) {
        // |f_2(omega_1)| = 1
        CHECK(e.coherence() == UltraNorm::one());
    }
}

TEST_CASE("banach_support_annihilation examples") {
    const auto canon = BiorthogonalSystem::canonical(p7, 2);
    CHECK(banach_support_annihilation(canon, rotation_system(), one(2, 0), one(2, 1)));
    CHECK(banach_support_annihilation(canon, rotation_system(), IndexSubset::empty(2), IndexSubset::full(2)));
    CHECK_THROWS_AS(banach_support_annihilation(canon, canon, one(2, 0), one(2, 0)), HypothesisViolated);
}

TEST_CASE("random systems: validity, functional norms and duality") {
    Rng rng = test_rng(41);
    int non_induced = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Prime& p = kPrimes[seed % kPrimes.size()];
        const std::size_t n = 1 + seed % 5;
        const auto s = random_system(p, n, seed);
        non_induced += s.is_inner_product_induced() ? 0 : 1;
        CHECK(random_system(p, n, seed) == s);
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(sup_norm(s.basis_vector(j)) == UltraNorm::one());
            CHECK(sup_norm(s.functional(j)) == UltraNorm::one());
        }
        for (int i = 0; i < 5; ++i) {
            const PVector x = random_vector(rng, p, n);
            const PVector phi = random_vector(rng, p, n);
            CHECK(functional_norm(s, phi) == sup_norm(phi));
            PVector rebuilt = PVector::zero(p, n);
            PVector dual = PVector::zero(p, n);
            for (std::size_t j = 0; j < n; ++j) {
                rebuilt += s.apply(j, x) * s.basis_vector(j);
                dual += inner_product(phi, s.basis_vector(j)) * s.functional(j);
            }
            CHECK(rebuilt == x);
            CHECK(dual == phi);
        }
    }
    CHECK(non_induced >= 50);
}

TEST_CASE("random pairs: characterization, bounds, inequality and corollary") {
    Rng rng = test_rng(42);
    int checks = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Prime& p = kPrimes[seed % kPrimes.size()];
        const std::size_t n = 1 + seed % 4;
        const auto first = random_system(p, n, 2 * seed);
        const auto second = random_system(p, n, 2 * seed + 1);

        const PMatrix v = characterize_pair(first, second);
        CHECK(is_isometry(v));

        const std::uint64_t count = std::uint64_t{1} << n;
        for (std::uint64_t mm = 0; mm < count; ++mm)
            for (std::uint64_t nm = 0; nm < count; ++nm) {
                const auto m = IndexSubset::from_mask(n, mm);
                const auto nn = IndexSubset::from_mask(n, nm);
                const UltraNorm c = cross_coherence(first, second, m, nn);
                const UltraNorm bound = pnvpm_norm(first, second, m, nn);
                CHECK(bound <= c);

                const PVector x = random_vector(rng, p, n);
                if (c < UltraNorm::one()) {
                    CHECK(check_nonarch_uncertainty(first, second, m, nn, x).holds);
                    CHECK(banach_support_annihilation(first, second, m, nn));
                    const PVector y = projection_matrix(first, m) * x;
                    const ExactRational lhs = ultranorm_to_rational(restricted_max(second, nn.complement(), y), p);
                    const ExactRational rhs = (ExactRational(1) - ultranorm_to_rational(bound, p)) *
                                              ultranorm_to_rational(sup_norm(y), p);
                    CHECK(lhs >= rhs);
                    ++checks;
                }

                // swapped form is the plain form with the systems exchanged
                const UltraNorm c_swapped = cross_coherence(second, first, m, nn);
                if (c_swapped < UltraNorm::one()) {
                    const auto swapped = check_nonarch_uncertainty_swapped(first, second, m, nn, x);
                    CHECK(swapped == check_nonarch_uncertainty(second, first, m, nn, x));
                    CHECK(swapped.holds);
                } else {
                    CHECK_THROWS_AS(check_nonarch_uncertainty_swapped(first, second, m, nn, x), HypothesisViolated);
                }
            }
    }
    CHECK(checks > 300);
}

TEST_CASE("Hilbert-induced systems reproduce the Hilbert reports") {
    Rng rng = test_rng(43);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Prime& p = kPrimes[seed % kPrimes.size()];
        const std::size_t n = 1 + seed % 4;
        const auto tau = random_onb(p, n, 3 * seed);
        const auto omega = random_onb(p, n, 3 * seed + 1);
        const auto first = BiorthogonalSystem::from_onb(tau);
        const auto second = BiorthogonalSystem::from_onb(omega);
        CHECK(first.is_inner_product_induced());
        const std::uint64_t count = std::uint64_t{1} << n;
        for (std::uint64_t mm = 0; mm < count; ++mm)
            for (std::uint64_t nm = 0; nm < count; ++nm) {
                const auto m = IndexSubset::from_mask(n, mm);
                const auto nn = IndexSubset::from_mask(n, nm);
                CHECK(cross_coherence(first, second, m, nn) == coherence(tau, omega, m, nn));
                if (coherence(tau, omega, m, nn) >= UltraNorm::one())
                    continue;
                const PVector x = random_vector(rng, p, n);
                CHECK(check_nonarch_uncertainty(first, second, m, nn, x) == check_uncertainty(tau, omega, m, nn, x));
                CHECK(banach_support_annihilation(first, second, m, nn) ==
                      support_annihilation_check(tau, omega, m, nn));
            }
    }
}

TEST_CASE("banach scanner agrees with the direct checks") {
    Rng rng = test_rng(44);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Prime& p = kPrimes[seed % kPrimes.size()];
        const std::size_t n = 1 + seed % 4;
        const auto first = random_system(p, n, 11 * seed);
        const auto second = random_system(p, n, 11 * seed + 1);
        const auto scan = SubsetScanner::banach(first, second);
        const PVector x = random_vector(rng, p, n);
        const auto profile = scan.profile(x);
        const std::uint64_t count = std::uint64_t{1} << n;
        for (std::uint64_t mm = 0; mm < count; ++mm)
            for (std::uint64_t nm = 0; nm < count; ++nm) {
                const auto m = IndexSubset::from_mask(n, mm);
                const auto nn = IndexSubset::from_mask(n, nm);
                const UltraNorm c = cross_coherence(first, second, m, nn);
                CHECK(scan.coherence(mm, nm) == c);
                if (c >= UltraNorm::one())
                    continue;
                const auto direct = check_nonarch_uncertainty(first, second, m, nn, x);
                const auto fast = scan.evaluate(mm, nm, profile);
                CHECK(fast.rhs_value == direct.rhs_value);
                CHECK(fast.holds == direct.holds);
            }
    }
}
