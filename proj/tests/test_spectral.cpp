#include <catch2/catch_amalgamated.hpp>

#include "qsd/oracle.hpp"
#include "qsd/spectral.hpp"

using namespace qsd;

namespace {

const double kSqrtHalf = std::sqrt(0.5);

BlochVector bloch_of(NamedState tag) { return named_state_bloch(tag); }

double objective(const BlochVector& r1, const BlochVector& r2, const ComplexMatrix& e) {
    const ComplexMatrix drho = bloch_to_density(r1).matrix() - bloch_to_density(r2).matrix();
    return trace(drho * e).real();
}

}  // namespace

TEST_CASE("one-qubit distance table at hbar = 1") {
    const BlochVector zero = bloch_of(NamedState::zero);
    const BlochVector one = bloch_of(NamedState::one);
    const BlochVector xp = bloch_of(NamedState::x_plus);
    const BlochVector xm = bloch_of(NamedState::x_minus);
    const BlochVector yp = bloch_of(NamedState::y_plus);
    const BlochVector center = bloch_of(NamedState::max_mixed);

    CHECK_THAT(distance_1q(zero, one, 1.0).value, Catch::Matchers::WithinAbs(kSqrtHalf, 1e-14));
    CHECK_THAT(distance_1q(xp, yp, 1.0).value, Catch::Matchers::WithinAbs(1.0, 1e-14));
    CHECK_THAT(distance_1q(xp, xm, 1.0).value,
               Catch::Matchers::WithinAbs(std::sqrt(2.0), 1e-14));
    CHECK_THAT(distance_1q(zero, center, 1.0).value,
               Catch::Matchers::WithinAbs(0.5 * kSqrtHalf, 1e-14));
    CHECK_THAT(distance_1q(xp, center, 1.0).value,
               Catch::Matchers::WithinAbs(kSqrtHalf, 1e-14));
    CHECK(distance_1q(zero, zero, 1.0).value == 0.0);
    CHECK_FALSE(distance_1q(zero, zero, 1.0).optimal_element.has_value());
}

TEST_CASE("diagonal mixtures distance") {
    detail::SplitMix64 rng(31);
    for (double hbar : {0.5, 1.0, 2.0}) {
        for (int k = 0; k < 50; ++k) {
            const double p = rng.uniform01(), q = rng.uniform01();
            const double d =
                distance_1q({0, 0, 2 * p - 1}, {0, 0, 2 * q - 1}, hbar).value;
            CHECK_THAT(d, Catch::Matchers::WithinAbs(std::abs(p - q) * std::sqrt(0.5 * hbar),
                                                     1e-13));
        }
    }
}

TEST_CASE("optimal elements certify the distance") {
    SECTION("|0> vs |1>: diagonal element, w = 0") {
        const ComplexMatrix e = optimal_element_1q({0, 0, 1}, {0, 0, -1}, 1.0);
        CHECK_THAT(e(0, 0).real() - e(1, 1).real(),
                   Catch::Matchers::WithinAbs(kSqrtHalf, 1e-14));
        CHECK(std::abs(e(0, 1)) == 0.0);
        CHECK_THAT(objective({0, 0, 1}, {0, 0, -1}, e),
                   Catch::Matchers::WithinAbs(kSqrtHalf, 1e-14));
    }

    SECTION("|x;+> vs |x;->: off-diagonal element, s = t") {
        const ComplexMatrix e = optimal_element_1q({1, 0, 0}, {-1, 0, 0}, 1.0);
        CHECK(e(0, 0) == e(1, 1));
        CHECK_THAT(e(1, 0).real(), Catch::Matchers::WithinAbs(kSqrtHalf, 1e-14));
        CHECK(e(1, 0).imag() == 0.0);
        CHECK_THAT(objective({1, 0, 0}, {-1, 0, 0}, e),
                   Catch::Matchers::WithinAbs(std::sqrt(2.0), 1e-14));
    }

    SECTION("branch boundary |0> vs |x;+>") {
        // dperp = |dz| here, so both branch formulas give the same value.
        const DistanceResult res = distance_1q({0, 0, 1}, {1, 0, 0}, 1.0);
        CHECK_THAT(res.value, Catch::Matchers::WithinAbs(kSqrtHalf, 1e-14));
        CHECK_THAT(*res.element_ball_norm, Catch::Matchers::WithinAbs(1.0, 1e-10));
    }

    SECTION("random pairs: elements sit on the ball boundary and attain the value") {
        detail::SplitMix64 rng(33);
        for (int k = 0; k < 100; ++k) {
            BlochVector r1, r2;
            do {
                r1 = {2.0 * rng.uniform01() - 1.0, 2.0 * rng.uniform01() - 1.0,
                      2.0 * rng.uniform01() - 1.0};
            } while (r1.norm_squared() > 1.0);
            do {
                r2 = {2.0 * rng.uniform01() - 1.0, 2.0 * rng.uniform01() - 1.0,
                      2.0 * rng.uniform01() - 1.0};
            } while (r2.norm_squared() > 1.0 || (r1 - r2).norm() < 1e-6);
            const double hbar = (k % 3 == 0) ? 0.5 : (k % 3 == 1) ? 1.0 : 2.0;
            const DistanceResult res = distance_1q(r1, r2, hbar);
            REQUIRE(res.optimal_element.has_value());
            CHECK_THAT(*res.element_ball_norm, Catch::Matchers::WithinAbs(1.0, 1e-9));
            CHECK_THAT(objective(r1, r2, *res.optimal_element),
                       Catch::Matchers::WithinAbs(res.value, 1e-10));
        }
    }

    CHECK_THROWS_AS(optimal_element_1q({0.1, 0.2, 0.3}, {0.1, 0.2, 0.3}, 1.0),
                    std::invalid_argument);
}

TEST_CASE("spherical form of the distance matches the Cartesian one") {
    // d = r sin(theta) sqrt(hbar/2) for pi/4 <= theta <= 3pi/4, else
    // d = r/(2|cos theta|) sqrt(hbar/2), with r = |dr| and theta its polar angle.
    detail::SplitMix64 rng(35);
    for (int k = 0; k < 200; ++k) {
        const double theta = 3.14159265358979323846 * rng.uniform01();
        const double phi = 6.28318530717958647692 * rng.uniform01();
        const double r = 1.4 * rng.uniform01() + 0.01;
        const BlochVector d{r * std::sin(theta) * std::cos(phi),
                            r * std::sin(theta) * std::sin(phi), r * std::cos(theta)};
        const BlochVector r1{0.5 * d.x, 0.5 * d.y, 0.5 * d.z};
        const BlochVector r2{-0.5 * d.x, -0.5 * d.y, -0.5 * d.z};
        const double quarter = 3.14159265358979323846 / 4.0;
        const double expected =
            (theta >= quarter && theta <= 3.0 * quarter)
                ? r * std::sin(theta) * kSqrtHalf
                : r / (2.0 * std::abs(std::cos(theta))) * kSqrtHalf;
        CHECK_THAT(distance_1q(r1, r2, 1.0).value,
                   Catch::Matchers::WithinAbs(expected, 1e-12));
    }
}

TEST_CASE("coherence measure") {
    SECTION("|x;+> has unit coherence with the maximally mixed nearest state") {
        const CoherenceResult res = coherence_sd(named_state(NamedState::x_plus), 1.0);
        CHECK_THAT(res.value, Catch::Matchers::WithinAbs(1.0, 1e-14));
        CHECK(max_abs_entry(res.nearest.matrix() - ComplexMatrix::diagonal({0.5, 0.5})) == 0.0);
    }

    SECTION("diagonal states are incoherent") {
        const CoherenceResult res = coherence_sd(diagonal_mixed(0.3), 1.0);
        CHECK(res.value == 0.0);
        CHECK(max_abs_entry(res.nearest.matrix() - diagonal_mixed(0.3).matrix()) < 1e-15);
    }

    SECTION("Bloch (0.3, 0.4, 0.5) has coherence 0.5") {
        const CoherenceResult res = coherence_sd(bloch_to_density({0.3, 0.4, 0.5}), 1.0);
        CHECK_THAT(res.value, Catch::Matchers::WithinAbs(0.5, 1e-14));
        CHECK_THAT(density_to_bloch(res.nearest).z, Catch::Matchers::WithinAbs(0.5, 1e-14));
    }

    SECTION("numerical minimization over diagonal states confirms the minimizer") {
        // The minimum is attained on a q-interval (the first branch of the
        // distance does not depend on dz); its midpoint is (1+z)/2.
        detail::SplitMix64 rng(37);
        for (int k = 0; k < 20; ++k) {
            BlochVector r;
            do {
                r = {2.0 * rng.uniform01() - 1.0, 2.0 * rng.uniform01() - 1.0,
                     2.0 * rng.uniform01() - 1.0};
            } while (r.norm_squared() > 1.0 || std::hypot(r.x, r.y) < 1e-3 ||
                     std::abs(r.z) + std::hypot(r.x, r.y) > 0.95);
            double best_d = std::numeric_limits<double>::infinity();
            std::vector<double> qs(4001);
            std::vector<double> ds(4001);
            for (int i = 0; i <= 4000; ++i) {
                qs[i] = i / 4000.0;
                ds[i] = distance_1q(r, {0, 0, 2 * qs[i] - 1}, 1.0).value;
                best_d = std::min(best_d, ds[i]);
            }
            double lo = 1.0, hi = 0.0;
            for (int i = 0; i <= 4000; ++i)
                if (ds[i] <= best_d + 1e-12) {
                    lo = std::min(lo, qs[i]);
                    hi = std::max(hi, qs[i]);
                }
            CHECK_THAT(0.5 * (lo + hi), Catch::Matchers::WithinAbs(0.5 * (1.0 + r.z), 3e-4));
            CHECK_THAT(std::sqrt(2.0) * best_d,
                       Catch::Matchers::WithinAbs(std::hypot(r.x, r.y), 1e-6));
        }
    }

    CHECK_THROWS_AS(coherence_sd(two_qubit_basis(0, 0), 1.0), std::invalid_argument);
}

TEST_CASE("two-qubit basis distance table") {
    const double sq = kSqrtHalf;

    SECTION("values by Hamming distance") {
        CHECK(distance_2q_basis({0, 0}, {0, 0}, 1.0).value == 0.0);
        CHECK_THAT(distance_2q_basis({0, 0}, {1, 0}, 1.0).value,
                   Catch::Matchers::WithinAbs(sq, 1e-15));
        CHECK_THAT(distance_2q_basis({0, 1}, {1, 1}, 1.0).value,
                   Catch::Matchers::WithinAbs(sq, 1e-15));
        CHECK_THAT(distance_2q_basis({0, 0}, {0, 1}, 1.0).value,
                   Catch::Matchers::WithinAbs(sq, 1e-15));
        CHECK_THAT(distance_2q_basis({1, 0}, {1, 1}, 1.0).value,
                   Catch::Matchers::WithinAbs(sq, 1e-15));
        CHECK_THAT(distance_2q_basis({0, 0}, {1, 1}, 1.0).value,
                   Catch::Matchers::WithinAbs(1.0, 1e-15));
        CHECK_THAT(distance_2q_basis({0, 1}, {1, 0}, 1.0).value,
                   Catch::Matchers::WithinAbs(1.0, 1e-15));
    }

    SECTION("attached optimal elements") {
        const DistanceResult first = distance_2q_basis({0, 0}, {1, 0}, 1.0);
        CHECK(max_abs_entry(*first.optimal_element -
                            ComplexMatrix::diagonal({sq, sq, 0.0, 0.0})) == 0.0);

        const DistanceResult both = distance_2q_basis({0, 0}, {1, 1}, 1.0);
        CHECK(max_abs_entry(*both.optimal_element -
                            ComplexMatrix::diagonal({1.0, 0.5, 0.5, 0.0})) < 1e-15);

        const DistanceResult cross = distance_2q_basis({0, 1}, {1, 0}, 1.0);
        CHECK(max_abs_entry(*cross.optimal_element -
                            ComplexMatrix::diagonal({0.0, 0.5, -0.5, 0.0})) < 1e-15);

        // Elements are admissible and attain the tabulated values.
        for (const auto& [a, b] :
             std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>{
                 {{0, 0}, {0, 1}}, {{0, 0}, {1, 0}}, {{0, 1}, {1, 1}},
                 {{1, 0}, {1, 1}}, {{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}}) {
            const DistanceResult res = distance_2q_basis(a, b, 1.0);
            CHECK(*res.element_ball_norm <= 1.0 + 1e-9);
            const ComplexMatrix drho = two_qubit_basis(a.first, a.second).matrix() -
                                       two_qubit_basis(b.first, b.second).matrix();
            CHECK_THAT(std::abs(trace(drho * *res.optimal_element).real()),
                       Catch::Matchers::WithinAbs(res.value, 1e-12));
        }
    }

    CHECK_THROWS_AS(distance_2q_basis({0, 2}, {0, 0}, 1.0), std::invalid_argument);
}

TEST_CASE("pythagoras identities") {
    for (double hbar : {1.0, 3.0}) {
        const PythagorasReport report = check_pythagoras(hbar);
        REQUIRE(report.identities.size() == 2);
        for (const auto& id : report.identities) {
            CHECK_THAT(id.lhs, Catch::Matchers::WithinAbs(hbar, 1e-12));
            CHECK_THAT(id.rhs, Catch::Matchers::WithinAbs(hbar, 1e-12));
        }
        CHECK(report.max_residual < 1e-12);
    }
}

TEST_CASE("distance input validation") {
    CHECK_THROWS_AS(distance_1q({1.5, 0, 0}, {0, 0, 0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(distance_1q({0, 0, 1}, {0, 0, -1}, 0.0), std::invalid_argument);
}
