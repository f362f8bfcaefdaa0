#include <catch2/catch_amalgamated.hpp>

#include "qsd/fock.hpp"
#include "qsd/oracle.hpp"

using namespace qsd;

TEST_CASE("one-mode ladder operators") {
    const auto [f, f_dag] = ladder_1mode();
    CHECK(f == ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}));
    CHECK(f_dag == dagger(f));

    // f|1> = |0>, f|0> = 0 (columns of the matrix)
    CHECK(f(0, 1) == Complex(1.0));
    CHECK(f(0, 0) == Complex(0.0));
    CHECK(f(1, 0) == Complex(0.0));

    CHECK(max_abs_entry(anticommutator(f, f_dag) - ComplexMatrix::identity(2)) == 0.0);
    CHECK(max_abs_entry(f * f) == 0.0);
    CHECK(max_abs_entry(f_dag * f_dag) == 0.0);
}

TEST_CASE("two-mode ladder operators") {
    const auto [f1, f2] = ladder_2mode();

    // Explicit matrices in the basis {|00>,|01>,|10>,|11>}.
    CHECK(f1 == ComplexMatrix::from_rows({{0.0, 0.0, 1.0, 0.0},
                                          {0.0, 0.0, 0.0, 1.0},
                                          {0.0, 0.0, 0.0, 0.0},
                                          {0.0, 0.0, 0.0, 0.0}}));
    CHECK(f2 == ComplexMatrix::from_rows({{0.0, 1.0, 0.0, 0.0},
                                          {0.0, 0.0, 0.0, 0.0},
                                          {0.0, 0.0, 0.0, 1.0},
                                          {0.0, 0.0, 0.0, 0.0}}));

    // Same operators via the tensor-product route; fixes the basis ordering.
    const auto [f, f_dag] = ladder_1mode();
    CHECK(f1 == kron(f, ComplexMatrix::identity(2)));
    CHECK(f2 == kron(ComplexMatrix::identity(2), f));

    // f1|10> = |00>, f2|01> = |00> (basis index 2 and 1 -> 0).
    CHECK(f1(0, 2) == Complex(1.0));
    CHECK(f2(0, 1) == Complex(1.0));

    for (const ComplexMatrix& a : {f1, f2}) {
        CHECK(max_abs_entry(anticommutator(a, dagger(a)) - ComplexMatrix::identity(4)) == 0.0);
        CHECK(max_abs_entry(a * a) == 0.0);
    }
    CHECK(max_abs_entry(commutator(f1, f2)) == 0.0);
    CHECK(max_abs_entry(commutator(f1, dagger(f2))) == 0.0);
    CHECK(max_abs_entry(commutator(dagger(f1), f2)) == 0.0);
}

TEST_CASE("one-mode Dirac operator") {
    SECTION("hbar = 2 gives unit prefactor") {
        const SpectralTriple t = dirac_2d(2.0);
        const auto [f, f_dag] = ladder_1mode();
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                CHECK(t.dirac(i, 2 + j) == f_dag(i, j));
                CHECK(t.dirac(2 + i, j) == f(i, j));
                CHECK(t.dirac(i, j) == Complex(0.0));
                CHECK(t.dirac(2 + i, 2 + j) == Complex(0.0));
            }
    }

    SECTION("square of D at hbar = 1") {
        const SpectralTriple t = dirac_2d(1.0);
        const ComplexMatrix d2 = t.dirac * t.dirac;
        CHECK(max_abs_entry(d2 - ComplexMatrix::diagonal({0.0, 2.0, 2.0, 0.0})) < 1e-14);
    }

    SECTION("Hermitian and scales as 1/sqrt(hbar)") {
        for (double hbar : {0.5, 1.0, 2.0, 4.0}) {
            const SpectralTriple t = dirac_2d(hbar);
            CHECK(is_hermitian(t.dirac));
            const SpectralTriple base = dirac_2d(1.0);
            CHECK(max_abs_entry(t.dirac - base.dirac * Complex(1.0 / std::sqrt(hbar))) < 1e-14);
        }
    }

    CHECK_THROWS_AS(dirac_2d(0.0), std::invalid_argument);
    CHECK_THROWS_AS(dirac_2d(-1.0), std::invalid_argument);
}

TEST_CASE("two-mode Dirac operator") {
    const SpectralTriple t = dirac_4d(1.0);
    CHECK(t.dirac.dim() == 16);
    CHECK(t.fock_dim == 4);
    CHECK(t.spinor_copies == 4);

    SECTION("Hermitian as assembled") {
        CHECK(max_abs_entry(t.dirac - dagger(t.dirac)) < 1e-14);
    }

    SECTION("scaling in hbar") {
        const SpectralTriple t4 = dirac_4d(4.0);
        CHECK(max_abs_entry(t4.dirac - t.dirac * Complex(0.5)) < 1e-14);
    }

    SECTION("upper-right (0,2) block holds f2^dag") {
        const auto [f1, f2] = ladder_2mode();
        const ComplexMatrix f2d = dagger(f2);
        const Complex iscale(0.0, std::sqrt(2.0));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                CHECK(std::abs(t.dirac(i, 8 + j) - iscale * f2d(i, j)) < 1e-15);
    }
}

TEST_CASE("represent stacks block-diagonal copies") {
    const ComplexMatrix e = ComplexMatrix::from_rows({{1.0, Complex(0.0, 2.0)},
                                                      {Complex(0.0, -2.0), -1.0}});
    const ComplexMatrix two = represent(e, 2);
    CHECK(two.dim() == 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(two(i, j) == e(i, j));
            CHECK(two(2 + i, 2 + j) == e(i, j));
            CHECK(two(i, 2 + j) == Complex(0.0));
        }

    CHECK(represent(ComplexMatrix::identity(2), 2) == ComplexMatrix::identity(4));
    CHECK(represent(ComplexMatrix::identity(4), 4) == ComplexMatrix::identity(16));
    CHECK_THROWS_AS(represent(ComplexMatrix::identity(4), 8), std::invalid_argument);
}

TEST_CASE("dirac_commutator block structure") {
    SECTION("one mode: upper-right block is -[f,e]^dag") {
        const auto [f, f_dag] = ladder_1mode();
        detail::SplitMix64 rng(3);
        for (double hbar : {0.5, 1.0, 2.0}) {
            const SpectralTriple t = dirac_2d(hbar);
            const ComplexMatrix e = detail::random_hermitian(rng, 2);
            const ComplexMatrix c = dirac_commutator(t, e);
            const ComplexMatrix expected = -dagger(commutator(f, e));
            const double scale = std::sqrt(2.0 / hbar);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    CHECK(std::abs(c(i, 2 + j) - scale * expected(i, j)) < 1e-13);
        }
    }

    SECTION("identity commutes") {
        const SpectralTriple t = dirac_2d(1.0);
        CHECK(max_abs_entry(dirac_commutator(t, ComplexMatrix::identity(2) * Complex(3.7))) <
              1e-14);
    }

    SECTION("two modes: matches the assembled block formula") {
        // [D', pi(e)] = i sqrt(2/hbar) [[0, M], [M^dag, 0]] with
        // M = [[-[f2,e]^dag, -[f1,e]^dag], [[f1,e], -[f2,e]]].
        const auto [f1, f2] = ladder_2mode();
        detail::SplitMix64 rng(5);
        const SpectralTriple t = dirac_4d(1.0);
        for (int k = 0; k < 4; ++k) {
            ComplexMatrix e(4);
            if (k % 2 == 0)
                for (std::size_t i = 0; i < 4; ++i) e(i, i) = rng.normal();
            else
                e = detail::random_hermitian(rng, 4);

            const ComplexMatrix c1 = commutator(f1, e), c2 = commutator(f2, e);
            ComplexMatrix m(8);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) {
                    m(i, j) = -dagger(c2)(i, j);
                    m(i, 4 + j) = -dagger(c1)(i, j);
                    m(4 + i, j) = c1(i, j);
                    m(4 + i, 4 + j) = -c2(i, j);
                }
            const Complex iscale(0.0, std::sqrt(2.0));
            ComplexMatrix expected(16);
            for (std::size_t i = 0; i < 8; ++i)
                for (std::size_t j = 0; j < 8; ++j) {
                    expected(i, 8 + j) = iscale * m(i, j);
                    expected(8 + i, j) = iscale * dagger(m)(i, j);
                }
            CHECK(max_abs_entry(dirac_commutator(t, e) - expected) < 1e-12);
        }
    }

    CHECK_THROWS_AS(dirac_commutator(dirac_2d(1.0), ComplexMatrix::identity(4)),
                    std::invalid_argument);
}

TEST_CASE("ball_norm closed form and admissibility") {
    SECTION("one-mode closed form") {
        detail::SplitMix64 rng(9);
        for (double hbar : {0.5, 1.0, 2.0}) {
            const SpectralTriple t = dirac_2d(hbar);
            for (int k = 0; k < 50; ++k) {
                const double s = rng.normal(), tt = rng.normal(), u = rng.normal(),
                             v = rng.normal();
                const ComplexMatrix e = ComplexMatrix::from_rows(
                    {{s, Complex(u, -v)}, {Complex(u, v), tt}});
                const double w2 = u * u + v * v;
                const double d = s - tt;
                const double expected = std::sqrt(
                    (2.0 * w2 + d * d + std::abs(d) * std::sqrt(4.0 * w2 + d * d)) / hbar);
                CHECK_THAT(ball_norm(t, e), Catch::Matchers::WithinAbs(expected, 1e-10));
            }
        }
    }

    SECTION("identity has zero ball norm") {
        CHECK(ball_norm(dirac_2d(1.0), ComplexMatrix::identity(2)) < 1e-14);
    }

    SECTION("the first-label diagonal optimal element is admissible") {
        for (double hbar : {0.5, 1.0, 2.0}) {
            const double sq = std::sqrt(0.5 * hbar);
            const ComplexMatrix e = ComplexMatrix::diagonal({sq, sq, 0.0, 0.0});
            const SpectralTriple t = dirac_4d(hbar);
            CHECK(is_admissible(t, e));
            CHECK_THAT(ball_norm(t, e), Catch::Matchers::WithinAbs(1.0, 1e-10));
        }
    }
}
