// verify.hpp — self-check suites behind the `verify` CLI command: every
// library invariant run over seeded random samples, reported with worst
// residuals. Reports are deterministic for a fixed seed (no timing fields).

#pragma once

#include "qsd/complex_matrix.hpp"
#include "qsd/fock.hpp"
#include "qsd/oracle.hpp"
#include "qsd/spectral.hpp"
#include "qsd/states.hpp"

#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

namespace qsd::verify {

struct Options {
    bool quick = false;
    std::uint64_t seed = 42;
};

struct SuiteResult {
    std::string name;
    long samples = 0;
    double worst = 0.0;  // worst residual observed
    double tolerance = 0.0;
    bool passed = false;
    std::string fail_case;  // inputs reproducing the worst residual
};

namespace detail {

using qsd::detail::SplitMix64;
using qsd::detail::hs_inner;
using qsd::detail::random_hermitian;

inline std::string format(const char* fmt, ...) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    return buf;
}

struct Tracker {
    double worst = 0.0;
    std::string fail_case;
    void update(double residual, const std::string& repro) {
        if (residual > worst) {
            worst = residual;
            fail_case = repro;
        }
    }
};

inline ComplexMatrix random_matrix(SplitMix64& rng, std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = Complex(rng.normal(), rng.normal());
    return m;
}

inline BlochVector random_bloch(SplitMix64& rng) {
    for (;;) {
        const BlochVector r{2.0 * rng.uniform01() - 1.0, 2.0 * rng.uniform01() - 1.0,
                            2.0 * rng.uniform01() - 1.0};
        if (r.norm_squared() <= 1.0) return r;
    }
}

// Random pair with a nonvanishing separation, for relative comparisons.
inline std::pair<BlochVector, BlochVector> random_distinct_pair(SplitMix64& rng) {
    for (;;) {
        const BlochVector r1 = random_bloch(rng), r2 = random_bloch(rng);
        if ((r1 - r2).norm() >= 1e-3) return {r1, r2};
    }
}

inline std::string bloch_repro(const BlochVector& r1, const BlochVector& r2, double hbar) {
    return format("r1=(%.17g,%.17g,%.17g) r2=(%.17g,%.17g,%.17g) hbar=%.17g", r1.x, r1.y, r1.z,
                  r2.x, r2.y, r2.z, hbar);
}

inline const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& basis_pairs() {
    static const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> pairs = {
        {{0, 0}, {0, 1}}, {{0, 0}, {1, 0}}, {{0, 1}, {1, 1}},
        {{1, 0}, {1, 1}}, {{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}};
    return pairs;
}

// ------------------------------- matrix suites -------------------------------

inline SuiteResult suite_norm_dagger(const Options& o) {
    const long n = o.quick ? 20 : 200;
    SplitMix64 rng(o.seed + 101);
    Tracker t;
    const std::size_t dims[] = {2, 3, 4, 5, 8, 16};
    for (long k = 0; k < n; ++k) {
        const ComplexMatrix a = random_matrix(rng, dims[k % 6]);
        t.update(std::abs(operator_norm(a) - operator_norm(dagger(a))),
                 format("random matrix #%ld dim=%zu", k, a.dim()));
    }
    return {"matrix/norm_dagger_symmetry", n, t.worst, 1e-10, t.worst <= 1e-10, t.fail_case};
}

inline SuiteResult suite_bessel(const Options& o) {
    const long n = o.quick ? 20 : 200;
    SplitMix64 rng(o.seed + 102);
    Tracker t;
    const std::size_t dims[] = {2, 3, 4, 5, 8, 16};
    for (long k = 0; k < n; ++k) {
        const ComplexMatrix a = random_matrix(rng, dims[k % 6]);
        t.update(std::max(0.0, max_abs_entry(a) - operator_norm(a)),
                 format("random matrix #%ld dim=%zu", k, a.dim()));
    }
    return {"matrix/bessel_entry_bound", n, t.worst, 1e-10, t.worst <= 1e-10, t.fail_case};
}

inline SuiteResult suite_eigen_permutation(const Options& o) {
    const long n = o.quick ? 20 : 200;
    SplitMix64 rng(o.seed + 103);
    Tracker t;
    const std::size_t dims[] = {2, 3, 4, 5, 8, 16};
    for (long k = 0; k < n; ++k) {
        const std::size_t dim = dims[k % 6];
        const ComplexMatrix a = random_hermitian(rng, dim);
        // Random permutation similarity.
        std::vector<std::size_t> perm(dim);
        for (std::size_t i = 0; i < dim; ++i) perm[i] = i;
        for (std::size_t i = dim; i > 1; --i)
            std::swap(perm[i - 1], perm[rng.next() % i]);
        ComplexMatrix b(dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) b(perm[i], perm[j]) = a(i, j);
        const std::vector<double> ea = hermitian_eigenvalues(a);
        const std::vector<double> eb = hermitian_eigenvalues(b);
        double worst = 0.0;
        for (std::size_t i = 0; i < dim; ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
        t.update(worst, format("random Hermitian #%ld dim=%zu", k, dim));
    }
    return {"matrix/eigen_permutation_invariance", n, t.worst, 1e-10, t.worst <= 1e-10, t.fail_case};
}

inline SuiteResult suite_commutator_traceless(const Options& o) {
    const long n = o.quick ? 20 : 200;
    SplitMix64 rng(o.seed + 104);
    Tracker t;
    const std::size_t dims[] = {2, 3, 4, 5, 8, 16};
    for (long k = 0; k < n; ++k) {
        const std::size_t dim = dims[k % 6];
        const ComplexMatrix a = random_matrix(rng, dim), b = random_matrix(rng, dim);
        t.update(std::abs(trace(commutator(a, b))), format("random pair #%ld dim=%zu", k, dim));
    }
    return {"matrix/commutator_traceless", n, t.worst, 1e-10, t.worst <= 1e-10, t.fail_case};
}

inline SuiteResult suite_eigen_trace(const Options& o) {
    const long n = o.quick ? 20 : 200;
    SplitMix64 rng(o.seed + 105);
    Tracker t;
    const std::size_t dims[] = {2, 3, 4, 5, 8, 16};
    for (long k = 0; k < n; ++k) {
        const std::size_t dim = dims[k % 6];
        const ComplexMatrix a = random_hermitian(rng, dim);
        const std::vector<double> ev = hermitian_eigenvalues(a);
        double sum = 0.0;
        for (double v : ev) sum += v;
        t.update(std::abs(sum - trace(a).real()), format("random Hermitian #%ld dim=%zu", k, dim));
    }
    return {"matrix/eigen_trace_consistency", n, t.worst, 1e-10, t.worst <= 1e-10, t.fail_case};
}

// -------------------------------- fock suites --------------------------------

inline SuiteResult suite_ball_shift(const Options& o) {
    const long n = o.quick ? 30 : 300;
    SplitMix64 rng(o.seed + 201);
    Tracker t;
    const SpectralTriple t2 = dirac_2d(1.0), t4 = dirac_4d(1.0);
    for (long k = 0; k < n; ++k) {
        const SpectralTriple& triple = (k % 2 == 0) ? t2 : t4;
        const ComplexMatrix e = random_hermitian(rng, triple.fock_dim);
        const double c = 4.0 * rng.uniform01() - 2.0;
        const ComplexMatrix shifted = e + ComplexMatrix::identity(triple.fock_dim) * Complex(c);
        t.update(std::abs(ball_norm(triple, shifted) - ball_norm(triple, e)),
                 format("random Hermitian #%ld modes=%d c=%.17g", k, triple.n_modes, c));
    }
    return {"fock/ball_shift_invariance", n, t.worst, 1e-10, t.worst <= 1e-10, t.fail_case};
}

inline SuiteResult suite_ball_homogeneity(const Options& o) {
    const long n = o.quick ? 30 : 300;
    SplitMix64 rng(o.seed + 202);
    Tracker t;
    const SpectralTriple t2 = dirac_2d(1.0), t4 = dirac_4d(1.0);
    for (long k = 0; k < n; ++k) {
        const SpectralTriple& triple = (k % 2 == 0) ? t2 : t4;
        const ComplexMatrix e = random_hermitian(rng, triple.fock_dim);
        const double c = 8.0 * rng.uniform01() - 4.0;
        t.update(std::abs(ball_norm(triple, e * Complex(c)) - std::abs(c) * ball_norm(triple, e)),
                 format("random Hermitian #%ld modes=%d c=%.17g", k, triple.n_modes, c));
    }
    return {"fock/ball_homogeneity", n, t.worst, 1e-10, t.worst <= 1e-10, t.fail_case};
}

inline SuiteResult suite_ball_identity_1mode(const Options& o) {
    const long n = o.quick ? 100 : 1000;
    SplitMix64 rng(o.seed + 203);
    Tracker t;
    long samples = 0;
    for (double hbar : {0.5, 1.0, 2.0}) {
        const SpectralTriple triple = dirac_2d(hbar);
        for (long k = 0; k < n; ++k) {
            const HermitianElementParams p{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
            const double bn = ball_norm(triple, p.to_matrix());
            const double w2 = p.u * p.u + p.v * p.v;
            const double d = p.s - p.t;
            const double lam =
                0.5 * (2.0 * w2 + d * d + std::abs(d) * std::sqrt(4.0 * w2 + d * d));
            t.update(std::abs(bn * bn * hbar / 2.0 - lam),
                     format("s=%.17g t=%.17g u=%.17g v=%.17g hbar=%.17g", p.s, p.t, p.u, p.v, hbar));
            ++samples;
        }
    }
    return {"fock/ball_identity_1mode", samples, t.worst, 1e-10, t.worst <= 1e-10, t.fail_case};
}

inline SuiteResult suite_block_bounds_2mode(const Options& o) {
    const long n = o.quick ? 20 : 200;
    SplitMix64 rng(o.seed + 204);
    Tracker t;
    const auto [f1, f2] = ladder_2mode();
    long samples = 0;
    for (double hbar : {0.5, 1.0, 2.0}) {
        const SpectralTriple triple = dirac_4d(hbar);
        for (long k = 0; k < n; ++k) {
            ComplexMatrix e = random_hermitian(rng, 4);
            const double bn = ball_norm(triple, e);
            if (bn < 1e-9) continue;
            e *= Complex(1.0 / bn);  // place on the ball boundary
            for (const ComplexMatrix* f : {&f1, &f2}) {
                const double block = operator_norm(commutator(*f, e));
                t.update(std::max(0.0, block * block - hbar / 2.0),
                         format("random admissible #%ld hbar=%.17g", k, hbar));
            }
            ++samples;
        }
    }
    return {"fock/block_bounds_2mode", samples, t.worst, 1e-9, t.worst <= 1e-9, t.fail_case};
}

inline SuiteResult suite_diagonal_constraints(const Options& o) {
    const long n = o.quick ? 30 : 300;
    SplitMix64 rng(o.seed + 205);
    Tracker t;
    const double hbar = 1.0;
    const SpectralTriple triple = dirac_4d(hbar);
    long samples = 0;
    for (long k = 0; k < n; ++k) {
        ComplexMatrix e(4);
        for (std::size_t i = 0; i < 4; ++i) e(i, i) = rng.normal();
        if (k % 2 == 0) {  // half the samples sit exactly on the boundary
            const double bn = ball_norm(triple, e);
            if (bn < 1e-9) continue;
            e *= Complex(1.0 / bn);
        }
        const double bn = ball_norm(triple, e);
        const double e1 = e(0, 0).real(), e2 = e(1, 1).real(), e3 = e(2, 2).real(),
                     e4 = e(3, 3).real();
        const double five = std::abs(e1 - e2 - e3 + e4) +
                            std::sqrt((e1 - e4) * (e1 - e4) + (e2 - e3) * (e2 - e3));
        double violation = 0.0;
        for (double lhs : {(e1 - e2) * (e1 - e2), (e1 - e3) * (e1 - e3), (e2 - e4) * (e2 - e4),
                           (e3 - e4) * (e3 - e4)})
            violation = std::max(violation, lhs - hbar / 2.0);
        violation = std::max(violation, five * five - hbar);
        const std::string repro =
            format("diag e=(%.17g,%.17g,%.17g,%.17g) hbar=%.17g", e1, e2, e3, e4, hbar);
        // Inside the ball every constraint holds; a clear violation forces bn > 1.
        if (bn <= 1.0) t.update(violation, repro);
        if (violation > 1e-6 && bn <= 1.0) t.update(1.0, repro);
        ++samples;
    }
    return {"fock/diagonal_constraints_2mode", samples, t.worst, 1e-9, t.worst <= 1e-9, t.fail_case};
}

// ------------------------------- states suites -------------------------------

inline SuiteResult suite_bloch_roundtrip(const Options& o) {
    const long n = o.quick ? 30 : 300;
    SplitMix64 rng(o.seed + 301);
    Tracker t;
    for (long k = 0; k < n; ++k) {
        const BlochVector r = random_bloch(rng);
        const BlochVector back = density_to_bloch(bloch_to_density(r));
        const double res = std::max({std::abs(back.x - r.x), std::abs(back.y - r.y),
                                     std::abs(back.z - r.z)});
        t.update(res, format("r=(%.17g,%.17g,%.17g)", r.x, r.y, r.z));
    }
    return {"states/bloch_roundtrip", n, t.worst, 1e-14, t.worst <= 1e-14, t.fail_case};
}

inline SuiteResult suite_trace_metric(const Options& o) {
    const long n = o.quick ? 200 : 2000;
    SplitMix64 rng(o.seed + 302);
    Tracker t;
    for (long k = 0; k < n; ++k) {
        const DensityMatrix a = bloch_to_density(random_bloch(rng));
        const DensityMatrix b = bloch_to_density(random_bloch(rng));
        const DensityMatrix c = bloch_to_density(random_bloch(rng));
        const std::string repro = format("random triple #%ld", k);
        t.update(std::abs(trace_distance(a, b) - trace_distance(b, a)), repro);
        t.update(std::max(0.0, trace_distance(a, c) - trace_distance(a, b) - trace_distance(b, c)),
                 repro);
    }
    return {"states/trace_distance_metric", n, t.worst, 1e-10, t.worst <= 1e-10, t.fail_case};
}

inline SuiteResult suite_trace_euclidean(const Options& o) {
    const long n = o.quick ? 100 : 1000;
    SplitMix64 rng(o.seed + 303);
    Tracker t;
    for (long k = 0; k < n; ++k) {
        const BlochVector r1 = random_bloch(rng), r2 = random_bloch(rng);
        const double dt = trace_distance(bloch_to_density(r1), bloch_to_density(r2));
        t.update(std::abs(dt - 0.5 * (r1 - r2).norm()), bloch_repro(r1, r2, 1.0));
    }
    return {"states/trace_distance_euclidean", n, t.worst, 1e-12, t.worst <= 1e-12, t.fail_case};
}

// ------------------------------ spectral suites ------------------------------

inline SuiteResult suite_distance_symmetry(const Options& o) {
    const long n = o.quick ? 100 : 1000;
    SplitMix64 rng(o.seed + 401);
    Tracker t;
    for (long k = 0; k < n; ++k) {
        const BlochVector r1 = random_bloch(rng), r2 = random_bloch(rng);
        t.update(std::abs(distance_1q(r1, r2, 1.0).value - distance_1q(r2, r1, 1.0).value),
                 bloch_repro(r1, r2, 1.0));
    }
    return {"spectral/symmetry_exact", n, t.worst, 0.0, t.worst <= 0.0, t.fail_case};
}

inline SuiteResult suite_branch_continuity(const Options&) {
    Tracker t;
    long samples = 0;
    for (double hbar : {0.5, 1.0, 2.0}) {
        for (int k = 0; k < 64; ++k) {
            // Separation on the branch-boundary cone dperp = |dz|.
            const double phi = 2.0 * 3.14159265358979323846 * k / 64.0;
            const double m = 0.3 + 0.4 * (k % 7) / 7.0;
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            const BlochVector half{0.5 * m * std::cos(phi), 0.5 * m * std::sin(phi),
                                   0.5 * sign * m};
            const BlochVector r1 = half, r2{-half.x, -half.y, -half.z};
            const BlochVector d = r1 - r2;
            const double perp = std::hypot(d.x, d.y);
            const double b1 = std::sqrt(0.5 * hbar) * perp;
            const double b2 = 0.5 * std::sqrt(0.5 * hbar) *
                              (perp * perp + d.z * d.z) / std::abs(d.z);
            const double val = distance_1q(r1, r2, hbar).value;
            t.update(std::abs(b1 - b2), bloch_repro(r1, r2, hbar));
            t.update(std::abs(val - b1), bloch_repro(r1, r2, hbar));
            ++samples;
        }
    }
    return {"spectral/branch_continuity", samples, t.worst, 1e-12, t.worst <= 1e-12, t.fail_case};
}

inline SuiteResult suite_triangle(const Options& o) {
    const long n = o.quick ? 1000 : 10000;
    SplitMix64 rng(o.seed + 402);
    Tracker t;
    for (long k = 0; k < n; ++k) {
        const BlochVector a = random_bloch(rng), b = random_bloch(rng), c = random_bloch(rng);
        const double dab = distance_1q(a, b, 1.0).value;
        const double dbc = distance_1q(b, c, 1.0).value;
        const double dac = distance_1q(a, c, 1.0).value;
        t.update(std::max(0.0, dac - dab - dbc),
                 format("a=(%.17g,%.17g,%.17g) b=(%.17g,%.17g,%.17g) c=(%.17g,%.17g,%.17g)",
                        a.x, a.y, a.z, b.x, b.y, b.z, c.x, c.y, c.z));
    }
    return {"spectral/triangle_inequality", n, t.worst, 1e-10, t.worst <= 1e-10, t.fail_case};
}

inline SuiteResult suite_collinear(const Options& o) {
    const long n = o.quick ? 100 : 1000;
    SplitMix64 rng(o.seed + 403);
    Tracker t;
    for (long k = 0; k < n; ++k) {
        const BlochVector r1 = random_bloch(rng), r3 = random_bloch(rng);
        const double lam = 0.05 + 0.9 * rng.uniform01();
        const BlochVector r2{r1.x + lam * (r3.x - r1.x), r1.y + lam * (r3.y - r1.y),
                             r1.z + lam * (r3.z - r1.z)};
        const double lhs = distance_1q(r1, r3, 1.0).value;
        const double rhs = distance_1q(r1, r2, 1.0).value + distance_1q(r2, r3, 1.0).value;
        t.update(std::abs(lhs - rhs), bloch_repro(r1, r3, 1.0) + format(" lambda=%.17g", lam));
    }
    return {"spectral/collinear_additivity", n, t.worst, 1e-10, t.worst <= 1e-10, t.fail_case};
}

inline SuiteResult suite_horizontal(const Options& o) {
    const long n = o.quick ? 100 : 1000;
    SplitMix64 rng(o.seed + 404);
    Tracker t;
    long samples = 0;
    for (double hbar : {0.5, 1.0, 2.0}) {
        for (long k = 0; k < n / 3 + 1; ++k) {
            const BlochVector r1 = random_bloch(rng);
            BlochVector r2;  // same horizontal plane, still inside the ball
            do {
                r2 = random_bloch(rng);
                r2.z = r1.z;
            } while (r2.norm_squared() > 1.0);
            const double d = distance_1q(r1, r2, hbar).value;
            t.update(std::abs(d - std::sqrt(0.5 * hbar) * (r1 - r2).norm()),
                     bloch_repro(r1, r2, hbar));
            ++samples;
        }
    }
    return {"spectral/horizontal_euclidean", samples, t.worst, 1e-12, t.worst <= 1e-12, t.fail_case};
}

inline SuiteResult suite_hbar_scaling(const Options& o) {
    const long n = o.quick ? 50 : 500;
    SplitMix64 rng(o.seed + 405);
    Tracker t;
    for (long k = 0; k < n; ++k) {
        const BlochVector r1 = random_bloch(rng), r2 = random_bloch(rng);
        const double base = distance_1q(r1, r2, 1.0).value;
        for (double hbar : {0.5, 2.0, 4.0})
            t.update(std::abs(distance_1q(r1, r2, hbar).value - std::sqrt(hbar) * base),
                     bloch_repro(r1, r2, hbar));
    }
    for (double hbar : {0.5, 2.0, 4.0})
        for (const auto& [a, b] : basis_pairs())
            t.update(std::abs(distance_2q_basis(a, b, hbar).value -
                              std::sqrt(hbar) * distance_2q_basis(a, b, 1.0).value),
                     format("basis pair (%d%d,%d%d) hbar=%.17g", a.first, a.second, b.first,
                            b.second, hbar));
    return {"spectral/hbar_scaling", n, t.worst, 1e-12, t.worst <= 1e-12, t.fail_case};
}

inline SuiteResult suite_element_certificate(const Options& o) {
    const long n = o.quick ? 50 : 500;
    SplitMix64 rng(o.seed + 406);
    Tracker ball, achieve;
    const double hbars[] = {0.5, 1.0, 2.0};
    for (long k = 0; k < n; ++k) {
        const double hbar = hbars[k % 3];
        const auto [r1, r2] = random_distinct_pair(rng);
        const DistanceResult res = distance_1q(r1, r2, hbar);
        ball.update(std::abs(*res.element_ball_norm - 1.0), bloch_repro(r1, r2, hbar));
        const ComplexMatrix drho =
            bloch_to_density(r1).matrix() - bloch_to_density(r2).matrix();
        achieve.update(std::abs(hs_inner(drho, *res.optimal_element) - res.value),
                       bloch_repro(r1, r2, hbar));
    }
    for (double hbar : hbars) {
        for (const auto& [a, b] : basis_pairs()) {
            const DistanceResult res = distance_2q_basis(a, b, hbar);
            const std::string repro = format("basis pair (%d%d,%d%d) hbar=%.17g", a.first,
                                             a.second, b.first, b.second, hbar);
            ball.update(std::max(0.0, *res.element_ball_norm - 1.0), repro);
            const ComplexMatrix drho = two_qubit_basis(a.first, a.second).matrix() -
                                       two_qubit_basis(b.first, b.second).matrix();
            achieve.update(std::abs(std::abs(hs_inner(drho, *res.optimal_element)) - res.value),
                           repro);
        }
    }
    // The ball-norm check carries tol 1e-9, the achieved-value check 1e-10.
    Tracker t;
    t.update(ball.worst, ball.fail_case);
    t.update(achieve.worst, achieve.fail_case);
    return {"spectral/element_certificate", n + 18, t.worst, 1e-9,
            ball.worst <= 1e-9 && achieve.worst <= 1e-10, t.fail_case};
}

inline SuiteResult suite_dominates_admissible(const Options& o) {
    const long pairs = o.quick ? 10 : 50;
    const long elements = 20;
    SplitMix64 rng(o.seed + 407);
    Tracker t;
    const SpectralTriple triple = dirac_2d(1.0);
    for (long k = 0; k < pairs; ++k) {
        const auto [r1, r2] = random_distinct_pair(rng);
        const double d = distance_1q(r1, r2, 1.0).value;
        const ComplexMatrix drho =
            bloch_to_density(r1).matrix() - bloch_to_density(r2).matrix();
        for (long j = 0; j < elements; ++j) {
            ComplexMatrix e = random_hermitian(rng, 2);
            const double bn = ball_norm(triple, e);
            if (bn > 1.0) e *= Complex(1.0 / bn);
            t.update(std::max(0.0, std::abs(hs_inner(drho, e)) - d), bloch_repro(r1, r2, 1.0));
        }
    }
    return {"spectral/closed_form_dominates", pairs * elements, t.worst, 1e-9, t.worst <= 1e-9,
            t.fail_case};
}

inline SuiteResult suite_coherence_l1(const Options& o) {
    const long n = o.quick ? 100 : 1000;
    SplitMix64 rng(o.seed + 408);
    Tracker t;
    for (long k = 0; k < n; ++k) {
        const BlochVector r = random_bloch(rng);
        const DensityMatrix rho = bloch_to_density(r);
        const double c = coherence_sd(rho, 1.0).value;
        t.update(std::abs(c - 2.0 * std::abs(rho.matrix()(0, 1))),
                 format("r=(%.17g,%.17g,%.17g)", r.x, r.y, r.z));
        t.update(std::abs(c - std::hypot(r.x, r.y)), format("r=(%.17g,%.17g,%.17g)", r.x, r.y, r.z));
    }
    return {"spectral/coherence_l1", n, t.worst, 1e-12, t.worst <= 1e-12, t.fail_case};
}

inline SuiteResult suite_diag_proportionality(const Options& o) {
    const double step = o.quick ? 0.25 : 0.05;
    Tracker t;
    long samples = 0;
    for (double hbar : {0.5, 1.0, 2.0}) {
        const double sq = std::sqrt(0.5 * hbar);
        for (int i = 0; step * i <= 1.0 + 1e-9; ++i) {
            for (int j = 0; step * j <= 1.0 + 1e-9; ++j) {
                const double p = step * i, q = step * j;
                const double d = distance_1q({0, 0, 2 * p - 1}, {0, 0, 2 * q - 1}, hbar).value;
                const double dt = trace_distance(diagonal_mixed(p), diagonal_mixed(q));
                const std::string repro = format("p=%.17g q=%.17g hbar=%.17g", p, q, hbar);
                t.update(std::abs(d - std::abs(p - q) * sq), repro);
                t.update(std::abs(d - sq * dt), repro);
                ++samples;
            }
        }
    }
    return {"spectral/diagonal_trace_proportionality", samples, t.worst, 1e-12, t.worst <= 1e-12,
            t.fail_case};
}

inline SuiteResult suite_pythagoras(const Options&) {
    Tracker t;
    for (double hbar : {0.5, 1.0, 2.0, 4.0})
        t.update(check_pythagoras(hbar).max_residual, format("hbar=%.17g", hbar));
    return {"spectral/pythagoras", 8, t.worst, 1e-12, t.worst <= 1e-12, t.fail_case};
}

// ------------------------------- oracle suites -------------------------------

inline OracleConfig verify_oracle_config(std::uint64_t seed) {
    OracleConfig cfg;
    cfg.n_starts = 8;
    cfg.max_iters = 600;
    cfg.seed = seed;
    return cfg;
}

inline SuiteResult suite_oracle_1q(const Options& o) {
    const long n = o.quick ? 10 : 500;
    SplitMix64 rng(o.seed + 501);
    Tracker t;
    long samples = 0;
    const std::vector<double> hbars = o.quick ? std::vector<double>{1.0}
                                              : std::vector<double>{0.5, 1.0, 2.0};
    for (double hbar : hbars) {
        const SpectralTriple triple = dirac_2d(hbar);
        for (long k = 0; k < n; ++k) {
            const auto [r1, r2] = random_distinct_pair(rng);
            const double closed = distance_1q(r1, r2, hbar).value;
            const OracleResult res = supremum_distance(bloch_to_density(r1), bloch_to_density(r2),
                                                       triple, verify_oracle_config(o.seed + k));
            double residual = std::max(0.0, (closed - res.value) / closed);
            if (res.value > closed + 1e-9) residual = std::max(residual, 1.0);  // overshoot
            t.update(residual, bloch_repro(r1, r2, hbar));
            ++samples;
        }
    }
    return {"oracle/1q_matches_closed_form", samples, t.worst, 1e-3, t.worst <= 1e-3, t.fail_case};
}

inline SuiteResult suite_oracle_2q(const Options& o) {
    Tracker t;
    long samples = 0;
    const SpectralTriple triple = dirac_4d(1.0);
    const auto& pairs = basis_pairs();
    const std::size_t limit = o.quick ? 2 : pairs.size();
    for (std::size_t k = 0; k < limit; ++k) {
        const auto& [a, b] = pairs[k];
        const double closed = distance_2q_basis(a, b, 1.0).value;
        const DensityMatrix rho1 = two_qubit_basis(a.first, a.second);
        const DensityMatrix rho2 = two_qubit_basis(b.first, b.second);
        const std::string repro =
            format("basis pair (%d%d,%d%d) hbar=1", a.first, a.second, b.first, b.second);
        for (bool diagonal : {false, true}) {
            const OracleResult res =
                diagonal ? supremum_distance_diagonal(rho1, rho2, triple,
                                                      verify_oracle_config(o.seed + 7 * k))
                         : supremum_distance(rho1, rho2, triple,
                                             verify_oracle_config(o.seed + 7 * k + 1));
            double residual = std::max(0.0, (closed - res.value) / closed);
            if (res.value > closed + 1e-9) residual = std::max(residual, 1.0);
            t.update(residual, repro);
            ++samples;
        }
    }
    return {"oracle/2q_basis_agreement", samples, t.worst, 1e-3, t.worst <= 1e-3, t.fail_case};
}

inline SuiteResult suite_oracle_certify(const Options& o) {
    SplitMix64 rng(o.seed + 502);
    Tracker t;
    const SpectralTriple triple = dirac_2d(1.0);
    const auto [r1, r2] = random_distinct_pair(rng);
    const DensityMatrix rho1 = bloch_to_density(r1), rho2 = bloch_to_density(r2);
    const ComplexMatrix drho = rho1.matrix() - rho2.matrix();
    OracleConfig cfg = verify_oracle_config(o.seed);
    cfg.n_starts = 4;
    const OracleResult res = supremum_distance(rho1, rho2, triple, cfg);
    if (!certify(res, triple, drho)) t.update(1.0, bloch_repro(r1, r2, 1.0) + " (genuine result)");
    OracleResult scaled = res;
    scaled.element *= Complex(2.0);
    if (certify(scaled, triple, drho)) t.update(1.0, "element scaled x2 accepted");
    OracleResult corrupted = res;
    corrupted.value += 0.1;
    if (certify(corrupted, triple, drho)) t.update(1.0, "corrupted value accepted");
    return {"oracle/certify_roundtrip", 3, t.worst, 0.0, t.worst <= 0.0, t.fail_case};
}

inline SuiteResult suite_oracle_shift(const Options& o) {
    const long n = o.quick ? 2 : 5;
    SplitMix64 rng(o.seed + 503);
    Tracker t;
    const SpectralTriple triple = dirac_2d(1.0);
    OracleConfig cfg = verify_oracle_config(o.seed);
    cfg.max_iters = 400;
    for (long k = 0; k < n; ++k) {
        const auto [r1, r2] = random_distinct_pair(rng);
        const ComplexMatrix drho =
            bloch_to_density(r1).matrix() - bloch_to_density(r2).matrix();
        const ComplexMatrix seed_e = random_hermitian(rng, 2);
        const double c = 3.0 * rng.uniform01() - 1.5;
        const ComplexMatrix shifted = seed_e + ComplexMatrix::identity(2) * Complex(c);
        const auto plain = qsd::detail::ascend_from(triple, drho, seed_e, false, cfg);
        const auto moved = qsd::detail::ascend_from(triple, drho, shifted, false, cfg);
        t.update(std::abs(plain.value - moved.value),
                 bloch_repro(r1, r2, 1.0) + format(" c=%.17g", c));
    }
    return {"oracle/seed_shift_invariance", n, t.worst, 1e-6, t.worst <= 1e-6, t.fail_case};
}

inline SuiteResult suite_oracle_determinism(const Options& o) {
    SplitMix64 rng(o.seed + 504);
    Tracker t;
    const SpectralTriple triple = dirac_2d(1.0);
    const auto [r1, r2] = random_distinct_pair(rng);
    const DensityMatrix rho1 = bloch_to_density(r1), rho2 = bloch_to_density(r2);
    OracleConfig cfg = verify_oracle_config(o.seed);
    cfg.n_starts = 4;
    cfg.max_iters = 200;
    const OracleResult a = supremum_distance(rho1, rho2, triple, cfg);
    const OracleResult b = supremum_distance(rho1, rho2, triple, cfg);
    const bool identical = a.value == b.value && a.element == b.element &&
                           a.per_start_values == b.per_start_values &&
                           a.starts_converged == b.starts_converged;
    if (!identical) t.update(1.0, bloch_repro(r1, r2, 1.0));
    return {"oracle/determinism", 2, t.worst, 0.0, t.worst <= 0.0, t.fail_case};
}

inline SuiteResult suite_oracle_hbar(const Options& o) {
    const long n = o.quick ? 1 : 3;
    SplitMix64 rng(o.seed + 505);
    Tracker t;
    OracleConfig cfg = verify_oracle_config(o.seed);
    cfg.max_iters = 2000;
    cfg.tol_value = 1e-9;
    for (long k = 0; k < n; ++k) {
        const auto [r1, r2] = random_distinct_pair(rng);
        const DensityMatrix rho1 = bloch_to_density(r1), rho2 = bloch_to_density(r2);
        const double v1 = supremum_distance(rho1, rho2, dirac_2d(1.0), cfg).value;
        const double vhalf = supremum_distance(rho1, rho2, dirac_2d(0.5), cfg).value;
        t.update(std::abs(vhalf * std::sqrt(2.0) - v1) / v1, bloch_repro(r1, r2, 1.0));
    }
    return {"oracle/hbar_monotonicity", n, t.worst, 1e-3, t.worst <= 1e-3, t.fail_case};
}

}  // namespace detail

inline std::vector<SuiteResult> run_all(const Options& opts) {
    using namespace detail;
    std::vector<SuiteResult> results;
    for (auto* suite : {suite_norm_dagger, suite_bessel, suite_eigen_permutation,
                        suite_commutator_traceless, suite_eigen_trace, suite_ball_shift,
                        suite_ball_homogeneity, suite_ball_identity_1mode,
                        suite_block_bounds_2mode, suite_diagonal_constraints,
                        suite_bloch_roundtrip, suite_trace_metric, suite_trace_euclidean,
                        suite_distance_symmetry, suite_branch_continuity, suite_triangle,
                        suite_collinear, suite_horizontal, suite_hbar_scaling,
                        suite_element_certificate, suite_dominates_admissible,
                        suite_coherence_l1, suite_diag_proportionality, suite_pythagoras,
                        suite_oracle_1q, suite_oracle_2q, suite_oracle_certify,
                        suite_oracle_shift, suite_oracle_determinism, suite_oracle_hbar})
        results.push_back(suite(opts));
    return results;
}

inline bool all_passed(const std::vector<SuiteResult>& results) {
    for (const SuiteResult& r : results)
        if (!r.passed) return false;
    return true;
}

inline std::string render_report(const std::vector<SuiteResult>& results, const Options& opts) {
    std::string out = detail::format("verification report (seed %llu, %s)\n",
                                     static_cast<unsigned long long>(opts.seed),
                                     opts.quick ? "quick" : "full");
    out += detail::format("%-42s %9s %13s %10s  %s\n", "suite", "samples", "worst", "tol",
                          "status");
    int passed = 0;
    for (const SuiteResult& r : results) {
        out += detail::format("%-42s %9ld %13.6e %10.1e  %s\n", r.name.c_str(), r.samples,
                              r.worst, r.tolerance, r.passed ? "PASS" : "FAIL");
        if (!r.passed && !r.fail_case.empty())
            out += detail::format("    repro: %s\n", r.fail_case.c_str());
        if (r.passed) ++passed;
    }
    out += detail::format("result: %s (%d/%zu suites)\n",
                          passed == static_cast<int>(results.size()) ? "PASS" : "FAIL", passed,
                          results.size());
    return out;
}

}  // namespace qsd::verify
