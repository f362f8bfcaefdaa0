// oracle.hpp — independent numerical evaluation of the Connes-distance
// supremum sup{ |tr(drho e)| : ||[D, pi(e)]||_op <= 1 } by multistart
// projected ascent over Hermitian elements. Values are certified lower
// bounds: the returned element is re-checked for admissibility.

#pragma once

#include "qsd/complex_matrix.hpp"
#include "qsd/fock.hpp"
#include "qsd/states.hpp"

#include <cstdint>
#include <vector>

namespace qsd {

inline constexpr const char* kOracleRngName = "splitmix64";

struct OracleConfig {
    int n_starts = 64;
    int max_iters = 2000;
    double step_init = 0.1;
    double tol_value = 1e-7;       // stop once the best value stalls this long
    std::uint64_t seed = 42;
    double projection_tol = 1e-12;

    void validate() const {
        if (n_starts < 1) throw std::invalid_argument("OracleConfig: n_starts must be >= 1");
        if (max_iters < 1) throw std::invalid_argument("OracleConfig: max_iters must be >= 1");
        if (!(step_init > 0.0)) throw std::invalid_argument("OracleConfig: step_init must be > 0");
        if (!(tol_value > 0.0)) throw std::invalid_argument("OracleConfig: tol_value must be > 0");
        if (!(projection_tol > 0.0))
            throw std::invalid_argument("OracleConfig: projection_tol must be > 0");
    }
};

struct OracleResult {
    double value = 0.0;                   // certified lower bound on the supremum
    ComplexMatrix element{2};             // best admissible element found
    double ball_norm = 0.0;
    int starts_converged = 0;
    std::vector<double> per_start_values; // best value reached by each start
};

namespace detail {

// splitmix64 (Steele/Lea/Vigna): counter-based, fully determined by the seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double normal() {
        double u1 = 0.0;
        do { u1 = uniform01(); } while (u1 <= 0.0);
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

private:
    std::uint64_t state_;
};

inline ComplexMatrix random_hermitian(SplitMix64& rng, std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = rng.normal();
        for (std::size_t j = i + 1; j < dim; ++j) {
            const Complex v(rng.normal() / std::sqrt(2.0), rng.normal() / std::sqrt(2.0));
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
    return m;
}

inline ComplexMatrix random_real_diagonal(SplitMix64& rng, std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = rng.normal();
    return m;
}

inline ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    return (m + dagger(m)) * Complex(0.5);
}

// Hilbert-Schmidt real inner product Re tr(a^dag b).
inline double hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    double s = 0.0;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s += a(i, j).real() * b(i, j).real() + a(i, j).imag() * b(i, j).imag();
    return s;
}

inline ComplexMatrix keep_real_diagonal(const ComplexMatrix& m) {
    ComplexMatrix d(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) d(i, i) = m(i, i).real();
    return d;
}

// Gradient of e -> ||[D, pi(e)]||_op at e, from the top singular pair of the
// commutator: d sigma_max = Re u^dag [D, pi(de)] v pulled back through pi.
inline ComplexMatrix ball_norm_gradient(const SpectralTriple& triple, const ComplexMatrix& e) {
    const ComplexMatrix c = dirac_commutator(triple, e);
    const HermitianEigenSystem es = hermitian_eigensystem(dagger(c) * c);
    const std::size_t n = c.dim();
    const std::size_t top = n - 1;
    const double sigma = std::sqrt(std::max(0.0, es.values.back()));
    ComplexMatrix grad(triple.fock_dim);
    if (sigma <= 0.0) return grad;

    std::vector<Complex> v(n), u(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = es.vectors(i, top);
    for (std::size_t i = 0; i < n; ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += c(i, j) * v[j];
        u[i] = s / sigma;
    }
    ComplexMatrix outer(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) outer(i, j) = u[i] * std::conj(v[j]);
    const ComplexMatrix z = triple.dirac * outer - outer * triple.dirac;
    // Pull back through the block-diagonal representation: sum the copies.
    const std::size_t fd = triple.fock_dim;
    for (std::size_t k = 0; k < triple.spinor_copies; ++k)
        for (std::size_t i = 0; i < fd; ++i)
            for (std::size_t j = 0; j < fd; ++j) grad(i, j) += z(k * fd + i, k * fd + j);
    return hermitian_part(grad);
}

struct StartOutcome {
    double value = 0.0;
    ComplexMatrix element{2};
    bool converged = false;
};

// Single ascent run. Iterates live on the ball boundary: every accepted step
// is rescaled by 1/ball_norm (valid by absolute homogeneity). The ascent
// direction is the objective gradient minus its component along the ball-norm
// gradient, so the run follows the boundary instead of stalling against it.
inline StartOutcome ascend_from(const SpectralTriple& triple, const ComplexMatrix& drho,
                                const ComplexMatrix& seed, bool diagonal_only,
                                const OracleConfig& cfg) {
    const ComplexMatrix objective_grad = diagonal_only ? keep_real_diagonal(drho) : drho;
    StartOutcome out{0.0, ComplexMatrix(triple.fock_dim), false};

    ComplexMatrix e = diagonal_only ? keep_real_diagonal(seed) : hermitian_part(seed);
    double n = ball_norm(triple, e);
    if (n < cfg.projection_tol) return out;  // seed in the kernel (multiples of I)
    e *= Complex(1.0 / n);
    double f = hs_inner(drho, e);
    if (f > 0.0) {
        out.value = f;
        out.element = e;
    }

    double step = cfg.step_init;
    double window_best = f;
    int stall = 0;
    constexpr double kStepFloor = 1e-10;
    constexpr int kStallWindow = 50;

    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        ComplexMatrix g = ball_norm_gradient(triple, e);
        if (diagonal_only) g = keep_real_diagonal(g);
        const double gg = hs_inner(g, g);
        ComplexMatrix dir = objective_grad;
        if (gg > cfg.projection_tol) dir -= g * Complex(hs_inner(g, objective_grad) / gg);
        if (hs_inner(dir, dir) < cfg.projection_tol * cfg.projection_tol) {
            out.converged = true;  // gradient parallel to the constraint normal
            break;
        }

        bool accepted = false;
        while (step >= kStepFloor) {
            ComplexMatrix trial = e + dir * Complex(step);
            const double tn = ball_norm(triple, trial);
            if (tn < cfg.projection_tol) {
                step *= 0.5;
                continue;
            }
            trial *= Complex(1.0 / tn);
            const double tf = hs_inner(drho, trial);
            if (tf > f) {
                e = std::move(trial);
                f = tf;
                accepted = true;
                step *= 1.5;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            out.converged = true;
            break;
        }
        if (f > out.value) {
            out.value = f;
            out.element = e;
        }
        if (f > window_best + cfg.tol_value) {
            window_best = f;
            stall = 0;
        } else if (++stall >= kStallWindow) {
            out.converged = true;
            break;
        }
    }
    return out;
}

}  // namespace detail

// Re-checks the result invariants from scratch: element admissible and the
// objective at the element reproducing the reported value.
inline bool certify(const OracleResult& result, const SpectralTriple& triple,
                    const ComplexMatrix& delta_rho) {
    if (result.element.dim() != triple.fock_dim) return false;
    if (ball_norm(triple, result.element) > 1.0 + kBallConditionTol) return false;
    const double objective = std::abs(detail::hs_inner(delta_rho, result.element));
    return std::abs(objective - result.value) <= 1e-9;
}

namespace detail {

inline OracleResult run_supremum(const DensityMatrix& rho1, const DensityMatrix& rho2,
                                 const SpectralTriple& triple, const OracleConfig& cfg,
                                 bool diagonal_only) {
    cfg.validate();
    if (rho1.dim() != rho2.dim() || rho1.dim() != triple.fock_dim)
        throw std::invalid_argument("supremum_distance: state/triple dimension mismatch");
    if (diagonal_only) {
        for (const DensityMatrix* rho : {&rho1, &rho2})
            if (max_abs_entry(rho->matrix() - keep_real_diagonal(rho->matrix())) > 1e-12)
                throw std::invalid_argument("supremum_distance_diagonal: states must be diagonal");
    }

    const ComplexMatrix drho = rho1.matrix() - rho2.matrix();
    OracleResult result;
    result.element = ComplexMatrix(triple.fock_dim);
    if (max_abs_entry(drho) == 0.0) return result;  // identical states

    // Deterministic seeds +/-drho first, then splittable random starts.
    SplitMix64 seeder(cfg.seed);
    std::vector<ComplexMatrix> seeds;
    seeds.reserve(static_cast<std::size_t>(cfg.n_starts));
    seeds.push_back(drho);
    if (cfg.n_starts > 1) seeds.push_back(-drho);
    while (seeds.size() < static_cast<std::size_t>(cfg.n_starts)) {
        SplitMix64 rng(seeder.next());
        seeds.push_back(diagonal_only ? random_real_diagonal(rng, triple.fock_dim)
                                      : random_hermitian(rng, triple.fock_dim));
    }

    result.per_start_values.reserve(seeds.size());
    int best_index = -1;
    for (std::size_t k = 0; k < seeds.size(); ++k) {
        const StartOutcome outcome = ascend_from(triple, drho, seeds[k], diagonal_only, cfg);
        result.per_start_values.push_back(outcome.value);
        if (outcome.converged) ++result.starts_converged;
        if (outcome.value > result.value) {
            result.value = outcome.value;
            result.element = outcome.element;
            best_index = static_cast<int>(k);
        }
    }
    if (best_index >= 0) {
        result.ball_norm = ball_norm(triple, result.element);
        if (result.ball_norm > 1.0) {  // guard against roundoff past the boundary
            result.element *= Complex(1.0 / result.ball_norm);
            result.value = hs_inner(drho, result.element);
            result.ball_norm = ball_norm(triple, result.element);
        }
    }
    return result;
}

}  // namespace detail

// sup{ tr(drho e) } over Hermitian elements in the ball, via multistart
// projected ascent. The value is a certified lower bound on the supremum.
inline OracleResult supremum_distance(const DensityMatrix& rho1, const DensityMatrix& rho2,
                                      const SpectralTriple& triple, const OracleConfig& cfg = {}) {
    return detail::run_supremum(rho1, rho2, triple, cfg, false);
}

// Same search restricted to real diagonal elements; requires diagonal states
// (for which the restriction is lossless).
inline OracleResult supremum_distance_diagonal(const DensityMatrix& rho1, const DensityMatrix& rho2,
                                               const SpectralTriple& triple,
                                               const OracleConfig& cfg = {}) {
    return detail::run_supremum(rho1, rho2, triple, cfg, true);
}

}  // namespace qsd
