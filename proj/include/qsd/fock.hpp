// fock.hpp — fermionic Fock-space ladder operators and the Dirac operators of
// the one- and two-mode phase-space spectral triples, the block-diagonal
// representation pi, and the ball-condition norm ||[D, pi(e)]||.

#pragma once

#include "qsd/complex_matrix.hpp"

namespace qsd {

struct Ladder1 {
    ComplexMatrix f;      // |0><1|
    ComplexMatrix f_dag;  // |1><0|
};

struct Ladder2 {
    ComplexMatrix f1;  // annihilates the first mode label
    ComplexMatrix f2;  // annihilates the second mode label
};

// One-mode annihilator on span{|0>,|1>}: {f, f^dag} = 1, f^2 = 0.
inline Ladder1 ladder_1mode() {
    ComplexMatrix f(2);
    f(0, 1) = 1.0;
    return {f, dagger(f)};
}

// Two-mode annihilators on span{|00>,|01>,|10>,|11>} (basis ordered by the
// labels' binary value). All mixed commutators vanish; the pair coincides
// with f (x) I and I (x) f in this ordering.
inline Ladder2 ladder_2mode() {
    ComplexMatrix f1(4), f2(4);
    f1(0, 2) = 1.0;
    f1(1, 3) = 1.0;
    f2(0, 1) = 1.0;
    f2(2, 3) = 1.0;
    return {f1, f2};
}

// Dirac operator acting on spinor_copies stacked copies of the Fock space
// (copy index is the outer block index). Scales as 1/sqrt(hbar).
struct SpectralTriple {
    int n_modes = 1;               // 1 or 2
    double hbar = 1.0;
    std::size_t fock_dim = 2;      // 2^n_modes
    std::size_t spinor_copies = 2; // 2 (one mode) or 4 (two modes)
    ComplexMatrix dirac{4};        // Hermitian, dim = fock_dim * spinor_copies
};

namespace detail {

inline void require_positive_hbar(double hbar) {
    if (!(hbar > 0.0) || !std::isfinite(hbar))
        throw std::invalid_argument("spectral triple: hbar must be positive");
}

inline void set_block(ComplexMatrix& m, std::size_t bi, std::size_t bj,
                      const ComplexMatrix& block, const Complex& scale) {
    const std::size_t n = block.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(bi * n + i, bj * n + j) = scale * block(i, j);
}

}  // namespace detail

// One-mode Dirac operator: sqrt(2/hbar) * [[0, f^dag], [f, 0]] on two copies.
inline SpectralTriple dirac_2d(double hbar) {
    detail::require_positive_hbar(hbar);
    const auto [f, f_dag] = ladder_1mode();
    const double scale = std::sqrt(2.0 / hbar);
    ComplexMatrix d(4);
    detail::set_block(d, 0, 1, f_dag, scale);
    detail::set_block(d, 1, 0, f, scale);
    return {1, hbar, 2, 2, std::move(d)};
}

// Two-mode Dirac operator: i*sqrt(2/hbar) times the antihermitian block matrix
//   [[0,    0,     f2^dag, f1^dag],
//    [0,    0,     f1,    -f2    ],
//    [-f2,  -f1^dag, 0,    0     ],
//    [-f1,  f2^dag,  0,    0     ]]
// on four copies of the two-mode Fock space.
inline SpectralTriple dirac_4d(double hbar) {
    detail::require_positive_hbar(hbar);
    const auto [f1, f2] = ladder_2mode();
    const ComplexMatrix f1d = dagger(f1), f2d = dagger(f2);
    const Complex iscale(0.0, std::sqrt(2.0 / hbar));
    ComplexMatrix d(16);
    detail::set_block(d, 0, 2, f2d, iscale);
    detail::set_block(d, 0, 3, f1d, iscale);
    detail::set_block(d, 1, 2, f1, iscale);
    detail::set_block(d, 1, 3, -f2, iscale);
    detail::set_block(d, 2, 0, -f2, iscale);
    detail::set_block(d, 2, 1, -f1d, iscale);
    detail::set_block(d, 3, 0, -f1, iscale);
    detail::set_block(d, 3, 1, f2d, iscale);
    return {2, hbar, 4, 4, std::move(d)};
}

// Block-diagonal representation: `copies` copies of e on the stacked space.
inline ComplexMatrix represent(const ComplexMatrix& e, std::size_t copies) {
    const std::size_t n = e.dim();
    if (copies == 0 || copies * n > kMaxDim)
        throw std::invalid_argument("represent: copies * dim must be in [2, 16]");
    ComplexMatrix m(copies * n);
    for (std::size_t k = 0; k < copies; ++k) detail::set_block(m, k, k, e, 1.0);
    return m;
}

// [D, pi(e)] as a dense matrix on the stacked space. This is the plain
// commutator: for the Hermitian elements the distance supremum runs over it
// coincides with the graded one, so no parity bookkeeping is carried.
inline ComplexMatrix dirac_commutator(const SpectralTriple& triple, const ComplexMatrix& e) {
    if (e.dim() != triple.fock_dim)
        throw std::invalid_argument("dirac_commutator: element dimension does not match Fock space");
    const ComplexMatrix pe = represent(e, triple.spinor_copies);
    return triple.dirac * pe - pe * triple.dirac;
}

// ||[D, pi(e)]||_op; the element is inside the ball iff this is <= 1 (+tol).
inline double ball_norm(const SpectralTriple& triple, const ComplexMatrix& e) {
    return operator_norm(dirac_commutator(triple, e));
}

inline constexpr double kBallConditionTol = 1e-9;

inline bool is_admissible(const SpectralTriple& triple, const ComplexMatrix& e) {
    return ball_norm(triple, e) <= 1.0 + kBallConditionTol;
}

}  // namespace qsd
