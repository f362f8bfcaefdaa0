// spectral.hpp — closed-form Connes spectral distances: the one-qubit
// piecewise formula in Bloch coordinates with its optimal elements, the
// spectral-distance coherence measure, and the two-qubit basis-state distance
// table with the explicit diagonal optimal elements.

#pragma once

#include "qsd/complex_matrix.hpp"
#include "qsd/fock.hpp"
#include "qsd/states.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qsd {

// Hermitian 2x2 element e = [[s, u-iv], [u+iv, t]].
struct HermitianElementParams {
    double s = 0.0, t = 0.0, u = 0.0, v = 0.0;

    ComplexMatrix to_matrix() const {
        ComplexMatrix m(2);
        m(0, 0) = s;
        m(0, 1) = Complex(u, -v);
        m(1, 0) = Complex(u, v);
        m(1, 1) = t;
        return m;
    }
};

enum class DistanceMethod { closed_form, oracle };

inline const char* to_string(DistanceMethod m) {
    return m == DistanceMethod::closed_form ? "closed_form" : "oracle";
}

struct DistanceResult {
    double value = 0.0;
    DistanceMethod method = DistanceMethod::closed_form;
    std::optional<ComplexMatrix> optimal_element;  // absent when the states coincide
    std::optional<double> element_ball_norm;
};

namespace detail {

inline void require_valid_pair(const BlochVector& r1, const BlochVector& r2, double hbar) {
    if (!is_valid_bloch(r1) || !is_valid_bloch(r2))
        throw std::invalid_argument("distance_1q: invalid Bloch vector");
    require_positive_hbar(hbar);
}

}  // namespace detail

// Optimal element attaining the one-qubit supremum. With dperp^2 = dx^2+dy^2:
// inside the cone dperp^2 <= dz^2 take |w| = sqrt(hbar/2) dperp/|dz| and
// |s-t| = sqrt(hbar/2)(dz^2-dperp^2)/dz^2, otherwise |w| = sqrt(hbar/2) and
// s = t. The free phases are fixed by (u,v) || (dx,dy), sign(s-t) = sign(dz)
// and t = 0, which makes tr(drho e) real, positive and maximal.
inline ComplexMatrix optimal_element_1q(const BlochVector& r1, const BlochVector& r2, double hbar) {
    detail::require_valid_pair(r1, r2, hbar);
    const BlochVector d = r1 - r2;
    const double perp2 = d.x * d.x + d.y * d.y;
    const double dz2 = d.z * d.z;
    if (perp2 == 0.0 && dz2 == 0.0)
        throw std::invalid_argument("optimal_element_1q: states coincide, maximizer not unique");

    const double sq = std::sqrt(0.5 * hbar);
    const double perp = std::sqrt(perp2);
    double wmag = 0.0, diff = 0.0;  // |w| and s-t
    if (perp2 <= dz2) {
        wmag = sq * perp / std::abs(d.z);
        diff = (d.z > 0.0 ? 1.0 : -1.0) * sq * (dz2 - perp2) / dz2;
    } else {
        wmag = sq;
        diff = 0.0;
    }
    HermitianElementParams p;
    p.s = diff;
    p.t = 0.0;
    p.u = perp > 0.0 ? wmag * d.x / perp : 0.0;
    p.v = perp > 0.0 ? wmag * d.y / perp : 0.0;
    return p.to_matrix();
}

// Piecewise closed form in Cartesian coordinates: with dperp^2 = dx^2+dy^2,
//   d = sqrt(hbar/2) * dperp                          when dperp^2 >= dz^2,
//   d = (1/2) sqrt(hbar/2) * |dr|^2 / |dz|            otherwise.
// The two branches agree on the cone dperp = |dz|.
inline DistanceResult distance_1q(const BlochVector& r1, const BlochVector& r2, double hbar) {
    detail::require_valid_pair(r1, r2, hbar);
    const BlochVector d = r1 - r2;
    const double perp2 = d.x * d.x + d.y * d.y;
    const double dz2 = d.z * d.z;

    DistanceResult result;
    if (perp2 == 0.0 && dz2 == 0.0) return result;  // zero distance, no unique element

    const double sq = std::sqrt(0.5 * hbar);
    result.value = (perp2 >= dz2) ? sq * std::sqrt(perp2)
                                  : 0.5 * sq * (perp2 + dz2) / std::abs(d.z);
    result.optimal_element = optimal_element_1q(r1, r2, hbar);
    result.element_ball_norm = ball_norm(dirac_2d(hbar), *result.optimal_element);
    return result;
}

struct CoherenceResult {
    double value;
    DensityMatrix nearest;  // nearest incoherent (diagonal) state
};

// Coherence from the spectral distance: sqrt(2/hbar) times the minimal
// distance to the diagonal states, which evaluates to sqrt(x^2+y^2) with the
// minimizer at Bloch (0,0,z). Coincides with the l1 coherence 2|rho_01|.
inline CoherenceResult coherence_sd(const DensityMatrix& rho, double hbar) {
    detail::require_positive_hbar(hbar);
    if (rho.dim() != 2)
        throw std::invalid_argument("coherence_sd: expected a one-qubit state");
    const BlochVector r = density_to_bloch(rho);
    return {std::hypot(r.x, r.y), bloch_to_density({0.0, 0.0, r.z})};
}

namespace detail {

// Diagonal optimal elements for the two-qubit basis-state distances.
inline ComplexMatrix two_qubit_element_first(double hbar) {   // first label flips
    const double sq = std::sqrt(0.5 * hbar);
    return ComplexMatrix::diagonal({sq, sq, 0.0, 0.0});
}

inline ComplexMatrix two_qubit_element_second(double hbar) {  // second label flips
    const double sq = std::sqrt(0.5 * hbar);
    return ComplexMatrix::diagonal({sq, 0.0, sq, 0.0});
}

}  // namespace detail

// Connes distance between two-qubit basis states |ij> and |kl>: zero for the
// same state, sqrt(hbar/2) when one label flips, sqrt(hbar) when both do.
// Table-driven with the proven optimal elements attached: e1 for first-label
// flips, e2 for second-label flips, (e1 +/- e2)/sqrt(2) for double flips.
inline DistanceResult distance_2q_basis(std::pair<int, int> a, std::pair<int, int> b, double hbar) {
    detail::require_positive_hbar(hbar);
    for (int bit : {a.first, a.second, b.first, b.second})
        if (bit != 0 && bit != 1)
            throw std::invalid_argument("distance_2q_basis: labels must be bits");

    const int hamming = (a.first != b.first) + (a.second != b.second);
    DistanceResult result;
    if (hamming == 0) return result;

    if (hamming == 1) {
        result.value = std::sqrt(0.5 * hbar);
        result.optimal_element = (a.first != b.first) ? detail::two_qubit_element_first(hbar)
                                                      : detail::two_qubit_element_second(hbar);
    } else {
        result.value = std::sqrt(hbar);
        const ComplexMatrix e1 = detail::two_qubit_element_first(hbar);
        const ComplexMatrix e2 = detail::two_qubit_element_second(hbar);
        const Complex inv_sqrt2(1.0 / std::sqrt(2.0), 0.0);
        // {00,11} takes (e1+e2)/sqrt(2); {01,10} takes (e1-e2)/sqrt(2).
        result.optimal_element = (a.first == a.second) ? (e1 + e2) * inv_sqrt2
                                                       : (e1 - e2) * inv_sqrt2;
    }
    result.element_ball_norm = ball_norm(dirac_4d(hbar), *result.optimal_element);
    return result;
}

struct PythagorasIdentity {
    std::string name;
    double lhs = 0.0, rhs = 0.0;
    double residual() const { return std::abs(lhs - rhs); }
};

struct PythagorasReport {
    std::vector<PythagorasIdentity> identities;
    double max_residual = 0.0;
};

// Squared basis-state distances along the two edges of each double flip sum to
// the squared diagonal distance.
inline PythagorasReport check_pythagoras(double hbar) {
    auto d2 = [hbar](std::pair<int, int> a, std::pair<int, int> b) {
        const double d = distance_2q_basis(a, b, hbar).value;
        return d * d;
    };
    PythagorasReport report;
    report.identities.push_back({"d(00,11)^2 = d(00,10)^2 + d(10,11)^2",
                                 d2({0, 0}, {1, 1}), d2({0, 0}, {1, 0}) + d2({1, 0}, {1, 1})});
    report.identities.push_back({"d(01,10)^2 = d(01,11)^2 + d(11,10)^2",
                                 d2({0, 1}, {1, 0}), d2({0, 1}, {1, 1}) + d2({1, 1}, {1, 0})});
    for (const auto& id : report.identities)
        report.max_residual = std::max(report.max_residual, id.residual());
    return report;
}

}  // namespace qsd
