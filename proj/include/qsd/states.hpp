// states.hpp — qubit state construction and elementary distance measures:
// Bloch <-> density-matrix conversion, named one-qubit states, two-qubit basis
// projectors, diagonal mixtures, the quantum trace distance, and the state
// spec mini-grammar shared with the CLI.

#pragma once

#include "qsd/complex_matrix.hpp"

#include <charconv>
#include <optional>
#include <string>
#include <string_view>

namespace qsd {

inline constexpr double kBlochNormTol = 1e-12;
inline constexpr double kDensityEigenvalueTol = 1e-10;
inline constexpr double kPurityTol = 1e-10;

struct BlochVector {
    double x = 0.0, y = 0.0, z = 0.0;

    double norm_squared() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_squared()); }

    friend BlochVector operator-(const BlochVector& a, const BlochVector& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
};

inline bool is_valid_bloch(const BlochVector& r) {
    return std::isfinite(r.x) && std::isfinite(r.y) && std::isfinite(r.z) &&
           r.norm_squared() <= 1.0 + kBlochNormTol;
}

// Pure up to numerical tolerance; used for reporting only.
inline bool is_pure(const BlochVector& r) { return r.norm() >= 1.0 - kPurityTol; }

// Hermitian, unit-trace, positive-semidefinite matrix of dimension 2 or 4.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
        if (mat_.dim() != 2 && mat_.dim() != 4)
            throw std::invalid_argument("DensityMatrix: dimension must be 2 or 4");
        if (!is_hermitian(mat_))
            throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
        if (std::abs(trace(mat_) - Complex(1.0)) > 1e-12)
            throw std::invalid_argument("DensityMatrix: trace must be 1");
        if (hermitian_eigenvalues(mat_).front() < -kDensityEigenvalueTol)
            throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
    }

    const ComplexMatrix& matrix() const { return mat_; }
    std::size_t dim() const { return mat_.dim(); }

private:
    ComplexMatrix mat_;
};

enum class NamedState { zero, one, x_plus, x_minus, y_plus, y_minus, max_mixed };

// rho = (I + r.sigma)/2 = (1/2) [[1+z, x-iy], [x+iy, 1-z]].
inline DensityMatrix bloch_to_density(const BlochVector& r) {
    if (!is_valid_bloch(r))
        throw std::invalid_argument("bloch_to_density: Bloch vector outside the unit ball");
    ComplexMatrix m(2);
    m(0, 0) = 0.5 * (1.0 + r.z);
    m(0, 1) = Complex(0.5 * r.x, -0.5 * r.y);
    m(1, 0) = Complex(0.5 * r.x, 0.5 * r.y);
    m(1, 1) = 0.5 * (1.0 - r.z);
    return DensityMatrix(std::move(m));
}

inline BlochVector density_to_bloch(const DensityMatrix& rho) {
    if (rho.dim() != 2)
        throw std::invalid_argument("density_to_bloch: expected a one-qubit state");
    const ComplexMatrix& m = rho.matrix();
    return {2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), m(0, 0).real() - m(1, 1).real()};
}

inline BlochVector named_state_bloch(NamedState tag) {
    switch (tag) {
        case NamedState::zero:      return {0.0, 0.0, 1.0};
        case NamedState::one:       return {0.0, 0.0, -1.0};
        case NamedState::x_plus:    return {1.0, 0.0, 0.0};
        case NamedState::x_minus:   return {-1.0, 0.0, 0.0};
        case NamedState::y_plus:    return {0.0, 1.0, 0.0};
        case NamedState::y_minus:   return {0.0, -1.0, 0.0};
        case NamedState::max_mixed: return {0.0, 0.0, 0.0};
    }
    throw std::invalid_argument("named_state: unknown tag");
}

inline DensityMatrix named_state(NamedState tag) {
    return bloch_to_density(named_state_bloch(tag));
}

// diag(p, 1-p) = p|0><0| + (1-p)|1><1|.
inline DensityMatrix diagonal_mixed(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("diagonal_mixed: p must lie in [0, 1]");
    return DensityMatrix(ComplexMatrix::diagonal({p, 1.0 - p}));
}

// Projector onto |ij> in basis order {|00>,|01>,|10>,|11>}.
inline DensityMatrix two_qubit_basis(int i, int j) {
    if ((i != 0 && i != 1) || (j != 0 && j != 1))
        throw std::invalid_argument("two_qubit_basis: labels must be bits");
    ComplexMatrix m(4);
    m(static_cast<std::size_t>(2 * i + j), static_cast<std::size_t>(2 * i + j)) = 1.0;
    return DensityMatrix(std::move(m));
}

// d_T = (1/2) tr |rho1 - rho2|.
inline double trace_distance(const DensityMatrix& rho1, const DensityMatrix& rho2) {
    if (rho1.dim() != rho2.dim())
        throw std::invalid_argument("trace_distance: dimension mismatch");
    const std::vector<double> ev = hermitian_eigenvalues(rho1.matrix() - rho2.matrix());
    double s = 0.0;
    for (double v : ev) s += std::abs(v);
    return 0.5 * s;
}

// ------------------------------ state spec grammar ---------------------------
//
//   0 | 1 | x+ | x- | y+ | y- | mixed | bloch:x,y,z | diag:p | basis2:ij

class StateSpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct StateSpec {
    std::string text;                           // the token as given
    DensityMatrix rho;                          // parsed state
    std::optional<BlochVector> bloch;           // present for one-qubit states
    std::optional<std::pair<int, int>> basis2;  // present for basis2:ij
};

namespace detail {

inline double parse_double_token(std::string_view s, const std::string& spec) {
    double value = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value))
        throw StateSpecError("bad state spec '" + spec + "': invalid number '" +
                             std::string(s) + "'");
    return value;
}

}  // namespace detail

inline StateSpec parse_state_spec(const std::string& spec) {
    if (spec == "0") return {spec, named_state(NamedState::zero), named_state_bloch(NamedState::zero), {}};
    if (spec == "1") return {spec, named_state(NamedState::one), named_state_bloch(NamedState::one), {}};
    if (spec == "x+") return {spec, named_state(NamedState::x_plus), named_state_bloch(NamedState::x_plus), {}};
    if (spec == "x-") return {spec, named_state(NamedState::x_minus), named_state_bloch(NamedState::x_minus), {}};
    if (spec == "y+") return {spec, named_state(NamedState::y_plus), named_state_bloch(NamedState::y_plus), {}};
    if (spec == "y-") return {spec, named_state(NamedState::y_minus), named_state_bloch(NamedState::y_minus), {}};
    if (spec == "mixed") return {spec, named_state(NamedState::max_mixed), named_state_bloch(NamedState::max_mixed), {}};

    const std::string_view sv(spec);
    if (sv.starts_with("bloch:")) {
        std::string_view rest = sv.substr(6);
        const std::size_t c1 = rest.find(',');
        const std::size_t c2 = (c1 == std::string_view::npos) ? std::string_view::npos
                                                              : rest.find(',', c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos)
            throw StateSpecError("bad state spec '" + spec + "': expected bloch:x,y,z");
        const BlochVector r{detail::parse_double_token(rest.substr(0, c1), spec),
                            detail::parse_double_token(rest.substr(c1 + 1, c2 - c1 - 1), spec),
                            detail::parse_double_token(rest.substr(c2 + 1), spec)};
        if (!is_valid_bloch(r))
            throw StateSpecError("bad state spec '" + spec + "': Bloch vector outside the unit ball");
        return {spec, bloch_to_density(r), r, {}};
    }
    if (sv.starts_with("diag:")) {
        const double p = detail::parse_double_token(sv.substr(5), spec);
        if (!(p >= 0.0 && p <= 1.0))
            throw StateSpecError("bad state spec '" + spec + "': p must lie in [0, 1]");
        return {spec, diagonal_mixed(p), BlochVector{0.0, 0.0, 2.0 * p - 1.0}, {}};
    }
    if (sv.starts_with("basis2:")) {
        std::string_view rest = sv.substr(7);
        if (rest.size() != 2 || (rest[0] != '0' && rest[0] != '1') || (rest[1] != '0' && rest[1] != '1'))
            throw StateSpecError("bad state spec '" + spec + "': expected basis2:ij with bits i, j");
        const int i = rest[0] - '0', j = rest[1] - '0';
        return {spec, two_qubit_basis(i, j), {}, std::make_pair(i, j)};
    }
    throw StateSpecError("bad state spec '" + spec + "'");
}

}  // namespace qsd
