// complex_matrix.hpp — dense complex linear algebra for small operators
// (dim 2..16): Hermitian spectra via cyclic Jacobi rotations, operator norms,
// commutators, tensor products. Everything is value-semantic and pure.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsd {

using Complex = std::complex<double>;

inline constexpr std::size_t kMinDim = 2;
inline constexpr std::size_t kMaxDim = 16;

// Row-major square complex matrix with the dimension fixed at construction.
class ComplexMatrix {
public:
    explicit ComplexMatrix(std::size_t dim)
        : dim_(checked_dim(dim)), entries_(dim * dim) {}

    static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }

    static ComplexMatrix identity(std::size_t dim) {
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(const std::vector<double>& d) {
        ComplexMatrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = checked_finite(d[i]);
        return m;
    }

    // Build from an explicit row list; rejects ragged shapes and non-finite entries.
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
        ComplexMatrix m(rows.size());
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != m.dim_)
                throw std::invalid_argument("from_rows: matrix must be square");
            std::size_t j = 0;
            for (const Complex& v : row) m(i, j++) = checked_finite(v);
            ++i;
        }
        return m;
    }

    std::size_t dim() const { return dim_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    const std::vector<Complex>& entries() const { return entries_; }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs) {
        require_same_dim(rhs);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& rhs) {
        require_same_dim(rhs);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
        return *this;
    }
    ComplexMatrix& operator*=(const Complex& c) {
        for (Complex& v : entries_) v *= c;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, const Complex& c) { return a *= c; }
    friend ComplexMatrix operator*(const Complex& c, ComplexMatrix a) { return a *= c; }
    friend ComplexMatrix operator-(const ComplexMatrix& a) { return a * Complex(-1.0); }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        a.require_same_dim(b);
        const std::size_t n = a.dim_;
        ComplexMatrix c(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex(0.0)) continue;
                for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

private:
    static std::size_t checked_dim(std::size_t dim) {
        if (dim < kMinDim || dim > kMaxDim)
            throw std::invalid_argument("ComplexMatrix: dimension must be in [2, 16], got " +
                                        std::to_string(dim));
        return dim;
    }
    static Complex checked_finite(const Complex& v) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("ComplexMatrix: non-finite entry");
        return v;
    }
    void require_same_dim(const ComplexMatrix& rhs) const {
        if (dim_ != rhs.dim_)
            throw std::invalid_argument("ComplexMatrix: dimension mismatch (" +
                                        std::to_string(dim_) + " vs " + std::to_string(rhs.dim_) + ")");
    }

    std::size_t dim_;
    std::vector<Complex> entries_;
};

// --------------------------- elementary operations --------------------------

inline ComplexMatrix dagger(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = std::conj(a(j, i));
    return b;
}

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

inline ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b + b * a;
}

inline Complex trace(const ComplexMatrix& a) {
    Complex t = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
    return t;
}

inline double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const Complex& v : a.entries()) s += std::norm(v);
    return std::sqrt(s);
}

inline double max_abs_entry(const ComplexMatrix& a) {
    double m = 0.0;
    for (const Complex& v : a.entries()) m = std::max(m, std::abs(v));
    return m;
}

inline bool all_finite(const ComplexMatrix& a) {
    for (const Complex& v : a.entries())
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

inline constexpr double kHermitianTol = 1e-12;

inline bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTol) {
    return max_abs_entry(a - dagger(a)) <= tol;
}

// Tensor product with index convention (i*dimB + k, j*dimB + l).
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    if (na * nb > kMaxDim)
        throw std::invalid_argument("kron: resulting dimension exceeds " + std::to_string(kMaxDim));
    ComplexMatrix c(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex(0.0)) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    c(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return c;
}

// ------------------------------ Jacobi eigensolver ---------------------------

namespace detail {

inline double offdiag_frobenius(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Zero A(p,q) with the unitary diagonalising the 2x2 pivot block; A stays
// Hermitian and V (when given) accumulates the similarity on the right.
inline void jacobi_rotate(ComplexMatrix& a, std::size_t p, std::size_t q, ComplexMatrix* v) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const Complex phase = apq / mag;
    const double tau = (aqq - app) / (2.0 * mag);
    const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                  : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    // Unitary restricted to (p,q): U(p,p)=phase*c, U(p,q)=phase*s, U(q,p)=-s, U(q,q)=c.
    const Complex upp = phase * c, upq = phase * s;
    const double uqp = -s, uqq = c;

    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {  // A <- A U
        const Complex aip = a(i, p), aiq = a(i, q);
        a(i, p) = aip * upp + aiq * uqp;
        a(i, q) = aip * upq + aiq * uqq;
    }
    for (std::size_t j = 0; j < n; ++j) {  // A <- U^dag A
        const Complex apj = a(p, j), aqj = a(q, j);
        a(p, j) = std::conj(upp) * apj + uqp * aqj;
        a(q, j) = std::conj(upq) * apj + uqq * aqj;
    }
    a(p, q) = 0.0;  // exact by construction of the rotation
    a(q, p) = 0.0;
    a(p, p) = Complex(a(p, p).real(), 0.0);
    a(q, q) = Complex(a(q, q).real(), 0.0);
    if (v) {
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vip = (*v)(i, p), viq = (*v)(i, q);
            (*v)(i, p) = vip * upp + viq * uqp;
            (*v)(i, q) = vip * upq + viq * uqq;
        }
    }
}

inline constexpr double kJacobiOffdiagTol = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;

// Cyclic Jacobi on a Hermitian matrix; ascending eigenvalues, matching
// eigenvector columns in *v when requested.
inline std::vector<double> jacobi_eigen(ComplexMatrix a, ComplexMatrix* v) {
    const std::size_t n = a.dim();
    if (v) *v = ComplexMatrix::identity(n);
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        if (offdiag_frobenius(a) < kJacobiOffdiagTol) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, p, q, v);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&a](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
    std::vector<double> values(n);
    for (std::size_t k = 0; k < n; ++k) values[k] = a(order[k], order[k]).real();
    if (v) {
        ComplexMatrix sorted(n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) sorted(i, k) = (*v)(i, order[k]);
        *v = std::move(sorted);
    }
    return values;
}

}  // namespace detail

// Ascending real eigenvalues of a Hermitian matrix (tolerance 1e-12 entrywise).
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
    if (!is_hermitian(a))
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
    ComplexMatrix h = (a + dagger(a)) * Complex(0.5);
    return detail::jacobi_eigen(std::move(h), nullptr);
}

struct HermitianEigenSystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k pairs with values[k]
};

inline HermitianEigenSystem hermitian_eigensystem(const ComplexMatrix& a) {
    if (!is_hermitian(a))
        throw std::invalid_argument("hermitian_eigensystem: matrix is not Hermitian");
    ComplexMatrix h = (a + dagger(a)) * Complex(0.5);
    HermitianEigenSystem es{{}, ComplexMatrix::identity(a.dim())};
    es.values = detail::jacobi_eigen(std::move(h), &es.vectors);
    return es;
}

// sqrt(lambda_max(A^dag A)) == largest singular value.
inline double operator_norm(const ComplexMatrix& a) {
    const std::vector<double> ev = detail::jacobi_eigen(dagger(a) * a, nullptr);
    return std::sqrt(std::max(0.0, ev.back()));
}

}  // namespace qsd
