#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "eigenmix/errors.hpp"

namespace eigenmix {

using Complex = std::complex<double>;

/// Hard cap on vector/matrix dimension. Everything here is dense,
/// desk-scale linear algebra.
inline constexpr std::size_t kMaxDim = 4096;

/// Dense complex column vector. Components are validated to be finite
/// on construction.
class Ket {
  public:
    Ket() = default;
    explicit Ket(std::size_t dim);
    explicit Ket(std::vector<Complex> components);

    static Ket basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return components_.size(); }
    const Complex& operator[](std::size_t i) const { return components_[i]; }
    Complex& operator[](std::size_t i) { return components_[i]; }

    const std::vector<Complex>& components() const { return components_; }

    double norm() const;
    bool is_normalized(double tol = 1e-12) const;
    /// Returns this / |this|. Throws ValidationError on a (near-)zero vector.
    Ket normalized() const;

  private:
    std::vector<Complex> components_;
};

/// Dense square complex matrix, row-major storage.
class OperatorMatrix {
  public:
    OperatorMatrix() = default;
    explicit OperatorMatrix(std::size_t dim);
    OperatorMatrix(std::size_t dim, std::vector<Complex> entries);

    static OperatorMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const Complex& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * dim_ + j];
    }
    Complex& operator()(std::size_t i, std::size_t j) {
        return entries_[i * dim_ + j];
    }

    const std::vector<Complex>& entries() const { return entries_; }

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

// -- Ket algebra ------------------------------------------------------------

/// <bra|ket>, conjugate-linear in the first argument.
Complex inner(const Ket& bra, const Ket& ket);

/// |ket><bra| as a dense matrix: entry (i,j) = ket_i * conj(bra_j).
OperatorMatrix outer(const Ket& ket, const Ket& bra);

Ket add(const Ket& a, const Ket& b);
Ket subtract(const Ket& a, const Ket& b);
Ket scale(Complex s, const Ket& v);

inline Ket operator+(const Ket& a, const Ket& b) { return add(a, b); }
inline Ket operator-(const Ket& a, const Ket& b) { return subtract(a, b); }
inline Ket operator*(Complex s, const Ket& v) { return scale(s, v); }
inline Ket operator*(double s, const Ket& v) { return scale(Complex(s, 0.0), v); }

// -- Matrix algebra ---------------------------------------------------------

OperatorMatrix add(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix subtract(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix scale(Complex s, const OperatorMatrix& m);
OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix adjoint(const OperatorMatrix& m);
Complex trace(const OperatorMatrix& m);
Ket apply(const OperatorMatrix& m, const Ket& v);
double frobenius_norm(const OperatorMatrix& m);

/// max_ij |M_ij - conj(M_ji)|.
double hermiticity_defect(const OperatorMatrix& m);
bool is_hermitian(const OperatorMatrix& m, double tol = 1e-12);

inline OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
    return add(a, b);
}
inline OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
    return subtract(a, b);
}
inline OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    return multiply(a, b);
}
inline OperatorMatrix operator*(Complex s, const OperatorMatrix& m) {
    return scale(s, m);
}
inline OperatorMatrix operator*(double s, const OperatorMatrix& m) {
    return scale(Complex(s, 0.0), m);
}

/// Angle between the one-dimensional subspaces spanned by two normalized
/// kets: asin(|v2 - <v1|v2> v1|), in [0, pi/2].
double principal_angle(const Ket& v1, const Ket& v2);

}  // namespace eigenmix
