#include "eigenmix/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace eigenmix {

namespace {

void check_dim(std::size_t dim, const char* what) {
    if (dim == 0) {
        throw ValidationError(std::string(what) + ": dimension must be >= 1");
    }
    if (dim > kMaxDim) {
        throw ValidationError(std::string(what) + ": dimension " +
                              std::to_string(dim) + " exceeds cap " +
                              std::to_string(kMaxDim));
    }
}

void check_finite(const std::vector<Complex>& values, const char* what) {
    for (const Complex& z : values) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ValidationError(std::string(what) +
                                  ": components must be finite");
        }
    }
}

void check_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw ValidationError(std::string(what) + ": dimension mismatch (" +
                              std::to_string(a) + " vs " + std::to_string(b) +
                              ")");
    }
}

}  // namespace

Ket::Ket(std::size_t dim) : components_(dim, Complex(0.0, 0.0)) {
    check_dim(dim, "Ket");
}

Ket::Ket(std::vector<Complex> components) : components_(std::move(components)) {
    check_dim(components_.size(), "Ket");
    check_finite(components_, "Ket");
}

Ket Ket::basis(std::size_t dim, std::size_t index) {
    check_dim(dim, "Ket::basis");
    if (index >= dim) {
        throw ValidationError("Ket::basis: index out of range");
    }
    Ket v(dim);
    v[index] = Complex(1.0, 0.0);
    return v;
}

double Ket::norm() const {
    double s = 0.0;
    for (const Complex& z : components_) s += std::norm(z);
    return std::sqrt(s);
}

bool Ket::is_normalized(double tol) const {
    return std::abs(norm() - 1.0) <= tol;
}

Ket Ket::normalized() const {
    double n = norm();
    if (n < 1e-150) {
        throw ValidationError("Ket::normalized: zero vector");
    }
    Ket out = *this;
    for (Complex& z : out.components_) z /= n;
    return out;
}

OperatorMatrix::OperatorMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, Complex(0.0, 0.0)) {
    check_dim(dim, "OperatorMatrix");
}

OperatorMatrix::OperatorMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    check_dim(dim, "OperatorMatrix");
    if (entries_.size() != dim * dim) {
        throw ValidationError("OperatorMatrix: entry count does not match dim^2");
    }
    check_finite(entries_, "OperatorMatrix");
}

OperatorMatrix OperatorMatrix::identity(std::size_t dim) {
    OperatorMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = Complex(1.0, 0.0);
    return m;
}

Complex inner(const Ket& bra, const Ket& ket) {
    check_same_dim(bra.dim(), ket.dim(), "inner");
    Complex s(0.0, 0.0);
    for (std::size_t i = 0; i < bra.dim(); ++i) {
        s += std::conj(bra[i]) * ket[i];
    }
    return s;
}

OperatorMatrix outer(const Ket& ket, const Ket& bra) {
    check_same_dim(ket.dim(), bra.dim(), "outer");
    OperatorMatrix m(ket.dim());
    for (std::size_t i = 0; i < ket.dim(); ++i) {
        for (std::size_t j = 0; j < bra.dim(); ++j) {
            m(i, j) = ket[i] * std::conj(bra[j]);
        }
    }
    return m;
}

Ket add(const Ket& a, const Ket& b) {
    check_same_dim(a.dim(), b.dim(), "add");
    Ket out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
    return out;
}

Ket subtract(const Ket& a, const Ket& b) {
    check_same_dim(a.dim(), b.dim(), "subtract");
    Ket out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] - b[i];
    return out;
}

Ket scale(Complex s, const Ket& v) {
    Ket out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = s * v[i];
    return out;
}

OperatorMatrix add(const OperatorMatrix& a, const OperatorMatrix& b) {
    check_same_dim(a.dim(), b.dim(), "add");
    OperatorMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim() * a.dim(); ++i) {
        out(i / a.dim(), i % a.dim()) = a.entries()[i] + b.entries()[i];
    }
    return out;
}

OperatorMatrix subtract(const OperatorMatrix& a, const OperatorMatrix& b) {
    check_same_dim(a.dim(), b.dim(), "subtract");
    OperatorMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim() * a.dim(); ++i) {
        out(i / a.dim(), i % a.dim()) = a.entries()[i] - b.entries()[i];
    }
    return out;
}

OperatorMatrix scale(Complex s, const OperatorMatrix& m) {
    OperatorMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = s * m(i, j);
    }
    return out;
}

OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b) {
    check_same_dim(a.dim(), b.dim(), "multiply");
    const std::size_t n = a.dim();
    OperatorMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

OperatorMatrix adjoint(const OperatorMatrix& m) {
    OperatorMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            out(i, j) = std::conj(m(j, i));
        }
    }
    return out;
}

Complex trace(const OperatorMatrix& m) {
    Complex s(0.0, 0.0);
    for (std::size_t i = 0; i < m.dim(); ++i) s += m(i, i);
    return s;
}

Ket apply(const OperatorMatrix& m, const Ket& v) {
    check_same_dim(m.dim(), v.dim(), "apply");
    Ket out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Complex s(0.0, 0.0);
        for (std::size_t j = 0; j < m.dim(); ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

double frobenius_norm(const OperatorMatrix& m) {
    double s = 0.0;
    for (const Complex& z : m.entries()) s += std::norm(z);
    return std::sqrt(s);
}

double hermiticity_defect(const OperatorMatrix& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = i; j < m.dim(); ++j) {
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return worst;
}

bool is_hermitian(const OperatorMatrix& m, double tol) {
    return hermiticity_defect(m) <= tol;
}

double principal_angle(const Ket& v1, const Ket& v2) {
    Ket residual = subtract(v2, scale(inner(v1, v2), v1));
    double s = std::min(1.0, residual.norm());
    return std::asin(s);
}

}  // namespace eigenmix
