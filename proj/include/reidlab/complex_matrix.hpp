#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace reidlab {

using Complex = std::complex<double>;

inline bool entry_is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Fixed-length complex vector. Length is set at construction; entries are
/// rejected if non-finite. A default-constructed Vector is the empty
/// sentinel (used for "no witness"); every other vector has length >= 1.
class Vector {
public:
    Vector() = default;

    explicit Vector(std::size_t n) : data_(n, Complex{0.0, 0.0}) {
        if (n == 0) throw DimensionError("Vector: length must be >= 1");
    }

    explicit Vector(std::vector<Complex> entries) : data_(std::move(entries)) {
        if (data_.empty()) throw DimensionError("Vector: length must be >= 1");
        check_finite();
    }

    Vector(std::initializer_list<Complex> entries) : Vector(std::vector<Complex>(entries)) {}

    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    Complex& operator[](std::size_t i) { return data_[i]; }
    Complex operator[](std::size_t i) const { return data_[i]; }

    const std::vector<Complex>& entries() const { return data_; }

    void check_finite() const {
        for (Complex z : data_)
            if (!entry_is_finite(z)) throw ValueError("Vector: non-finite entry");
    }

private:
    std::vector<Complex> data_;
};

/// Dense square complex matrix, row-major. All entries must be finite.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n, Complex{0.0, 0.0}) {
        if (n == 0) throw DimensionError("ComplexMatrix: dim must be >= 1");
    }

    ComplexMatrix(std::size_t n, std::vector<Complex> entries)
        : n_(n), data_(std::move(entries)) {
        if (n == 0) throw DimensionError("ComplexMatrix: dim must be >= 1");
        if (data_.size() != n * n) throw DimensionError("ComplexMatrix: entry count != n*n");
        check_finite();
    }

    /// Row-major initializer, e.g. ComplexMatrix::from_rows({{a,b},{c,d}}).
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
        std::size_t n = rows.size();
        std::vector<Complex> flat;
        flat.reserve(n * n);
        for (const auto& row : rows) {
            if (row.size() != n) throw DimensionError("ComplexMatrix: matrix must be square");
            for (Complex z : row) flat.push_back(z);
        }
        return ComplexMatrix(n, std::move(flat));
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix I(n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
        return I;
    }

    std::size_t dim() const { return n_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    Complex operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    const std::vector<Complex>& entries() const { return data_; }

    void check_finite() const {
        for (Complex z : data_)
            if (!entry_is_finite(z)) throw ValueError("ComplexMatrix: non-finite entry");
    }

private:
    std::size_t n_ = 0;
    std::vector<Complex> data_;
};

inline ComplexMatrix adjoint(const ComplexMatrix& m) {
    std::size_t n = m.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = std::conj(m(j, i));
    return r;
}

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionError("matmul: dimension mismatch");
    std::size_t n = a.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

inline Vector matvec(const ComplexMatrix& m, const Vector& x) {
    if (m.dim() != x.size()) throw DimensionError("matvec: dimension mismatch");
    std::size_t n = m.dim();
    Vector r(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex s{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) s += m(i, j) * x[j];
        r[i] = s;
    }
    return r;
}

/// <x, y> = sum_i x_i * conj(y_i): linear in the first slot, conjugate-linear
/// in the second. The convention is fixed once, here.
inline Complex inner_product(const Vector& x, const Vector& y) {
    if (x.size() != y.size()) throw DimensionError("inner_product: length mismatch");
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
    return s;
}

inline double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (Complex z : m.entries()) s += std::norm(z);
    return std::sqrt(s);
}

inline double vector_norm(const Vector& x) {
    double s = 0.0;
    for (Complex z : x.entries()) s += std::norm(z);
    return std::sqrt(s);
}

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionError("matrix add: dimension mismatch");
    ComplexMatrix r = a;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) += b(i, j);
    return r;
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionError("matrix sub: dimension mismatch");
    ComplexMatrix r = a;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) -= b(i, j);
    return r;
}

inline ComplexMatrix operator*(Complex c, const ComplexMatrix& a) {
    ComplexMatrix r = a;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) *= c;
    return r;
}

inline ComplexMatrix operator*(double c, const ComplexMatrix& a) {
    return Complex{c, 0.0} * a;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    return matmul(a, b);
}

inline Vector operator*(const ComplexMatrix& m, const Vector& x) { return matvec(m, x); }

/// (M + M*) / 2 — kills floating-point asymmetry before a Hermitian solve.
inline ComplexMatrix hermitize(const ComplexMatrix& m) {
    std::size_t n = m.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return r;
}

} // namespace reidlab
