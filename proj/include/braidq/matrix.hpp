// matrix.hpp
// Dense complex matrices and vectors for qubit registers of up to 8 qubits
// (256 x 256). Row-major storage, value semantics, no sparse paths.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braidq {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

inline constexpr double kDefaultTol = 1e-10;

class CMatrix {
public:
    CMatrix() = default;

    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0) {
            throw std::invalid_argument("CMatrix: dimensions must be positive");
        }
    }

    CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (rows == 0 || cols == 0) {
            throw std::invalid_argument("CMatrix: dimensions must be positive");
        }
        if (data_.size() != rows * cols) {
            throw std::invalid_argument("CMatrix: entry count does not match rows*cols");
        }
    }

    // Nested initializer, one inner list per row.
    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        if (rows_ == 0 || cols_ == 0) {
            throw std::invalid_argument("CMatrix: dimensions must be positive");
        }
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) {
                throw std::invalid_argument("CMatrix: ragged initializer");
            }
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static CMatrix zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }

    static CMatrix diagonal(const std::vector<Complex>& d) {
        CMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const std::vector<Complex>& data() const { return data_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    CMatrix& operator+=(const CMatrix& o) {
        require_same_shape(o, "operator+=");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    CMatrix& operator-=(const CMatrix& o) {
        require_same_shape(o, "operator-=");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    CMatrix& operator*=(Complex s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
    friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }

    bool same_shape(const CMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

private:
    void require_same_shape(const CMatrix& o, const char* what) const {
        if (!same_shape(o)) {
            throw std::invalid_argument(std::string("CMatrix::") + what + ": shape mismatch");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

inline CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matmul: inner dimensions differ (" + std::to_string(a.cols()) +
                                    " vs " + std::to_string(b.rows()) + ")");
    }
    CMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

inline CMatrix operator*(const CMatrix& a, const CMatrix& b) { return matmul(a, b); }

inline CVector matvec(const CMatrix& a, const CVector& x) {
    if (a.cols() != x.size()) {
        throw std::invalid_argument("matvec: dimension mismatch");
    }
    CVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
        out[i] = acc;
    }
    return out;
}

// (A (x) B)[i*rB + k, j*cB + l] = A[i,j] * B[k,l]
inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

inline CMatrix dagger(const CMatrix& a) {
    CMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

inline CMatrix conjugate(const CMatrix& a) {
    CMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = std::conj(a(i, j));
    return out;
}

inline Complex trace(const CMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("trace: non-square matrix");
    Complex t{};
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

inline double frobenius_norm(const CMatrix& a) {
    double s = 0.0;
    for (const auto& x : a.data()) s += std::norm(x);
    return std::sqrt(s);
}

inline double frobenius_distance(const CMatrix& a, const CMatrix& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("frobenius_distance: shape mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) s += std::norm(a.data()[i] - b.data()[i]);
    return std::sqrt(s);
}

inline double vector_norm(const CVector& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

// <a|b>, conjugating the left argument.
inline Complex inner_product(const CVector& a, const CVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("inner_product: dimension mismatch");
    Complex acc{};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

inline bool is_unitary(const CMatrix& a, double tol = kDefaultTol) {
    if (!a.is_square()) throw std::invalid_argument("is_unitary: non-square matrix");
    return frobenius_distance(a * dagger(a), CMatrix::identity(a.rows())) <= tol;
}

inline bool is_hermitian(const CMatrix& a, double tol = kDefaultTol) {
    if (!a.is_square()) return false;
    return frobenius_distance(a, dagger(a)) <= tol;
}

// Maps an angle into (-pi, pi].
inline double wrap_angle(double phi) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    phi = std::remainder(phi, two_pi);
    if (phi <= -std::numbers::pi) phi += two_pi;
    return phi;
}

/// Finds phi with ||A - e^{i phi} B||_F <= tol. The phase is taken from
/// arg(trace(B^dagger A)); when that overlap vanishes relative to the norms the
/// ratio A[k]/B[k] at the largest-magnitude entry of B is used instead.
inline std::optional<double> equal_up_to_phase(const CMatrix& a, const CMatrix& b,
                                               double tol = kDefaultTol) {
    if (!a.same_shape(b)) throw std::invalid_argument("equal_up_to_phase: shape mismatch");
    const double nb = frobenius_norm(b);
    if (nb == 0.0) throw std::invalid_argument("equal_up_to_phase: reference matrix is zero");

    Complex overlap{};
    for (std::size_t i = 0; i < a.data().size(); ++i) overlap += std::conj(b.data()[i]) * a.data()[i];

    double phi = 0.0;
    if (std::abs(overlap) > 1e-12 * nb * std::max(frobenius_norm(a), 1e-300)) {
        phi = std::arg(overlap);
    } else {
        const auto& bd = b.data();
        const auto it = std::max_element(bd.begin(), bd.end(), [](const Complex& x, const Complex& y) {
            return std::abs(x) < std::abs(y);
        });
        const auto k = static_cast<std::size_t>(it - bd.begin());
        phi = std::arg(a.data()[k] / bd[k]);
    }
    if (frobenius_distance(a, std::polar(1.0, phi) * b) <= tol) return wrap_angle(phi);
    return std::nullopt;
}

struct HermitianEigensystem {
    std::vector<double> values;  // descending
    CMatrix vectors;             // column j is the eigenvector of values[j]
};

/// Cyclic Jacobi diagonalisation of a Hermitian matrix. Each rotation first
/// removes the phase of the pivot A[p,q] with a diagonal unitary, then applies
/// the real symmetric Jacobi rotation. Sweeps stop once the off-diagonal mass
/// drops below machine precision relative to the Frobenius norm.
inline HermitianEigensystem hermitian_eigensystem(const CMatrix& input, double tol = kDefaultTol) {
    if (!input.is_square()) throw std::invalid_argument("hermitian_eigensystem: non-square matrix");
    if (input.rows() > 256) throw std::invalid_argument("hermitian_eigensystem: matrix larger than 256x256");
    if (!is_hermitian(input, tol)) throw std::invalid_argument("hermitian_eigensystem: matrix is not Hermitian");

    const std::size_t n = input.rows();
    CMatrix a = 0.5 * (input + dagger(input));
    CMatrix v = CMatrix::identity(n);

    const double scale = std::max(frobenius_norm(a), 1e-300);
    auto off_diagonal = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += std::norm(a(i, j));
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < 100 && off_diagonal() > 1e-15 * scale; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r <= 1e-300 || r < 1e-18 * scale) continue;
                const Complex phase = a(p, q) / r;  // e^{i phi}

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * r);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // J = D R with D = diag(1, e^{-i phi}) on (p, q).
                const Complex jpp = c;
                const Complex jpq = s;
                const Complex jqp = -s * std::conj(phase);
                const Complex jqq = c * std::conj(phase);

                // A <- A J
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                }
                // A <- J^dagger A
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                // V <- V J
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * jpp + vkq * jqp;
                    v(k, q) = vkp * jpq + vkq * jqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });

    HermitianEigensystem out{std::vector<double>(n), CMatrix(n, n)};
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]).real();
        for (std::size_t k = 0; k < n; ++k) out.vectors(k, j) = v(k, order[j]);
    }
    return out;
}

inline std::vector<double> hermitian_eigenvalues(const CMatrix& a, double tol = kDefaultTol) {
    return hermitian_eigensystem(a, tol).values;
}

// Applies f to the spectrum of a Hermitian matrix: Q f(L) Q^dagger.
template <typename F>
CMatrix hermitian_function(const CMatrix& a, F&& f, double tol = kDefaultTol) {
    const auto es = hermitian_eigensystem(a, tol);
    const std::size_t n = a.rows();
    CMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double fk = f(es.values[k]);
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vik = es.vectors(i, k) * fk;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(es.vectors(j, k));
        }
    }
    return out;
}

}  // namespace braidq
