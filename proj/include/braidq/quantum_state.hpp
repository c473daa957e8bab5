// quantum_state.hpp
// Pure and mixed states of small qubit registers.
//
// Qubit 1 is the leftmost symbol of a ket and the most significant bit of the
// amplitude index: |q1 q2 ... qn> lives at index sum_k q_k 2^(n-k).

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidq/matrix.hpp"

namespace braidq {

inline constexpr int kMaxQubits = 8;
inline constexpr double kImpossibleOutcome = 1e-12;

class StateError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The requested measurement branch has (numerically) zero probability.
class ImpossibleOutcome : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class PureState {
public:
    /// Requires 2^qubits amplitudes with unit norm to within tol.
    PureState(int qubits, CVector amplitudes, double tol = kDefaultTol)
        : qubits_(qubits), amplitudes_(std::move(amplitudes)) {
        if (qubits < 1 || qubits > kMaxQubits) throw StateError("PureState: qubit count must be in [1, 8]");
        if (amplitudes_.size() != (std::size_t{1} << qubits)) {
            throw StateError("PureState: expected " + std::to_string(std::size_t{1} << qubits) + " amplitudes, got " +
                             std::to_string(amplitudes_.size()));
        }
        for (const auto& a : amplitudes_) {
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) throw StateError("PureState: non-finite amplitude");
        }
        const double norm = vector_norm(amplitudes_);
        if (std::abs(norm - 1.0) > tol) {
            throw StateError("PureState: amplitudes are not normalised (norm " + std::to_string(norm) + ")");
        }
    }

    // Scales arbitrary non-zero amplitudes to unit norm.
    static PureState normalized(int qubits, CVector amplitudes) {
        const double norm = vector_norm(amplitudes);
        if (norm == 0.0) throw StateError("PureState: zero vector");
        for (auto& a : amplitudes) a /= norm;
        return PureState(qubits, std::move(amplitudes));
    }

    int qubits() const { return qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    const CVector& amplitudes() const { return amplitudes_; }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

private:
    int qubits_;
    CVector amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite operator on a qubit register.
/// Construction checks all three properties to within tol.
class DensityMatrix {
public:
    DensityMatrix(int qubits, CMatrix matrix, double tol = kDefaultTol) : qubits_(qubits), matrix_(std::move(matrix)) {
        if (qubits < 1 || qubits > kMaxQubits) throw StateError("DensityMatrix: qubit count must be in [1, 8]");
        const std::size_t dim = std::size_t{1} << qubits;
        if (matrix_.rows() != dim || matrix_.cols() != dim) throw StateError("DensityMatrix: wrong dimension");
        if (!is_hermitian(matrix_, tol)) throw StateError("DensityMatrix: not Hermitian");
        if (std::abs(trace(matrix_) - Complex{1.0}) > tol) throw StateError("DensityMatrix: trace is not 1");
        const auto ev = hermitian_eigenvalues(matrix_, tol);
        if (ev.back() < -tol) throw StateError("DensityMatrix: negative eigenvalue " + std::to_string(ev.back()));
    }

    int qubits() const { return qubits_; }
    const CMatrix& matrix() const { return matrix_; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

private:
    int qubits_;
    CMatrix matrix_;
};

struct MeasurementOutcome {
    double probability;
    PureState post_state;  // n-1 qubits, measured qubit removed
};

namespace detail {

// Bit of qubit k (1-based) within an index over n qubits.
inline std::size_t qubit_shift(int k, int n) { return static_cast<std::size_t>(n - k); }

}  // namespace detail

inline PureState basis_state(std::string_view bits) {
    if (bits.empty()) throw StateError("basis_state: empty bit string");
    if (bits.size() > static_cast<std::size_t>(kMaxQubits)) throw StateError("basis_state: more than 8 qubits");
    std::size_t index = 0;
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] != '0' && bits[k] != '1') {
            throw StateError("basis_state: invalid character '" + std::string(1, bits[k]) + "' at position " +
                             std::to_string(k));
        }
        index = (index << 1) | static_cast<std::size_t>(bits[k] - '0');
    }
    const int n = static_cast<int>(bits.size());
    CVector amps(std::size_t{1} << n);
    amps[index] = 1.0;
    return PureState(n, std::move(amps));
}

/// "ghz" = (|000> + |111>)/sqrt2, "phi" = (|000> + |011> + |101> + |110>)/2,
/// "bell" = (|00> + |11>)/sqrt2, "w" = (|001> + |010> + |100>)/sqrt3.
inline PureState named_state(std::string_view name) {
    const double r2 = 1.0 / std::numbers::sqrt2;
    if (name == "ghz") {
        CVector a(8);
        a[0] = a[7] = r2;
        return PureState(3, a);
    }
    if (name == "phi") {
        CVector a(8);
        a[0] = a[3] = a[5] = a[6] = 0.5;
        return PureState(3, a);
    }
    if (name == "bell") {
        CVector a(4);
        a[0] = a[3] = r2;
        return PureState(2, a);
    }
    if (name == "w") {
        CVector a(8);
        a[1] = a[2] = a[4] = 1.0 / std::sqrt(3.0);
        return PureState(3, a);
    }
    throw StateError("named_state: unknown state '" + std::string(name) + "'");
}

/// M|psi>. Drift in the norm up to 1e-8 is renormalised away; anything larger
/// means M was not unitary and is an error.
inline PureState apply(const CMatrix& m, const PureState& s) {
    if (m.rows() != s.dimension() || m.cols() != s.dimension()) {
        throw StateError("apply: operator is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         ", state has dimension " + std::to_string(s.dimension()));
    }
    CVector out = matvec(m, s.amplitudes());
    const double norm = vector_norm(out);
    if (std::abs(norm - 1.0) > 1e-8) throw StateError("apply: operator changed the norm to " + std::to_string(norm));
    for (auto& a : out) a /= norm;
    return PureState(s.qubits(), std::move(out));
}

// <a|b>
inline Complex overlap(const PureState& a, const PureState& b) {
    if (a.qubits() != b.qubits()) throw StateError("overlap: qubit counts differ");
    return inner_product(a.amplitudes(), b.amplitudes());
}

/// Projects qubit k (1-based) onto |outcome> and drops it from the register.
inline MeasurementOutcome measure_qubit(const PureState& s, int k, int outcome) {
    const int n = s.qubits();
    if (n < 2) throw StateError("measure_qubit: need at least 2 qubits");
    if (k < 1 || k > n) throw StateError("measure_qubit: qubit index out of range");
    if (outcome != 0 && outcome != 1) throw StateError("measure_qubit: outcome must be 0 or 1");

    const std::size_t shift = detail::qubit_shift(k, n);
    const std::size_t low_mask = (std::size_t{1} << shift) - 1;
    CVector branch(std::size_t{1} << (n - 1));
    double p = 0.0;
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        if (((i >> shift) & 1U) != static_cast<std::size_t>(outcome)) continue;
        const std::size_t reduced = ((i >> (shift + 1)) << shift) | (i & low_mask);
        branch[reduced] = s[i];
        p += std::norm(s[i]);
    }
    if (p < kImpossibleOutcome) {
        throw ImpossibleOutcome("measure_qubit: outcome " + std::to_string(outcome) + " on qubit " + std::to_string(k) +
                                " has zero probability");
    }
    p = std::clamp(p, 0.0, 1.0);
    return {p, PureState::normalized(n - 1, std::move(branch))};
}

inline DensityMatrix density(const PureState& s) {
    const std::size_t d = s.dimension();
    CMatrix rho(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) rho(i, j) = s[i] * std::conj(s[j]);
    return DensityMatrix(s.qubits(), std::move(rho));
}

/// Reduced state on the kept qubits (1-based, any order; the result orders
/// them ascending).
inline DensityMatrix partial_trace(const DensityMatrix& d, std::vector<int> keep) {
    const int n = d.qubits();
    if (keep.empty()) throw StateError("partial_trace: keep set is empty");
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) throw StateError("partial_trace: duplicate qubit");
    if (keep.front() < 1 || keep.back() > n) throw StateError("partial_trace: qubit index out of range");

    const int m = static_cast<int>(keep.size());
    std::size_t kept_mask = 0;
    for (int q : keep) kept_mask |= std::size_t{1} << detail::qubit_shift(q, n);

    auto reduced_index = [&](std::size_t i) {
        std::size_t r = 0;
        for (int q : keep) r = (r << 1) | ((i >> detail::qubit_shift(q, n)) & 1U);
        return r;
    };

    const std::size_t dim = std::size_t{1} << n;
    CMatrix out(std::size_t{1} << m, std::size_t{1} << m);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if ((i & ~kept_mask) != (j & ~kept_mask)) continue;
            out(reduced_index(i), reduced_index(j)) += d(i, j);
        }
    }
    return DensityMatrix(m, std::move(out));
}

/// (f_1 (x) ... (x) f_n)|psi> for single-qubit unitaries f_k.
inline PureState apply_local(const PureState& s, const std::vector<CMatrix>& factors) {
    if (factors.size() != static_cast<std::size_t>(s.qubits())) {
        throw StateError("apply_local: expected " + std::to_string(s.qubits()) + " factors, got " +
                         std::to_string(factors.size()));
    }
    CMatrix v = CMatrix::identity(1);
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const auto& f = factors[k];
        if (f.rows() != 2 || f.cols() != 2) throw StateError("apply_local: factor " + std::to_string(k + 1) + " is not 2x2");
        if (!is_unitary(f, kDefaultTol)) throw StateError("apply_local: factor " + std::to_string(k + 1) + " is not unitary");
        v = kron(v, f);
    }
    return apply(v, s);
}

// v = (1/sqrt2) [[1, 1], [-1, 1]], the single-qubit factor relating GHZ and phi.
inline CMatrix lu_factor_v() {
    const double r2 = 1.0 / std::numbers::sqrt2;
    return CMatrix{{r2, r2}, {-r2, r2}};
}

// Haar-distributed 2x2 unitary: e^{i a} [[u, -conj(w)], [w, conj(u)]] with (u, w) a random unit vector.
template <typename Rng>
CMatrix random_unitary2(Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    Complex u{g(rng), g(rng)};
    Complex w{g(rng), g(rng)};
    const double norm = std::sqrt(std::norm(u) + std::norm(w));
    u /= norm;
    w /= norm;
    const Complex phase = std::polar(1.0, angle(rng));
    return CMatrix{{phase * u, -phase * std::conj(w)}, {phase * w, phase * std::conj(u)}};
}

// Gaussian amplitudes, normalised: uniform on the unit sphere of C^(2^n).
template <typename Rng>
PureState random_state(int qubits, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CVector a(std::size_t{1} << qubits);
    for (auto& x : a) x = {g(rng), g(rng)};
    return PureState::normalized(qubits, std::move(a));
}

}  // namespace braidq
