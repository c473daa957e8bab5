// entanglement.hpp
// Entanglement measures for two- and three-qubit states.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "braidq/matrix.hpp"
#include "braidq/quantum_state.hpp"

namespace braidq {

inline constexpr double kZeroEigenvalue = 1e-14;

// 2 |a00 a11 - a01 a10|
inline double concurrence_pure2(const PureState& s) {
    if (s.qubits() != 2) throw StateError("concurrence_pure2: expected 2 qubits");
    return 2.0 * std::abs(s[0] * s[3] - s[1] * s[2]);
}

namespace detail {

inline CMatrix yy() {
    const Complex i{0.0, 1.0};
    const CMatrix y{{0.0, -i}, {i, 0.0}};
    return kron(y, y);
}

}  // namespace detail

/// Wootters concurrence max(0, l1 - l2 - l3 - l4), where l_k^2 are the
/// eigenvalues of rho (YY) conj(rho) (YY). They are obtained from the
/// Hermitian matrix sqrt(rho) (YY) conj(rho) (YY) sqrt(rho), which has the
/// same spectrum. Eigenvalues at or below 1e-14 are taken as exact zeros so
/// the rank deficiency of reduced pure states does not leak sqrt(noise).
inline double concurrence_mixed2(const DensityMatrix& d) {
    if (d.qubits() != 2) throw StateError("concurrence_mixed2: expected 2 qubits");
    const CMatrix& rho = d.matrix();
    const CMatrix sqrt_rho = hermitian_function(rho, [](double x) { return x > kZeroEigenvalue ? std::sqrt(x) : 0.0; });
    const CMatrix yy = detail::yy();
    CMatrix r = sqrt_rho * yy * conjugate(rho) * yy * sqrt_rho;
    r = 0.5 * (r + dagger(r));
    auto ev = hermitian_eigenvalues(r, 1e-8);
    std::array<double, 4> l{};
    for (std::size_t k = 0; k < 4; ++k) l[k] = ev[k] > kZeroEigenvalue ? std::sqrt(ev[k]) : 0.0;
    return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

// -sum lambda log2 lambda, eigenvalues at or below 1e-14 count as zero.
inline double vn_entropy(const DensityMatrix& d) {
    double h = 0.0;
    for (double l : hermitian_eigenvalues(d.matrix())) {
        if (l > kZeroEigenvalue) h -= l * std::log2(l);
    }
    return std::max(h, 0.0);
}

/// Descending Schmidt coefficients of the bipartition (left | rest). Squares
/// at or below 1e-14 are dropped, so a product state yields [1].
inline std::vector<double> schmidt_coefficients(const PureState& s, std::vector<int> left) {
    const int n = s.qubits();
    std::sort(left.begin(), left.end());
    if (left.empty() || static_cast<int>(left.size()) >= n) {
        throw StateError("schmidt_coefficients: left side must be a proper non-empty subset");
    }
    if (std::adjacent_find(left.begin(), left.end()) != left.end() || left.front() < 1 || left.back() > n) {
        throw StateError("schmidt_coefficients: invalid qubit set");
    }
    std::vector<int> right;
    for (int q = 1; q <= n; ++q)
        if (!std::binary_search(left.begin(), left.end(), q)) right.push_back(q);

    auto gather = [&](std::size_t i, const std::vector<int>& qs) {
        std::size_t r = 0;
        for (int q : qs) r = (r << 1) | ((i >> static_cast<std::size_t>(n - q)) & 1U);
        return r;
    };
    const std::size_t dl = std::size_t{1} << left.size();
    const std::size_t dr = std::size_t{1} << right.size();
    CMatrix m(dl, dr);
    for (std::size_t i = 0; i < s.dimension(); ++i) m(gather(i, left), gather(i, right)) = s[i];

    std::vector<double> out;
    for (double l : hermitian_eigenvalues(m * dagger(m))) {
        if (l > kZeroEigenvalue) out.push_back(std::sqrt(l));
    }
    return out;
}

/// Cayley hyperdeterminant of the 2x2x2 amplitude array a[ijk], as the
/// explicit degree-4 polynomial.
inline Complex cayley_hyperdeterminant(const PureState& s) {
    if (s.qubits() != 3) throw StateError("cayley_hyperdeterminant: expected 3 qubits");
    const auto& a = s.amplitudes();
    const Complex a000 = a[0], a001 = a[1], a010 = a[2], a011 = a[3];
    const Complex a100 = a[4], a101 = a[5], a110 = a[6], a111 = a[7];

    const Complex squares = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 + a010 * a010 * a101 * a101 +
                            a100 * a100 * a011 * a011;
    const Complex cross = a000 * a111 * a011 * a100 + a000 * a111 * a101 * a010 + a000 * a111 * a110 * a001 +
                          a011 * a100 * a101 * a010 + a011 * a100 * a110 * a001 + a101 * a010 * a110 * a001;
    const Complex quartic = a000 * a110 * a101 * a011 + a111 * a001 * a010 * a100;
    return squares - 2.0 * cross + 4.0 * quartic;
}

// 4 |Hdet|, in [0, 1] for normalised states.
inline double three_tangle(const PureState& s) {
    if (s.qubits() != 3) throw StateError("three_tangle: expected 3 qubits");
    return 4.0 * std::abs(cayley_hyperdeterminant(s));
}

struct ProfileEntry {
    int qubit;
    int outcome;
    double probability;
    std::optional<double> concurrence;  // absent for impossible outcomes
};

// Entries ordered by qubit, then outcome: (1,0), (1,1), (2,0), ... (3,1).
struct ResidualProfile {
    std::vector<ProfileEntry> entries;

    const ProfileEntry& at(int qubit, int outcome) const {
        return entries.at(static_cast<std::size_t>(2 * (qubit - 1) + outcome));
    }
};

/// Measures each qubit in the computational basis and records how entangled
/// the remaining pair is. Zero-probability branches are recorded, not thrown.
inline ResidualProfile residual_profile(const PureState& s) {
    if (s.qubits() != 3) throw StateError("residual_profile: expected 3 qubits");
    ResidualProfile profile;
    for (int k = 1; k <= 3; ++k) {
        for (int b = 0; b <= 1; ++b) {
            try {
                const auto m = measure_qubit(s, k, b);
                profile.entries.push_back({k, b, m.probability, concurrence_pure2(m.post_state)});
            } catch (const ImpossibleOutcome&) {
                profile.entries.push_back({k, b, 0.0, std::nullopt});
            }
        }
    }
    return profile;
}

// Single-qubit entropies, pairwise concurrences and the three-tangle of a 3-qubit state.
struct InvariantTable {
    std::array<double, 3> entropies{};     // S(rho_1), S(rho_2), S(rho_3)
    std::array<double, 3> concurrences{};  // C(1,2), C(1,3), C(2,3)
    double three_tangle = 0.0;
};

inline InvariantTable invariant_table(const PureState& s) {
    if (s.qubits() != 3) throw StateError("invariant_table: expected 3 qubits");
    const DensityMatrix rho = density(s);
    InvariantTable t;
    for (int k = 1; k <= 3; ++k) t.entropies[static_cast<std::size_t>(k - 1)] = vn_entropy(partial_trace(rho, {k}));
    t.concurrences[0] = concurrence_mixed2(partial_trace(rho, {1, 2}));
    t.concurrences[1] = concurrence_mixed2(partial_trace(rho, {1, 3}));
    t.concurrences[2] = concurrence_mixed2(partial_trace(rho, {2, 3}));
    t.three_tangle = three_tangle(s);
    return t;
}

inline double max_difference(const InvariantTable& a, const InvariantTable& b) {
    double d = std::abs(a.three_tangle - b.three_tangle);
    for (std::size_t k = 0; k < 3; ++k) {
        d = std::max(d, std::abs(a.entropies[k] - b.entropies[k]));
        d = std::max(d, std::abs(a.concurrences[k] - b.concurrences[k]));
    }
    return d;
}

}  // namespace braidq
