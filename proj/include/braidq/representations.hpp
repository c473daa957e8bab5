// representations.hpp
// Unitary representations of B_2 and B_3 on qubit registers: strand i is
// qubit i, i.e. the i-th tensor factor from the left.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braidq/braid_word.hpp"
#include "braidq/matrix.hpp"

namespace braidq {

struct CommutationResidual {
    int i;
    int j;
    double residual;
};

struct BraidingResidual {
    int i;
    double residual;
};

struct RelationReport {
    std::vector<CommutationResidual> far_commutation;  // ||s_i s_j - s_j s_i||_F, |i-j| > 1
    std::vector<BraidingResidual> braiding;            // ||s_i s_i+1 s_i - s_i+1 s_i s_i+1||_F
    double max_residual = 0.0;
    double tolerance = kDefaultTol;
    bool passed = true;
};

class RepresentationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Representation {
public:
    const std::string& name() const { return name_; }
    int strands() const { return strands_; }
    std::size_t dimension() const { return std::size_t{1} << strands_; }

    // Image of sigma_i, i in 1..strands-1.
    const CMatrix& generator(int i) const { return images_.at(slot(i)); }
    const CMatrix& inverse_generator(int i) const { return inverse_images_.at(slot(i)); }
    const std::vector<CMatrix>& generators() const { return images_; }

    const std::map<std::string, Complex>& parameters() const { return parameters_; }
    const RelationReport& relations() const { return relations_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    Representation(std::string name, int strands, std::vector<CMatrix> images,
                   std::map<std::string, Complex> parameters)
        : name_(std::move(name)), strands_(strands), images_(std::move(images)), parameters_(std::move(parameters)) {
        for (const auto& m : images_) inverse_images_.push_back(dagger(m));
    }

    std::size_t slot(int i) const {
        if (i < 1 || i > strands_ - 1) throw RepresentationError("generator index " + std::to_string(i) + " out of range");
        return static_cast<std::size_t>(i - 1);
    }

    friend Representation b2_rep(double);
    friend Representation ge_rep(double);
    friend Representation jones_rep();
    friend Representation generic_rep(const CMatrix&, int);

    std::string name_;
    int strands_;
    std::vector<CMatrix> images_;
    std::vector<CMatrix> inverse_images_;
    std::map<std::string, Complex> parameters_;
    RelationReport relations_;
    std::vector<std::string> warnings_;
};

inline RelationReport verify_relations(const Representation& rep, double tol = kDefaultTol) {
    RelationReport report;
    report.tolerance = tol;
    const int n = rep.strands();
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = i + 2; j <= n - 1; ++j) {
            const auto& a = rep.generator(i);
            const auto& b = rep.generator(j);
            report.far_commutation.push_back({i, j, frobenius_distance(a * b, b * a)});
        }
    }
    for (int i = 1; i + 1 <= n - 1; ++i) {
        const auto& a = rep.generator(i);
        const auto& b = rep.generator(i + 1);
        report.braiding.push_back({i, frobenius_distance(a * b * a, b * a * b)});
    }
    for (const auto& r : report.far_commutation) report.max_residual = std::max(report.max_residual, r.residual);
    for (const auto& r : report.braiding) report.max_residual = std::max(report.max_residual, r.residual);
    report.passed = report.max_residual <= tol;
    return report;
}

namespace detail {

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

// Returns "p/q" if theta/pi lies within 1e-9 of a fraction with denominator <= 64.
inline std::optional<std::string> rational_multiple_of_pi(double theta) {
    const double x = theta / std::numbers::pi;
    for (long q = 1; q <= 64; ++q) {
        const double p = std::round(x * static_cast<double>(q));
        if (std::abs(x * static_cast<double>(q) - p) <= 1e-9 * static_cast<double>(q)) {
            return std::to_string(static_cast<long>(p)) + "/" + std::to_string(q);
        }
    }
    return std::nullopt;
}

inline void require_unitary_images(const std::vector<CMatrix>& images, const std::string& who) {
    for (std::size_t k = 0; k < images.size(); ++k) {
        if (!is_unitary(images[k], kDefaultTol)) {
            throw RepresentationError(who + ": image of generator " + std::to_string(k + 1) + " is not unitary");
        }
    }
}

// I_{2^(i-1)} (x) u (x) I_{2^(n-i-1)} with u a 4x4 acting on qubits (i, i+1).
inline CMatrix embed_pair(const CMatrix& u, int i, int strands) {
    const std::size_t left = std::size_t{1} << (i - 1);
    const std::size_t right = std::size_t{1} << (strands - i - 1);
    return kron(kron(CMatrix::identity(left), u), CMatrix::identity(right));
}

inline std::vector<std::string> theta_warnings(double theta) {
    std::vector<std::string> w;
    if (auto frac = rational_multiple_of_pi(theta)) {
        w.push_back("theta/pi = " + *frac + " is rational; the representation is not faithful (finite order)");
    }
    return w;
}

}  // namespace detail

/// (e^{i theta}/sqrt2) [[1,0,0,1],[0,1,1,0],[0,1,-1,0],[1,0,0,-1]], whose
/// square is e^{2 i theta} I. theta/pi should be irrational for a faithful
/// representation of B_2; rational multiples of pi only raise a warning.
inline Representation b2_rep(double theta) {
    const Complex e = std::polar(detail::kInvSqrt2, theta);
    CMatrix s1{{1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, -1, 0}, {1, 0, 0, -1}};
    s1 *= e;
    detail::require_unitary_images({s1}, "b2_rep");
    Representation rep("b2", 2, {s1}, {{"theta", theta}});
    rep.relations_ = verify_relations(rep, kDefaultTol);
    rep.warnings_ = detail::theta_warnings(theta);
    return rep;
}

// U = (e^{i theta}/sqrt2) [[1,0,0,-1],[0,1,-1,0],[0,1,1,0],[1,0,0,1]].
inline CMatrix ge_matrix(double theta) {
    CMatrix u{{1, 0, 0, -1}, {0, 1, -1, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}};
    u *= std::polar(detail::kInvSqrt2, theta);
    return u;
}

/// B_3 on three qubits: sigma_1 = U (x) I, sigma_2 = I (x) U.
inline Representation ge_rep(double theta) {
    const CMatrix u = ge_matrix(theta);
    const CMatrix i2 = CMatrix::identity(2);
    std::vector<CMatrix> images{kron(u, i2), kron(i2, u)};
    detail::require_unitary_images(images, "ge_rep");
    Representation rep("ge", 3, std::move(images), {{"theta", theta}});
    rep.relations_ = verify_relations(rep, kDefaultTol);
    if (!rep.relations_.passed) throw RepresentationError("ge_rep: braid relations fail");
    rep.warnings_ = detail::theta_warnings(theta);
    return rep;
}

inline Complex jones_parameter() { return std::polar(1.0, 3.0 * std::numbers::pi / 8.0); }

// h_1 = sqrt2 * diag(1,1,1,1,0,0,0,0): sqrt2 times the projector onto qubit 1 = |0>.
inline CMatrix jones_h1() {
    CMatrix h(8, 8);
    for (std::size_t k = 0; k < 4; ++k) h(k, k) = std::numbers::sqrt2;
    return h;
}

// h_2 = (1/sqrt2)(I - J) with J the 8x8 anti-diagonal exchange matrix.
inline CMatrix jones_h2() {
    CMatrix h(8, 8);
    for (std::size_t k = 0; k < 8; ++k) {
        h(k, k) += detail::kInvSqrt2;
        h(k, 7 - k) -= detail::kInvSqrt2;
    }
    return h;
}

/// Jones representation sigma_i = A h_i + A^{-1} I with A = exp(3 pi i / 8).
/// The stated inverse A^{-1} h_i + A I must agree with the adjoint; a mismatch
/// means the h matrices were mis-entered.
inline Representation jones_rep() {
    const Complex a = jones_parameter();
    const CMatrix id = CMatrix::identity(8);
    const std::vector<CMatrix> hs{jones_h1(), jones_h2()};

    std::vector<CMatrix> images;
    for (const auto& h : hs) images.push_back(a * h + (1.0 / a) * id);
    detail::require_unitary_images(images, "jones_rep");

    Representation rep("jones", 3, std::move(images), {{"A", a}});
    for (std::size_t k = 0; k < hs.size(); ++k) {
        const CMatrix explicit_inverse = (1.0 / a) * hs[k] + a * id;
        if (frobenius_distance(explicit_inverse, rep.inverse_images_[k]) > 1e-12 ||
            frobenius_distance(rep.images_[k] * explicit_inverse, id) > 1e-12) {
            throw RepresentationError("jones_rep: A^-1 h + A I is not the inverse of A h + A^-1 I");
        }
    }
    rep.relations_ = verify_relations(rep, kDefaultTol);
    if (!rep.relations_.passed) throw RepresentationError("jones_rep: braid relations fail");
    return rep;
}

/// sigma_i = I (x) ... (x) U (x) ... (x) I with U on qubits (i, i+1). Far
/// commutation holds by construction; the braiding relation depends on U and
/// is recorded in relations() without rejecting the representation.
inline Representation generic_rep(const CMatrix& u, int strands) {
    if (strands < 2 || strands > 8) throw RepresentationError("generic_rep: strands must be in [2, 8]");
    if (u.rows() != 4 || u.cols() != 4) throw RepresentationError("generic_rep: U must be 4x4");
    if (!is_unitary(u, kDefaultTol)) throw RepresentationError("generic_rep: U is not unitary");
    std::vector<CMatrix> images;
    for (int i = 1; i <= strands - 1; ++i) images.push_back(detail::embed_pair(u, i, strands));
    Representation rep("generic", strands, std::move(images), {});
    rep.relations_ = verify_relations(rep, kDefaultTol);
    if (!rep.relations_.passed) {
        rep.warnings_.push_back("braiding relation not satisfied (max residual " +
                                std::to_string(rep.relations_.max_residual) + ")");
    }
    return rep;
}

inline Representation representation_by_name(const std::string& name, double theta = 1.0) {
    if (name == "b2") return b2_rep(theta);
    if (name == "ge") return ge_rep(theta);
    if (name == "jones") return jones_rep();
    throw RepresentationError("unknown representation '" + name + "' (expected b2, ge or jones)");
}

/// Matrix of a braid word: the product of letter images in word order,
/// M = M_1 M_2 ... M_k, so "s1 s2" evaluates to sigma_1 sigma_2 and acts on a
/// ket as sigma_1 sigma_2 |psi>. Inverse letters use the adjoint image.
inline CMatrix evaluate(const Representation& rep, const BraidWord& w) {
    if (w.strands() != rep.strands()) {
        throw RepresentationError("evaluate: word has " + std::to_string(w.strands()) + " strands, representation has " +
                                  std::to_string(rep.strands()));
    }
    CMatrix m = CMatrix::identity(rep.dimension());
    for (const auto& l : w.letters()) {
        m = m * (l.sign > 0 ? rep.generator(l.index) : rep.inverse_generator(l.index));
    }
    return m;
}

struct ClosureResult {
    bool closes = false;
    std::optional<double> phase;
};

// The closure condition: the evaluated word equals I up to a global phase.
inline ClosureResult closure_check(const Representation& rep, const BraidWord& w, double tol = kDefaultTol) {
    const CMatrix m = evaluate(rep, w);
    auto phase = equal_up_to_phase(m, CMatrix::identity(rep.dimension()), tol);
    return {phase.has_value(), phase};
}

}  // namespace braidq
