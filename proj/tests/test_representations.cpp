#include "braidq/representations.hpp"

#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "test_util.hpp"

using namespace braidq;
using braidq::testing::MatrixNear;

namespace {

const double kSqrt2 = std::numbers::sqrt2;

BraidWord W(const char* text, int strands) { return parse_braid_word(text, strands); }

}  // namespace

TEST(B2Rep, square_is_phase_identity) {
    const auto rep0 = b2_rep(0.0);
    EXPECT_TRUE(MatrixNear(evaluate(rep0, W("s1 s1", 2)), CMatrix::identity(4), 1e-15));
    for (double theta : {0.0, 1.0, 2.0, -3.0}) EXPECT_TRUE(is_unitary(b2_rep(theta).generator(1)));
    const Complex i{0, 1};
    EXPECT_TRUE(MatrixNear(evaluate(b2_rep(std::numbers::pi / 4), W("s1 s1", 2)), i * CMatrix::identity(4), 1e-15));
}

TEST(B2Rep, metadata_and_warnings) {
    const auto rep = b2_rep(1.0);
    EXPECT_EQ(rep.name(), "b2");
    EXPECT_EQ(rep.strands(), 2);
    EXPECT_EQ(rep.dimension(), 4u);
    EXPECT_TRUE(rep.warnings().empty());
    EXPECT_TRUE(rep.relations().passed);
    EXPECT_DOUBLE_EQ(rep.parameters().at("theta").real(), 1.0);
    EXPECT_FALSE(b2_rep(std::numbers::pi / 3).warnings().empty());
    EXPECT_FALSE(b2_rep(0.0).warnings().empty());
}

TEST(GeRep, braiding_unitarity_closure) {
    const auto rep = ge_rep(1.0);
    const auto& s1 = rep.generator(1);
    const auto& s2 = rep.generator(2);
    EXPECT_LE(frobenius_distance(s1 * s2 * s1, s2 * s1 * s2), 1e-10);
    EXPECT_TRUE(is_unitary(s1));
    EXPECT_TRUE(is_unitary(s2));
    EXPECT_TRUE(equal_up_to_phase(evaluate(rep, W("(s1 s2)^3", 3)), CMatrix::identity(8)).has_value());
}

TEST(JonesRep, braiding_and_inverse_formula) {
    const auto rep = jones_rep();
    const auto report = verify_relations(rep, 1e-12);
    EXPECT_TRUE(report.passed);
    EXPECT_LE(report.max_residual, 1e-12);

    // sigma_1 (A^-1 h1 + A I) = h1^2 + (A^2 + A^-2) h1 + I = I since A^2 + A^-2 = -sqrt2.
    const Complex a = jones_parameter();
    EXPECT_NEAR(std::abs(a * a + 1.0 / (a * a) + kSqrt2), 0.0, 1e-15);
    const CMatrix id = CMatrix::identity(8);
    for (int i = 1; i <= 2; ++i) {
        const CMatrix h = i == 1 ? jones_h1() : jones_h2();
        const CMatrix explicit_inverse = (1.0 / a) * h + a * id;
        EXPECT_TRUE(MatrixNear(rep.generator(i) * explicit_inverse, id, 1e-12));
        EXPECT_TRUE(MatrixNear(explicit_inverse, dagger(rep.generator(i)), 1e-12));
        EXPECT_TRUE(MatrixNear(h * h, kSqrt2 * h, 1e-15));
        for (double l : hermitian_eigenvalues(h)) {
            EXPECT_TRUE(std::abs(l) < 1e-12 || std::abs(l - kSqrt2) < 1e-12) << l;
        }
    }
}

TEST(JonesRep, h_matrices_match_displayed_entries) {
    const CMatrix h1 = jones_h1();
    const CMatrix h2 = jones_h2();
    const double r = 1.0 / kSqrt2;
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            EXPECT_EQ(h1(i, j), Complex(i == j && i < 4 ? kSqrt2 : 0.0));
            const double expected = i == j ? r : (i + j == 7 ? -r : 0.0);
            EXPECT_NEAR(std::abs(h2(i, j) - expected), 0.0, 1e-15);
        }
    }
}

TEST(GenericRep, coincides_with_ge) {
    const double theta = 0.37;
    const auto g = generic_rep(ge_matrix(theta), 3);
    const auto ge = ge_rep(theta);
    EXPECT_TRUE(MatrixNear(g.generator(1), ge.generator(1), 0.0));
    EXPECT_TRUE(MatrixNear(g.generator(2), ge.generator(2), 0.0));
    EXPECT_TRUE(g.relations().passed);
}

TEST(GenericRep, identity_and_swap) {
    const auto id = generic_rep(CMatrix::identity(4), 4);
    EXPECT_TRUE(id.relations().passed);
    EXPECT_EQ(id.relations().far_commutation.size(), 1u);
    EXPECT_EQ(id.relations().braiding.size(), 2u);
    EXPECT_EQ(id.dimension(), 16u);

    const CMatrix swap{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
    const auto sw = generic_rep(swap, 3);
    EXPECT_TRUE(sw.relations().passed);
    EXPECT_LE(sw.relations().max_residual, 1e-15);
}

TEST(GenericRep, records_braiding_failure) {
    // A CNOT-like unitary satisfies far commutation but not the braid relation.
    const CMatrix cnot{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    const auto rep = generic_rep(cnot, 4);
    EXPECT_FALSE(rep.relations().passed);
    EXPECT_FALSE(rep.warnings().empty());
    for (const auto& r : rep.relations().far_commutation) EXPECT_LE(r.residual, 1e-15);
}

TEST(GenericRep, errors) {
    EXPECT_THROW(generic_rep(2.0 * CMatrix::identity(4), 3), RepresentationError);
    EXPECT_THROW(generic_rep(CMatrix::identity(4), 1), RepresentationError);
    EXPECT_THROW(generic_rep(CMatrix::identity(2), 3), RepresentationError);
}

TEST(VerifyRelations, examples) {
    EXPECT_TRUE(verify_relations(ge_rep(1.0)).passed);
    const auto d = generic_rep(CMatrix::diagonal({1.0, 1.0, 1.0, std::polar(1.0, std::numbers::pi / 3)}), 3);
    const auto report = verify_relations(d);
    // Diagonal generators commute, so the braid residual is |s1 s2 (s1 - s2)|, nonzero on |110> and |011>
    // with |e^{i pi/3} - 1| = 1 each.
    ASSERT_EQ(report.braiding.size(), 1u);
    EXPECT_FALSE(report.passed);
    EXPECT_NEAR(report.braiding[0].residual, kSqrt2, 1e-12);
    const auto b2 = verify_relations(b2_rep(1.0));
    EXPECT_TRUE(b2.passed);
    EXPECT_TRUE(b2.braiding.empty());
    EXPECT_TRUE(b2.far_commutation.empty());
}

TEST(Evaluate, examples) {
    EXPECT_TRUE(MatrixNear(evaluate(b2_rep(0.0), W("s1 s1", 2)), CMatrix::identity(4), 1e-15));
    EXPECT_TRUE(MatrixNear(evaluate(jones_rep(), W("s1 s1^-1", 3)), CMatrix::identity(8), 1e-14));
    EXPECT_TRUE(MatrixNear(evaluate(ge_rep(0.5), W("", 3)), CMatrix::identity(8), 0.0));
    EXPECT_TRUE(equal_up_to_phase(evaluate(ge_rep(0.5), W("(s1 s2)^3", 3)), CMatrix::identity(8)).has_value());
    EXPECT_THROW(evaluate(ge_rep(1.0), W("s1", 2)), RepresentationError);
}

TEST(Evaluate, word_order_is_matrix_product_order) {
    const auto rep = jones_rep();
    const CMatrix m = evaluate(rep, W("s1 s2^-1", 3));
    EXPECT_TRUE(MatrixNear(m, rep.generator(1) * rep.inverse_generator(2), 1e-15));
}

TEST(ClosureCheck, examples) {
    const auto jones = closure_check(jones_rep(), W("(s1 s2^-1)^3", 3));
    EXPECT_TRUE(jones.closes);
    ASSERT_TRUE(jones.phase.has_value());
    EXPECT_TRUE(closure_check(ge_rep(1.0), W("(s1 s2)^3", 3)).closes);
    const auto open = closure_check(ge_rep(1.0), W("s1 s2", 3));
    EXPECT_FALSE(open.closes);
    EXPECT_FALSE(open.phase.has_value());
    EXPECT_FALSE(closure_check(b2_rep(1.0), W("s1", 2)).closes);
}

TEST(RepresentationByName, lookup) {
    EXPECT_EQ(representation_by_name("jones").name(), "jones");
    EXPECT_EQ(representation_by_name("ge", 0.2).strands(), 3);
    EXPECT_THROW(representation_by_name("hecke"), RepresentationError);
}

class RepresentationProperties : public ::testing::TestWithParam<const char*> {
protected:
    Representation rep() const { return representation_by_name(GetParam(), 1.0); }
};

TEST_P(RepresentationProperties, evaluate_is_homomorphism) {
    const auto r = rep();
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const BraidWord a = braidq::testing::random_word(rng, r.strands(), 12);
        const BraidWord b = braidq::testing::random_word(rng, r.strands(), 12);
        EXPECT_TRUE(MatrixNear(evaluate(r, concat(a, b)), evaluate(r, a) * evaluate(r, b), 1e-12));
    }
}

TEST_P(RepresentationProperties, inverse_is_dagger_and_reduction_invariance) {
    const auto r = rep();
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 60; ++trial) {
        const BraidWord w = braidq::testing::random_word(rng, r.strands(), 12);
        const CMatrix m = evaluate(r, w);
        EXPECT_TRUE(MatrixNear(evaluate(r, inverse(w)), dagger(m), 1e-12));
        EXPECT_TRUE(MatrixNear(evaluate(r, free_reduce(w)), m, 1e-12));
    }
}

TEST_P(RepresentationProperties, braiding_rewrite_invariance) {
    const auto r = rep();
    if (r.strands() < 3) GTEST_SKIP() << "no braiding relation on two strands";
    std::mt19937_64 rng(23);
    std::bernoulli_distribution flip(0.5);
    for (int trial = 0; trial < 100; ++trial) {
        const BraidWord prefix = braidq::testing::random_word(rng, 3, 6);
        const BraidWord suffix = braidq::testing::random_word(rng, 3, 6);
        const bool forward = flip(rng);
        const BraidWord lhs = W(forward ? "s1 s2 s1" : "s2 s1 s2", 3);
        const BraidWord rhs = W(forward ? "s2 s1 s2" : "s1 s2 s1", 3);
        const CMatrix a = evaluate(r, concat(concat(prefix, lhs), suffix));
        const CMatrix b = evaluate(r, concat(concat(prefix, rhs), suffix));
        EXPECT_LE(frobenius_distance(a, b), 1e-11);
    }
}

INSTANTIATE_TEST_SUITE_P(NamedRepresentations, RepresentationProperties, ::testing::Values("b2", "ge", "jones"));

TEST(B2Rep, infinite_order_witness) {
    const auto rep = b2_rep(1.0);
    for (int k = 1; k <= 20; ++k) {
        std::vector<GeneratorLetter> letters(static_cast<std::size_t>(2 * k), GeneratorLetter{1, 1});
        const auto phase = equal_up_to_phase(evaluate(rep, BraidWord(2, letters)), CMatrix::identity(4));
        ASSERT_TRUE(phase.has_value());
        EXPECT_NEAR(*phase, wrap_angle(2.0 * k * 1.0), 1e-10);
        EXPECT_GT(std::abs(*phase), 1e-3) << "power " << 2 * k << " returned to the identity";
    }
}
