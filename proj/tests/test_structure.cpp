#include <gtest/gtest.h>

#include <cmath>

#include "altkit/altkit.hpp"
#include "oracles.hpp"

using namespace altkit;
using Q = Rational;

namespace {

Matrix<Q> diag(std::vector<Q> d) { return Matrix<Q>::diagonal(d); }

}  // namespace

TEST(Nucleus, Examples) {
  Algebra<Q> H = build(Family::H);
  auto N = commutative_nucleus(H);
  ASSERT_EQ(N.size(), 1u);
  EXPECT_TRUE(N[0] == H.one());
  for (long k = 1; k <= 3; ++k) EXPECT_EQ(commutative_nucleus(build(Family::Ak, {{"k", k}})).size(), 2u * k + 2);
  EXPECT_EQ(commutative_nucleus(build(Family::C)).size(), 2u);
  // T_c is commutative
  EXPECT_EQ(commutative_nucleus(build(Family::Tc, {{"a", 2}, {"f", 1}})).size(), 4u);
}

TEST(Automorphism, Examples) {
  Algebra<Q> H = build(Family::H);
  EXPECT_TRUE(is_automorphism(H, LinearMap<Q>(H, diag({1, 1, -1, -1}))).ok);
  EXPECT_TRUE(is_automorphism(H, LinearMap<Q>(H, Matrix<Q>::identity(4))).ok);
  auto bad = is_automorphism(H, LinearMap<Q>(H, diag({1, -1, 1, 1})));
  ASSERT_FALSE(bad.ok);
  EXPECT_EQ(bad.failing_pair, std::make_pair(std::size_t{1}, std::size_t{2}));
  EXPECT_EQ(bad.image_of_product, (Vector<Q>{0, 0, 0, 1}));
  EXPECT_EQ(bad.product_of_images, (Vector<Q>{0, 0, 0, -1}));
  EXPECT_FALSE(is_automorphism(H, LinearMap<Q>(H, diag({1, 1, 0, 0}))).ok);
}

TEST(Automorphism, NucleusIsInvariant) {
  for (Family f : {Family::H, Family::Mplus, Family::Mzero}) {
    Algebra<Q> A = build(f);
    LinearMap<Q> phi(A, diag({1, 1, -1, -1}));
    ASSERT_TRUE(is_automorphism(A, phi).ok);
    auto N = commutative_nucleus(A);
    std::vector<Vector<Q>> span;
    for (const auto& e : N) span.push_back(e.coords());
    for (const auto& e : N) EXPECT_TRUE(in_span(span, phi(e).coords(), 0.0));
  }
}

TEST(Reflection, QuaternionDecomposition) {
  Algebra<Q> H = build(Family::H);
  auto d = reflection_decompose(H, LinearMap<Q>(H, diag({1, 1, -1, -1})));
  EXPECT_EQ(d.B_basis.size(), 2u);
  EXPECT_EQ(d.C_basis.size(), 2u);
  EXPECT_TRUE(d.all_invariants_hold());
  EXPECT_EQ(d.tp_basis[1], H.basis("i").coords());
  EXPECT_EQ(d.tp_basis[2], H.basis("j").coords());
  EXPECT_EQ(d.tp_basis[3], (-H.basis("k")).coords());
  EXPECT_EQ(d.tp_params, (std::array<Q, 8>{-1, 0, 0, -1, 0, 1, -1, 0}));
  // T_p table from the extracted parameters equals the transported table
  Algebra<Q> T = H.change_basis(d.change_of_basis);
  auto lit = oracle::tp({-1, 0, 0, -1, 0, 1, -1, 0});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(T.sc(i, j, k), lit[i][j][k]);
}

TEST(Reflection, TpInputReproducesItsParameters) {
  Algebra<Q> T = build(Family::Tp, {{"alpha1", -1}, {"beta2", -1}, {"delta2", 1}, {"gamma1", -1}});
  auto d = reflection_decompose(T, LinearMap<Q>(T, diag({1, 1, -1, -1})));
  EXPECT_TRUE(d.all_invariants_hold());
  EXPECT_EQ(d.tp_params, (std::array<Q, 8>{-1, 0, 0, -1, 0, 1, -1, 0}));
}

TEST(Reflection, Errors) {
  Algebra<Q> H = build(Family::H);
  EXPECT_THROW(reflection_decompose(H, LinearMap<Q>(H, Matrix<Q>::identity(4))), ReflectionError);
  EXPECT_THROW(reflection_decompose(H, LinearMap<Q>(H, diag({1, -1, 1, 1}))), ReflectionError);
  EXPECT_THROW(reflection_decompose(H, LinearMap<Q>(H, diag({1, 2, 1, 1}))), ReflectionError);
  Algebra<Q> A = build(Family::Ak, {{"k", 1}});
  EXPECT_THROW(reflection_decompose(A, LinearMap<Q>(A, diag({1, 1, -1, -1}))), Error);
  // i central in the commutative T_c: iw = wi contradicts a division algebra
  Algebra<Q> T = build(Family::Tc, {{"a", -1}, {"f", 0}});
  EXPECT_THROW(reflection_decompose(T, LinearMap<Q>(T, diag({1, 1, -1, -1}))), NucleusContradictionError);
}

TEST(Reflection, MplusDecomposesButIsNotDivision) {
  Algebra<Q> M = build(Family::Mplus);
  auto d = reflection_decompose(M, LinearMap<Q>(M, diag({1, 1, -1, -1})));
  EXPECT_TRUE(d.invariant("i_anticommutes_with_C"));
  EXPECT_TRUE(d.invariant("CC_in_B"));
  EXPECT_FALSE(is_division_sampled(M).no_zero_divisor_found);
}

TEST(Reflection, DivisionInputsHaveOneDimensionalNucleus) {
  Algebra<Q> H = build(Family::H);
  ASSERT_TRUE(is_division_sampled(H).no_zero_divisor_found);
  EXPECT_EQ(commutative_nucleus(H).size(), 1u);
}

TEST(MiddleC, ClassifiesBySignOfA) {
  auto p = classify_middle_c(FamilyParams{Family::Tn, {{"a", 4}, {"g", -4}}});
  EXPECT_EQ(p.target, MiddleCTarget::Mplus);
  EXPECT_TRUE(p.exact);
  EXPECT_TRUE(p.witness_verified);
  EXPECT_DOUBLE_EQ(p.witness(2, 2), 0.5);
  EXPECT_DOUBLE_EQ(p.witness(3, 3), 0.5);

  auto z = classify_middle_c(FamilyParams{Family::Tn, {}});
  EXPECT_EQ(z.target, MiddleCTarget::Mzero);
  EXPECT_TRUE(z.exact && z.witness_verified);

  auto h = classify_middle_c(FamilyParams{Family::Tn, {{"a", -1}, {"g", 1}}});
  EXPECT_EQ(h.target, MiddleCTarget::H);
  EXPECT_TRUE(h.exact && h.witness_verified);

  auto irr = classify_middle_c(FamilyParams{Family::Tn, {{"a", -2}, {"g", 2}}});
  EXPECT_EQ(irr.target, MiddleCTarget::H);
  EXPECT_FALSE(irr.exact);
  EXPECT_TRUE(irr.witness_verified);
}

TEST(MiddleC, ConstraintIsGEqualsMinusA) {
  // With a = 4 and g = -1 the unit q = sqrt(2) i + j/2 has (q, q, i) != 0.
  auto c = classify_middle_c(FamilyParams{Family::Tn, {{"a", 4}, {"g", -1}}});
  EXPECT_EQ(c.target, MiddleCTarget::Unclassified);
  Algebra<double> A = build(Family::Tn, {{"a", 4}, {"g", -1}}).to_float();
  auto q = A.element({0, std::sqrt(2.0), 0.5, 0});
  ASSERT_TRUE(verify_unit(A, q, 1e-12));
  EXPECT_GT(associator(q, q, A.basis("i")).norm(), 0.1);
}

TEST(MiddleC, UnclassifiedReasons) {
  auto b = classify_middle_c(FamilyParams{Family::Tn, {{"a", 1}, {"b", 1}}});
  EXPECT_EQ(b.target, MiddleCTarget::Unclassified);
  EXPECT_FALSE(b.reason.empty());
  auto e3 = classify_middle_c(FamilyParams{Family::Tn, {{"a", -1}, {"g", 1}, {"h", 1}}});
  EXPECT_EQ(e3.target, MiddleCTarget::Unclassified);
  EXPECT_THROW(classify_middle_c(FamilyParams{Family::Tc, {}}), ParameterError);
}

TEST(MiddleC, TargetsAreAssociative) {
  for (Family f : {Family::Mplus, Family::Mzero, Family::H})
    EXPECT_TRUE(check_identity(build(f), IdentityKind::Associative).holds);
}
