#include <gtest/gtest.h>

#include "altkit/altkit.hpp"
#include "oracles.hpp"

using namespace altkit;
using Q = Rational;

namespace {

Vector<Q> v4(const oracle::V4& v) { return {v[0], v[1], v[2], v[3]}; }
oracle::V4 o4(const Vector<Q>& v) { return {v[0], v[1], v[2], v[3]}; }

Algebra<Q> from_table(const oracle::Table4& t) {
  std::vector<Q> sc;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) sc.push_back(t[i][j][k]);
  return Algebra<Q>(4, sc, {"1", "i", "j", "k"}, Vector<Q>{1, 0, 0, 0});
}

}  // namespace

TEST(Scalar, ParsesFractionsDecimalsAndExponents) {
  EXPECT_EQ(parse_rational("3/2"), Q(3, 2));
  EXPECT_EQ(parse_rational("-0.25"), Q(-1, 4));
  EXPECT_EQ(parse_rational("1e-3"), Q(1, 1000));
  EXPECT_EQ(parse_rational(" 7 "), Q(7));
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_EQ(format_rational(Q(-6, 4)), "-3/2");
}

TEST(Scalar, ExactSqrtOnlyForRationalSquares) {
  EXPECT_EQ(*exact_sqrt(Q(9, 4)), Q(3, 2));
  EXPECT_FALSE(exact_sqrt(Q(2)).has_value());
  EXPECT_FALSE(exact_sqrt(Q(-1)).has_value());
}

TEST(Matrix, DeterminantMatchesLeibniz) {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 5;
    Matrix<Q> m(n, n);
    std::vector<std::vector<Q>> raw(n, std::vector<Q>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) raw[r][c] = m(r, c) = random_rational(rng, 4, 3);
    EXPECT_EQ(determinant(m, 0.0), oracle::leibniz_det(raw));
  }
}

TEST(Matrix, InverseAndNullSpace) {
  Matrix<Q> m = Matrix<Q>::diagonal(std::vector<Q>{2, 3, 0});
  EXPECT_FALSE(inverse(m, 0.0).has_value());
  auto ns = null_space(m, 0.0);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0], (Vector<Q>{0, 0, 1}));
  Matrix<Q> a(2, 2);
  a(0, 0) = 1, a(0, 1) = 2, a(1, 0) = 3, a(1, 1) = 4;
  auto inv = inverse(a, 0.0);
  ASSERT_TRUE(inv.has_value());
  EXPECT_TRUE(a * *inv == Matrix<Q>::identity(2));
  EXPECT_EQ(rank(a, 0.0), 2u);
}

TEST(Algebra, RejectsMalformedInput) {
  EXPECT_THROW(Algebra<Q>(2, std::vector<Q>(7)), DimensionError);
  EXPECT_THROW(Algebra<Q>(1, std::vector<Q>{1}, {"a", "b"}), DimensionError);
  EXPECT_THROW(Algebra<Q>(2, std::vector<Q>(8), {"a", "a"}), Error);
  // zero algebra with a claimed unit fails the unit axiom
  EXPECT_THROW(Algebra<Q>(2, std::vector<Q>(8), {}, Vector<Q>{1, 0}), Error);
}

TEST(Multiply, QuaternionTableMatchesHamiltonProduct) {
  Algebra<Q> H = build(Family::H);
  EXPECT_TRUE(H.basis("j") * H.basis("k") == H.basis("i"));
  Rng rng(3);
  for (int s = 0; s < 200; ++s) {
    Vector<Q> p = random_vector<Q>(rng, 4), q = random_vector<Q>(rng, 4);
    EXPECT_EQ(o4(H.mul(p, q)), oracle::hamilton(o4(p), o4(q)));
  }
}

TEST(Multiply, UnitIsNeutral) {
  for (Family f : {Family::H, Family::Mplus, Family::Mzero, Family::C, Family::Tp}) {
    Algebra<Q> A = build(f);
    for (std::size_t i = 0; i < A.dim(); ++i) {
      EXPECT_TRUE(A.one() * A.basis(i) == A.basis(i));
      EXPECT_TRUE(A.basis(i) * A.one() == A.basis(i));
    }
  }
}

TEST(Multiply, AkGeneratorActsOnFirstVector) {
  Algebra<Q> A = build(Family::Ak, {{"k", 1}, {"a11", 1}, {"a12", 1}});
  EXPECT_TRUE(A.basis("e1") * A.basis("v11") == A.basis("v12"));
}

TEST(Multiply, ParentMismatchThrows) {
  Algebra<Q> H = build(Family::H), H2 = build(Family::H);
  EXPECT_THROW(H.basis("i") * H2.basis("j"), DimensionError);
  EXPECT_THROW(associator(H.one(), H.one(), H2.one()), DimensionError);
}

TEST(Associator, AkExamples) {
  Algebra<Q> A = build(Family::Ak, {{"k", 2}, {"a11", 1}, {"a12", 1}});
  const auto v11 = A.basis("v11"), v12 = A.basis("v12"), e1 = A.basis("e1");
  EXPECT_TRUE(associator(v11, v11, v12) == v12);
  EXPECT_TRUE(associator(e1, e1, v11).is_zero());
  EXPECT_TRUE(associator(e1, e1, A.basis("v21")).is_zero());
}

TEST(Associator, QuaternionsAreAssociative) {
  Algebra<Q> H = build(Family::H);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) EXPECT_TRUE(associator(H.basis(i), H.basis(j), H.basis(k)).is_zero());
}

TEST(Commutator, TpAndQuaternionExamples) {
  Algebra<Q> T = build(Family::Tp, {{"alpha1", 2}, {"delta2", 3}});
  EXPECT_TRUE(commutator(T.basis("i"), T.basis("w")) == Q(-2) * T.basis("v"));
  EXPECT_TRUE(commutator(T.basis("w"), T.basis("w")).is_zero());
  Algebra<Q> H = build(Family::H);
  const auto w = H.basis("j"), v = -H.basis("k");
  EXPECT_TRUE(commutator(v, w) == Q(2) * H.basis("i"));
}

TEST(MulOperator, DeterminantsAgainstLeibniz) {
  Algebra<Q> H = build(Family::H);
  EXPECT_TRUE(mul_operator(H.one(), Side::Left).matrix == Matrix<Q>::identity(4));
  auto Li = mul_operator(H.basis("i"), Side::Left);
  EXPECT_EQ(Li.determinant(), Q(1));
  EXPECT_EQ(Li.determinant(), oracle::leibniz_det(oracle::left_matrix(oracle::quaternions(), {0, 1, 0, 0})));
  Algebra<Q> M = build(Family::Mplus);
  auto Lj = mul_operator(M.basis("j"), Side::Left);
  EXPECT_EQ(Lj.determinant(), oracle::leibniz_det(oracle::left_matrix(oracle::mplus(), {0, 0, 1, 0})));
  auto L1j = mul_operator(M.one() + M.basis("j"), Side::Left);
  EXPECT_EQ(L1j.determinant(), Q(0));
  EXPECT_FALSE(L1j.invertible());
}

TEST(MulOperator, ColumnsAreProductsWithBasis) {
  Algebra<Q> T = build(Family::Tn, {{"a", 2}, {"b", -1}, {"c", 3}, {"f", 5}, {"h", 1}});
  Rng rng(5);
  auto a = T.element(random_vector<Q>(rng, 4));
  auto L = mul_operator(a, Side::Left), R = mul_operator(a, Side::Right);
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_EQ(L.matrix.column(j), (a * T.basis(j)).coords());
    EXPECT_EQ(R.matrix.column(j), (T.basis(j) * a).coords());
  }
}

TEST(CoreProperties, BilinearityExact) {
  Rng rng(7);
  std::vector<Algebra<Q>> algebras = {build(Family::H), build(Family::Ak, {{"k", 2}, {"a11", 3}}),
                                      build(Family::Tn, {{"a", 1}, {"b", 2}, {"c", -1}, {"d", 3}, {"e", 1}})};
  for (int s = 0; s < 300; ++s) {
    const Algebra<Q>& A = algebras[s % algebras.size()];
    const std::size_t n = A.dim();
    Q a = random_rational(rng), b = random_rational(rng);
    auto x = A.element(random_vector<Q>(rng, n)), y = A.element(random_vector<Q>(rng, n)),
         z = A.element(random_vector<Q>(rng, n));
    EXPECT_TRUE((a * x + b * y) * z == a * (x * z) + b * (y * z));
    EXPECT_TRUE(z * (a * x + b * y) == a * (z * x) + b * (z * y));
    EXPECT_TRUE(associator(a * x + b * y, z, x) == a * associator(x, z, x) + b * associator(y, z, x));
    EXPECT_TRUE(commutator(x, y) == -commutator(y, x));
  }
}

TEST(CoreProperties, BilinearityFloatWithinEps) {
  Rng rng(8);
  Algebra<double> A = build(Family::Tn, {{"a", 1}, {"b", 2}, {"g", -1}}).to_float(1e-9);
  for (int s = 0; s < 200; ++s) {
    double a = random_scalar<double>(rng), b = random_scalar<double>(rng);
    auto x = A.element(random_vector<double>(rng, 4)), y = A.element(random_vector<double>(rng, 4)),
         z = A.element(random_vector<double>(rng, 4));
    EXPECT_TRUE((a * x + b * y) * z == a * (x * z) + b * (y * z));
  }
}

TEST(CoreProperties, ChangeOfBasisTransportsProducts) {
  Algebra<Q> H = build(Family::H);
  // new basis (1, i, j, -k)
  Matrix<Q> P = Matrix<Q>::diagonal(std::vector<Q>{1, 1, 1, -1});
  Algebra<Q> T = H.change_basis(P, {"1", "i", "w", "v"});
  EXPECT_EQ(v4(oracle::tp({-1, 0, 0, -1, 0, 1, -1, 0})[2][3]), T.mul(T.unit_vector(2), T.unit_vector(3)));
  auto expected = oracle::tp({-1, 0, 0, -1, 0, 1, -1, 0});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(T.mul(T.unit_vector(i), T.unit_vector(j)), v4(expected[i][j]));
}

TEST(CoreProperties, FloatConversionKeepsTable) {
  Algebra<Q> H = build(Family::H);
  Algebra<double> Hf = H.to_float();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) EXPECT_DOUBLE_EQ(Hf.sc(i, j, k), H.sc(i, j, k).get_d());
  EXPECT_TRUE(from_table(oracle::quaternions()).structure_constants() == H.structure_constants());
}
