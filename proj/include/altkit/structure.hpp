#ifndef ALTKIT_STRUCTURE_HPP
#define ALTKIT_STRUCTURE_HPP

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "altkit/algebra.hpp"
#include "altkit/catalog.hpp"
#include "altkit/error.hpp"
#include "altkit/identities.hpp"
#include "altkit/matrix.hpp"
#include "altkit/units.hpp"

namespace altkit {

// Basis of NC(A) = {x : xy = yx for all y}: the null space of the stacked
// n^2 x n matrix of the maps x -> x e_i - e_i x.
template <class S>
std::vector<Element<S>> commutative_nucleus(const Algebra<S>& A) {
  const std::size_t n = A.dim();
  Matrix<S> stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector<S> ei = A.unit_vector(i);
    Matrix<S> block = operator_matrix<S>(A, ei, Side::Right) - operator_matrix<S>(A, ei, Side::Left);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = block(r, c);
  }
  std::vector<Element<S>> basis;
  for (auto& v : null_space(stacked, A.eps())) basis.push_back(A.element(std::move(v)));
  return basis;
}

// A linear endomorphism of an algebra; column j is the image of e_j.
template <class S>
struct LinearMap {
  Algebra<S> parent;
  Matrix<S> matrix;

  LinearMap(Algebra<S> alg, Matrix<S> m) : parent(std::move(alg)), matrix(std::move(m)) {
    if (matrix.rows() != parent.dim() || matrix.cols() != parent.dim())
      throw DimensionError("linear map must be square of the algebra's dimension");
  }

  Element<S> operator()(const Element<S>& x) const {
    if (!x.parent().same_as(parent)) throw DimensionError("element belongs to another algebra");
    return parent.element(matrix.apply(x.coords()));
  }
};

template <class S>
struct MorphismReport {
  bool ok = true;
  bool invertible = true;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;  // (i, j) with W(e_i e_j) != W e_i W e_j
  Vector<S> image_of_product, product_of_images;
};

// Checks that W (target.dim x source.dim, columns = images of the source
// basis) is an algebra isomorphism source -> target. Bilinearity makes the
// basis pairs sufficient.
template <class S>
MorphismReport<S> check_isomorphism(const Algebra<S>& source, const Algebra<S>& target, const Matrix<S>& W) {
  if (W.rows() != target.dim() || W.cols() != source.dim()) throw DimensionError("witness has the wrong shape");
  MorphismReport<S> out;
  const double eps = std::max(source.eps(), target.eps());
  if (!W.square() || rank(W, eps) != W.rows()) {
    out.ok = false;
    out.invertible = false;
    return out;
  }
  std::vector<Vector<S>> images;
  for (std::size_t c = 0; c < W.cols(); ++c) images.push_back(W.column(c));
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = 0; j < source.dim(); ++j) {
      Vector<S> lhs = W.apply(source.mul(source.unit_vector(i), source.unit_vector(j)));
      Vector<S> rhs = target.mul(images[i], images[j]);
      if (!target.close(lhs, rhs)) {
        out.ok = false;
        out.failing_pair = std::make_pair(i, j);
        out.image_of_product = std::move(lhs);
        out.product_of_images = std::move(rhs);
        return out;
      }
    }
  return out;
}

template <class S>
MorphismReport<S> is_automorphism(const Algebra<S>& A, const LinearMap<S>& f) {
  if (!f.parent.same_as(A)) throw DimensionError("map belongs to another algebra");
  return check_isomorphism(A, A, f.matrix);
}

// Canonical T_p table with the eight parameters in the order
// alpha1, alpha2, beta1, beta2, delta1, delta2, gamma1, gamma2.
inline const std::array<std::string, 8>& tp_param_names() {
  static const std::array<std::string, 8> names = {"alpha1", "alpha2", "beta1",  "beta2",
                                                   "delta1", "delta2", "gamma1", "gamma2"};
  return names;
}

template <class S>
struct ReflectionDecomposition {
  std::vector<Vector<S>> B_basis;  // eigenvalue +1
  std::vector<Vector<S>> C_basis;  // eigenvalue -1
  std::array<Vector<S>, 4> tp_basis;  // (1, i, w, v)
  std::array<S, 8> tp_params;
  Matrix<S> change_of_basis;  // columns are tp_basis
  std::vector<std::pair<std::string, bool>> invariants;

  bool all_invariants_hold() const {
    for (const auto& [name, ok] : invariants)
      if (!ok) return false;
    return true;
  }
  bool invariant(const std::string& name) const {
    for (const auto& [n, ok] : invariants)
      if (n == name) return ok;
    return false;
  }
};

namespace detail {

template <class S>
S require_sqrt(const S& x, const char* what) {
  auto r = ScalarTraits<S>::sqrt(x);
  if (!r) throw InexactError(std::string("square root of ") + what + " is not exact; use float mode");
  return *r;
}

// Coordinates of x in the basis given by p's columns.
template <class S>
Vector<S> coords_in(const Matrix<S>& p_inverse, const Vector<S>& x) {
  return p_inverse.apply(x);
}

}  // namespace detail

// Splits a 4-dimensional unital algebra along a reflection phi into
// B = E_1(phi) and C = E_-1(phi), then extracts the basis (1, i, w, v) with
// i^2 = -1 in B, w the normalized first C basis vector and v = w i, and reads
// the T_p parameters off w^2, wv, vw, v^2.
template <class S>
ReflectionDecomposition<S> reflection_decompose(const Algebra<S>& A, const LinearMap<S>& phi) {
  using T = ScalarTraits<S>;
  const double eps = A.eps();
  if (A.dim() != 4 || !A.unital()) throw DecompositionError("reflection decomposition needs a 4-dimensional unital algebra");
  const auto I = Matrix<S>::identity(4);
  if (matrices_equal(phi.matrix, I, eps)) throw ReflectionError("the identity map is not a reflection");
  if (!matrices_equal(phi.matrix * phi.matrix, I, eps)) throw ReflectionError("map does not square to the identity");
  if (!is_automorphism(A, phi).ok) throw ReflectionError("map is not an automorphism");

  ReflectionDecomposition<S> out;
  out.B_basis = null_space(phi.matrix - I, eps);
  out.C_basis = null_space(phi.matrix + I, eps);
  if (out.B_basis.size() != 2 || out.C_basis.size() != 2)
    throw DecompositionError("eigenspace dimensions are " + std::to_string(out.B_basis.size()) + "/" +
                             std::to_string(out.C_basis.size()) + ", expected 2/2");

  // B = span{1, b}; b^2 = p 1 + q b, and (x + y b)^2 = -1 solves to
  // y^2 = -1 / (p + q^2/4), x = -y q / 2.
  const Vector<S>& one = *A.unit();
  const Vector<S>* b_ptr = nullptr;
  for (const auto& cand : out.B_basis)
    if (span_basis(std::vector<Vector<S>>{one, cand}, 4, eps).size() == 2) {
      b_ptr = &cand;
      break;
    }
  if (!b_ptr || !in_span(out.B_basis, one, eps)) throw DecompositionError("unit is not in the +1 eigenspace");
  const Vector<S>& b = *b_ptr;
  Matrix<S> onb = Matrix<S>::from_columns({one, b});
  Vector<S> b2 = A.mul(b, b);
  Matrix<S> aug(4, 3);
  for (std::size_t r = 0; r < 4; ++r) {
    aug(r, 0) = onb(r, 0);
    aug(r, 1) = onb(r, 1);
    aug(r, 2) = b2[r];
  }
  auto red = rref(aug, eps);
  if (red.pivots.size() != 2 || red.pivots[1] != 1) throw DecompositionError("+1 eigenspace is not a subalgebra");
  const S p = red.reduced(0, 2), q = red.reduced(1, 2);
  const S disc = p + q * q / S(4);
  if (T::sign(disc, eps) >= 0) throw DecompositionError("+1 eigenspace is not isomorphic to the complex numbers");
  const S y = detail::require_sqrt<S>(S(-1) / disc, "-1/(p + q^2/4)");
  const S x = -y * q / S(2);
  Vector<S> i(4);
  for (std::size_t r = 0; r < 4; ++r) i[r] = x * one[r] + y * b[r];

  Vector<S> w = out.C_basis[0];
  S len2 = T::zero();
  for (const auto& c : w) len2 += c * c;
  const S len = detail::require_sqrt<S>(len2, "|w|^2");
  for (auto& c : w) c /= len;
  Vector<S> v = A.mul(w, i);

  Vector<S> iw = A.mul(i, w), wi = v;
  if (A.close(iw, wi) && !is_zero_vector<S>(wi, eps))
    throw NucleusContradictionError("i commutes with w in the -1 eigenspace; the algebra cannot be a division algebra");
  {
    Vector<S> sum = iw;
    for (std::size_t r = 0; r < 4; ++r) sum[r] += wi[r];
    if (!is_zero_vector<S>(sum, eps)) throw DecompositionError("i*w is neither w*i nor -w*i");
  }

  out.tp_basis = {one, i, w, v};
  out.change_of_basis = Matrix<S>::from_columns({one, i, w, v});
  auto pinv = inverse(out.change_of_basis, eps);
  if (!pinv) throw DecompositionError("(1, i, w, v) is not a basis");

  auto in_B = [&](const Vector<S>& z) {
    Vector<S> c = detail::coords_in(*pinv, z);
    return T::is_zero(c[2], eps) && T::is_zero(c[3], eps);
  };
  auto in_C = [&](const Vector<S>& z) {
    Vector<S> c = detail::coords_in(*pinv, z);
    return T::is_zero(c[0], eps) && T::is_zero(c[1], eps);
  };

  const std::array<std::pair<const Vector<S>*, const Vector<S>*>, 4> quad = {
      std::make_pair(&w, &w), std::make_pair(&w, &v), std::make_pair(&v, &w), std::make_pair(&v, &v)};
  for (std::size_t t = 0; t < 4; ++t) {
    Vector<S> c = detail::coords_in(*pinv, A.mul(*quad[t].first, *quad[t].second));
    out.tp_params[2 * t] = c[0];
    out.tp_params[2 * t + 1] = c[1];
  }

  auto all_pairs = [&](const std::vector<Vector<S>>& L, const std::vector<Vector<S>>& R, auto pred) {
    for (const auto& l : L)
      for (const auto& r : R)
        if (!pred(A.mul(l, r))) return false;
    return true;
  };
  auto& inv = out.invariants;
  bool fixes = true, negates = true;
  for (const auto& e : out.B_basis) fixes = fixes && A.close(phi.matrix.apply(e), e);
  for (const auto& e : out.C_basis) {
    Vector<S> neg = e;
    for (auto& c : neg) c = -c;
    negates = negates && A.close(phi.matrix.apply(e), neg);
  }
  inv.emplace_back("phi_fixes_B", fixes);
  inv.emplace_back("phi_negates_C", negates);
  inv.emplace_back("dims_2_2", true);
  inv.emplace_back("B_is_subalgebra", all_pairs(out.B_basis, out.B_basis, in_B));
  inv.emplace_back("BC_in_C", all_pairs(out.B_basis, out.C_basis, in_C));
  inv.emplace_back("CB_in_C", all_pairs(out.C_basis, out.B_basis, in_C));
  inv.emplace_back("CC_in_B", all_pairs(out.C_basis, out.C_basis, in_B));
  Vector<S> i2 = A.mul(i, i);
  for (std::size_t r = 0; r < 4; ++r) i2[r] += one[r];
  inv.emplace_back("i_squared_is_minus_one", is_zero_vector<S>(i2, eps));
  Vector<S> minus_v = v, minus_w = w;
  for (auto& c : minus_v) c = -c;
  for (auto& c : minus_w) c = -c;
  inv.emplace_back("iw_is_minus_v", A.close(iw, minus_v));
  inv.emplace_back("iv_is_w", A.close(A.mul(i, v), w));
  inv.emplace_back("vi_is_minus_w", A.close(A.mul(v, i), minus_w));
  bool anti = true;
  for (const auto& c : out.C_basis) {
    Vector<S> s = A.mul(i, c), t = A.mul(c, i);
    for (std::size_t r = 0; r < 4; ++r) s[r] += t[r];
    anti = anti && is_zero_vector<S>(s, eps);
  }
  inv.emplace_back("i_anticommutes_with_C", anti);

  std::map<std::string, Rational> params;
  for (std::size_t t = 0; t < 8; ++t) params[tp_param_names()[t]] = scalar_cast<Rational>(out.tp_params[t]);
  Algebra<S> expected = build(Family::Tp, params).template convert<S>(eps);
  Algebra<S> actual = A.change_basis(out.change_of_basis, {"1", "i", "w", "v"});
  bool same = true;
  for (std::size_t t = 0; t < 64; ++t)
    same = same && T::is_zero(actual.structure_constants()[t] - expected.structure_constants()[t], eps);
  inv.emplace_back("tp_table_reproduced", same);
  return out;
}

enum class MiddleCTarget { Mplus, Mzero, H, Unclassified };

inline std::string middle_c_target_name(MiddleCTarget t) {
  switch (t) {
    case MiddleCTarget::Mplus: return "Mplus";
    case MiddleCTarget::Mzero: return "Mzero";
    case MiddleCTarget::H: return "H";
    case MiddleCTarget::Unclassified: return "Unclassified";
  }
  return "?";
}

struct MiddleCClassification {
  MiddleCTarget target = MiddleCTarget::Unclassified;
  std::string reason;
  Matrix<double> witness;     // columns: images of the target basis in T_n coordinates
  bool exact = false;         // witness verified in rational arithmetic
  bool witness_verified = false;
  std::size_t units_checked = 0;
};

struct MiddleCOptions {
  double eps = kDefaultEps;
  std::size_t samples = 50;
  std::uint64_t seed = 0;
};

// Partially left and right alternative T_n algebras with imaginary units
// outside span{1, i} are isomorphic to M+, M0 or H according to the sign of
// a; the witness rescales j and k by 1/sqrt|a|.
inline MiddleCClassification classify_middle_c(const FamilyParams& p, const MiddleCOptions& opt = {}) {
  if (p.family != Family::Tn) throw ParameterError("classify_middle_c expects T_n parameters");
  MiddleCClassification out;
  const Algebra<Rational> A = build(p);
  const UnitLocus locus = classify_locus_tn(p, opt.samples, opt.seed);
  if (locus.kind == LocusKind::FiniteSet) {
    out.reason = "no imaginary units outside span{1, i} (b, c, d not all zero)";
    return out;
  }

  const Rational a_raw = p.get("a");
  Rational a = a_raw;
  if (std::fabs(a.get_d()) <= opt.eps) a = 0;
  const Algebra<double> Af = A.to_float(opt.eps);
  IdentityContext<double> ctx;
  ctx.units_sampled = true;
  for (const auto& pt : locus.points) ctx.units.push_back(Af.element(pt));
  // Probe units: sqrt(2) i + j/sqrt(a), i + j, j/sqrt(-a) for a > 0, = 0, < 0.
  const double ad = a.get_d();
  if (sgn(a) > 0) ctx.units.push_back(Af.element({0.0, std::sqrt(2.0), 1.0 / std::sqrt(ad), 0.0}));
  else if (sgn(a) == 0) ctx.units.push_back(Af.element({0.0, 1.0, 1.0, 0.0}));
  else ctx.units.push_back(Af.element({0.0, 0.0, 1.0 / std::sqrt(-ad), 0.0}));
  out.units_checked = ctx.units.size();
  for (auto kind : {IdentityKind::PartialLeftAlt, IdentityKind::PartialRightAlt}) {
    if (!check_identity(Af, kind, ctx).holds) {
      out.reason = "fails " + identity_name(kind) + " on its unit locus";
      return out;
    }
  }

  const Rational f = p.get("f"), g = p.get("g"), h = p.get("h"), e = p.get("e");
  auto small = [&](const Rational& x) { return std::fabs(x.get_d()) <= opt.eps; };
  if (!small(f) || !small(h) || !small(e) || !small(g + a)) {
    out.reason = "violates f = h = e = 0, g = -a";
    return out;
  }

  out.target = sgn(a) > 0 ? MiddleCTarget::Mplus : sgn(a) < 0 ? MiddleCTarget::H : MiddleCTarget::Mzero;
  const Family target_family =
      out.target == MiddleCTarget::Mplus ? Family::Mplus : out.target == MiddleCTarget::H ? Family::H : Family::Mzero;
  const Algebra<Rational> target = build(target_family);

  auto s = exact_sqrt(Rational(abs(a)));
  if (a == a_raw && (s || sgn(a) == 0)) {
    Rational scale = sgn(a) == 0 ? Rational(1) : Rational(1 / *s);
    std::vector<Rational> d = {1, 1, scale, scale};
    Matrix<Rational> W = Matrix<Rational>::diagonal(d);
    out.exact = true;
    out.witness_verified = check_isomorphism(target, A, W).ok;
    out.witness = W.cast<double>();
  } else {
    const double scale = 1.0 / std::sqrt(std::fabs(ad));
    std::vector<double> d = {1.0, 1.0, scale, scale};
    out.witness = Matrix<double>::diagonal(d);
    out.witness_verified = check_isomorphism(target.to_float(opt.eps), Af, out.witness).ok;
  }
  if (!out.witness_verified) out.reason = "witness failed the isomorphism check";
  return out;
}

}  // namespace altkit

#endif  // ALTKIT_STRUCTURE_HPP
