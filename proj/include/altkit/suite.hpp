#ifndef ALTKIT_SUITE_HPP
#define ALTKIT_SUITE_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "altkit/algebra.hpp"
#include "altkit/catalog.hpp"
#include "altkit/identities.hpp"
#include "altkit/lie.hpp"
#include "altkit/random.hpp"
#include "altkit/structure.hpp"
#include "altkit/units.hpp"

namespace altkit {

struct SuiteOptions {
  double eps = kDefaultEps;
  std::uint64_t seed = 0;
  std::size_t samples = 200;
};

struct ClaimResult {
  bool pass = false;
  std::string detail;
};

struct Claim {
  std::string id;
  std::string module;
  int criterion;       // acceptance criterion 1..9
  std::string anchor;  // short name of the statement being checked
  std::function<ClaimResult(const SuiteOptions&)> run;
};

namespace suite {

using Q = Rational;
using El = Element<Rational>;

inline ClaimResult ok(std::string detail = {}) { return {true, std::move(detail)}; }
inline ClaimResult bad(std::string detail) { return {false, std::move(detail)}; }

inline Algebra<Q> ak(std::size_t k, Rng& rng, std::vector<Q>* a11 = nullptr) {
  std::map<std::string, Q> p{{"k", Q(static_cast<long>(k))}};
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 1; j <= 2; ++j) {
      Q a = random_positive_rational(rng);
      p["a" + std::to_string(i) + std::to_string(j)] = a;
      if (a11 && j == 1) a11->push_back(a);
    }
  return build(Family::Ak, p);
}

inline IdentityContext<Q> units_ctx(const std::vector<El>& units) {
  IdentityContext<Q> ctx;
  ctx.units = units;
  return ctx;
}

inline IdentityContext<Q> c_ctx(const Algebra<Q>& A) {
  IdentityContext<Q> ctx;
  ctx.c_span = std::make_pair(A.basis(std::size_t{0}), A.basis(std::size_t{1}));
  return ctx;
}

inline Rational nonzero_rational(Rng& rng) {
  Rational r;
  do r = random_rational(rng);
  while (sgn(r) == 0);
  return r;
}

// T_c draws that are strictly middle C-associative over span{1, i}.
inline std::vector<FamilyParams> strict_tc_draws(Rng& rng, std::size_t count) {
  std::vector<FamilyParams> out;
  for (std::size_t tries = 0; out.size() < count && tries < 1000; ++tries) {
    FamilyParams p{Family::Tc,
                   {{"a", random_rational(rng)},
                    {"b", random_rational(rng)},
                    {"f", random_rational(rng)},
                    {"g", random_rational(rng)},
                    {"h", Q(static_cast<long>(rng() % 2))}}};
    Algebra<Q> A = build(p);
    try {
      if (is_strictly_middle(A, A.basis(std::size_t{0}), A.basis(std::size_t{1})).strict) out.push_back(p);
    } catch (const NotApplicableError&) {
    }
  }
  return out;
}

template <class S>
bool bilinear_sample(const Algebra<S>& A, Rng& rng) {
  const std::size_t n = A.dim();
  S a = random_scalar<S>(rng), b = random_scalar<S>(rng);
  El x = A.element(random_vector<S>(rng, n)), y = A.element(random_vector<S>(rng, n)),
     z = A.element(random_vector<S>(rng, n)), u = A.element(random_vector<S>(rng, n));
  bool good = (a * x + b * y) * z == a * (x * z) + b * (y * z);
  good = good && z * (a * x + b * y) == a * (z * x) + b * (z * y);
  good = good && associator(a * x + b * y, z, u) == a * associator(x, z, u) + b * associator(y, z, u);
  good = good && associator(z, a * x + b * y, u) == a * associator(z, x, u) + b * associator(z, y, u);
  good = good && associator(z, u, a * x + b * y) == a * associator(z, u, x) + b * associator(z, u, y);
  good = good && commutator(x, y) == -commutator(y, x);
  return good;
}

inline std::vector<Algebra<Q>> catalog_sample(Rng& rng) {
  std::vector<Algebra<Q>> out = {build(Family::H), build(Family::Mplus), build(Family::Mzero), build(Family::C)};
  for (std::size_t k = 1; k <= 3; ++k) out.push_back(ak(k, rng));
  out.push_back(tn_special_case(nonzero_rational(rng), nonzero_rational(rng)));
  out.push_back(build(Family::Tn, {{"a", -1}, {"g", 1}, {"h", 1}}));
  out.push_back(build(Family::Tc, {{"a", random_rational(rng)}, {"b", random_rational(rng)}, {"h", 1}}));
  std::map<std::string, Q> tp;
  for (const auto& name : tp_param_names()) tp[name] = random_rational(rng);
  out.push_back(build(Family::Tp, tp));
  return out;
}

inline std::string pair_text(const Q& a, const Q& b) {
  return "(" + format_rational(a) + "," + format_rational(b) + ")";
}

}  // namespace suite

// Claims of the verification suite, ordered by id.
inline std::vector<Claim> verification_claims() {
  using namespace suite;
  std::vector<Claim> claims;

  // core
  claims.push_back({"core.products", "core", 9, "basis products of H and A_1", [](const SuiteOptions&) {
                      Algebra<Q> H = build(Family::H);
                      if (!(H.basis("j") * H.basis("k") == H.basis("i"))) return bad("j k != i in H");
                      Algebra<Q> A = build(Family::Ak, {{"k", 1}});
                      if (!(A.basis("e1") * A.basis("v11") == A.basis("v12"))) return bad("e1 v11 != v12");
                      return ok();
                    }});
  claims.push_back({"core.multilinearity", "core", 9, "bilinear product, trilinear associator",
                    [](const SuiteOptions& o) {
                      Rng rng(o.seed);
                      auto algebras = catalog_sample(rng);
                      for (std::size_t s = 0; s < 1000; ++s)
                        if (!bilinear_sample(algebras[s % algebras.size()], rng))
                          return bad("multilinearity fails on sample " + std::to_string(s));
                      return ok("1000 exact samples");
                    }});
  claims.push_back({"core.unit-associator", "core", 9, "associators with a unit argument vanish",
                    [](const SuiteOptions& o) {
                      Rng rng(o.seed);
                      for (const auto& A : catalog_sample(rng)) {
                        const El one = A.one();
                        for (std::size_t i = 0; i < A.dim(); ++i)
                          for (std::size_t j = 0; j < A.dim(); ++j) {
                            El x = A.basis(i), y = A.basis(j);
                            if (!associator(one, x, y).is_zero() || !associator(x, one, y).is_zero() ||
                                !associator(x, y, one).is_zero())
                              return bad("nonzero associator with 1");
                          }
                      }
                      return ok();
                    }});

  // catalog
  claims.push_back({"catalog.special-case", "catalog", 2, "T_n slice c=d=e=h=0, f=b, g=-a", [](const SuiteOptions&) {
                      Algebra<Q> A = tn_special_case(1, 1);
                      El jk = A.basis("j") * A.basis("k");
                      if (!(jk == A.one() - A.basis("i"))) return bad("j k != 1 - i at a=b=1");
                      El j = A.basis("j");
                      if ((j * j) * j == j * (j * j)) return bad("j^2 j = j j^2 at a=b=1");
                      return ok();
                    }});
  claims.push_back({"catalog.tp-mplus", "catalog", 9, "T_p point (1,0,0,1,0,-1,1,0) is M+ via j->w, k->-v",
                    [](const SuiteOptions&) {
                      // With beta2 = delta2 = 0 the table is not associative, so M+ needs wv = i, vw = -i.
                      if (check_identity(build(Family::Tp, {{"alpha1", 1}, {"gamma1", 1}}), IdentityKind::Associative).holds)
                        return bad("T_p point with wv = vw = 0 is associative");
                      Algebra<Q> T = build(Family::Tp, {{"alpha1", 1}, {"beta2", 1}, {"delta2", -1}, {"gamma1", 1}});
                      Algebra<Q> M = build(Family::Mplus);
                      Matrix<Q> W = Matrix<Q>::diagonal(std::vector<Q>{1, 1, 1, -1});
                      if (!check_isomorphism(M, T, W).ok) return bad("j->w, k->-v is not an isomorphism");
                      return ok();
                    }});

  // identities
  claims.push_back({"identities.ak-partial", "identities", 1, "A_k partially alternative with units +-e1",
                    [](const SuiteOptions& o) {
                      Rng rng(o.seed);
                      for (std::size_t k = 1; k <= 5; ++k)
                        for (int draw = 0; draw < 3; ++draw) {
                          Algebra<Q> A = ak(k, rng);
                          if (A.dim() != 2 * k + 2) return bad("dim != 2k+2");
                          El e1 = A.basis("e1");
                          auto ctx = units_ctx({e1, -e1});
                          for (auto kind : {IdentityKind::PartialLeftAlt, IdentityKind::PartialRightAlt,
                                            IdentityKind::PartialFlexible})
                            if (!check_identity(A, kind, ctx).holds)
                              return bad(identity_name(kind) + " fails at k=" + std::to_string(k));
                        }
                      return ok("k=1..5, 3 draws each");
                    }});
  claims.push_back({"identities.ak-not-alternative", "identities", 1, "A_k left alternativity fails at (v11,v11,v12)",
                    [](const SuiteOptions& o) {
                      Rng rng(o.seed + 1);
                      for (std::size_t k = 1; k <= 5; ++k)
                        for (int draw = 0; draw < 3; ++draw) {
                          std::vector<Q> a11;
                          Algebra<Q> A = ak(k, rng, &a11);
                          auto r = check_identity(A, IdentityKind::LeftAlt);
                          if (r.holds || !r.witness) return bad("left-alt holds at k=" + std::to_string(k));
                          const El v11 = A.basis("v11"), v12 = A.basis("v12");
                          if (r.witness->x != v11.coords() || r.witness->y != v11.coords() ||
                              r.witness->z != v12.coords())
                            return bad("unexpected witness triple");
                          if (!(A.element(r.witness->defect) == a11[0] * v12)) return bad("defect != a11 v12");
                        }
                      return ok();
                    }});
  claims.push_back({"identities.example-c-assoc", "identities", 2, "T_n slice is left, middle and right C-associative",
                    [](const SuiteOptions& o) {
                      Rng rng(o.seed + 2);
                      for (int draw = 0; draw < 5; ++draw) {
                        Q a = random_rational(rng), b = nonzero_rational(rng);
                        Algebra<Q> A = tn_special_case(a, b);
                        for (auto kind : {IdentityKind::LeftCAssoc, IdentityKind::MiddleCAssoc, IdentityKind::RightCAssoc})
                          if (!check_identity(A, kind, c_ctx(A)).holds)
                            return bad(identity_name(kind) + " fails at " + pair_text(a, b));
                        El j = A.basis("j");
                        if (associator(j, j, j).is_zero()) return bad("j^2 j = j j^2 at " + pair_text(a, b));
                      }
                      return ok("5 draws with b != 0");
                    }});
  claims.push_back({"identities.middle-not-partial", "identities", 3, "T_n a=-1, g=h=1 fails partial right alt at (j,k,k)",
                    [](const SuiteOptions&) {
                      Algebra<Q> A = build(Family::Tn, {{"a", -1}, {"g", 1}, {"h", 1}});
                      if (!check_identity(A, IdentityKind::MiddleCAssoc, c_ctx(A)).holds) return bad("not middle C-assoc");
                      El j = A.basis("j"), k = A.basis("k");
                      if (!(k * k == -A.one())) return bad("k^2 != -1");
                      auto r = check_identity(A, IdentityKind::PartialRightAlt, units_ctx({k}));
                      if (r.holds) return bad("partial right alt holds");
                      if (r.witness->x != j.coords() || r.witness->y != k.coords() || r.witness->z != k.coords())
                        return bad("witness is not (j,k,k)");
                      return ok();
                    }});
  claims.push_back({"identities.tc-strict-partial", "identities", 6, "strict commutative T_c is partially alternative over +-i",
                    [](const SuiteOptions& o) {
                      Rng rng(o.seed + 3);
                      auto draws = strict_tc_draws(rng, 10);
                      if (draws.size() < 10) return bad("fewer than 10 strict draws");
                      for (const auto& p : draws) {
                        Algebra<Q> A = build(p);
                        El i = A.basis("i");
                        auto ctx = units_ctx({i, -i});
                        for (auto kind : {IdentityKind::PartialLeftAlt, IdentityKind::PartialRightAlt,
                                          IdentityKind::PartialFlexible})
                          if (!check_identity(A, kind, ctx).holds) return bad(identity_name(kind) + " fails");
                      }
                      return ok("10 strict draws");
                    }});
  claims.push_back({"identities.implications", "identities", 9, "associative => alternative => partial, over the catalog",
                    [](const SuiteOptions& o) {
                      Rng rng(o.seed + 4);
                      std::size_t checked = 0;
                      for (const auto& A : catalog_sample(rng)) {
                        auto units = solve_units_sampled(A, NewtonOptions{40, o.seed, 1e-10});
                        IdentityContext<Q> ctx;
                        // Only exact rational units feed the exact check.
                        for (const auto& p : units.points) {
                          Vector<Q> q;
                          for (double x : p) q.push_back(Q(std::round(x * 64)) / 64);
                          if (verify_unit(A, std::span<const Q>(q), 0.0)) ctx.units.push_back(A.element(q));
                        }
                        auto holds = [&](IdentityKind k) { return check_identity(A, k, ctx).holds; };
                        const bool assoc = holds(IdentityKind::Associative);
                        const bool left = holds(IdentityKind::LeftAlt), right = holds(IdentityKind::RightAlt),
                                   flex = holds(IdentityKind::Flexible);
                        if (assoc && !(left && right && flex)) return bad("associative but not alternative");
                        if (!ctx.units.empty()) {
                          if (left && !holds(IdentityKind::PartialLeftAlt)) return bad("left alt without partial");
                          if (right && !holds(IdentityKind::PartialRightAlt)) return bad("right alt without partial");
                          if (flex && !holds(IdentityKind::PartialFlexible)) return bad("flexible without partial");
                        }
                        ++checked;
                      }
                      return ok(std::to_string(checked) + " algebras");
                    }});

  // units
  claims.push_back({"units.ak-grid", "units", 1, "A_k has no unit outside +-e1 on the grid", [](const SuiteOptions& o) {
                      Rng rng(o.seed + 5);
                      for (std::size_t k = 1; k <= 3; ++k) {
                        Algebra<double> A = ak(k, rng).to_float(1e-9);
                        auto pts = grid_search_units(A, -3, 3, 0.25, 1e-9);
                        const std::size_t e1 = *A.index_of("e1");
                        for (const auto& p : pts)
                          for (std::size_t m = 0; m < p.size(); ++m)
                            if (std::fabs(p[m] - (m == e1 ? std::copysign(1.0, p[e1]) : 0.0)) > 1e-9)
                              return bad("unit outside +-e1 at k=" + std::to_string(k));
                        if (pts.size() != 2) return bad("expected exactly +-e1");
                      }
                      return ok("[-3,3] step 0.25, k=1..3");
                    }});
  claims.push_back({"units.ak-newton", "units", 1, "Newton finds exactly +-e1 in A_2", [](const SuiteOptions& o) {
                      Rng rng(o.seed + 6);
                      Algebra<Q> A = ak(2, rng);
                      auto L = solve_units_sampled(A, NewtonOptions{o.samples, o.seed, 1e-10});
                      if (L.points.size() != 2) return bad(std::to_string(L.points.size()) + " units found");
                      return ok();
                    }});
  claims.push_back({"units.no-real-part", "units", 4, "units of M+, M0, H lie in span{i, j, k}", [](const SuiteOptions& o) {
                      for (Family f : {Family::Mplus, Family::Mzero, Family::H}) {
                        auto L = solve_units_sampled(build(f), NewtonOptions{o.samples, o.seed, 1e-10});
                        if (L.points.empty()) return bad("no units found in " + family_name(f));
                        for (const auto& p : L.points)
                          if (std::fabs(p[0]) > 1e-8) return bad("unit with real part in " + family_name(f));
                      }
                      return ok();
                    }});
  claims.push_back({"units.loci", "units", 4, "unit loci are hyperboloid, planes, sphere", [](const SuiteOptions& o) {
                      struct Case {
                        Family f;
                        LocusKind kind;
                        const char* text;
                      };
                      for (const Case& c : {Case{Family::Mplus, LocusKind::HyperboloidTwoSheets, "-x^2+y^2+z^2=-1"},
                                            Case{Family::Mzero, LocusKind::ParallelPlanes, "x^2=1"},
                                            Case{Family::H, LocusKind::Sphere, "x^2+y^2+z^2=1"}}) {
                        const FamilyParams p = tn_point(c.f);
                        auto L = classify_locus_tn(p, 50, o.seed);
                        if (L.kind != c.kind) return bad(family_name(c.f) + " locus is " + locus_kind_name(L.kind));
                        if (!L.equation || L.equation->normalized().text() != c.text)
                          return bad(family_name(c.f) + " equation mismatch");
                        Algebra<Q> A = build(c.f);
                        for (const auto& pt : L.points) {
                          Vector<Q> q;
                          for (double x : pt) q.push_back(Q(x));
                          if (!verify_unit(A.to_float(1e-9), std::span<const double>(pt), 1e-9))
                            return bad("locus point is not a unit in " + family_name(c.f));
                        }
                      }
                      return ok();
                    }});
  claims.push_back({"units.named-units", "units", 4, "sqrt(2) i + j in M+ and i + j in M0 are units", [](const SuiteOptions&) {
                      Algebra<double> Mp = build(Family::Mplus).to_float(1e-9);
                      Algebra<Q> M0 = build(Family::Mzero);
                      if (!verify_unit(Mp, Mp.element({0, std::sqrt(2.0), 1, 0}), 1e-9)) return bad("sqrt(2) i + j");
                      if (!verify_unit(M0, M0.basis("i") + M0.basis("j"), 0.0)) return bad("i + j");
                      return ok();
                    }});

  // structure
  claims.push_back({"structure.middle-c", "structure", 5, "middle C classification by the sign of a",
                    [](const SuiteOptions& o) {
                      Rng rng(o.seed + 7);
                      std::vector<std::pair<Q, MiddleCTarget>> cases = {{Q(4), MiddleCTarget::Mplus},
                                                                         {Q(0), MiddleCTarget::Mzero},
                                                                         {Q(-1), MiddleCTarget::H}};
                      for (int draw = 0; draw < 3; ++draw) {
                        cases.push_back({random_positive_rational(rng), MiddleCTarget::Mplus});
                        cases.push_back({-random_positive_rational(rng), MiddleCTarget::H});
                      }
                      for (const auto& [a, expected] : cases) {
                        FamilyParams p{Family::Tn, {{"a", a}, {"g", -a}}};
                        auto c = classify_middle_c(p, MiddleCOptions{o.eps, 50, o.seed});
                        if (c.target != expected)
                          return bad("a=" + format_rational(a) + " gave " + middle_c_target_name(c.target) + ": " + c.reason);
                        if (!c.witness_verified) return bad("witness rejected at a=" + format_rational(a));
                      }
                      return ok(std::to_string(cases.size()) + " parameter points");
                    }});
  claims.push_back({"structure.targets-associative", "structure", 5, "M+, M0 and H are associative", [](const SuiteOptions&) {
                      for (Family f : {Family::Mplus, Family::Mzero, Family::H})
                        if (!check_identity(build(f), IdentityKind::Associative).holds)
                          return bad(family_name(f) + " is not associative");
                      return ok();
                    }});
  claims.push_back({"structure.nucleus", "structure", 7, "commutative nucleus of H is R 1", [](const SuiteOptions& o) {
                      Algebra<Q> H = build(Family::H);
                      auto N = commutative_nucleus(H);
                      if (N.size() != 1 || !(N[0] == H.one())) return bad("nucleus is not span{1}");
                      if (!is_division_sampled(H, o.samples, o.seed).no_zero_divisor_found) return bad("H has a zero divisor");
                      return ok();
                    }});
  claims.push_back({"structure.reflection", "structure", 7, "reflection diag(1,1,-1,-1) on H gives the T_p table",
                    [](const SuiteOptions&) {
                      Algebra<Q> H = build(Family::H);
                      LinearMap<Q> phi(H, Matrix<Q>::diagonal(std::vector<Q>{1, 1, -1, -1}));
                      auto d = reflection_decompose(H, phi);
                      if (d.B_basis.size() != 2 || d.C_basis.size() != 2) return bad("eigenspace dims not 2/2");
                      for (const auto& [name, good] : d.invariants)
                        if (!good) return bad("invariant " + name + " fails");
                      const std::array<Q, 8> expected = {-1, 0, 0, -1, 0, 1, -1, 0};
                      if (d.tp_params != expected) return bad("unexpected T_p parameters");
                      return ok();
                    }});

  // lie
  claims.push_back({"lie.jacobi", "lie", 8, "commutator algebra of T_p satisfies Jacobi", [](const SuiteOptions& o) {
                      Rng rng(o.seed + 8);
                      for (int draw = 0; draw < 100; ++draw) {
                        std::map<std::string, Q> p;
                        for (const auto& name : tp_param_names()) p[name] = random_rational(rng);
                        if (!check_jacobi(lieify(build(Family::Tp, p))).holds) return bad("Jacobi fails");
                      }
                      return ok("100 random parameter draws");
                    }});
  claims.push_back({"lie.types", "lie", 8, "Lie type by the four (alpha, beta) cases", [](const SuiteOptions& o) {
                      struct Case {
                        long alpha, beta;
                        LieType type;
                      };
                      const std::vector<Case> cases = {{0, 2, LieType::G1PlusG37},  {0, -3, LieType::G1PlusG37},
                                                       {0, 0, LieType::G1PlusG35},  {1, 0, LieType::G49Zero},
                                                       {-2, 0, LieType::G49Zero},   {3, -5, LieType::G1PlusG37},
                                                       {-1, 4, LieType::G1PlusG37}};
                      std::string failures;
                      for (const auto& c : cases) {
                        auto r = classify_tp_lie(Q(c.alpha), Q(c.beta), o.eps);
                        if (r.type != c.type)
                          failures += " " + pair_text(c.alpha, c.beta) + "->" + lie_type_name(r.type) + " (Killing inertia " +
                                      std::to_string(r.killing.positive) + "," + std::to_string(r.killing.negative) + "," +
                                      std::to_string(r.killing.zero) + ")";
                      }
                      if (!failures.empty()) return bad("expected type differs:" + failures);
                      return ok();
                    }});
  claims.push_back({"lie.witnesses", "lie", 8, "every witness reproduces its canonical table", [](const SuiteOptions& o) {
                      for (auto [a, b] : std::vector<std::pair<long, long>>{{0, 2}, {0, -3}, {0, 0}, {1, 0}, {-2, 0}, {3, -5}, {-1, 4}}) {
                        auto r = classify_tp_lie(Q(a), Q(b), o.eps);
                        if (!r.witness_verified) return bad("witness rejected at " + pair_text(a, b));
                      }
                      return ok();
                    }});
  claims.push_back({"lie.derived-series", "lie", 8, "derived series dims (4,3,1,0) and (4,3,3)", [](const SuiteOptions&) {
                      using D = std::vector<std::size_t>;
                      for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 0}, {-2, 0}})
                        if (derived_dims(tp_lie(a, b)) != D{4, 3, 1, 0}) return bad("dims at " + pair_text(a, b));
                      for (auto [a, b] : std::vector<std::pair<long, long>>{{0, 2}, {0, -3}, {3, -5}, {-1, 4}})
                        if (derived_dims(tp_lie(a, b)) != D{4, 3, 3}) return bad("dims at " + pair_text(a, b));
                      return ok();
                    }});
  claims.push_back({"lie.scale-invariance", "lie", 9, "type is invariant under (alpha, beta) -> l^2 (alpha, beta)",
                    [](const SuiteOptions& o) {
                      Rng rng(o.seed + 9);
                      const std::vector<std::pair<long, long>> base = {{0, 2}, {0, -3}, {0, 0}, {1, 0}, {-2, 0}, {3, -5}, {-1, 4}};
                      for (int draw = 0; draw < 20; ++draw) {
                        Q l = nonzero_rational(rng);
                        for (auto [a, b] : base) {
                          auto t1 = classify_tp_lie(Q(a), Q(b), o.eps), t2 = classify_tp_lie(l * l * a, l * l * b, o.eps);
                          if (t1.type != t2.type) return bad("type changes at " + pair_text(a, b));
                          if (!t2.witness_verified) return bad("rescaled witness rejected");
                        }
                      }
                      return ok("20 random scale factors");
                    }});
  return claims;
}

struct ClaimOutcome {
  Claim claim;
  ClaimResult result;
};

inline std::vector<ClaimOutcome> run_claims(const SuiteOptions& opt, const std::string& only_module = {}) {
  std::vector<ClaimOutcome> out;
  for (auto& c : verification_claims()) {
    if (!only_module.empty() && c.module != only_module) continue;
    ClaimResult r;
    try {
      r = c.run(opt);
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    out.push_back({std::move(c), std::move(r)});
  }
  return out;
}

}  // namespace altkit

#endif  // ALTKIT_SUITE_HPP
