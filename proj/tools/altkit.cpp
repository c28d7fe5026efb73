#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "altkit/altkit.hpp"

using namespace altkit;
using Q = Rational;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string algebra;
  std::string file;
  std::vector<std::string> params;
  std::vector<std::string> identities;
  std::string format = "text";
  double eps = default_eps();
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  std::string only;
  std::string map;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Source {
  Algebra<Q> algebra;
  std::optional<FamilyParams> family;
};

FamilyParams parse_family(const Options& o) {
  auto f = family_from_name(o.algebra);
  if (!f) throw UsageError("unknown algebra '" + o.algebra + "'");
  FamilyParams p{*f, {}};
  for (const auto& kv : o.params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=value, got '" + kv + "'");
    try {
      p.params[kv.substr(0, eq)] = parse_rational(kv.substr(eq + 1));
    } catch (const ParseError& e) {
      throw UsageError("--param " + kv + ": " + e.what());
    }
  }
  return p;
}

Source load_source(const Options& o) {
  if (o.algebra.empty() == o.file.empty()) throw UsageError("give exactly one of --algebra or --file");
  if (!o.file.empty()) {
    if (!o.params.empty()) throw UsageError("--param applies to --algebra only");
    try {
      return {load_algebra(o.file, o.eps), std::nullopt};
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  FamilyParams p = parse_family(o);
  try {
    Algebra<Q> A = build(p);
    return {A.convert<Q>(o.eps), p};
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::string element_text(const std::vector<std::string>& labels, const Vector<Q>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0) continue;
    if (sgn(v[k]) < 0) out += out.empty() ? "-" : " - ";
    else if (!out.empty()) out += " + ";
    Q m = abs(v[k]);
    if (m != 1) out += format_rational(m) + "*";
    out += labels[k];
  }
  return out.empty() ? "0" : out;
}

std::string element_text(const std::vector<std::string>& labels, const Vector<double>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k];
  os << ")";
  (void)labels;
  return os.str();
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.format == "json") std::cout << j.dump() << "\n";
  else std::cout << text;
}

// Imaginary units of A for the Partial* checks: exact when every Newton
// point rounds to a rational unit, otherwise the float points (sampled).
struct UnitSet {
  std::vector<Vector<Q>> exact;
  std::vector<Vector<double>> approx;
  bool sampled = false;
};

UnitSet find_units(const Source& src, const Options& o) {
  UnitSet out;
  const Algebra<Q>& A = src.algebra;
  if (!A.unital()) return out;
  UnitLocus L;
  if (src.family && src.family->family == Family::Tn) L = classify_locus_tn(*src.family, 50, o.seed);
  else L = solve_units_sampled(A, NewtonOptions{o.samples, o.seed, 1e-10});
  const bool continuous = L.kind != LocusKind::FiniteSet && L.kind != LocusKind::SampledCloud;
  bool all_exact = !continuous;
  for (const auto& p : L.points) {
    Vector<Q> q;
    for (double x : p) q.push_back(Q(std::lround(x * 720)) / 720);
    if (verify_unit(A, std::span<const Q>(q), 0.0)) out.exact.push_back(q);
    else all_exact = false;
  }
  out.approx = L.points;
  out.sampled = continuous || L.kind == LocusKind::SampledCloud;
  if (!all_exact) out.exact.clear();
  return out;
}

IdentityContext<Q> c_context(const Algebra<Q>& A) {
  auto i = A.index_of("i");
  if (!A.unital() || !i) throw ContextError("C-associativity needs a unital algebra with a basis vector labelled i");
  IdentityContext<Q> ctx;
  ctx.c_span = std::make_pair(A.one(), A.basis(*i));
  return ctx;
}

template <class S>
std::string report_text(const IdentityReport<S>& r, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << identity_name(r.kind) << ": " << (r.holds ? "holds" : "fails") << " [" << r.method.to_string() << "]\n";
  if (r.witness) {
    os << "  witness x = " << element_text(labels, r.witness->x) << ", y = " << element_text(labels, r.witness->y);
    if (!r.witness->z.empty()) os << ", z = " << element_text(labels, r.witness->z);
    os << "\n  defect = " << element_text(labels, r.witness->defect) << "\n";
  }
  return os.str();
}

int cmd_describe(const Options& o) {
  Source src = load_source(o);
  const Algebra<Q>& A = src.algebra;
  std::ostringstream os;
  os << "dim " << A.dim() << (A.unital() ? ", unital" : ", no unit") << "\n";
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Vector<Q> p = A.mul(A.unit_vector(i), A.unit_vector(j));
      os << A.labels()[i] << " * " << A.labels()[j] << " = " << element_text(A.labels(), p) << "\n";
    }
  emit(o, algebra_json(A), os.str());
  return kOk;
}

int cmd_check(const Options& o) {
  Source src = load_source(o);
  const Algebra<Q>& A = src.algebra;
  std::vector<IdentityKind> kinds;
  for (const auto& name : o.identities) {
    auto k = identity_from_name(name);
    if (!k) throw UsageError("unknown identity '" + name + "'");
    kinds.push_back(*k);
  }
  if (kinds.empty())
    for (const auto& [k, name] : identity_names())
      if (!needs_c_span(k)) kinds.push_back(k);

  std::optional<UnitSet> units;
  bool all_hold = true;
  for (IdentityKind kind : kinds) {
    std::string text;
    Json j;
    bool holds = true;
    if (is_partial(kind)) {
      if (!units) units = find_units(src, o);
      if (!units->exact.empty()) {
        IdentityContext<Q> ctx;
        for (const auto& u : units->exact) ctx.units.push_back(A.element(u));
        ctx.units_sampled = units->sampled;
        auto r = check_identity(A, kind, ctx);
        holds = r.holds;
        j = identity_report_json(r);
        text = report_text(r, A.labels());
      } else if (!units->approx.empty()) {
        Algebra<double> Af = A.to_float(o.eps);
        IdentityContext<double> ctx;
        for (const auto& u : units->approx) ctx.units.push_back(Af.element(u));
        ctx.units_sampled = true;
        auto r = check_identity(Af, kind, ctx);
        holds = r.holds;
        j = identity_report_json(r);
        text = report_text(r, A.labels());
      } else {
        j = {{"kind", identity_name(kind)}, {"holds", true}, {"witness", nullptr}, {"method", "vacuous(no imaginary units)"}};
        text = identity_name(kind) + ": holds [vacuous: no imaginary units found]\n";
      }
    } else {
      IdentityContext<Q> ctx;
      if (needs_c_span(kind)) ctx = c_context(A);
      auto r = check_identity(A, kind, ctx);
      holds = r.holds;
      j = identity_report_json(r);
      text = report_text(r, A.labels());
    }
    all_hold = all_hold && holds;
    emit(o, j, text);
  }
  return all_hold ? kOk : kCheckFailed;
}

int cmd_units(const Options& o) {
  Source src = load_source(o);
  UnitLocus L;
  if (src.family && src.family->family == Family::Tn) L = classify_locus_tn(*src.family, 50, o.seed);
  else L = solve_units_sampled(src.algebra, NewtonOptions{o.samples, o.seed, 1e-10});
  std::ostringstream os;
  os << "locus: " << locus_kind_name(L.kind) << "\n";
  if (L.equation) os << "equation: " << L.equation->normalized().text() << " in coordinates of xi + yj + zk\n";
  os << "points: " << L.points.size() << "\n";
  for (std::size_t k = 0; k < L.points.size() && k < 50; ++k) os << "  " << element_text(src.algebra.labels(), L.points[k]) << "\n";
  emit(o, locus_json(L), os.str());
  return kOk;
}

int cmd_nucleus(const Options& o) {
  Source src = load_source(o);
  auto N = commutative_nucleus(src.algebra);
  Json basis = Json::array();
  std::ostringstream os;
  os << "commutative nucleus, dim " << N.size() << "\n";
  for (const auto& e : N) {
    basis.push_back(vector_json(e.coords()));
    os << "  " << element_text(src.algebra.labels(), e.coords()) << "\n";
  }
  emit(o, Json{{"dim", N.size()}, {"basis", basis}}, os.str());
  return kOk;
}

Matrix<Q> parse_map(const std::string& text, std::size_t n) {
  std::vector<std::vector<Q>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<Q> r;
    std::stringstream cs(row);
    std::string cell;
    while (std::getline(cs, cell, ',')) r.push_back(parse_rational(cell));
    rows.push_back(std::move(r));
  }
  if (rows.size() == 1 && rows[0].size() == n) return Matrix<Q>::diagonal(rows[0]);
  if (rows.size() != n) throw UsageError("--map needs n diagonal entries or n rows separated by ';'");
  Matrix<Q> m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw UsageError("--map row length differs from the dimension");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

int cmd_decompose(const Options& o) {
  Source src = load_source(o);
  if (o.map.empty()) throw UsageError("decompose needs --map");
  Matrix<Q> M;
  try {
    M = parse_map(o.map, src.algebra.dim());
  } catch (const ParseError& e) {
    throw UsageError(std::string("--map: ") + e.what());
  }
  auto d = reflection_decompose(src.algebra, LinearMap<Q>(src.algebra, M));
  auto div = is_division_sampled(src.algebra, o.samples, o.seed);
  Json j = decomposition_json(d);
  j["division_sampled"] = div.no_zero_divisor_found;
  j["zero_divisor"] = div.witness ? vector_json(*div.witness) : Json(nullptr);
  const auto& L = src.algebra.labels();
  std::ostringstream os;
  os << "B: ";
  for (const auto& b : d.B_basis) os << element_text(L, b) << "; ";
  os << "\nC: ";
  for (const auto& c : d.C_basis) os << element_text(L, c) << "; ";
  os << "\n(1, i, w, v) = ";
  for (const auto& t : d.tp_basis) os << "[" << element_text(L, t) << "] ";
  os << "\nT_p parameters:";
  for (std::size_t k = 0; k < 8; ++k) os << " " << tp_param_names()[k] << "=" << format_rational(d.tp_params[k]);
  os << "\n";
  for (const auto& [name, good] : d.invariants) os << "  " << (good ? "ok   " : "FAIL ") << name << "\n";
  os << "division (sampled): " << (div.no_zero_divisor_found ? "no zero divisor found" : "zero divisor found") << "\n";
  emit(o, j, os.str());
  return d.all_invariants_hold() ? kOk : kCheckFailed;
}

std::string matrix_text(const Matrix<double>& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << "]\n";
  }
  return os.str();
}

int cmd_classify(const Options& o) {
  Source src = load_source(o);
  if (src.family && src.family->family == Family::Tn) {
    auto c = classify_middle_c(*src.family, MiddleCOptions{o.eps, 50, o.seed});
    std::ostringstream os;
    os << "type: " << middle_c_target_name(c.target) << "\n";
    if (!c.reason.empty()) os << "reason: " << c.reason << "\n";
    if (c.target != MiddleCTarget::Unclassified)
      os << "witness (" << (c.exact ? "exact" : "float") << ", " << (c.witness_verified ? "verified" : "NOT verified")
         << "):\n" << matrix_text(c.witness);
    emit(o, middle_c_json(c), os.str());
    return kOk;
  }
  auto c = classify_tp_lie(lieify(src.algebra), o.eps);
  std::ostringstream os;
  os << "type: " << lie_type_name(c.type) << "\n";
  if (!c.reason.empty()) os << "reason: " << c.reason << "\n";
  if (c.type != LieType::Unrecognized) {
    os << "[v, w] = " << element_text({"1", "i"}, Vector<Q>{c.alpha, c.beta}) << ", parameter " << c.parameter << "\n";
    os << "witness (" << (c.exact ? "exact" : "float") << ", " << (c.witness_verified ? "verified" : "NOT verified")
       << "):\n" << matrix_text(c.witness);
  }
  os << "derived series dims:";
  for (auto d : c.derived_dims) os << " " << d;
  os << "\nKilling inertia (+,-,0): " << c.killing.positive << "," << c.killing.negative << "," << c.killing.zero << "\n";
  emit(o, lie_classification_json(c), os.str());
  return kOk;
}

int cmd_lieify(const Options& o) {
  Source src = load_source(o);
  auto L = lieify(src.algebra);
  auto jac = check_jacobi(L);
  const auto& labels = L.labels();
  Json brackets = Json::array();
  std::ostringstream os;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      Vector<Q> b = L.bracket(L.unit_vector(i), L.unit_vector(j));
      if (is_zero_vector<Q>(b, 0.0)) continue;
      brackets.push_back({{"x", labels[i]}, {"y", labels[j]}, {"value", vector_json(b)}});
      os << "[" << labels[i] << ", " << labels[j] << "] = " << element_text(labels, b) << "\n";
    }
  auto dims = derived_dims(L);
  os << "jacobi: " << (jac.holds ? "holds" : "fails") << "\nderived series dims:";
  for (auto d : dims) os << " " << d;
  os << "\n";
  Json j{{"labels", labels}, {"brackets", brackets}, {"jacobi", jac.holds}, {"derived_dims", dims}};
  emit(o, j, os.str());
  return jac.holds ? kOk : kCheckFailed;
}

int cmd_verify(const Options& o) {
  static const std::vector<std::string> modules = {"core", "catalog", "identities", "units", "structure", "lie"};
  if (!o.only.empty() && std::find(modules.begin(), modules.end(), o.only) == modules.end())
    throw UsageError("--only expects one of core, catalog, identities, units, structure, lie");
  auto outcomes = run_claims(SuiteOptions{o.eps, o.seed, o.samples}, o.only);
  bool all = true;
  std::size_t passed = 0;
  for (const auto& r : outcomes) {
    all = all && r.result.pass;
    passed += r.result.pass;
    if (o.format == "json") {
      std::cout << Json{{"id", r.claim.id}, {"module", r.claim.module}, {"criterion", r.claim.criterion},
                        {"anchor", r.claim.anchor}, {"pass", r.result.pass}, {"detail", r.result.detail}}
                       .dump()
                << "\n";
    } else {
      std::cout << (r.result.pass ? "PASS " : "FAIL ") << r.claim.id << "  [" << r.claim.anchor << "]";
      if (!r.result.detail.empty()) std::cout << "  " << r.result.detail;
      std::cout << "\n";
    }
  }
  if (o.format == "json")
    std::cout << Json{{"summary", {{"claims", outcomes.size()}, {"passed", passed}}}}.dump() << "\n";
  else
    std::cout << passed << "/" << outcomes.size() << " claims pass\n";
  return all ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"altkit: real nonassociative algebras from structure constants"};
  app.require_subcommand(1);
  Options o;

  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--algebra,--family", o.algebra, "catalog name: ak, tn, tc, tp, mplus, mzero, quaternions, complex");
    sub->add_option("--file", o.file, "algebra JSON file");
    sub->add_option("--param", o.params, "family parameter name=value (repeatable)");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--eps", o.eps, "float tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--samples", o.samples, "sample count")->check(CLI::PositiveNumber);
  };

  std::map<std::string, int (*)(const Options&)> handlers = {
      {"describe", cmd_describe}, {"check", cmd_check},       {"units", cmd_units},   {"nucleus", cmd_nucleus},
      {"decompose", cmd_decompose}, {"classify", cmd_classify}, {"lieify", cmd_lieify}, {"verify-paper", cmd_verify}};
  const std::map<std::string, std::string> help = {
      {"describe", "print the multiplication table"},
      {"check", "check identities (--identity, repeatable)"},
      {"units", "imaginary units {x : x^2 = -1}"},
      {"nucleus", "commutative nucleus"},
      {"decompose", "reflection decomposition (--map)"},
      {"classify", "middle C classification (tn) or commutator Lie type"},
      {"lieify", "commutator Lie algebra"},
      {"verify-paper", "run the verification suite"}};
  for (const auto& [name, fn] : handlers) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    add_common(sub);
    if (name == "verify-paper") {
      sub->add_option("--only", o.only, "restrict to one module");
      continue;
    }
    add_source(sub);
    if (name == "check") sub->add_option("--identity", o.identities, "identity name (repeatable)");
    if (name == "decompose") sub->add_option("--map", o.map, "diagonal 'd1,d2,...' or rows 'a,b;c,d'");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  for (const auto& [name, fn] : handlers) {
    if (!app.got_subcommand(name)) continue;
    try {
      return fn(o);
    } catch (const UsageError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const ContextError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      if (o.format == "json") std::cout << Json{{"error", e.what()}}.dump() << "\n";
      return kCheckFailed;
    }
  }
  return kUsage;
}
