#include "ghc/job.hpp"

#include "ghc/errors.hpp"
#include "ghc/parallel.hpp"
#include "ghc/random.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdio>
#include <filesystem>
#include <map>

namespace ghc {

namespace fs = std::filesystem;

namespace {

/// Typed access to a JSON object that records problems instead of throwing,
/// so a config reports every bad field at once.
class Params {
 public:
  Params(const Json& j, std::string prefix, std::vector<std::string>& issues)
      : j_(j), prefix_(std::move(prefix)), issues_(issues) {}

  bool has(const char* k) const { return j_.is_object() && j_.contains(k); }
  const Json& raw(const char* k) const { return j_.at(k); }

  void issue(const std::string& key, const std::string& msg) { issues_.push_back(prefix_ + key + ": " + msg); }

  long integer(const char* k, long def, long lo = LONG_MIN, long hi = LONG_MAX) {
    if (!has(k)) return def;
    const Json& v = raw(k);
    if (!v.is_number_integer()) {
      issue(k, "expected an integer");
      return def;
    }
    long x = v.get<long>();
    if (x < lo || x > hi) {
      issue(k, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
      return def;
    }
    return x;
  }

  bool boolean(const char* k, bool def) {
    if (!has(k)) return def;
    if (!raw(k).is_boolean()) {
      issue(k, "expected true or false");
      return def;
    }
    return raw(k).get<bool>();
  }

  std::string text(const char* k, std::string def, std::vector<std::string> allowed = {}) {
    if (!has(k)) return def;
    if (!raw(k).is_string()) {
      issue(k, "expected a string");
      return def;
    }
    auto s = raw(k).get<std::string>();
    if (!allowed.empty() && std::find(allowed.begin(), allowed.end(), s) == allowed.end()) {
      std::string list;
      for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
      issue(k, "must be one of " + list);
      return def;
    }
    return s;
  }

  Rational rational_value(const Json& v, const std::string& key) {
    try {
      if (v.is_number_integer()) return Rational(v.get<long>());
      if (v.is_string()) return parse_rational(v.get<std::string>());
    } catch (const std::exception&) {
    }
    issue(key, "expected an exact rational such as \"3/2\"");
    return Rational(1);
  }

  std::vector<Rational> rationals(const char* k, std::vector<Rational> def, const Rational& min) {
    if (!has(k)) return def;
    const Json& v = raw(k);
    std::vector<Rational> out;
    if (!v.is_array()) {
      out.push_back(rational_value(v, k));
    } else {
      for (const auto& x : v) out.push_back(rational_value(x, k));
    }
    if (out.empty()) issue(k, "grid must be nonempty");
    for (const auto& x : out)
      if (x < min) {
        issue(k, "values must be >= " + to_string(min));
        break;
      }
    return out.empty() ? def : out;
  }

  std::vector<long> integers(const char* k, std::vector<long> def, long min) {
    if (!has(k)) return def;
    const Json& v = raw(k);
    std::vector<long> out;
    auto take = [&](const Json& x) {
      if (!x.is_number_integer() || x.get<long>() < min)
        issue(k, "expected integers >= " + std::to_string(min));
      else
        out.push_back(x.get<long>());
    };
    if (v.is_array()) {
      for (const auto& x : v) take(x);
    } else {
      take(v);
    }
    if (out.empty()) {
      issue(k, "list must be nonempty");
      return def;
    }
    return out;
  }

 private:
  const Json& j_;
  std::string prefix_;
  std::vector<std::string>& issues_;
};

CoefficientKind coefficient_kind(const std::string& s) {
  if (s == "integer") return CoefficientKind::Integer;
  if (s == "rational") return CoefficientKind::Rational;
  return CoefficientKind::RationalModulus;
}

using NamedChains = std::vector<std::pair<std::string, Chain>>;

// "chains": [{"id": .., "chain": {..}} | chain json] or "random": {..}
NamedChains chains_from(Params& p, const Group& group, std::uint64_t seed, std::uint64_t stream,
                        std::vector<std::string>& issues, int default_degree = 1) {
  NamedChains out;
  if (p.has("chains")) {
    const Json& list = p.raw("chains");
    if (!list.is_array() || list.empty()) {
      p.issue("chains", "expected a nonempty list");
      return out;
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Json& item = list[i];
      std::string id = "chain" + std::to_string(i);
      try {
        if (item.is_object() && item.contains("chain")) {
          if (item.contains("id")) id = item.at("id").get<std::string>();
          out.emplace_back(id, chain_from_json(group, item.at("chain")));
        } else {
          out.emplace_back(id, chain_from_json(group, item));
        }
      } catch (const std::exception& e) {
        p.issue("chains[" + std::to_string(i) + "]", e.what());
      }
    }
    return out;
  }
  Json desc = p.has("random") ? p.raw("random") : Json::object();
  Params r(desc, "params.random.", issues);
  ChainShape shape;
  const long count = r.integer("count", 20, 1, 100000);
  shape.degree = static_cast<int>(r.integer("degree", default_degree, 0, 8));
  shape.terms = static_cast<int>(r.integer("terms", 4, 1, 1000));
  shape.radius = static_cast<int>(r.integer("radius", 4, 0, 64));
  shape.homogeneous_percent = static_cast<unsigned>(r.integer("homogeneous_percent", 50, 0, 100));
  shape.coefficients =
      coefficient_kind(r.text("coefficients", "rational-modulus", {"integer", "rational", "rational-modulus"}));
  for (long i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, stream * 1000003 + static_cast<std::uint64_t>(i)));
    out.emplace_back("random" + std::to_string(i), random_chain(group, rng, shape));
  }
  return out;
}

std::optional<Cochain> cochain_param(Params& p, const Group& group) {
  if (!p.has("cochain")) {
    p.issue("cochain", "required");
    return std::nullopt;
  }
  try {
    return cochain_from_json(group, p.raw("cochain"));
  } catch (const std::exception& e) {
    p.issue("cochain", e.what());
    return std::nullopt;
  }
}

struct Grid {
  std::vector<EtaParams> points;
};

Grid grid_from(Params& p, std::vector<std::string>& issues) {
  Json desc = p.has("grid") ? p.raw("grid") : Json::object();
  Params g(desc, "params.grid.", issues);
  auto Ns = g.rationals("N", {Rational(1)}, Rational(1));
  auto ms = g.integers("m", {0}, 0);
  auto lambdas = g.rationals("lambda", {Rational(1)}, Rational(1));
  Grid out;
  for (const auto& N : Ns)
    for (long m : ms)
      for (const auto& l : lambdas) out.points.push_back(EtaParams{N, static_cast<unsigned>(m), l});
  return out;
}

Json params_json(const EtaParams& p) {
  return {{"N", to_string(p.N)}, {"m", p.m}, {"lambda", to_string(p.lambda)}};
}

struct Output {
  Json results;
  std::map<std::string, std::string> files;  // relative to the output directory
};

struct Context {
  const JobConfig& config;
  const Group& group;
  std::vector<std::string>& issues;
  /// Parse parameters only.
  bool dry;
};

void check_issues(const std::vector<std::string>& issues) {
  if (issues.empty()) return;
  std::string msg = "invalid config:";
  for (const auto& i : issues) msg += "\n  - " + i;
  throw ConfigError(msg);
}

Output task_homology(Context& cx) {
  Params p(cx.config.params, "params.", cx.issues);
  ComplexVariant variant;
  try {
    variant = ComplexVariant::parse(p.text("variant", "hochschild"), static_cast<int>(p.integer("k", 3, 1, 64)));
  } catch (const std::exception& e) {
    p.issue("variant", e.what());
  }
  const auto degrees = p.integers("degrees", {0}, 0);
  const int n_max = static_cast<int>(*std::max_element(degrees.begin(), degrees.end()));
  int radius = 0;
  if (p.has("radius")) {
    radius = static_cast<int>(p.integer("radius", 0, 0, 64));
  } else if (cx.group.kind() == GroupKind::FiniteTable) {
    radius = cx.group.diameter() * (n_max + 2);
  } else {
    p.issue("radius", "required for infinite groups");
  }
  const bool serial = p.text("rank", "blocked", {"blocked", "serial"}) == "serial";
  const bool reps = p.boolean("representatives", false);
  const bool exporting = p.boolean("export", false);
  if (cx.dry) return {};
  check_issues(cx.issues);

  BuildOptions opts{cx.config.convention, cx.config.cap};
  auto complex = TruncatedComplex::build(cx.group, n_max, radius, variant, opts);
  Output out;
  Json& r = out.results;
  r["variant"] = variant.name();
  r["R"] = radius;
  r["is_complex"] = complex.is_complex();
  Json sizes = Json::array();
  for (int n = 0; n <= n_max + 1; ++n) sizes.push_back(complex.space(n).basis.size());
  r["basis_sizes"] = sizes;
  Json hs = Json::array();
  if (complex.is_complex()) {
    for (long d : degrees) {
      auto h = complex.homology(static_cast<int>(d), serial ? RankMethod::Serial : RankMethod::Blocked, reps);
      Json j = homology_to_json(h);
      if (reps) {
        Json list = Json::array();
        for (const auto& v : h.representatives) {
          Chain x(static_cast<int>(d));
          for (const auto& [i, c] : v) x.add(complex.space(static_cast<int>(d)).basis[i].tuple, Scalar(c));
          list.push_back(chain_to_json(cx.group, x));
        }
        j["representatives"] = list;
      }
      hs.push_back(j);
    }
  }
  r["homology"] = hs;
  r["passed"] = complex.is_complex();
  if (exporting) {
    const std::string dir = cx.config.job_id + ".export/";
    for (int n = 0; n <= n_max + 1; ++n) {
      out.files[dir + "basis_" + std::to_string(n) + ".txt"] = basis_to_text(cx.group, complex.space(n));
      if (n >= 1) out.files[dir + "d_" + std::to_string(n) + ".coo"] = matrix_to_coo(complex.boundary(n));
    }
  }
  return out;
}

Output task_growth(Context& cx) {
  Params p(cx.config.params, "params.", cx.issues);
  auto phi = cochain_param(p, cx.group);
  GrowthOptions opts;
  opts.lambdas = p.rationals("lambdas", opts.lambdas, Rational(1));
  for (const auto& l : opts.lambdas)
    if (l <= 1) p.issue("lambdas", "growth needs lambda > 1");
  auto radii = p.integers("radii", {4, 6, 8, 10}, 0);
  opts.radii.assign(radii.begin(), radii.end());
  opts.cap = cx.config.cap;
  if (cx.dry) return {};
  check_issues(cx.issues);

  auto rep = growth_fit(cx.group, *phi, opts);
  Output out;
  out.results = growth_to_json(rep);
  out.results["passed"] = true;
  out.files[cx.config.job_id + ".growth.csv"] = growth_to_csv(rep);
  return out;
}

Output task_seminorm(Context& cx) {
  Params p(cx.config.params, "params.", cx.issues);
  auto chains = chains_from(p, cx.group, cx.config.seed, 1, cx.issues);
  auto grid = grid_from(p, cx.issues);
  const bool bounded = p.boolean("boundedness", true);
  if (cx.dry) return {};
  check_issues(cx.issues);

  Output out;
  Json etas = Json::array();
  bool monotone = true;
  for (const auto& [id, x] : chains) {
    for (const auto& params : grid.points) {
      auto v = eta_seminorm(cx.group, x, params);
      etas.push_back({{"chain", id}, {"params", params_json(params)}, {"eta", interval_to_json(v)}});
      // weight monotonicity: eta_{N,m} <= eta_{N,m+1} and eta_{2N,m} <= eta_{N,m}
      EtaParams up = params;
      ++up.m;
      EtaParams wide = params;
      wide.N *= 2;
      if (certified_le(v, eta_seminorm(cx.group, x, up)) == Certified::False ||
          certified_le(eta_seminorm(cx.group, x, wide), v) == Certified::False)
        monotone = false;
    }
  }
  out.results["eta"] = etas;
  out.results["weight_monotone"] = monotone;

  bool within = true;
  Json checks = Json::array();
  if (bounded) {
    std::map<int, std::vector<Chain>> by_degree;
    for (const auto& [id, x] : chains)
      if (!x.is_zero()) by_degree[x.degree()].push_back(x);
    for (const auto& [degree, samples] : by_degree)
      for (const auto& params : grid.points)
        for (BoundaryOp op : {BoundaryOp::b, BoundaryOp::B}) {
          if (op == BoundaryOp::b && degree < 1) continue;
          auto rep = boundedness_check(cx.group, op, params, degree, samples, cx.config.convention);
          within = within && rep.within_bound;
          Json j = boundedness_to_json(rep);
          j["params"] = params_json(params);
          checks.push_back(j);
        }
  }
  out.results["boundedness"] = checks;
  out.results["passed"] = monotone && within;
  return out;
}

Output task_norms(Context& cx) {
  Params p(cx.config.params, "params.", cx.issues);
  std::vector<std::pair<std::string, AlgebraElement>> elements;
  if (p.has("elements")) {
    const Json& list = p.raw("elements");
    if (!list.is_array() || list.empty()) p.issue("elements", "expected a nonempty list");
    for (std::size_t i = 0; list.is_array() && i < list.size(); ++i) {
      try {
        const Json& item = list[i];
        std::string id = item.contains("id") ? item.at("id").get<std::string>() : "element" + std::to_string(i);
        elements.emplace_back(id, algebra_from_json(cx.group, item.contains("element") ? item.at("element") : item));
      } catch (const std::exception& e) {
        p.issue("elements[" + std::to_string(i) + "]", e.what());
      }
    }
  } else {
    Json desc = p.has("random") ? p.raw("random") : Json::object();
    Params r(desc, "params.random.", cx.issues);
    const long count = r.integer("count", 10, 1, 10000);
    const int terms = static_cast<int>(r.integer("terms", 3, 1, 64));
    const int len = static_cast<int>(r.integer("max_length", 3, 0, 32));
    for (long i = 0; i < count; ++i) {
      Rng rng(derive_seed(cx.config.seed, 2000003 + static_cast<std::uint64_t>(i)));
      elements.emplace_back("random" + std::to_string(i), random_algebra_element(cx.group, rng, terms, len));
    }
  }
  auto lambdas = p.rationals("lambdas", {Rational(1), Rational(2)}, Rational(1));
  const bool reduced_ok = cx.group.kind() != GroupKind::Free;
  const bool reduced = p.boolean("reduced", reduced_ok);
  if (reduced && !reduced_ok) p.issue("reduced", "the reduced norm is not available for free groups");
  ReducedNormOptions nopts;
  nopts.resolution = static_cast<int>(p.integer("resolution", nopts.resolution, 4, 4096));
  if (cx.dry) return {};
  check_issues(cx.issues);

  Output out;
  Json rows = Json::array();
  std::string csv = "element,seminorm,lo,hi,exactness\n";
  auto add_csv = [&](const std::string& id, const std::string& name, const Interval& v) {
    csv += id + "," + name + "," + to_string(v.lo) + "," + to_string(v.hi) + "," +
           (v.exact() ? "exact" : "enclosure") + "\n";
  };
  bool below_nu1 = true;
  for (const auto& [id, x] : elements) {
    Json row = {{"element", id}};
    Json nus = Json::object();
    for (const auto& l : lambdas) {
      auto v = nu_lambda(cx.group, x, l);
      nus[to_string(l)] = interval_to_json(v);
      add_csv(id, "nu_" + to_string(l), v);
    }
    row["nu"] = nus;
    if (reduced) {
      auto r = reduced_norm(cx.group, x, nopts);
      auto m = amax_seminorm(cx.group, x, nopts);
      row["reduced"] = interval_to_json(r.value);
      row["max"] = interval_to_json(m.value);
      add_csv(id, "reduced", r.value);
      add_csv(id, "max", m.value);
      const bool ok = certified_le(r.value, nu_lambda(cx.group, x, Rational(1))) == Certified::True;
      row["reduced_le_nu1"] = ok;
      below_nu1 = below_nu1 && ok;
    }
    rows.push_back(row);
  }
  out.results["elements"] = rows;
  bool unconditional = true;
  if (reduced) {
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      Rng rng(derive_seed(cx.config.seed, 3000017 + i));
      const auto& x = elements[i].second;
      AlgebraElement y;
      for (const auto& [g, c] : x.terms()) y.add(g, rng.chance(50) ? c * Scalar(Rational(0), Rational(1)) : -c);
      y.add(random_element(cx.group, rng, 3), random_coefficient(rng, CoefficientKind::RationalModulus));
      pairs.emplace_back(x, y);
    }
    auto rep = check_unconditional(cx.group, Seminorm::max(), pairs, nopts);
    out.results["unconditional"] = unconditional_to_json(rep);
    unconditional = rep.violations.empty();
  }
  out.results["passed"] = below_nu1 && unconditional;
  out.files[cx.config.job_id + ".norms.csv"] = csv;
  return out;
}

Output task_pairing(Context& cx) {
  Params p(cx.config.params, "params.", cx.issues);
  auto c = cochain_param(p, cx.group);
  const auto policy = p.text("normalize", "require", {"require", "zero-degenerate"}) == "require"
                          ? NormalizationPolicy::Require
                          : NormalizationPolicy::ZeroDegenerate;
  const int verify_radius = static_cast<int>(p.integer("verify_radius", 2, 0, 16));
  const int support_radius = static_cast<int>(p.integer("support_radius", 3, 0, 16));
  const int cocycle_radius = static_cast<int>(p.integer("cocycle_radius", 3, 0, 16));
  const long cocycle_samples = p.integer("cocycle_samples", 20, 0, 100000);
  NamedChains chains;
  if (c) chains = chains_from(p, cx.group, cx.config.seed, 4, cx.issues, c->arity());
  if (cx.dry) return {};
  check_issues(cx.issues);

  auto tc = certify_cyclic(cx.group, extend_to_cyclic(cx.group, *c, policy, cx.config.convention), verify_radius,
                           cx.config.cap);
  Output out;
  Json& r = out.results;
  r["cochain"] = c->name();
  r["arity"] = c->arity();
  r["certificate"] = to_string(tc.certificate());
  r["notes"] = tc.notes();
  const bool support_ok = !support_defect(cx.group, tc, support_radius, cx.config.cap);
  r["support_ok"] = support_ok;

  bool factoring = true;
  Json pairings = Json::array();
  for (const auto& [id, x] : chains) {
    auto f = homogeneous_factoring_check(cx.group, tc, x);
    factoring = factoring && f.equal;
    pairings.push_back(
        {{"chain", id}, {"value", to_string(f.full)}, {"homogeneous", to_string(f.homogeneous)}, {"equal", f.equal}});
  }
  r["pairings"] = pairings;

  std::vector<Chain> ys;
  ChainShape shape;
  shape.degree = c->arity() + 1;
  shape.terms = 4;
  shape.radius = 4;
  shape.homogeneous_percent = 50;
  shape.coefficients = CoefficientKind::Rational;
  for (long i = 0; i < cocycle_samples; ++i) {
    Rng rng(derive_seed(cx.config.seed, 5000011 + static_cast<std::uint64_t>(i)));
    ys.push_back(random_chain(cx.group, rng, shape));
  }
  auto cc = cocycle_check(cx.group, tc, ys, cocycle_radius, cx.config.cap);
  r["cocycle"] = {{"base_is_cocycle", cc.base_is_cocycle},
                  {"samples", cc.samples},
                  {"nonzero_defects", cc.nonzero},
                  {"passed", cc.passed()}};
  r["passed"] = support_ok && factoring && cc.passed();
  return out;
}

Output task_bound(Context& cx) {
  Params p(cx.config.params, "params.", cx.issues);
  auto c = cochain_param(p, cx.group);
  NamedChains chains;
  if (c) chains = chains_from(p, cx.group, cx.config.seed, 6, cx.issues, c->arity());
  auto grid = grid_from(p, cx.issues);
  const bool has_cover = p.has("cover_radius");
  const int cover = static_cast<int>(p.integer("cover_radius", 0, 0, 64));
  const auto source =
      p.text("constant", "fitted", {"fitted", "declared"}) == "fitted" ? ConstantSource::Fitted : ConstantSource::Declared;
  if (cx.dry) return {};
  check_issues(cx.issues);

  struct Item {
    std::size_t chain;
    std::size_t point;
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < chains.size(); ++i)
    for (std::size_t k = 0; k < grid.points.size(); ++k) items.push_back({i, k});
  std::vector<BoundCertificate> certs(items.size());
  parallel_for(items.size(), [&](std::size_t i) {
    const auto& [id, x] = chains[items[i].chain];
    int radius = cover;
    if (!has_cover)
      for (const auto& [t, coef] : x.terms())
        radius = std::max(radius, cx.group.total_length(t) - cx.group.word_length(t[0]));
    certs[i] = verify_pairing_bound(cx.group, *c, x, grid.points[items[i].point], radius, source, cx.config.cap);
    certs[i].chain_id = id;
  });
  Output out;
  Json list = Json::array();
  bool all = true;
  for (const auto& cert : certs) {
    list.push_back(certificate_to_json(cert));
    all = all && cert.verdict == Verdict::Pass;
  }
  out.results["certificates"] = list;
  out.results["passed"] = all;
  return out;
}

Output task_identity(Context& cx) {
  Params p(cx.config.params, "params.", cx.issues);
  IdentitySuiteOptions opts;
  opts.seed = cx.config.seed;
  opts.samples = static_cast<std::size_t>(p.integer("samples", 100, 1, 10000000));
  opts.max_degree = static_cast<int>(p.integer("max_degree", 3, 1, 8));
  opts.terms = static_cast<int>(p.integer("terms", 4, 1, 1000));
  opts.radius = static_cast<int>(p.integer("radius", 6, 0, 64));
  opts.convention = cx.config.convention;
  if (cx.dry) return {};
  check_issues(cx.issues);

  auto rep = run_identity_suite(cx.group, opts);
  Output out;
  out.results = identity_to_json(rep);
  return out;
}

Output dispatch(Context& cx) {
  const auto& t = cx.config.task;
  if (t == "homology") return task_homology(cx);
  if (t == "growth") return task_growth(cx);
  if (t == "seminorm") return task_seminorm(cx);
  if (t == "norms") return task_norms(cx);
  if (t == "pairing") return task_pairing(cx);
  if (t == "bound") return task_bound(cx);
  if (t == "identity-suite") return task_identity(cx);
  throw ConfigError("unknown task '" + t + "'");
}

Output compute(const JobConfig& config) {
  std::vector<std::string> issues;
  const Group group = config.make_group();
  Context cx{config, group, issues, false};
  Output out = dispatch(cx);
  Json head = {{"task", config.task},
               {"group", group.name()},
               {"seed", config.seed},
               {"convention", to_string(config.convention)}};
  head.update(out.results);
  out.results = std::move(head);
  return out;
}

std::string resolve(const std::string& base, const std::string& path) {
  fs::path p(path);
  return p.is_absolute() ? p.string() : (fs::path(base) / p).lexically_normal().string();
}

// replaces {"file": path} references with the referenced documents
void inline_files(Json& params, const std::string& base, std::vector<std::string>& issues) {
  auto load = [&](const std::string& where, const std::string& path) -> std::optional<Json> {
    const auto full = resolve(base, path);
    if (!fs::exists(full)) {
      issues.push_back(where + ": file '" + full + "' does not exist");
      return std::nullopt;
    }
    try {
      return Json::parse(read_text(full));
    } catch (const std::exception& e) {
      issues.push_back(where + ": " + e.what());
      return std::nullopt;
    }
  };
  for (const char* key : {"chains", "elements"}) {
    if (!params.contains(key) || !params[key].is_array()) continue;
    const char* slot = std::string(key) == "chains" ? "chain" : "element";
    for (std::size_t i = 0; i < params[key].size(); ++i) {
      Json& item = params[key][i];
      if (!item.is_object() || !item.contains("file")) continue;
      const std::string path = item["file"].get<std::string>();
      if (auto doc = load("params." + std::string(key) + "[" + std::to_string(i) + "]", path)) {
        Json replaced = {{slot, *doc}};
        replaced["id"] = item.contains("id") ? item["id"] : Json(fs::path(path).stem().string());
        item = replaced;
      }
    }
  }
  if (params.contains("cochain") && params["cochain"].is_object() && params["cochain"].contains("file")) {
    if (auto doc = load("params.cochain", params["cochain"]["file"].get<std::string>())) params["cochain"] = *doc;
  }
}

std::vector<Scalar> scalars(const Json& j) {
  std::vector<Scalar> out;
  for (const auto& v : j) out.push_back(v.is_string() ? parse_scalar(v.get<std::string>()) : Scalar(v.get<long>()));
  return out;
}

Rational rational_of(const Json& v) {
  return v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
}

}  // namespace

Cochain cochain_from_json(const Group& group, const Json& desc) {
  if (!desc.is_object() || !desc.contains("type")) throw ParseError("cochain description needs a \"type\"");
  const std::string type = desc.at("type").get<std::string>();
  auto arity = [&]() { return desc.contains("arity") ? desc.at("arity").get<int>() : 1; };
  std::optional<Cochain> c;
  if (type == "zero") {
    c = cochains::zero(arity());
  } else if (type == "homomorphism") {
    c = cochains::homomorphism(group, scalars(desc.at("values")));
  } else if (type == "length_power") {
    c = cochains::length_power(group, arity(), desc.value("degree", 1u));
  } else if (type == "length_exponential") {
    c = cochains::length_exponential(group, arity(), rational_of(desc.at("base")));
  } else if (type == "indicator") {
    Tuple t;
    for (const auto& g : desc.at("tuple")) t.push_back(group.parse(g.get<std::string>()));
    c = cochains::indicator(t, desc.contains("value") ? parse_scalar(desc.at("value").get<std::string>()) : Scalar(1));
  } else if (type == "area") {
    c = cochains::area(group, desc.value("i", 0), desc.value("j", 1));
  } else if (type == "sum" || type == "product") {
    const auto& list = desc.at(type == "sum" ? "terms" : "factors");
    if (!list.is_array() || list.empty()) throw ParseError(type + " needs a nonempty list");
    c = cochain_from_json(group, list[0]);
    for (std::size_t i = 1; i < list.size(); ++i) {
      auto next = cochain_from_json(group, list[i]);
      c = type == "sum" ? cochains::sum(*c, next) : cochains::product(*c, next);
    }
  } else if (type == "scale") {
    c = cochains::scale(parse_scalar(desc.at("by").get<std::string>()), cochain_from_json(group, desc.at("of")));
  } else if (type == "coboundary") {
    c = bar_coboundary(group, cochain_from_json(group, desc.at("of")));
  } else {
    throw ParseError("unknown cochain type '" + type + "'");
  }
  if (desc.value("normalize", false)) c = cochains::zero_degenerate(group, *c);
  return *c;
}

JobConfig JobConfig::from_json(const Json& j, const std::string& base_dir) {
  if (!j.is_object()) throw ConfigError("invalid config: expected a JSON object");
  std::vector<std::string> issues;
  Params p(j, "", issues);
  JobConfig c;
  static const std::vector<std::string> known = {"job", "group", "task", "seed", "cap",
                                                 "convention", "out", "cache", "params"};
  for (const auto& [k, v] : j.items())
    if (std::find(known.begin(), known.end(), k) == known.end()) issues.push_back(k + ": unknown field");

  c.job_id = p.text("job", c.job_id);
  if (c.job_id.empty() || c.job_id.find_first_of("/\\") != std::string::npos)
    issues.push_back("job: must be a nonempty name without path separators");
  c.task = p.text("task", "", {std::begin(kTasks), std::end(kTasks)});
  if (c.task.empty() && !p.has("task")) issues.push_back("task: required");
  if (p.has("seed")) {
    const auto& seed = j.at("seed");
    if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0))
      issues.push_back("seed: expected a nonnegative integer");
    else
      c.seed = j.at("seed").get<std::uint64_t>();
  }
  c.cap = static_cast<std::size_t>(p.integer("cap", static_cast<long>(c.cap), 1));
  c.convention = parse_convention(p.text("convention", "standard", {"standard", "twisted"}));
  c.out = resolve(base_dir, p.text("out", c.out));
  c.use_cache = p.boolean("cache", true);
  if (p.has("params")) {
    if (!j.at("params").is_object())
      issues.push_back("params: expected an object");
    else
      c.params = j.at("params");
  }
  inline_files(c.params, base_dir, issues);

  c.group = p.text("group", c.group);
  std::optional<Group> group;
  try {
    if (c.group.rfind("file:", 0) == 0) {
      const auto path = resolve(base_dir, c.group.substr(5));
      if (!fs::exists(path)) throw ConfigError("file '" + path + "' does not exist");
      c.group_text = read_text(path);
      group = parse_group_text(c.group_text);
    } else {
      group = group_by_name(c.group);
    }
  } catch (const std::exception& e) {
    issues.push_back(std::string("group: ") + e.what());
  }
  if (group && !c.task.empty()) {
    Context cx{c, *group, issues, true};
    try {
      dispatch(cx);
    } catch (const std::exception& e) {
      issues.push_back(std::string("params: ") + e.what());
    }
  }
  check_issues(issues);
  return c;
}

Group JobConfig::make_group() const {
  if (!group_text.empty()) return parse_group_text(group_text);
  return group_by_name(group);
}

Json JobConfig::canonical() const {
  Json j = {{"task", task}, {"seed", seed}, {"cap", cap}, {"convention", to_string(convention)}, {"params", params}};
  if (group_text.empty())
    j["group"] = group;
  else
    j["group_text"] = group_text;
  return j;
}

std::string JobConfig::digest() const {
  const std::string text = canonical().dump() + "|" + kModuleVersion;
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json RunReport::to_json() const {
  return {{"job", job_id},
          {"task", task},
          {"config_digest", digest},
          {"module_version", kModuleVersion},
          {"passed", passed},
          {"wall_time_s", wall_time_s},
          {"cache_hits", cache_hits},
          {"results", results}};
}

Json compute_results(const JobConfig& config) { return compute(config).results; }

RunReport run_job(const JobConfig& config, bool write_outputs) {
  const auto start = std::chrono::steady_clock::now();
  RunReport rep;
  rep.job_id = config.job_id;
  rep.task = config.task;
  rep.digest = config.digest();

  const fs::path out_dir(config.out);
  const fs::path cache_file = out_dir / ".cache" / (rep.digest + ".json");
  bool cached = false;
  if (config.use_cache && fs::exists(cache_file)) {
    try {
      Json entry = Json::parse(read_text(cache_file.string()));
      rep.results = entry.at("results");
      for (const auto& [name, content] : entry.at("files").items())
        if (write_outputs) write_atomic((out_dir / name).string(), content.get<std::string>());
      cached = true;
      rep.cache_hits = 1;
    } catch (const std::exception&) {
      cached = false;
    }
  }
  if (!cached) {
    Output out = compute(config);
    rep.results = std::move(out.results);
    if (write_outputs) {
      for (const auto& [name, content] : out.files) write_atomic((out_dir / name).string(), content);
      if (config.use_cache)
        write_atomic(cache_file.string(), Json{{"results", rep.results}, {"files", out.files}}.dump());
    }
  }
  rep.passed = rep.results.value("passed", false);
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (write_outputs) {
    write_atomic((out_dir / (config.job_id + ".results.json")).string(), rep.results.dump(2) + "\n");
    write_atomic((out_dir / (config.job_id + ".report.json")).string(), rep.to_json().dump(2) + "\n");
  }
  return rep;
}

Json list_builtins(const std::string& user_dir) {
  Json groups = Json::array();
  auto describe = [](const Group& g, const std::string& name, const std::string& source) {
    Json j = {{"name", name}, {"kind", to_string(g.kind())}, {"source", source}};
    if (g.kind() == GroupKind::FiniteTable)
      j["order"] = g.order();
    else
      j["rank"] = g.rank();
    Json cochains = Json::array({"zero", "indicator", "length_power", "length_exponential"});
    if (g.kind() != GroupKind::FiniteTable) cochains.push_back("homomorphism");
    if (g.kind() == GroupKind::FreeAbelian && g.rank() >= 2) cochains.push_back("area");
    j["cochains"] = cochains;
    return j;
  };
  for (const char* name : {"Z/2", "Z/3", "Z/4", "S3", "Z2xZ2", "D4", "Z", "Z^2", "Z^3", "F2", "F3"})
    groups.push_back(describe(group_by_name(name), name, "builtin"));

  if (!user_dir.empty() && fs::is_directory(user_dir)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(user_dir))
      if (entry.is_regular_file() && entry.path().extension() == ".group") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      try {
        groups.push_back(describe(load_group_file(f.string()), "file:" + f.string(), "user"));
      } catch (const std::exception& e) {
        groups.push_back({{"name", "file:" + f.string()}, {"source", "user"}, {"error", e.what()}});
      }
    }
  }

  Json families = Json::array({
      Json{{"type", "zero"}, {"params", {{"arity", "integer >= 0"}}}},
      Json{{"type", "homomorphism"}, {"params", {{"values", "one scalar per generator"}}}},
      Json{{"type", "length_power"}, {"params", {{"arity", "integer >= 1"}, {"degree", "integer >= 0"}}}},
      Json{{"type", "length_exponential"}, {"params", {{"arity", "integer >= 1"}, {"base", "rational"}}}},
      Json{{"type", "indicator"}, {"params", {{"tuple", "list of elements"}, {"value", "scalar"}}}},
      Json{{"type", "area"}, {"params", {{"i", "coordinate"}, {"j", "coordinate"}}}},
      Json{{"type", "sum"}, {"params", {{"terms", "list of cochain descriptions"}}}},
      Json{{"type", "product"}, {"params", {{"factors", "list of cochain descriptions"}}}},
      Json{{"type", "scale"}, {"params", {{"by", "scalar"}, {"of", "cochain description"}}}},
      Json{{"type", "coboundary"}, {"params", {{"of", "cochain description"}}}},
  });
  return {{"groups", groups}, {"cochains", families}, {"tasks", Json(std::vector<std::string>(std::begin(kTasks), std::end(kTasks)))}};
}

int exit_code(const RunReport& report) { return report.passed ? 0 : 1; }

}  // namespace ghc
