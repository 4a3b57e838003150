#include "ghc/io.hpp"

#include "ghc/errors.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace ghc {

namespace fs = std::filesystem;

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError("expected a string or an integer, got " + j.dump());
}

}  // namespace

Json chain_to_json(const Group& group, const Chain& x) {
  Json terms = Json::array();
  for (const auto& [t, c] : x.terms()) {
    Json tuple = Json::array();
    for (const auto& g : t) tuple.push_back(group.format(g));
    terms.push_back({{"tuple", tuple}, {"coef", to_string(c)}});
  }
  return {{"degree", x.degree()}, {"terms", terms}};
}

Chain chain_from_json(const Group& group, const Json& j) {
  const int degree = field(j, "degree").get<int>();
  if (degree < 0) throw ParseError("chain degree must be >= 0");
  Chain x(degree);
  for (const auto& term : field(j, "terms")) {
    Tuple t;
    for (const auto& g : field(term, "tuple")) t.push_back(group.parse(text_of(g)));
    if (static_cast<int>(t.size()) != degree + 1)
      throw ParseError("tuple of length " + std::to_string(t.size()) + " in a degree " + std::to_string(degree) +
                       " chain");
    x.add(t, term.contains("coef") ? parse_scalar(text_of(term.at("coef"))) : Scalar(1));
  }
  return x;
}

Json algebra_to_json(const Group& group, const AlgebraElement& x) {
  Json terms = Json::array();
  for (const auto& [g, c] : x.terms()) terms.push_back({{"element", group.format(g)}, {"coef", to_string(c)}});
  return {{"terms", terms}};
}

AlgebraElement algebra_from_json(const Group& group, const Json& j) {
  AlgebraElement x;
  for (const auto& term : field(j, "terms"))
    x.add(group.parse(text_of(field(term, "element"))),
          term.contains("coef") ? parse_scalar(text_of(term.at("coef"))) : Scalar(1));
  return x;
}

Json interval_to_json(const Interval& v) {
  Json j;
  if (v.exact()) {
    j["exactness"] = "exact";
    j["value"] = to_string(v.lo);
  } else {
    j["exactness"] = "enclosure";
    j["lo"] = to_string(v.lo);
    j["hi"] = to_string(v.hi);
    j["width"] = to_double(v.width());
  }
  j["approx"] = to_double((v.lo + v.hi) / 2);
  return j;
}

Json homology_to_json(const HomologyResult& r) {
  return {{"variant", r.variant},         {"degree", r.degree},         {"R", r.radius},
          {"kernel_rank", r.kernel_rank}, {"image_rank", r.image_rank}, {"dim", r.dim}};
}

Json growth_to_json(const GrowthReport& r) {
  Json j;
  j["cochain"] = r.cochain;
  j["arity"] = r.arity;
  Json lambdas = Json::array();
  for (const auto& l : r.lambdas) lambdas.push_back(to_string(l));
  j["lambdas"] = lambdas;
  j["radii"] = r.radii;
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"lambda", to_string(row.lambda)}, {"R", row.radius}, {"C", interval_to_json(row.constant)}});
  j["constants"] = rows;
  Json stable = Json::object();
  for (const auto& l : r.lambdas) stable[to_string(l)] = r.stable(l);
  j["stable"] = stable;
  j["classification"] = to_string(r.classification);
  j["polynomial_degree"] = r.polynomial_degree ? Json(*r.polynomial_degree) : Json(nullptr);
  if (r.classification == GrowthClass::ExponentialOnly) {
    j["threshold"] = {{"lower", to_string(*r.threshold_lower)},
                      {"upper", to_string(*r.threshold_upper)},
                      {"estimate", r.threshold_estimate ? Json(*r.threshold_estimate) : Json(nullptr)}};
  }
  return j;
}

std::string growth_to_csv(const GrowthReport& r) {
  std::ostringstream out;
  out << "lambda,radius,C_squared,C_lo,C_hi,exactness\n";
  for (const auto& row : r.rows)
    out << to_string(row.lambda) << ',' << row.radius << ',' << to_string(row.constant_sq) << ','
        << to_string(row.constant.lo) << ',' << to_string(row.constant.hi) << ','
        << (row.constant.exact() ? "exact" : "enclosure") << '\n';
  return out.str();
}

Json boundedness_to_json(const BoundednessReport& r) {
  return {{"op", to_string(r.op)},
          {"degree", r.degree},
          {"m_in", r.m_in},
          {"m_out", r.m_out},
          {"samples", r.samples},
          {"max_ratio", interval_to_json(r.max_ratio)},
          {"analytic_bound", to_string(r.analytic_bound)},
          {"within_bound", r.within_bound}};
}

Json certificate_to_json(const BoundCertificate& c) {
  Json j = {{"chain", c.chain_id},
            {"cochain", c.cochain_id},
            {"params", {{"N", to_string(c.params.N)}, {"m", c.params.m}, {"lambda", to_string(c.params.lambda)}}},
            {"degree", c.degree},
            {"cover_radius", c.cover_radius},
            {"constant_source", to_string(c.source)},
            {"left", interval_to_json(c.left)},
            {"C", interval_to_json(c.constant)},
            {"C_fitted", interval_to_json(c.fitted_constant)},
            {"D", to_string(c.D)},
            {"eta", interval_to_json(c.eta)},
            {"right", interval_to_json(c.right)},
            {"verdict", to_string(c.verdict)}};
  if (c.declared_consistent) j["declared_consistent"] = *c.declared_consistent;
  return j;
}

Json identity_to_json(const IdentitySuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json item = {{"name", c.name}, {"checked", c.checked}, {"violations", c.violations}};
    if (c.witness) item["witness"] = *c.witness;
    checks.push_back(item);
  }
  return {{"group", r.group},
          {"samples", r.options.samples},
          {"max_degree", r.options.max_degree},
          {"convention", to_string(r.options.convention)},
          {"checks", checks},
          {"passed", r.passed()}};
}

Json unconditional_to_json(const UnconditionalReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"sample", v.sample},
                          {"condition", v.condition},
                          {"lhs", interval_to_json(v.lhs)},
                          {"rhs", interval_to_json(v.rhs)}});
  return {{"seminorm", r.seminorm},
          {"samples", r.samples},
          {"absolute_checked", r.absolute_checked},
          {"monotone_checked", r.monotone_checked},
          {"inconclusive", r.inconclusive},
          {"violations", violations},
          {"passed", r.passed()}};
}

std::string basis_to_text(const Group& group, const DegreeSpace& space) {
  std::ostringstream out;
  for (const auto& cell : space.basis) out << cell.component << '\t' << group.format(cell.tuple) << '\n';
  return out.str();
}

std::string matrix_to_coo(const SparseMatrix& m) {
  std::ostringstream out;
  out << m.rows << ' ' << m.cols << ' ' << m.nonzeros() << '\n';
  for (const auto& [r, c, v] : m.triplets()) out << r << ' ' << c << ' ' << to_string(v) << '\n';
  return out.str();
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw ConfigError("write to '" + tmp.string() + "' failed");
  }
  fs::rename(tmp, target);
}

}  // namespace ghc
