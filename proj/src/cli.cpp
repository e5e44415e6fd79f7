#include "algf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <variant>

#include "algf/almost.hpp"
#include "algf/enumerate.hpp"
#include "algf/error.hpp"
#include "algf/gengroup.hpp"
#include "algf/groupoid.hpp"

namespace algf::cli {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema_error(std::string_view origin, const std::string& ptr,
                               const std::string& message) {
  throw Error(ErrorCode::schema_violation,
              std::string(origin) + ": " + (ptr.empty() ? "/" : ptr) + ": " +
                  message);
}

json parse_json(std::string_view text, std::string_view origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = std::min<std::size_t>(
        e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("]: "); pos != std::string::npos) {
      what = what.substr(pos + 3);
    }
    throw Error(ErrorCode::syntax_error,
                std::string(origin) + ":" + std::to_string(line) + ":" +
                    std::to_string(col) + ": " + what);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::file_not_found, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const std::string& as_string(const json& v, std::string_view origin,
                             const std::string& ptr) {
  if (!v.is_string()) schema_error(origin, ptr, "expected a string");
  return v.get_ref<const std::string&>();
}

std::vector<std::string> string_list(const json& v, std::string_view origin,
                                     const std::string& ptr) {
  if (!v.is_array()) schema_error(origin, ptr, "expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_string(v[i], origin, ptr + "/" + std::to_string(i)));
  }
  return out;
}

// A label -> label map that must be total on `elements`.
std::map<std::string, std::string> label_map(
    const json& v, const std::vector<std::string>& elements,
    std::string_view origin, const std::string& ptr) {
  if (!v.is_object()) schema_error(origin, ptr, "expected an object");
  std::map<std::string, std::string> known;
  for (const auto& e : elements) known.emplace(e, e);
  std::map<std::string, std::string> out;
  for (const auto& [key, value] : v.items()) {
    const std::string at = ptr + "/" + key;
    if (!known.count(key)) {
      throw Error(ErrorCode::element_not_in_carrier,
                  std::string(origin) + ": " + at + ": unknown element '" +
                      key + "'");
    }
    const std::string& target = as_string(value, origin, at);
    if (!known.count(target)) {
      throw Error(ErrorCode::element_not_in_carrier,
                  std::string(origin) + ": " + at + ": unknown element '" +
                      target + "'");
    }
    out.emplace(key, target);
  }
  for (const auto& e : elements) {
    if (!out.count(e)) {
      throw Error(ErrorCode::map_not_total,
                  std::string(origin) + ": " + ptr + ": no value for '" + e +
                      "'");
    }
  }
  return out;
}

ojson table_json(const FiniteStructureTable& t) {
  ojson out;
  out["kind"] = std::string(to_string(t.kind()));
  out["elements"] = t.labels();
  auto map_of = [&](const std::vector<ElementIndex>& m) {
    ojson obj = ojson::object();
    for (ElementIndex x = 0; x < t.size(); ++x) obj[t.label(x)] = t.label(m[x]);
    return obj;
  };
  switch (t.kind()) {
    case StructureKind::groupoid:
      out["units"] = ojson::array();
      for (ElementIndex u : t.units()) out["units"].push_back(t.label(u));
      out["source"] = map_of(t.source_map());
      out["target"] = map_of(t.target_map());
      break;
    case StructureKind::almost_groupoid:
      out["units"] = ojson::array();
      for (ElementIndex u : t.units()) out["units"].push_back(t.label(u));
      out["theta"] = map_of(t.source_map());
      break;
    case StructureKind::generalized_group:
      out["e"] = map_of(t.source_map());
      break;
  }
  out["inverse"] = map_of(t.inverse_map());
  out["product"] = ojson::array();
  for (ElementIndex x = 0; x < t.size(); ++x) {
    for (ElementIndex y = 0; y < t.size(); ++y) {
      const ElementIndex z = t.entry(x, y);
      if (z != kUndefined) {
        out["product"].push_back({t.label(x), t.label(y), t.label(z)});
      }
    }
  }
  return out;
}

ojson witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  ojson out;
  out["elements"] = w->elements;
  out["detail"] = w->detail;
  return out;
}

ojson checks_json(const std::vector<Check>& checks) {
  ojson arr = ojson::array();
  for (const auto& c : checks) {
    ojson item;
    item["name"] = c.name;
    item["passed"] = c.passed;
    item["witness"] = witness_json(c.witness);
    arr.push_back(std::move(item));
  }
  return arr;
}

ojson report_json(const VerificationReport& r) {
  ojson out;
  out["subject"] = r.subject();
  out["verdict"] = r.passed() ? "pass" : "fail";
  out["checks"] = checks_json(r.checks());
  out["notes"] = checks_json(r.notes());
  return out;
}

// ---------------------------------------------------------------------------
// builtin: targets

using Target = std::variant<FiniteStructureTable, RuleStructure<Rational>,
                            RuleStructure<double>>;

constexpr std::string_view kBuiltinPrefix = "builtin:";

struct BuiltinSpec {
  std::string name;
  std::map<std::string, std::string> params;
};

BuiltinSpec parse_builtin(std::string_view uri) {
  BuiltinSpec spec;
  std::string rest(uri.substr(kBuiltinPrefix.size()));
  const auto q = rest.find('?');
  spec.name = rest.substr(0, q);
  if (q == std::string::npos) return spec;
  std::stringstream query(rest.substr(q + 1));
  std::string pair;
  while (std::getline(query, pair, '&')) {
    const auto eq = pair.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::usage, "malformed builtin parameter '" + pair + "'");
    }
    spec.params[pair.substr(0, eq)] = pair.substr(eq + 1);
  }
  return spec;
}

long long int_param(const BuiltinSpec& spec, const std::string& key,
                    long long fallback) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) return fallback;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::usage, "parameter " + key + " must be an integer");
  }
}

std::vector<std::string> numbered(long long n, const std::string& prefix = "") {
  if (n <= 0) throw Error(ErrorCode::nonpositive_n, "n must be positive");
  std::vector<std::string> out;
  for (long long i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Target resolve_builtin(std::string_view uri) {
  const BuiltinSpec spec = parse_builtin(uri);
  const std::string& n = spec.name;
  if (n == "pair") return pair_groupoid(numbered(int_param(spec, "n", 3)));
  if (n == "b2zn") return b2_zn_almost_groupoid(int_param(spec, "n", 4));
  if (n == "cyclic") {
    const long long k = int_param(spec, "n", 4);
    if (k <= 0) throw Error(ErrorCode::nonpositive_n, "n must be positive");
    return cyclic_group(static_cast<std::size_t>(k));
  }
  if (n == "symmetric") {
    return symmetric_groupoid(numbered(int_param(spec, "m", 2))).table;
  }
  if (n == "null") {
    return null_almost_groupoid(numbered(int_param(spec, "n", 2), "u"));
  }
  if (n == "rstar2") {
    auto it = spec.params.find("a");
    return rstar2_groupoid(
        parse_rational(it == spec.params.end() ? "2" : it->second));
  }
  if (n == "sqrtdet") return sqrtdet_generalized_group_rational();
  if (n == "sqrtdet-float") return sqrtdet_generalized_group_float();
  if (n == "triangular") return triangular_generalized_group();
  if (n == "gl") {
    return general_linear_group(
        static_cast<std::size_t>(int_param(spec, "n", 2)));
  }
  if (n == "glgroupoid") {
    return general_linear_groupoid(
        static_cast<std::size_t>(int_param(spec, "n", 2)));
  }
  throw Error(ErrorCode::usage, "unknown builtin '" + n + "'");
}

Target resolve(const std::string& target) {
  if (target.rfind(kBuiltinPrefix, 0) == 0) return resolve_builtin(target);
  return load_structure_file(target);
}

FiniteStructureTable resolve_finite(const std::string& target) {
  Target t = resolve(target);
  if (auto* table = std::get_if<FiniteStructureTable>(&t)) return *table;
  throw Error(ErrorCode::unsupported_for_rule_structure,
              target + " is rule-backed; this command needs a finite table");
}

std::optional<StructureKind> parse_as(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (auto k = parse_kind(text)) return k;
  throw Error(ErrorCode::usage, "--as expects groupoid, almost or gengroup");
}

VerificationReport axioms_for(const FiniteStructureTable& t,
                              StructureKind kind) {
  switch (kind) {
    case StructureKind::groupoid: return verify_groupoid(t);
    case StructureKind::almost_groupoid: return verify_almost_groupoid(t);
    case StructureKind::generalized_group: return verify_generalized_group(t);
  }
  return {};
}

VerificationReport derived_for(const FiniteStructureTable& t,
                               StructureKind kind) {
  switch (kind) {
    case StructureKind::groupoid: return derived_property_report(t);
    case StructureKind::almost_groupoid: return derived_almost_properties(t);
    case StructureKind::generalized_group: return derived_gg_properties(t);
  }
  return {};
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

std::uint64_t default_seed() {
  const char* env = std::getenv("ALGF_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::usage, "ALGF_SEED must be a non-negative integer");
  }
}

// ---------------------------------------------------------------------------
// Subcommands.  Each returns the report and the exit code.

struct Outcome {
  ojson report;
  int exit_code = 0;
};

template <class Scalar>
Outcome validate_rule(const std::string& target, const RuleStructure<Scalar>& s,
                      std::optional<StructureKind> as,
                      const SampleOptions& options) {
  if (as && *as != s.kind) {
    throw Error(ErrorCode::usage, target + " is a " +
                                      std::string(to_string(s.kind)) +
                                      "; --as cannot change a builtin's kind");
  }
  VerificationReport axioms;
  std::optional<VerificationReport> derived;
  if (s.kind == StructureKind::generalized_group) {
    axioms = verify_generalized_group(s, options);
    if (axioms.passed()) derived = derived_gg_properties(s, options);
  } else {
    axioms = verify_groupoid(s, options);
  }
  const bool pass = axioms.passed() && (!derived || derived->passed());
  Outcome out;
  out.report["command"] = "validate";
  out.report["target"] = target;
  out.report["as"] = std::string(to_string(s.kind));
  out.report["mode"] = "sampled";
  out.report["samples"] = options.samples;
  out.report["seed"] = options.seed;
  out.report["verdict"] = pass ? "pass" : "fail";
  out.report["axioms"] = report_json(axioms);
  out.report["derived"] = derived ? report_json(*derived) : ojson(nullptr);
  out.exit_code = pass ? 0 : 1;
  return out;
}

Outcome validate(const std::string& target, const std::string& as_text,
                 const SampleOptions& options) {
  const auto as = parse_as(as_text);
  Target t = resolve(target);
  if (auto* s = std::get_if<RuleStructure<Rational>>(&t)) {
    return validate_rule(target, *s, as, options);
  }
  if (auto* s = std::get_if<RuleStructure<double>>(&t)) {
    return validate_rule(target, *s, as, options);
  }
  const auto& table = std::get<FiniteStructureTable>(t);
  const StructureKind kind = as.value_or(table.kind());
  const VerificationReport axioms = axioms_for(table, kind);
  std::optional<VerificationReport> derived;
  if (axioms.passed()) derived = derived_for(table, kind);
  const bool pass = axioms.passed() && (!derived || derived->passed());
  Outcome out;
  out.report["command"] = "validate";
  out.report["target"] = target;
  out.report["as"] = std::string(to_string(kind));
  out.report["mode"] = "exhaustive";
  out.report["size"] = table.size();
  out.report["unit_count"] = table.units().size();
  out.report["verdict"] = pass ? "pass" : "fail";
  out.report["axioms"] = report_json(axioms);
  out.report["derived"] = derived ? report_json(*derived) : ojson(nullptr);
  out.exit_code = pass ? 0 : 1;
  return out;
}

ojson signature_json(const IsotropySignature& sig) {
  ojson arr = ojson::array();
  for (const auto& e : sig.entries) {
    ojson item;
    item["fiber_size"] = e.fiber_size;
    item["group_order"] = e.group_order;
    item["group"] = e.group;
    arr.push_back(std::move(item));
  }
  return arr;
}

Outcome analyze(const std::string& target) {
  const FiniteStructureTable t = resolve_finite(target);
  const VerificationReport axioms = axioms_for(t, t.kind());
  Outcome out;
  out.report["command"] = "analyze";
  out.report["target"] = target;
  out.report["kind"] = std::string(to_string(t.kind()));
  out.report["size"] = t.size();
  out.report["unit_count"] = t.units().size();
  out.report["verdict"] = axioms.passed() ? "pass" : "fail";
  out.report["axioms"] = report_json(axioms);
  out.exit_code = axioms.passed() ? 0 : 1;
  if (!axioms.passed()) return out;

  out.report["isotropy_signature"] = signature_json(isotropy_signature(t));
  const TransitivityResult tr = is_transitive(t);
  out.report["transitive"] = tr.transitive;
  if (tr.missing) {
    out.report["unjoined_units"] = {t.label(tr.missing->first),
                                    t.label(tr.missing->second)};
  }
  switch (t.kind()) {
    case StructureKind::groupoid: {
      const Classification c =
          classify_substructure(t, isotropy_bundle(t), t.units());
      out.report["isotropy_bundle"] = {
          {"class", std::string(to_string(c.kind))},
          {"witness", witness_json(c.witness)}};
      break;
    }
    case StructureKind::almost_groupoid: {
      const AlmostClassification c =
          classify_almost_substructure(t, t.units(), t.units());
      out.report["unit_substructure"] = {
          {"class", std::string(to_string(c.kind))},
          {"witness", witness_json(c.witness)}};
      const auto w = commutativity_witness(t);
      out.report["commutative"] = !w.has_value();
      out.report["commutativity_witness"] = witness_json(w);
      break;
    }
    case StructureKind::generalized_group: {
      const PredicateResult normal = is_normal_gg(t);
      out.report["normal"] = normal.holds;
      out.report["normality_witness"] = witness_json(normal.witness);
      break;
    }
  }
  return out;
}

Outcome construct(const std::string& op, const std::string& a_path,
                  const std::string& b_path, const std::string& action_path,
                  const std::string& out_path) {
  const FiniteStructureTable a = resolve_finite(a_path);
  const FiniteStructureTable b = resolve_finite(b_path);
  Outcome out;
  out.report["command"] = "construct";
  out.report["op"] = op;
  std::optional<FiniteStructureTable> result;
  if (op == "union") {
    if (a.kind() == StructureKind::groupoid &&
        b.kind() == StructureKind::groupoid) {
      result = disjoint_union_groupoids({a, b});
    } else if (a.kind() == StructureKind::almost_groupoid &&
               b.kind() == StructureKind::almost_groupoid) {
      result = disjoint_union_almost(a, b);
    } else {
      throw Error(ErrorCode::kind_mismatch,
                  "union needs two groupoids or two almost groupoids");
    }
  } else {
    if (a.kind() != StructureKind::almost_groupoid ||
        b.kind() != StructureKind::almost_groupoid) {
      throw Error(ErrorCode::kind_mismatch, op + " needs two almost groupoids");
    }
    if (op == "direct") {
      result = direct_product_almost(a, b);
    } else if (op == "semidirect") {
      if (action_path.empty()) {
        throw Error(ErrorCode::usage, "semidirect needs --action FILE");
      }
      const AlmostAction action =
          parse_action_file(read_file(action_path), a, b, action_path);
      const VerificationReport check = verify_action(a, b, action);
      out.report["action"] = report_json(check);
      if (!check.passed()) {
        out.report["verdict"] = "fail";
        out.exit_code = 1;
        return out;
      }
      result = semidirect_product(a, b, action);
    } else {
      throw Error(ErrorCode::usage, "--op expects union, direct or semidirect");
    }
  }
  const VerificationReport verified =
      result->kind() == StructureKind::groupoid ? verify_groupoid(*result)
                                                : verify_almost_groupoid(*result);
  out.report["size"] = result->size();
  out.report["unit_count"] = result->units().size();
  out.report["verdict"] = verified.passed() ? "pass" : "fail";
  out.report["verification"] = report_json(verified);
  if (out_path.empty()) {
    out.report["structure"] = table_json(*result);
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      throw Error(ErrorCode::file_not_found,
                  "cannot write '" + out_path + "'");
    }
    file << serialize(*result);
    out.report["written"] = out_path;
  }
  out.exit_code = verified.passed() ? 0 : 1;
  return out;
}

Outcome iso(const std::string& a_path, const std::string& b_path) {
  const FiniteStructureTable a = resolve_finite(a_path);
  const FiniteStructureTable b = resolve_finite(b_path);
  const auto found = are_isomorphic(a, b);
  Outcome out;
  out.report["command"] = "iso";
  out.report["a"] = a_path;
  out.report["b"] = b_path;
  out.report["verdict"] = found ? "isomorphic" : "not isomorphic";
  if (found) {
    ojson map = ojson::object();
    for (ElementIndex x = 0; x < a.size(); ++x) {
      map[a.label(x)] = b.label(found->element_map[x]);
    }
    ojson units = ojson::object();
    for (std::size_t i = 0; i < a.units().size(); ++i) {
      units[a.label(a.units()[i])] = b.label(found->unit_map[i]);
    }
    out.report["element_map"] = std::move(map);
    out.report["unit_map"] = std::move(units);
  }
  out.exit_code = found ? 0 : 1;
  return out;
}

std::vector<std::size_t> parse_fibers(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::usage, "--fibers expects sizes like 2,2");
    }
  }
  return out;
}

Outcome enumerate(const std::string& kind, std::size_t order,
                  std::size_t units, const std::string& fibers) {
  Outcome out;
  out.report["command"] = "enumerate";
  out.report["kind"] = kind;
  out.report["order"] = order;
  std::vector<FiniteStructureTable> found;
  if (kind == "almost") {
    std::optional<std::vector<std::size_t>> sizes;
    if (!fibers.empty()) sizes = parse_fibers(fibers);
    if (sizes && units == 0) units = sizes->size();
    out.report["units"] = units == 0 ? ojson(nullptr) : ojson(units);
    if (order == 0) throw Error(ErrorCode::usage, "--order must be positive");
    const std::size_t lo = units == 0 ? 1 : units;
    const std::size_t hi = units == 0 ? order : units;
    for (std::size_t k = lo; k <= hi; ++k) {
      auto part = enumerate_almost_groupoids(order, k, sizes);
      for (auto& t : part) found.push_back(std::move(t));
    }
  } else if (kind == "gengroup") {
    if (units != 0 || !fibers.empty()) {
      throw Error(ErrorCode::usage,
                  "--units and --fibers apply to --kind almost only");
    }
    if (order == 0) throw Error(ErrorCode::usage, "--order must be positive");
    found = enumerate_generalized_groups(order);
  } else {
    throw Error(ErrorCode::usage, "--kind expects almost or gengroup");
  }
  out.report["count"] = found.size();
  ojson list = ojson::array();
  for (const auto& t : found) {
    ojson item;
    item["canonical_form"] = canonical_form(t).str();
    item["structure"] = table_json(t);
    list.push_back(std::move(item));
  }
  out.report["structures"] = std::move(list);
  return out;
}

Outcome cayley(const std::string& target) {
  const FiniteStructureTable t = resolve_finite(target);
  Outcome out;
  out.report["command"] = "cayley";
  out.report["target"] = target;
  const VerificationReport axioms = verify_groupoid(t);
  if (!axioms.passed()) {
    out.report["verdict"] = "fail";
    out.report["groupoid"] = report_json(axioms);
    out.exit_code = 1;
    return out;
  }
  const CayleyEmbedding emb = left_translation_groupoid(t);
  out.report["verdict"] = emb.report.passed() ? "pass" : "fail";
  out.report["translations"] = emb.translations.size();
  ojson phi = ojson::object();
  for (ElementIndex x = 0; x < t.size(); ++x) {
    phi[t.label(x)] = emb.translations.label(emb.phi.element_map[x]);
  }
  out.report["phi"] = std::move(phi);
  out.report["embedding"] = report_json(emb.report);
  out.exit_code = emb.report.passed() ? 0 : 1;
  return out;
}

const std::vector<std::string> kSubcommands = {
    "validate", "analyze", "construct", "iso", "enumerate", "cayley"};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_certified:
    case ErrorCode::action_verification_failed:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

FiniteStructureTable parse_structure_file(std::string_view text,
                                          std::string_view origin) {
  const json doc = parse_json(text, origin);
  if (!doc.is_object()) schema_error(origin, "", "expected a JSON object");
  if (!doc.contains("kind")) schema_error(origin, "/kind", "missing field");
  const std::string& kind_text = as_string(doc["kind"], origin, "/kind");
  const auto kind = parse_kind(kind_text);
  if (!kind) {
    schema_error(origin, "/kind", "unknown kind '" + kind_text + "'");
  }

  std::vector<std::string> allowed = {"kind", "elements", "inverse", "product"};
  switch (*kind) {
    case StructureKind::groupoid:
      allowed.insert(allowed.end(), {"units", "source", "target"});
      break;
    case StructureKind::almost_groupoid:
      allowed.insert(allowed.end(), {"units", "theta"});
      break;
    case StructureKind::generalized_group:
      allowed.push_back("e");
      break;
  }
  for (const auto& [key, value] : doc.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      schema_error(origin, "/" + key,
                   "field not allowed for kind " + kind_text);
    }
  }
  for (const auto& key : allowed) {
    if (!doc.contains(key)) schema_error(origin, "/" + key, "missing field");
  }

  TableSpec spec;
  spec.kind = *kind;
  spec.elements = string_list(doc["elements"], origin, "/elements");
  if (spec.elements.empty()) {
    schema_error(origin, "/elements", "carrier must be nonempty");
  }
  {
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < spec.elements.size(); ++i) {
      if (!seen.emplace(spec.elements[i], i).second) {
        throw Error(ErrorCode::duplicate_label,
                    std::string(origin) + ": /elements/" + std::to_string(i) +
                        ": label '" + spec.elements[i] + "' appears twice");
      }
    }
  }
  switch (*kind) {
    case StructureKind::groupoid:
      spec.units = string_list(doc["units"], origin, "/units");
      spec.source = label_map(doc["source"], spec.elements, origin, "/source");
      spec.target = label_map(doc["target"], spec.elements, origin, "/target");
      break;
    case StructureKind::almost_groupoid:
      spec.units = string_list(doc["units"], origin, "/units");
      spec.source = label_map(doc["theta"], spec.elements, origin, "/theta");
      spec.target = spec.source;
      break;
    case StructureKind::generalized_group:
      spec.source = label_map(doc["e"], spec.elements, origin, "/e");
      spec.target = spec.source;
      break;
  }
  spec.inverse = label_map(doc["inverse"], spec.elements, origin, "/inverse");

  const json& product = doc["product"];
  if (!product.is_array()) {
    schema_error(origin, "/product", "expected an array of [x, y, z] triples");
  }
  for (std::size_t i = 0; i < product.size(); ++i) {
    const std::string ptr = "/product/" + std::to_string(i);
    const json& triple = product[i];
    if (!triple.is_array() || triple.size() != 3) {
      schema_error(origin, ptr, "expected [x, y, z]");
    }
    spec.product.push_back({as_string(triple[0], origin, ptr + "/0"),
                            as_string(triple[1], origin, ptr + "/1"),
                            as_string(triple[2], origin, ptr + "/2")});
  }

  try {
    return build_finite_table(spec);
  } catch (const Error& e) {
    std::string ptr;
    if (e.item()) ptr = "/product/" + std::to_string(*e.item());
    if (e.code() == ErrorCode::unit_not_in_elements) ptr = "/units";
    if (e.code() == ErrorCode::map_not_into_units) {
      ptr = *kind == StructureKind::groupoid ? "/source" : "/theta";
    }
    if (e.code() == ErrorCode::product_entry_outside_composable_set) {
      schema_error(origin, ptr, e.message());
    }
    throw Error(e.code(), std::string(origin) + ": " +
                              (ptr.empty() ? "/" : ptr) + ": " + e.message(),
                e.item());
  }
}

FiniteStructureTable load_structure_file(const std::string& path) {
  return parse_structure_file(read_file(path), path);
}

std::string serialize(const FiniteStructureTable& table) {
  return dump(table_json(table));
}

AlmostAction parse_action_file(std::string_view text,
                               const FiniteStructureTable& g,
                               const FiniteStructureTable& h,
                               std::string_view origin) {
  const json doc = parse_json(text, origin);
  if (!doc.is_array()) {
    schema_error(origin, "", "expected an array of [g, h, result] triples");
  }
  AlmostAction action;
  action.h_size = h.size();
  action.act.assign(g.size() * h.size(), kUndefined);
  auto lookup = [&](const FiniteStructureTable& t, const json& v,
                    const std::string& ptr) {
    const std::string& label = as_string(v, origin, ptr);
    auto x = t.find(label);
    if (!x) {
      throw Error(ErrorCode::element_not_in_carrier,
                  std::string(origin) + ": " + ptr + ": unknown element '" +
                      label + "'");
    }
    return *x;
  };
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string ptr = "/" + std::to_string(i);
    const json& triple = doc[i];
    if (!triple.is_array() || triple.size() != 3) {
      schema_error(origin, ptr, "expected [g, h, result]");
    }
    const ElementIndex x = lookup(g, triple[0], ptr + "/0");
    const ElementIndex y = lookup(h, triple[1], ptr + "/1");
    const ElementIndex r = lookup(h, triple[2], ptr + "/2");
    ElementIndex& slot = action.act[x * h.size() + y];
    if (slot != kUndefined) {
      schema_error(origin, ptr,
                   "repeats the pair (" + g.label(x) + ", " + h.label(y) + ")");
    }
    slot = r;
  }
  for (ElementIndex x = 0; x < g.size(); ++x) {
    for (ElementIndex y = 0; y < h.size(); ++y) {
      if (action(x, y) == kUndefined) {
        throw Error(ErrorCode::map_not_total,
                    std::string(origin) + ": no value for (" + g.label(x) +
                        ", " + h.label(y) + ")");
      }
    }
  }
  return action;
}

CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult result;
  if (args.empty()) {
    result.exit_code = 2;
    result.diagnostics =
        "usage: algf <validate|analyze|construct|iso|enumerate|cayley> ...\n";
    return result;
  }
  const std::string& first = args.front();
  if (!first.empty() && first[0] != '-' &&
      std::find(kSubcommands.begin(), kSubcommands.end(), first) ==
          kSubcommands.end()) {
    result.exit_code = 2;
    result.diagnostics = "error: " +
                         std::string(to_string(ErrorCode::unknown_subcommand)) +
                         ": '" + first + "'\n";
    return result;
  }

  CLI::App app{"Finite and rule-backed groupoid toolkit", "algf"};
  app.require_subcommand(1);
  std::string report_path;
  std::string target, second, as_text, op, action_path, structure_out;
  std::string kind, fibers;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  std::size_t order = 0, units = 0;

  auto* v = app.add_subcommand("validate", "Check the axioms of a structure");
  v->add_option("target", target, "Structure file or builtin:NAME?k=v")
      ->required();
  v->add_option("--as", as_text, "groupoid | almost | gengroup");
  v->add_option("--samples", samples, "Samples for rule-backed structures")
      ->check(CLI::PositiveNumber);
  auto* seed_opt = v->add_option("--seed", seed, "Sampling seed");
  v->add_option("--out", report_path, "Write the report here");

  auto* an = app.add_subcommand("analyze", "Isotropy and substructure summary");
  an->add_option("target", target)->required();
  an->add_option("--out", report_path);

  auto* c = app.add_subcommand("construct", "Union, direct or semidirect product");
  c->add_option("--op", op, "union | direct | semidirect")->required();
  c->add_option("a", target)->required();
  c->add_option("b", second)->required();
  c->add_option("--action", action_path, "JSON list of [g, h, g.h] triples");
  c->add_option("-o,--out", structure_out, "Write the constructed structure");

  auto* is = app.add_subcommand("iso", "Search for an isomorphism");
  is->add_option("a", target)->required();
  is->add_option("b", second)->required();
  is->add_option("--out", report_path);

  auto* en = app.add_subcommand("enumerate", "Enumerate up to isomorphism");
  en->add_option("--kind", kind, "almost | gengroup")->required();
  en->add_option("--order", order)->required();
  en->add_option("--units", units);
  en->add_option("--fibers", fibers, "Fiber sizes, e.g. 2,2");
  en->add_option("--out", report_path);

  auto* cy = app.add_subcommand("cayley", "Left-translation embedding");
  cy->add_option("target", target)->required();
  cy->add_option("--out", report_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.output = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.diagnostics = "error: usage: " + std::string(e.what()) + "\n";
    return result;
  }

  try {
    Outcome outcome;
    if (v->parsed()) {
      SampleOptions options;
      options.samples = samples;
      options.seed = seed_opt->count() ? seed : default_seed();
      outcome = validate(target, as_text, options);
    } else if (an->parsed()) {
      outcome = analyze(target);
    } else if (c->parsed()) {
      outcome = construct(op, target, second, action_path, structure_out);
    } else if (is->parsed()) {
      outcome = iso(target, second);
    } else if (en->parsed()) {
      outcome = enumerate(kind, order, units, fibers);
    } else {
      outcome = cayley(target);
    }
    result.exit_code = outcome.exit_code;
    const std::string text = dump(outcome.report);
    if (report_path.empty()) {
      result.output = text;
    } else {
      std::ofstream file(report_path, std::ios::binary);
      if (!file) {
        throw Error(ErrorCode::file_not_found,
                    "cannot write '" + report_path + "'");
      }
      file << text;
    }
  } catch (const Error& e) {
    result.exit_code = exit_code_for(e.code());
    result.output.clear();
    result.diagnostics = "error: " + std::string(e.what()) + "\n";
  }
  return result;
}

}  // namespace algf::cli
