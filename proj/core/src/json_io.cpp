#include "diskwalk/json_io.hpp"

#include <set>

#include <json.hpp>

#include "diskwalk/errors.hpp"

namespace diskwalk {

namespace {

using json = nlohmann::ordered_json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw format_error(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw format_error("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw format_error(std::string("missing field \"") + key + "\"");
  return *it;
}

double number(const json& v, const char* what) {
  if (!v.is_number()) throw format_error(std::string("\"") + what + "\" must be a number");
  return v.get<double>();
}

std::int64_t integer(const json& v, const char* what) {
  if (!v.is_number_integer()) throw format_error(std::string("\"") + what + "\" must be an integer");
  return v.get<std::int64_t>();
}

int small_integer(const json& v, const char* what) {
  const auto x = integer(v, what);
  if (x < -1'000'000'000 || x > 1'000'000'000) throw format_error(std::string("\"") + what + "\" out of range");
  return static_cast<int>(x);
}

IndexPair index_pair(const json& v) {
  if (!v.is_array() || v.size() != 2) throw format_error("expected an [m, n] pair");
  return {small_integer(v[0], "m"), small_integer(v[1], "n")};
}

json support_json(const SupportPattern& support) {
  json cones = json::array();
  for (const auto& cone : support.cones()) {
    json gens = json::array();
    for (const auto& [dm, dn] : cone.generators) gens.push_back({dm, dn});
    cones.push_back({{"base", {cone.base.first, cone.base.second}}, {"generators", gens}});
  }
  return {{"cones", cones}};
}

SupportPattern support_from(const json& v) {
  const json& cones = field(v, "cones");
  if (!cones.is_array()) throw format_error("\"cones\" must be an array");
  std::vector<LatticeCone> out;
  for (const auto& c : cones) {
    LatticeCone cone{index_pair(field(c, "base")), {}};
    const json& gens = field(c, "generators");
    if (!gens.is_array()) throw format_error("\"generators\" must be an array");
    for (const auto& g : gens) cone.generators.push_back(index_pair(g));
    out.push_back(std::move(cone));
  }
  try {
    return SupportPattern(std::move(out));
  } catch (const domain_error& e) {
    throw format_error(std::string("invalid support: ") + e.what());
  }
}

json table_json(const CoefficientTable& table) {
  json entries = json::array();
  for (const auto& [key, value] : table.entries()) {
    entries.push_back({{"m", key.first}, {"n", key.second}, {"re", value.real()}, {"im", value.imag()}});
  }
  json out = {{"alpha", table.alpha()}, {"entries", entries}};
  if (table.support()) out["support"] = support_json(*table.support());
  return out;
}

CoefficientTable table_from(const json& v) {
  const double alpha = number(field(v, "alpha"), "alpha");
  const json& entries = field(v, "entries");
  if (!entries.is_array()) throw format_error("\"entries\" must be an array");
  try {
    CoefficientTable table(alpha);
    for (const auto& e : entries) {
      const int m = small_integer(field(e, "m"), "m");
      const int n = small_integer(field(e, "n"), "n");
      if (table.contains(m, n)) {
        throw format_error("duplicate entry (" + std::to_string(m) + ", " + std::to_string(n) + ")");
      }
      table.set(m, n, {number(field(e, "re"), "re"), number(field(e, "im"), "im")});
    }
    if (v.contains("support")) table.set_support(support_from(v["support"]));
    return table;
  } catch (const domain_error& e) {
    throw format_error(std::string("invalid table: ") + e.what());
  }
}

json index_set_json(const IndexSet& set) {
  json progs = json::array();
  for (const auto& p : set.progressions()) progs.push_back({{"offset", p.offset}, {"step", p.step}});
  return {{"finite", set.finite_part()}, {"progressions", progs}};
}

void reject_unknown(const json& obj, std::initializer_list<const char*> known) {
  const std::set<std::string> allowed(known.begin(), known.end());
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw format_error("unknown parameter \"" + key + "\"");
  }
}

void read_if(const json& params, const char* key, double& target) {
  if (params.contains(key)) target = number(params[key], key);
}

void read_if(const json& params, const char* key, int& target) {
  if (params.contains(key)) target = small_integer(params[key], key);
}

}  // namespace

std::string to_json(const CoefficientTable& table) { return table_json(table).dump(); }

CoefficientTable table_from_json(std::string_view text) { return table_from(parse(text)); }

std::string to_json(const MonteeResult& result) {
  json out = {{"constant", result.constant.real()}};
  if (result.constant.imag() != 0.0) out["constant_im"] = result.constant.imag();
  out["table"] = table_json(result.table);
  return out.dump();
}

MonteeResult montee_from_json(std::string_view text) {
  const json v = parse(text);
  double im = 0.0;
  if (v.contains("constant_im")) im = number(v["constant_im"], "constant_im");
  return {table_from(field(v, "table")), {number(field(v, "constant"), "constant"), im}};
}

CoefficientTable any_table_from_json(std::string_view text) {
  const json v = parse(text);
  if (v.is_object() && v.contains("table") && v.contains("constant")) return table_from(v["table"]);
  return table_from(v);
}

std::string to_json(const IndexSet& set) { return index_set_json(set).dump(); }

IndexSet index_set_from_json(std::string_view text) {
  const json v = parse(text);
  std::set<std::int64_t> finite;
  std::vector<Progression> progs;
  if (v.is_object() && v.contains("finite")) {
    if (!v["finite"].is_array()) throw format_error("\"finite\" must be an array");
    for (const auto& x : v["finite"]) finite.insert(integer(x, "finite"));
  }
  if (v.is_object() && v.contains("progressions")) {
    if (!v["progressions"].is_array()) throw format_error("\"progressions\" must be an array");
    for (const auto& p : v["progressions"]) {
      const Progression prog{integer(field(p, "offset"), "offset"), integer(field(p, "step"), "step")};
      if (prog.step == 0) throw format_error("progression step must be nonzero");
      progs.push_back(prog);
    }
  }
  if (!v.is_object()) throw format_error("index set must be a JSON object");
  return IndexSet(std::move(finite), std::move(progs));
}

std::string to_json(const SpdVerdict& verdict) {
  const json out = std::visit(
      overloaded{
          [](const RefutedAt& r) -> json {
            return {{"verdict", "RefutedAt"}, {"modulus", r.modulus}, {"residue", r.residue}};
          },
          [](const CertifiedExact& c) -> json { return {{"verdict", "CertifiedExact"}, {"reason", c.reason}}; },
          [](const CertifiedUpTo& c) -> json { return {{"verdict", "CertifiedUpTo"}, {"n_max", c.n_max}}; },
      },
      verdict);
  return out.dump();
}

SpdVerdict verdict_from_json(std::string_view text) {
  const json v = parse(text);
  const json& kind = field(v, "verdict");
  if (kind == "RefutedAt") {
    return RefutedAt{integer(field(v, "modulus"), "modulus"), integer(field(v, "residue"), "residue")};
  }
  if (kind == "CertifiedExact") {
    const json& reason = field(v, "reason");
    if (!reason.is_string()) throw format_error("\"reason\" must be a string");
    return CertifiedExact{reason.get<std::string>()};
  }
  if (kind == "CertifiedUpTo") return CertifiedUpTo{integer(field(v, "n_max"), "n_max")};
  throw format_error("unknown verdict kind");
}

std::string to_json(const PdReport& report) {
  json violations = json::array();
  for (const auto& [m, n] : report.violations) violations.push_back({m, n});
  return json{{"positive_definite", report.positive_definite}, {"violations", violations}}.dump();
}

std::string to_json(const FamilySpec& spec) {
  const json params = std::visit(
      overloaded{
          [](const ProductKernel& p) -> json { return {{"m", p.m}, {"n", p.n}}; },
          [](const PoissonSzego& p) -> json { return {{"r", p.r}}; },
          [](const Exponential&) -> json { return json::object(); },
          [](const Aktas& p) -> json { return {{"t", p.t}}; },
          [](const Horn& p) -> json {
            return {{"t", p.t}, {"s", p.s}, {"b", p.b}, {"radius_x", p.radius_x}, {"radius_y", p.radius_y}};
          },
          [](const Lauricella& p) -> json { return {{"t", p.t}, {"s", p.s}, {"b", p.b}, {"r2", p.r2}}; },
      },
      spec.variant);
  return json{{"family", spec.name()}, {"q", spec.q}, {"params", params}}.dump();
}

FamilySpec family_from_json(std::string_view text) {
  const json v = parse(text);
  const json& name = field(v, "family");
  if (!name.is_string()) throw format_error("\"family\" must be a string");
  const json params = v.contains("params") ? v["params"] : json::object();
  if (!params.is_object()) throw format_error("\"params\" must be an object");

  FamilySpec spec;
  if (v.contains("q")) spec.q = small_integer(v["q"], "q");
  const std::string family = name.get<std::string>();
  if (family == "product") {
    reject_unknown(params, {"m", "n"});
    ProductKernel p;
    read_if(params, "m", p.m);
    read_if(params, "n", p.n);
    spec.variant = p;
  } else if (family == "poisson") {
    reject_unknown(params, {"r"});
    PoissonSzego p;
    read_if(params, "r", p.r);
    spec.variant = p;
  } else if (family == "exponential") {
    reject_unknown(params, {});
    spec.variant = Exponential{};
  } else if (family == "aktas") {
    reject_unknown(params, {"t"});
    Aktas p;
    read_if(params, "t", p.t);
    spec.variant = p;
  } else if (family == "horn") {
    reject_unknown(params, {"t", "s", "b", "radius_x", "radius_y"});
    Horn p;
    read_if(params, "t", p.t);
    read_if(params, "s", p.s);
    read_if(params, "b", p.b);
    read_if(params, "radius_x", p.radius_x);
    read_if(params, "radius_y", p.radius_y);
    spec.variant = p;
  } else if (family == "lauricella") {
    reject_unknown(params, {"t", "s", "b", "r2"});
    Lauricella p;
    read_if(params, "t", p.t);
    read_if(params, "s", p.s);
    read_if(params, "b", p.b);
    read_if(params, "r2", p.r2);
    spec.variant = p;
  } else {
    throw format_error("unknown family \"" + family + "\"");
  }
  return spec;
}

}  // namespace diskwalk
