#include <doctest.h>

#include "dirlap/generators.hpp"
#include "dirlap/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace dirlap;
using nlohmann::json;

namespace {

// Just enough of draft-07 to exercise the shipped schemas: type, const, enum,
// required, properties, additionalProperties:false, items, minItems, minimum,
// oneOf. Returns a list of violations; empty means valid.
void check_schema(const json& schema, const json& inst, const std::string& path,
                  std::vector<std::string>& errors) {
  if (schema.contains("const") && inst != schema["const"]) {
    errors.push_back(path + ": const mismatch");
    return;
  }
  if (schema.contains("enum")) {
    bool hit = false;
    for (const auto& v : schema["enum"]) hit = hit || inst == v;
    if (!hit) {
      errors.push_back(path + ": not in enum");
      return;
    }
  }
  if (schema.contains("oneOf")) {
    int ok = 0;
    for (const auto& alt : schema["oneOf"]) {
      std::vector<std::string> sub;
      check_schema(alt, inst, path, sub);
      if (sub.empty()) ++ok;
    }
    if (ok != 1) errors.push_back(path + ": oneOf matched " + std::to_string(ok));
    return;
  }
  if (schema.contains("type")) {
    const std::string t = schema["type"].get<std::string>();
    bool good = (t == "object" && inst.is_object()) || (t == "array" && inst.is_array()) ||
                (t == "string" && inst.is_string()) || (t == "number" && inst.is_number()) ||
                (t == "integer" && inst.is_number_integer()) ||
                (t == "boolean" && inst.is_boolean()) || (t == "null" && inst.is_null());
    if (!good) {
      errors.push_back(path + ": wrong type, wanted " + t);
      return;
    }
  }
  if (schema.contains("minimum") && inst.is_number() &&
      inst.get<double>() < schema["minimum"].get<double>())
    errors.push_back(path + ": below minimum");
  if (inst.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!inst.contains(key.get<std::string>()))
          errors.push_back(path + ": missing " + key.get<std::string>());
    const json props = schema.value("properties", json::object());
    for (auto it = inst.begin(); it != inst.end(); ++it) {
      if (props.contains(it.key())) {
        check_schema(props[it.key()], it.value(), path + "/" + it.key(), errors);
      } else if (schema.contains("additionalProperties") &&
                 schema["additionalProperties"].is_boolean() &&
                 !schema["additionalProperties"].get<bool>()) {
        errors.push_back(path + ": unexpected key " + it.key());
      }
    }
  }
  if (inst.is_array()) {
    if (schema.contains("minItems") && inst.size() < schema["minItems"].get<std::size_t>())
      errors.push_back(path + ": too few items");
    if (schema.contains("items")) {
      int i = 0;
      for (const auto& el : inst) check_schema(schema["items"], el, path + "/" + std::to_string(i++), errors);
    }
  }
}

json load_schema(const std::string& name) {
  std::ifstream in(std::string(DIRLAP_SCHEMA_DIR) + "/" + name);
  REQUIRE(in.good());
  return json::parse(in);
}

void expect_valid(const std::string& schema_name, const std::string& payload) {
  std::vector<std::string> errors;
  check_schema(load_schema(schema_name), json::parse(payload), "", errors);
  for (const auto& e : errors) FAIL_CHECK(schema_name << ": " << e);
  CHECK(errors.empty());
}

}  // namespace

TEST_CASE("seventeen digits round-trip every double") {
  // strtod, not std::stod: stod throws on the subnormal (ERANGE) even though
  // the parsed value is exact.
  for (double v : {1.0 / 3, 0.1, 1e300, 5e-324, std::numbers::pi, -12345.678901234567, 2.0}) {
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(-0.0) == "-0");
}

TEST_CASE("validation payload obeys its schema") {
  Graph g = gen_z_line(8);
  expect_valid("validation.schema.json", validation_json(g, validate(g)));
}

TEST_CASE("sector payload obeys its schema") {
  Graph g = gen_z_line(8);
  SectorReport s = sector_fit(g, g.interior());
  expect_valid("sector.schema.json", sector_json(s, static_cast<int>(g.interior().size())));
}

TEST_CASE("cheeger payload obeys its schema") {
  Graph g = gen_directed_cycle(5, 2, Rational(1, 2));
  std::vector<int> omega = {0, 1, 2};
  std::string payload = cheeger_json(g, 3, cheeger_exact(g, omega), m_sup(g, omega),
                                     inequality_check(g, omega));
  expect_valid("cheeger.schema.json", payload);
  json doc = json::parse(payload);
  CHECK(doc["omega_size"] == 3);
  CHECK(doc["exact"] == true);
  // The exact string and the double describe the same number.
  auto h_exact = parse_rational(doc["h_exact"].get<std::string>());
  REQUIRE(h_exact.has_value());
  CHECK(to_double(*h_exact) == doc["h"].get<double>());
}

TEST_CASE("essgap payload obeys its schema with and without the coercivity block") {
  GeneratorSpec spec;
  spec.kind = GeneratorSpec::Kind::z_line;
  spec.radius = 6;
  std::vector<int> ns = {1, 2};
  EssSpectrumEstimate est = ess_spectrum_estimate(spec, ns, default_k_schedule(ns));
  expect_valid("essgap.schema.json", essgap_json("z-line", est, nullptr));

  AbsReport abs = abs_condition(spec, ns, default_k_schedule(ns));
  std::string with = essgap_json("z-line", est, &abs);
  expect_valid("essgap.schema.json", with);
  json doc = json::parse(with);
  CHECK(doc["abs_condition"].is_object());
  CHECK(doc["verdict"] == est.verdict);
}

TEST_CASE("repro summary payload obeys its schema") {
  std::vector<CheckItem> checks = {{"first check", true, "ok"}, {"second check", false, "off by 1"}};
  std::string payload = repro_summary_json("z-line", 16, checks);
  expect_valid("repro-summary.schema.json", payload);
  json doc = json::parse(payload);
  CHECK(doc["all_pass"] == false);
  CHECK(doc["checks"].size() == 2);
  CHECK(doc["checks"][0]["name"] == "first check");
}

TEST_CASE("json output is stable and newline-terminated") {
  Graph g = gen_z_line(4);
  std::string a = validation_json(g, validate(g));
  std::string b = validation_json(g, validate(g));
  CHECK(a == b);
  REQUIRE(!a.empty());
  CHECK(a.back() == '\n');
}

TEST_CASE("csv headers are fixed") {
  Graph g = gen_directed_cycle(6, 1, Rational(1, 2));
  RangeSweep sweep = numerical_range_boundary(assemble(g, g.interior(), OpKind::delta), 16);
  std::ostringstream range;
  write_range_csv(range, sweep);
  CHECK(range.str().substr(0, range.str().find('\n')) == "theta,re,im");
  // One row per angle plus the header.
  int lines = 0;
  for (char c : range.str())
    if (c == '\n') ++lines;
  CHECK(lines == 17);

  GeneratorSpec spec;
  spec.kind = GeneratorSpec::Kind::z_line;
  std::vector<int> ns = {1, 2};
  EssSpectrumEstimate est = ess_spectrum_estimate(spec, ns, default_k_schedule(ns));
  std::ostringstream ess;
  write_essgap_csv(ess, est);
  CHECK(ess.str().substr(0, ess.str().find('\n')) == "n,k,lambda1");

  Graph z = gen_z_line(8);
  std::ostringstream trend;
  write_trend_csv(trend, h_infinity_trend(z, {1, 2}));
  CHECK(trend.str().substr(0, trend.str().find('\n')) == "n,h,h_tilde,M,c_n,testset_ratio");

  std::ostringstream l1;
  write_lambda1_csv(l1, {1, 2}, {0.5, 1.5}, {0.125, 0.25});
  CHECK(l1.str() == "n,lambda1,bound\n1,0.5,0.125\n2,1.5,0.25\n");
}
