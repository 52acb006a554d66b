#include "qconj/certificate.hpp"

#include "json.hpp"

#include "qconj/error.hpp"

namespace qconj {

using nlohmann::json;

namespace {

json to_doc(const Certificate& c) {
  json checks = json::array();
  for (const auto& ch : c.checks)
    checks.push_back({{"name", ch.name},
                      {"anchor", ch.anchor},
                      {"status", ch.pass ? "pass" : "fail"},
                      {"witness", json::parse(ch.witness)}});
  json conv = json::object();
  for (const auto& [k, v] : c.conventions) conv[k] = v;
  return {{"n", c.n},         {"mult", c.mult},        {"exps", c.exps},    {"sigma", c.sigma},
          {"cutoff", c.cutoff}, {"conventions", conv}, {"checks", checks}};
}

bool int_array(const json& j, std::size_t len) {
  if (!j.is_array() || (len && j.size() != len)) return false;
  for (const auto& x : j)
    if (!x.is_number_integer()) return false;
  return true;
}

bool validate_one(const json& d, std::string& why) {
  if (!d.is_object()) return why = "certificate is not an object", false;
  for (const char* key : {"n", "mult", "exps", "sigma", "cutoff", "conventions", "checks"})
    if (!d.contains(key)) return why = std::string("missing key ") + key, false;
  if (!d["n"].is_number_integer() || d["n"].get<int>() < 1) return why = "n must be a positive integer", false;
  const auto n = d["n"].get<std::size_t>();
  if (!int_array(d["mult"], 0) || !int_array(d["exps"], d["mult"].size()))
    return why = "mult and exps must be integer arrays of equal length", false;
  if (!int_array(d["sigma"], n)) return why = "sigma must list n integers", false;
  if (!d["cutoff"].is_number_integer()) return why = "cutoff must be an integer", false;
  if (!d["conventions"].is_object()) return why = "conventions must be an object", false;
  for (const auto& [k, v] : d["conventions"].items())
    if (!v.is_string()) return why = "convention " + k + " is not a string", false;
  if (!d["checks"].is_array() || d["checks"].empty()) return why = "checks must be a nonempty array", false;
  for (const auto& ch : d["checks"]) {
    if (!ch.is_object()) return why = "check is not an object", false;
    for (const char* key : {"name", "anchor", "status", "witness"})
      if (!ch.contains(key)) return why = std::string("check missing key ") + key, false;
    if (!ch["name"].is_string() || !ch["anchor"].is_string() || ch["anchor"].get<std::string>().empty())
      return why = "check name and anchor must be strings", false;
    const auto& s = ch["status"];
    if (!s.is_string() || (s != "pass" && s != "fail")) return why = "status must be pass or fail", false;
  }
  return true;
}

}  // namespace

bool Certificate::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

const Check* Certificate::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string Certificate::witness_field(const std::string& check, const std::string& field) const {
  const Check* c = find(check);
  if (!c) return {};
  const json w = json::parse(c->witness);
  if (!w.is_object() || !w.contains(field)) return {};
  return w[field].dump();
}

std::string Certificate::to_json(int indent) const { return to_doc(*this).dump(indent); }

Certificate Certificate::from_json(const std::string& text) {
  json d;
  try {
    d = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("certificate parse error: ") + e.what());
  }
  std::string why;
  if (!validate_one(d, why)) throw InvalidArgument("invalid certificate: " + why);
  Certificate c;
  c.n = d["n"].get<int>();
  c.mult = d["mult"].get<std::vector<int>>();
  c.exps = d["exps"].get<std::vector<int>>();
  c.sigma = d["sigma"].get<std::vector<int>>();
  c.cutoff = d["cutoff"].get<int>();
  for (const auto& [k, v] : d["conventions"].items()) c.conventions[k] = v.get<std::string>();
  for (const auto& ch : d["checks"])
    c.checks.push_back({ch["name"].get<std::string>(), ch["anchor"].get<std::string>(), ch["status"] == "pass",
                        ch["witness"].dump()});
  return c;
}

std::string to_json(const std::vector<Certificate>& certs, int indent) {
  json arr = json::array();
  for (const auto& c : certs) arr.push_back(to_doc(c));
  return arr.dump(indent);
}

bool validate_certificate_json(const std::string& text, std::string* why) {
  std::string reason;
  bool ok = true;
  try {
    const json d = json::parse(text);
    if (d.is_array()) {
      if (d.empty()) {
        reason = "empty certificate list";
        ok = false;
      }
      for (const auto& c : d)
        if (ok && !validate_one(c, reason)) ok = false;
    } else {
      ok = validate_one(d, reason);
    }
  } catch (const json::exception& e) {
    reason = e.what();
    ok = false;
  }
  if (why) *why = reason;
  return ok;
}

}  // namespace qconj
