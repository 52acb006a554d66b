#pragma once

#include <map>
#include <string>
#include <vector>

namespace qconj {

/// One named check. The witness is a JSON text (object, array or string).
struct Check {
  std::string name;
  std::string anchor;
  bool pass = false;
  std::string witness = "null";
};

struct Certificate {
  int n = 0;
  std::vector<int> mult;
  std::vector<int> exps;
  /// One-based images.
  std::vector<int> sigma;
  int cutoff = 0;
  std::map<std::string, std::string> conventions;
  std::vector<Check> checks;

  bool passed() const;
  const Check* find(const std::string& name) const;
  /// Field of a check's witness object, as JSON text; empty if absent.
  std::string witness_field(const std::string& check, const std::string& field) const;

  std::string to_json(int indent = 2) const;
  static Certificate from_json(const std::string& text);
};

/// Serializes a list of certificates as a JSON array.
std::string to_json(const std::vector<Certificate>& certs, int indent = 2);

/// Structural validation of a certificate document against the schema
///   {"n", "mult", "exps", "sigma", "cutoff", "conventions", "checks": [{"name", "anchor", "status", "witness"}]}.
/// Accepts one certificate or an array of them.
bool validate_certificate_json(const std::string& text, std::string* why = nullptr);

}  // namespace qconj
