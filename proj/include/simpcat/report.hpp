#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace simpcat {

/// Thrown on malformed inputs and violated preconditions (CLI exit code 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Outcome of a structural validation. Empty means every checked identity held.
struct Report {
  struct Violation {
    std::string check;
    std::string witness;
  };
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(const std::string& check, const std::string& witness) {
    violations.push_back({check, witness});
  }
  void absorb(const Report& other, const std::string& prefix);
  /// Compact description of the violations; empty when the report is clean.
  std::string summary(std::size_t max_items = 8) const;
};

/// Machine-readable result of a CLI check run. Deterministic apart from
/// wall_ms.
struct Certificate {
  struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
  };

  std::string command;
  std::map<std::string, std::string> inputs;  // name -> content hash
  std::vector<Check> checks;
  std::map<std::string, std::vector<long long>> counts;
  std::optional<std::string> counterexample;
  double wall_ms = 0.0;

  bool pass() const;
  void check(const std::string& name, bool ok, const std::string& detail = "");
  /// Records a failing check and keeps the first counterexample seen.
  void fail(const std::string& name, const std::string& witness);
};

std::string render_text(const Certificate& c);
std::string render_structured(const Certificate& c);
Certificate parse_structured(const std::string& doc);

}  // namespace simpcat
