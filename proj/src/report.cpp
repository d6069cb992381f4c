#include "simpcat/report.hpp"

#include <sstream>

#include "json.hpp"

namespace simpcat {

void Report::absorb(const Report& other, const std::string& prefix) {
  for (const auto& v : other.violations)
    violations.push_back({prefix + v.check, v.witness});
}

std::string Report::summary(std::size_t max_items) const {
  if (ok()) return "";
  std::ostringstream os;
  os << violations.size() << " violation(s)";
  std::size_t shown = 0;
  for (const auto& v : violations) {
    if (shown++ == max_items) {
      os << "; ...";
      break;
    }
    os << "; " << v.check << " [" << v.witness << "]";
  }
  return os.str();
}

bool Certificate::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Certificate::check(const std::string& name, bool ok,
                        const std::string& detail) {
  checks.push_back({name, ok, detail});
  if (!ok && !counterexample && !detail.empty()) counterexample = detail;
}

void Certificate::fail(const std::string& name, const std::string& witness) {
  check(name, false, witness);
}

std::string render_text(const Certificate& c) {
  std::ostringstream os;
  os << "command: " << c.command << "\n";
  for (const auto& [name, hash] : c.inputs)
    os << "input: " << name << " sha=" << hash << "\n";
  for (const auto& ch : c.checks) {
    os << (ch.pass ? "PASS " : "FAIL ") << ch.name;
    if (!ch.detail.empty()) os << ": " << ch.detail;
    os << "\n";
  }
  for (const auto& [label, row] : c.counts) {
    os << "counts " << label << ":";
    for (long long v : row) os << " " << v;
    os << "\n";
  }
  if (c.counterexample) os << "counterexample: " << *c.counterexample << "\n";
  os << "verdict: " << (c.pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string render_structured(const Certificate& c) {
  nlohmann::json j;
  j["command"] = c.command;
  j["inputs"] = c.inputs;
  j["checks"] = nlohmann::json::array();
  for (const auto& ch : c.checks)
    j["checks"].push_back(
        {{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
  j["counts"] = c.counts;
  if (c.counterexample)
    j["counterexample"] = *c.counterexample;
  else
    j["counterexample"] = nullptr;
  j["wall_ms"] = c.wall_ms;
  j["verdict"] = c.pass() ? "PASS" : "FAIL";
  return j.dump(2);
}

Certificate parse_structured(const std::string& doc) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(doc);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad certificate document: ") + e.what());
  }
  Certificate c;
  c.command = j.at("command").get<std::string>();
  c.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
  for (const auto& ch : j.at("checks"))
    c.checks.push_back({ch.at("name").get<std::string>(),
                        ch.at("pass").get<bool>(),
                        ch.at("detail").get<std::string>()});
  c.counts =
      j.at("counts").get<std::map<std::string, std::vector<long long>>>();
  if (!j.at("counterexample").is_null())
    c.counterexample = j.at("counterexample").get<std::string>();
  c.wall_ms = j.at("wall_ms").get<double>();
  return c;
}

}  // namespace simpcat
