#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polytwo {

enum class Verdict { Pass, Fail, NotApplicable };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::NotApplicable: return "NOT-APPLICABLE";
  }
  return "FAIL";
}

/// One named property checked over a number of instances. `detail` keeps the
/// first counterexample, or a note when the check does not apply.
struct Check {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string detail;

  explicit Check(std::string n = {}) : name(std::move(n)) {}

  static Check not_applicable(std::string n, std::string why) {
    Check c(std::move(n));
    c.verdict = Verdict::NotApplicable;
    c.detail = std::move(why);
    return c;
  }

  bool record(bool ok, std::string_view witness = {}) {
    ++instances;
    if (!ok) {
      ++failures;
      verdict = Verdict::Fail;
      if (detail.empty()) detail = std::string(witness);
    }
    return ok;
  }

  bool pass() const { return verdict != Verdict::Fail; }
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  explicit SuiteReport(std::string s = {}) : suite(std::move(s)) {}

  Check& add(Check c) {
    checks.push_back(std::move(c));
    return checks.back();
  }
  void append(const SuiteReport& other) {
    for (const auto& c : other.checks) checks.push_back(c);
  }
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass()) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.failures;
    return n;
  }
  const Check* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace polytwo
