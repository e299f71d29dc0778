#pragma once

#include <optional>
#include <string>
#include <vector>

namespace starpoly {

/// One verified instance inside a check suite.
struct CheckCase {
  std::string label;
  bool passed = false;
  std::string detail;
};

/// Outcome of a verifier run: every case it tried, in order.
class CheckReport {
 public:
  explicit CheckReport(std::string suite) : suite_(std::move(suite)) {}

  void record(std::string label, bool passed, std::string detail = {}) {
    cases_.push_back(CheckCase{std::move(label), passed, std::move(detail)});
  }
  void merge(const CheckReport& other) {
    for (const auto& c : other.cases_) cases_.push_back(c);
  }

  const std::string& suite() const noexcept { return suite_; }
  const std::vector<CheckCase>& cases() const noexcept { return cases_; }

  bool passed() const {
    for (const auto& c : cases_)
      if (!c.passed) return false;
    return true;
  }

  std::optional<CheckCase> first_failure() const {
    for (const auto& c : cases_)
      if (!c.passed) return c;
    return std::nullopt;
  }

 private:
  std::string suite_;
  std::vector<CheckCase> cases_;
};

}  // namespace starpoly
