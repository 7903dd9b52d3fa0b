#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace growth {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Ordered list of named pass/fail results.
class Report {
 public:
  void add(std::string name, bool passed, std::string detail = {});
  void merge(const Report& other, const std::string& prefix = {});

  const std::vector<CheckResult>& results() const { return results_; }
  std::size_t failures() const;
  bool all_passed() const { return failures() == 0; }

  std::string to_text() const;
  nlohmann::json to_json() const;

 private:
  std::vector<CheckResult> results_;
};

/// Accumulates many instances of one identity into a single CheckResult,
/// keeping the first failing instance as the detail.
class CheckTally {
 public:
  explicit CheckTally(std::string name) : name_(std::move(name)) {}
  void record(bool ok, const std::string& instance);
  void flush_into(Report& report) const;

 private:
  std::string name_;
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::string first_failure_;
};

}  // namespace growth
