#include "growth/report.hpp"

#include <algorithm>

namespace growth {

void Report::add(std::string name, bool passed, std::string detail) {
  results_.push_back({std::move(name), passed, std::move(detail)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& r : other.results_) results_.push_back({prefix + r.name, r.passed, r.detail});
}

std::size_t Report::failures() const {
  return std::size_t(std::count_if(results_.begin(), results_.end(), [](const auto& r) { return !r.passed; }));
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& r : results_) {
    out += r.passed ? "PASS  " : "FAIL  ";
    out += r.name;
    if (!r.detail.empty()) out += "  [" + r.detail + "]";
    out += "\n";
  }
  return out;
}

nlohmann::json Report::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& r : results_) arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  return {{"passed", all_passed()}, {"failures", failures()}, {"checks", arr}};
}

void CheckTally::record(bool ok, const std::string& instance) {
  ++total_;
  if (!ok && failed_++ == 0) first_failure_ = instance;
}

void CheckTally::flush_into(Report& report) const {
  std::string detail = std::to_string(total_ - failed_) + "/" + std::to_string(total_) + " instances";
  if (failed_) detail += "; first failure: " + first_failure_;
  report.add(name_, failed_ == 0, detail);
}

}  // namespace growth
