#pragma once

// Golden-data self test: each fixture file names a root system and lists
// values that must be reproduced exactly.

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

#include "growth/report.hpp"

namespace growth::cli {

/// Directory the fixtures were installed to (or the source tree copy).
std::filesystem::path default_fixture_dir();

/// Checks every key present in one fixture document. Check names are
/// prefixed with `name`.
Report check_fixture(const nlohmann::json& doc, const std::string& name);

/// Runs every *.json in dir in name order. A file that cannot be parsed is
/// reported as a failure under its own name.
Report run_selftest(const std::filesystem::path& dir);

}  // namespace growth::cli
