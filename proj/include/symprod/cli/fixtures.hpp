#pragma once

#include <array>
#include <string>
#include <vector>

#include "symprod/cli/report.hpp"
#include "symprod/op_trace.hpp"

namespace symprod::cli {

struct FixtureResult {
  std::string name;
  std::string kind;
  std::string provenance;  ///< "published", "derived" or "trivial"
  bool passed = false;
  std::string detail;
};

struct FixtureReport {
  std::vector<FixtureResult> results;  ///< in declaration order
  std::array<std::size_t, op_count> op_calls{};

  std::size_t passed() const;
  bool all_passed() const { return passed() == results.size(); }
};

/// Corpus shipped with the sources.
std::string default_fixture_path();

/// Fixtures run concurrently; a failing or throwing fixture is recorded, never
/// propagated. Throws Error(io_error) only if the corpus cannot be read.
FixtureReport run_fixtures(const std::string& path);
FixtureReport run_fixtures(const Json& corpus);

Json fixture_report_json(const FixtureReport& r);
std::string fixture_report_text(const FixtureReport& r);

}  // namespace symprod::cli
