#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cqg {

using Json = nlohmann::ordered_json;

struct CheckEntry {
  std::string axiom;
  std::string monomial;
  std::string residual;
};

/// Outcome of a batch of exact checks. Only failures are itemized; the
/// per-family counters say how much was covered.
struct Report {
  std::string title;
  std::vector<std::pair<std::string, std::size_t>> counts;  // family -> checks run
  std::vector<CheckEntry> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }

  /// Records one check; the residual is only rendered on failure.
  void check(const std::string& family, bool ok, const std::string& item,
             const std::function<std::string()>& residual);
  void merge(const Report& other);
  std::size_t total_checks() const;

  Json to_json() const;
};

}  // namespace cqg
