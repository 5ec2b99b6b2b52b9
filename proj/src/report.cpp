#include "cqg/report.hpp"

#include <algorithm>

namespace cqg {

void Report::check(const std::string& family, bool ok, const std::string& item,
                   const std::function<std::string()>& residual) {
  auto it = std::find_if(counts.begin(), counts.end(), [&](const auto& c) { return c.first == family; });
  if (it == counts.end())
    counts.emplace_back(family, 1);
  else
    ++it->second;
  if (!ok) failures.push_back({family, item, residual ? residual() : std::string()});
}

void Report::merge(const Report& other) {
  for (const auto& [fam, n] : other.counts) {
    auto it = std::find_if(counts.begin(), counts.end(), [&](const auto& c) { return c.first == fam; });
    if (it == counts.end())
      counts.emplace_back(fam, n);
    else
      it->second += n;
  }
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::size_t Report::total_checks() const {
  std::size_t n = 0;
  for (const auto& c : counts) n += c.second;
  return n;
}

Json Report::to_json() const {
  Json j;
  j["title"] = title;
  j["passed"] = passed();
  Json c = Json::object();
  for (const auto& [fam, n] : counts) c[fam] = n;
  j["checks"] = c;
  Json f = Json::array();
  for (const auto& e : failures) f.push_back({{"axiom", e.axiom}, {"monomial", e.monomial}, {"residual", e.residual}});
  j["failures"] = f;
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

}  // namespace cqg
