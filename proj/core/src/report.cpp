#include "ncdedekind/report.hpp"

#include <algorithm>

namespace ncdedekind {

bool CheckReport::all_pass() const {
  return std::all_of(records.begin(), records.end(),
                     [](const CheckRecord& r) { return r.pass; });
}

std::size_t CheckReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(),
      [](const CheckRecord& r) { return !r.pass; }));
}

double CheckReport::worst_deviation() const {
  double w = 0.0;
  for (const auto& r : records) w = std::max(w, r.deviation);
  return w;
}

double CheckReport::worst_deviation(const std::string& identity) const {
  double w = 0.0;
  for (const auto& r : records)
    if (r.identity == identity) w = std::max(w, r.deviation);
  return w;
}

void CheckReport::append(const CheckReport& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

}  // namespace ncdedekind
