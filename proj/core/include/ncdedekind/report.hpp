#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncdedekind/exact_arith.hpp"

namespace ncdedekind {

/// Outcome of one identity at one sample point.
struct CheckRecord {
  std::string identity;
  std::optional<CoprimePair> pair;
  std::optional<Cusp> cusp;
  bool pass = false;
  double deviation = 0.0;
};

struct CheckReport {
  std::vector<CheckRecord> records;

  bool all_pass() const;
  std::size_t failures() const;
  double worst_deviation() const;
  /// Worst deviation among records of one identity.
  double worst_deviation(const std::string& identity) const;
  void append(const CheckReport& other);
};

}  // namespace ncdedekind
