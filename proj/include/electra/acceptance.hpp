#pragma once

#include "electra/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace electra {

struct AcceptanceOptions {
  /// Below 6 it caps every order that needs enumeration or a built poset;
  /// closed-form criteria always run at their full bounds.
  int max_n = 6;
  std::uint64_t seed = 20240611;
  /// Adds the n = 6 Eulerian check to criterion 5.
  bool extended = false;
};

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  Json data;
};

constexpr int kCriterionCount = 15;

std::string criterion_name(int id);

/// Throws std::out_of_range unless 1 <= id <= kCriterionCount.
CriterionResult run_criterion(int id, const AcceptanceOptions& opts);

/// "PASS  3 graded: ..." on one line.
std::string summary_line(const CriterionResult& r);

}  // namespace electra
