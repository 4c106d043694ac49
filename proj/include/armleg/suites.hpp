#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "armleg/statistics.hpp"

namespace armleg {

/// statistic value -> number of partitions of n attaining it
using Histogram = std::map<std::int64_t, std::int64_t>;

/// Histogram of h over the partitions of n. Throws SlopeTooSmall if p + q <= n.
Histogram histogram(std::int64_t n, Slope s);
/// Histogram of |D| + h, the cell dimension.
Histogram cell_dimension_table(std::int64_t n, Slope s);
/// Total variants, defined at every slope.
Histogram h_plus_histogram(std::int64_t n, Slope s);
Histogram h_minus_histogram(std::int64_t n, Slope s);

struct Counterexample {
  std::string message;
  /// Enough parameters to re-run the single failing instance.
  nlohmann::ordered_json instance;
};

struct SuiteReport {
  std::string suite;
  std::int64_t instances = 0;
  std::vector<Counterexample> failures;
  double wall_seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

/// h histograms agree for every coprime slope with n < p + q <= n + budget,
/// and h+ / h- histograms agree at every breakpoint slope of n.
SuiteReport verify_equidistribution(std::int64_t n, std::int64_t budget);

const std::vector<std::string>& suite_names();

/// Default slope bound when none is given (rectangle 4, lw-formulas 5,
/// equidistribution budget 4; ignored by the others).
std::int64_t default_slope_bound(std::string_view suite);

/// Runs one named sweep over all partitions of n <= max_n. Throws
/// UnknownSuite for names outside suite_names().
SuiteReport run_suite(std::string_view name, std::int64_t max_n,
                      std::optional<std::int64_t> slope_bound = std::nullopt);

}  // namespace armleg
