#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "treatynet/types.hpp"

namespace treatynet {

/// A per-country value series keyed by iso3 (e.g. an external fragility index
/// or a damage ranking column). Keys sorted and unique, values finite.
struct IndexedSeries {
  std::string name;
  std::vector<std::pair<std::string, double>> values;

  /// Sorts by key and validates uniqueness/finiteness.
  static IndexedSeries make(std::string name,
                            std::vector<std::pair<std::string, double>> values);
};

enum class PValueMethod : std::uint8_t { TApprox, Permutation };

std::string_view pvalue_method_name(PValueMethod method);
PValueMethod parse_pvalue_method(std::string_view text);

struct CorrelationResult {
  double r = 0.0;      // Spearman coefficient, in [-1, 1]
  double p = 1.0;      // two-sided p-value, in [0, 1]
  std::size_t n = 0;   // key overlap used
  PValueMethod method = PValueMethod::TApprox;
};

/// Average ranks (fractional on ties) of a value vector.
std::vector<double> average_ranks(const std::vector<double>& values);

/// Spearman rank correlation over the key overlap of the two series.
/// The t-approximation uses n-2 degrees of freedom; the permutation method
/// shuffles one series with a seeded generator (>= 1000 permutations).
/// Errors: overlap < 3, or zero rank variance in either series.
CorrelationResult spearman(const IndexedSeries& a, const IndexedSeries& b,
                           PValueMethod method = PValueMethod::TApprox,
                           std::size_t permutations = 10000, std::uint64_t seed = 0);

}  // namespace treatynet
