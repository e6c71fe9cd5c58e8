#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "treatynet/graph.hpp"
#include "treatynet/stats.hpp"
#include "treatynet/types.hpp"

namespace treatynet {

/// One treaty row as read from treaties.csv, after classification overrides
/// but before Both-splitting.
struct TreatyRecord {
  std::string acronym;
  std::string name;
  LayerTag tag = LayerTag::Political;
  std::vector<std::string> members;  // iso3 codes, registry order as written

  bool operator==(const TreatyRecord&) const = default;
};

/// Dataset-level counts printed by `audit`. Deal pairs are clique pairs plus
/// bilaterals before deduplication; distinct edges are the deduplicated pair
/// sets; political_only counts distinct political pairs absent economically.
struct DatasetAudit {
  std::size_t country_count = 0;
  std::array<std::size_t, kLayerCount> deal_pairs = {0, 0};
  std::array<std::size_t, kLayerCount> distinct_edges = {0, 0};
  std::size_t political_only_pairs = 0;

  bool operator==(const DatasetAudit&) const = default;
};

struct Dataset {
  std::vector<Country> countries;
  std::vector<TreatyRecord> records;     // as loaded (tags resolved, not split)
  std::vector<Treaty> treaties;          // split registry ready for build_network
  std::vector<BilateralPair> bilaterals;
  DatasetAudit audit;
};

/// Loads and validates the four input files. Treaties tagged Both are split
/// into one political and one economic registry entry sharing members. All
/// diagnostics carry file and line.
///
/// File schemas (UTF-8 CSV, exact headers):
///   countries.csv      iso3,name
///   treaties.csv       acronym,name,layer,members   (members ';'-separated)
///   bilaterals.csv     iso3_a,iso3_b,layer
///   classification.csv acronym,layer                (overrides treaty tags)
Dataset load_dataset(const std::string& countries_file, const std::string& treaties_file,
                     const std::optional<std::string>& bilaterals_file = std::nullopt,
                     const std::optional<std::string>& classification_file = std::nullopt);

/// Two-column (iso3,value) series such as an external country index.
IndexedSeries load_index_series(const std::string& path, const std::string& name);

/// Round-trip writers for loaded registries (same schemas as load_dataset).
std::string countries_to_csv(const std::vector<Country>& countries);
std::string treaties_to_csv(const std::vector<TreatyRecord>& records);
std::string bilaterals_to_csv(const std::vector<BilateralPair>& bilaterals,
                              const std::vector<Country>& countries);

}  // namespace treatynet
