#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treatynet/community.hpp"
#include "treatynet/damage.hpp"
#include "treatynet/stats.hpp"

namespace treatynet {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Config echo + input digests stamped at the top of every output file.
/// Contains nothing time- or host-dependent, so identical runs write
/// byte-identical files.
struct Provenance {
  std::vector<std::pair<std::string, std::string>> config;  // key, value
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
};

/// FNV-1a 64-bit digest of a file's bytes, as 16 hex chars.
std::string file_digest(const std::string& path);

/// Report CSV. Column order is fixed:
/// scenario-kind,entity,layer,C0,C1,Q0,Q1,G0,G1,c,q,g,delta,delta-norm,
/// seed,repetitions,resolution,omega,scope
std::string reports_to_csv(const Provenance& prov, std::span<const DamageReport> reports);

/// Equivalent JSON: {"provenance": {...}, "reports": [...]}.
std::string reports_to_json(const Provenance& prov, std::span<const DamageReport> reports);

/// One parsed row of a report CSV (comment lines skipped).
struct ReportRow {
  std::string scenario_kind;
  std::string entity;
  std::string layer;
  double delta = 0.0;
  double delta_normalized = 0.0;
};

std::vector<ReportRow> read_report_csv(const std::string& path);

/// Partition serialization: (node, layer, label) rows.
std::string partition_to_csv(const Provenance& prov, const MultiplexNetwork& network,
                             const Partition& partition);
std::string partition_to_json(const Provenance& prov, const MultiplexNetwork& network,
                              const Partition& partition);

std::string correlation_to_csv(const Provenance& prov, const CorrelationResult& result,
                               const std::string& series_a, const std::string& series_b);
std::string correlation_to_json(const Provenance& prov, const CorrelationResult& result,
                                const std::string& series_a, const std::string& series_b);

/// (entity, delta-norm) table for external plotting tools.
std::string plot_data_to_csv(const Provenance& prov, std::span<const DamageReport> reports);

}  // namespace treatynet
