#pragma once

#include <cstdint>
#include <vector>

#include "treatynet/graph.hpp"

namespace treatynet {

struct CommunityParams {
  std::uint64_t seed = 0;
  int repetitions = 1;       // independent seeded restarts, >= 1
  double resolution = 1.0;   // > 0
  double omega = 1.0;        // interlayer coupling weight, >= 0 (multiplex scope only)
  bool weight_by_provenance = false;  // optional weighted view: weight = |provenance|
};

/// Assignment of node-layer pairs to community labels. Labels are
/// canonicalized to 0..K-1 in first-appearance order over the node index, so
/// equal partitions serialize identically.
///
/// Index convention: layer scope stores one label per country (index =
/// country id); multiplex scope stores one label per replica (index =
/// country id * 2 + layer).
struct Partition {
  Scope scope = Scope::Layer;
  LayerId layer = LayerId::Political;  // meaningful for layer scope
  std::vector<int> labels;
  double quality = 0.0;  // multislice modularity of the partition
  std::uint64_t seed = 0;

  bool operator==(const Partition&) const = default;
};

struct DetectionResult {
  Partition best;                   // best-quality partition over all restarts
  std::vector<int> restart_counts;  // community count of each restart, in order
};

/// Seeded greedy modularity optimization (Louvain two-phase: local moves to a
/// fixed point, then aggregation, repeated). Multiplex scope optimizes on the
/// supra-graph: one replica per (country, layer), intra-layer edges as given,
/// and an ω-weighted edge between the two replicas of each country, scored
/// with the multislice quality (per-layer null model, coupling unpenalized).
DetectionResult detect_all(const MultiplexNetwork& network, Scope scope, LayerId layer,
                           const CommunityParams& params);

Partition detect(const MultiplexNetwork& network, Scope scope, LayerId layer,
                 const CommunityParams& params);

/// Number of distinct labels.
int community_count(const Partition& partition);

/// Median of per-restart community counts; the statistic the damage index
/// consumes when repetitions > 1 (damps optimizer stochasticity).
double median_count(const std::vector<int>& counts);

/// Stable seed derivation for restart k of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k);

}  // namespace treatynet
