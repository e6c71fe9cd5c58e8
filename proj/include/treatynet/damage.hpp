#pragma once

#include <span>
#include <string>
#include <vector>

#include "treatynet/community.hpp"
#include "treatynet/graph.hpp"

namespace treatynet {

/// One disruption to simulate.
struct Scenario {
  enum class Kind : std::uint8_t { Country, Block, Treaty };

  Kind kind = Kind::Country;
  CountryId country = 0;           // Kind::Country
  std::vector<CountryId> block;    // Kind::Block (may be empty: identity scenario)
  TreatyId treaty = 0;             // Kind::Treaty
  LayerId layer = LayerId::Political;  // removal layer; ignored for Kind::Treaty

  static Scenario country_removal(CountryId id, LayerId layer);
  static Scenario block_removal(std::vector<CountryId> block, LayerId layer);
  static Scenario treaty_removal(TreatyId id);
};

std::string_view scenario_kind_name(Scenario::Kind kind);

/// Report entity for a scenario: iso3, treaty acronym, or '+'-joined block.
std::string scenario_entity(const MultiplexNetwork& network, const Scenario& scenario);

/// Which graphs the three indicators are measured on. Mixed is the default:
/// communities on the coupled multiplex, components and giant size on the
/// layer the scenario touches. The uniform scopes apply one view to all three.
enum class DamageScope : std::uint8_t { Mixed, Layer, Multiplex };

std::string_view damage_scope_name(DamageScope scope);
DamageScope parse_damage_scope(std::string_view text);

/// Before/after indicator triple and the damage index
///   delta = (c * q) / g,  c = C1/C0, q = Q1/Q0, g = G1/G0.
/// Community counts are restart medians, so C0/C1 may be fractional.
struct DamageMetrics {
  double communities_before = 0, communities_after = 0;  // C0, C1
  double components_before = 0, components_after = 0;    // Q0, Q1
  double giant_before = 0, giant_after = 0;              // G0, G1
  double c = 0, q = 0, g = 0;
  double delta = 0;
  DamageScope scope = DamageScope::Mixed;
};

struct DamageReport {
  Scenario scenario;
  std::string entity;  // iso3, treaty acronym, or '+'-joined block
  LayerId layer = LayerId::Political;
  DamageMetrics metrics;
  double delta_normalized = 0.0;  // delta / max(delta) within the sweep
  CommunityParams params;
};

/// Cached baseline triple for one (network, scope, layer, params) tuple.
struct Baseline {
  double communities = 0;
  double component_count = 0;
  double giant_size = 0;
};

Baseline compute_baseline(const MultiplexNetwork& network, DamageScope scope,
                          LayerId layer, const CommunityParams& params);

/// Applies the scenario, re-measures (C, Q, G) with the same parameters and a
/// fresh detection, and forms the ratios. Lookup errors propagate.
DamageMetrics evaluate(const MultiplexNetwork& network, const Scenario& scenario,
                       const CommunityParams& params, DamageScope scope);

/// evaluate() against a precomputed baseline (one per sweep).
DamageMetrics evaluate_against(const MultiplexNetwork& network, const Scenario& scenario,
                               const CommunityParams& params, DamageScope scope,
                               const Baseline& baseline);

/// Element-wise delta / max(delta); the maximum maps to exactly 1.
std::vector<double> normalize(std::span<const double> deltas);

/// CountryRemoval(i, layer) for every country, normalized over the sweep,
/// sorted by normalized delta descending with ties broken by iso3 ascending.
std::vector<DamageReport> sweep_countries(const MultiplexNetwork& network, LayerId layer,
                                          const CommunityParams& params, DamageScope scope,
                                          unsigned threads = 0);

/// TreatyRemoval(t) for the whole registry; normalization within each
/// treaty's own layer, ties broken by acronym.
std::vector<DamageReport> sweep_treaties(const MultiplexNetwork& network,
                                         const CommunityParams& params, DamageScope scope,
                                         unsigned threads = 0);

}  // namespace treatynet
