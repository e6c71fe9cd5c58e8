#include "treatynet/damage.hpp"

#include <algorithm>
#include <cmath>

#include "treatynet/parallel.hpp"

namespace treatynet {

Scenario Scenario::country_removal(CountryId id, LayerId layer) {
  Scenario s;
  s.kind = Kind::Country;
  s.country = id;
  s.layer = layer;
  return s;
}

Scenario Scenario::block_removal(std::vector<CountryId> block, LayerId layer) {
  Scenario s;
  s.kind = Kind::Block;
  s.block = std::move(block);
  s.layer = layer;
  return s;
}

Scenario Scenario::treaty_removal(TreatyId id) {
  Scenario s;
  s.kind = Kind::Treaty;
  s.treaty = id;
  return s;
}

std::string_view scenario_kind_name(Scenario::Kind kind) {
  switch (kind) {
    case Scenario::Kind::Country: return "country";
    case Scenario::Kind::Block: return "block";
    case Scenario::Kind::Treaty: return "treaty";
  }
  return "country";
}

std::string_view damage_scope_name(DamageScope scope) {
  switch (scope) {
    case DamageScope::Mixed: return "mixed";
    case DamageScope::Layer: return "layer";
    case DamageScope::Multiplex: return "multiplex";
  }
  return "mixed";
}

DamageScope parse_damage_scope(std::string_view text) {
  if (text == "mixed") return DamageScope::Mixed;
  if (text == "layer") return DamageScope::Layer;
  if (text == "multiplex") return DamageScope::Multiplex;
  throw ValidationError("unknown scope '" + std::string(text) +
                        "' (expected 'mixed', 'layer' or 'multiplex')");
}

namespace {

// Removal layer a scenario acts on (a treaty's own layer for treaty removals).
LayerId scenario_layer(const MultiplexNetwork& net, const Scenario& s) {
  if (s.kind == Scenario::Kind::Treaty) return net.treaty(s.treaty).layer;
  return s.layer;
}

double communities_for(const MultiplexNetwork& net, DamageScope scope, LayerId layer,
                       const CommunityParams& params) {
  const Scope detect_scope = scope == DamageScope::Layer ? Scope::Layer : Scope::Multiplex;
  return median_count(detect_all(net, detect_scope, layer, params).restart_counts);
}

ComponentsSummary components_for(const MultiplexNetwork& net, DamageScope scope,
                                 LayerId layer) {
  return scope == DamageScope::Multiplex ? components_aggregate(net)
                                         : components(net, layer);
}

MultiplexNetwork apply_scenario(const MultiplexNetwork& net, const Scenario& s) {
  switch (s.kind) {
    case Scenario::Kind::Country:
      return remove_country(net, s.country, s.layer);
    case Scenario::Kind::Block:
      return remove_block(net, s.block, s.layer);
    case Scenario::Kind::Treaty:
      return remove_treaty(net, s.treaty);
  }
  return net;
}

void sort_reports(std::vector<DamageReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const DamageReport& x, const DamageReport& y) {
                     if (x.delta_normalized != y.delta_normalized) {
                       return x.delta_normalized > y.delta_normalized;
                     }
                     return x.entity < y.entity;
                   });
}

}  // namespace

std::string scenario_entity(const MultiplexNetwork& network, const Scenario& scenario) {
  switch (scenario.kind) {
    case Scenario::Kind::Country:
      return network.country(scenario.country).iso3;
    case Scenario::Kind::Treaty:
      return network.treaty(scenario.treaty).acronym;
    case Scenario::Kind::Block: {
      if (scenario.block.empty()) return "empty-block";
      std::string out;
      for (CountryId id : scenario.block) {
        if (!out.empty()) out.push_back('+');
        out += network.country(id).iso3;
      }
      return out;
    }
  }
  return {};
}

Baseline compute_baseline(const MultiplexNetwork& network, DamageScope scope,
                          LayerId layer, const CommunityParams& params) {
  Baseline b;
  b.communities = communities_for(network, scope, layer, params);
  const ComponentsSummary comps = components_for(network, scope, layer);
  b.component_count = static_cast<double>(comps.count);
  b.giant_size = static_cast<double>(comps.giant_size);
  return b;
}

DamageMetrics evaluate_against(const MultiplexNetwork& network, const Scenario& scenario,
                               const CommunityParams& params, DamageScope scope,
                               const Baseline& baseline) {
  if (network.countries().empty()) {
    throw ValidationError("damage evaluation on an empty network");
  }
  const LayerId layer = scenario_layer(network, scenario);
  const MultiplexNetwork derived = apply_scenario(network, scenario);

  DamageMetrics m;
  m.scope = scope;
  m.communities_before = baseline.communities;
  m.components_before = baseline.component_count;
  m.giant_before = baseline.giant_size;

  m.communities_after = communities_for(derived, scope, layer, params);
  const ComponentsSummary comps = components_for(derived, scope, layer);
  m.components_after = static_cast<double>(comps.count);
  m.giant_after = static_cast<double>(comps.giant_size);

  m.c = m.communities_after / m.communities_before;
  m.q = m.components_after / m.components_before;
  m.g = m.giant_after / m.giant_before;
  m.delta = (m.c * m.q) / m.g;
  return m;
}

DamageMetrics evaluate(const MultiplexNetwork& network, const Scenario& scenario,
                       const CommunityParams& params, DamageScope scope) {
  if (network.countries().empty()) {
    throw ValidationError("damage evaluation on an empty network");
  }
  const LayerId layer = scenario_layer(network, scenario);
  const Baseline baseline = compute_baseline(network, scope, layer, params);
  return evaluate_against(network, scenario, params, scope, baseline);
}

std::vector<double> normalize(std::span<const double> deltas) {
  if (deltas.empty()) throw ValidationError("normalize: empty delta sequence");
  double max = 0.0;
  for (double d : deltas) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw ValidationError("normalize: deltas must be finite and > 0");
    }
    max = std::max(max, d);
  }
  std::vector<double> out;
  out.reserve(deltas.size());
  for (double d : deltas) out.push_back(d / max);
  return out;
}

std::vector<DamageReport> sweep_countries(const MultiplexNetwork& network, LayerId layer,
                                          const CommunityParams& params, DamageScope scope,
                                          unsigned threads) {
  if (network.countries().empty()) {
    throw ValidationError("country sweep on an empty network");
  }
  const Baseline baseline = compute_baseline(network, scope, layer, params);

  const std::size_t n = network.countries().size();
  std::vector<DamageReport> reports(n);
  parallel_for(n, threads, [&](std::size_t i) {
    const CountryId id = static_cast<CountryId>(i);
    DamageReport& r = reports[i];
    r.scenario = Scenario::country_removal(id, layer);
    r.entity = network.country(id).iso3;
    r.layer = layer;
    r.params = params;
    r.metrics = evaluate_against(network, r.scenario, params, scope, baseline);
  });

  std::vector<double> deltas;
  deltas.reserve(n);
  for (const DamageReport& r : reports) deltas.push_back(r.metrics.delta);
  const std::vector<double> normalized = normalize(deltas);
  for (std::size_t i = 0; i < n; ++i) reports[i].delta_normalized = normalized[i];

  sort_reports(reports);
  return reports;
}

std::vector<DamageReport> sweep_treaties(const MultiplexNetwork& network,
                                         const CommunityParams& params, DamageScope scope,
                                         unsigned threads) {
  const std::size_t n = network.treaties().size();
  if (n == 0) return {};

  // one baseline per layer that actually hosts treaties
  bool has_layer[kLayerCount] = {false, false};
  for (const Treaty& t : network.treaties()) {
    has_layer[static_cast<std::size_t>(t.layer)] = true;
  }
  Baseline baselines[kLayerCount];
  for (LayerId l : kLayers) {
    if (has_layer[static_cast<std::size_t>(l)]) {
      baselines[static_cast<std::size_t>(l)] = compute_baseline(network, scope, l, params);
    }
  }

  std::vector<DamageReport> reports(n);
  parallel_for(n, threads, [&](std::size_t i) {
    const Treaty& t = network.treaties()[i];
    DamageReport& r = reports[i];
    r.scenario = Scenario::treaty_removal(t.id);
    r.entity = t.acronym;
    r.layer = t.layer;
    r.params = params;
    r.metrics = evaluate_against(network, r.scenario, params, scope,
                                 baselines[static_cast<std::size_t>(t.layer)]);
  });

  // normalization is per layer-of-treaty: each layer's max maps to 1
  for (LayerId l : kLayers) {
    std::vector<std::size_t> indices;
    std::vector<double> deltas;
    for (std::size_t i = 0; i < n; ++i) {
      if (reports[i].layer == l) {
        indices.push_back(i);
        deltas.push_back(reports[i].metrics.delta);
      }
    }
    if (indices.empty()) continue;
    const std::vector<double> normalized = normalize(deltas);
    for (std::size_t k = 0; k < indices.size(); ++k) {
      reports[indices[k]].delta_normalized = normalized[k];
    }
  }

  sort_reports(reports);
  return reports;
}

}  // namespace treatynet
