#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "treatynet/types.hpp"

namespace treatynet {

/// Provenance entry marking a bilateral deal. Bilateral support is never
/// removed by remove_treaty.
inline constexpr TreatyId kBilateralDeal = 0xFFFFFFFFu;

/// One undirected deduplicated edge of a layer. Several deals between the same
/// pair merge into one record with the union of their provenance.
struct Edge {
  CountryId a = 0;  // a < b
  CountryId b = 0;
  std::vector<TreatyId> provenance;  // sorted, unique, non-empty

  bool operator==(const Edge&) const = default;
};

struct BilateralPair {
  CountryId a = 0;
  CountryId b = 0;
  LayerId layer = LayerId::Political;
};

struct ComponentsSummary {
  std::size_t count = 0;       // number of connected components
  std::size_t giant_size = 0;  // node count of the largest component
  std::vector<std::size_t> sizes;  // descending; sums to the node count
};

/// Scope of a structural measurement: one layer's edge set, or the union of
/// both layers over the shared node set (community detection interprets
/// Multiplex as the coupled supra-graph instead, see community.hpp).
enum class Scope : std::uint8_t { Layer, Multiplex };

/// Two named layers over one country set. Immutable after construction;
/// removal operations return derived copies and never touch their source, so
/// values can be shared freely across threads.
class MultiplexNetwork {
 public:
  MultiplexNetwork() = default;

  const std::vector<Country>& countries() const { return countries_; }
  const std::vector<Treaty>& treaties() const { return treaties_; }
  std::span<const Edge> edges(LayerId layer) const {
    return layers_[static_cast<std::size_t>(layer)];
  }
  std::size_t edge_count(LayerId layer) const { return edges(layer).size(); }

  const Country& country(CountryId id) const;  // throws LookupError
  const Treaty& treaty(TreatyId id) const;     // throws LookupError
  std::optional<CountryId> find_iso3(std::string_view iso3) const;

  /// Provenance index: the deduplicated edges carrying this treaty, as
  /// endpoint pairs within the treaty's own layer.
  const std::vector<std::pair<CountryId, CountryId>>& treaty_edges(TreatyId id) const;

 private:
  friend MultiplexNetwork build_network(std::vector<Country>, std::vector<Treaty>,
                                        std::span<const BilateralPair>);
  friend MultiplexNetwork remove_country(const MultiplexNetwork&, CountryId, LayerId);
  friend MultiplexNetwork remove_block(const MultiplexNetwork&,
                                       std::span<const CountryId>, LayerId);
  friend MultiplexNetwork remove_treaty(const MultiplexNetwork&, TreatyId);

  void rebuild_provenance_index();

  std::vector<Country> countries_;
  std::vector<Treaty> treaties_;
  std::array<std::vector<Edge>, kLayerCount> layers_;  // sorted by (a, b)
  std::vector<std::vector<std::pair<CountryId, CountryId>>> treaty_edges_;
};

/// Clique-projects every treaty onto its layer (all C(m,2) member pairs),
/// merges duplicate pairs, and appends bilateral deals. Pure: identical inputs
/// give identical edge sets.
MultiplexNetwork build_network(std::vector<Country> countries,
                               std::vector<Treaty> treaties,
                               std::span<const BilateralPair> bilaterals = {});

/// Connected components of one layer's edge set over all countries. Isolated
/// countries count as size-1 components.
ComponentsSummary components(const MultiplexNetwork& network, LayerId layer);

/// Connected components of the union of both layers' edges.
ComponentsSummary components_aggregate(const MultiplexNetwork& network);

/// Drops every edge of `layer` incident to the country. The node itself stays
/// (isolated in that layer); the other layer is untouched.
MultiplexNetwork remove_country(const MultiplexNetwork& network, CountryId id,
                                LayerId layer);

/// remove_country for every member of the block; order never matters.
MultiplexNetwork remove_block(const MultiplexNetwork& network,
                              std::span<const CountryId> block, LayerId layer);

/// Deletes the treaty from every edge's provenance in its layer; edges left
/// with empty provenance disappear, edges with other support survive.
MultiplexNetwork remove_treaty(const MultiplexNetwork& network, TreatyId id);

}  // namespace treatynet
