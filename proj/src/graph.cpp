#include "treatynet/graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace treatynet {

namespace {

struct UnionFind {
  std::vector<CountryId> parent;
  std::vector<std::size_t> size;
  std::size_t components;

  explicit UnionFind(std::size_t n) : parent(n), size(n, 1), components(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<CountryId>(i);
  }

  CountryId find(CountryId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];  // path halving
      x = parent[x];
    }
    return x;
  }

  void unite(CountryId a, CountryId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    --components;
  }
};

ComponentsSummary summarize(UnionFind& uf) {
  ComponentsSummary out;
  const std::size_t n = uf.parent.size();
  for (CountryId i = 0; i < n; ++i) {
    if (uf.find(i) == i) out.sizes.push_back(uf.size[i]);
  }
  std::sort(out.sizes.begin(), out.sizes.end(), std::greater<>());
  out.count = out.sizes.size();
  out.giant_size = out.sizes.empty() ? 0 : out.sizes.front();
  return out;
}

}  // namespace

const Country& MultiplexNetwork::country(CountryId id) const {
  if (id >= countries_.size()) {
    throw LookupError("unknown country id " + std::to_string(id));
  }
  return countries_[id];
}

const Treaty& MultiplexNetwork::treaty(TreatyId id) const {
  if (id >= treaties_.size()) {
    throw LookupError("unknown treaty id " + std::to_string(id));
  }
  return treaties_[id];
}

std::optional<CountryId> MultiplexNetwork::find_iso3(std::string_view iso3) const {
  for (const Country& c : countries_) {
    if (c.iso3 == iso3) return c.id;
  }
  return std::nullopt;
}

const std::vector<std::pair<CountryId, CountryId>>& MultiplexNetwork::treaty_edges(
    TreatyId id) const {
  if (id >= treaty_edges_.size()) {
    throw LookupError("unknown treaty id " + std::to_string(id));
  }
  return treaty_edges_[id];
}

void MultiplexNetwork::rebuild_provenance_index() {
  treaty_edges_.assign(treaties_.size(), {});
  for (const auto& layer : layers_) {
    for (const Edge& e : layer) {
      for (TreatyId t : e.provenance) {
        if (t != kBilateralDeal) treaty_edges_[t].emplace_back(e.a, e.b);
      }
    }
  }
}

MultiplexNetwork build_network(std::vector<Country> countries,
                               std::vector<Treaty> treaties,
                               std::span<const BilateralPair> bilaterals) {
  const std::size_t n = countries.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (countries[i].id != i) {
      throw ValidationError("country registry ids must be contiguous 0..N-1; entry " +
                            std::to_string(i) + " has id " +
                            std::to_string(countries[i].id));
    }
  }

  // (a, b, provenance) tuples per layer, then sort + fold duplicates.
  std::array<std::vector<std::tuple<CountryId, CountryId, TreatyId>>, kLayerCount> raw;
  for (std::size_t ti = 0; ti < treaties.size(); ++ti) {
    Treaty& t = treaties[ti];
    if (t.id != ti) {
      throw ValidationError("treaty registry ids must be contiguous; entry " +
                            std::to_string(ti) + " has id " + std::to_string(t.id));
    }
    std::sort(t.members.begin(), t.members.end());
    t.members.erase(std::unique(t.members.begin(), t.members.end()), t.members.end());
    if (t.members.size() < 2) {
      throw ValidationError("treaty '" + t.acronym + "' has fewer than two members");
    }
    for (CountryId m : t.members) {
      if (m >= n) {
        throw ValidationError("treaty '" + t.acronym + "' references unknown country id " +
                              std::to_string(m));
      }
    }
    auto& bucket = raw[static_cast<std::size_t>(t.layer)];
    for (std::size_t i = 0; i < t.members.size(); ++i) {
      for (std::size_t j = i + 1; j < t.members.size(); ++j) {
        bucket.emplace_back(t.members[i], t.members[j], t.id);
      }
    }
  }
  for (const BilateralPair& bp : bilaterals) {
    if (bp.a >= n || bp.b >= n) {
      throw ValidationError("bilateral pair references unknown country id " +
                            std::to_string(bp.a >= n ? bp.a : bp.b));
    }
    if (bp.a == bp.b) {
      throw ValidationError("bilateral pair is a self-loop on country id " +
                            std::to_string(bp.a));
    }
    auto [lo, hi] = std::minmax(bp.a, bp.b);
    raw[static_cast<std::size_t>(bp.layer)].emplace_back(lo, hi, kBilateralDeal);
  }

  MultiplexNetwork net;
  net.countries_ = std::move(countries);
  net.treaties_ = std::move(treaties);
  for (std::size_t l = 0; l < kLayerCount; ++l) {
    auto& bucket = raw[l];
    std::sort(bucket.begin(), bucket.end());
    std::vector<Edge>& edges = net.layers_[l];
    for (const auto& [a, b, prov] : bucket) {
      if (!edges.empty() && edges.back().a == a && edges.back().b == b) {
        if (edges.back().provenance.back() != prov) {
          edges.back().provenance.push_back(prov);
        }
      } else {
        edges.push_back(Edge{a, b, {prov}});
      }
    }
  }
  net.rebuild_provenance_index();
  return net;
}

ComponentsSummary components(const MultiplexNetwork& network, LayerId layer) {
  UnionFind uf(network.countries().size());
  for (const Edge& e : network.edges(layer)) uf.unite(e.a, e.b);
  return summarize(uf);
}

ComponentsSummary components_aggregate(const MultiplexNetwork& network) {
  UnionFind uf(network.countries().size());
  for (LayerId layer : kLayers) {
    for (const Edge& e : network.edges(layer)) uf.unite(e.a, e.b);
  }
  return summarize(uf);
}

MultiplexNetwork remove_country(const MultiplexNetwork& network, CountryId id,
                                LayerId layer) {
  network.country(id);  // throws on unknown id
  MultiplexNetwork out = network;
  auto& edges = out.layers_[static_cast<std::size_t>(layer)];
  std::erase_if(edges, [id](const Edge& e) { return e.a == id || e.b == id; });
  out.rebuild_provenance_index();
  return out;
}

MultiplexNetwork remove_block(const MultiplexNetwork& network,
                              std::span<const CountryId> block, LayerId layer) {
  std::unordered_set<CountryId> members;
  for (CountryId id : block) {
    network.country(id);
    members.insert(id);
  }
  MultiplexNetwork out = network;
  auto& edges = out.layers_[static_cast<std::size_t>(layer)];
  std::erase_if(edges, [&members](const Edge& e) {
    return members.contains(e.a) || members.contains(e.b);
  });
  out.rebuild_provenance_index();
  return out;
}

MultiplexNetwork remove_treaty(const MultiplexNetwork& network, TreatyId id) {
  const Treaty& t = network.treaty(id);
  MultiplexNetwork out = network;
  auto& edges = out.layers_[static_cast<std::size_t>(t.layer)];
  for (Edge& e : edges) {
    std::erase(e.provenance, id);
  }
  std::erase_if(edges, [](const Edge& e) { return e.provenance.empty(); });
  out.rebuild_provenance_index();
  return out;
}

}  // namespace treatynet
