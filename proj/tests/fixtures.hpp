#pragma once

// Shared synthetic networks used across the test suites. Each graph is built
// through build_network with one two-member treaty per edge, so treaty
// removal and provenance paths stay exercised everywhere.

#include <string>
#include <utility>
#include <vector>

#include "treatynet/graph.hpp"

namespace treatynet::testing {

inline std::string synthetic_iso3(std::size_t i) {
  std::string code = "AAA";
  code[2] = static_cast<char>('A' + i % 26);
  code[1] = static_cast<char>('A' + (i / 26) % 26);
  code[0] = static_cast<char>('A' + (i / 676) % 26);
  return code;
}

inline std::vector<Country> make_countries(std::size_t n) {
  std::vector<Country> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(Country{static_cast<CountryId>(i), synthetic_iso3(i),
                          "Country " + std::to_string(i)});
  }
  return out;
}

using EdgeList = std::vector<std::pair<CountryId, CountryId>>;

/// One layer populated with the given edges (one treaty per edge), the other
/// layer left empty.
inline MultiplexNetwork make_layer_graph(std::size_t n, const EdgeList& edges,
                                         LayerId layer = LayerId::Political) {
  std::vector<Treaty> treaties;
  for (const auto& [a, b] : edges) {
    Treaty t;
    t.id = static_cast<TreatyId>(treaties.size());
    t.acronym = "E" + std::to_string(treaties.size());
    t.name = "Edge treaty " + std::to_string(treaties.size());
    t.layer = layer;
    t.members = {a, b};
    treaties.push_back(std::move(t));
  }
  return build_network(make_countries(n), std::move(treaties));
}

/// Both layers populated from explicit edge lists.
inline MultiplexNetwork make_two_layer_graph(std::size_t n, const EdgeList& political,
                                             const EdgeList& economic) {
  std::vector<Treaty> treaties;
  auto add = [&](const EdgeList& edges, LayerId layer) {
    for (const auto& [a, b] : edges) {
      Treaty t;
      t.id = static_cast<TreatyId>(treaties.size());
      t.acronym = "E" + std::to_string(treaties.size());
      t.name = "Edge treaty " + std::to_string(treaties.size());
      t.layer = layer;
      t.members = {a, b};
      treaties.push_back(std::move(t));
    }
  };
  add(political, LayerId::Political);
  add(economic, LayerId::Economic);
  return build_network(make_countries(n), std::move(treaties));
}

inline EdgeList clique_edges(const std::vector<CountryId>& members) {
  EdgeList out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      out.emplace_back(members[i], members[j]);
    }
  }
  return out;
}

inline EdgeList append(EdgeList a, const EdgeList& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline MultiplexNetwork triangle() {
  return make_layer_graph(3, clique_edges({0, 1, 2}));
}

inline MultiplexNetwork path3() {
  return make_layer_graph(3, {{0, 1}, {1, 2}});
}

inline MultiplexNetwork two_triangles() {
  return make_layer_graph(6, append(clique_edges({0, 1, 2}), clique_edges({3, 4, 5})));
}

inline MultiplexNetwork k5_with_isolates() {
  return make_layer_graph(7, clique_edges({0, 1, 2, 3, 4}));
}

/// Two K4s joined by one direct edge (8 nodes).
inline MultiplexNetwork barbell8() {
  auto edges = append(clique_edges({0, 1, 2, 3}), clique_edges({4, 5, 6, 7}));
  edges.emplace_back(3, 4);
  return make_layer_graph(8, edges);
}

/// Two K4s joined through a bridge node (9 nodes, node 8 is the bridge).
inline MultiplexNetwork barbell9() {
  auto edges = append(clique_edges({0, 1, 2, 3}), clique_edges({4, 5, 6, 7}));
  edges.emplace_back(3, 8);
  edges.emplace_back(8, 4);
  return make_layer_graph(9, edges);
}

inline constexpr CountryId kBarbell9Bridge = 8;

/// Star K1,5; node 0 is the hub.
inline MultiplexNetwork star_k15() {
  return make_layer_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
}

/// Three K4 blocks chained through two hub nodes (14 nodes, hubs 4 and 9).
inline MultiplexNetwork double_barbell() {
  auto edges = append(append(clique_edges({0, 1, 2, 3}), clique_edges({5, 6, 7, 8})),
                      clique_edges({10, 11, 12, 13}));
  edges.emplace_back(3, 4);
  edges.emplace_back(4, 5);
  edges.emplace_back(8, 9);
  edges.emplace_back(9, 10);
  return make_layer_graph(14, edges);
}

inline constexpr CountryId kDoubleBarbellHubs[2] = {4, 9};

/// Small two-layer network: political path over 4 countries, economic
/// triangle on a subset. Multiplex-scope cases use this one.
inline MultiplexNetwork two_layer_small() {
  return make_two_layer_graph(4, {{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}, {0, 2}});
}

struct NamedFixture {
  std::string name;
  MultiplexNetwork network;
};

inline std::vector<NamedFixture> all_fixtures() {
  std::vector<NamedFixture> out;
  out.push_back({"triangle", triangle()});
  out.push_back({"path3", path3()});
  out.push_back({"two_triangles", two_triangles()});
  out.push_back({"k5_with_isolates", k5_with_isolates()});
  out.push_back({"barbell8", barbell8()});
  out.push_back({"barbell9", barbell9()});
  out.push_back({"star_k15", star_k15()});
  out.push_back({"double_barbell", double_barbell()});
  out.push_back({"two_layer_small", two_layer_small()});
  return out;
}

}  // namespace treatynet::testing
