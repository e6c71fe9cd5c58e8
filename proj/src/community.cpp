#include "treatynet/community.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace treatynet {

namespace {

constexpr double kGainEps = 1e-12;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// xorshift128+; self-contained so shuffles do not depend on libstdc++
// distribution internals (report files must be byte-stable).
struct Rng {
  std::uint64_t s0, s1;
  explicit Rng(std::uint64_t seed)
      : s0(splitmix64(seed)), s1(splitmix64(seed ^ 0xDA3E39CB94B95BDBull)) {}
  std::uint64_t next() {
    std::uint64_t x = s0;
    const std::uint64_t y = s1;
    s0 = y;
    x ^= x << 23;
    s1 = x ^ y ^ (x >> 17) ^ (y >> 26);
    return s1 + y;
  }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
};

void shuffle(std::vector<int>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.below(i)]);
  }
}

// Weighted graph the optimizer runs on. Every node belongs to one null-model
// group (a layer); coupling edges appear in adj but not in null strengths, so
// the quality below is the standard multislice form. Layer scope is the
// degenerate single-group case, which reduces to Newman-Girvan modularity.
struct SupraGraph {
  int n = 0;
  int groups = 1;
  std::vector<std::vector<std::pair<int, double>>> adj;  // no self entries
  std::vector<double> self_loop;      // A_ii, internal weight already doubled
  std::vector<double> null_strength;  // node * groups + g
  std::vector<double> group_two_m;    // 2 m_s per group
  double two_mu = 0.0;                // total strength incl. coupling

  double null(int node, int g) const { return null_strength[node * groups + g]; }
};

double edge_weight(const Edge& e, const CommunityParams& params) {
  return params.weight_by_provenance ? static_cast<double>(e.provenance.size()) : 1.0;
}

SupraGraph build_supra(const MultiplexNetwork& net, Scope scope, LayerId layer,
                       const CommunityParams& params) {
  SupraGraph g;
  const int n_countries = static_cast<int>(net.countries().size());
  if (scope == Scope::Layer) {
    g.n = n_countries;
    g.groups = 1;
    g.adj.resize(g.n);
    g.self_loop.assign(g.n, 0.0);
    g.null_strength.assign(g.n, 0.0);
    g.group_two_m.assign(1, 0.0);
    for (const Edge& e : net.edges(layer)) {
      const double w = edge_weight(e, params);
      g.adj[e.a].emplace_back(static_cast<int>(e.b), w);
      g.adj[e.b].emplace_back(static_cast<int>(e.a), w);
      g.null_strength[e.a] += w;
      g.null_strength[e.b] += w;
    }
    g.group_two_m[0] = std::accumulate(g.null_strength.begin(), g.null_strength.end(), 0.0);
    g.two_mu = g.group_two_m[0];
    return g;
  }

  g.n = 2 * n_countries;
  g.groups = static_cast<int>(kLayerCount);
  g.adj.resize(g.n);
  g.self_loop.assign(g.n, 0.0);
  g.null_strength.assign(static_cast<std::size_t>(g.n) * g.groups, 0.0);
  g.group_two_m.assign(g.groups, 0.0);
  for (LayerId l : kLayers) {
    const int li = static_cast<int>(l);
    for (const Edge& e : net.edges(l)) {
      const double w = edge_weight(e, params);
      const int u = static_cast<int>(e.a) * 2 + li;
      const int v = static_cast<int>(e.b) * 2 + li;
      g.adj[u].emplace_back(v, w);
      g.adj[v].emplace_back(u, w);
      g.null_strength[u * g.groups + li] += w;
      g.null_strength[v * g.groups + li] += w;
      g.group_two_m[li] += 2.0 * w;
    }
  }
  if (params.omega > 0.0) {
    for (int c = 0; c < n_countries; ++c) {
      g.adj[c * 2].emplace_back(c * 2 + 1, params.omega);
      g.adj[c * 2 + 1].emplace_back(c * 2, params.omega);
    }
  }
  g.two_mu = g.group_two_m[0] + g.group_two_m[1] +
             (params.omega > 0.0 ? 2.0 * n_countries * params.omega : 0.0);
  return g;
}

// Multislice quality of a labeling of the original supra-graph:
//   Q = (1/2mu) * [ sum_c 2 W_in(c)  -  gamma * sum_s (1/2m_s) * sum_c D_s(c)^2 ]
// where W_in counts intra-community edge weight (coupling included) and
// D_s(c) sums intra-layer strengths of c's layer-s members.
double quality_of(const SupraGraph& g, const std::vector<int>& labels, double gamma) {
  if (g.two_mu <= 0.0) return 0.0;
  const int k = 1 + *std::max_element(labels.begin(), labels.end());
  double intra = 0.0;
  for (int u = 0; u < g.n; ++u) {
    intra += g.self_loop[u];
    for (const auto& [v, w] : g.adj[u]) {
      if (labels[u] == labels[v]) intra += w;  // visits each edge twice
    }
  }
  double null = 0.0;
  std::vector<double> d(static_cast<std::size_t>(k));
  for (int s = 0; s < g.groups; ++s) {
    if (g.group_two_m[s] <= 0.0) continue;
    std::fill(d.begin(), d.end(), 0.0);
    for (int u = 0; u < g.n; ++u) d[labels[u]] += g.null(u, s);
    double sum_sq = 0.0;
    for (double x : d) sum_sq += x * x;
    null += sum_sq / g.group_two_m[s];
  }
  return (intra - gamma * null) / g.two_mu;
}

void canonicalize(std::vector<int>& labels) {
  std::vector<int> remap(labels.size(), -1);
  int next = 0;
  for (int& l : labels) {
    if (remap[l] < 0) remap[l] = next++;
    l = remap[l];
  }
}

// One pass of local moves to a fixed point. comm/comm_null are updated in
// place; returns true if any node ended up outside its starting community.
bool local_moves(const SupraGraph& g, Rng& rng, std::vector<int>& comm,
                 std::vector<double>& comm_null, double gamma) {
  const int G = g.groups;
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);

  std::vector<double> neigh_w(g.n, 0.0);
  std::vector<int> touched;
  const std::vector<int> start = comm;

  bool any_move = true;
  for (int pass = 0; any_move && pass < 1000; ++pass) {
    any_move = false;
    for (int u : order) {
      const int a = comm[u];
      touched.clear();
      for (const auto& [v, w] : g.adj[u]) {
        const int c = comm[v];
        if (neigh_w[c] == 0.0) touched.push_back(c);
        neigh_w[c] += w;
      }
      // detach u from its community
      for (int s = 0; s < G; ++s) comm_null[a * G + s] -= g.null(u, s);

      auto insertion_gain = [&](int c) {
        double gain = neigh_w[c];
        for (int s = 0; s < G; ++s) {
          const double ku = g.null(u, s);
          if (ku != 0.0 && g.group_two_m[s] > 0.0) {
            gain -= gamma * ku * comm_null[c * G + s] / g.group_two_m[s];
          }
        }
        return gain;
      };

      int best = a;
      double best_gain = insertion_gain(a);
      for (int c : touched) {
        if (c == a) continue;
        const double gain = insertion_gain(c);
        if (gain > best_gain + kGainEps) {
          best = c;
          best_gain = gain;
        }
      }

      for (int s = 0; s < G; ++s) comm_null[best * G + s] += g.null(u, s);
      comm[u] = best;
      if (best != a) any_move = true;

      for (int c : touched) neigh_w[c] = 0.0;
    }
  }
  for (int u = 0; u < g.n; ++u) {
    if (comm[u] != start[u]) return true;
  }
  return false;
}

// Collapses communities into supernodes, keeping per-group null strengths and
// carrying internal weight as (doubled) self-loops.
SupraGraph aggregate(const SupraGraph& g, const std::vector<int>& comm, int k) {
  const int G = g.groups;
  SupraGraph out;
  out.n = k;
  out.groups = G;
  out.adj.resize(k);
  out.self_loop.assign(k, 0.0);
  out.null_strength.assign(static_cast<std::size_t>(k) * G, 0.0);
  out.group_two_m = g.group_two_m;
  out.two_mu = g.two_mu;

  std::vector<std::vector<int>> members(k);
  for (int u = 0; u < g.n; ++u) members[comm[u]].push_back(u);

  std::vector<double> acc(k, 0.0);
  std::vector<int> touched;
  for (int c = 0; c < k; ++c) {
    touched.clear();
    for (int u : members[c]) {
      out.self_loop[c] += g.self_loop[u];
      for (int s = 0; s < G; ++s) out.null_strength[c * G + s] += g.null(u, s);
      for (const auto& [v, w] : g.adj[u]) {
        const int cv = comm[v];
        if (cv == c) {
          out.self_loop[c] += w;  // both directions visited: totals 2w
        } else {
          if (acc[cv] == 0.0) touched.push_back(cv);
          acc[cv] += w;
        }
      }
    }
    for (int cv : touched) {
      out.adj[c].emplace_back(cv, acc[cv]);
      acc[cv] = 0.0;
    }
  }
  return out;
}

struct RunResult {
  std::vector<int> labels;
  double quality = 0.0;
};

RunResult louvain_once(const SupraGraph& original, double gamma, std::uint64_t seed) {
  Rng rng(seed);
  SupraGraph g = original;

  std::vector<int> node_label(original.n);
  std::iota(node_label.begin(), node_label.end(), 0);

  double prev_quality = quality_of(original, node_label, gamma);  // singleton start
  while (true) {
    std::vector<int> comm(g.n);
    std::iota(comm.begin(), comm.end(), 0);
    std::vector<double> comm_null = g.null_strength;

    const bool improved = local_moves(g, rng, comm, comm_null, gamma);
    if (!improved) break;

    canonicalize(comm);
    const int k = 1 + *std::max_element(comm.begin(), comm.end());
    for (int& l : node_label) l = comm[l];

    const double q = quality_of(original, node_label, gamma);
    if (q < prev_quality - 1e-9) {
      throw std::logic_error("community detection: quality decreased across an outer iteration");
    }
    prev_quality = q;

    if (k == g.n) break;
    g = aggregate(g, comm, k);
  }

  canonicalize(node_label);
  return RunResult{std::move(node_label), prev_quality};
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
  return splitmix64(seed ^ splitmix64(k + 1));
}

DetectionResult detect_all(const MultiplexNetwork& network, Scope scope, LayerId layer,
                           const CommunityParams& params) {
  if (network.countries().empty()) {
    throw ValidationError("community detection on an empty node set");
  }
  if (params.repetitions < 1) throw ValidationError("repetitions must be >= 1");
  if (!(params.resolution > 0.0)) throw ValidationError("resolution must be > 0");
  if (params.omega < 0.0) throw ValidationError("omega must be >= 0");

  const SupraGraph supra = build_supra(network, scope, layer, params);

  DetectionResult result;
  result.best.scope = scope;
  result.best.layer = layer;
  result.best.seed = params.seed;

  if (supra.two_mu <= 0.0) {
    // zero-weight graph: every node its own community, quality 0 by convention
    result.best.labels.resize(supra.n);
    std::iota(result.best.labels.begin(), result.best.labels.end(), 0);
    result.best.quality = 0.0;
    result.restart_counts.assign(params.repetitions, supra.n);
    return result;
  }

  for (int k = 0; k < params.repetitions; ++k) {
    RunResult run = louvain_once(supra, params.resolution,
                                 derive_seed(params.seed, static_cast<std::uint64_t>(k)));
    const int count = 1 + *std::max_element(run.labels.begin(), run.labels.end());
    result.restart_counts.push_back(count);
    if (k == 0 || run.quality > result.best.quality) {
      result.best.labels = std::move(run.labels);
      result.best.quality = run.quality;
    }
  }
  if (!std::isfinite(result.best.quality)) {
    throw std::logic_error("community detection produced a non-finite quality");
  }
  return result;
}

Partition detect(const MultiplexNetwork& network, Scope scope, LayerId layer,
                 const CommunityParams& params) {
  return detect_all(network, scope, layer, params).best;
}

int community_count(const Partition& partition) {
  if (partition.labels.empty()) return 0;
  return 1 + *std::max_element(partition.labels.begin(), partition.labels.end());
}

double median_count(const std::vector<int>& counts) {
  if (counts.empty()) throw ValidationError("median of an empty count sequence");
  std::vector<int> sorted = counts;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  if (n % 2 == 1) return static_cast<double>(sorted[n / 2]);
  return (static_cast<double>(sorted[n / 2 - 1]) + static_cast<double>(sorted[n / 2])) / 2.0;
}

}  // namespace treatynet
