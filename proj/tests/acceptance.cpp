// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 1-9 run self-contained; criterion 10 only activates when
// TREATYNET_DATA_DIR_REAL points at a real-world dataset.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "treatynet/cli.hpp"
#include "treatynet/damage.hpp"
#include "treatynet/ingest.hpp"
#include "treatynet/report.hpp"
#include "treatynet/stats.hpp"

using namespace treatynet;
using namespace treatynet::testing;

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

int failures = 0;

void verdict(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("%s  %2d  %-24s %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  if (!pass) ++failures;
}

void skip(int id, const char* name, const std::string& detail) {
  std::printf("SKIP  %2d  %-24s %s\n", id, name, detail.c_str());
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, ...) {
  va_list args;
  va_start(args, format);
  char buf[256];
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

CommunityParams reps(int repetitions, std::uint64_t seed = 7) {
  CommunityParams p;
  p.seed = seed;
  p.repetitions = repetitions;
  return p;
}

// named fixture graphs plus the shipped 12-country dataset
std::vector<NamedFixture> bundled_fixtures() {
  auto fixtures = all_fixtures();
  const std::string dir = std::string(TREATYNET_DATA_DIR) + "/fixtures";
  const Dataset ds = load_dataset(dir + "/countries.csv", dir + "/treaties.csv",
                                  dir + "/bilaterals.csv");
  fixtures.push_back({"dataset_fixture", build_network(ds.countries, ds.treaties,
                                                       ds.bilaterals)});
  return fixtures;
}

// --- criterion 1: delta == (c*q)/g on 10,000 randomized scenarios, < 10 s ---
void criterion_eq1() {
  const auto start = Clock::now();
  std::mt19937_64 rng(2718);
  double max_rel_err = 0.0;
  int evaluated = 0;

  while (evaluated < 10000) {
    const std::size_t n = 3 + rng() % 8;
    EdgeList pol, eco;
    for (CountryId a = 0; a < n; ++a) {
      for (CountryId b = a + 1; b < n; ++b) {
        if (rng() % 3 == 0) pol.emplace_back(a, b);
        if (rng() % 3 == 0) eco.emplace_back(a, b);
      }
    }
    const auto net = make_two_layer_graph(n, pol, eco);
    const std::size_t treaty_count = net.treaties().size();

    // a batch of scenarios per generated network keeps generation cheap
    for (int s = 0; s < 20 && evaluated < 10000; ++s, ++evaluated) {
      const LayerId layer = rng() % 2 ? LayerId::Economic : LayerId::Political;
      const auto scope = static_cast<DamageScope>(rng() % 3);
      Scenario scenario = Scenario::country_removal(rng() % n, layer);
      const int kind = static_cast<int>(rng() % 3);
      if (kind == 1) {
        std::vector<CountryId> block;
        for (CountryId c = 0; c < n; ++c) {
          if (rng() % 4 == 0) block.push_back(c);
        }
        scenario = Scenario::block_removal(std::move(block), layer);
      } else if (kind == 2 && treaty_count > 0) {
        scenario = Scenario::treaty_removal(rng() % treaty_count);
      }

      const auto m = evaluate(net, scenario, reps(1, rng()), scope);
      const double expected = ((m.communities_after / m.communities_before) *
                               (m.components_after / m.components_before)) /
                              (m.giant_after / m.giant_before);
      const double rel = std::fabs(m.delta - expected) / std::fabs(expected);
      max_rel_err = std::max(max_rel_err, rel);
    }
  }

  const double elapsed = seconds_since(start);
  verdict(1, "eq1-exactness",
          max_rel_err <= 1e-15 && elapsed < 10.0,
          fmt("10000 scenarios, max rel err %.2e, %.1fs", max_rel_err, elapsed));
}

// --- criterion 2: empty-block removal gives delta exactly 1 everywhere ---
void criterion_identity() {
  bool pass = true;
  int checked = 0;
  for (const auto& [name, net] : bundled_fixtures()) {
    for (DamageScope scope :
         {DamageScope::Mixed, DamageScope::Layer, DamageScope::Multiplex}) {
      for (LayerId layer : kLayers) {
        const auto m = evaluate(net, Scenario::block_removal({}, layer), reps(2), scope);
        pass &= m.delta == 1.0 && m.c == 1.0 && m.q == 1.0 && m.g == 1.0;
        ++checked;
      }
    }
  }
  verdict(2, "identity-scenario", pass, fmt("%d fixture/scope/layer combinations", checked));
}

// --- criterion 3: components match the exhaustive traversal oracle ---
void criterion_components() {
  bool pass = true;
  int checked = 0;
  std::mt19937_64 rng(31);

  auto check_network = [&](const MultiplexNetwork& net) {
    if (net.countries().size() > 12) return;
    for (LayerId l : kLayers) {
      const auto got = components(net, l);
      const auto want = bfs_components(net.countries().size(), edge_pairs(net, l));
      pass &= got.count == want.count && got.giant_size == want.giant &&
              got.sizes == want.sizes;
      ++checked;
    }
    const auto agg = components_aggregate(net);
    const auto want = bfs_components(net.countries().size(), aggregate_edge_pairs(net));
    pass &= agg.count == want.count && agg.giant_size == want.giant;
    ++checked;
  };

  for (const auto& [name, net] : bundled_fixtures()) {
    check_network(net);
    // post-removal states count as fixtures of the sweep machinery
    for (CountryId id = 0; id < net.countries().size(); ++id) {
      check_network(remove_country(net, id, LayerId::Political));
    }
  }
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    EdgeList pol, eco;
    for (CountryId a = 0; a < n; ++a) {
      for (CountryId b = a + 1; b < n; ++b) {
        if (rng() % 4 == 0) pol.emplace_back(a, b);
        if (rng() % 4 == 0) eco.emplace_back(a, b);
      }
    }
    check_network(make_two_layer_graph(n, pol, eco));
  }
  verdict(3, "components-oracle", pass, fmt("%d summaries compared", checked));
}

// --- criterion 4: detected modularity equals the brute-force maximum ---
void criterion_communities() {
  bool pass = true;
  int checked = 0;
  double worst_gap = 0.0;
  const auto params = reps(8, 17);

  for (const auto& [name, net] : bundled_fixtures()) {
    std::vector<std::pair<Scope, bool>> scopes;
    if (net.countries().size() <= 10) scopes.emplace_back(Scope::Layer, true);
    if (net.countries().size() <= 5) scopes.emplace_back(Scope::Multiplex, true);
    for (const auto& [scope, run] : scopes) {
      if (!run) continue;
      for (LayerId layer : kLayers) {
        if (scope == Scope::Multiplex && layer == LayerId::Economic) continue;
        const auto result = detect_all(net, scope, layer, params);
        const auto oracle = oracle_max_modularity(supra_spec(net, scope, layer, params));
        const double gap = std::fabs(result.best.quality - oracle.quality);
        worst_gap = std::max(worst_gap, gap);
        pass &= gap <= 1e-12 && community_count(result.best) == oracle.count;
        ++checked;
      }
    }
  }
  verdict(4, "communities-oracle", pass,
          fmt("%d detections vs enumeration, worst gap %.2e", checked, worst_gap));
}

// --- criterion 5: frozen barbell values and the star sweep ranking ---
void criterion_barbell() {
  const auto m = evaluate(barbell9(),
                          Scenario::country_removal(kBarbell9Bridge, LayerId::Political),
                          reps(1), DamageScope::Layer);
  const bool metrics_ok = m.q == 3.0 && m.g == 4.0 / 9.0 && m.c == 1.5 &&
                          m.delta == (1.5 * 3.0) / (4.0 / 9.0);

  const auto star = sweep_countries(star_k15(), LayerId::Political, reps(1),
                                    DamageScope::Layer);
  const bool star_ok = star.front().entity == "AAA" &&
                       star.front().delta_normalized == 1.0 &&
                       star[1].delta_normalized < 1.0;

  verdict(5, "barbell-benchmark", metrics_ok && star_ok,
          fmt("delta=%.6g (want 10.125), star hub %s at %.3g", m.delta,
              star.front().entity.c_str(), star.front().delta_normalized));
}

// --- criterion 6: normalization bounds over several sweeps ---
void criterion_normalization() {
  bool pass = true;
  int sweeps = 0;
  for (const auto& [name, net] : bundled_fixtures()) {
    for (LayerId layer : kLayers) {
      if (net.edges(layer).empty()) continue;
      const auto reports = sweep_countries(net, layer, reps(2), DamageScope::Mixed);
      double max_seen = 0.0;
      for (const auto& r : reports) {
        pass &= r.delta_normalized > 0.0 && r.delta_normalized <= 1.0;
        max_seen = std::max(max_seen, r.delta_normalized);
      }
      pass &= max_seen == 1.0;
      ++sweeps;
    }
    const auto treaty_reports = sweep_treaties(net, reps(2), DamageScope::Mixed);
    for (const auto& r : treaty_reports) {
      pass &= r.delta_normalized > 0.0 && r.delta_normalized <= 1.0;
    }
    if (!treaty_reports.empty()) ++sweeps;
  }
  verdict(6, "normalization-bounds", pass, fmt("%d sweeps, all in (0,1] with max 1", sweeps));
}

// --- criterion 7: spearman oracle, permutation vs t, monotone invariance ---
void criterion_spearman() {
  auto series = [](const std::string& name, const std::vector<double>& values) {
    std::vector<std::pair<std::string, double>> kv;
    for (std::size_t i = 0; i < values.size(); ++i) {
      kv.emplace_back(synthetic_iso3(i), values[i]);
    }
    return IndexedSeries::make(name, std::move(kv));
  };

  // tie-bearing fixtures vs the definitional oracle
  bool oracle_ok = true;
  const std::vector<std::vector<double>> tie_fixtures[2] = {
      {{1, 2, 2, 3, 4, 5, 5, 5, 6, 7}, {3, 1, 4, 1, 5, 9, 2, 6, 5, 3}},
      {{2, 2, 2, 8, 8, 1, 4, 4, 9, 0}, {5, 5, 1, 1, 7, 7, 3, 3, 2, 2}},
  };
  for (const auto& pair : tie_fixtures) {
    const auto got = spearman(series("a", pair[0]), series("b", pair[1]));
    oracle_ok &= std::fabs(got.r - oracle_spearman_r(pair[0], pair[1])) <= 1e-12;
  }

  // n=200 monotone-noise data: permutation within 0.02 of the t approximation
  std::mt19937_64 rng(404);
  std::normal_distribution<double> noise(0.0, 60.0);
  std::vector<double> x, y;
  for (int i = 0; i < 200; ++i) {
    x.push_back(i + noise(rng));
    y.push_back(i + noise(rng));
  }
  const auto t_result = spearman(series("x", x), series("y", y));
  const auto perm_result = spearman(series("x", x), series("y", y),
                                    PValueMethod::Permutation, 10000, 99);
  const double p_gap = std::fabs(t_result.p - perm_result.p);

  // strictly increasing transform leaves r exactly unchanged
  std::vector<double> y_mapped;
  for (double v : y) y_mapped.push_back(std::atan(v / 50.0) + 2.0 * v);
  const auto mapped = spearman(series("x", x), series("y", y_mapped));
  const bool monotone_ok = mapped.r == t_result.r;

  verdict(7, "spearman", oracle_ok && p_gap <= 0.02 && monotone_ok,
          fmt("oracle ok=%d, |p_t - p_perm|=%.4f, monotone exact=%d", oracle_ok, p_gap,
              monotone_ok));
}

// --- criterion 8: byte-identical end-to-end reruns ---
void criterion_determinism() {
  const std::string data = std::string(TREATYNET_DATA_DIR) + "/fixtures";
  const fs::path out = fs::temp_directory_path() / "treatynet_acceptance_determinism";

  auto run_pipeline = [&]() -> std::map<std::string, std::string> {
    fs::remove_all(out);
    fs::create_directories(out);
    const std::string countries = data + "/countries.csv";
    const std::string treaties = data + "/treaties.csv";
    const std::string bilaterals = data + "/bilaterals.csv";
    const std::string index = data + "/index.csv";

    std::vector<std::vector<std::string>> commands = {
        {"treatynet", "sweep", "countries", "--layer", "political", "--countries",
         countries, "--treaties", treaties, "--bilaterals", bilaterals, "--seed", "42",
         "--repetitions", "3", "--threads", "2", "--out", out.string(),
         "--emit-plot-data"},
        {"treatynet", "sweep", "treaties", "--countries", countries, "--treaties",
         treaties, "--bilaterals", bilaterals, "--seed", "42", "--repetitions", "3",
         "--format", "json", "--out", out.string()},
        {"treatynet", "correlate", "--report",
         (out / "sweep_countries_political.csv").string(), "--index", index, "--out",
         out.string()},
    };
    std::ostringstream swallowed;
    std::streambuf* old_buf = std::cout.rdbuf(swallowed.rdbuf());
    for (const auto& cmd : commands) {
      std::vector<const char*> argv;
      for (const auto& a : cmd) argv.push_back(a.c_str());
      if (run_cli(static_cast<int>(argv.size()), argv.data()) != 0) {
        std::cout.rdbuf(old_buf);
        return {};
      }
    }
    std::cout.rdbuf(old_buf);

    std::map<std::string, std::string> bytes;
    for (const auto& entry : fs::directory_iterator(out)) {
      std::ifstream in(entry.path(), std::ios::binary);
      std::ostringstream buf;
      buf << in.rdbuf();
      bytes[entry.path().filename().string()] = buf.str();
    }
    return bytes;
  };

  const auto first = run_pipeline();
  const auto second = run_pipeline();
  fs::remove_all(out);

  const bool pass = !first.empty() && first == second;
  verdict(8, "end-to-end-determinism", pass,
          fmt("%zu artifacts compared across two runs", first.size()));
}

// --- criterion 9: desk-scale synthetic dataset under 60 s ---
void criterion_performance() {
  // 200 countries, 100 treaties sized to roughly the published deal density
  std::mt19937_64 rng(1234);
  const std::size_t n = 200;
  auto countries = make_countries(n);

  std::vector<Treaty> treaties;
  auto add_treaty = [&](LayerId layer, std::size_t members) {
    Treaty t;
    t.id = static_cast<TreatyId>(treaties.size());
    t.acronym = "T" + std::to_string(treaties.size());
    t.name = "Synthetic treaty " + std::to_string(treaties.size());
    t.layer = layer;
    std::vector<CountryId> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<CountryId>(i);
    for (std::size_t i = 0; i < members; ++i) {
      std::swap(pool[i], pool[i + rng() % (n - i)]);
      t.members.push_back(pool[i]);
    }
    treaties.push_back(std::move(t));
  };
  for (int i = 0; i < 50; ++i) add_treaty(LayerId::Political, 10 + rng() % 9);   // ~91 pairs
  for (int i = 0; i < 50; ++i) add_treaty(LayerId::Economic, 20 + rng() % 11);  // ~300 pairs

  std::size_t pol_pairs = 0, eco_pairs = 0;
  for (const auto& t : treaties) {
    const std::size_t pairs = t.members.size() * (t.members.size() - 1) / 2;
    (t.layer == LayerId::Political ? pol_pairs : eco_pairs) += pairs;
  }

  const auto start = Clock::now();
  const auto net = build_network(countries, treaties);
  const auto params = reps(5, 99);

  const auto pol = sweep_countries(net, LayerId::Political, params, DamageScope::Mixed, 0);
  const auto eco = sweep_countries(net, LayerId::Economic, params, DamageScope::Mixed, 0);
  const auto tre = sweep_treaties(net, params, DamageScope::Mixed, 0);
  const double elapsed = seconds_since(start);

  const bool sizes_ok = pol.size() == n && eco.size() == n && tre.size() == 100;
  verdict(9, "desk-scale-performance", sizes_ok && elapsed < 60.0,
          fmt("%zu pol + %zu eco deal pairs, 500 scenarios, %.1fs", pol_pairs, eco_pairs,
              elapsed));
}

// --- criterion 10: optional real-data reproduction hooks ---
void criterion_real_data() {
  const char* dir = std::getenv("TREATYNET_DATA_DIR_REAL");
  if (dir == nullptr) {
    skip(10, "real-data-reproduction",
         "set TREATYNET_DATA_DIR_REAL to a directory with countries.csv, treaties.csv, "
         "bilaterals.csv, fsi.csv to enable");
    return;
  }

  const std::string base = dir;
  bool pass = true;
  std::string detail;
  try {
    const Dataset ds = load_dataset(base + "/countries.csv", base + "/treaties.csv",
                                    base + "/bilaterals.csv");
    pass &= ds.audit.country_count == 200;
    pass &= ds.audit.deal_pairs[0] == 4733;
    pass &= ds.audit.deal_pairs[1] == 14890;
    pass &= ds.audit.political_only_pairs == 313;

    const auto net = build_network(ds.countries, ds.treaties, ds.bilaterals);
    const auto params = reps(5, 42);
    const auto pdi = sweep_countries(net, LayerId::Political, params, DamageScope::Mixed, 0);
    const auto edi = sweep_countries(net, LayerId::Economic, params, DamageScope::Mixed, 0);

    auto top2 = [](const std::vector<DamageReport>& r) {
      return std::pair<std::string, std::string>{r[0].entity, r[1].entity};
    };
    const auto [p1, p2] = top2(pdi);
    pass &= (p1 == "MMR" && p2 == "THA") || (p1 == "THA" && p2 == "MMR");

    const auto treaty_reports = sweep_treaties(net, params, DamageScope::Mixed, 0);
    std::string top_economic;
    for (const auto& r : treaty_reports) {
      if (r.layer == LayerId::Economic) {
        top_economic = r.entity;
        break;
      }
    }
    pass &= top_economic == "WTO";

    const auto fsi = load_index_series(base + "/fsi.csv", "FSI");
    auto to_series = [](const char* name, const std::vector<DamageReport>& reports) {
      std::vector<std::pair<std::string, double>> kv;
      for (const auto& r : reports) kv.emplace_back(r.entity, r.delta_normalized);
      return IndexedSeries::make(name, std::move(kv));
    };
    const auto edi_corr = spearman(to_series("EDI", edi), fsi);
    const auto pdi_corr = spearman(to_series("PDI", pdi), fsi);
    pass &= std::fabs(edi_corr.r - (-0.10)) <= 0.05;
    pass &= std::fabs(pdi_corr.r - 0.05) <= 0.05;
    detail = fmt("audit ok=%d, EDI r=%.3f, PDI r=%.3f", pass, edi_corr.r, pdi_corr.r);
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  verdict(10, "real-data-reproduction", pass, detail);
}

}  // namespace

int main() {
  criterion_eq1();
  criterion_identity();
  criterion_components();
  criterion_communities();
  criterion_barbell();
  criterion_normalization();
  criterion_spearman();
  criterion_determinism();
  criterion_performance();
  criterion_real_data();

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
