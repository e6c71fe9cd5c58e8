#include "treatynet/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "treatynet/csv.hpp"
#include "treatynet/damage.hpp"
#include "treatynet/ingest.hpp"
#include "treatynet/report.hpp"

namespace treatynet {

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 3;

struct RunConfig {
  std::string countries;
  std::string treaties;
  std::string bilaterals;       // optional, empty = none
  std::string classification;   // optional
  std::string index;            // optional (correlate)
  std::string layer = "political";
  std::string scope;            // empty = default (mixed for sweeps)
  std::uint64_t seed = 42;
  int repetitions = 5;
  double resolution = 1.0;
  double omega = 1.0;
  std::string format = "csv";
  std::string out = "out";
  unsigned threads = 0;
  bool emit_plot_data = false;
};

void add_dataset_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--countries", cfg.countries, "countries.csv (iso3,name)")->required();
  cmd->add_option("--treaties", cfg.treaties, "treaties.csv (acronym,name,layer,members)")
      ->required();
  cmd->add_option("--bilaterals", cfg.bilaterals, "bilaterals.csv (iso3_a,iso3_b,layer)");
  cmd->add_option("--classification", cfg.classification,
                  "classification.csv (acronym,layer), overrides treaty tags");
}

void add_run_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--seed", cfg.seed, "community detection seed");
  cmd->add_option("--repetitions", cfg.repetitions, "detection restarts per measurement")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--resolution", cfg.resolution, "modularity resolution");
  cmd->add_option("--omega", cfg.omega, "interlayer coupling weight");
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", cfg.out, "output directory");
  cmd->add_option("--threads", cfg.threads, "worker cap for sweeps (0 = auto)");
}

CommunityParams community_params(const RunConfig& cfg) {
  CommunityParams p;
  p.seed = cfg.seed;
  p.repetitions = cfg.repetitions;
  p.resolution = cfg.resolution;
  p.omega = cfg.omega;
  return p;
}

std::optional<std::string> optional_path(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

Dataset load_from(const RunConfig& cfg) {
  return load_dataset(cfg.countries, cfg.treaties, optional_path(cfg.bilaterals),
                      optional_path(cfg.classification));
}

Provenance make_provenance(const RunConfig& cfg,
                           std::initializer_list<std::pair<std::string, std::string>> extra) {
  Provenance prov;
  prov.config = {
      {"seed", std::to_string(cfg.seed)},
      {"repetitions", std::to_string(cfg.repetitions)},
      {"resolution", csv::format_double(cfg.resolution)},
      {"omega", csv::format_double(cfg.omega)},
      {"format", cfg.format},
      {"threads", std::to_string(cfg.threads)},
  };
  for (const auto& kv : extra) prov.config.push_back(kv);
  for (const std::string* path : {&cfg.countries, &cfg.treaties, &cfg.bilaterals,
                                  &cfg.classification, &cfg.index}) {
    if (!path->empty()) prov.inputs.emplace_back(*path, file_digest(*path));
  }
  return prov;
}

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

int cmd_audit(const RunConfig& cfg) {
  const Dataset ds = load_from(cfg);
  const DatasetAudit& a = ds.audit;
  const auto pol = static_cast<std::size_t>(LayerId::Political);
  const auto eco = static_cast<std::size_t>(LayerId::Economic);
  std::cout << "countries                " << a.country_count << "\n"
            << "political deal pairs     " << a.deal_pairs[pol] << "\n"
            << "economic deal pairs      " << a.deal_pairs[eco] << "\n"
            << "political distinct edges " << a.distinct_edges[pol] << "\n"
            << "economic distinct edges  " << a.distinct_edges[eco] << "\n"
            << "political-only pairs     " << a.political_only_pairs << "\n"
            << "treaty records           " << ds.records.size() << "\n"
            << "registry entries         " << ds.treaties.size() << "\n"
            << "bilateral deals          " << ds.bilaterals.size() << "\n";
  return kExitOk;
}

int cmd_communities(const RunConfig& cfg) {
  const Dataset ds = load_from(cfg);
  const MultiplexNetwork net = build_network(ds.countries, ds.treaties, ds.bilaterals);

  const Scope scope = cfg.scope == "layer" ? Scope::Layer : Scope::Multiplex;
  const LayerId layer = parse_layer(cfg.layer);
  const Partition partition = detect(net, scope, layer, community_params(cfg));

  const Provenance prov = make_provenance(
      cfg, {{"command", "communities"},
            {"scope", scope == Scope::Layer ? "layer" : "multiplex"},
            {"layer", std::string(layer_name(layer))}});

  std::string file_name = scope == Scope::Layer
                              ? "communities_layer_" + std::string(layer_name(layer))
                              : std::string("communities_multiplex");
  const fs::path path = fs::path(cfg.out) / (file_name + "." + cfg.format);
  write_file(path, cfg.format == "json" ? partition_to_json(prov, net, partition)
                                        : partition_to_csv(prov, net, partition));

  std::cout << "communities " << community_count(partition) << "\n"
            << "quality     " << csv::format_double(partition.quality) << "\n"
            << "wrote       " << path.string() << "\n";
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, const std::string& target) {
  const Dataset ds = load_from(cfg);
  const MultiplexNetwork net = build_network(ds.countries, ds.treaties, ds.bilaterals);

  const DamageScope scope = cfg.scope.empty() ? DamageScope::Mixed
                                              : parse_damage_scope(cfg.scope);
  const CommunityParams params = community_params(cfg);

  std::vector<DamageReport> reports;
  std::string file_stem;
  if (target == "countries") {
    const LayerId layer = parse_layer(cfg.layer);
    reports = sweep_countries(net, layer, params, scope, cfg.threads);
    file_stem = "sweep_countries_" + std::string(layer_name(layer));
  } else {
    reports = sweep_treaties(net, params, scope, cfg.threads);
    file_stem = "sweep_treaties";
  }

  const Provenance prov = make_provenance(
      cfg, {{"command", "sweep"},
            {"target", target},
            {"layer", target == "countries" ? cfg.layer : "per-treaty"},
            {"scope", std::string(damage_scope_name(scope))}});

  const fs::path path = fs::path(cfg.out) / (file_stem + "." + cfg.format);
  write_file(path, cfg.format == "json" ? reports_to_json(prov, reports)
                                        : reports_to_csv(prov, reports));
  if (cfg.emit_plot_data) {
    write_file(fs::path(cfg.out) / ("plot_" + file_stem + ".csv"),
               plot_data_to_csv(prov, reports));
  }

  std::cout << "rank entity layer      delta-norm  delta\n";
  const std::size_t top = std::min<std::size_t>(10, reports.size());
  for (std::size_t i = 0; i < top; ++i) {
    const DamageReport& r = reports[i];
    std::ostringstream line;
    line << std::left << std::setw(4) << (i + 1) << " " << std::setw(6) << r.entity
         << " " << std::setw(10) << layer_name(r.layer) << " " << std::setw(11)
         << csv::format_double(r.delta_normalized) << " "
         << csv::format_double(r.metrics.delta);
    std::cout << line.str() << "\n";
  }
  std::cout << "wrote " << path.string() << "\n";
  return kExitOk;
}

int cmd_correlate(const RunConfig& cfg, const std::string& report_file,
                  const std::string& method_text, std::size_t permutations) {
  const std::vector<ReportRow> rows = read_report_csv(report_file);
  std::vector<std::pair<std::string, double>> damage_values;
  for (const ReportRow& row : rows) {
    if (row.scenario_kind == "country") {
      damage_values.emplace_back(row.entity, row.delta_normalized);
    }
  }
  if (damage_values.empty()) {
    throw ValidationError(report_file + ": no country rows to correlate");
  }
  const IndexedSeries damage = IndexedSeries::make("damage", std::move(damage_values));
  const IndexedSeries external = load_index_series(cfg.index, "index");

  const PValueMethod method = parse_pvalue_method(method_text);
  const CorrelationResult result = spearman(damage, external, method, permutations, cfg.seed);

  Provenance prov = make_provenance(cfg, {{"command", "correlate"},
                                          {"method", method_text},
                                          {"permutations", std::to_string(permutations)}});
  prov.inputs.emplace_back(report_file, file_digest(report_file));

  const fs::path path = fs::path(cfg.out) / (std::string("correlation.") + cfg.format);
  write_file(path, cfg.format == "json"
                       ? correlation_to_json(prov, result, damage.name, external.name)
                       : correlation_to_csv(prov, result, damage.name, external.name));

  std::cout << "r " << csv::format_double(result.r) << "\n"
            << "p " << csv::format_double(result.p) << "\n"
            << "n " << result.n << "\n"
            << "wrote " << path.string() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"country-treaty multiplex resilience toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string sweep_target;
  std::string report_file;
  std::string method = "t";
  std::size_t permutations = 10000;

  CLI::App* audit = app.add_subcommand("audit", "load a dataset and print audit counts");
  add_dataset_options(audit, cfg);

  CLI::App* communities =
      app.add_subcommand("communities", "detect communities and write the partition");
  add_dataset_options(communities, cfg);
  add_run_options(communities, cfg);
  communities->add_option("--scope", cfg.scope, "detection scope")
      ->check(CLI::IsMember({"layer", "multiplex"}));
  communities->add_option("--layer", cfg.layer, "layer for layer scope")
      ->check(CLI::IsMember({"political", "economic"}));

  CLI::App* sweep = app.add_subcommand("sweep", "run a full removal sweep and rank damage");
  add_dataset_options(sweep, cfg);
  add_run_options(sweep, cfg);
  sweep->add_option("target", sweep_target, "what to remove")
      ->check(CLI::IsMember({"countries", "treaties"}))
      ->required();
  sweep->add_option("--layer", cfg.layer, "layer for country sweeps")
      ->check(CLI::IsMember({"political", "economic"}));
  sweep->add_option("--scope", cfg.scope,
                    "uniform indicator scope (default: communities multiplex, components layer)")
      ->check(CLI::IsMember({"layer", "multiplex"}));
  sweep->add_flag("--emit-plot-data", cfg.emit_plot_data,
                  "also write an (entity,delta-norm) table");

  CLI::App* correlate =
      app.add_subcommand("correlate", "Spearman correlation of a sweep report vs an index");
  correlate->add_option("--report", report_file, "sweep report CSV")->required();
  correlate->add_option("--index", cfg.index, "index.csv (iso3,value)")->required();
  correlate->add_option("--method", method, "p-value method")
      ->check(CLI::IsMember({"t", "permutation"}));
  correlate->add_option("--permutations", permutations, "permutation count (>= 1000)");
  correlate->add_option("--seed", cfg.seed, "permutation seed");
  correlate->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  correlate->add_option("--out", cfg.out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (audit->parsed()) return cmd_audit(cfg);
    if (communities->parsed()) return cmd_communities(cfg);
    if (sweep->parsed()) return cmd_sweep(cfg, sweep_target);
    if (correlate->parsed()) return cmd_correlate(cfg, report_file, method, permutations);
    return kExitValidation;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace treatynet
