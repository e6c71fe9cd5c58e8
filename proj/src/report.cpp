#include "treatynet/report.hpp"

#include <fstream>

#include <json.hpp>

#include "treatynet/csv.hpp"

namespace treatynet {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

std::string provenance_comment(const Provenance& prov) {
  std::string out;
  out += "# treatynet ";
  out += kToolVersion;
  out += "\n";
  for (const auto& [key, value] : prov.config) {
    out += "# config " + key + "=" + value + "\n";
  }
  for (const auto& [path, digest] : prov.inputs) {
    out += "# input " + path + " fnv1a64=" + digest + "\n";
  }
  return out;
}

ordered_json provenance_json(const Provenance& prov) {
  ordered_json j;
  j["tool"] = "treatynet";
  j["version"] = std::string(kToolVersion);
  ordered_json config = ordered_json::object();
  for (const auto& [key, value] : prov.config) config[key] = value;
  j["config"] = std::move(config);
  ordered_json inputs = ordered_json::array();
  for (const auto& [path, digest] : prov.inputs) {
    inputs.push_back(ordered_json{{"path", path}, {"fnv1a64", digest}});
  }
  j["inputs"] = std::move(inputs);
  return j;
}

const char* kReportColumns[] = {"scenario-kind", "entity", "layer", "C0", "C1",
                                "Q0", "Q1", "G0", "G1", "c", "q", "g", "delta",
                                "delta-norm", "seed", "repetitions", "resolution",
                                "omega", "scope"};

std::vector<std::string> report_fields(const DamageReport& r) {
  const DamageMetrics& m = r.metrics;
  return {
      std::string(scenario_kind_name(r.scenario.kind)),
      r.entity,
      std::string(layer_name(r.layer)),
      csv::format_double(m.communities_before),
      csv::format_double(m.communities_after),
      csv::format_double(m.components_before),
      csv::format_double(m.components_after),
      csv::format_double(m.giant_before),
      csv::format_double(m.giant_after),
      csv::format_double(m.c),
      csv::format_double(m.q),
      csv::format_double(m.g),
      csv::format_double(m.delta),
      csv::format_double(r.delta_normalized),
      std::to_string(r.params.seed),
      std::to_string(r.params.repetitions),
      csv::format_double(r.params.resolution),
      csv::format_double(r.params.omega),
      std::string(damage_scope_name(m.scope)),
  };
}

}  // namespace

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(path + ": cannot open file for digest");
  std::uint64_t hash = 0xCBF29CE484222325ull;
  char buf[4096];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(buf[i]);
      hash *= 0x100000001B3ull;
    }
    if (!in) break;
  }
  return hex64(hash);
}

std::string reports_to_csv(const Provenance& prov, std::span<const DamageReport> reports) {
  std::string out = provenance_comment(prov);
  {
    std::vector<std::string> header;
    for (const char* c : kReportColumns) header.emplace_back(c);
    out += csv::join_row(header);
    out.push_back('\n');
  }
  for (const DamageReport& r : reports) {
    out += csv::join_row(report_fields(r));
    out.push_back('\n');
  }
  return out;
}

std::string reports_to_json(const Provenance& prov, std::span<const DamageReport> reports) {
  ordered_json j;
  j["provenance"] = provenance_json(prov);
  ordered_json rows = ordered_json::array();
  for (const DamageReport& r : reports) {
    const DamageMetrics& m = r.metrics;
    ordered_json row;
    row["scenario-kind"] = std::string(scenario_kind_name(r.scenario.kind));
    row["entity"] = r.entity;
    row["layer"] = std::string(layer_name(r.layer));
    row["C0"] = m.communities_before;
    row["C1"] = m.communities_after;
    row["Q0"] = m.components_before;
    row["Q1"] = m.components_after;
    row["G0"] = m.giant_before;
    row["G1"] = m.giant_after;
    row["c"] = m.c;
    row["q"] = m.q;
    row["g"] = m.g;
    row["delta"] = m.delta;
    row["delta-norm"] = r.delta_normalized;
    row["seed"] = r.params.seed;
    row["repetitions"] = r.params.repetitions;
    row["resolution"] = r.params.resolution;
    row["omega"] = r.params.omega;
    row["scope"] = std::string(damage_scope_name(m.scope));
    rows.push_back(std::move(row));
  }
  j["reports"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::vector<ReportRow> read_report_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(path + ": cannot open file");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  // drop provenance comment lines before CSV parsing
  std::string body;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    if (pos >= text.size() || text[pos] != '#') {
      body.append(text, pos, eol - pos + 1);
    }
    pos = eol + 1;
  }

  const auto rows = csv::parse(body);
  if (rows.empty()) throw ValidationError(path + ": empty report file");
  const auto& header = rows.front().fields;
  auto column = [&](std::string_view name) -> std::size_t {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    throw ValidationError(path + ": missing report column '" + std::string(name) + "'");
  };
  const std::size_t kind_col = column("scenario-kind");
  const std::size_t entity_col = column("entity");
  const std::size_t layer_col = column("layer");
  const std::size_t delta_col = column("delta");
  const std::size_t norm_col = column("delta-norm");

  std::vector<ReportRow> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& fields = rows[i].fields;
    if (fields.size() != header.size()) {
      throw ValidationError(path + ":" + std::to_string(rows[i].line) +
                            ": wrong field count");
    }
    ReportRow row;
    row.scenario_kind = fields[kind_col];
    row.entity = fields[entity_col];
    row.layer = fields[layer_col];
    row.delta = csv::parse_double(fields[delta_col], path + ": delta");
    row.delta_normalized = csv::parse_double(fields[norm_col], path + ": delta-norm");
    out.push_back(std::move(row));
  }
  return out;
}

std::string partition_to_csv(const Provenance& prov, const MultiplexNetwork& network,
                             const Partition& partition) {
  std::string out = provenance_comment(prov);
  out += "# quality " + csv::format_double(partition.quality) + "\n";
  out += "node,layer,label\n";
  const auto& countries = network.countries();
  if (partition.scope == Scope::Layer) {
    for (std::size_t i = 0; i < partition.labels.size(); ++i) {
      const std::string fields[] = {countries[i].iso3,
                                    std::string(layer_name(partition.layer)),
                                    std::to_string(partition.labels[i])};
      out += csv::join_row(fields);
      out.push_back('\n');
    }
  } else {
    for (std::size_t i = 0; i < partition.labels.size(); ++i) {
      const std::string fields[] = {countries[i / 2].iso3,
                                    std::string(layer_name(static_cast<LayerId>(i % 2))),
                                    std::to_string(partition.labels[i])};
      out += csv::join_row(fields);
      out.push_back('\n');
    }
  }
  return out;
}

std::string partition_to_json(const Provenance& prov, const MultiplexNetwork& network,
                              const Partition& partition) {
  ordered_json j;
  j["provenance"] = provenance_json(prov);
  j["quality"] = partition.quality;
  j["communities"] = community_count(partition);
  ordered_json rows = ordered_json::array();
  const auto& countries = network.countries();
  for (std::size_t i = 0; i < partition.labels.size(); ++i) {
    const bool layer_scope = partition.scope == Scope::Layer;
    ordered_json row;
    row["node"] = countries[layer_scope ? i : i / 2].iso3;
    row["layer"] = std::string(
        layer_name(layer_scope ? partition.layer : static_cast<LayerId>(i % 2)));
    row["label"] = partition.labels[i];
    rows.push_back(std::move(row));
  }
  j["assignment"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string correlation_to_csv(const Provenance& prov, const CorrelationResult& result,
                               const std::string& series_a, const std::string& series_b) {
  std::string out = provenance_comment(prov);
  out += "series_a,series_b,r,p,n,method\n";
  const std::string fields[] = {series_a,
                                series_b,
                                csv::format_double(result.r),
                                csv::format_double(result.p),
                                std::to_string(result.n),
                                std::string(pvalue_method_name(result.method))};
  out += csv::join_row(fields);
  out.push_back('\n');
  return out;
}

std::string correlation_to_json(const Provenance& prov, const CorrelationResult& result,
                                const std::string& series_a, const std::string& series_b) {
  ordered_json j;
  j["provenance"] = provenance_json(prov);
  j["series_a"] = series_a;
  j["series_b"] = series_b;
  j["r"] = result.r;
  j["p"] = result.p;
  j["n"] = result.n;
  j["method"] = std::string(pvalue_method_name(result.method));
  return j.dump(2) + "\n";
}

std::string plot_data_to_csv(const Provenance& prov, std::span<const DamageReport> reports) {
  std::string out = provenance_comment(prov);
  const bool country_keyed =
      !reports.empty() && reports.front().scenario.kind == Scenario::Kind::Country;
  out += country_keyed ? "iso3,delta-norm\n" : "entity,delta-norm\n";
  for (const DamageReport& r : reports) {
    const std::string fields[] = {r.entity, csv::format_double(r.delta_normalized)};
    out += csv::join_row(fields);
    out.push_back('\n');
  }
  return out;
}

}  // namespace treatynet
