#include "treatynet/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "treatynet/csv.hpp"

namespace treatynet {

namespace {

std::string at(const std::string& path, int line) {
  return path + ":" + std::to_string(line) + ": ";
}

bool valid_iso3(const std::string& code) {
  if (code.size() != 3) return false;
  return std::all_of(code.begin(), code.end(),
                     [](unsigned char c) { return c >= 'A' && c <= 'Z'; });
}

std::vector<std::string> split_members(const std::string& cell) {
  std::vector<std::string> out;
  std::string token;
  for (char c : cell) {
    if (c == ';') {
      if (!token.empty()) out.push_back(std::move(token));
      token.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      token.push_back(c);
    }
  }
  if (!token.empty()) out.push_back(std::move(token));
  return out;
}

std::map<std::string, LayerTag> load_classification(const std::string& path) {
  const auto rows = csv::read_file(path);
  csv::expect_header(rows, path, {"acronym", "layer"});
  std::map<std::string, LayerTag> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.fields.size() != 2) {
      throw ValidationError(at(path, row.line) + "expected 2 fields");
    }
    const std::string& acronym = row.fields[0];
    if (acronym.empty()) throw ValidationError(at(path, row.line) + "empty acronym");
    LayerTag tag;
    try {
      tag = parse_layer_tag(row.fields[1]);
    } catch (const ValidationError& e) {
      throw ValidationError(at(path, row.line) + e.what());
    }
    if (!out.emplace(acronym, tag).second) {
      throw ValidationError(at(path, row.line) + "duplicate acronym '" + acronym + "'");
    }
  }
  return out;
}

DatasetAudit compute_audit(const Dataset& ds) {
  DatasetAudit audit;
  audit.country_count = ds.countries.size();

  std::array<std::set<std::pair<CountryId, CountryId>>, kLayerCount> distinct;
  auto add_pair = [&](LayerId layer, CountryId a, CountryId b) {
    auto [lo, hi] = std::minmax(a, b);
    audit.deal_pairs[static_cast<std::size_t>(layer)] += 1;
    distinct[static_cast<std::size_t>(layer)].emplace(lo, hi);
  };

  for (const Treaty& t : ds.treaties) {
    for (std::size_t i = 0; i < t.members.size(); ++i) {
      for (std::size_t j = i + 1; j < t.members.size(); ++j) {
        add_pair(t.layer, t.members[i], t.members[j]);
      }
    }
  }
  for (const BilateralPair& bp : ds.bilaterals) add_pair(bp.layer, bp.a, bp.b);

  for (std::size_t l = 0; l < kLayerCount; ++l) {
    audit.distinct_edges[l] = distinct[l].size();
  }
  const auto& pol = distinct[static_cast<std::size_t>(LayerId::Political)];
  const auto& eco = distinct[static_cast<std::size_t>(LayerId::Economic)];
  for (const auto& pair : pol) {
    if (!eco.contains(pair)) ++audit.political_only_pairs;
  }
  return audit;
}

}  // namespace

Dataset load_dataset(const std::string& countries_file, const std::string& treaties_file,
                     const std::optional<std::string>& bilaterals_file,
                     const std::optional<std::string>& classification_file) {
  Dataset ds;

  // countries.csv
  {
    const auto rows = csv::read_file(countries_file);
    csv::expect_header(rows, countries_file, {"iso3", "name"});
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto& row = rows[i];
      if (row.fields.size() != 2) {
        throw ValidationError(at(countries_file, row.line) + "expected 2 fields");
      }
      Country c;
      c.id = static_cast<CountryId>(ds.countries.size());
      c.iso3 = row.fields[0];
      c.name = row.fields[1];
      if (!valid_iso3(c.iso3)) {
        throw ValidationError(at(countries_file, row.line) + "invalid iso3 code '" +
                              c.iso3 + "' (want 3 uppercase letters)");
      }
      ds.countries.push_back(std::move(c));
    }
  }
  std::map<std::string, CountryId> by_iso3;
  for (const Country& c : ds.countries) {
    if (!by_iso3.emplace(c.iso3, c.id).second) {
      throw ValidationError(countries_file + ": duplicate iso3 code '" + c.iso3 + "'");
    }
  }

  std::map<std::string, LayerTag> classification;
  if (classification_file) classification = load_classification(*classification_file);

  // treaties.csv
  {
    const auto rows = csv::read_file(treaties_file);
    csv::expect_header(rows, treaties_file, {"acronym", "name", "layer", "members"});
    std::set<std::string> seen;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto& row = rows[i];
      if (row.fields.size() != 4) {
        throw ValidationError(at(treaties_file, row.line) + "expected 4 fields");
      }
      TreatyRecord rec;
      rec.acronym = row.fields[0];
      rec.name = row.fields[1];
      if (rec.acronym.empty()) {
        throw ValidationError(at(treaties_file, row.line) + "empty acronym");
      }
      if (!seen.insert(rec.acronym).second) {
        throw ValidationError(at(treaties_file, row.line) + "duplicate acronym '" +
                              rec.acronym + "'");
      }

      // classification file wins; otherwise the row's own layer cell
      if (auto it = classification.find(rec.acronym); it != classification.end()) {
        rec.tag = it->second;
      } else if (row.fields[2].empty()) {
        throw ValidationError(at(treaties_file, row.line) + "treaty '" + rec.acronym +
                              "' has no layer tag and no classification entry");
      } else {
        try {
          rec.tag = parse_layer_tag(row.fields[2]);
        } catch (const ValidationError& e) {
          throw ValidationError(at(treaties_file, row.line) + e.what());
        }
      }

      rec.members = split_members(row.fields[3]);
      std::set<std::string> unique_members;
      for (const std::string& m : rec.members) {
        if (!by_iso3.contains(m)) {
          throw ValidationError(at(treaties_file, row.line) + "treaty '" + rec.acronym +
                                "': unknown country '" + m + "'");
        }
        unique_members.insert(m);
      }
      if (unique_members.size() < 2) {
        throw ValidationError(at(treaties_file, row.line) + "treaty '" + rec.acronym +
                              "' has fewer than two members");
      }
      ds.records.push_back(std::move(rec));
    }
  }

  // split Both-tagged records into one registry entry per layer
  for (const TreatyRecord& rec : ds.records) {
    std::vector<LayerId> layers;
    if (rec.tag == LayerTag::Political || rec.tag == LayerTag::Both) {
      layers.push_back(LayerId::Political);
    }
    if (rec.tag == LayerTag::Economic || rec.tag == LayerTag::Both) {
      layers.push_back(LayerId::Economic);
    }
    for (LayerId layer : layers) {
      Treaty t;
      t.id = static_cast<TreatyId>(ds.treaties.size());
      t.acronym = rec.acronym;
      t.name = rec.name;
      t.layer = layer;
      for (const std::string& m : rec.members) t.members.push_back(by_iso3.at(m));
      std::sort(t.members.begin(), t.members.end());
      t.members.erase(std::unique(t.members.begin(), t.members.end()), t.members.end());
      ds.treaties.push_back(std::move(t));
    }
  }

  // bilaterals.csv
  if (bilaterals_file) {
    const auto rows = csv::read_file(*bilaterals_file);
    csv::expect_header(rows, *bilaterals_file, {"iso3_a", "iso3_b", "layer"});
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto& row = rows[i];
      if (row.fields.size() != 3) {
        throw ValidationError(at(*bilaterals_file, row.line) + "expected 3 fields");
      }
      BilateralPair bp;
      for (int side = 0; side < 2; ++side) {
        const std::string& code = row.fields[side];
        auto it = by_iso3.find(code);
        if (it == by_iso3.end()) {
          throw ValidationError(at(*bilaterals_file, row.line) + "unknown country '" +
                                code + "'");
        }
        (side == 0 ? bp.a : bp.b) = it->second;
      }
      if (bp.a == bp.b) {
        throw ValidationError(at(*bilaterals_file, row.line) +
                              "bilateral endpoints must differ");
      }
      try {
        bp.layer = parse_layer(row.fields[2]);
      } catch (const ValidationError& e) {
        throw ValidationError(at(*bilaterals_file, row.line) + e.what());
      }
      ds.bilaterals.push_back(bp);
    }
  }

  ds.audit = compute_audit(ds);
  return ds;
}

IndexedSeries load_index_series(const std::string& path, const std::string& name) {
  const auto rows = csv::read_file(path);
  csv::expect_header(rows, path, {"iso3", "value"});
  std::vector<std::pair<std::string, double>> values;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.fields.size() != 2) {
      throw ValidationError(at(path, row.line) + "expected 2 fields");
    }
    if (!valid_iso3(row.fields[0])) {
      throw ValidationError(at(path, row.line) + "invalid iso3 code '" + row.fields[0] + "'");
    }
    values.emplace_back(row.fields[0],
                        csv::parse_double(row.fields[1], at(path, row.line) + "value"));
  }
  try {
    return IndexedSeries::make(name, std::move(values));
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string countries_to_csv(const std::vector<Country>& countries) {
  std::string out = "iso3,name\n";
  for (const Country& c : countries) {
    const std::string fields[] = {c.iso3, c.name};
    out += csv::join_row(fields);
    out.push_back('\n');
  }
  return out;
}

std::string treaties_to_csv(const std::vector<TreatyRecord>& records) {
  std::string out = "acronym,name,layer,members\n";
  for (const TreatyRecord& rec : records) {
    std::string members;
    for (const std::string& m : rec.members) {
      if (!members.empty()) members.push_back(';');
      members += m;
    }
    const std::string fields[] = {rec.acronym, rec.name,
                                  std::string(layer_tag_name(rec.tag)), members};
    out += csv::join_row(fields);
    out.push_back('\n');
  }
  return out;
}

std::string bilaterals_to_csv(const std::vector<BilateralPair>& bilaterals,
                              const std::vector<Country>& countries) {
  std::string out = "iso3_a,iso3_b,layer\n";
  for (const BilateralPair& bp : bilaterals) {
    const std::string fields[] = {countries.at(bp.a).iso3, countries.at(bp.b).iso3,
                                  std::string(layer_name(bp.layer))};
    out += csv::join_row(fields);
    out.push_back('\n');
  }
  return out;
}

}  // namespace treatynet
