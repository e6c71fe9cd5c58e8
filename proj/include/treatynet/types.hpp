#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace treatynet {

using CountryId = std::uint32_t;
using TreatyId = std::uint32_t;

/// The two relationship layers; every edge and every removal scenario names one.
enum class LayerId : std::uint8_t { Political = 0, Economic = 1 };

inline constexpr std::size_t kLayerCount = 2;
inline constexpr LayerId kLayers[kLayerCount] = {LayerId::Political, LayerId::Economic};

std::string_view layer_name(LayerId layer);
LayerId parse_layer(std::string_view text);  // "political" | "economic", case-insensitive

/// Layer tag as written in treaty registries; Both expands to one entry per layer on load.
enum class LayerTag : std::uint8_t { Political, Economic, Both };

std::string_view layer_tag_name(LayerTag tag);
LayerTag parse_layer_tag(std::string_view text);

struct Country {
  CountryId id = 0;     // dense, 0..N-1
  std::string iso3;     // unique, uppercase, length 3
  std::string name;

  bool operator==(const Country&) const = default;
};

/// One layer-tagged entry of the network's treaty registry. Registries produced
/// by the ingest layer are already split: a treaty classified as Both appears
/// twice, once per layer, sharing acronym, name and members.
struct Treaty {
  TreatyId id = 0;
  std::string acronym;
  std::string name;
  LayerId layer = LayerId::Political;
  std::vector<CountryId> members;  // sorted, unique, size >= 2

  bool operator==(const Treaty&) const = default;
};

/// Input/schema problems (bad files, bad references, bad flags). CLI exit code 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Unknown country/treaty ids hit at run time. CLI exit code 3.
struct LookupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace treatynet
