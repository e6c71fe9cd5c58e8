#include "treatynet/types.hpp"

#include <algorithm>
#include <cctype>

namespace treatynet {

namespace {

std::string lowered(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view layer_name(LayerId layer) {
  return layer == LayerId::Political ? "political" : "economic";
}

LayerId parse_layer(std::string_view text) {
  const std::string t = lowered(text);
  if (t == "political") return LayerId::Political;
  if (t == "economic") return LayerId::Economic;
  throw ValidationError("unknown layer '" + std::string(text) +
                        "' (expected 'political' or 'economic')");
}

std::string_view layer_tag_name(LayerTag tag) {
  switch (tag) {
    case LayerTag::Political: return "political";
    case LayerTag::Economic: return "economic";
    case LayerTag::Both: return "both";
  }
  return "political";
}

LayerTag parse_layer_tag(std::string_view text) {
  const std::string t = lowered(text);
  if (t == "political") return LayerTag::Political;
  if (t == "economic") return LayerTag::Economic;
  if (t == "both") return LayerTag::Both;
  throw ValidationError("unknown layer tag '" + std::string(text) +
                        "' (expected 'political', 'economic' or 'both')");
}

}  // namespace treatynet
