#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ichannel/channel.hpp"
#include "ichannel/han_kobayashi.hpp"

namespace ichannel {

/// A bundled channel scenario. The three figures each come with fixed
/// parameters; figure 3 additionally fixes the default 10%-personal power
/// split used by the rate-splitting builders.
struct Preset {
  std::string name;
  int figure = 0;
  ChannelParams params;
  PowerSplit default_split{0.1, 0.1};
};

const std::vector<Preset>& presets();

/// Lookup by name ("fig1-low", "fig1-high", "fig2-low", "fig2-high", "fig3").
std::optional<Preset> find_preset(std::string_view name);

}  // namespace ichannel
