#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ichannel/channel.hpp"
#include "ichannel/han_kobayashi.hpp"
#include "ichannel/regimes.hpp"

namespace ichannel {

/// A channel description as read from a config document: parameters plus
/// optional link geometry and rate-splitting defaults.
struct ChannelConfig {
  ChannelParams params;
  std::optional<FresnelGeometry> geometry;
  std::optional<PowerSplit> split;
  std::optional<int> grid;
};

/// Parses {"eta11",...,"NB2"} with the optional blocks
/// "geometry":{"At","Ar","wavelength","L"}, "split":{"lambda1","lambda2"},
/// and "grid". Throws ConfigError on missing or non-numeric fields.
ChannelConfig channel_config_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const ChannelParams& params);
nlohmann::json to_json(const RegimeReport& report);

}  // namespace ichannel
