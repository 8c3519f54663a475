#include "ichannel/presets.hpp"

namespace ichannel {

namespace {

ChannelParams make_params(double self, double cross, double ns, double nb) {
  ChannelParams p;
  p.eta11 = p.eta22 = self;
  p.eta12 = p.eta21 = cross;
  p.ns1 = p.ns2 = ns;
  p.nb1 = p.nb2 = nb;
  return p;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> table = {
      {"fig1-low", 1, make_params(1.0 / 16.0, 0.5, 1.0, 1.0), {0.1, 0.1}},
      {"fig1-high", 1, make_params(1.0 / 16.0, 0.5, 100.0, 1.0), {0.1, 0.1}},
      {"fig2-low", 2, make_params(0.3, 0.6, 2.0, 1.0), {0.1, 0.1}},
      {"fig2-high", 2, make_params(0.3, 0.6, 100.0, 1.0), {0.1, 0.1}},
      {"fig3", 3, make_params(0.8, 0.1, 100.0, 1.0), {0.1, 0.1}},
  };
  return table;
}

std::optional<Preset> find_preset(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

}  // namespace ichannel
