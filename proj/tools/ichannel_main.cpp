#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ichannel/csv_io.hpp"
#include "ichannel/errors.hpp"
#include "ichannel/han_kobayashi.hpp"
#include "ichannel/json_io.hpp"
#include "ichannel/presets.hpp"
#include "ichannel/regimes.hpp"
#include "ichannel/svg.hpp"

namespace {

using nlohmann::json;
using namespace ichannel;

struct LoadedConfig {
  ChannelConfig channel;
  std::optional<Preset> preset;  // set when --config named a bundled preset
};

LoadedConfig load_config(const std::string& name_or_path) {
  if (auto preset = find_preset(name_or_path)) {
    return {{preset->params, std::nullopt}, preset};
  }
  std::ifstream in(name_or_path);
  if (!in) throw ConfigError("cannot open config \"" + name_or_path + "\"");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return {channel_config_from_json(doc), std::nullopt};
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write output file " + path.string());
  out << content;
}

PowerSplit parse_split(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ConfigError("--split expects \"l1,l2\"");
  try {
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ConfigError("--split expects two numbers \"l1,l2\"");
  }
}

struct RegionOutput {
  RatePolytope region{std::vector<RateConstraint>{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}};
  std::optional<RegimeReport> report;
};

bool is_hk_strategy(const std::string& s) { return s.rfind("hk-", 0) == 0; }

RegionOutput build_region(const ChannelParams& params, const std::string& strategy,
                          const std::optional<PowerSplit>& split, bool force) {
  RegionOutput out;
  const auto need_split = [&]() -> PowerSplit {
    if (!split) throw ConfigError("strategy \"" + strategy + "\" requires --split l1,l2");
    return *split;
  };
  if (strategy == "vsi-homodyne" || strategy == "vsi-heterodyne") {
    const auto det = strategy == "vsi-homodyne" ? Detection::Homodyne : Detection::Heterodyne;
    out.report = classify_coherent(params, det);
    out.region = vsi_region(params, det, force);
  } else if (strategy == "vsi-joint") {
    out.report = check_quantum_vsi(params);
    out.region = vsi_region(params, Detection::Joint, force);
  } else if (strategy == "strong-homodyne" || strategy == "strong-heterodyne") {
    const auto det =
        strategy == "strong-homodyne" ? Detection::Homodyne : Detection::Heterodyne;
    out.report = classify_coherent(params, det);
    out.region = strong_region_coherent(params, det, force);
  } else if (strategy == "strong-minentropy-hull") {
    out.region = strong_region_minentropy_hull(params);
  } else if (strategy == "strong-quantum") {
    out.region = strong_region_quantum_conjectured(params);
  } else if (strategy == "hk-homodyne") {
    out.region = hk_region_coherent(params, need_split(), Detection::Homodyne);
  } else if (strategy == "hk-heterodyne") {
    out.region = hk_region_coherent(params, need_split(), Detection::Heterodyne);
  } else if (strategy == "hk-quantum") {
    out.region = hk_region_quantum_conjectured(params, need_split());
  } else if (strategy == "hk-minentropy-hull") {
    out.region = hk_region_minentropy_hull(params, need_split());
  } else {
    throw ConfigError("unknown strategy \"" + strategy + "\"");
  }
  return out;
}

json region_summary(const std::string& strategy, const RegionOutput& out) {
  const auto vs = vertices(out.region);
  double r1_max = 0.0, r2_max = 0.0;
  for (const auto& v : vs) {
    r1_max = std::max(r1_max, v.r1);
    r2_max = std::max(r2_max, v.r2);
  }
  json j{{"strategy", strategy},
         {"annotation", out.region.annotation()},
         {"area", area(out.region)},
         {"corner_rates", {{"r1", r1_max}, {"r2", r2_max}}},
         {"regime_report", out.report ? to_json(*out.report) : json(nullptr)}};
  return j;
}

int cmd_validate(const LoadedConfig& cfg) {
  json report;
  try {
    const auto params = validate(cfg.channel.params);
    report["valid"] = true;
    report["channel"] = to_json(params);
    report["eta_bar1"] = params.eta_bar1();
    report["eta_bar2"] = params.eta_bar2();
    const auto hom = detection_noise(params, Detection::Homodyne);
    const auto het = detection_noise(params, Detection::Heterodyne);
    report["detection_noise"] = {{"homodyne", {{"n1", hom.n1}, {"n2", hom.n2}}},
                                 {"heterodyne", {{"n1", het.n1}, {"n2", het.n2}}}};
    if (cfg.channel.geometry) {
      const auto fres = fresnel_summary(*cfg.channel.geometry);
      report["fresnel"] = {
          {"df", fres.df},
          {"regime", fres.regime == PropagationRegime::NearField ? "near-field" : "far-field"},
          {"mode_count_or_eta", fres.mode_count_or_eta}};
    }
  } catch (const Error& e) {
    report["valid"] = false;
    report["error"] = e.what();
    if (dynamic_cast<const PassivityError*>(&e)) {
      report["kind"] = "PassivityError";
    } else if (dynamic_cast<const UnitarityError*>(&e)) {
      report["kind"] = "UnitarityError";
    } else if (dynamic_cast<const RangeError*>(&e)) {
      report["kind"] = "RangeError";
    } else {
      report["kind"] = "Error";
    }
    std::cout << report.dump(2) << "\n";
    throw;
  }
  std::cout << report.dump(2) << "\n";
  return 0;
}

int cmd_classify(const LoadedConfig& cfg) {
  const auto params = validate(cfg.channel.params);
  json out{{"channel", to_json(params)},
           {"homodyne", to_json(classify_coherent(params, Detection::Homodyne))},
           {"heterodyne", to_json(classify_coherent(params, Detection::Heterodyne))},
           {"quantum_vsi", to_json(check_quantum_vsi(params))}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

/// Split preference: explicit --split, then the config document, then the
/// preset default.
std::optional<PowerSplit> resolve_split(const LoadedConfig& cfg,
                                        const std::optional<PowerSplit>& explicit_split) {
  if (explicit_split) return explicit_split;
  if (cfg.channel.split) return validate(*cfg.channel.split);
  if (cfg.preset) return cfg.preset->default_split;
  return std::nullopt;
}

int cmd_region(const LoadedConfig& cfg, const std::string& strategy,
               const std::optional<PowerSplit>& split_opt, bool force,
               const std::string& out_dir) {
  const auto params = validate(cfg.channel.params);
  std::optional<PowerSplit> split;
  if (is_hk_strategy(strategy)) split = resolve_split(cfg, split_opt);
  const auto out = build_region(params, strategy, split, force);

  std::filesystem::create_directories(out_dir);
  const auto base = std::filesystem::path(out_dir) / strategy;
  write_file(base.string() + ".csv", vertices_csv(out.region));
  const auto summary = region_summary(strategy, out);
  write_file(base.string() + ".json", summary.dump(2) + "\n");
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int cmd_sweep(const LoadedConfig& cfg, const std::string& strategy, int grid, bool grid_given,
              const std::string& out_dir) {
  const auto params = validate(cfg.channel.params);
  if (!grid_given && cfg.channel.grid) grid = *cfg.channel.grid;
  HkBuilder builder;
  if (strategy == "hk-homodyne") {
    builder = HkBuilder::CoherentHomodyne;
  } else if (strategy == "hk-heterodyne") {
    builder = HkBuilder::CoherentHeterodyne;
  } else if (strategy == "hk-quantum") {
    builder = HkBuilder::QuantumConjectured;
  } else if (strategy == "hk-minentropy-hull") {
    builder = HkBuilder::MinEntropyHull;
  } else {
    throw ConfigError("sweep supports the hk-* strategies, got \"" + strategy + "\"");
  }
  RegionOutput out;
  out.region = sweep_splits(params, builder, grid);

  const std::string name = strategy + "-sweep";
  std::filesystem::create_directories(out_dir);
  const auto base = std::filesystem::path(out_dir) / name;
  write_file(base.string() + ".csv", vertices_csv(out.region));
  auto summary = region_summary(name, out);
  summary["grid"] = grid;
  write_file(base.string() + ".json", summary.dump(2) + "\n");
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int cmd_compare(const LoadedConfig& cfg, const std::vector<std::string>& strategies,
                const std::optional<PowerSplit>& split_opt, bool force) {
  if (strategies.size() != 2) throw ConfigError("compare needs exactly two --strategy values");
  const auto params = validate(cfg.channel.params);
  const auto split = resolve_split(cfg, split_opt);

  const auto a = build_region(params, strategies[0], split, force);
  const auto b = build_region(params, strategies[1], split, force);
  const auto witness_ab = region_difference_witness(a.region, b.region);
  const auto witness_ba = region_difference_witness(b.region, a.region);
  const bool a_in_b = !witness_ab.has_value();
  const bool b_in_a = !witness_ba.has_value();

  std::string relation = "incomparable";
  if (a_in_b && b_in_a) {
    relation = "equal";
  } else if (a_in_b) {
    relation = "a_subset_b";
  } else if (b_in_a) {
    relation = "b_subset_a";
  }
  const double area_b = area(b.region);
  json out{{"a", strategies[0]},
           {"b", strategies[1]},
           {"a_subset_b", a_in_b},
           {"b_subset_a", b_in_a},
           {"relation", relation},
           {"area_ratio", area_b > 0.0 ? json(area(a.region) / area_b) : json(nullptr)},
           {"witness_a_not_in_b",
            witness_ab ? json({witness_ab->r1, witness_ab->r2}) : json(nullptr)},
           {"witness_b_not_in_a",
            witness_ba ? json({witness_ba->r1, witness_ba->r2}) : json(nullptr)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_figure(const LoadedConfig& cfg, const std::string& config_name, double axis_max,
               const std::string& out_dir) {
  if (!cfg.preset) {
    throw ConfigError("figure needs a bundled preset name "
                      "(fig1-low, fig1-high, fig2-low, fig2-high, fig3)");
  }
  const auto& preset = *cfg.preset;
  const auto params = validate(preset.params);

  std::vector<std::string> strategies;
  if (preset.figure == 1) {
    strategies = {"vsi-homodyne", "vsi-heterodyne", "vsi-joint"};
  } else if (preset.figure == 2) {
    strategies = {"strong-homodyne", "strong-heterodyne", "strong-quantum",
                  "strong-minentropy-hull"};
  } else {
    strategies = {"hk-homodyne", "hk-heterodyne", "hk-quantum", "hk-minentropy-hull"};
  }

  std::filesystem::create_directories(out_dir);
  std::vector<PlotSeries> series;
  for (const auto& strategy : strategies) {
    // Regions outside their exact regime are still drawn, as achievable-only.
    const auto out = build_region(params, strategy, preset.default_split, /*force=*/true);
    const auto name = preset.name + "_" + strategy;
    write_file(std::filesystem::path(out_dir) / (name + ".csv"), vertices_csv(out.region));
    PlotSeries s;
    s.label = strategy + (out.region.annotation() == "conjectured" ? " (conjectured)" : "");
    s.polygon = vertices(out.region);
    series.push_back(std::move(s));
  }
  const auto svg = render_plot_svg(series, preset.name, axis_max);
  write_file(std::filesystem::path(out_dir) / (preset.name + ".svg"), svg);
  std::cout << "wrote " << series.size() << " series for " << config_name << " to " << out_dir
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rate regions of the two-sender free-space optical interference channel"};
  app.require_subcommand(1);

  std::string config_arg;
  std::string strategy;
  std::vector<std::string> compare_strategies;
  std::string split_text;
  std::string out_dir = ".";
  int grid = 11;
  double axis_max = 0.0;
  bool force = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check channel parameters");
  validate_cmd->add_option("--config", config_arg, "Preset name or JSON path")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Report interference regimes");
  classify_cmd->add_option("--config", config_arg)->required();

  auto* region_cmd = app.add_subcommand("region", "Compute one rate region");
  region_cmd->add_option("--config", config_arg)->required();
  region_cmd->add_option("--strategy", strategy, "Region builder selector")->required();
  region_cmd->add_option("--split", split_text, "HK power split l1,l2");
  region_cmd->add_option("--out", out_dir, "Output directory");
  region_cmd->add_flag("--force", force, "Build even outside the exact regime");

  auto* sweep_cmd = app.add_subcommand("sweep", "Hull of an hk-* region over a split grid");
  sweep_cmd->add_option("--config", config_arg)->required();
  sweep_cmd->add_option("--strategy", strategy)->required();
  auto* grid_opt = sweep_cmd->add_option("--grid", grid, "Grid points per split axis (>= 2)");
  sweep_cmd->add_option("--out", out_dir);

  auto* compare_cmd = app.add_subcommand("compare", "Containment and area ratio of two regions");
  compare_cmd->add_option("--config", config_arg)->required();
  compare_cmd->add_option("--strategy", compare_strategies, "Two region selectors")
      ->expected(1, 2);
  compare_cmd->add_option("--split", split_text);
  compare_cmd->add_flag("--force", force);

  auto* figure_cmd = app.add_subcommand("figure", "Render a bundled scenario (CSV + SVG)");
  figure_cmd->add_option("--config", config_arg, "fig1-low|fig1-high|fig2-low|fig2-high|fig3")
      ->required();
  figure_cmd->add_option("--axis-max", axis_max, "Fix both axes at this many nats (0 = auto)");
  figure_cmd->add_option("--out", out_dir);

  try {
    app.parse(argc, argv);

    const auto cfg = load_config(config_arg);
    std::optional<PowerSplit> split;
    if (!split_text.empty()) split = validate(parse_split(split_text));

    if (validate_cmd->parsed()) return cmd_validate(cfg);
    if (classify_cmd->parsed()) return cmd_classify(cfg);
    if (region_cmd->parsed()) return cmd_region(cfg, strategy, split, force, out_dir);
    if (sweep_cmd->parsed()) return cmd_sweep(cfg, strategy, grid, grid_opt->count() > 0, out_dir);
    if (compare_cmd->parsed()) return cmd_compare(cfg, compare_strategies, split, force);
    if (figure_cmd->parsed()) return cmd_figure(cfg, config_arg, axis_max, out_dir);
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const RegimeError& e) {
    std::cerr << "regime error: " << e.what() << " (use --force for an achievable-only region)\n";
    return 3;
  } catch (const RangeError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const PassivityError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const UnitarityError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
