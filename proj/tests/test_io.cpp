#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "ichannel/csv_io.hpp"
#include "ichannel/errors.hpp"
#include "ichannel/json_io.hpp"
#include "ichannel/presets.hpp"
#include "ichannel/regimes.hpp"
#include "ichannel/svg.hpp"

using namespace ichannel;
using nlohmann::json;

TEST_CASE("channel config parsing") {
  const auto doc = json::parse(R"({
    "eta11": 0.0625, "eta12": 0.5, "eta21": 0.5, "eta22": 0.0625,
    "NS1": 1, "NS2": 1, "NB1": 1, "NB2": 1,
    "geometry": {"At": 0.01, "Ar": 0.01, "wavelength": 1.55e-6, "L": 1000}
  })");
  const auto cfg = channel_config_from_json(doc);
  CHECK(cfg.params.eta11 == 0.0625);
  CHECK(cfg.params.ns2 == 1.0);
  REQUIRE(cfg.geometry.has_value());
  CHECK(cfg.geometry->wavelength == 1.55e-6);

  auto missing = doc;
  missing.erase("NB2");
  CHECK_THROWS_AS(channel_config_from_json(missing), ConfigError);
  auto wrong_type = doc;
  wrong_type["eta11"] = "half";
  CHECK_THROWS_AS(channel_config_from_json(wrong_type), ConfigError);
  CHECK_THROWS_AS(channel_config_from_json(json::parse("[1,2]")), ConfigError);

  const auto round = channel_config_from_json(to_json(cfg.params));
  CHECK(round.params.eta12 == cfg.params.eta12);
  CHECK(round.params.nb1 == cfg.params.nb1);

  // Optional rate-splitting defaults.
  auto with_split = doc;
  with_split["split"] = {{"lambda1", 0.1}, {"lambda2", 0.25}};
  with_split["grid"] = 7;
  const auto split_cfg = channel_config_from_json(with_split);
  REQUIRE(split_cfg.split.has_value());
  CHECK(split_cfg.split->lambda1 == 0.1);
  CHECK(split_cfg.split->lambda2 == 0.25);
  CHECK(split_cfg.grid == 7);
  auto bad_split = doc;
  bad_split["split"] = {{"lambda1", 0.1}};
  CHECK_THROWS_AS(channel_config_from_json(bad_split), ConfigError);
}

TEST_CASE("regime report serialization") {
  const auto p = validate(find_preset("fig1-low")->params);
  const auto j = to_json(classify_coherent(p, Detection::Homodyne));
  CHECK(j["strategy"] == "homodyne");
  CHECK(j["regime"] == "very-strong");
  REQUIRE(j["margins"].is_array());
  CHECK(j["margins"].size() == 4);
  CHECK(j["margins"][0].contains("lhs"));
  CHECK(j["margins"][0].contains("rhs"));
  CHECK(j["margins"][0]["satisfied"] == true);
}

TEST_CASE("vertex csv format") {
  const RatePolytope box({{1, 0, 0.0714227294955473}, {0, 1, 0.0714227294955473}});
  const auto csv = vertices_csv(box);
  CHECK(csv == "R1,R2\n0,0\n0.0714227295,0\n0.0714227295,0.0714227295\n0,0.0714227295\n");
}

TEST_CASE("number formatting") {
  CHECK(format_sig9(0.0) == "0");
  CHECK(format_sig9(-0.0) == "0");
  CHECK(format_sig9(0.5) == "0.5");
  CHECK(format_sig9(0.549306144334) == "0.549306144");
  CHECK(format_sig9(123456789.123) == "123456789");
}

TEST_CASE("bundled presets") {
  REQUIRE(presets().size() == 5);
  const auto fig1 = find_preset("fig1-low");
  REQUIRE(fig1.has_value());
  CHECK(fig1->figure == 1);
  CHECK(fig1->params.eta11 == doctest::Approx(1.0 / 16).epsilon(1e-15));
  CHECK(fig1->params.eta21 == 0.5);
  CHECK(fig1->params.ns1 == 1.0);
  CHECK(find_preset("fig1-high")->params.ns1 == 100.0);
  CHECK(find_preset("fig2-low")->params.eta11 == 0.3);
  CHECK(find_preset("fig2-low")->params.ns1 == 2.0);
  CHECK(find_preset("fig2-high")->params.ns2 == 100.0);
  const auto fig3 = find_preset("fig3");
  CHECK(fig3->params.eta11 == 0.8);
  CHECK(fig3->params.eta12 == 0.1);
  CHECK(fig3->default_split.lambda1 == 0.1);
  CHECK_FALSE(find_preset("fig4").has_value());
  for (const auto& preset : presets()) CHECK_NOTHROW(validate(preset.params));
}

TEST_CASE("svg rendering") {
  const RatePolytope box({{1, 0, 1}, {0, 1, 1}});
  const RatePolytope tri({{1, 1, 1.2}});
  const std::vector<PlotSeries> series = {{"box", vertices(box)}, {"triangle", vertices(tri)}};
  const auto svg = render_plot_svg(series, "demo");
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);

  std::size_t polygons = 0;
  for (std::size_t pos = svg.find("<polygon"); pos != std::string::npos;
       pos = svg.find("<polygon", pos + 1)) {
    ++polygons;
  }
  CHECK(polygons == 2);
  CHECK(svg.find(">box<") != std::string::npos);
  CHECK(svg.find(">triangle<") != std::string::npos);

  // Byte-for-byte deterministic.
  CHECK(render_plot_svg(series, "demo") == svg);
}
