#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ichannel/han_kobayashi.hpp"
#include "ichannel/presets.hpp"
#include "ichannel/regimes.hpp"

#ifndef ICHANNEL_CLI_PATH
#error "ICHANNEL_CLI_PATH must point at the built ichannel binary"
#endif

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

fs::path fresh_dir(const std::string& tag) {
  const auto dir = fs::temp_directory_path() / ("ichannel_cli_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

RunResult run_cli(const std::string& args, const fs::path& workdir) {
  const auto out_file = workdir / "stdout.txt";
  const std::string cmd =
      std::string(ICHANNEL_CLI_PATH) + " " + args + " > " + out_file.string() + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  result.stdout_text = ss.str();
  return result;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<ichannel::RatePoint> csv_vertices(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);  // header
  std::vector<ichannel::RatePoint> out;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    out.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
  }
  return out;
}

double csv_max_r1(const fs::path& p) {
  double m = 0.0;
  for (const auto& v : csv_vertices(p)) m = std::max(m, v.r1);
  return m;
}

}  // namespace

TEST_CASE("validate: presets, malformed JSON, invalid channels") {
  const auto dir = fresh_dir("validate");

  auto ok = run_cli("validate --config fig1-low", dir);
  CHECK(ok.exit_code == 0);
  const auto verdict = json::parse(ok.stdout_text);
  CHECK(verdict["valid"] == true);
  CHECK(verdict["eta_bar1"] == doctest::Approx(0.4375).epsilon(1e-15));
  CHECK(verdict["detection_noise"]["heterodyne"]["n1"] ==
        doctest::Approx(1.4375).epsilon(1e-15));

  const auto bad_json = dir / "broken.json";
  std::ofstream(bad_json) << "{ not json";
  CHECK(run_cli("validate --config " + bad_json.string(), dir).exit_code == 1);

  CHECK(run_cli("validate --config " + (dir / "missing.json").string(), dir).exit_code == 1);

  const auto passivity = dir / "passivity.json";
  std::ofstream(passivity) << R"({"eta11":0.7,"eta12":0.7,"eta21":0.7,"eta22":0.7,
                                 "NS1":1,"NS2":1,"NB1":1,"NB2":1})";
  auto bad = run_cli("validate --config " + passivity.string(), dir);
  CHECK(bad.exit_code == 2);
  const auto bad_verdict = json::parse(bad.stdout_text);
  CHECK(bad_verdict["valid"] == false);
  CHECK(bad_verdict["kind"] == "PassivityError");

  // A config file (not a preset) with geometry reports the link summary.
  const auto with_geom = dir / "geom.json";
  std::ofstream(with_geom) << R"({"eta11":0.0625,"eta12":0.5,"eta21":0.5,"eta22":0.0625,
    "NS1":1,"NS2":1,"NB1":1,"NB2":1,
    "geometry":{"At":0.01,"Ar":0.01,"wavelength":1.55e-6,"L":1000}})";
  auto geom = run_cli("validate --config " + with_geom.string(), dir);
  CHECK(geom.exit_code == 0);
  const auto geom_verdict = json::parse(geom.stdout_text);
  CHECK(geom_verdict["fresnel"]["regime"] == "near-field");
  CHECK(geom_verdict["fresnel"]["df"] == doctest::Approx(41.623309053069719).epsilon(1e-9));
}

TEST_CASE("classify emits regime reports") {
  const auto dir = fresh_dir("classify");
  auto res = run_cli("classify --config fig3", dir);
  CHECK(res.exit_code == 0);
  const auto doc = json::parse(res.stdout_text);
  CHECK(doc["homodyne"]["regime"] == "neither");
  CHECK(doc["heterodyne"]["regime"] == "neither");
  CHECK(doc["quantum_vsi"]["regime"] == "neither");

  auto fig1 = json::parse(run_cli("classify --config fig1-low", dir).stdout_text);
  CHECK(fig1["homodyne"]["regime"] == "very-strong");
  CHECK(fig1["quantum_vsi"]["regime"] == "very-strong");
}

TEST_CASE("region writes CSV and JSON summaries") {
  const auto dir = fresh_dir("region");

  auto joint =
      run_cli("region --config fig1-low --strategy vsi-joint --out " + dir.string(), dir);
  CHECK(joint.exit_code == 0);
  const auto csv = slurp(dir / "vsi-joint.csv");
  CHECK(csv.find("R1,R2\n0,0\n0.0714227295,0\n") == 0);
  const auto summary = json::parse(slurp(dir / "vsi-joint.json"));
  CHECK(summary["strategy"] == "vsi-joint");
  CHECK(summary["corner_rates"]["r1"] == doctest::Approx(0.071422729495547356).epsilon(1e-9));
  CHECK(summary["regime_report"]["regime"] == "very-strong");

  auto pent = run_cli(
      "region --config fig2-low --strategy strong-homodyne --out " + dir.string(), dir);
  CHECK(pent.exit_code == 0);
  std::istringstream lines(slurp(dir / "strong-homodyne.csv"));
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 6);  // header + 5 vertices

  // Outside the strong regime: exit 3, or an annotated region when forced.
  auto refused =
      run_cli("region --config fig3 --strategy strong-homodyne --out " + dir.string(), dir);
  CHECK(refused.exit_code == 3);
  auto forced = run_cli(
      "region --config fig3 --strategy strong-homodyne --force --out " + dir.string(), dir);
  CHECK(forced.exit_code == 0);
  CHECK(json::parse(forced.stdout_text)["annotation"] == "achievable-only, not capacity");

  // Unknown strategy is a usage error.
  CHECK(run_cli("region --config fig3 --strategy bogus --out " + dir.string(), dir).exit_code ==
        1);

  // hk-* regions take the split from the preset default or --split.
  auto hk = run_cli("region --config fig3 --strategy hk-homodyne --out " + dir.string(), dir);
  CHECK(hk.exit_code == 0);
  CHECK(json::parse(hk.stdout_text)["corner_rates"]["r1"] ==
        doctest::Approx(2.0187148832299091).epsilon(1e-9));
  auto hk_split = run_cli(
      "region --config fig3 --strategy hk-homodyne --split 1,1 --out " + dir.string(), dir);
  CHECK(json::parse(hk_split.stdout_text)["corner_rates"]["r1"] ==
        doctest::Approx(1.0854967825936748).epsilon(1e-9));

  // A config document can carry the split itself.
  const auto split_cfg = dir / "with_split.json";
  std::ofstream(split_cfg) << R"({"eta11":0.8,"eta12":0.1,"eta21":0.1,"eta22":0.8,
    "NS1":100,"NS2":100,"NB1":1,"NB2":1,"split":{"lambda1":1.0,"lambda2":1.0}})";
  auto from_cfg = run_cli(
      "region --config " + split_cfg.string() + " --strategy hk-homodyne --out " + dir.string(),
      dir);
  CHECK(from_cfg.exit_code == 0);
  CHECK(json::parse(from_cfg.stdout_text)["corner_rates"]["r1"] ==
        doctest::Approx(1.0854967825936748).epsilon(1e-9));
}

TEST_CASE("compare reports containment and area ratios") {
  const auto dir = fresh_dir("compare");

  auto res = run_cli(
      "compare --config fig1-low --strategy vsi-joint --strategy vsi-homodyne", dir);
  CHECK(res.exit_code == 0);
  const auto doc = json::parse(res.stdout_text);
  CHECK(doc["relation"] == "b_subset_a");
  CHECK(doc["b_subset_a"] == true);
  CHECK(doc["a_subset_b"] == false);
  CHECK(doc["area_ratio"] == doctest::Approx(1.3025066746062327).epsilon(1e-9));
  CHECK(doc["witness_a_not_in_b"].is_array());

  auto same = json::parse(
      run_cli("compare --config fig1-low --strategy vsi-joint --strategy vsi-joint", dir)
          .stdout_text);
  CHECK(same["relation"] == "equal");

  // High power: the min-entropy hull strictly contains the heterodyne
  // pentagon, with a witness out past its corner rate.
  auto hull = json::parse(
      run_cli("compare --config fig2-high --strategy strong-minentropy-hull "
              "--strategy strong-heterodyne",
              dir)
          .stdout_text);
  CHECK(hull["relation"] == "b_subset_a");
  REQUIRE(hull["witness_a_not_in_b"].is_array());
  CHECK(hull["witness_a_not_in_b"][0].get<double>() > 3.342);
}

TEST_CASE("sweep hulls a strategy over the split grid") {
  const auto dir = fresh_dir("sweep");
  auto res = run_cli(
      "sweep --config fig3 --strategy hk-homodyne --grid 5 --out " + dir.string(), dir);
  CHECK(res.exit_code == 0);
  const auto doc = json::parse(res.stdout_text);
  CHECK(doc["grid"] == 5);
  CHECK(fs::exists(dir / "hk-homodyne-sweep.csv"));

  CHECK(run_cli("sweep --config fig3 --strategy vsi-joint --out " + dir.string(), dir)
            .exit_code == 1);
}

TEST_CASE("emitted vertices re-validate against their region's constraints") {
  using namespace ichannel;
  const auto dir = fresh_dir("revalidate");
  run_cli("region --config fig2-low --strategy strong-homodyne --out " + dir.string(), dir);
  run_cli("region --config fig3 --strategy hk-heterodyne --out " + dir.string(), dir);

  const auto pentagon =
      strong_region_coherent(find_preset("fig2-low")->params, Detection::Homodyne);
  for (const auto& v : csv_vertices(dir / "strong-homodyne.csv")) {
    CHECK(contains(pentagon, v, 1e-7));  // 9-significant-digit rounding
  }
  const auto hk =
      hk_region_coherent(find_preset("fig3")->params, {0.1, 0.1}, Detection::Heterodyne);
  for (const auto& v : csv_vertices(dir / "hk-heterodyne.csv")) {
    CHECK(contains(hk, v, 1e-7));
  }
}

TEST_CASE("figure series reproduce the scenario orderings") {
  const auto dir = fresh_dir("figure_order");
  CHECK(run_cli("figure --config fig1-low --out " + dir.string(), dir).exit_code == 0);
  const double joint = csv_max_r1(dir / "fig1-low_vsi-joint.csv");
  const double hom = csv_max_r1(dir / "fig1-low_vsi-homodyne.csv");
  const double het = csv_max_r1(dir / "fig1-low_vsi-heterodyne.csv");
  CHECK(joint > hom);  // joint detection outermost at low power
  CHECK(hom > het);

  CHECK(run_cli("figure --config fig2-high --out " + dir.string(), dir).exit_code == 0);
  const double hull = csv_max_r1(dir / "fig2-high_strong-minentropy-hull.csv");
  const double het2 = csv_max_r1(dir / "fig2-high_strong-heterodyne.csv");
  CHECK(hull > het2);  // min-entropy decoders reach further on the R1 axis
}

TEST_CASE("figure renders bundled scenarios deterministically") {
  const auto dir_a = fresh_dir("figure_a");
  const auto dir_b = fresh_dir("figure_b");

  for (const auto* name : {"fig1-low", "fig2-high"}) {
    auto res = run_cli(std::string("figure --config ") + name + " --out " + dir_a.string(),
                       dir_a);
    CHECK(res.exit_code == 0);
  }
  CHECK(fs::exists(dir_a / "fig1-low.svg"));
  CHECK(fs::exists(dir_a / "fig1-low_vsi-joint.csv"));
  CHECK(fs::exists(dir_a / "fig2-high_strong-minentropy-hull.csv"));

  auto first = run_cli("figure --config fig3 --out " + dir_a.string(), dir_a);
  auto second = run_cli("figure --config fig3 --out " + dir_b.string(), dir_b);
  CHECK(first.exit_code == 0);
  CHECK(second.exit_code == 0);
  for (const auto* file :
       {"fig3.svg", "fig3_hk-homodyne.csv", "fig3_hk-heterodyne.csv", "fig3_hk-quantum.csv",
        "fig3_hk-minentropy-hull.csv"}) {
    CHECK(slurp(dir_a / file) == slurp(dir_b / file));
    CHECK(!slurp(dir_a / file).empty());
  }

  CHECK(run_cli("figure --config nope --out " + dir_a.string(), dir_a).exit_code == 1);
}
