#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ichannel/channel.hpp"
#include "ichannel/csv_io.hpp"
#include "ichannel/entropies.hpp"
#include "ichannel/errors.hpp"
#include "ichannel/han_kobayashi.hpp"
#include "ichannel/presets.hpp"
#include "ichannel/regimes.hpp"
#include "ichannel/svg.hpp"

namespace py = pybind11;
using namespace ichannel;

PYBIND11_MODULE(_ichannel, m) {
  m.doc() = "Rate regions of the two-sender free-space optical interference channel";

  py::register_exception<Error>(m, "ChannelError", PyExc_ValueError);

  py::enum_<Detection>(m, "Detection")
      .value("Homodyne", Detection::Homodyne)
      .value("Heterodyne", Detection::Heterodyne)
      .value("Joint", Detection::Joint)
      .value("MinEntropySimultaneous", Detection::MinEntropySimultaneous);

  py::enum_<Regime>(m, "Regime")
      .value("VeryStrong", Regime::VeryStrong)
      .value("Strong", Regime::Strong)
      .value("Neither", Regime::Neither);

  py::class_<ChannelParams>(m, "ChannelParams")
      .def(py::init([](double eta11, double eta12, double eta21, double eta22, double ns1,
                       double ns2, double nb1, double nb2) {
             ChannelParams p{eta11, eta12, eta21, eta22, ns1, ns2, nb1, nb2};
             return p;
           }),
           py::arg("eta11"), py::arg("eta12"), py::arg("eta21"), py::arg("eta22"),
           py::arg("NS1"), py::arg("NS2"), py::arg("NB1"), py::arg("NB2"))
      .def_readwrite("eta11", &ChannelParams::eta11)
      .def_readwrite("eta12", &ChannelParams::eta12)
      .def_readwrite("eta21", &ChannelParams::eta21)
      .def_readwrite("eta22", &ChannelParams::eta22)
      .def_readwrite("NS1", &ChannelParams::ns1)
      .def_readwrite("NS2", &ChannelParams::ns2)
      .def_readwrite("NB1", &ChannelParams::nb1)
      .def_readwrite("NB2", &ChannelParams::nb2)
      .def_property_readonly("eta_bar1", &ChannelParams::eta_bar1)
      .def_property_readonly("eta_bar2", &ChannelParams::eta_bar2);

  m.def("validate", py::overload_cast<const ChannelParams&>(&validate), py::arg("params"));

  py::class_<GaussianStat>(m, "GaussianStat")
      .def_readonly("mean", &GaussianStat::mean)
      .def_readonly("variance", &GaussianStat::variance)
      .def_readonly("per_quadrature", &GaussianStat::per_quadrature);
  py::class_<QuadratureStats>(m, "QuadratureStats")
      .def_readonly("real_part", &QuadratureStats::real_part)
      .def_readonly("imag_part", &QuadratureStats::imag_part);
  m.def("homodyne_statistics", &homodyne_statistics, py::arg("params"), py::arg("alpha1"),
        py::arg("alpha2"));
  m.def("heterodyne_statistics", &heterodyne_statistics, py::arg("params"), py::arg("alpha1"),
        py::arg("alpha2"));

  py::class_<DetectionNoise>(m, "DetectionNoise")
      .def_readonly("n1", &DetectionNoise::n1)
      .def_readonly("n2", &DetectionNoise::n2);
  m.def("detection_noise", &detection_noise, py::arg("params"), py::arg("detection"));

  py::class_<FresnelGeometry>(m, "FresnelGeometry")
      .def(py::init([](double at, double ar, double wavelength, double range) {
             return FresnelGeometry{at, ar, wavelength, range};
           }),
           py::arg("At"), py::arg("Ar"), py::arg("wavelength"), py::arg("L"))
      .def_readwrite("At", &FresnelGeometry::at)
      .def_readwrite("Ar", &FresnelGeometry::ar)
      .def_readwrite("wavelength", &FresnelGeometry::wavelength)
      .def_readwrite("L", &FresnelGeometry::range);
  py::enum_<PropagationRegime>(m, "PropagationRegime")
      .value("NearField", PropagationRegime::NearField)
      .value("FarField", PropagationRegime::FarField);
  py::class_<FresnelSummary>(m, "FresnelSummary")
      .def_readonly("df", &FresnelSummary::df)
      .def_readonly("regime", &FresnelSummary::regime)
      .def_readonly("mode_count_or_eta", &FresnelSummary::mode_count_or_eta);
  m.def("fresnel_summary", &fresnel_summary, py::arg("geometry"));

  m.def("thermal_entropy", &thermal_entropy, py::arg("n"));
  m.def("coherent_rate", &coherent_rate, py::arg("snr"), py::arg("detection"));
  m.def("thermal_min_entropy", &thermal_min_entropy, py::arg("n"));

  py::class_<RatePoint>(m, "RatePoint")
      .def(py::init([](double r1, double r2) { return RatePoint{r1, r2}; }), py::arg("r1"),
           py::arg("r2"))
      .def_readonly("r1", &RatePoint::r1)
      .def_readonly("r2", &RatePoint::r2)
      .def("__repr__", [](const RatePoint& p) {
        return "RatePoint(" + format_sig9(p.r1) + ", " + format_sig9(p.r2) + ")";
      });
  py::class_<RateConstraint>(m, "RateConstraint")
      .def(py::init([](double a, double b, double c) { return RateConstraint{a, b, c}; }),
           py::arg("a"), py::arg("b"), py::arg("c"))
      .def_readonly("a", &RateConstraint::a)
      .def_readonly("b", &RateConstraint::b)
      .def_readonly("c", &RateConstraint::c);
  py::class_<RatePolytope>(m, "RatePolytope")
      .def(py::init<std::vector<RateConstraint>, std::string>(), py::arg("constraints"),
           py::arg("annotation") = std::string())
      .def_property_readonly("constraints", &RatePolytope::constraints)
      .def_property_readonly("annotation", &RatePolytope::annotation)
      .def_property_readonly("clamped", &RatePolytope::clamped)
      .def("vertices", [](const RatePolytope& p) { return vertices(p); })
      .def("area", [](const RatePolytope& p) { return area(p); })
      .def(
          "contains",
          [](const RatePolytope& p, double r1, double r2, double tol) {
            return contains(p, {r1, r2}, tol);
          },
          py::arg("r1"), py::arg("r2"), py::arg("tol") = 1e-9)
      .def("csv", [](const RatePolytope& p) { return vertices_csv(p); });
  m.def("convex_hull_union", &convex_hull_union, py::arg("members"));
  m.def("region_difference_witness", &region_difference_witness, py::arg("p"), py::arg("q"));
  m.def(
      "grid_oracle",
      [](const RatePolytope& p, int resolution) {
        const auto est = grid_oracle(p, resolution);
        return py::make_tuple(est.area_estimate, est.sample_points);
      },
      py::arg("p"), py::arg("resolution"));

  py::class_<ConditionMargin>(m, "ConditionMargin")
      .def_readonly("lhs", &ConditionMargin::lhs)
      .def_readonly("rhs", &ConditionMargin::rhs)
      .def_readonly("satisfied", &ConditionMargin::satisfied);
  py::class_<RegimeReport>(m, "RegimeReport")
      .def_readonly("strategy", &RegimeReport::strategy)
      .def_readonly("regime", &RegimeReport::regime)
      .def_readonly("margins", &RegimeReport::margins);
  m.def("classify_coherent", &classify_coherent, py::arg("params"), py::arg("detection"));
  m.def("check_quantum_vsi", &check_quantum_vsi, py::arg("params"));

  m.def("vsi_region", &vsi_region, py::arg("params"), py::arg("detection"),
        py::arg("force") = false);
  m.def("strong_region_coherent", &strong_region_coherent, py::arg("params"),
        py::arg("detection"), py::arg("force") = false);

  py::enum_<Flavor>(m, "Flavor")
      .value("MinEntropy", Flavor::MinEntropy)
      .value("VonNeumann", Flavor::VonNeumann);
  py::class_<ReceiverFlavors>(m, "ReceiverFlavors")
      .def(py::init([](Flavor own, Flavor cross, Flavor sum) {
             return ReceiverFlavors{own, cross, sum};
           }),
           py::arg("own_rate") = Flavor::MinEntropy, py::arg("cross_rate") = Flavor::MinEntropy,
           py::arg("sum_rate") = Flavor::MinEntropy)
      .def_readwrite("own_rate", &ReceiverFlavors::own_rate)
      .def_readwrite("cross_rate", &ReceiverFlavors::cross_rate)
      .def_readwrite("sum_rate", &ReceiverFlavors::sum_rate);
  py::class_<FlavorAssignment>(m, "FlavorAssignment")
      .def(py::init([](ReceiverFlavors r1, ReceiverFlavors r2) {
             return FlavorAssignment{r1, r2};
           }),
           py::arg("receiver1") = ReceiverFlavors{}, py::arg("receiver2") = ReceiverFlavors{})
      .def_readwrite("receiver1", &FlavorAssignment::receiver1)
      .def_readwrite("receiver2", &FlavorAssignment::receiver2);
  m.def("strong_region_minentropy", &strong_region_minentropy, py::arg("params"),
        py::arg("flavor"));
  m.def("strong_region_minentropy_hull", &strong_region_minentropy_hull, py::arg("params"));
  m.def("strong_region_quantum_conjectured", &strong_region_quantum_conjectured,
        py::arg("params"));

  py::class_<PowerSplit>(m, "PowerSplit")
      .def(py::init([](double l1, double l2) { return PowerSplit{l1, l2}; }),
           py::arg("lambda1"), py::arg("lambda2"))
      .def_readwrite("lambda1", &PowerSplit::lambda1)
      .def_readwrite("lambda2", &PowerSplit::lambda2);
  py::class_<HKFlavorAssignment>(m, "HKFlavorAssignment")
      .def(py::init([](int vn1, int vn2) { return HKFlavorAssignment{vn1, vn2}; }),
           py::arg("vn_subset_r1"), py::arg("vn_subset_r2"))
      .def_readwrite("vn_subset_r1", &HKFlavorAssignment::vn_subset_r1)
      .def_readwrite("vn_subset_r2", &HKFlavorAssignment::vn_subset_r2);
  m.def("hk_region_coherent", &hk_region_coherent, py::arg("params"), py::arg("split"),
        py::arg("detection"));
  m.def("hk_region_quantum_conjectured", &hk_region_quantum_conjectured, py::arg("params"),
        py::arg("split"));
  m.def("hk_region_minentropy", &hk_region_minentropy, py::arg("params"), py::arg("split"),
        py::arg("flavor"));
  m.def("hk_region_minentropy_hull", &hk_region_minentropy_hull, py::arg("params"),
        py::arg("split"));
  py::enum_<HkBuilder>(m, "HkBuilder")
      .value("CoherentHomodyne", HkBuilder::CoherentHomodyne)
      .value("CoherentHeterodyne", HkBuilder::CoherentHeterodyne)
      .value("QuantumConjectured", HkBuilder::QuantumConjectured)
      .value("MinEntropyHull", HkBuilder::MinEntropyHull);
  m.def("sweep_splits", &sweep_splits, py::arg("params"), py::arg("builder"), py::arg("grid"));

  py::class_<Preset>(m, "Preset")
      .def_readonly("name", &Preset::name)
      .def_readonly("figure", &Preset::figure)
      .def_readonly("params", &Preset::params)
      .def_readonly("default_split", &Preset::default_split);
  m.def("presets", &presets);
  m.def("find_preset", [](const std::string& name) -> py::object {
    const auto p = find_preset(name);
    return p ? py::cast(*p) : py::none();
  });

  py::class_<PlotSeries>(m, "PlotSeries")
      .def(py::init([](std::string label, std::vector<RatePoint> polygon) {
             return PlotSeries{std::move(label), std::move(polygon)};
           }),
           py::arg("label"), py::arg("polygon"))
      .def_readwrite("label", &PlotSeries::label)
      .def_readwrite("polygon", &PlotSeries::polygon);
  m.def("render_plot_svg", &render_plot_svg, py::arg("series"), py::arg("title"),
        py::arg("axis_max") = 0.0);
}
