#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "skyplace/baselines.hpp"
#include "skyplace/channel.hpp"
#include "skyplace/config.hpp"
#include "skyplace/engine.hpp"
#include "skyplace/game.hpp"
#include "skyplace/geometry.hpp"
#include "skyplace/network.hpp"

namespace py = pybind11;
using namespace skyplace;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Simulator of UAV-assisted downlink cellular coverage";

  py::class_<Position3D>(m, "Position3D")
      .def(py::init<>())
      .def(py::init([](double x, double y, double h) {
             return Position3D{x, y, h};
           }),
           py::arg("x"), py::arg("y"), py::arg("h"))
      .def_readwrite("x", &Position3D::x)
      .def_readwrite("y", &Position3D::y)
      .def_readwrite("h", &Position3D::h)
      .def("__eq__",
           [](const Position3D& a, const Position3D& b) { return a == b; })
      .def("__repr__", [](const Position3D& p) {
        std::ostringstream out;
        out << "Position3D(x=" << p.x << ", y=" << p.y << ", h=" << p.h << ")";
        return out.str();
      });

  py::class_<HexRegion>(m, "HexRegion")
      .def(py::init([](double cx, double cy, double radius) {
             return HexRegion{cx, cy, radius};
           }),
           py::arg("cx"), py::arg("cy"), py::arg("radius"))
      .def_readwrite("cx", &HexRegion::cx)
      .def_readwrite("cy", &HexRegion::cy)
      .def_readwrite("radius", &HexRegion::radius)
      .def("contains",
           py::overload_cast<double, double>(&HexRegion::contains, py::const_),
           py::arg("x"), py::arg("y"))
      .def("boundary_distance", &HexRegion::boundary_distance, py::arg("ux"),
           py::arg("uy"));

  py::class_<GridPoint>(m, "GridPoint")
      .def_readwrite("x", &GridPoint::x)
      .def_readwrite("y", &GridPoint::y)
      .def("__repr__", [](const GridPoint& g) {
        std::ostringstream out;
        out << "GridPoint(x=" << g.x << ", y=" << g.y << ")";
        return out.str();
      });

  m.def("hex_candidate_grid", &hex_candidate_grid, py::arg("region"),
        py::arg("target_count"));
  m.def("distance_3d", &distance_3d);
  m.def("horizontal_distance", &horizontal_distance);

  py::class_<EnvironmentParams>(m, "EnvironmentParams")
      .def(py::init<>())
      .def(py::init([](double alpha, double beta, double gamma) {
             return EnvironmentParams{alpha, beta, gamma};
           }),
           py::arg("alpha"), py::arg("beta"), py::arg("gamma"))
      .def_readwrite("alpha", &EnvironmentParams::alpha)
      .def_readwrite("beta", &EnvironmentParams::beta)
      .def_readwrite("gamma", &EnvironmentParams::gamma);

  py::enum_<LinkCondition>(m, "LinkCondition")
      .value("los", LinkCondition::los)
      .value("nlos", LinkCondition::nlos);

  py::class_<RadioProfile>(m, "RadioProfile")
      .def_readonly("ref_loss_los_db", &RadioProfile::ref_loss_los_db)
      .def_readonly("ref_loss_nlos_db", &RadioProfile::ref_loss_nlos_db);

  m.def("terrestrial_profile", &terrestrial_profile, py::arg("fc_ghz"));
  m.def("uav_profile", &uav_profile, py::arg("fc_ghz"));
  m.def("los_probability", &los_probability, py::arg("env"), py::arg("h_b"),
        py::arg("h_k"), py::arg("r"));
  m.def("path_loss_db", &path_loss_db, py::arg("profile"), py::arg("condition"),
        py::arg("d"), py::arg("h_b"));
  m.def("noise_power_watts", &noise_power_watts, py::arg("bandwidth_hz"),
        py::arg("psd_dbm_per_hz"));
  m.def(
      "sinr_linear",
      [](const std::vector<double>& rx_powers_w, std::size_t serving,
         double noise_w) { return sinr_linear(rx_powers_w, serving, noise_w); },
      py::arg("rx_powers_w"), py::arg("serving"), py::arg("noise_w"));
  m.def("achievable_rate_bps", &achievable_rate_bps, py::arg("sinr"),
        py::arg("bandwidth_hz"));

  py::enum_<Algorithm>(m, "Algorithm")
      .value("learning", Algorithm::learning)
      .value("strategic", Algorithm::strategic)
      .value("random_fixed", Algorithm::random_fixed)
      .value("random", Algorithm::random_full);

  py::enum_<ChannelMode>(m, "ChannelMode")
      .value("expected", ChannelMode::expected)
      .value("bernoulli", ChannelMode::bernoulli);

  py::class_<SimConfig>(m, "SimConfig")
      .def(py::init<>())
      .def_readwrite("region_radius_m", &SimConfig::region_radius_m)
      .def_readwrite("n_users", &SimConfig::n_users)
      .def_readwrite("n_uavs", &SimConfig::n_uavs)
      .def_readwrite("algorithm", &SimConfig::algorithm)
      .def_readwrite("timesteps", &SimConfig::timesteps)
      .def_readwrite("load_eta_exponent", &SimConfig::load_eta_exponent)
      .def_readwrite("carrier_freq_ghz", &SimConfig::carrier_freq_ghz)
      .def_readwrite("bandwidth_hz", &SimConfig::bandwidth_hz)
      .def_readwrite("noise_psd_dbm_hz", &SimConfig::noise_psd_dbm_hz)
      .def_readwrite("demand_bps", &SimConfig::demand_bps)
      .def_readwrite("tx_power_terrestrial_dbm",
                     &SimConfig::tx_power_terrestrial_dbm)
      .def_readwrite("tx_power_uav_dbm", &SimConfig::tx_power_uav_dbm)
      .def_readwrite("terrestrial_altitude_m", &SimConfig::terrestrial_altitude_m)
      .def_readwrite("user_altitude_m", &SimConfig::user_altitude_m)
      .def_readwrite("channel_mode", &SimConfig::channel_mode)
      .def_readwrite("environment", &SimConfig::environment)
      .def_readwrite("step_xy_m", &SimConfig::step_xy_m)
      .def_readwrite("step_h_m", &SimConfig::step_h_m)
      .def_readwrite("initial_positions", &SimConfig::initial_positions)
      .def_readwrite("phi", &SimConfig::phi)
      .def_readwrite("varphi", &SimConfig::varphi)
      .def_readwrite("norm_bps", &SimConfig::norm_bps)
      .def_readwrite("f_max", &SimConfig::f_max)
      .def_readwrite("d_min_m", &SimConfig::d_min_m)
      .def_readwrite("learning_rate", &SimConfig::learning_rate)
      .def_readwrite("threshold_init", &SimConfig::threshold_init)
      .def_readwrite("threshold_window", &SimConfig::threshold_window)
      .def_readwrite("threshold_decay", &SimConfig::threshold_decay)
      .def_readwrite("threshold_floor", &SimConfig::threshold_floor)
      .def_readwrite("candidate_points", &SimConfig::candidate_points)
      .def_readwrite("altitude_levels", &SimConfig::altitude_levels)
      .def_readwrite("fixed_altitude_m", &SimConfig::fixed_altitude_m)
      .def_readwrite("seeds", &SimConfig::seeds)
      .def_property(
          "h_min_m", [](const SimConfig& c) { return c.altitude.h_min; },
          [](SimConfig& c, double v) { c.altitude.h_min = v; })
      .def_property(
          "h_max_m", [](const SimConfig& c) { return c.altitude.h_max; },
          [](SimConfig& c, double v) { c.altitude.h_max = v; })
      .def("validate", &SimConfig::validate)
      .def("resolved_norm_bps", &SimConfig::resolved_norm_bps)
      .def("resolved_f_max", &SimConfig::resolved_f_max)
      .def("resolved_threshold_init", &SimConfig::resolved_threshold_init)
      .def("resolved_threshold_floor", &SimConfig::resolved_threshold_floor);

  m.def("load_config", &load_config, py::arg("path"));
  m.def("config_to_ini", &config_to_ini, py::arg("config"), py::arg("resolved"));
  m.def("manifest_ini", &manifest_ini, py::arg("config"));

  py::class_<MetricsRow>(m, "MetricsRow")
      .def_readonly("t", &MetricsRow::t)
      .def_readonly("bs_throughput_bps", &MetricsRow::bs_throughput_bps)
      .def_readonly("bs_rate_sum_bps", &MetricsRow::bs_rate_sum_bps)
      .def_readonly("user_rate_bps", &MetricsRow::user_rate_bps)
      .def_readonly("dropped_per_bs", &MetricsRow::dropped_per_bs)
      .def_readonly("satisfied_uavs", &MetricsRow::satisfied_uavs)
      .def_readonly("mean_utility", &MetricsRow::mean_utility)
      .def_readonly("equilibrium", &MetricsRow::equilibrium);

  py::class_<RunAggregates>(m, "RunAggregates")
      .def_readonly("throughput_per_bs_tail", &RunAggregates::throughput_per_bs_tail)
      .def_readonly("throughput_per_bs_full", &RunAggregates::throughput_per_bs_full)
      .def_readonly("rate_sum_per_bs_tail", &RunAggregates::rate_sum_per_bs_tail)
      .def_readonly("rate_sum_per_bs_full", &RunAggregates::rate_sum_per_bs_full)
      .def_readonly("user_rate_tail", &RunAggregates::user_rate_tail)
      .def_readonly("user_rate_full", &RunAggregates::user_rate_full)
      .def_readonly("dropped_per_bs_tail", &RunAggregates::dropped_per_bs_tail)
      .def_readonly("dropped_per_bs_full", &RunAggregates::dropped_per_bs_full)
      .def_readonly("dropped_total_tail", &RunAggregates::dropped_total_tail)
      .def_readonly("dropped_total_full", &RunAggregates::dropped_total_full)
      .def_readonly("satisfied_uavs_tail", &RunAggregates::satisfied_uavs_tail)
      .def_readonly("mean_utility_tail", &RunAggregates::mean_utility_tail);

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("seed", &RunResult::seed)
      .def_readonly("series", &RunResult::series)
      .def_readonly("final_positions", &RunResult::final_positions)
      .def_readonly("equilibrium_timestep", &RunResult::equilibrium_timestep)
      .def_readonly("aggregates", &RunResult::aggregates);

  py::class_<Stat>(m, "Stat")
      .def_readonly("mean", &Stat::mean)
      .def_readonly("stddev", &Stat::stddev);

  py::class_<SeedSummary>(m, "SeedSummary")
      .def_readonly("seed", &SeedSummary::seed)
      .def_readonly("aggregates", &SeedSummary::aggregates)
      .def_readonly("equilibrium_timestep", &SeedSummary::equilibrium_timestep)
      .def_readonly("final_positions", &SeedSummary::final_positions);

  py::class_<ReplicationSummary>(m, "ReplicationSummary")
      .def_readonly("per_seed", &ReplicationSummary::per_seed)
      .def_readonly("throughput_per_bs", &ReplicationSummary::throughput_per_bs)
      .def_readonly("rate_sum_per_bs", &ReplicationSummary::rate_sum_per_bs)
      .def_readonly("user_rate", &ReplicationSummary::user_rate)
      .def_readonly("dropped_per_bs", &ReplicationSummary::dropped_per_bs)
      .def_readonly("dropped_total", &ReplicationSummary::dropped_total)
      .def_readonly("mean_utility", &ReplicationSummary::mean_utility)
      .def_readonly("equilibrium_fraction",
                    &ReplicationSummary::equilibrium_fraction);

  m.def("run_episode", &run_episode, py::arg("config"), py::arg("seed"),
        py::call_guard<py::gil_scoped_release>());
  m.def("run_replications", &run_replications, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("timeseries_csv", &timeseries_csv, py::arg("result"));
  m.def("summary_json", &summary_json, py::arg("summary"));
}
