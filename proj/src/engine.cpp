#include "skyplace/engine.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "skyplace/baselines.hpp"

namespace skyplace {

namespace {

std::size_t tail_start(std::size_t n) { return n - std::max<std::size_t>(1, n / 4); }

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

RunAggregates compute_aggregates(const std::vector<MetricsRow>& series,
                                 std::size_t n_stations, std::size_t n_users) {
  struct Acc {
    double throughput = 0.0, rate_sum = 0.0, user_rate = 0.0;
    double dropped = 0.0, satisfied = 0.0, utility = 0.0;
    std::size_t n = 0;

    void add(const MetricsRow& row, std::size_t n_stations, std::size_t n_users) {
      throughput += std::accumulate(row.bs_throughput_bps.begin(),
                                    row.bs_throughput_bps.end(), 0.0);
      rate_sum += std::accumulate(row.bs_rate_sum_bps.begin(),
                                  row.bs_rate_sum_bps.end(), 0.0);
      if (n_users > 0)
        user_rate += std::accumulate(row.user_rate_bps.begin(),
                                     row.user_rate_bps.end(), 0.0) /
                     static_cast<double>(n_users);
      dropped += std::accumulate(row.dropped_per_bs.begin(),
                                 row.dropped_per_bs.end(), 0);
      satisfied += row.satisfied_uavs;
      utility += row.mean_utility;
      ++n;
    }
  };

  Acc tail, full;
  const std::size_t t0 = tail_start(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) {
    full.add(series[i], n_stations, n_users);
    if (i >= t0) tail.add(series[i], n_stations, n_users);
  }

  RunAggregates a;
  const double nb = static_cast<double>(n_stations);
  const auto per_step = [](double sum, std::size_t n) {
    return n > 0 ? sum / static_cast<double>(n) : 0.0;
  };
  a.throughput_per_bs_tail = per_step(tail.throughput, tail.n) / nb;
  a.throughput_per_bs_full = per_step(full.throughput, full.n) / nb;
  a.rate_sum_per_bs_tail = per_step(tail.rate_sum, tail.n) / nb;
  a.rate_sum_per_bs_full = per_step(full.rate_sum, full.n) / nb;
  a.user_rate_tail = per_step(tail.user_rate, tail.n);
  a.user_rate_full = per_step(full.user_rate, full.n);
  a.dropped_per_bs_tail = per_step(tail.dropped, tail.n) / nb;
  a.dropped_per_bs_full = per_step(full.dropped, full.n) / nb;
  a.dropped_total_tail = per_step(tail.dropped, tail.n);
  a.dropped_total_full = per_step(full.dropped, full.n);
  a.satisfied_uavs_tail = per_step(tail.satisfied, tail.n);
  a.mean_utility_tail = per_step(tail.utility, tail.n);
  return a;
}

}  // namespace

Stat stat_of(const std::vector<double>& values) {
  Stat s;
  if (values.empty()) return s;
  s.mean = mean_of(values);
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return s;
}

Episode::Episode(const SimConfig& cfg, std::uint64_t seed)
    : cfg_(cfg),
      seed_(seed),
      weights_(cfg.resolved_weights()),
      region_(cfg.region()),
      channel_rng_(derived_stream(seed, "channel")) {
  cfg_.validate();
  noise_w_ = noise_power_watts(cfg_.bandwidth_hz, cfg_.noise_psd_dbm_hz);

  Rng user_rng = derived_stream(seed, "users");
  const auto positions = sample_uniform_users(
      region_, static_cast<std::size_t>(cfg_.n_users), cfg_.user_altitude_m,
      user_rng);
  users_.resize(positions.size());
  for (std::size_t k = 0; k < users_.size(); ++k) {
    users_[k].id = static_cast<int>(k);
    users_[k].position = positions[k];
    users_[k].demand_bps = cfg_.demand_bps;
  }

  stations_.reserve(1 + static_cast<std::size_t>(cfg_.n_uavs));
  BaseStation terr;
  terr.id = 0;
  terr.kind = BsKind::terrestrial;
  terr.position = {region_.cx, region_.cy, cfg_.terrestrial_altitude_m};
  terr.tx_power_w = dbm_to_watts(cfg_.tx_power_terrestrial_dbm);
  terr.profile = terrestrial_profile(cfg_.carrier_freq_ghz);
  stations_.push_back(terr);
  const RadioProfile uav_prof = uav_profile(cfg_.carrier_freq_ghz);
  for (int u = 0; u < cfg_.n_uavs; ++u) {
    BaseStation bs;
    bs.id = 1 + u;
    bs.kind = BsKind::uav;
    bs.tx_power_w = dbm_to_watts(cfg_.tx_power_uav_dbm);
    bs.profile = uav_prof;
    stations_.push_back(bs);
  }
  place_uavs(derived_stream(
      seed, cfg_.algorithm == Algorithm::learning ? "uav_init" : "baseline"));

  if (cfg_.algorithm == Algorithm::learning) {
    agents_.reserve(static_cast<std::size_t>(cfg_.n_uavs));
    for (int u = 0; u < cfg_.n_uavs; ++u) {
      UavAgent a;
      a.bs_id = 1 + u;
      a.threshold = cfg_.resolved_threshold_init();
      a.learning_rate = cfg_.learning_rate;
      agents_.push_back(a);
      agent_rngs_.push_back(
          derived_stream(seed, "agent", static_cast<std::uint64_t>(u)));
    }
  }

  budgets_.resize(users_.size() * stations_.size());
  budget_current_.assign(stations_.size(), 0);
  rx_w_.resize(users_.size() * stations_.size());
  rates_bps_.resize(users_.size());
  served_demand_bps_.assign(stations_.size(), 0.0);
  series_.reserve(static_cast<std::size_t>(cfg_.timesteps));
}

void Episode::place_uavs(Rng init_rng) {
  switch (cfg_.algorithm) {
    case Algorithm::learning:
      if (!cfg_.initial_positions.empty()) {
        for (int u = 0; u < cfg_.n_uavs; ++u)
          stations_[1 + u].position = cfg_.initial_positions[u];
      } else {
        for (int u = 0; u < cfg_.n_uavs; ++u) {
          const double h =
              init_rng.uniform(cfg_.altitude.h_min, cfg_.altitude.h_max);
          stations_[1 + u].position = place_random_fixed(region_, h, init_rng);
        }
      }
      break;
    case Algorithm::strategic: {
      const CandidateSet candidates = make_candidate_set(
          region_, cfg_.altitude, static_cast<std::size_t>(cfg_.candidate_points),
          static_cast<std::size_t>(cfg_.altitude_levels), cfg_.fixed_altitude_m);
      std::vector<Position3D> placed = {stations_[0].position};
      for (int u = 0; u < cfg_.n_uavs; ++u) {
        const Position3D p = place_strategic(candidates, placed);
        stations_[1 + u].position = p;
        placed.push_back(p);
      }
      break;
    }
    case Algorithm::random_fixed:
      for (int u = 0; u < cfg_.n_uavs; ++u)
        stations_[1 + u].position =
            place_random_fixed(region_, cfg_.fixed_altitude_m, init_rng);
      break;
    case Algorithm::random_full: {
      const CandidateSet candidates = make_candidate_set(
          region_, cfg_.altitude, static_cast<std::size_t>(cfg_.candidate_points),
          static_cast<std::size_t>(cfg_.altitude_levels), cfg_.fixed_altitude_m);
      for (int u = 0; u < cfg_.n_uavs; ++u)
        stations_[1 + u].position = place_random(candidates, init_rng);
      break;
    }
  }
}

void Episode::step() {
  ++t_;
  if (cfg_.algorithm == Algorithm::learning) move_uavs();
  const double eta = eta_learning_rate(t_, cfg_.load_eta_exponent);
  for (BaseStation& bs : stations_)
    bs.load_estimate = updated_load_estimate(bs.load, bs.load_estimate, eta);
  refresh_link_budgets();
  fill_rx_powers();
  associate_and_serve();
  if (cfg_.algorithm == Algorithm::learning) update_game();
  record_metrics();
}

void Episode::run_to_end() {
  while (!done()) step();
}

void Episode::move_uavs() {
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    UavAgent& agent = agents_[i];
    if (agent.satisfied) continue;  // holds position, draws nothing
    BaseStation& bs = stations_[static_cast<std::size_t>(agent.bs_id)];
    const Strategy s = select_strategy(agent, agent_rngs_[i]);
    const Position3D moved = apply_strategy(bs.position, s, cfg_.step_xy_m,
                                            cfg_.step_h_m, region_, cfg_.altitude);
    agent.last_strategy = s;
    if (!(moved == bs.position)) {
      bs.position = moved;
      budget_current_[static_cast<std::size_t>(agent.bs_id)] = 0;
    }
  }
}

void Episode::refresh_link_budgets() {
  const std::size_t nb = stations_.size();
  for (std::size_t b = 0; b < nb; ++b) {
    if (budget_current_[b]) continue;
    for (std::size_t k = 0; k < users_.size(); ++k) {
      budgets_[k * nb + b] = link_budget(cfg_.environment, stations_[b].profile,
                                         stations_[b].position,
                                         users_[k].position);
    }
    budget_current_[b] = 1;
  }
}

void Episode::fill_rx_powers() {
  const std::size_t nb = stations_.size();
  for (std::size_t k = 0; k < users_.size(); ++k) {
    for (std::size_t b = 0; b < nb; ++b) {
      const LinkBudget& budget = budgets_[k * nb + b];
      double gain = budget.expected_gain;
      if (cfg_.channel_mode == ChannelMode::bernoulli) {
        const LinkCondition c = channel_rng_.bernoulli(budget.pr_los)
                                    ? LinkCondition::los
                                    : LinkCondition::nlos;
        gain = condition_gain(budget, c);
      }
      rx_w_[k * nb + b] = stations_[b].tx_power_w * gain;
    }
  }
}

void Episode::associate_and_serve() {
  const std::size_t nb = stations_.size();
  std::vector<double> estimates(nb);
  for (std::size_t b = 0; b < nb; ++b) estimates[b] = stations_[b].load_estimate;
  const std::vector<int> serving =
      associate_users(rx_w_, users_.size(), estimates);

  for (std::size_t k = 0; k < users_.size(); ++k) {
    users_[k].serving_bs = serving[k];
    users_[k].dropped = false;
    const std::span<const double> row(&rx_w_[k * nb], nb);
    const double sinr =
        sinr_linear(row, static_cast<std::size_t>(serving[k]), noise_w_);
    rates_bps_[k] = achievable_rate_bps(sinr, cfg_.bandwidth_hz);
  }

  std::vector<std::size_t> members;
  std::vector<double> fractions;
  std::vector<int> ids;
  for (std::size_t b = 0; b < nb; ++b) {
    members.clear();
    fractions.clear();
    ids.clear();
    for (std::size_t k = 0; k < users_.size(); ++k) {
      if (static_cast<std::size_t>(serving[k]) != b) continue;
      members.push_back(k);
      fractions.push_back(users_[k].demand_bps / rates_bps_[k]);
      ids.push_back(users_[k].id);
    }
    for (std::size_t idx : enforce_capacity(fractions, ids))
      users_[members[idx]].dropped = true;
    double load = 0.0;
    double served = 0.0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (users_[members[i]].dropped) continue;
      load += fractions[i];
      served += users_[members[i]].demand_bps;
    }
    stations_[b].load = load;
    served_demand_bps_[b] = served;
  }
}

void Episode::update_game() {
  std::vector<Position3D> uav_positions;
  uav_positions.reserve(agents_.size());
  for (const UavAgent& a : agents_)
    uav_positions.push_back(stations_[static_cast<std::size_t>(a.bs_id)].position);

  std::vector<Position3D> others;
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    UavAgent& agent = agents_[i];
    others.clear();
    for (std::size_t j = 0; j < uav_positions.size(); ++j)
      if (j != i) others.push_back(uav_positions[j]);
    const int act = activation(uav_positions[i], others, weights_.d_min);
    const double f = utility(
        served_demand_bps_[static_cast<std::size_t>(agent.bs_id)], act, weights_);
    agent.last_utility = f;
    agent.last_activation = act;
    const bool sat = satisfaction_indicator(f, agent.threshold);
    const double q = q_factor(f, agent.threshold, weights_.f_max);
    update_policy(agent.policy, agent.last_strategy, sat, q, agent.learning_rate);
    agent.satisfied = sat;
    if (sat) {
      agent.unsatisfied_streak = 0;
    } else {
      ++agent.unsatisfied_streak;
      adapt_threshold(agent, cfg_.threshold_window, cfg_.threshold_decay,
                      cfg_.resolved_threshold_floor());
    }
  }
}

void Episode::record_metrics() {
  const std::size_t nb = stations_.size();
  MetricsRow row;
  row.t = t_;
  row.bs_throughput_bps = served_demand_bps_;
  row.bs_rate_sum_bps.assign(nb, 0.0);
  row.dropped_per_bs.assign(nb, 0);
  row.user_rate_bps.resize(users_.size());
  for (std::size_t k = 0; k < users_.size(); ++k) {
    const auto b = static_cast<std::size_t>(*users_[k].serving_bs);
    if (users_[k].dropped) {
      ++row.dropped_per_bs[b];
      row.user_rate_bps[k] = 0.0;
    } else {
      row.bs_rate_sum_bps[b] += rates_bps_[k];
      row.user_rate_bps[k] = rates_bps_[k];
    }
  }
  for (const UavAgent& a : agents_) {
    if (a.satisfied) ++row.satisfied_uavs;
    row.mean_utility += a.last_utility;
  }
  if (!agents_.empty())
    row.mean_utility /= static_cast<double>(agents_.size());
  row.equilibrium = cfg_.algorithm == Algorithm::learning &&
                    is_satisfaction_equilibrium(agents_);
  if (row.equilibrium && !equilibrium_t_) equilibrium_t_ = t_;
  series_.push_back(std::move(row));
}

std::vector<Position3D> Episode::uav_positions() const {
  std::vector<Position3D> out;
  out.reserve(stations_.size() - 1);
  for (std::size_t b = 1; b < stations_.size(); ++b)
    out.push_back(stations_[b].position);
  return out;
}

RunResult Episode::result() const {
  RunResult r;
  r.config = cfg_;
  r.seed = seed_;
  r.series = series_;
  r.final_positions = uav_positions();
  r.equilibrium_timestep = equilibrium_t_;
  r.aggregates = compute_aggregates(series_, stations_.size(), users_.size());
  return r;
}

RunResult run_episode(const SimConfig& cfg, std::uint64_t seed) {
  Episode episode(cfg, seed);
  episode.run_to_end();
  return episode.result();
}

ReplicationSummary run_replications(const SimConfig& cfg) {
  cfg.validate();
  ReplicationSummary summary;
  summary.config = cfg;
  std::vector<double> throughput, rate_sum, user_rate, dropped_bs, dropped_tot,
      utility;
  int at_equilibrium = 0;
  for (std::uint64_t seed : cfg.seeds) {
    const RunResult r = run_episode(cfg, seed);
    SeedSummary s;
    s.seed = seed;
    s.aggregates = r.aggregates;
    s.equilibrium_timestep = r.equilibrium_timestep;
    s.final_positions = r.final_positions;
    summary.per_seed.push_back(std::move(s));
    throughput.push_back(r.aggregates.throughput_per_bs_tail);
    rate_sum.push_back(r.aggregates.rate_sum_per_bs_tail);
    user_rate.push_back(r.aggregates.user_rate_tail);
    dropped_bs.push_back(r.aggregates.dropped_per_bs_tail);
    dropped_tot.push_back(r.aggregates.dropped_total_tail);
    utility.push_back(r.aggregates.mean_utility_tail);
    if (r.equilibrium_timestep) ++at_equilibrium;
  }
  summary.throughput_per_bs = stat_of(throughput);
  summary.rate_sum_per_bs = stat_of(rate_sum);
  summary.user_rate = stat_of(user_rate);
  summary.dropped_per_bs = stat_of(dropped_bs);
  summary.dropped_total = stat_of(dropped_tot);
  summary.mean_utility = stat_of(utility);
  summary.equilibrium_fraction =
      cfg.seeds.empty() ? 0.0
                        : static_cast<double>(at_equilibrium) /
                              static_cast<double>(cfg.seeds.size());
  return summary;
}

std::vector<SweepRow> run_sweep(const SimConfig& base, const std::string& axis,
                                const std::vector<int>& values,
                                const std::vector<Algorithm>& algos) {
  if (axis != "users" && axis != "uavs")
    throw std::invalid_argument("sweep axis must be 'users' or 'uavs'");
  if (values.empty()) throw std::invalid_argument("sweep values must not be empty");
  if (algos.empty()) throw std::invalid_argument("sweep algorithms must not be empty");
  std::vector<SweepRow> rows;
  for (int value : values) {
    SimConfig cfg = base;
    if (axis == "users")
      cfg.n_users = value;
    else
      cfg.n_uavs = value;
    for (Algorithm algo : algos) {
      cfg.algorithm = algo;
      const ReplicationSummary s = run_replications(cfg);
      SweepRow row;
      row.axis = axis;
      row.value = value;
      row.algorithm = algo;
      row.n_seeds = static_cast<int>(cfg.seeds.size());
      row.throughput_per_bs = s.throughput_per_bs;
      row.rate_sum_per_bs = s.rate_sum_per_bs;
      row.user_rate = s.user_rate;
      row.dropped_per_bs = s.dropped_per_bs;
      row.dropped_total = s.dropped_total;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string timeseries_csv(const RunResult& result) {
  const std::size_t nb = result.series.empty()
                             ? 1 + static_cast<std::size_t>(result.config.n_uavs)
                             : result.series.front().bs_throughput_bps.size();
  std::ostringstream out;
  out << "t,throughput_total_bps,rate_sum_total_bps,mean_user_rate_bps,"
         "dropped_total,satisfied_uavs,mean_utility,equilibrium";
  for (std::size_t b = 0; b < nb; ++b) out << ",throughput_bs" << b << "_bps";
  for (std::size_t b = 0; b < nb; ++b) out << ",rate_sum_bs" << b << "_bps";
  for (std::size_t b = 0; b < nb; ++b) out << ",dropped_bs" << b;
  out << "\n";
  for (const MetricsRow& row : result.series) {
    const double throughput = std::accumulate(row.bs_throughput_bps.begin(),
                                              row.bs_throughput_bps.end(), 0.0);
    const double rate_sum = std::accumulate(row.bs_rate_sum_bps.begin(),
                                            row.bs_rate_sum_bps.end(), 0.0);
    const int dropped = std::accumulate(row.dropped_per_bs.begin(),
                                        row.dropped_per_bs.end(), 0);
    const double user_rate =
        row.user_rate_bps.empty()
            ? 0.0
            : std::accumulate(row.user_rate_bps.begin(), row.user_rate_bps.end(),
                              0.0) /
                  static_cast<double>(row.user_rate_bps.size());
    out << row.t << "," << format_double(throughput) << ","
        << format_double(rate_sum) << "," << format_double(user_rate) << ","
        << dropped << "," << row.satisfied_uavs << ","
        << format_double(row.mean_utility) << "," << (row.equilibrium ? 1 : 0);
    for (double v : row.bs_throughput_bps) out << "," << format_double(v);
    for (double v : row.bs_rate_sum_bps) out << "," << format_double(v);
    for (int v : row.dropped_per_bs) out << "," << v;
    out << "\n";
  }
  return out.str();
}

namespace {

nlohmann::json aggregates_json(const RunAggregates& a) {
  return {
      {"throughput_per_bs_bps_tail", a.throughput_per_bs_tail},
      {"throughput_per_bs_bps_full", a.throughput_per_bs_full},
      {"rate_sum_per_bs_bps_tail", a.rate_sum_per_bs_tail},
      {"rate_sum_per_bs_bps_full", a.rate_sum_per_bs_full},
      {"mean_user_rate_bps_tail", a.user_rate_tail},
      {"mean_user_rate_bps_full", a.user_rate_full},
      {"dropped_per_bs_tail", a.dropped_per_bs_tail},
      {"dropped_per_bs_full", a.dropped_per_bs_full},
      {"dropped_total_tail", a.dropped_total_tail},
      {"dropped_total_full", a.dropped_total_full},
      {"satisfied_uavs_tail", a.satisfied_uavs_tail},
      {"mean_utility_tail", a.mean_utility_tail},
  };
}

nlohmann::json stat_json(const Stat& s) {
  return {{"mean", s.mean}, {"stddev", s.stddev}};
}

}  // namespace

std::string summary_json(const ReplicationSummary& summary) {
  nlohmann::json j;
  j["algorithm"] = algorithm_name(summary.config.algorithm);
  j["n_users"] = summary.config.n_users;
  j["n_uavs"] = summary.config.n_uavs;
  j["timesteps"] = summary.config.timesteps;
  j["seeds"] = summary.config.seeds;
  j["metrics"] = {
      {"throughput_per_bs_bps", stat_json(summary.throughput_per_bs)},
      {"rate_sum_per_bs_bps", stat_json(summary.rate_sum_per_bs)},
      {"mean_user_rate_bps", stat_json(summary.user_rate)},
      {"dropped_per_bs", stat_json(summary.dropped_per_bs)},
      {"dropped_total", stat_json(summary.dropped_total)},
      {"mean_utility", stat_json(summary.mean_utility)},
      {"equilibrium_fraction", summary.equilibrium_fraction},
  };
  j["per_seed"] = nlohmann::json::array();
  for (const SeedSummary& s : summary.per_seed) {
    nlohmann::json e;
    e["seed"] = s.seed;
    if (s.equilibrium_timestep)
      e["equilibrium_timestep"] = *s.equilibrium_timestep;
    else
      e["equilibrium_timestep"] = nullptr;
    e["aggregates"] = aggregates_json(s.aggregates);
    e["final_positions"] = nlohmann::json::array();
    for (const Position3D& p : s.final_positions)
      e["final_positions"].push_back({p.x, p.y, p.h});
    j["per_seed"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "axis,value,algorithm,n_seeds,metric,mean,stddev\n";
  const auto emit = [&](const SweepRow& row, const char* metric, const Stat& s) {
    out << row.axis << "," << format_double(row.value) << ","
        << algorithm_name(row.algorithm) << "," << row.n_seeds << "," << metric
        << "," << format_double(s.mean) << "," << format_double(s.stddev)
        << "\n";
  };
  for (const SweepRow& row : rows) {
    emit(row, "throughput_per_bs_bps", row.throughput_per_bs);
    emit(row, "rate_sum_per_bs_bps", row.rate_sum_per_bs);
    emit(row, "mean_user_rate_bps", row.user_rate);
    emit(row, "dropped_per_bs", row.dropped_per_bs);
    emit(row, "dropped_total", row.dropped_total);
  }
  return out.str();
}

std::string manifest_ini(const SimConfig& cfg) {
  return "# resolved run manifest; rerun with --config <this file>\n" +
         config_to_ini(cfg, true);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace skyplace
