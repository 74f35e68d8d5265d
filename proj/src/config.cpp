#include "skyplace/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace skyplace {

namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

double parse_double(const std::string& text, const std::string& key) {
  const std::string t = trim(text);
  char* end = nullptr;
  double v = std::strtod(t.c_str(), &end);
  if (end == t.c_str() || *end != '\0' || !std::isfinite(v))
    throw std::invalid_argument(key + ": expected a number, got '" + text + "'");
  return v;
}

long long parse_int(const std::string& text, const std::string& key) {
  const std::string t = trim(text);
  char* end = nullptr;
  long long v = std::strtoll(t.c_str(), &end, 10);
  if (end == t.c_str() || *end != '\0')
    throw std::invalid_argument(key + ": expected an integer, got '" + text +
                                "'");
  return v;
}

std::optional<double> parse_auto_double(const std::string& text,
                                        const std::string& key) {
  if (lower(trim(text)) == "auto") return std::nullopt;
  return parse_double(text, key);
}

std::vector<Position3D> parse_positions(const std::string& text,
                                        const std::string& key) {
  std::vector<Position3D> out;
  for (const std::string& part : split(text, ';')) {
    std::string token = trim(part);
    if (token.empty()) continue;
    if (token.front() == '(' && token.back() == ')')
      token = token.substr(1, token.size() - 2);
    const auto coords = split(token, ',');
    if (coords.size() != 3)
      throw std::invalid_argument(key + ": expected (x, y, h) triples, got '" +
                                  part + "'");
    out.push_back({parse_double(coords[0], key), parse_double(coords[1], key),
                   parse_double(coords[2], key)});
  }
  return out;
}

std::string format_positions(const std::vector<Position3D>& positions) {
  std::string out;
  for (const Position3D& p : positions) {
    if (!out.empty()) out += "; ";
    out += "(" + format_double(p.x) + ", " + format_double(p.y) + ", " +
           format_double(p.h) + ")";
  }
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::learning: return "learning";
    case Algorithm::strategic: return "strategic";
    case Algorithm::random_fixed: return "random_fixed";
    case Algorithm::random_full: return "random";
  }
  throw std::logic_error("unreachable algorithm value");
}

Algorithm parse_algorithm(const std::string& s) {
  const std::string v = lower(trim(s));
  if (v == "learning") return Algorithm::learning;
  if (v == "strategic") return Algorithm::strategic;
  if (v == "random_fixed") return Algorithm::random_fixed;
  if (v == "random") return Algorithm::random_full;
  throw std::invalid_argument(
      "algorithm: expected learning|strategic|random_fixed|random, got '" + s +
      "'");
}

const char* channel_mode_name(ChannelMode m) {
  return m == ChannelMode::expected ? "expected" : "bernoulli";
}

ChannelMode parse_channel_mode(const std::string& s) {
  const std::string v = lower(trim(s));
  if (v == "expected") return ChannelMode::expected;
  if (v == "bernoulli") return ChannelMode::bernoulli;
  throw std::invalid_argument("channel_mode: expected expected|bernoulli, got '" +
                              s + "'");
}

std::vector<std::uint64_t> SimConfig::default_seeds() {
  std::vector<std::uint64_t> seeds(20);
  for (std::size_t i = 0; i < seeds.size(); ++i) seeds[i] = i + 1;
  return seeds;
}

double SimConfig::resolved_norm_bps() const {
  if (norm_bps) return *norm_bps;
  return std::max(1, n_users) * demand_bps;
}

double SimConfig::resolved_f_max() const { return f_max ? *f_max : phi; }

double SimConfig::resolved_threshold_init() const {
  return threshold_init ? *threshold_init : 0.5 * resolved_f_max();
}

double SimConfig::resolved_threshold_floor() const {
  return threshold_floor ? *threshold_floor : 0.05 * resolved_f_max();
}

GameWeights SimConfig::resolved_weights() const {
  GameWeights w;
  w.phi = phi;
  w.varphi = varphi;
  w.norm_bps = resolved_norm_bps();
  w.f_max = resolved_f_max();
  w.d_min = d_min_m;
  return w;
}

void SimConfig::validate() const {
  require(region_radius_m > 0.0, "region_radius_m must be positive");
  require(n_users >= 0, "n_users must be non-negative");
  require(n_uavs >= 0, "n_uavs must be non-negative");
  require(timesteps >= 1, "timesteps must be at least 1");
  require(load_eta_exponent > 0.0, "load_eta_exponent must be positive");
  require(carrier_freq_ghz > 0.0, "carrier_freq_ghz must be positive");
  require(bandwidth_hz > 0.0, "bandwidth_hz must be positive");
  require(demand_bps > 0.0, "demand_bps must be positive");
  require(user_altitude_m >= 0.0, "user_altitude_m must be non-negative");
  require(terrestrial_altitude_m > user_altitude_m,
          "terrestrial_altitude_m must exceed user_altitude_m");
  require(environment.alpha > 0.0 && environment.alpha <= 1.0,
          "environment alpha must be in (0, 1]");
  require(environment.beta > 0.0, "environment beta must be positive");
  require(environment.gamma > 0.0, "environment gamma must be positive");
  require(altitude.h_min > user_altitude_m,
          "h_min_m must exceed user_altitude_m");
  require(altitude.h_max >= altitude.h_min, "h_max_m must be at least h_min_m");
  require(step_xy_m > 0.0, "step_xy_m must be positive");
  require(step_h_m > 0.0, "step_h_m must be positive");
  for (const Position3D& p : initial_positions) {
    require(region().contains(p.x, p.y) && altitude.contains(p.h),
            "initial_positions must lie inside the region and altitude range");
  }
  require(initial_positions.empty() ||
              static_cast<int>(initial_positions.size()) >= n_uavs,
          "initial_positions must cover every UAV when given");
  require(phi > 0.0, "phi must be positive");
  require(varphi >= 0.0, "varphi must be non-negative");
  require(resolved_norm_bps() > 0.0, "norm_bps must be positive");
  require(resolved_f_max() > 0.0, "f_max must be positive");
  require(d_min_m >= 0.0, "d_min_m must be non-negative");
  require(learning_rate > 0.0 && learning_rate <= 1.0,
          "learning_rate must be in (0, 1]");
  require(threshold_window >= 1, "threshold_window must be at least 1");
  require(threshold_decay > 0.0 && threshold_decay < 1.0,
          "threshold_decay must be in (0, 1)");
  require(candidate_points >= 1, "candidate_points must be at least 1");
  require(altitude_levels >= 1, "altitude_levels must be at least 1");
  require(altitude.contains(fixed_altitude_m),
          "fixed_altitude_m must lie within the altitude range");
  require(!seeds.empty(), "seeds must not be empty");
}

void apply_config_text(SimConfig& cfg, std::istream& in,
                       const std::string& origin) {
  using Setter = std::function<void(SimConfig&, const std::string&)>;
  static const std::map<std::string, Setter> setters = {
      {"scenario.region_radius_m",
       [](SimConfig& c, const std::string& v) {
         c.region_radius_m = parse_double(v, "region_radius_m");
       }},
      {"scenario.n_users",
       [](SimConfig& c, const std::string& v) {
         c.n_users = static_cast<int>(parse_int(v, "n_users"));
       }},
      {"scenario.n_uavs",
       [](SimConfig& c, const std::string& v) {
         c.n_uavs = static_cast<int>(parse_int(v, "n_uavs"));
       }},
      {"scenario.algorithm",
       [](SimConfig& c, const std::string& v) {
         c.algorithm = parse_algorithm(v);
       }},
      {"scenario.timesteps",
       [](SimConfig& c, const std::string& v) {
         c.timesteps = static_cast<int>(parse_int(v, "timesteps"));
       }},
      {"scenario.load_eta_exponent",
       [](SimConfig& c, const std::string& v) {
         c.load_eta_exponent = parse_double(v, "load_eta_exponent");
       }},
      {"radio.carrier_freq_ghz",
       [](SimConfig& c, const std::string& v) {
         c.carrier_freq_ghz = parse_double(v, "carrier_freq_ghz");
       }},
      {"radio.bandwidth_hz",
       [](SimConfig& c, const std::string& v) {
         c.bandwidth_hz = parse_double(v, "bandwidth_hz");
       }},
      {"radio.noise_psd_dbm_hz",
       [](SimConfig& c, const std::string& v) {
         c.noise_psd_dbm_hz = parse_double(v, "noise_psd_dbm_hz");
       }},
      {"radio.demand_bps",
       [](SimConfig& c, const std::string& v) {
         c.demand_bps = parse_double(v, "demand_bps");
       }},
      {"radio.tx_power_terrestrial_dbm",
       [](SimConfig& c, const std::string& v) {
         c.tx_power_terrestrial_dbm = parse_double(v, "tx_power_terrestrial_dbm");
       }},
      {"radio.tx_power_uav_dbm",
       [](SimConfig& c, const std::string& v) {
         c.tx_power_uav_dbm = parse_double(v, "tx_power_uav_dbm");
       }},
      {"radio.terrestrial_altitude_m",
       [](SimConfig& c, const std::string& v) {
         c.terrestrial_altitude_m = parse_double(v, "terrestrial_altitude_m");
       }},
      {"radio.user_altitude_m",
       [](SimConfig& c, const std::string& v) {
         c.user_altitude_m = parse_double(v, "user_altitude_m");
       }},
      {"radio.channel_mode",
       [](SimConfig& c, const std::string& v) {
         c.channel_mode = parse_channel_mode(v);
       }},
      {"environment.alpha",
       [](SimConfig& c, const std::string& v) {
         c.environment.alpha = parse_double(v, "alpha");
       }},
      {"environment.beta_per_km2",
       [](SimConfig& c, const std::string& v) {
         c.environment.beta = parse_double(v, "beta_per_km2");
       }},
      {"environment.gamma_m",
       [](SimConfig& c, const std::string& v) {
         c.environment.gamma = parse_double(v, "gamma_m");
       }},
      {"uav.h_min_m",
       [](SimConfig& c, const std::string& v) {
         c.altitude.h_min = parse_double(v, "h_min_m");
       }},
      {"uav.h_max_m",
       [](SimConfig& c, const std::string& v) {
         c.altitude.h_max = parse_double(v, "h_max_m");
       }},
      {"uav.step_xy_m",
       [](SimConfig& c, const std::string& v) {
         c.step_xy_m = parse_double(v, "step_xy_m");
       }},
      {"uav.step_h_m",
       [](SimConfig& c, const std::string& v) {
         c.step_h_m = parse_double(v, "step_h_m");
       }},
      {"uav.initial_positions",
       [](SimConfig& c, const std::string& v) {
         c.initial_positions = parse_positions(v, "initial_positions");
       }},
      {"game.phi",
       [](SimConfig& c, const std::string& v) {
         c.phi = parse_double(v, "phi");
       }},
      {"game.varphi",
       [](SimConfig& c, const std::string& v) {
         c.varphi = parse_double(v, "varphi");
       }},
      {"game.norm_bps",
       [](SimConfig& c, const std::string& v) {
         c.norm_bps = parse_auto_double(v, "norm_bps");
       }},
      {"game.f_max",
       [](SimConfig& c, const std::string& v) {
         c.f_max = parse_auto_double(v, "f_max");
       }},
      {"game.d_min_m",
       [](SimConfig& c, const std::string& v) {
         c.d_min_m = parse_double(v, "d_min_m");
       }},
      {"game.learning_rate",
       [](SimConfig& c, const std::string& v) {
         c.learning_rate = parse_double(v, "learning_rate");
       }},
      {"game.threshold_init",
       [](SimConfig& c, const std::string& v) {
         c.threshold_init = parse_auto_double(v, "threshold_init");
       }},
      {"game.threshold_window",
       [](SimConfig& c, const std::string& v) {
         c.threshold_window = static_cast<int>(parse_int(v, "threshold_window"));
       }},
      {"game.threshold_decay",
       [](SimConfig& c, const std::string& v) {
         c.threshold_decay = parse_double(v, "threshold_decay");
       }},
      {"game.threshold_floor",
       [](SimConfig& c, const std::string& v) {
         c.threshold_floor = parse_auto_double(v, "threshold_floor");
       }},
      {"baselines.candidate_points",
       [](SimConfig& c, const std::string& v) {
         c.candidate_points = static_cast<int>(parse_int(v, "candidate_points"));
       }},
      {"baselines.altitude_levels",
       [](SimConfig& c, const std::string& v) {
         c.altitude_levels = static_cast<int>(parse_int(v, "altitude_levels"));
       }},
      {"baselines.fixed_altitude_m",
       [](SimConfig& c, const std::string& v) {
         c.fixed_altitude_m = parse_double(v, "fixed_altitude_m");
       }},
      {"run.seeds",
       [](SimConfig& c, const std::string& v) {
         c.seeds = parse_seed_list(v);
       }},
  };

  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#' || text.front() == ';') continue;
    const std::string where = origin + ":" + std::to_string(line_no);
    if (text.front() == '[') {
      if (text.back() != ']')
        throw std::invalid_argument(where + ": malformed section header");
      section = lower(trim(text.substr(1, text.size() - 2)));
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(where + ": expected key = value");
    const std::string key = lower(trim(text.substr(0, eq)));
    const std::string value = trim(text.substr(eq + 1));
    const auto it = setters.find(section + "." + key);
    if (it == setters.end())
      throw std::invalid_argument(where + ": unknown key '" + section + "." +
                                  key + "'");
    try {
      it->second(cfg, value);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + ": " + e.what());
    }
  }
}

SimConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  SimConfig cfg;
  apply_config_text(cfg, in, path);
  return cfg;
}

std::string config_to_ini(const SimConfig& cfg, bool resolved) {
  std::ostringstream out;
  const auto opt = [&](const std::optional<double>& field, double value) {
    if (resolved) return format_double(value);
    return field ? format_double(*field) : std::string("auto");
  };
  out << "[scenario]\n";
  out << "region_radius_m = " << format_double(cfg.region_radius_m) << "\n";
  out << "n_users = " << cfg.n_users << "\n";
  out << "n_uavs = " << cfg.n_uavs << "\n";
  out << "algorithm = " << algorithm_name(cfg.algorithm) << "\n";
  out << "timesteps = " << cfg.timesteps << "\n";
  out << "load_eta_exponent = " << format_double(cfg.load_eta_exponent)
      << "\n\n";
  out << "[radio]\n";
  out << "carrier_freq_ghz = " << format_double(cfg.carrier_freq_ghz) << "\n";
  out << "bandwidth_hz = " << format_double(cfg.bandwidth_hz) << "\n";
  out << "noise_psd_dbm_hz = " << format_double(cfg.noise_psd_dbm_hz) << "\n";
  out << "demand_bps = " << format_double(cfg.demand_bps) << "\n";
  out << "tx_power_terrestrial_dbm = "
      << format_double(cfg.tx_power_terrestrial_dbm) << "\n";
  out << "tx_power_uav_dbm = " << format_double(cfg.tx_power_uav_dbm) << "\n";
  out << "terrestrial_altitude_m = " << format_double(cfg.terrestrial_altitude_m)
      << "\n";
  out << "user_altitude_m = " << format_double(cfg.user_altitude_m) << "\n";
  out << "channel_mode = " << channel_mode_name(cfg.channel_mode) << "\n\n";
  out << "[environment]\n";
  out << "alpha = " << format_double(cfg.environment.alpha) << "\n";
  out << "beta_per_km2 = " << format_double(cfg.environment.beta)
      << "\n";
  out << "gamma_m = " << format_double(cfg.environment.gamma) << "\n\n";
  out << "[uav]\n";
  out << "h_min_m = " << format_double(cfg.altitude.h_min) << "\n";
  out << "h_max_m = " << format_double(cfg.altitude.h_max) << "\n";
  out << "step_xy_m = " << format_double(cfg.step_xy_m) << "\n";
  out << "step_h_m = " << format_double(cfg.step_h_m) << "\n";
  if (!cfg.initial_positions.empty())
    out << "initial_positions = " << format_positions(cfg.initial_positions)
        << "\n";
  out << "\n[game]\n";
  out << "phi = " << format_double(cfg.phi) << "\n";
  out << "varphi = " << format_double(cfg.varphi) << "\n";
  out << "norm_bps = " << opt(cfg.norm_bps, cfg.resolved_norm_bps()) << "\n";
  out << "f_max = " << opt(cfg.f_max, cfg.resolved_f_max()) << "\n";
  out << "d_min_m = " << format_double(cfg.d_min_m) << "\n";
  out << "learning_rate = " << format_double(cfg.learning_rate) << "\n";
  out << "threshold_init = "
      << opt(cfg.threshold_init, cfg.resolved_threshold_init()) << "\n";
  out << "threshold_window = " << cfg.threshold_window << "\n";
  out << "threshold_decay = " << format_double(cfg.threshold_decay) << "\n";
  out << "threshold_floor = "
      << opt(cfg.threshold_floor, cfg.resolved_threshold_floor()) << "\n\n";
  out << "[baselines]\n";
  out << "candidate_points = " << cfg.candidate_points << "\n";
  out << "altitude_levels = " << cfg.altitude_levels << "\n";
  out << "fixed_altitude_m = " << format_double(cfg.fixed_altitude_m) << "\n\n";
  out << "[run]\n";
  out << "seeds = " << format_seed_list(cfg.seeds) << "\n";
  return out.str();
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("seeds: empty seed list");
  std::vector<std::uint64_t> seeds;
  if (t.find(':') != std::string::npos) {
    const auto parts = split(t, ':');
    if (parts.size() != 2)
      throw std::invalid_argument("seeds: expected first:last, got '" + text +
                                  "'");
    const long long first = parse_int(parts[0], "seeds");
    const long long last = parse_int(parts[1], "seeds");
    if (first < 0 || last < first)
      throw std::invalid_argument("seeds: invalid range '" + text + "'");
    for (long long s = first; s <= last; ++s)
      seeds.push_back(static_cast<std::uint64_t>(s));
    return seeds;
  }
  for (const std::string& part : split(t, ',')) {
    const long long s = parse_int(part, "seeds");
    if (s < 0) throw std::invalid_argument("seeds: seeds must be non-negative");
    seeds.push_back(static_cast<std::uint64_t>(s));
  }
  return seeds;
}

std::string format_seed_list(const std::vector<std::uint64_t>& seeds) {
  bool contiguous = seeds.size() > 1;
  for (std::size_t i = 1; contiguous && i < seeds.size(); ++i)
    contiguous = seeds[i] == seeds[i - 1] + 1;
  if (contiguous)
    return std::to_string(seeds.front()) + ":" + std::to_string(seeds.back());
  std::string out;
  for (std::uint64_t s : seeds) {
    if (!out.empty()) out += ",";
    out += std::to_string(s);
  }
  return out;
}

std::string format_double(double v) {
  char buf[40];
  if (v == std::floor(v) && std::fabs(v) < 1e15) {
    std::snprintf(buf, sizeof(buf), "%.0f", v);
    return buf;
  }
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

}  // namespace skyplace
