#include "skyplace/network.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace skyplace {

double bs_load(std::span<const double> demands_bps,
               std::span<const double> rates_bps) {
  double load = 0.0;
  for (std::size_t i = 0; i < demands_bps.size(); ++i) {
    if (demands_bps[i] > 0.0 && rates_bps[i] <= 0.0) {
      throw std::domain_error("bs_load: served user with zero rate");
    }
    if (demands_bps[i] > 0.0) load += demands_bps[i] / rates_bps[i];
  }
  return load;
}

double eta_learning_rate(int t, double exponent) {
  return std::pow(static_cast<double>(t), -exponent);
}

double updated_load_estimate(double load_prev, double estimate_prev, double eta) {
  return eta * load_prev + (1.0 - eta) * estimate_prev;
}

std::vector<int> associate_users(std::span<const double> rx_powers_w,
                                 std::size_t n_users,
                                 std::span<const double> load_estimates) {
  const std::size_t n_bs = load_estimates.size();
  std::vector<int> serving(n_users, 0);
  for (std::size_t k = 0; k < n_users; ++k) {
    const double* rx = rx_powers_w.data() + k * n_bs;
    int best = 0;
    double best_score = rx[0] * (1.0 - load_estimates[0]);
    for (std::size_t b = 1; b < n_bs; ++b) {
      const double score = rx[b] * (1.0 - load_estimates[b]);
      if (score > best_score) {
        best_score = score;
        best = static_cast<int>(b);
      }
    }
    serving[k] = best;
  }
  return serving;
}

std::vector<std::size_t> enforce_capacity(std::span<const double> fractions,
                                          std::span<const int> user_ids) {
  double total = std::accumulate(fractions.begin(), fractions.end(), 0.0);
  std::vector<std::size_t> order(fractions.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (fractions[a] != fractions[b]) return fractions[a] > fractions[b];
    return user_ids[a] < user_ids[b];
  });
  std::vector<std::size_t> dropped;
  for (std::size_t i = 0; total > 1.0 && i < order.size(); ++i) {
    dropped.push_back(order[i]);
    total -= fractions[order[i]];
  }
  return dropped;
}

}  // namespace skyplace
