#include "skyplace/game.hpp"

#include <algorithm>
#include <cmath>

namespace skyplace {

Policy uniform_policy() {
  Policy p;
  p.fill(1.0 / kStrategyCount);
  return p;
}

int activation(const Position3D& self, std::span<const Position3D> others,
               double d_min) {
  for (const Position3D& o : others) {
    if (distance_3d(self, o) < d_min) return 1;
  }
  return 0;
}

double utility(double served_rate_sum_bps, int gamma_act, const GameWeights& w) {
  return w.phi * served_rate_sum_bps / w.norm_bps - w.varphi * gamma_act;
}

bool satisfaction_indicator(double utility_value, double threshold) {
  return utility_value >= threshold;
}

Strategy select_strategy(const UavAgent& agent, Rng& rng) {
  if (agent.satisfied) return agent.last_strategy;
  const double u = rng.uniform01();
  double acc = 0.0;
  for (int i = 0; i < kStrategyCount; ++i) {
    acc += agent.policy[i];
    if (u < acc) return static_cast<Strategy>(i);
  }
  return Strategy::no_change;  // u landed in the tail rounding slack
}

double q_factor(double f_u, double gamma_u, double f_max) {
  const double q = (f_max + f_u - gamma_u) / (2.0 * f_max);
  return std::clamp(q, 0.0, 1.0);
}

void update_policy(Policy& policy, Strategy chosen, bool satisfied, double q,
                   double mu) {
  if (satisfied) return;
  const double step = mu * q;
  const int c = static_cast<int>(chosen);
  for (int i = 0; i < kStrategyCount; ++i) {
    const double target = i == c ? 1.0 : 0.0;
    policy[i] += step * (target - policy[i]);
  }
}

void adapt_threshold(UavAgent& agent, int window, double decay, double floor) {
  if (agent.unsatisfied_streak < window) return;
  const double lowered = std::max(floor, decay * agent.threshold);
  if (lowered < agent.threshold) agent.threshold = lowered;
  agent.unsatisfied_streak = 0;
}

bool is_satisfaction_equilibrium(std::span<const UavAgent> agents) {
  return std::all_of(agents.begin(), agents.end(),
                     [](const UavAgent& a) { return a.satisfied; });
}

}  // namespace skyplace
