#pragma once

#include <array>
#include <span>

#include "skyplace/geometry.hpp"
#include "skyplace/rng.hpp"

namespace skyplace {

// Weights of the per-UAV utility. norm_bps is the rate-sum normalizer
// (a separate quantity from the policy learning rate), f_max the largest
// utility a UAV can reach, d_min the collision-avoidance distance.
struct GameWeights {
  double phi = 1.0;       // throughput weight
  double varphi = 1.0;    // collision weight
  double norm_bps = 1.0;  // rate-sum normalizer
  double f_max = 1.0;
  double d_min = 10.0;  // m
};

using Policy = std::array<double, kStrategyCount>;

Policy uniform_policy();

// One player of the satisfaction-form placement game.
struct UavAgent {
  int bs_id = 0;
  Policy policy = uniform_policy();
  double threshold = 0.0;  // gamma_u, satisfaction threshold
  bool satisfied = false;  // theta_u of the previous step
  Strategy last_strategy = Strategy::no_change;
  double last_utility = 0.0;
  double learning_rate = 0.1;  // mu_u
  int unsatisfied_streak = 0;
  int last_activation = 0;  // Gamma_u of the previous utility evaluation
};

// Collision activation: 1 iff any other UAV is strictly closer than d_min
// in 3D.
int activation(const Position3D& self, std::span<const Position3D> others,
               double d_min);

// f_u = phi * served_rate_sum / norm - varphi * Gamma.
double utility(double served_rate_sum_bps, int gamma_act, const GameWeights& w);

// theta_u: satisfied iff f_u >= gamma_u (non-strict).
bool satisfaction_indicator(double utility_value, double threshold);

// A satisfied agent replays its previous strategy without touching the rng;
// an unsatisfied one samples from its policy.
Strategy select_strategy(const UavAgent& agent, Rng& rng);

// q = (f_max + f_u - gamma_u) / (2 f_max), clipped to [0, 1] so the policy
// update step size stays valid.
double q_factor(double f_u, double gamma_u, double f_max);

// Linear-reward automaton update: when unsatisfied,
// pi_i <- pi_i + mu*q*(1{chosen==i} - pi_i); when satisfied the policy is
// unchanged. Preserves the probability simplex for mu*q in [0, 1].
void update_policy(Policy& policy, Strategy chosen, bool satisfied, double q,
                   double mu);

// Lowers gamma_u by `decay` (never below `floor`, never upward) once the
// agent has been unsatisfied for `window` consecutive steps; resets the
// streak when it fires.
void adapt_threshold(UavAgent& agent, int window, double decay, double floor);

// True iff every agent's indicator is 1 (vacuously true when empty).
bool is_satisfaction_equilibrium(std::span<const UavAgent> agents);

}  // namespace skyplace
