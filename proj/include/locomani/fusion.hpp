#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <string_view>
#include <vector>

#include "locomani/geometry.hpp"

namespace locomani::reward {

/// How the per-step reward terms are combined into one scalar. FullRfm is the
/// nonlinear fusion; the other four are the ablation variants, each with its
/// published weight vector.
enum class FusionMode {
  kFullRfm,
  kNoLocoManiFusion,
  kNoRewardPrioritization,
  kNoEnhancement,
  kNoRfm,
};

const char* to_string(FusionMode mode);
FusionMode fusion_mode_from_string(std::string_view name);

/// Number of weights the mode consumes (0 for the weightless modes).
std::size_t mode_weight_arity(FusionMode mode);

/// The weight vectors the ablations were originally tuned to.
std::vector<double> default_mode_weights(FusionMode mode);

enum class KappaPolicy { kPhaseCoupled, kConstant };
enum class CumulativeClip { kAccumulator, kAtRead };

/// Weights of the basic reward group. Signs are carried by the weights
/// (penalties are negative), so r_basic is a plain weighted sum.
struct BasicWeights {
  double action_rate = -0.003;
  double action_smoothness = -0.001;
  double collision = -5.0;
  double alive = 2.0;
  double weighted_power = -3.3e-4;
  double weighted_torque = -4e-5;
  double torque_rate = -0.1;
};

struct FusionConfig {
  double sigma = 0.25;     // position reward scale (m)
  double sigma_s = 0.25;   // orientation / schedule reward scale
  double m_enh = 4.0;      // micro-enhancement exponent, > 1
  geom::Se3Weights se3_weights{0.5, 1.0};
  double v_ref = 0.3;      // reference descent speed (epsilon-units/s)
  double v_min = 0.1;      // validation bounds on v_ref
  double v_max = 1.0;
  double mu = 1.5;         // phase sigmoid midpoint (armspan rule: 2 * arm span)
  double l_slope = 1.5;    // phase sigmoid slope length
  double gamma_release = 0.1;
  double cb_clip = 20.0;
  CumulativeClip cb_clip_policy = CumulativeClip::kAccumulator;
  FusionMode mode = FusionMode::kFullRfm;
  std::vector<double> mode_weights;  // arity must match the mode
  BasicWeights basic_weights;
  double w_sa = 0.15;      // static-arm weight, subtracted in r_loco
  KappaPolicy kappa_policy = KappaPolicy::kPhaseCoupled;
  double kappa_constant = 1.0;
  // Per-joint vectors for the weighted power / torque penalties. Empty means
  // all ones; otherwise length must match the robot's DoF count.
  std::vector<double> omega_power;
  std::vector<double> omega_torque;
  // "All feet grounded" analog: commanded base translation below this
  // fraction of its limit counts as grounded.
  double ac_threshold = 1e-2;

  /// Throws std::invalid_argument on any violated invariant, including a
  /// mode_weights length that does not match the mode's arity.
  void validate() const;

  /// Copy with a different fusion mode and that mode's default weights.
  FusionConfig with_mode(FusionMode m) const;
};

/// Per-episode accumulator for the cumulative penalty and the descent
/// schedule. Owned by exactly one rollout.
struct EpisodeRewardState {
  double e_cb = 0.0;     // cumulative error (clipping policy decides exposure)
  double epsilon0 = 0.0; // SE(3) distance latched at episode start
  long step = 0;         // steps since the last (re)latch
  double dt = 0.02;

  static EpisodeRewardState start(double epsilon0, double dt);

  /// Command changed mid-episode: latch the new initial distance and restart
  /// the schedule clock. The cumulative accumulator is left untouched.
  void relatch(double epsilon);
};

/// One step's reward components, all finite by construction.
struct RewardTerms {
  double r_ep = 0.0;       // position tracking, (0,1]
  double r_eo = 0.0;       // orientation tracking, (0,1]
  double r_ep_enh = 0.0;   // micro-enhanced variants, (0,2]
  double r_eo_enh = 0.0;
  double r_cb = 0.0;       // cumulative penalty, [0, cb_clip]
  double r_pb = 0.0;       // potential-based hook
  double r_ac = 0.0;       // all-contact indicator, {0,1}
  double r_reg_mani = 1.0; // regularizers, (0,1]
  double r_reg_loco = 1.0;
  double r_dw = 0.0;       // displacement reward, (0,1]
  double r_sa = 0.0;       // static-arm deviation, >= 0
  double r_basic = 0.0;
  double d_phase = 0.0;    // phase variable, (0,1)
  double epsilon = 0.0;
  double epsilon_ref = 0.0;
};

/// (r_ep, r_eo) = (exp(-d_p/sigma), exp(-d_theta/sigma_s)).
std::pair<double, double> tracking_terms(double d_p, double d_theta,
                                         const FusionConfig& cfg);

/// r_high*(1 + r_low): the lower-priority reward only matters once the
/// higher-priority one is earned.
double prioritize(double r_high, double r_low);

/// r + r^M: steepens the reward slope near zero error, leaves the tail alone.
double micro_enhance(double r, double m_enh);

/// epsilon_ref = max(epsilon0 - v*t, 0) with t = step*dt.
double reference_schedule(const EpisodeRewardState& state, const FusionConfig& cfg);

/// Sigmoid phase variable D = 1/(1 + exp(-5*(epsilon_ref - mu)/l)).
double phase(double epsilon_ref, const FusionConfig& cfg);

/// Accumulates kappa*epsilon into state and returns the exposed r_cb
/// (clipped at cb_clip). kappa = 1 - d_phase under the phase-coupled policy.
double cumulative_update(EpisodeRewardState& state, double epsilon,
                         double d_phase, const FusionConfig& cfg);

/// r_dw = exp(-max(|epsilon_ref - epsilon| - gamma, 0)/sigma_s); exactly 1
/// inside the release band.
double displacement_reward(double epsilon_ref, double epsilon,
                           const FusionConfig& cfg);

double fuse_manipulation(const RewardTerms& terms, const FusionConfig& cfg);
double fuse_locomotion(const RewardTerms& terms, const FusionConfig& cfg);
double fuse_total(double r_mani, double r_loco, double r_basic, double d_phase,
                  const FusionConfig& cfg);

/// What basic_rewards needs from one transition. `torque` is the realized
/// torque (PD mode) or the realized acceleration (kinematic mode).
struct StepDynamics {
  Eigen::VectorXd action_prev2;
  Eigen::VectorXd action_prev;
  Eigen::VectorXd action;
  Eigen::VectorXd torque;
  Eigen::VectorXd torque_prev;
  Eigen::VectorXd joint_vel;
  Eigen::VectorXd torque_limit;
  bool collision = false;
  bool alive = true;
};

double basic_rewards(const StepDynamics& d, const FusionConfig& cfg);

}  // namespace locomani::reward
