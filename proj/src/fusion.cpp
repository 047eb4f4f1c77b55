#include "locomani/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace locomani::reward {

const char* to_string(FusionMode mode) {
  switch (mode) {
    case FusionMode::kFullRfm: return "full_rfm";
    case FusionMode::kNoLocoManiFusion: return "no_loco_mani_fusion";
    case FusionMode::kNoRewardPrioritization: return "no_reward_prioritization";
    case FusionMode::kNoEnhancement: return "no_enhancement";
    case FusionMode::kNoRfm: return "no_rfm";
  }
  return "?";
}

FusionMode fusion_mode_from_string(std::string_view name) {
  if (name == "full_rfm") return FusionMode::kFullRfm;
  if (name == "no_loco_mani_fusion") return FusionMode::kNoLocoManiFusion;
  if (name == "no_reward_prioritization") return FusionMode::kNoRewardPrioritization;
  if (name == "no_enhancement") return FusionMode::kNoEnhancement;
  if (name == "no_rfm") return FusionMode::kNoRfm;
  throw std::invalid_argument("unknown fusion mode: " + std::string(name));
}

std::size_t mode_weight_arity(FusionMode mode) {
  switch (mode) {
    case FusionMode::kNoLocoManiFusion: return 3;
    case FusionMode::kNoRewardPrioritization: return 6;
    case FusionMode::kNoRfm: return 8;
    default: return 0;
  }
}

std::vector<double> default_mode_weights(FusionMode mode) {
  switch (mode) {
    case FusionMode::kNoLocoManiFusion:
      return {1.2, 0.4, 1.0};
    case FusionMode::kNoRewardPrioritization:
      return {2.0, 3.0, 3.0, -0.6, 3.0, 1.5};
    case FusionMode::kNoRfm:
      return {1.0, 2.0, 3.0, 3.0, 1.0, 1.2, 0.5, 1.0};
    default:
      return {};
  }
}

void FusionConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("FusionConfig: ") + what);
  };
  require(sigma > 0.0, "sigma must be > 0");
  require(sigma_s > 0.0, "sigma_s must be > 0");
  require(m_enh > 1.0, "m_enh must be > 1");
  require(v_ref > 0.0, "v_ref must be > 0");
  require(v_min > 0.0 && v_max > v_min, "need 0 < v_min < v_max");
  require(v_ref >= v_min && v_ref <= v_max, "v_ref outside [v_min, v_max]");
  require(l_slope > 0.0, "l_slope must be > 0");
  require(mu >= 0.0, "mu must be >= 0");
  require(cb_clip > 0.0, "cb_clip must be > 0");
  require(gamma_release >= 0.0, "gamma_release must be >= 0");
  require(w_sa >= 0.0, "w_sa must be >= 0");
  require(kappa_policy != KappaPolicy::kConstant || kappa_constant >= 0.0,
          "kappa_constant must be >= 0");
  require(ac_threshold >= 0.0, "ac_threshold must be >= 0");
  require(mode_weights.size() == mode_weight_arity(mode),
          "mode_weights length does not match the mode's arity");
  require(omega_power.empty() || omega_power.size() == 7,
          "omega_power must be empty or length 7");
  require(omega_torque.empty() || omega_torque.size() == 7,
          "omega_torque must be empty or length 7");
  // Se3Weights invariants are enforced by its constructor; re-check here so a
  // struct assembled by aggregate means cannot slip through.
  require(se3_weights.a1 >= 0.0 && se3_weights.a2 >= 0.0 &&
              se3_weights.a1 + se3_weights.a2 > 0.0,
          "se3 weights need a1 >= 0, a2 >= 0, a1 + a2 > 0");
}

FusionConfig FusionConfig::with_mode(FusionMode m) const {
  FusionConfig out = *this;
  out.mode = m;
  out.mode_weights = default_mode_weights(m);
  return out;
}

EpisodeRewardState EpisodeRewardState::start(double epsilon0, double dt) {
  EpisodeRewardState s;
  s.e_cb = 0.0;
  s.epsilon0 = epsilon0;
  s.step = 0;
  s.dt = dt;
  return s;
}

void EpisodeRewardState::relatch(double epsilon) {
  epsilon0 = epsilon;
  step = 0;
}

std::pair<double, double> tracking_terms(double d_p, double d_theta,
                                         const FusionConfig& cfg) {
  return {std::exp(-d_p / cfg.sigma), std::exp(-d_theta / cfg.sigma_s)};
}

double prioritize(double r_high, double r_low) {
  return r_high * (1.0 + r_low);
}

double micro_enhance(double r, double m_enh) {
  return r + std::pow(r, m_enh);
}

double reference_schedule(const EpisodeRewardState& state, const FusionConfig& cfg) {
  const double t = static_cast<double>(state.step) * state.dt;
  return std::max(state.epsilon0 - cfg.v_ref * t, 0.0);
}

double phase(double epsilon_ref, const FusionConfig& cfg) {
  return 1.0 / (1.0 + std::exp(-5.0 * (epsilon_ref - cfg.mu) / cfg.l_slope));
}

double cumulative_update(EpisodeRewardState& state, double epsilon,
                         double d_phase, const FusionConfig& cfg) {
  const double kappa = cfg.kappa_policy == KappaPolicy::kPhaseCoupled
                           ? (1.0 - d_phase)
                           : cfg.kappa_constant;
  state.e_cb += kappa * epsilon;
  if (cfg.cb_clip_policy == CumulativeClip::kAccumulator) {
    state.e_cb = std::min(state.e_cb, cfg.cb_clip);
  }
  return std::min(state.e_cb, cfg.cb_clip);
}

double displacement_reward(double epsilon_ref, double epsilon,
                           const FusionConfig& cfg) {
  const double e_ref = std::max(std::abs(epsilon_ref - epsilon) - cfg.gamma_release, 0.0);
  return std::exp(-e_ref / cfg.sigma_s);
}

double fuse_manipulation(const RewardTerms& t, const FusionConfig& cfg) {
  const std::vector<double>& w = cfg.mode_weights;
  switch (cfg.mode) {
    case FusionMode::kFullRfm:
    case FusionMode::kNoLocoManiFusion:
      return t.r_reg_mani + t.r_reg_mani * (t.r_ep_enh + t.r_ep * t.r_eo_enh) +
             t.r_pb - t.r_cb + t.r_ac;
    case FusionMode::kNoRewardPrioritization:
      return w[0] * t.r_ep_enh + w[1] * t.r_eo_enh + w[2] * t.r_pb +
             w[3] * t.r_cb + w[4] * t.r_reg_mani + w[5] * t.r_ac;
    case FusionMode::kNoEnhancement:
      return t.r_reg_mani + t.r_reg_mani * (2.0 * t.r_ep + 2.0 * t.r_ep * t.r_eo) +
             t.r_pb + t.r_ac;
    case FusionMode::kNoRfm:
      return w[0] * t.r_reg_mani + w[1] * t.r_ep + w[2] * t.r_eo +
             w[3] * t.r_pb + w[4] * t.r_ac;
  }
  return 0.0;
}

double fuse_locomotion(const RewardTerms& t, const FusionConfig& cfg) {
  if (cfg.mode == FusionMode::kNoRfm) {
    // Weighted-sum baseline: prioritization product linearized.
    return t.r_reg_loco + t.r_dw - cfg.w_sa * t.r_sa;
  }
  return t.r_reg_loco + t.r_reg_loco * t.r_dw - cfg.w_sa * t.r_sa;
}

double fuse_total(double r_mani, double r_loco, double r_basic, double d_phase,
                  const FusionConfig& cfg) {
  const std::vector<double>& w = cfg.mode_weights;
  switch (cfg.mode) {
    case FusionMode::kNoLocoManiFusion:
      return w[0] * r_mani + w[1] * r_loco + w[2] * r_basic;
    case FusionMode::kNoRfm:
      return w[5] * r_mani + w[6] * r_loco + w[7] * r_basic;
    default:
      return (1.0 - d_phase) * r_mani + d_phase * r_loco + r_basic;
  }
}

double basic_rewards(const StepDynamics& d, const FusionConfig& cfg) {
  const BasicWeights& w = cfg.basic_weights;
  const Eigen::Index n = d.action.size();

  const double rate = (d.action_prev - d.action).squaredNorm();
  const double smooth = (d.action_prev2 - 2.0 * d.action_prev + d.action).squaredNorm();

  double power = 0.0;
  double torque_sq = 0.0;
  double torque_rate = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double op = cfg.omega_power.empty() ? 1.0 : cfg.omega_power[static_cast<std::size_t>(i)];
    const double ot = cfg.omega_torque.empty() ? 1.0 : cfg.omega_torque[static_cast<std::size_t>(i)];
    power += std::abs(d.torque[i] * d.joint_vel[i]) * op;
    torque_sq += d.torque[i] * d.torque[i] * ot;
    torque_rate += std::abs(d.torque[i] - d.torque_prev[i]) / d.torque_limit[i];
  }

  return w.action_rate * rate + w.action_smoothness * smooth +
         w.collision * (d.collision ? 1.0 : 0.0) + w.alive * (d.alive ? 1.0 : 0.0) +
         w.weighted_power * power + w.weighted_torque * torque_sq +
         w.torque_rate * torque_rate;
}

}  // namespace locomani::reward
