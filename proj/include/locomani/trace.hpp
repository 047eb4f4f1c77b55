#pragma once

#include <Eigen/Core>

#include <iosfwd>
#include <vector>

#include "locomani/fusion.hpp"
#include "locomani/geometry.hpp"

namespace locomani::env {

using Action = Eigen::Matrix<double, 7, 1>;
using JointVec = Eigen::Matrix<double, 7, 1>;

enum class FailureReason {
  kNone,
  kGroundCollision,
  kJointPinned,
  kOutOfBounds,
  kNonFinite,
  kInvalidAction,
};

const char* to_string(FailureReason reason);

struct Status {
  bool ok = true;
  FailureReason reason = FailureReason::kNone;

  static Status okay() { return {}; }
  static Status failed(FailureReason r) { return {false, r}; }
};

/// Full kinematic state of the planar-base + 4-DoF-arm robot.
struct RobotState {
  Eigen::Vector3d base{Eigen::Vector3d::Zero()};      // x, y (m), yaw (rad)
  Eigen::Vector4d arm_q{Eigen::Vector4d::Zero()};     // joint angles (rad)
  Eigen::Vector3d base_vel{Eigen::Vector3d::Zero()};  // vx, vy body frame, yaw rate
  Eigen::Vector4d arm_qd{Eigen::Vector4d::Zero()};    // rad/s
  double time = 0.0;

  /// Base velocities first, then arm.
  JointVec joint_velocities() const {
    JointVec v;
    v << base_vel, arm_qd;
    return v;
  }
};

/// One recorded step: post-step state, the action that produced it, the full
/// reward breakdown, and the failure status.
struct TraceStep {
  RobotState state;
  Action action = Action::Zero();
  JointVec realized_torque = JointVec::Zero();  // accel proxy in kinematic mode
  reward::RewardTerms terms;
  double d_p = 0.0;
  double d_theta = 0.0;
  double r_mani = 0.0;
  double r_loco = 0.0;
  double r_total = 0.0;
  Status status;
};

struct RolloutTrace {
  std::vector<TraceStep> steps;
  geom::Pose command;
  double epsilon0 = 0.0;
  double dt = 0.02;
  bool failed = false;
  FailureReason failure_reason = FailureReason::kNone;
  double total_return = 0.0;

  /// Writes one row per step; fixed column order documented in the header row.
  void write_csv(std::ostream& os) const;
  static const char* csv_header();
};

}  // namespace locomani::env
