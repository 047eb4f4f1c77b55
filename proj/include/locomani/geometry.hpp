#pragma once

#include <Eigen/Core>

namespace locomani::geom {

/// Orthonormality drift accepted without repair.
inline constexpr double kOrthoTolAccept = 1e-9;
/// Drift up to here is repaired by nearest-orthonormal projection; beyond it
/// the matrix is rejected as corrupt.
inline constexpr double kOrthoTolRepair = 1e-6;

/// A rotation matrix in SO(3). Construction validates orthonormality and
/// det = +1; matrices with drift in (1e-9, 1e-6] are snapped to the nearest
/// orthonormal matrix (accumulated integration error), anything worse throws.
class Rotation {
 public:
  Rotation() : m_(Eigen::Matrix3d::Identity()) {}

  static Rotation identity() { return Rotation(); }

  /// Validating constructor; throws std::invalid_argument on corrupt input.
  static Rotation from_matrix(const Eigen::Matrix3d& m);

  /// Rodrigues formula. `axis` must be unit length to 1e-9.
  static Rotation about_axis(const Eigen::Vector3d& axis, double angle);

  const Eigen::Matrix3d& matrix() const { return m_; }

  Rotation inverse() const { return Rotation(m_.transpose(), Unchecked{}); }

  Rotation operator*(const Rotation& rhs) const {
    return Rotation(m_ * rhs.m_, Unchecked{});
  }

  Eigen::Vector3d operator*(const Eigen::Vector3d& v) const { return m_ * v; }

 private:
  struct Unchecked {};
  Rotation(const Eigen::Matrix3d& m, Unchecked) : m_(m) {}

  Eigen::Matrix3d m_;
};

/// Rigid transform: rotation plus position (meters).
struct Pose {
  Rotation rot;
  Eigen::Vector3d pos{Eigen::Vector3d::Zero()};

  Pose() = default;
  Pose(const Rotation& r, const Eigen::Vector3d& p);

  static Pose identity() { return Pose(); }
};

/// Weights of the SE(3) error mix: a1 scales the rotation distance (1/rad),
/// a2 the position distance (1/m). a1, a2 >= 0 and a1 + a2 > 0.
struct Se3Weights {
  double a1 = 0.5;
  double a2 = 1.0;

  Se3Weights() = default;
  Se3Weights(double a1_, double a2_);
};

/// Frobenius norm of log(r1 r2^T): sqrt(2) times the relative rotation angle.
/// Computed as sqrt(2)*arccos(clamp((tr(r1 r2^T) - 1)/2, -1, 1)), which is
/// exact over the whole angle range including the log singularity at pi.
double rotation_angle_distance(const Rotation& r1, const Rotation& r2);

/// Euclidean distance (meters).
double position_distance(const Eigen::Vector3d& p1, const Eigen::Vector3d& p2);

/// a1*rotation_angle_distance + a2*position_distance.
double se3_error(const Pose& target, const Pose& current, const Se3Weights& w);

/// base^-1 composed with world_target.
Pose express_in_body(const Pose& world_target, const Pose& base);

Pose compose(const Pose& a, const Pose& b);
Pose inverse(const Pose& p);

/// Row-major rotation entries followed by the position, fixed order.
Eigen::Matrix<double, 12, 1> vectorize_pose(const Pose& p);
Pose devectorize_pose(const Eigen::Matrix<double, 12, 1>& v);

}  // namespace locomani::geom
