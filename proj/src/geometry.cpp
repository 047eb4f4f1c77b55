#include "locomani/geometry.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace locomani::geom {

namespace {

double orthonormality_error(const Eigen::Matrix3d& m) {
  return (m.transpose() * m - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
}

Eigen::Matrix3d nearest_orthonormal(const Eigen::Matrix3d& m) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d r = svd.matrixU() * svd.matrixV().transpose();
  if (r.determinant() < 0.0) {
    Eigen::Matrix3d flip = Eigen::Matrix3d::Identity();
    flip(2, 2) = -1.0;
    r = svd.matrixU() * flip * svd.matrixV().transpose();
  }
  return r;
}

Eigen::Matrix3d skew(const Eigen::Vector3d& v) {
  Eigen::Matrix3d s;
  s << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
      -v.y(), v.x(), 0.0;
  return s;
}

}  // namespace

Rotation Rotation::from_matrix(const Eigen::Matrix3d& m) {
  if (!m.allFinite()) throw std::invalid_argument("Rotation: non-finite matrix");
  const double err = orthonormality_error(m);
  if (err <= kOrthoTolAccept) {
    if (m.determinant() < 0.0) {
      throw std::invalid_argument("Rotation: reflection (det < 0)");
    }
    return Rotation(m, Unchecked{});
  }
  if (err <= kOrthoTolRepair) {
    return Rotation(nearest_orthonormal(m), Unchecked{});
  }
  throw std::invalid_argument("Rotation: matrix is not orthonormal");
}

Rotation Rotation::about_axis(const Eigen::Vector3d& axis, double angle) {
  if (std::abs(axis.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("Rotation::about_axis: axis must be unit length");
  }
  const Eigen::Matrix3d k = skew(axis);
  const Eigen::Matrix3d m = Eigen::Matrix3d::Identity() + std::sin(angle) * k +
                            (1.0 - std::cos(angle)) * k * k;
  return Rotation(m, Unchecked{});
}

Pose::Pose(const Rotation& r, const Eigen::Vector3d& p) : rot(r), pos(p) {
  if (!pos.allFinite()) throw std::invalid_argument("Pose: non-finite position");
}

Se3Weights::Se3Weights(double a1_, double a2_) : a1(a1_), a2(a2_) {
  if (a1 < 0.0 || a2 < 0.0 || a1 + a2 <= 0.0) {
    throw std::invalid_argument("Se3Weights: need a1 >= 0, a2 >= 0, a1 + a2 > 0");
  }
}

double rotation_angle_distance(const Rotation& r1, const Rotation& r2) {
  // tr(r1 r2^T) is symmetric in the arguments, so the distance is too.
  const double tr = (r1.matrix() * r2.matrix().transpose()).trace();
  const double c = std::clamp((tr - 1.0) / 2.0, -1.0, 1.0);
  return std::numbers::sqrt2 * std::acos(c);
}

double position_distance(const Eigen::Vector3d& p1, const Eigen::Vector3d& p2) {
  return (p1 - p2).norm();
}

double se3_error(const Pose& target, const Pose& current, const Se3Weights& w) {
  return w.a1 * rotation_angle_distance(target.rot, current.rot) +
         w.a2 * position_distance(target.pos, current.pos);
}

Pose express_in_body(const Pose& world_target, const Pose& base) {
  const Rotation base_inv = base.rot.inverse();
  return Pose(base_inv * world_target.rot, base_inv * (world_target.pos - base.pos));
}

Pose compose(const Pose& a, const Pose& b) {
  return Pose(a.rot * b.rot, a.rot * b.pos + a.pos);
}

Pose inverse(const Pose& p) {
  const Rotation rinv = p.rot.inverse();
  return Pose(rinv, -(rinv * p.pos));
}

Eigen::Matrix<double, 12, 1> vectorize_pose(const Pose& p) {
  Eigen::Matrix<double, 12, 1> v;
  const Eigen::Matrix3d& m = p.rot.matrix();
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) v[3 * r + c] = m(r, c);
  }
  v.tail<3>() = p.pos;
  return v;
}

Pose devectorize_pose(const Eigen::Matrix<double, 12, 1>& v) {
  Eigen::Matrix3d m;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m(r, c) = v[3 * r + c];
  }
  return Pose(Rotation::from_matrix(m), v.tail<3>());
}

}  // namespace locomani::geom
