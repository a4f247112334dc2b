#pragma once

#include <Eigen/Dense>

#include "sqf/clifford.hpp"
#include "sqf/poincare.hpp"

namespace sqf::spinbundle {

using poincare::FourVector;
using poincare::SL2;

/// Fiber of the massless spinor bundle at a cone point: the kernel of
/// p.gamma, held as an orthonormal 4 x k column basis.
struct Fiber {
  FourVector p;
  Eigen::MatrixXcd basis;

  int dim() const { return static_cast<int>(basis.cols()); }
};

/// Kernel basis of p.gamma by SVD with a deterministic phase convention:
/// columns ordered by chirality (+1 sector first), first sizeable component
/// made real positive.  Throws unless p is forward light-like and nonzero.
Fiber fiber_at(const FourVector& p, double svd_threshold = 1e-8);

/// Closed-form orthogonal projector onto the fiber; cheap evaluation path for
/// section evaluators, cross-checked against the SVD basis in the tests.
Eigen::Matrix4cd fiber_projector(const FourVector& p);

/// Projectors onto the chirality +1 / -1 lines inside the fiber.
Eigen::Matrix4cd helicity_projector(const FourVector& p, int sign);

/// The explicit massive fiber pair at p(m) = (sqrt(1+m^2), 1, 0, 0):
///   v1 = (m/2) e1 + (1/2)(1 + sqrt(1+m^2)) e3,
///   v2 = (m/2) e4 + (1/2)(1 + sqrt(1+m^2)) e2,
/// in the axis-1 coordinate convention these formulas are written in.
struct MassiveFiberPair {
  double m;
  FourVector p;
  Eigen::Vector4cd v1, v2;
};

MassiveFiberPair massive_basis(double m);

/// Largest principal angle between the column spans of a and b.
double principal_angle(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Split a light-cone fiber into chirality eigenlines (+1 first).
/// Throws if the fiber is not chirality-invariant.
std::pair<Fiber, Fiber> helicity_split(const Fiber& f);

/// Bundle action (p, v) -> (delta(h) p, S(h^{*-1}) v).  The input spinor must
/// satisfy the fiber constraint at p to 1e-8.
std::pair<FourVector, Eigen::Vector4cd> bundle_action(
    const SL2& h, const FourVector& p, const Eigen::Vector4cd& v);

/// Fiber Hermitian form p0^{-1} <v, w>; positive definite on fibers and
/// invariant under the bundle action.
Complex fiber_inner(const FourVector& p, const Eigen::Vector4cd& v,
                    const Eigen::Vector4cd& w);

}  // namespace sqf::spinbundle
