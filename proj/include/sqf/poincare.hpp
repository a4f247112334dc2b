#pragma once

#include <array>
#include <string>

#include <Eigen/Dense>

#include "sqf/common.hpp"

namespace sqf::poincare {

/// Minkowski four-vector, natural units, signature (+,-,-,-).
struct FourVector {
  std::array<double, 4> c{0, 0, 0, 0};

  FourVector() = default;
  FourVector(double p0, double p1, double p2, double p3) : c{p0, p1, p2, p3} {}

  double operator[](int i) const { return c[static_cast<size_t>(i)]; }
  double& operator[](int i) { return c[static_cast<size_t>(i)]; }

  FourVector operator+(const FourVector& o) const {
    return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]};
  }
  FourVector operator-(const FourVector& o) const {
    return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]};
  }
  FourVector operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
  FourVector operator*(double s) const {
    return {s * c[0], s * c[1], s * c[2], s * c[3]};
  }

  double spatial_norm2() const {
    return c[1] * c[1] + c[2] * c[2] + c[3] * c[3];
  }
  Eigen::Vector4d as_eigen() const { return {c[0], c[1], c[2], c[3]}; }
  static FourVector from_eigen(const Eigen::Vector4d& v) {
    return {v(0), v(1), v(2), v(3)};
  }
};

/// Element of SL(2,C); unimodularity is enforced on construction.
struct SL2 {
  Eigen::Matrix2cd m;

  SL2() : m(Eigen::Matrix2cd::Identity()) {}
  explicit SL2(const Eigen::Matrix2cd& mat, double tol = kAlgebraTol)
      : m(mat) {
    require(std::abs(m.determinant() - Complex(1, 0)) <= 100 * tol,
            "SL2: determinant must be 1");
  }

  SL2 operator*(const SL2& o) const { return SL2(m * o.m); }
  SL2 inverse() const {
    Eigen::Matrix2cd inv;
    inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);  // adjugate, det = 1
    return SL2(inv);
  }
  /// h^{*-1}: inverse of the conjugate transpose.
  SL2 star_inverse() const { return SL2(m.adjoint().inverse()); }
};

/// Little-group element m_{z,a} = [[z, a], [0, 1/z]] with |z| = 1.
struct E2Element {
  Complex z;
  Complex a;

  E2Element(Complex z_, Complex a_) : z(z_), a(a_) {
    require(std::abs(std::abs(z) - 1.0) <= 1e-12, "E2Element: |z| must be 1");
  }
};

struct PoincareElement {
  SL2 h;
  FourVector x;

  PoincareElement() = default;
  PoincareElement(const SL2& h_, const FourVector& x_) : h(h_), x(x_) {}
  static PoincareElement identity() { return {}; }
};

enum class OrbitKind { TimelikeForward, TimelikeBackward, LightlikeForward,
                       LightlikeBackward, Spacelike, Origin };

struct OrbitSpec {
  OrbitKind kind;
  double mass;  // sqrt(max(<p,p>, 0)) when <p,p> >= 0, else 0
};

std::string orbit_name(OrbitKind k);

/// Character pairing {k,g} = k0 g0 - k1 g1 - k2 g2 - k3 g3.
double pairing(const FourVector& k, const FourVector& g);

/// Minkowski square <p,p> = {p,p}.
inline double minkowski_norm2(const FourVector& p) { return pairing(p, p); }

/// Double cover SL(2,C) -> SO(3,1)+, via X = x0 I + sum_k x_k sigma_k,
/// X -> h X h*.
Eigen::Matrix4d covering_map(const SL2& h);

FourVector apply_lorentz(const Eigen::Matrix4d& L, const FourVector& p);

OrbitSpec classify_orbit(const FourVector& p, double tol = 1e-10);

/// Embed m_{z,a} as the upper-triangular SL2 matrix stabilizing (1,0,0,1).
SL2 e2_embed(const E2Element& e);

/// Composition in intrinsic (z,a) coordinates, read off from the matrix
/// product of the embeddings.
E2Element e2_mul(const E2Element& g1, const E2Element& g2);

/// Invariant-measure density on the forward light cone with respect to
/// dp1 dp2 dp3: 1 / (2 sqrt(p1^2+p2^2+p3^2)) = 1/(2 p0).
double measure_weight(const FourVector& p);

PoincareElement group_mul(const PoincareElement& g1, const PoincareElement& g2);
PoincareElement group_inv(const PoincareElement& g);

/// z-boost of rapidity xi: diag(e^{xi/2}, e^{-xi/2}).
SL2 boost_z(double xi);

/// SU(2) rotation by angle theta about a (not necessarily unit) axis.
SL2 rotation(double theta, const Eigen::Vector3d& axis);

/// SL2 element carrying the base point (1,0,0,1) to the cone point p:
/// a z-boost to the right energy followed by the rotation taking z-hat to
/// the direction of p.
SL2 cone_section(const FourVector& p);

inline FourVector base_point() { return {1, 0, 0, 1}; }

// Random generators used across suites.
SL2 random_sl2(Rng& rng, double scale = 1.0);
E2Element random_e2(Rng& rng, double a_scale = 1.0);
FourVector random_cone_point(Rng& rng, double log_scale = 1.5);

/// Monte Carlo check of boost invariance of the cone measure:
/// compares importance-sampled estimates of  int f(L^{-1} p) dbeta  and
/// int f(p) dbeta  for a Gaussian f.  Returns |I1 - I0| / |I0|.
double measure_invariance_mc(const SL2& h, std::size_t samples, Rng& rng);

}  // namespace sqf::poincare
