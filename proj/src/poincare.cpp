#include "sqf/poincare.hpp"

#include <cmath>

namespace sqf::poincare {

namespace {

const Eigen::Matrix2cd& sigma(int mu) {
  static const std::array<Eigen::Matrix2cd, 4> s = [] {
    std::array<Eigen::Matrix2cd, 4> a;
    const Complex i(0, 1);
    a[0] << 1, 0, 0, 1;
    a[1] << 0, 1, 1, 0;
    a[2] << 0, -i, i, 0;
    a[3] << 1, 0, 0, -1;
    return a;
  }();
  return s[static_cast<size_t>(mu)];
}

}  // namespace

std::string orbit_name(OrbitKind k) {
  switch (k) {
    case OrbitKind::TimelikeForward: return "timelike-forward";
    case OrbitKind::TimelikeBackward: return "timelike-backward";
    case OrbitKind::LightlikeForward: return "lightlike-forward";
    case OrbitKind::LightlikeBackward: return "lightlike-backward";
    case OrbitKind::Spacelike: return "spacelike";
    case OrbitKind::Origin: return "origin";
  }
  return "?";
}

double pairing(const FourVector& k, const FourVector& g) {
  return k[0] * g[0] - k[1] * g[1] - k[2] * g[2] - k[3] * g[3];
}

Eigen::Matrix4d covering_map(const SL2& h) {
  // delta(h)_{mu,nu} = (1/2) tr(sigma_mu h sigma_nu h*); real by construction.
  Eigen::Matrix4d d;
  const Eigen::Matrix2cd hs = h.m.adjoint();
  for (int nu = 0; nu < 4; ++nu) {
    const Eigen::Matrix2cd img = h.m * sigma(nu) * hs;
    for (int mu = 0; mu < 4; ++mu) {
      d(mu, nu) = 0.5 * (sigma(mu) * img).trace().real();
    }
  }
  return d;
}

FourVector apply_lorentz(const Eigen::Matrix4d& L, const FourVector& p) {
  return FourVector::from_eigen(L * p.as_eigen());
}

OrbitSpec classify_orbit(const FourVector& p, double tol) {
  const double q = minkowski_norm2(p);
  const double mag = std::max({std::abs(p[0]), std::abs(p[1]),
                               std::abs(p[2]), std::abs(p[3])});
  if (mag <= tol) return {OrbitKind::Origin, 0.0};
  if (std::abs(q) <= tol) {
    return {p[0] > 0 ? OrbitKind::LightlikeForward
                     : OrbitKind::LightlikeBackward, 0.0};
  }
  if (q > 0) {
    return {p[0] > 0 ? OrbitKind::TimelikeForward
                     : OrbitKind::TimelikeBackward, std::sqrt(q)};
  }
  return {OrbitKind::Spacelike, 0.0};
}

SL2 e2_embed(const E2Element& e) {
  Eigen::Matrix2cd m;
  m << e.z, e.a, Complex(0, 0), Complex(1, 0) / e.z;
  return SL2(m);
}

E2Element e2_mul(const E2Element& g1, const E2Element& g2) {
  const Eigen::Matrix2cd prod = e2_embed(g1).m * e2_embed(g2).m;
  return E2Element(prod(0, 0), prod(0, 1));
}

double measure_weight(const FourVector& p) {
  const double r2 = p.spatial_norm2();
  require(r2 > 0, "measure_weight: cone tip has no density");
  return 1.0 / (2.0 * std::sqrt(r2));
}

PoincareElement group_mul(const PoincareElement& g1,
                          const PoincareElement& g2) {
  return {g1.h * g2.h,
          g1.x + apply_lorentz(covering_map(g1.h), g2.x)};
}

PoincareElement group_inv(const PoincareElement& g) {
  const SL2 hinv = g.h.inverse();
  return {hinv, -apply_lorentz(covering_map(hinv), g.x)};
}

SL2 boost_z(double xi) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::exp(0.5 * xi);
  m(1, 1) = std::exp(-0.5 * xi);
  return SL2(m);
}

SL2 rotation(double theta, const Eigen::Vector3d& axis) {
  const double n = axis.norm();
  require(n > 0, "rotation: zero axis");
  const Eigen::Vector3d u = axis / n;
  const Complex i(0, 1);
  Eigen::Matrix2cd gen =
      u(0) * sigma(1) + u(1) * sigma(2) + u(2) * sigma(3);
  return SL2(std::cos(theta / 2) * Eigen::Matrix2cd::Identity() -
             i * std::sin(theta / 2) * gen);
}

SL2 cone_section(const FourVector& p) {
  const double r = std::sqrt(p.spatial_norm2());
  require(r > 0 && p[0] > 0, "cone_section: need a forward cone point");
  const SL2 b = boost_z(std::log(p[0]));
  const Eigen::Vector3d n(p[1] / r, p[2] / r, p[3] / r);
  const Eigen::Vector3d zhat(0, 0, 1);
  const double cz = n(2);
  if (cz > 1.0 - 1e-14) return b;
  if (cz < -1.0 + 1e-14) return rotation(M_PI, {1, 0, 0}) * b;
  const Eigen::Vector3d axis = zhat.cross(n);
  return rotation(std::acos(std::clamp(cz, -1.0, 1.0)), axis) * b;
}

SL2 random_sl2(Rng& rng, double scale) {
  for (;;) {
    Eigen::Matrix2cd g = rng.cnormal_matrix(2, 2) * scale;
    g += Eigen::Matrix2cd::Identity();
    const Complex det = g.determinant();
    if (std::abs(det) < 0.2) continue;
    return SL2(g / std::sqrt(det));
  }
}

E2Element random_e2(Rng& rng, double a_scale) {
  const double th = rng.uniform(0, 2 * M_PI);
  return E2Element(std::polar(1.0, th), rng.cnormal() * a_scale);
}

FourVector random_cone_point(Rng& rng, double log_scale) {
  Eigen::Vector3d n(rng.normal(), rng.normal(), rng.normal());
  while (n.norm() < 1e-6) n = {rng.normal(), rng.normal(), rng.normal()};
  n.normalize();
  const double r = std::exp(rng.uniform(-log_scale, log_scale));
  return {r, r * n(0), r * n(1), r * n(2)};
}

double measure_invariance_mc(const SL2& h, std::size_t samples, Rng& rng) {
  // Importance sample p-vec from a shifted Gaussian proposal; the estimator
  // for int f dbeta uses weight measure_weight(p)/q(p).  The same draw feeds
  // both integrands, so the two estimates share their sampling noise.
  const Eigen::Matrix4d Linv = covering_map(h.inverse());
  const Eigen::Vector3d center(0.25, -0.15, 0.6);
  const double s = 1.1;  // proposal std dev per axis
  const auto propose_logpdf = [&](const Eigen::Vector3d& v) {
    return -(v - center).squaredNorm() / (2 * s * s) -
           3.0 * std::log(s * std::sqrt(2 * M_PI));
  };
  const auto f = [](const FourVector& p) {
    const double dx = p[1] - 0.3, dy = p[2] + 0.2, dz = p[3] - 0.7;
    return std::exp(-(dx * dx + dy * dy + dz * dz));
  };
  double acc0 = 0.0, acc1 = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    Eigen::Vector3d v = center + s * Eigen::Vector3d(rng.normal(),
                                                     rng.normal(),
                                                     rng.normal());
    const double r = v.norm();
    if (r < 1e-12) continue;
    const FourVector p(r, v(0), v(1), v(2));
    const double w = measure_weight(p) * std::exp(-propose_logpdf(v));
    acc0 += w * f(p);
    acc1 += w * f(apply_lorentz(Linv, p));
  }
  const double i0 = acc0 / static_cast<double>(samples);
  const double i1 = acc1 / static_cast<double>(samples);
  return std::abs(i1 - i0) / std::abs(i0);
}

}  // namespace sqf::poincare
