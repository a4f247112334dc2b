#include "sqf/spinbundle.hpp"

#include <cmath>

namespace sqf::spinbundle {

namespace {

void fix_phase(Eigen::Ref<Eigen::Vector4cd> col) {
  int lead = -1;
  double best = 1e-10;
  for (int i = 0; i < 4; ++i) {
    if (std::abs(col(i)) > best) {
      lead = i;
      best = std::abs(col(i));
      break;  // first sizeable component wins
    }
  }
  if (lead < 0) return;
  col *= std::conj(col(lead)) / std::abs(col(lead));
}

}  // namespace

Fiber fiber_at(const FourVector& p, double svd_threshold) {
  const auto orbit = poincare::classify_orbit(p);
  require(orbit.kind == poincare::OrbitKind::LightlikeForward,
          "fiber_at: p must be a nonzero forward light-cone point");
  const Eigen::Matrix4cd slash = clifford::momentum_slash(p);
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(slash, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = svd_threshold * sv(0);
  int kdim = 0;
  for (int i = 0; i < 4; ++i)
    if (sv(i) <= cut) ++kdim;
  Eigen::MatrixXcd basis = svd.matrixV().rightCols(kdim);

  // Deterministic ordering: chirality expectation descending, then phase fix.
  const Eigen::Matrix4cd& gam = clifford::make_gammas().chirality;
  std::vector<int> order(static_cast<size_t>(kdim));
  std::vector<double> chi(static_cast<size_t>(kdim));
  for (int j = 0; j < kdim; ++j) {
    order[static_cast<size_t>(j)] = j;
    chi[static_cast<size_t>(j)] =
        (basis.col(j).adjoint() * gam * basis.col(j))(0).real();
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return chi[static_cast<size_t>(a)] >
                                              chi[static_cast<size_t>(b)]; });
  Eigen::MatrixXcd sorted(4, kdim);
  for (int j = 0; j < kdim; ++j) sorted.col(j) = basis.col(order[static_cast<size_t>(j)]);
  for (int j = 0; j < kdim; ++j) {
    Eigen::Vector4cd c = sorted.col(j);
    fix_phase(c);
    sorted.col(j) = c;
  }
  return Fiber{p, sorted};
}

Eigen::Matrix4cd fiber_projector(const FourVector& p) {
  const double r = std::sqrt(p.spatial_norm2());
  require(r > 0, "fiber_projector: cone tip");
  const Eigen::Vector3d n(p[1] / r, p[2] / r, p[3] / r);
  const Complex i(0, 1);
  Eigen::Matrix2cd nsig;
  nsig << n(2), Complex(n(0), -n(1)), Complex(n(0), n(1)), -n(2);
  const Eigen::Matrix2cd up = 0.5 * (Eigen::Matrix2cd::Identity() - nsig);
  const Eigen::Matrix2cd dn = 0.5 * (Eigen::Matrix2cd::Identity() + nsig);
  Eigen::Matrix4cd pr = Eigen::Matrix4cd::Zero();
  pr.block<2, 2>(0, 0) = up;
  pr.block<2, 2>(2, 2) = dn;
  return pr;
}

Eigen::Matrix4cd helicity_projector(const FourVector& p, int sign) {
  Eigen::Matrix4cd pr = fiber_projector(p);
  if (sign > 0) {
    pr.block<2, 2>(2, 2).setZero();
  } else {
    pr.block<2, 2>(0, 0).setZero();
  }
  return pr;
}

MassiveFiberPair massive_basis(double m) {
  require(m >= 0, "massive_basis: m must be nonnegative");
  MassiveFiberPair out;
  out.m = m;
  const double root = std::sqrt(1.0 + m * m);
  out.p = {root, 1, 0, 0};
  const double big = 0.5 * (1.0 + root);
  out.v1 = Eigen::Vector4cd::Zero();
  out.v2 = Eigen::Vector4cd::Zero();
  out.v1(0) = 0.5 * m;
  out.v1(2) = big;
  out.v2(3) = 0.5 * m;
  out.v2(1) = big;
  return out;
}

double principal_angle(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const auto orth = [](const Eigen::MatrixXcd& m) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
    Eigen::MatrixXcd q = qr.householderQ();
    return Eigen::MatrixXcd(q.leftCols(m.cols()));
  };
  const Eigen::MatrixXcd qa = orth(a), qb = orth(b);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(qa.adjoint() * qb);
  const double c = std::clamp(svd.singularValues().minCoeff(), -1.0, 1.0);
  return std::acos(c);
}

std::pair<Fiber, Fiber> helicity_split(const Fiber& f) {
  const Eigen::Matrix4cd& gam = clifford::make_gammas().chirality;
  // Invariance: Gamma maps the fiber into itself.
  const Eigen::MatrixXcd img = gam * f.basis;
  const Eigen::MatrixXcd back = f.basis * (f.basis.adjoint() * img);
  require((img - back).norm() <= 1e-10 * std::max(1.0, img.norm()),
          "helicity_split: fiber is not chirality-invariant");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(f.basis.adjoint() * gam *
                                                     f.basis);
  std::vector<Eigen::Vector4cd> plus, minus;
  for (int j = 0; j < f.dim(); ++j) {
    Eigen::Vector4cd v = f.basis * es.eigenvectors().col(j);
    fix_phase(v);
    if (es.eigenvalues()(j) > 0)
      plus.push_back(v);
    else
      minus.push_back(v);
  }
  const auto pack = [&](const std::vector<Eigen::Vector4cd>& cols) {
    Eigen::MatrixXcd m(4, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) m.col(static_cast<int>(j)) = cols[j];
    return Fiber{f.p, m};
  };
  return {pack(plus), pack(minus)};
}

std::pair<FourVector, Eigen::Vector4cd> bundle_action(
    const SL2& h, const FourVector& p, const Eigen::Vector4cd& v) {
  const double scale = std::max(1.0, v.norm() * std::max(1.0, std::abs(p[0])));
  require((clifford::momentum_slash(p) * v).norm() <= 1e-8 * scale,
          "bundle_action: spinor violates the fiber constraint");
  const FourVector q = poincare::apply_lorentz(poincare::covering_map(h), p);
  return {q, clifford::spin_rep(h.star_inverse()) * v};
}

Complex fiber_inner(const FourVector& p, const Eigen::Vector4cd& v,
                    const Eigen::Vector4cd& w) {
  require(p[0] > 0, "fiber_inner: requires p0 > 0");
  return v.dot(w) / p[0];
}

}  // namespace sqf::spinbundle
