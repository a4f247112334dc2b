#include "sqf/induce.hpp"

#include <cmath>

#include "sqf/clifford.hpp"

namespace sqf::induce {

Section gaussian_section(const Eigen::Vector3d& center, double width,
                         int helicity, const Eigen::Vector4cd& reference,
                         std::vector<FourVector> samples) {
  require(width > 0, "gaussian_section: width must be positive");
  const Eigen::Vector4cd ref = reference;
  const Eigen::Vector3d c = center;
  const double w2 = 2.0 * width * width;
  auto eval = [=](const FourVector& p) -> Eigen::Vector4cd {
    const Eigen::Vector3d v(p[1], p[2], p[3]);
    const double amp = std::exp(-(v - c).squaredNorm() / w2);
    const Eigen::Matrix4cd proj =
        (helicity == 0) ? spinbundle::fiber_projector(p)
                        : spinbundle::helicity_projector(p, helicity);
    return amp * (proj * ref);
  };
  return Section{eval, std::move(samples)};
}

std::vector<FourVector> default_samples(Rng& rng, int count) {
  std::vector<FourVector> pts;
  pts.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i)
    pts.push_back(poincare::random_cone_point(rng, 1.0));
  return pts;
}

double section_constraint_residual(const Section& s) {
  double worst = 0.0;
  for (const auto& p : s.samples) {
    const Eigen::Vector4cd v = s.eval(p);
    worst = std::max(worst, (clifford::momentum_slash(p) * v).norm() /
                                std::max(1.0, std::abs(p[0]) * v.norm()));
  }
  return worst;
}

Section induced_apply(const SL2& h, const FourVector& x, const Section& s) {
  const Eigen::Matrix4d linv = poincare::covering_map(h.inverse());
  const Eigen::Matrix4cd spin = clifford::spin_rep(h.star_inverse());
  auto inner = s.eval;
  auto eval = [linv, spin, x, inner](const FourVector& p) -> Eigen::Vector4cd {
    const Complex phase =
        std::exp(Complex(0, 1) * poincare::pairing(x, p));
    return phase * (spin * inner(poincare::apply_lorentz(linv, p)));
  };
  return Section{eval, s.samples};
}

Section induced_apply(const PoincareElement& g, const Section& s) {
  return induced_apply(g.h, g.x, s);
}

PVMRegion box_region(const FourVector& lo, const FourVector& hi) {
  auto pred = [lo, hi](const FourVector& p) {
    for (int i = 1; i < 4; ++i)
      if (p[i] < lo[i] || p[i] > hi[i]) return false;
    return true;
  };
  return PVMRegion{pred, "box"};
}

PVMRegion halfspace_region(const FourVector& normal, double offset) {
  auto pred = [normal, offset](const FourVector& p) {
    return normal[1] * p[1] + normal[2] * p[2] + normal[3] * p[3] >= offset;
  };
  return PVMRegion{pred, "halfspace"};
}

PVMRegion everything() {
  return PVMRegion{[](const FourVector&) { return true; }, "all"};
}

PVMRegion transform_region(const PoincareElement& g, const PVMRegion& e) {
  const Eigen::Matrix4d linv = poincare::covering_map(g.h.inverse());
  auto inner = e.predicate;
  auto pred = [linv, inner](const FourVector& p) {
    return inner(poincare::apply_lorentz(linv, p));
  };
  return PVMRegion{pred, "g." + e.label};
}

Section pvm_apply(const PVMRegion& e, const Section& s) {
  auto inner = s.eval;
  auto pred = e.predicate;
  auto eval = [pred, inner](const FourVector& p) -> Eigen::Vector4cd {
    return pred(p) ? inner(p) : Eigen::Vector4cd::Zero().eval();
  };
  return Section{eval, s.samples};
}

double imprimitivity_check(const PoincareElement& g, const PVMRegion& e,
                           const Section& s,
                           const std::vector<FourVector>& points) {
  const Section lhs =
      induced_apply(g, pvm_apply(e, induced_apply(poincare::group_inv(g), s)));
  const Section rhs = pvm_apply(transform_region(g, e), s);
  double worst = 0.0;
  for (const auto& p : points)
    worst = std::max(worst, (lhs.eval(p) - rhs.eval(p)).norm());
  return worst;
}

ConeQuadrature cone_quadrature(int nr, int ntheta, int nphi, double r_max) {
  // Gauss-Legendre nodes/weights by Newton iteration on P_n.
  const auto gauss_legendre = [](int n) {
    std::vector<std::pair<double, double>> nw(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double pp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        pp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / pp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      nw[static_cast<size_t>(i)] = {x, 2.0 / ((1.0 - x * x) * pp * pp)};
    }
    return nw;
  };

  const auto rad = gauss_legendre(nr);
  const auto ang = gauss_legendre(ntheta);
  ConeQuadrature q;
  q.nodes.reserve(static_cast<size_t>(nr * ntheta * nphi));
  q.weights.reserve(q.nodes.capacity());
  for (const auto& [xr, wr] : rad) {
    const double r = 0.5 * r_max * (xr + 1.0);
    const double wrad = 0.5 * r_max * wr;
    for (const auto& [ct, wt] : ang) {
      const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      for (int k = 0; k < nphi; ++k) {
        const double phi = 2.0 * M_PI * k / nphi;
        const FourVector p(r, r * st * std::cos(phi), r * st * std::sin(phi),
                           r * ct);
        // dbeta = (1/(2 r)) r^2 dr dOmega = (r/2) dr dcos(theta) dphi
        q.nodes.push_back(p);
        q.weights.push_back(wrad * wt * (2.0 * M_PI / nphi) * (r / 2.0));
      }
    }
  }
  return q;
}

double section_norm2(const Section& s, const ConeQuadrature& q) {
  double acc = 0.0;
  for (size_t i = 0; i < q.nodes.size(); ++i) {
    const Eigen::Vector4cd v = s.eval(q.nodes[i]);
    acc += q.weights[i] *
           spinbundle::fiber_inner(q.nodes[i], v, v).real();
  }
  return acc;
}

// ---------------------------------------------------------------------------

namespace {

void require_hermitian(const Eigen::MatrixXcd& h) {
  require((h - h.adjoint()).norm() <= 1e-12 * std::max(1.0, h.norm()),
          "first_order_cocycle: block Hamiltonians must be Hermitian");
}

Eigen::MatrixXcd unitary_exp(const Eigen::MatrixXcd& h, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXcd ph(h.rows());
  for (int i = 0; i < h.rows(); ++i)
    ph(i) = std::exp(Complex(0, -t * es.eigenvalues()(i)));
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

Eigen::VectorXcd first_order_cocycle(double t,
                                     const FirstOrderCocycleSpec& spec) {
  Eigen::Index total = spec.u0.size();
  for (const auto& [h, u] : spec.blocks) {
    require(h.rows() == u.size(), "first_order_cocycle: block shape mismatch");
    require_hermitian(h);
    total += u.size();
  }
  Eigen::VectorXcd v(total);
  v.head(spec.u0.size()) = t * spec.u0;
  Eigen::Index at = spec.u0.size();
  for (const auto& [h, u] : spec.blocks) {
    v.segment(at, u.size()) = unitary_exp(h, t) * u - u;
    at += u.size();
  }
  return v;
}

Eigen::MatrixXcd cocycle_translation(double t,
                                     const FirstOrderCocycleSpec& spec) {
  Eigen::Index total = spec.u0.size();
  for (const auto& [h, u] : spec.blocks) total += u.size();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(total, total);
  Eigen::Index at = spec.u0.size();
  for (const auto& [h, vec] : spec.blocks) {
    require_hermitian(h);
    u.block(at, at, vec.size(), vec.size()) = unitary_exp(h, t);
    at += vec.size();
  }
  return u;
}

fock::WeylElement e2_weyl_homomorphism(const PoincareElement& g,
                                       double kappa) {
  const Eigen::Matrix2cd& hm = g.h.m;
  require(std::abs(hm(1, 0)) <= 1e-9, "e2_weyl_homomorphism: not little-group");
  const Complex z = hm(0, 0);
  const Complex a = hm(0, 1);
  require(std::abs(std::abs(z) - 1.0) <= 1e-9,
          "e2_weyl_homomorphism: |z| must be 1");
  const Complex vz = kappa * a * z;  // first-order cocycle value, as C ~ R^2
  Eigen::VectorXcd v(2);
  v << Complex(vz.real(), 0), Complex(vz.imag(), 0);
  const double th = 2.0 * std::arg(z);
  Eigen::MatrixXcd u(2, 2);
  u << Complex(std::cos(th), 0), Complex(-std::sin(th), 0),
      Complex(std::sin(th), 0), Complex(std::cos(th), 0);
  const Complex chi =
      std::exp(Complex(0, 1) * poincare::pairing(poincare::base_point(), g.x));
  return fock::WeylElement{chi, fock::WeylOp(v, u)};
}

CocycleData make_cocycle_data(double kappa,
                              const std::vector<FourVector>& coset_points) {
  CocycleData cd;
  cd.x0 = poincare::base_point();
  cd.m = [kappa](const PoincareElement& g) {
    return e2_weyl_homomorphism(g, kappa);
  };
  cd.section_table.emplace_back(cd.x0, PoincareElement::identity());
  for (const auto& p : coset_points) {
    bool is_base = true;
    for (int i = 0; i < 4; ++i)
      is_base = is_base && std::abs(p[i] - cd.x0[i]) <= 1e-12;
    if (is_base) continue;
    cd.section_table.emplace_back(
        p, PoincareElement(poincare::cone_section(p), FourVector{}));
  }
  return cd;
}

FourVector coset_point(const CocycleData& cd, const PoincareElement& g) {
  return poincare::apply_lorentz(poincare::covering_map(g.h), cd.x0);
}

PoincareElement section_at(const CocycleData& cd, const FourVector& x) {
  for (const auto& [pt, el] : cd.section_table) {
    double diff = 0.0;
    for (int i = 0; i < 4; ++i) diff = std::max(diff, std::abs(pt[i] - x[i]));
    if (diff <= cd.lookup_tol) return el;
  }
  throw std::invalid_argument("section_at: coset not tabulated");
}

fock::WeylElement cocycle_b(const CocycleData& cd, const PoincareElement& g) {
  const PoincareElement c = section_at(cd, coset_point(cd, g));
  return cd.m(poincare::group_mul(poincare::group_inv(c), g));
}

fock::WeylElement strict_cocycle(const CocycleData& cd,
                                 const PoincareElement& g1,
                                 const PoincareElement& g2) {
  return cocycle_b(cd, poincare::group_mul(g1, g2)) *
         cocycle_b(cd, g2).inverse();
}

}  // namespace sqf::induce
