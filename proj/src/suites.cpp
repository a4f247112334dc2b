#include <chrono>
#include <cmath>
#include <future>
#include <sstream>

#include "sqf/clifford.hpp"
#include "sqf/common.hpp"
#include "sqf/fock.hpp"
#include "sqf/induce.hpp"
#include "sqf/poincare.hpp"
#include "sqf/qstoch.hpp"
#include "sqf/report.hpp"
#include "sqf/spinbundle.hpp"
#include "sqf/supergrade.hpp"
#include "sqf/susy.hpp"

namespace sqf::cli {

namespace {

using poincare::FourVector;
using poincare::PoincareElement;
using poincare::SL2;

struct Collector {
  Report rep;

  void add(const std::string& name, double residual, double tol,
           std::string details = "") {
    rep.checks.push_back(
        {name, residual <= tol, residual, tol, std::move(details)});
  }
  void structural(const std::string& name, bool ok,
                  std::string details = "") {
    rep.checks.push_back({name, ok, ok ? 0.0 : 1.0, 0.0, std::move(details)});
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// ---------------------------------------------------------------------------

namespace sg = supergrade;

sg::GradedOperator random_graded(Rng& rng, int d0, int d1, bool odd) {
  if (odd)
    return sg::GradedOperator::odd_op(d0, d1, rng.cnormal_matrix(d0, d1),
                                      rng.cnormal_matrix(d1, d0));
  return sg::GradedOperator::even_op(rng.cnormal_matrix(d0, d0),
                                     rng.cnormal_matrix(d1, d1));
}

sg::GradedVector random_homogeneous(Rng& rng, int d0, int d1, bool odd) {
  if (odd) return sg::GradedVector::make_odd(d0, rng.cnormal_vector(d1));
  return sg::GradedVector::make_even(rng.cnormal_vector(d0), d1);
}

void supergrade_suite(const SuiteConfig& cfg, Rng& rng, Collector& col) {
  const int trials = cfg.grid("trials");
  const double tol = cfg.tol("algebra");
  const int d0 = 3, d1 = 3;

  double sym = 0, ortho = 0, defining = 0, even_adj = 0, invol = 0;
  double anti = 0, triple = 0;
  bool parity_ok = true;
  for (int t = 0; t < trials; ++t) {
    const bool px = (rng.raw() & 1) != 0;
    const bool py = (rng.raw() & 1) != 0;
    const auto x = random_homogeneous(rng, d0, d1, px);
    const auto y = random_homogeneous(rng, d0, d1, py);
    const double sgn = (px && py) ? -1.0 : 1.0;
    sym = std::max(sym, std::abs(sg::super_form(y, x) -
                                 sgn * std::conj(sg::super_form(x, y))));
    if (px != py) ortho = std::max(ortho, std::abs(sg::super_form(x, y)));

    const bool pt = (rng.raw() & 1) != 0;
    const auto op = random_graded(rng, d0, d1, pt);
    const auto dag = sg::super_adjoint(op);
    const double sgn2 = (pt && px) ? -1.0 : 1.0;
    defining = std::max(
        defining, std::abs(sg::super_form(op.apply(x), y) -
                           sgn2 * sg::super_form(x, dag.apply(y))));
    invol = std::max(invol, (sg::super_adjoint(dag) - op).norm());
    if (!pt)
      even_adj = std::max(even_adj, (dag - op.hilbert_adjoint()).norm());

    const bool pb = (rng.raw() & 1) != 0;
    const auto opb = random_graded(rng, d0, d1, pb);
    const double sgn3 = (pt && pb) ? -1.0 : 1.0;
    anti = std::max(anti, (sg::super_bracket(op, opb) +
                           sg::super_bracket(opb, op).scaled(sgn3))
                              .norm());
    parity_ok = parity_ok &&
                sg::parity(sg::super_bracket(op, opb)) !=
                    sg::Parity::Mixed;

    const auto odd = random_graded(rng, d0, d1, true);
    triple = std::max(
        triple,
        sg::super_bracket(odd, sg::super_bracket(odd, odd)).norm());
  }
  col.add("super_form.graded_symmetry", sym, tol,
          "<y,x> = (-1)^{p(x)p(y)} conj<x,y>");
  col.add("super_form.cross_parity_vanishes", ortho, tol,
          "<x,y> = 0 on opposite parities");
  col.add("super_adjoint.defining_relation", defining, 50 * tol,
          "<Tx,y> = (-1)^{p(T)p(x)} <x,T+y>");
  col.add("super_adjoint.even_equals_hilbert", even_adj, tol,
          "even T+: blockwise Hilbert adjoint");
  col.add("super_adjoint.involution", invol, tol,
          "(T+)+ = +T, sign fixed by re-solving the relation");
  col.add("super_bracket.graded_antisymmetry", anti, 100 * tol,
          "[a,b] = -(-1)^{p(a)p(b)}[b,a]");
  col.add("super_bracket.odd_triple", triple, 1000 * tol,
          "[a,[a,a]] = 0 for odd a");
  col.structural("super_bracket.output_homogeneous", parity_ok,
                 "p([a,b]) = p(a)+p(b) mod 2");
}

// ---------------------------------------------------------------------------

void clifford_suite(const SuiteConfig& cfg, Rng& rng, Collector& col) {
  const int trials = cfg.grid("trials");
  const double tol = cfg.tol("algebra");
  const double htol = cfg.tol("homomorphism");
  const auto& gs = clifford::make_gammas();

  double clif = 0;
  const double eta[4] = {1, -1, -1, -1};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      Eigen::Matrix4cd lhs =
          gs.gamma[mu] * gs.gamma[nu] + gs.gamma[nu] * gs.gamma[mu];
      if (mu == nu) lhs -= 2 * eta[mu] * Eigen::Matrix4cd::Identity();
      clif = std::max(clif, lhs.cwiseAbs().maxCoeff());
    }
  col.add("gamma.anticommutation", clif, 0.0,
          "{g_mu, g_nu} = 2 eta_{mu nu} I, exact entries");

  Eigen::Vector4d diag_expect(1, 1, -1, -1);
  double gdiag = (gs.chirality - Eigen::Vector4cd(1, 1, -1, -1)
                                     .asDiagonal()
                                     .toDenseMatrix())
                     .norm();
  col.add("gamma.chirality_diagonal", gdiag, 0.0,
          "Gamma = i g0 g1 g2 g3 = diag(1,1,-1,-1)");

  double ganti = 0;
  for (int r = 0; r < 4; ++r)
    ganti = std::max(ganti, (gs.chirality * gs.gamma[r] +
                             gs.gamma[r] * gs.chirality)
                                .norm());
  col.add("gamma.chirality_anticommutes", ganti, 0.0,
          "Gamma g_r + g_r Gamma = 0");

  double hom = 0, comm = 0, intertwine = 0;
  for (int t = 0; t < trials; ++t) {
    const SL2 h1 = poincare::random_sl2(rng);
    const SL2 h2 = poincare::random_sl2(rng);
    hom = std::max(hom, (clifford::spin_rep(h1 * h2) -
                         clifford::spin_rep(h1) * clifford::spin_rep(h2))
                            .norm());
    comm = std::max(comm, (clifford::spin_rep(h1) * gs.chirality -
                           gs.chirality * clifford::spin_rep(h1))
                              .norm());
    const FourVector p = poincare::random_cone_point(rng);
    const Eigen::Matrix4cd s = clifford::spin_rep(h1.star_inverse());
    const FourVector q =
        poincare::apply_lorentz(poincare::covering_map(h1), p);
    intertwine =
        std::max(intertwine, (s * clifford::momentum_slash(p) * s.inverse() -
                              clifford::momentum_slash(q))
                                 .norm());
  }
  col.add("spin_rep.homomorphism", hom, htol, "S(h1 h2) = S(h1) S(h2)");
  col.add("spin_rep.chirality_commutes", comm, tol, "[S(h), Gamma] = 0");
  col.add("spin_rep.vector_intertwining", intertwine, 1e-8,
          "S(h*^-1)(p.g)S(h*^-1)^-1 = (delta(h)p).g");

  const auto cf = clifford::majorana_form({1, 0, 0, 1});
  double symm = 0, qmin = 0;
  for (int t = 0; t < 10 * trials; ++t) {
    Eigen::Vector4d x1, x2;
    for (int i = 0; i < 4; ++i) {
      x1(i) = rng.normal();
      x2(i) = rng.normal();
    }
    symm = std::max(symm, std::abs(clifford::clifford_form(cf, x1, x2) -
                                   clifford::clifford_form(cf, x2, x1)));
    qmin = std::min(qmin, clifford::quadratic_form(cf, x1));
  }
  col.add("clifford_form.symmetry", symm, 0.0,
          "Phi(X1,X2) = Phi(X2,X1), table symmetrized");
  col.add("clifford_form.lightlike_positivity", std::max(0.0, -qmin), tol,
          "Q_lambda >= 0 on the forward light-like model");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(
      clifford::quadratic_gram(cf));
  col.add("clifford_form.gram_psd", std::max(0.0, -es.eigenvalues()(0)), tol,
          "Gram eigenvalues " + fmt(es.eigenvalues()(0)) + ".." +
              fmt(es.eigenvalues()(3)));
}

// ---------------------------------------------------------------------------

void poincare_suite(const SuiteConfig& cfg, Rng& rng, Collector& col) {
  const int trials = cfg.grid("trials");
  const double htol = cfg.tol("homomorphism");

  col.structural(
      "pairing.examples",
      std::abs(poincare::pairing({1, 0, 0, 0}, {1, 0, 0, 0}) - 1.0) == 0 &&
          poincare::pairing({1, 0, 0, 1}, {1, 0, 0, 1}) == 0,
      "{k,k} = 1 timelike unit, 0 on the cone");

  double adj = 0, hom = 0, so31 = 0, orbit_inv = 0;
  const Eigen::Matrix4d eta =
      Eigen::Vector4d(1, -1, -1, -1).asDiagonal().toDenseMatrix();
  for (int t = 0; t < trials; ++t) {
    const SL2 h1 = poincare::random_sl2(rng);
    const SL2 h2 = poincare::random_sl2(rng);
    const Eigen::Matrix4d d1 = poincare::covering_map(h1);
    hom = std::max(hom, (poincare::covering_map(h1 * h2) -
                         d1 * poincare::covering_map(h2))
                            .norm());
    so31 = std::max(so31, (d1.transpose() * eta * d1 - eta).norm());
    so31 = std::max(so31, std::abs(d1.determinant() - 1.0));
    if (d1(0, 0) <= 0) so31 = std::max(so31, 1.0);

    FourVector x(rng.normal(), rng.normal(), rng.normal(), rng.normal());
    FourVector p(rng.normal(), rng.normal(), rng.normal(), rng.normal());
    adj = std::max(adj, std::abs(poincare::pairing(
                            poincare::apply_lorentz(d1, x),
                            poincare::apply_lorentz(d1, p)) -
                        poincare::pairing(x, p)));

    const FourVector cone = poincare::random_cone_point(rng);
    if (poincare::classify_orbit(poincare::apply_lorentz(d1, cone)).kind !=
        poincare::OrbitKind::LightlikeForward)
      orbit_inv = 1.0;
  }
  col.add("pairing.lorentz_adjoint", adj, htol, "{Lx, Lp} = {x, p}");
  col.add("covering.homomorphism", hom, htol, "delta(h1 h2) = delta(h1) delta(h2)");
  col.add("covering.lands_in_so31", so31, htol,
          "delta^T eta delta = eta, det = 1, delta00 > 0");
  col.add("covering.orbit_invariance", orbit_inv, 0.0,
          "classification invariant along the cone");

  const Eigen::Matrix4d id4 = Eigen::Matrix4d::Identity();
  double kernel =
      (poincare::covering_map(SL2(Eigen::Matrix2cd::Identity())) - id4)
          .norm() +
      (poincare::covering_map(SL2(-Eigen::Matrix2cd::Identity())) - id4)
          .norm();
  col.add("covering.kernel", kernel, cfg.tol("algebra"),
          "delta(+-I) = I4");

  const FourVector boosted = poincare::apply_lorentz(
      poincare::covering_map(poincare::boost_z(1.0)), {1, 0, 0, 1});
  const double e1 = std::exp(1.0);
  col.add("covering.boost_example",
          std::abs(boosted[0] - e1) + std::abs(boosted[3] - e1) +
              std::abs(boosted[1]) + std::abs(boosted[2]),
          1e-12, "diag(e^{1/2}, e^{-1/2}) sends (1,0,0,1) to (e,0,0,e)");

  col.structural(
      "orbit.examples",
      poincare::classify_orbit({2, 0, 0, 2}).kind ==
              poincare::OrbitKind::LightlikeForward &&
          poincare::classify_orbit({1, 0, 0, 0}).kind ==
              poincare::OrbitKind::TimelikeForward &&
          std::abs(poincare::classify_orbit({1, 0, 0, 0}).mass - 1.0) <
              1e-12 &&
          poincare::classify_orbit({0, 0, 0, 0}).kind ==
              poincare::OrbitKind::Origin &&
          poincare::classify_orbit({0, 1, 0, 0}).kind ==
              poincare::OrbitKind::Spacelike,
      "cone / hyperboloid / origin / spacelike tags");

  double fix = 0, e2hom = 0;
  for (int t = 0; t < trials; ++t) {
    const auto e = poincare::random_e2(rng);
    const auto f = poincare::random_e2(rng);
    const FourVector moved = poincare::apply_lorentz(
        poincare::covering_map(poincare::e2_embed(e)), {1, 0, 0, 1});
    fix = std::max(fix, std::abs(moved[0] - 1) + std::abs(moved[1]) +
                            std::abs(moved[2]) + std::abs(moved[3] - 1));
    e2hom = std::max(
        e2hom, (poincare::e2_embed(poincare::e2_mul(e, f)).m -
                (poincare::e2_embed(e) * poincare::e2_embed(f)).m)
                   .norm());
  }
  col.add("e2.fixes_base_point", fix, htol,
          "delta(m_{z,a}) (1,0,0,1) = (1,0,0,1)");
  col.add("e2.homomorphism", e2hom, htol,
          "embedding respects the group law");

  {
    const double th = 0.37;
    const Eigen::Matrix4d rot = poincare::covering_map(
        poincare::e2_embed(poincare::E2Element(std::polar(1.0, th), 0)));
    Eigen::Matrix4d expect = Eigen::Matrix4d::Identity();
    expect(1, 1) = std::cos(2 * th);
    expect(1, 2) = std::sin(2 * th);
    expect(2, 1) = -std::sin(2 * th);
    expect(2, 2) = std::cos(2 * th);
    col.add("e2.rotation_example", (rot - expect).norm(), 1e-12,
            "z = e^{i theta} acts as the angle-2theta rotation about axis 3");
  }

  double ident = 0, inv = 0, assoc = 0;
  for (int t = 0; t < trials; ++t) {
    const PoincareElement g(poincare::random_sl2(rng),
                            {rng.normal(), rng.normal(), rng.normal(),
                             rng.normal()});
    const PoincareElement g2(poincare::random_sl2(rng),
                             {rng.normal(), rng.normal(), rng.normal(),
                              rng.normal()});
    const PoincareElement g3(poincare::random_sl2(rng),
                             {rng.normal(), rng.normal(), rng.normal(),
                              rng.normal()});
    const auto gi = poincare::group_mul(g, PoincareElement::identity());
    ident = std::max(ident, (gi.h.m - g.h.m).norm() +
                                (gi.x - g.x).as_eigen().norm());
    const auto ginv = poincare::group_mul(g, poincare::group_inv(g));
    inv = std::max(inv, (ginv.h.m - Eigen::Matrix2cd::Identity()).norm() +
                            ginv.x.as_eigen().norm());
    const auto left =
        poincare::group_mul(poincare::group_mul(g, g2), g3);
    const auto right =
        poincare::group_mul(g, poincare::group_mul(g2, g3));
    assoc = std::max(assoc, (left.h.m - right.h.m).norm() +
                                (left.x - right.x).as_eigen().norm());
  }
  col.add("group.identity", ident, cfg.tol("algebra"), "g e = g");
  col.add("group.inverse", inv, cfg.tol("algebra"), "g g^-1 = e");
  col.add("group.associativity", assoc, htol, "(g1 g2) g3 = g1 (g2 g3)");

  col.add("measure.base_value",
          std::abs(poincare::measure_weight({1, 0, 0, 1}) - 0.5), 0.0,
          "density 1/(2 p0) at (1,0,0,1)");
  col.add("measure.scaled_value",
          std::abs(poincare::measure_weight({2, 0, 0, 2}) - 0.25), 0.0,
          "density 1/(2 p0) at (2,0,0,2)");
  col.add("measure.mc_boost_invariance",
          poincare::measure_invariance_mc(
              poincare::boost_z(0.5),
              static_cast<std::size_t>(cfg.grid("mc_samples")), rng),
          cfg.tol("mc_relative"),
          "importance-sampled Gaussian integral, rapidity-0.5 z-boost");
}

// ---------------------------------------------------------------------------

void spinbundle_suite(const SuiteConfig& cfg, Rng& rng, Collector& col) {
  const int trials = cfg.grid("trials");
  const double ftol = cfg.tol("fiber");

  bool dims_ok = true;
  double resid = 0, proj_gap = 0, gamma_inv = 0;
  for (int t = 0; t < trials; ++t) {
    const FourVector p = poincare::random_cone_point(rng);
    const auto fib = spinbundle::fiber_at(p);
    dims_ok = dims_ok && fib.dim() == 2;
    resid = std::max(resid,
                     (clifford::momentum_slash(p) * fib.basis).norm() /
                         std::max(1.0, std::abs(p[0])));
    proj_gap = std::max(proj_gap,
                        (fib.basis * fib.basis.adjoint() -
                         spinbundle::fiber_projector(p))
                            .norm());
    const auto& gam = clifford::make_gammas().chirality;
    const Eigen::MatrixXcd img = gam * fib.basis;
    gamma_inv = std::max(
        gamma_inv, (img - fib.basis * (fib.basis.adjoint() * img)).norm());
  }
  col.structural("fiber.dimension_two", dims_ok,
                 "kernel rank 2 at every sampled cone point");
  col.add("fiber.constraint_residual", resid, ftol, "(p.g) basis = 0");
  col.add("fiber.projector_consistency", proj_gap, 1e-10,
          "SVD basis matches the closed-form projector");
  col.add("fiber.chirality_invariance", gamma_inv, ftol,
          "Gamma maps fibers into themselves");

  {
    const auto fib = spinbundle::fiber_at({1, 0, 0, 1});
    Eigen::MatrixXcd e23 = Eigen::MatrixXcd::Zero(4, 2);
    e23(1, 0) = 1;
    e23(2, 1) = 1;
    col.add("fiber.base_point_span",
            spinbundle::principal_angle(fib.basis, e23), 1e-10,
            "fiber at (1,0,0,1) = span{e2, e3} in this basis");
  }

  {
    auto pair = spinbundle::massive_basis(0.0);
    double gap = (pair.v1 - Eigen::Vector4cd(0, 0, 1, 0)).norm() +
                 (pair.v2 - Eigen::Vector4cd(0, 1, 0, 0)).norm();
    col.add("massive.zero_mass_limit", gap, 0.0,
            "m = 0 gives exactly e3, e2");
    Eigen::MatrixXcd target(4, 2);
    target.setZero();
    target(1, 0) = 1;
    target(2, 1) = 1;
    double prev = 1e9;
    bool monotone = true;
    double last = 0;
    for (int k = 1; k <= 6; ++k) {
      const auto mb = spinbundle::massive_basis(std::pow(10.0, -k));
      Eigen::MatrixXcd span(4, 2);
      span.col(0) = mb.v1;
      span.col(1) = mb.v2;
      last = spinbundle::principal_angle(span, target);
      monotone = monotone && last < prev;
      prev = last;
    }
    col.structural("massive.angle_monotone", monotone,
                   "principal angle decreases along m = 1e-1..1e-6");
    col.add("massive.angle_at_1e6", last, 1e-5,
            "span angle to the massless fiber at m = 1e-6");
  }

  {
    const auto fib = spinbundle::fiber_at({1, 0, 0, 1});
    const auto [plus, minus] = spinbundle::helicity_split(fib);
    col.structural("helicity.sector_dims",
                   plus.dim() == 1 && minus.dim() == 1,
                   "one-dimensional +-1 chirality sectors");
    const auto& gam = clifford::make_gammas().chirality;
    col.add("helicity.eigenvectors",
            (gam * plus.basis - plus.basis).norm() +
                (gam * minus.basis + minus.basis).norm(),
            cfg.tol("algebra"), "Gamma v = +-v on the split");

    double char_resid = 0, blockdiag = 0;
    for (int t = 0; t < trials; ++t) {
      const auto e = poincare::random_e2(rng);
      const SL2 h = poincare::e2_embed(e);
      const Eigen::Matrix4cd s = clifford::spin_rep(h.star_inverse());
      const Complex zp = Complex(1, 0) / e.z;  // plus sector character
      const Complex zm = e.z;                  // minus sector character
      char_resid = std::max(
          char_resid, (s * plus.basis - zp * plus.basis).norm() +
                          (s * minus.basis - zm * minus.basis).norm());
      blockdiag = std::max(
          blockdiag, std::abs((plus.basis.adjoint() * s * minus.basis)(0)));
    }
    col.add("helicity.little_group_characters", char_resid, ftol,
            "m_{z,a} acts as z^{-1} on +, z on -");
    col.add("helicity.sectors_not_mixed", blockdiag, ftol,
            "S(h*^-1) block-diagonal in the helicity basis");
  }

  double preserve = 0, right_action = 0, inner_pos = 0, inner_inv = 0;
  for (int t = 0; t < trials; ++t) {
    const FourVector p = poincare::random_cone_point(rng);
    const auto fib = spinbundle::fiber_at(p);
    const Eigen::Vector4cd v = fib.basis * rng.cnormal_vector(2);
    const SL2 h = poincare::random_sl2(rng, 0.6);
    const auto [q, w] = spinbundle::bundle_action(h, p, v);
    preserve = std::max(preserve, (clifford::momentum_slash(q) * w).norm() /
                                      std::max(1.0, std::abs(q[0]) * w.norm()));

    const SL2 h2 = poincare::random_sl2(rng, 0.6);
    const auto [q2, w2] = spinbundle::bundle_action(h2, q, w);
    const auto [q21, w21] = spinbundle::bundle_action(h2 * h, p, v);
    right_action = std::max(right_action, (w2 - w21).norm() +
                                              (q2 - q21).as_eigen().norm());

    inner_pos = std::min(inner_pos,
                         spinbundle::fiber_inner(p, v, v).real() -
                             1e-14);  // strictly positive for nonzero v
    const auto el = poincare::random_e2(rng);
    const SL2 hl = poincare::e2_embed(el);
    const auto [ql, wl] = spinbundle::bundle_action(hl, p, v);
    const SL2 hb = poincare::boost_z(rng.uniform(-0.7, 0.7));
    const auto [qb, wb] = spinbundle::bundle_action(hb, p, v);
    inner_inv = std::max(
        inner_inv,
        std::abs(spinbundle::fiber_inner(ql, wl, wl).real() -
                 spinbundle::fiber_inner(p, v, v).real()) +
            std::abs(spinbundle::fiber_inner(qb, wb, wb).real() -
                     spinbundle::fiber_inner(p, v, v).real()));
  }
  col.add("bundle.fiber_preservation", preserve, 1e-9,
          "(delta(h)p, S(h*^-1)v) stays in the bundle");
  col.add("bundle.right_action", right_action, 1e-8,
          "acting by h1 then h2 equals acting by h2 h1");
  col.structural("fiber_inner.positive", inner_pos >= 0,
                 "p0^-1 <v,v> > 0 on nonzero fiber vectors");
  col.add("fiber_inner.invariance", inner_inv, ftol,
          "little-group and z-boost invariance of the fiber form");
}

// ---------------------------------------------------------------------------

void induce_suite(const SuiteConfig& cfg, Rng& rng, Collector& col) {
  const double itol = cfg.tol("imprimitivity");
  const double ctol = cfg.tol("cocycle");
  const int trials = cfg.grid("trials");

  auto samples = induce::default_samples(rng, 40);
  Eigen::Vector4cd ref(Complex(0.8, 0.1), Complex(0.2, -0.4),
                       Complex(-0.3, 0.5), Complex(0.4, 0.2));
  const induce::Section s =
      induce::gaussian_section({0.3, -0.2, 0.9}, 0.8, 0, ref, samples);

  col.add("section.fiber_constraint", induce::section_constraint_residual(s),
          1e-8, "evaluator lands in the fiber at every sample");

  {
    const induce::Section id_s = induce::induced_apply(
        SL2(Eigen::Matrix2cd::Identity()), FourVector{}, s);
    double gap = 0, modulus = 0;
    const FourVector shift(0.7, -0.4, 0.2, 0.1);
    const induce::Section trans = induce::induced_apply(
        SL2(Eigen::Matrix2cd::Identity()), shift, s);
    for (const auto& p : samples) {
      gap = std::max(gap, (id_s.eval(p) - s.eval(p)).norm());
      modulus = std::max(modulus, std::abs(trans.eval(p).norm() -
                                           s.eval(p).norm()));
    }
    col.add("induced.identity_pointwise", gap, 0.0, "U_{e,0} = id");
    col.add("induced.translation_modulus", modulus, itol,
            "pure translations only change the phase");
  }

  double comp = 0;
  for (int t = 0; t < 20; ++t) {
    const PoincareElement g1(poincare::random_sl2(rng, 0.5),
                             {rng.normal(), rng.normal(), rng.normal(),
                              rng.normal()});
    const PoincareElement g2(poincare::random_sl2(rng, 0.5),
                             {rng.normal(), rng.normal(), rng.normal(),
                              rng.normal()});
    const induce::Section lhs =
        induce::induced_apply(g1, induce::induced_apply(g2, s));
    const induce::Section rhs =
        induce::induced_apply(poincare::group_mul(g1, g2), s);
    for (const auto& p : samples)
      comp = std::max(comp, (lhs.eval(p) - rhs.eval(p)).norm());
  }
  col.add("induced.composition", comp, 1e-10,
          "U_{g1} U_{g2} = U_{g1 g2} pointwise");

  {
    const auto quad = induce::cone_quadrature(64, 48, 64, 12.0);
    const double base = induce::section_norm2(s, quad);
    double drift = 0;
    for (int t = 0; t < 6; ++t) {
      const SL2 h = poincare::e2_embed(poincare::random_e2(rng, 0.5));
      drift = std::max(drift,
                       std::abs(induce::section_norm2(
                                    induce::induced_apply(h, FourVector{}, s),
                                    quad) -
                                base) /
                           base);
      const SL2 hb = poincare::boost_z(rng.uniform(-0.5, 0.5));
      drift = std::max(
          drift, std::abs(induce::section_norm2(
                              induce::induced_apply(hb, FourVector{}, s),
                              quad) -
                          base) /
                     base);
    }
    col.add("induced.unitary_in_quadrature_norm", drift,
            cfg.tol("quadrature"),
            "little-group and z-boost elements preserve the sampled norm");
  }

  {
    const auto box = induce::box_region({0, -0.6, -0.6, 0.2},
                                        {0, 0.9, 0.7, 1.8});
    const induce::Section once = induce::pvm_apply(box, s);
    const induce::Section twice = induce::pvm_apply(box, once);
    double idem = 0;
    for (const auto& p : samples)
      idem = std::max(idem, (once.eval(p) - twice.eval(p)).norm());
    col.add("pvm.idempotent", idem, 0.0, "P_E^2 = P_E");

    const auto half = induce::halfspace_region({0, 1, 0, 0}, 0.1);
    const induce::Section inter = induce::pvm_apply(
        induce::PVMRegion{[&](const FourVector& p) {
                            return box.predicate(p) && half.predicate(p);
                          },
                          "box&half"},
        s);
    const induce::Section nested =
        induce::pvm_apply(box, induce::pvm_apply(half, s));
    double alg = 0;
    for (const auto& p : samples)
      alg = std::max(alg, (inter.eval(p) - nested.eval(p)).norm());
    col.add("pvm.intersection", alg, 0.0, "P_{E cap F} = P_E P_F");
  }

  {
    double translation = 0, rot = 0, random = 0;
    const auto points = induce::default_samples(rng, trials);
    const auto half = induce::halfspace_region({0, 1, 0, 0}, 0.0);
    translation = induce::imprimitivity_check(
        PoincareElement(SL2(Eigen::Matrix2cd::Identity()),
                        {0.4, 0.3, -0.2, 0.9}),
        half, s, points);
    rot = induce::imprimitivity_check(
        PoincareElement(poincare::rotation(M_PI / 2, {0, 0, 1}),
                        FourVector{}),
        half, s, points);
    for (int t = 0; t < trials; ++t) {
      const PoincareElement g(poincare::random_sl2(rng, 0.5),
                              {rng.normal(), rng.normal(), rng.normal(),
                               rng.normal()});
      FourVector lo(0, rng.uniform(-1.5, 0), rng.uniform(-1.5, 0),
                    rng.uniform(-1.5, 0));
      FourVector hi(0, lo[1] + rng.uniform(0.3, 2.0),
                    lo[2] + rng.uniform(0.3, 2.0),
                    lo[3] + rng.uniform(0.3, 2.0));
      random = std::max(random,
                        induce::imprimitivity_check(
                            g, induce::box_region(lo, hi), s,
                            {points[static_cast<size_t>(t) % points.size()]}));
    }
    col.add("imprimitivity.translation", translation, itol,
            "U commutes with momentum multiplication operators");
    col.add("imprimitivity.rotation_halfspace", rot, itol,
            "quarter-turn against {p1 > 0}");
    col.add("imprimitivity.random_triples", random, itol,
            "U_g P_E U_g^-1 = P_{g.E} pointwise");
  }

  {
    induce::FirstOrderCocycleSpec spec;
    spec.u0 = rng.cnormal_vector(2);
    for (int b = 0; b < 3; ++b) {
      Eigen::MatrixXcd h = rng.cnormal_matrix(2, 2);
      h = 0.5 * (h + h.adjoint()).eval();
      spec.blocks.emplace_back(h, rng.cnormal_vector(2));
    }
    col.add("cocycle.first_order_zero",
            induce::first_order_cocycle(0.0, spec).norm(), 0.0, "v(0) = 0");
    induce::FirstOrderCocycleSpec frozen = spec;
    for (auto& [h, u] : frozen.blocks) h.setZero();
    const Eigen::VectorXcd vt = induce::first_order_cocycle(1.7, frozen);
    col.add("cocycle.first_order_frozen_blocks",
            (vt.tail(6).norm()) + (vt.head(2) - 1.7 * frozen.u0).norm(), 0.0,
            "H_j = 0 leaves only the translation block");
    double ident = 0;
    for (int t = 0; t < trials; ++t) {
      const double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2);
      const Eigen::VectorXcd lhs = induce::first_order_cocycle(a + b, spec);
      const Eigen::VectorXcd rhs =
          induce::first_order_cocycle(a, spec) +
          induce::cocycle_translation(a, spec) *
              induce::first_order_cocycle(b, spec);
      ident = std::max(ident, (lhs - rhs).norm());
    }
    col.add("cocycle.first_order_identity", ident, cfg.tol("algebra"),
            "v(t+s) = v(t) + U_t v(s)");
  }

  {
    // Tabulate the cosets reached by the triples used below.
    std::vector<PoincareElement> gs;
    std::vector<FourVector> pts;
    for (int t = 0; t < 25; ++t) {
      gs.emplace_back(poincare::random_sl2(rng, 0.4),
                      FourVector(rng.normal(), rng.normal(), rng.normal(),
                                 rng.normal()));
    }
    const auto tmp = induce::make_cocycle_data(0.8, {});
    for (const auto& g1 : gs)
      for (const auto& g2 : gs) {
        pts.push_back(induce::coset_point(tmp, g2));
        pts.push_back(induce::coset_point(tmp, poincare::group_mul(g1, g2)));
      }
    const auto cd = induce::make_cocycle_data(0.8, pts);

    double hom_gap = 0;
    double b_restrict = 0, b_right = 0;
    for (int t = 0; t < trials; ++t) {
      const auto e1 = poincare::random_e2(rng);
      const auto e2 = poincare::random_e2(rng);
      const PoincareElement l1(poincare::e2_embed(e1),
                               {rng.normal(), rng.normal(), rng.normal(),
                                rng.normal()});
      const PoincareElement l2(poincare::e2_embed(e2),
                               {rng.normal(), rng.normal(), rng.normal(),
                                rng.normal()});
      hom_gap = std::max(
          hom_gap, fock::weyl_distance(cd.m(poincare::group_mul(l1, l2)),
                                       cd.m(l1) * cd.m(l2)));
      b_restrict = std::max(
          b_restrict, fock::weyl_distance(induce::cocycle_b(cd, l1),
                                          cd.m(l1)));
      const PoincareElement g = gs[static_cast<size_t>(t) % gs.size()];
      b_right = std::max(
          b_right,
          fock::weyl_distance(
              induce::cocycle_b(cd, poincare::group_mul(g, l1)),
              induce::cocycle_b(cd, g) * cd.m(l1)));
    }
    col.add("cocycle.m_is_homomorphism", hom_gap, ctol,
            "little-group Weyl family multiplies without phases");
    col.add("cocycle.b_restriction_exact", b_restrict, 0.0,
            "b coincides with m on the little group");
    col.add("cocycle.b_right_multiplication", b_right, ctol,
            "b(gh) = b(g) m(h)");

    double strict = 0;
    for (int t = 0; t < 50; ++t) {
      const auto& g1 = gs[static_cast<size_t>(rng.raw() % gs.size())];
      const auto& g2 = gs[static_cast<size_t>(rng.raw() % gs.size())];
      const FourVector x = induce::coset_point(tmp, g2);
      // f(g, x) = b(g c(x)) b(c(x))^-1, the strict cocycle on the orbit.
      const auto f = [&](const PoincareElement& g, const FourVector& at) {
        const auto c = induce::section_at(cd, at);
        return induce::strict_cocycle(cd, g, c);
      };
      const auto lhs = f(poincare::group_mul(g1, g2), cd.x0);
      const auto rhs = f(g1, induce::coset_point(tmp, g2)) *
                       f(g2, cd.x0);
      strict = std::max(strict, fock::weyl_distance(lhs, rhs));
      (void)x;
    }
    col.add("cocycle.strict_identity", strict, ctol,
            "f(g1 g2, x) = f(g1, g2.x) f(g2, x)");
  }
}

// ---------------------------------------------------------------------------

void fock_suite(const SuiteConfig& cfg, Rng& rng, Collector& col) {
  const double tol = cfg.tol("algebra");
  const int trials = cfg.grid("trials");

  {
    const Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(3);
    const Eigen::VectorXcd u = rng.cnormal_vector(3);
    Eigen::VectorXcd v = rng.cnormal_vector(3);
    v -= u * (u.dot(v) / u.squaredNorm());  // orthogonal to u
    double gap =
        std::abs(fock::exp_inner(fock::exp_vector(zero),
                                 fock::exp_vector(zero)) -
                 Complex(1, 0)) +
        std::abs(fock::exp_inner(fock::exp_vector(u), fock::exp_vector(u)) -
                 std::exp(Complex(u.squaredNorm(), 0))) +
        std::abs(fock::exp_inner(fock::exp_vector(u), fock::exp_vector(v)) -
                 Complex(1, 0));
    col.add("exp.kernel_values", gap, 1e-12,
            "<e(u),e(v)> = exp<u,v> on basic cases");

    double psd = 0;
    for (int t = 0; t < 10; ++t) {
      const int m = 4;
      Eigen::MatrixXcd gram(m, m);
      std::vector<Eigen::VectorXcd> us;
      for (int i = 0; i < m; ++i) us.push_back(rng.cnormal_vector(3));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          gram(i, j) = std::exp(us[static_cast<size_t>(i)].dot(
              us[static_cast<size_t>(j)]));
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
      psd = std::max(psd, std::max(0.0, -es.eigenvalues()(0)) /
                              es.eigenvalues().cwiseAbs().maxCoeff());
    }
    col.add("exp.gram_positive", psd, 1e-12,
            "exponential-vector Gram matrices are PSD");
  }

  double unitary = 0, multiplier = 0, displacement_comm = 0;
  for (int t = 0; t < trials; ++t) {
    const fock::WeylOp w1(rng.cnormal_vector(3), rng.random_unitary(3));
    const fock::WeylOp w2(rng.cnormal_vector(3), rng.random_unitary(3));
    fock::ExpVectorState x = fock::exp_vector(rng.cnormal_vector(3));
    fock::ExpVectorState y = fock::exp_vector(rng.cnormal_vector(3));
    x.terms.emplace_back(rng.cnormal(), rng.cnormal_vector(3));

    unitary = std::max(
        unitary, std::abs(fock::exp_inner(fock::weyl_apply(w1, x),
                                          fock::weyl_apply(w1, y)) -
                          fock::exp_inner(x, y)));

    // V_g V_h = exp(-i Im<v_g, U_g v_h>) W(v_g + U_g v_h, U_g U_h),
    // the multiplier identity that carries the projective phase.
    const auto [phase, comp] = fock::weyl_compose(w1, w2);
    const fock::ExpVectorState lhs =
        fock::weyl_apply(w1, fock::weyl_apply(w2, y));
    fock::ExpVectorState rhs = fock::weyl_apply(comp, y);
    for (auto& [c, uu] : rhs.terms) c *= phase;
    Complex diff = fock::exp_inner(x, lhs) - fock::exp_inner(x, rhs);
    multiplier = std::max(multiplier, std::abs(diff));

    // Pure displacements: W(u)W(w) = exp(-2i Im<u,w>) W(w)W(u).
    const fock::WeylOp d1 = fock::WeylOp::displacement(w1.v);
    const fock::WeylOp d2 = fock::WeylOp::displacement(w2.v);
    const Complex cphase =
        std::exp(Complex(0, -2) * w1.v.dot(w2.v).imag());
    fock::ExpVectorState swapped =
        fock::weyl_apply(d2, fock::weyl_apply(d1, y));
    for (auto& [c, uu] : swapped.terms) c *= cphase;
    displacement_comm = std::max(
        displacement_comm,
        std::abs(fock::exp_inner(x, fock::weyl_apply(d1,
                                                     fock::weyl_apply(d2, y))) -
                 fock::exp_inner(x, swapped)));
  }
  col.add("weyl.unitary", unitary, 1e-10,
          "<Wx,Wy> = <x,y> in exact kernel arithmetic");
  col.add("weyl.multiplier_identity", multiplier, 1e-10,
          "projective phase exp(+-i Im<v_g,U_g v_h>) via composition");
  col.add("weyl.displacement_commutation", displacement_comm, 1e-10,
          "CCR Weyl form on the displacement subgroup");

  {
    induce::FirstOrderCocycleSpec spec;
    spec.u0 = Eigen::VectorXcd::Zero(1);
    for (int b = 0; b < 2; ++b) {
      Eigen::MatrixXcd h = rng.cnormal_matrix(2, 2);
      h = 0.5 * (h + h.adjoint()).eval();
      spec.blocks.emplace_back(h, rng.cnormal_vector(2));
    }
    double proj = 0, phase_mod = 0;
    for (int t = 0; t < 20; ++t) {
      const double a = rng.uniform(-1.5, 1.5), b = rng.uniform(-1.5, 1.5);
      const fock::WeylOp va(induce::first_order_cocycle(a, spec),
                            induce::cocycle_translation(a, spec));
      const fock::WeylOp vb(induce::first_order_cocycle(b, spec),
                            induce::cocycle_translation(b, spec));
      const fock::WeylOp vab(induce::first_order_cocycle(a + b, spec),
                             induce::cocycle_translation(a + b, spec));
      const auto [phase, comp] = fock::weyl_compose(va, vb);
      proj = std::max(proj, (comp.v - vab.v).norm() + (comp.U - vab.U).norm());
      phase_mod = std::max(phase_mod, std::abs(std::abs(phase) - 1.0));
    }
    col.add("weyl.cocycle_projective_rep", proj, 1e-9,
            "V_a V_b = (phase) V_{a+b} through first-order cocycle data");
    col.add("weyl.cocycle_phase_modulus", phase_mod, 1e-12,
            "|projective phase| = 1");
  }

  {
    const int cutoff = cfg.cutoff("fock");
    fock::TruncatedFock f(1, cutoff);
    const auto ladder = fock::stone_ladder(f, Eigen::VectorXcd::Ones(1));
    const int d = f.dim();
    double rec =
        (ladder.a - 0.5 * (ladder.q + Complex(0, 1) * ladder.p)).norm() +
        (ladder.adag - 0.5 * (ladder.q - Complex(0, 1) * ladder.p)).norm();
    col.add("ladder.reconstruction", rec, 0.0,
            "a = (q+ip)/2 and a+ = (q-ip)/2 as matrices");
    const auto ladder_i =
        fock::stone_ladder(f, Complex(0, 1) * Eigen::VectorXcd::Ones(1));
    col.add("ladder.q_equals_p_of_ig", (ladder.q - ladder_i.p).norm(), 0.0,
            "q(g) = p(ig)");
    Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(d);
    vac(0) = 1;
    col.add("ladder.vacuum", (ladder.a * vac).norm(), 0.0, "a|0> = 0");
    col.add("ladder.matrix_element",
            std::abs((ladder.adag * vac)(1) - Complex(1, 0)), 0.0,
            "<1|a+|0> = 1");
    const Eigen::MatrixXcd comm =
        ladder.a * ladder.adag - ladder.adag * ladder.a;
    const Eigen::MatrixXcd trust = f.trusted_projector();
    col.add("ladder.ccr_trusted",
            (trust * (comm - Eigen::MatrixXcd::Identity(d, d)) * trust)
                .norm(),
            tol, "[a,a+] = I below the cutoff band");

    const auto [lam, jpar] = fock::parity_ops(f);
    col.add("parity.j_squared",
            (jpar * jpar - Eigen::MatrixXcd::Identity(d, d)).norm(), 0.0,
            "J^2 = I");
    col.add("parity.sign_on_3", std::abs(jpar(3, 3) - Complex(-1, 0)), 0.0,
            "J|3> = -|3>");
    col.add("parity.conjugates_ladder",
            (jpar * ladder.a * jpar + ladder.a).norm(), 0.0, "JaJ = -a");
    col.structural("parity.lambda_diag",
                   (lam - f.number()).norm() == 0.0,
                   "Lambda is the total occupation");
  }

  {
    const auto sf = fock::build_super_fock(2, 3);
    bool sym_ok = sf.sym_bases[0].cols() == 1 && sf.sym_bases[1].cols() == 2 &&
                  sf.sym_bases[2].cols() == 3 && sf.sym_bases[3].cols() == 4;
    bool asym_ok = sf.asym_bases[0].cols() == 1 &&
                   sf.asym_bases[1].cols() == 2 &&
                   sf.asym_bases[2].cols() == 1 &&
                   sf.asym_bases[3].cols() == 0;
    col.structural("superfock.symmetric_dims", sym_ok,
                   "d=2 tower dims 1,2,3,4 match C(d+n-1,n)");
    col.structural("superfock.antisymmetric_dims", asym_ok,
                   "d=2 tower dims 1,2,1,0 match C(d,n)");
    double idem = 0;
    for (int n = 1; n <= 3; ++n) {
      const auto ps = fock::symmetrizer(2, n);
      const auto pa = fock::antisymmetrizer(2, n);
      idem = std::max(idem, (ps * ps - ps).norm());
      idem = std::max(idem, (pa * pa - pa).norm());
    }
    col.add("superfock.projectors_idempotent", idem, tol,
            "P^2 = P for (anti)symmetrizers");
    const Eigen::VectorXcd u = rng.cnormal_vector(2);
    Eigen::VectorXcd uu(4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) uu(2 * i + j) = u(i) * u(j);
    col.add("superfock.antisymmetrize_uu",
            (fock::antisymmetrizer(2, 2) * uu).norm(), tol,
            "u (x) u dies in the odd sector");
    col.structural("superfock.grading",
                   sf.parity_diag().head(sf.even_dim).minCoeff() == 1.0 &&
                       sf.parity_diag().tail(sf.odd_dim).maxCoeff() == -1.0,
                   "+1 on the symmetric sector, -1 on the antisymmetric");
  }
}

// ---------------------------------------------------------------------------

void susy_suite(const SuiteConfig& cfg, Rng& rng, Collector& col) {
  const double tol = cfg.tol("algebra");
  (void)rng;

  {
    const auto hquad = [](double x) { return 0.5 * x * x; };
    const auto small = susy::witten_build(hquad, 64, -8, 8);
    const auto rep = susy::susy_verify(small, 3);
    col.add("witten.nilpotency", rep.nilpotency_q + rep.nilpotency_qdag, 0.0,
            "Q^2 = (Q+)^2 = 0 through the sigma-minus structure");
    col.add("witten.closure", rep.closure, tol,
            "{Q,Q+} - 2H = 0 with H = (1/2){Q,Q+}");
    col.add("witten.grading", rep.off_block, 0.0,
            "Q strictly off-diagonal in the sector grading");

    const auto mid = susy::witten_build(hquad, 512, -8, 8);
    const auto mrep = susy::susy_verify(mid, 5);
    const double scale = mid.even_block.norm();
    col.add("witten.hamiltonian_commutes", mrep.commutator_q / scale, 1e-12,
            "[Q,H] = 0 relative to ||H||");

    const int n = cfg.grid("witten");
    const auto big = susy::witten_build(hquad, n, -8, 8);
    const Eigen::VectorXd even = susy::sector_spectrum(big.even_block);
    const Eigen::VectorXd odd = susy::sector_spectrum(big.odd_block);
    col.add("witten.ground_energy", std::abs(even(0)),
            cfg.tol("ground_energy"), "zero mode of the h = x^2/2 model");
    double level_gap = 0;
    for (int k = 1; k <= 3; ++k) {
      // eigenvalues 0, 1, 1, 2, 2, ... ; even sector carries 0,1,2,3...
      level_gap = std::max(level_gap, std::abs(even(k) - k));
    }
    col.add("witten.oscillator_levels", level_gap, 1e-3,
            "excited levels near 1, 2, 3");
    susy::AlgebraReport prep;
    prep.pairing.clear();
    const auto pair_rep = susy::susy_verify(big, 5);
    col.add("witten.sector_pairing", pair_rep.pairing_rel_err,
            cfg.tol("pairing_relative"),
            "first five nonzero eigenvalues match across sectors");

    double prev_err = -1;
    double worst_order = 10;
    for (int grid : {512, 1024, 2048}) {
      const auto m = susy::witten_build(hquad, grid, -8, 8);
      const Eigen::VectorXd ev = susy::sector_spectrum(m.even_block);
      const double err = std::abs(ev(1) - 1.0);
      if (prev_err > 0) worst_order = std::min(worst_order, prev_err / err);
      prev_err = err;
    }
    col.structural("witten.second_order_convergence", worst_order >= 3.0,
                   "E1 error contracts ~4x per refinement (" +
                       fmt(worst_order) + ")");
  }

  {
    const int cutoff = cfg.cutoff("parity");
    const auto sys = susy::parity_charges(cutoff);
    for (int sign : {+1, -1}) {
      const auto rep = susy::susy_verify(sys, sign);
      const std::string tag = sign > 0 ? "plus" : "minus";
      col.add("parity." + tag + ".nilpotency",
              rep.nilpotency_q + rep.nilpotency_qdag, 0.0,
              "Q^2 = 0 exactly: a flips the parity the projector fixes");
      col.add("parity." + tag + ".closure", rep.closure, 0.0,
              "H = {Q, Q+} by construction");
      col.add("parity." + tag + ".commutators",
              rep.commutator_q + rep.commutator_qdag, tol,
              "[Q,H] = [Q+,H] = 0 on the trusted band");
      col.add("parity." + tag + ".grading", rep.off_block, 0.0,
              "Q odd in the (-1)^Lambda grading");
      col.add("parity." + tag + ".projection_commutation",
              rep.projection_comm, tol,
              "spectral projections of H commute with Q (trusted band)");
      col.add("parity." + tag + ".pairing", rep.pairing_rel_err, 1e-12,
              "nonzero spectrum doubly degenerate across parity sectors");
    }
    col.add("parity.hand_model",
            (sys.h_plus - susy::parity_hand_model(sys.space)).norm(), tol,
            "H+ = (Lambda+1) P_odd + Lambda P_even");
    bool spectrum_ok = std::abs(sys.h_plus(0, 0)) < 1e-14 &&
                       std::abs(sys.h_plus(1, 1) - Complex(2, 0)) < 1e-14 &&
                       std::abs(sys.h_plus(2, 2) - Complex(2, 0)) < 1e-14 &&
                       std::abs(sys.h_plus(3, 3) - Complex(4, 0)) < 1e-14 &&
                       std::abs(sys.h_plus(4, 4) - Complex(4, 0)) < 1e-14;
    col.structural("parity.low_spectrum", spectrum_ok,
                   "|0> -> 0; |1>,|2> -> 2; |3>,|4> -> 4");
    const auto lit = susy::literal_parity_reading(cutoff);
    col.structural(
        "parity.projector_reading_documented", lit.nilpotency > 1.0,
        "verbatim a(I/2 +- pi i Lambda) reading fails nilpotency (||Q^2|| = " +
            fmt(lit.nilpotency) + "), projector reading satisfies it");
  }

  {
    // Degenerate supercharge: everything collapses to zero.
    fock::TruncatedFock f(1, 6);
    const int d = f.dim();
    const Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(d, d);
    col.add("susy.zero_system",
            (zero * zero).norm() +
                (zero * zero.adjoint() + zero.adjoint() * zero).norm(),
            0.0, "Q = 0 gives H = 0 and vanishing residuals");
  }
}

// ---------------------------------------------------------------------------

void qstoch_suite(const SuiteConfig& cfg, Rng& rng, Collector& col) {
  (void)rng;
  const int cutoff = cfg.cutoff("qstoch_bin");
  const int max_bins = cfg.grid("qstoch_bins");

  {
    qstoch::BinFock bf(qstoch::TimeGrid(1.0, 4), cutoff);
    const auto inc = qstoch::increments(bf, 1);
    const auto vac = qstoch::exp_vector(
        bf, qstoch::StepFunction::constant(Complex(0, 0), 4));
    col.add("increments.dlambda_vacuum",
            qstoch::norm(bf, qstoch::apply(bf, inc.dLambda, vac)), 0.0,
            "dLambda kills the vacuum");
    const auto dada = qstoch::op_mul(inc.dA, inc.dA_dag);
    qstoch::BinState resid = qstoch::state_add(
        qstoch::apply(bf, dada, vac),
        qstoch::state_scale(vac, Complex(-bf.grid.dt(), 0)));
    col.add("increments.da_dadag_vacuum", qstoch::norm(bf, resid), 1e-14,
            "dA dA+ = dt I on the per-bin trusted sector");

    const auto inc2 = qstoch::increments(bf, 3);
    const auto comm =
        qstoch::op_add(qstoch::op_mul(inc.dA, inc2.dA_dag),
                       qstoch::op_scale(
                           qstoch::op_mul(inc2.dA_dag, inc.dA), Complex(-1, 0)));
    const auto probe = qstoch::exp_vector(
        bf, qstoch::StepFunction::constant(Complex(1, 0), 4));
    col.add("increments.disjoint_bins_commute",
            qstoch::norm(bf, qstoch::apply(bf, comm, probe)), 0.0,
            "[dA_j, dA+_k] = 0 for j != k");

    const Eigen::MatrixXcd jmat =
        qstoch::dense_operator(bf, qstoch::reflection(bf, 0.75));
    col.add("reflection.unitary_selfadjoint",
            (jmat * jmat - Eigen::MatrixXcd::Identity(jmat.rows(),
                                                      jmat.cols()))
                    .norm() +
                (jmat - jmat.adjoint()).norm(),
            0.0, "J(t)^2 = I and J(t) = J(t)+");
    col.add("reflection.at_zero",
            (qstoch::dense_operator(bf, qstoch::reflection(bf, 0.0)) -
             Eigen::MatrixXcd::Identity(jmat.rows(), jmat.cols()))
                .norm(),
            0.0, "J(0) = I");
    const Eigen::MatrixXcd da0 =
        qstoch::dense_operator(bf, qstoch::increments(bf, 0).dA);
    col.add("reflection.conjugates_da",
            (jmat * da0 * jmat + da0).norm(), 1e-14,
            "J dA_k J = -dA_k for earlier bins");

    // Factored path against the dense Kronecker realization.
    auto [f, fdag] = qstoch::fermion_process(bf, 0.5, +1);
    const Eigen::MatrixXcd fd = qstoch::dense_operator(bf, f);
    const Eigen::VectorXcd pv = qstoch::dense_state(bf, probe);
    const Eigen::VectorXcd lhs =
        qstoch::dense_state(bf, qstoch::apply(bf, f, probe));
    col.add("adapted.factored_matches_dense", (fd * pv - lhs).norm(), 1e-12,
            "tensor-term application equals the Kronecker matrix action");
  }

  {
    const auto u1 = [&](int n) {
      return qstoch::StepFunction::constant(Complex(1, 0), n);
    };
    std::vector<double> qsde, car, nil, prop;
    for (int n = 4; n <= max_bins; n *= 2) {
      qstoch::BinFock bf(qstoch::TimeGrid(1.0, n), cutoff);
      qsde.push_back(qstoch::qsde_residual(bf, u1(n)));
      car.push_back(qstoch::car_residual(bf, u1(n), 0.5));
      nil.push_back(qstoch::nilpotency_residual(bf, u1(n), 0.5));
      prop.push_back(qstoch::proposition_check(bf, u1(n), u1(n), 0.5));
    }
    const auto ladder_ok = [&](const std::vector<double>& r) {
      double worst = 0;
      for (size_t i = 1; i < r.size(); ++i)
        worst = std::max(worst, r[i] / r[i - 1]);
      return worst;
    };
    const double half = cfg.tol("ladder_ratio");
    col.add("qsde.reflection_ladder", ladder_ok(qsde), half,
            "dJ = -2 J dLambda residual halves as bins double (" +
                fmt(qsde.front()) + " -> " + fmt(qsde.back()) + ")");
    col.add("fermion.car_ladder", ladder_ok(car), half,
            "||{F,F+} - tI|| on e(1): " + fmt(car.front()) + " -> " +
                fmt(car.back()));
    col.add("fermion.nilpotency_ladder", ladder_ok(nil), half,
            "||F^2 e(1)||: " + fmt(nil.front()) + " -> " + fmt(nil.back()));
    col.add("proposition.ladder", ladder_ok(prop), half,
            "|phi + psi| on e(1): " + fmt(prop.front()) + " -> " +
                fmt(prop.back()));

    qstoch::BinFock bf16(qstoch::TimeGrid(1.0, 16), cutoff);
    col.add("proposition.vacuum",
            qstoch::proposition_check(
                bf16, qstoch::StepFunction::constant(Complex(0, 0), 16),
                qstoch::StepFunction::constant(Complex(0, 0), 16), 0.5),
            0.0, "phi, psi both vanish on the vacuum");
    col.add("martingale.measure_value",
            std::abs(qstoch::martingale_measure(bf16, u1(16), u1(16), 0.5) -
                     Complex(0.5, 0)),
            1e-14, "<<u,v>>[0, 1/2] = 1/2 for u = v = 1");

    // Second fermionization of the pair: parity-conjugate prefix.
    std::vector<double> car2;
    for (int n = 4; n <= max_bins; n *= 2) {
      qstoch::BinFock bf(qstoch::TimeGrid(1.0, n), cutoff);
      car2.push_back(qstoch::car_residual(bf, u1(n), 0.5, -1));
    }
    col.add("fermion.second_supercharge_ladder", ladder_ok(car2), half,
            "conjugate-prefix process obeys the same relations");
    {
      qstoch::BinFock bf(qstoch::TimeGrid(1.0, 16), cutoff);
      auto [fp, fpd] = qstoch::fermion_process(bf, 0.5, +1);
      auto [fm, fmd] = qstoch::fermion_process(bf, 0.5, -1);
      const auto eu = qstoch::exp_vector(bf, u1(16));
      const auto anti =
          qstoch::state_add(qstoch::apply(bf, fp, qstoch::apply(bf, fm, eu)),
                            qstoch::apply(bf, fm, qstoch::apply(bf, fp, eu)));
      col.add("fermion.pair_anticommutes",
              qstoch::norm(bf, anti) / qstoch::norm(bf, eu), 0.1,
              "{F+, F-} is O(dt) on exponential probes");
    }

    // The projector-averaged variant (1/2)(I + J) dA mixes a bosonic
    // component into the process; its proposition residual saturates
    // instead of contracting, which is recorded here, not asserted away.
    {
      double plateau = 0;
      for (int n : {8, 16}) {
        qstoch::BinFock bf(qstoch::TimeGrid(1.0, n), cutoff);
        const auto j = [&](int k) {
          return qstoch::reflection(bf, bf.grid.time_at(k));
        };
        qstoch::BinOperator fproj;
        for (int k = 0; k < bf.bins_before(0.5); ++k) {
          const auto da = qstoch::increments(bf, k).dA;
          fproj = qstoch::op_add(
              fproj, qstoch::op_scale(
                         qstoch::op_add(da, qstoch::op_mul(j(k), da)),
                         Complex(0.5, 0)));
        }
        const auto eu = qstoch::exp_vector(bf, u1(n));
        const Complex phi = qstoch::inner(
            bf, qstoch::apply(bf, qstoch::reflection(bf, 0.5), eu),
            qstoch::apply(bf, fproj, eu));
        const Complex psi = qstoch::inner(
            bf, qstoch::apply(bf, qstoch::op_adjoint(fproj), eu),
            qstoch::apply(bf, qstoch::reflection(bf, 0.5), eu));
        plateau = std::abs(phi + psi);
      }
      col.structural("proposition.projected_variant_documented",
                     plateau > 0.05,
                     "averaged (I+J)/2 prefix stalls near " + fmt(plateau) +
                         "; the reflection prefix is the fermionization");
    }
  }
}

// ---------------------------------------------------------------------------

Report run_single(const std::string& name, const SuiteConfig& cfg) {
  Collector col;
  col.rep.suite = name;
  Rng rng(stream_seed(cfg.seed, name));
  const auto start = std::chrono::steady_clock::now();
  if (name == "supergrade") supergrade_suite(cfg, rng, col);
  else if (name == "clifford") clifford_suite(cfg, rng, col);
  else if (name == "poincare") poincare_suite(cfg, rng, col);
  else if (name == "spinbundle") spinbundle_suite(cfg, rng, col);
  else if (name == "induce") induce_suite(cfg, rng, col);
  else if (name == "fock") fock_suite(cfg, rng, col);
  else if (name == "susy") susy_suite(cfg, rng, col);
  else if (name == "qstoch") qstoch_suite(cfg, rng, col);
  else throw std::invalid_argument("unknown suite: " + name);
  col.rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  return col.rep;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"supergrade", "clifford", "poincare", "spinbundle", "induce",
          "fock",       "susy",     "qstoch",   "all"};
}

Report run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name != "all") return run_single(name, cfg);

  auto names = suite_names();
  names.pop_back();
  std::vector<std::future<Report>> futures;
  futures.reserve(names.size());
  for (const auto& n : names)
    futures.push_back(std::async(std::launch::async,
                                 [n, &cfg] { return run_single(n, cfg); }));
  Report all;
  all.suite = "all";
  const auto start = std::chrono::steady_clock::now();
  for (size_t i = 0; i < names.size(); ++i) {
    Report one = futures[i].get();
    for (auto& c : one.checks) {
      c.name = names[i] + "." + c.name;
      all.checks.push_back(std::move(c));
    }
  }
  all.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return all;
}

}  // namespace sqf::cli
