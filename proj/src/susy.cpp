#include "sqf/susy.hpp"

#include <cmath>

namespace sqf::susy {

namespace {

Eigen::MatrixXcd kron2(const Eigen::Matrix2cd& s, const Eigen::MatrixXcd& a) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (std::abs(s(i, j)) > 0) out.block(i * n, j * n, n, n) = s(i, j) * a;
  return out;
}

double trusted_comm_norm(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y,
                         const Eigen::MatrixXcd& trust) {
  return (trust * (x * y - y * x) * trust).norm();
}

}  // namespace

WittenModel witten_build(const std::function<double(double)>& h,
                         int grid_points, double x_min, double x_max) {
  require(grid_points >= 16, "witten_build: need at least 16 grid points");
  require(x_max > x_min, "witten_build: degenerate domain");
  WittenModel m;
  m.grid_points = grid_points;
  m.x_min = x_min;
  m.x_max = x_max;
  m.dx = (x_max - x_min) / (grid_points + 1);
  m.h_samples.resize(grid_points);
  m.dh_samples.resize(grid_points);
  for (int j = 0; j < grid_points; ++j) {
    const double x = x_min + (j + 1) * m.dx;
    m.h_samples(j) = h(x);
    require(std::isfinite(m.h_samples(j)), "witten_build: h not finite");
    m.dh_samples(j) = (h(x + m.dx) - h(x - m.dx)) / (2 * m.dx);
  }
  // B = D + diag(h'), D the central difference (Dirichlet ends).
  m.b = Eigen::MatrixXd::Zero(grid_points, grid_points);
  const double inv2dx = 1.0 / (2 * m.dx);
  for (int j = 0; j < grid_points; ++j) {
    if (j + 1 < grid_points) m.b(j, j + 1) = inv2dx;
    if (j - 1 >= 0) m.b(j, j - 1) = -inv2dx;
    m.b(j, j) = m.dh_samples(j);
  }
  m.even_block = 0.5 * m.b.transpose() * m.b;
  m.odd_block = 0.5 * m.b * m.b.transpose();
  return m;
}

Eigen::MatrixXcd witten_dense_q(const WittenModel& m) {
  Eigen::Matrix2cd lower = Eigen::Matrix2cd::Zero();
  lower(1, 0) = 1;
  return kron2(lower, Complex(0, -1) * m.b.cast<Complex>());
}

Eigen::MatrixXcd witten_dense_h(const WittenModel& m) {
  const Eigen::MatrixXcd q = witten_dense_q(m);
  const Eigen::MatrixXcd qd = q.adjoint();
  return 0.5 * (q * qd + qd * q);
}

Eigen::VectorXd sector_spectrum(const Eigen::MatrixXd& block) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block,
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

ParityChargeSystem parity_charges(int cutoff) {
  require(cutoff >= 6, "parity_charges: cutoff too small for a trusted band");
  ParityChargeSystem s{fock::TruncatedFock(1, cutoff), {}, {}, {}, {}};
  const Eigen::MatrixXcd a = s.space.lower(0);
  const Eigen::MatrixXcd j = s.space.parity();
  const Eigen::MatrixXcd id =
      Eigen::MatrixXcd::Identity(s.space.dim(), s.space.dim());
  const Eigen::MatrixXcd p_even = 0.5 * (id + j);
  const Eigen::MatrixXcd p_odd = 0.5 * (id - j);
  s.q_plus = a * p_even;
  s.q_minus = a * p_odd;
  s.h_plus = s.q_plus * s.q_plus.adjoint() + s.q_plus.adjoint() * s.q_plus;
  s.h_minus = s.q_minus * s.q_minus.adjoint() + s.q_minus.adjoint() * s.q_minus;
  return s;
}

Eigen::MatrixXcd parity_hand_model(const fock::TruncatedFock& f) {
  const int d = f.dim();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
  for (int n = 0; n < d; ++n) h(n, n) = (n % 2 == 1) ? n + 1 : n;
  return h;
}

namespace {

// Matches ascending nonzero eigenvalues across sectors.
void fill_pairing(const Eigen::VectorXd& even, const Eigen::VectorXd& odd,
                  int pairs, double zero_cut, AlgebraReport* rep) {
  std::vector<double> ev, od;
  for (int i = 0; i < even.size(); ++i)
    if (even(i) > zero_cut) ev.push_back(even(i));
  for (int i = 0; i < odd.size(); ++i)
    if (odd(i) > zero_cut) od.push_back(odd(i));
  const int count =
      std::min({pairs, static_cast<int>(ev.size()), static_cast<int>(od.size())});
  rep->pairing_rel_err = 0;
  for (int k = 0; k < count; ++k) {
    rep->pairing.emplace_back(ev[static_cast<size_t>(k)], od[static_cast<size_t>(k)]);
    rep->pairing_rel_err =
        std::max(rep->pairing_rel_err,
                 std::abs(ev[static_cast<size_t>(k)] - od[static_cast<size_t>(k)]) /
                     std::abs(od[static_cast<size_t>(k)]));
  }
}

double spectral_projection_comm(const Eigen::MatrixXcd& q,
                                const Eigen::MatrixXcd& h,
                                const Eigen::MatrixXcd& trust) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  const auto& vals = es.eigenvalues();
  const auto& vecs = es.eigenvectors();
  double worst = 0;
  int i = 0;
  while (i < vals.size()) {
    int j = i;
    while (j < vals.size() && vals(j) - vals(i) <= 1e-8) ++j;
    Eigen::MatrixXcd proj = vecs.middleCols(i, j - i) *
                            vecs.middleCols(i, j - i).adjoint();
    worst = std::max(worst, trusted_comm_norm(q, proj, trust));
    i = j;
  }
  return worst;
}

}  // namespace

AlgebraReport susy_verify(const ParityChargeSystem& s, int sign) {
  const Eigen::MatrixXcd& q = sign >= 0 ? s.q_plus : s.q_minus;
  const Eigen::MatrixXcd& h = sign >= 0 ? s.h_plus : s.h_minus;
  const Eigen::MatrixXcd qd = q.adjoint();
  const Eigen::MatrixXcd trust = s.space.trusted_projector();
  const Eigen::MatrixXcd jpar = s.space.parity();
  const int d = s.space.dim();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);

  AlgebraReport rep;
  rep.nilpotency_q = (q * q).norm();
  rep.nilpotency_qdag = (qd * qd).norm();
  rep.closure = (q * qd + qd * q - h).norm();
  rep.commutator_q = trusted_comm_norm(q, h, trust);
  rep.commutator_qdag = trusted_comm_norm(qd, h, trust);
  const Eigen::MatrixXcd pe = 0.5 * (id + jpar);
  const Eigen::MatrixXcd po = 0.5 * (id - jpar);
  rep.off_block = (pe * q * pe).norm() + (po * q * po).norm();
  rep.projection_comm = spectral_projection_comm(q, h, trust);

  Eigen::VectorXd even(d / 2 + d % 2), odd(d / 2);
  int ie = 0, io = 0;
  for (int n = 0; n < d; ++n) {
    const double val = h(n, n).real();
    if (n % 2 == 0)
      even(ie++) = val;
    else
      odd(io++) = val;
  }
  std::sort(even.data(), even.data() + ie);
  std::sort(odd.data(), odd.data() + io);
  fill_pairing(even, odd, d, 1e-6, &rep);
  return rep;
}

AlgebraReport susy_verify(const WittenModel& m, int pairs) {
  AlgebraReport rep;
  // Q^2 and (Q-dagger)^2 vanish structurally through sigma-minus; evaluated
  // densely only at desk sizes.
  if (m.grid_points <= 256) {
    const Eigen::MatrixXcd q = witten_dense_q(m);
    const Eigen::MatrixXcd qd = q.adjoint();
    const Eigen::MatrixXcd h = witten_dense_h(m);
    rep.nilpotency_q = (q * q).norm();
    rep.nilpotency_qdag = (qd * qd).norm();
    rep.closure = (q * qd + qd * q - 2 * h).norm();
    const Eigen::MatrixXcd id =
        Eigen::MatrixXcd::Identity(2 * m.grid_points, 2 * m.grid_points);
    rep.commutator_q = trusted_comm_norm(q, h, id);
    rep.commutator_qdag = trusted_comm_norm(qd, h, id);
    Eigen::MatrixXcd grading = id;
    grading.bottomRightCorner(m.grid_points, m.grid_points) *= -1;
    const Eigen::MatrixXcd pe = 0.5 * (id + grading);
    const Eigen::MatrixXcd po = 0.5 * (id - grading);
    rep.off_block = (pe * q * pe).norm() + (po * q * po).norm();
  } else {
    // [Q,H] block form: A H_even - H_odd A, with A = -iB.
    rep.commutator_q =
        (m.b * m.even_block - m.odd_block * m.b).norm();
    rep.commutator_qdag = rep.commutator_q;
  }
  const Eigen::VectorXd even = sector_spectrum(m.even_block);
  const Eigen::VectorXd odd = sector_spectrum(m.odd_block);
  fill_pairing(even, odd, pairs, 1e-3, &rep);
  return rep;
}

LiteralReadingReport literal_parity_reading(int cutoff, int sign) {
  fock::TruncatedFock f(1, cutoff);
  const Eigen::MatrixXcd a = f.lower(0);
  const Eigen::MatrixXcd lam = f.number();
  const int d = f.dim();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  const Complex coef = Complex(0, 2 * M_PI) * static_cast<double>(sign);
  const Eigen::MatrixXcd q = a * (0.5 * (id + coef * lam));
  const Eigen::MatrixXcd h = q * q.adjoint() + q.adjoint() * q;
  const Eigen::MatrixXcd trust = f.trusted_projector();
  return {(trust * q * q * trust).norm(),
          trusted_comm_norm(q, h, trust)};
}

}  // namespace sqf::susy
