#include "sqf/clifford.hpp"

namespace sqf::clifford {

namespace {

Eigen::Matrix2cd pauli(int k) {
  Eigen::Matrix2cd s;
  const Complex i(0, 1);
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -i, i, 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

Eigen::Matrix4cd block_offdiag(const Eigen::Matrix2cd& upper,
                               const Eigen::Matrix2cd& lower) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m.block<2, 2>(0, 2) = upper;
  m.block<2, 2>(2, 0) = lower;
  return m;
}

// xi-packing of an odd real vector: xi = (X0 + i X1, X2 + i X3).
Eigen::Vector2cd pack(const Eigen::Vector4d& x) {
  return {Complex(x(0), x(1)), Complex(x(2), x(3))};
}

}  // namespace

const GammaSet& make_gammas() {
  static const GammaSet gs = [] {
    GammaSet g;
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    g.gamma[0] = block_offdiag(id, id);
    for (int k = 1; k <= 3; ++k) g.gamma[k] = block_offdiag(-pauli(k), pauli(k));
    g.chirality = Complex(0, 1) * g.gamma[0] * g.gamma[1] * g.gamma[2] *
                  g.gamma[3];
    // Snap the diagonal to exact +/-1; the product is exact in this basis but
    // keeping the entries integral makes downstream equality checks literal.
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        g.chirality(i, j) = Complex(std::round(g.chirality(i, j).real()),
                                    std::round(g.chirality(i, j).imag()));
    return g;
  }();
  return gs;
}

Eigen::Matrix4cd momentum_slash(const FourVector& p) {
  const GammaSet& gs = make_gammas();
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  for (int r = 0; r < 4; ++r) m += p[r] * gs.gamma[r];
  return m;
}

Eigen::Matrix4cd spin_rep(const SL2& h) {
  require(std::abs(h.m.determinant() - Complex(1, 0)) <= 1e-10,
          "spin_rep: non-unimodular input");
  Eigen::Matrix4cd s = Eigen::Matrix4cd::Zero();
  s.block<2, 2>(0, 0) = h.m;
  s.block<2, 2>(2, 2) = h.star_inverse().m;
  return s;
}

CliffordForm majorana_form(const FourVector& lambda) {
  CliffordForm cf;
  cf.lambda = lambda;
  std::array<Eigen::Matrix2cd, 4> stilde;
  stilde[0] = Eigen::Matrix2cd::Identity();
  for (int k = 1; k <= 3; ++k) stilde[k] = -pauli(k);
  for (int mu = 0; mu < 4; ++mu) {
    Eigen::Matrix4d t;
    for (int i = 0; i < 4; ++i) {
      Eigen::Vector4d ei = Eigen::Vector4d::Zero();
      ei(i) = 1;
      for (int j = 0; j < 4; ++j) {
        Eigen::Vector4d ej = Eigen::Vector4d::Zero();
        ej(j) = 1;
        const Complex v = pack(ei).dot(stilde[mu] * pack(ej));
        t(i, j) = v.real();
      }
    }
    cf.bracket_table[mu] = 0.5 * (t + t.transpose());
  }
  return cf;
}

FourVector odd_bracket(const CliffordForm& cf, const Eigen::Vector4d& x1,
                       const Eigen::Vector4d& x2) {
  FourVector out;
  for (int mu = 0; mu < 4; ++mu)
    out[mu] = x1.dot(cf.bracket_table[mu] * x2);
  return out;
}

double clifford_form(const CliffordForm& cf, const Eigen::Vector4d& x1,
                     const Eigen::Vector4d& x2) {
  return 0.5 * poincare::pairing(cf.lambda, odd_bracket(cf, x1, x2));
}

Eigen::Matrix4d quadratic_gram(const CliffordForm& cf) {
  Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
  const double eta[4] = {1, -1, -1, -1};
  for (int mu = 0; mu < 4; ++mu)
    g += 0.5 * eta[mu] * cf.lambda[mu] * cf.bracket_table[mu];
  return g;
}

}  // namespace sqf::clifford
