#pragma once

#include <array>

#include <Eigen/Dense>

#include "sqf/common.hpp"
#include "sqf/poincare.hpp"

namespace sqf::clifford {

using poincare::FourVector;
using poincare::SL2;

/// The four gamma matrices in the chiral basis used throughout:
///   gamma0 = [[0, I], [I, 0]],  gamma_k = [[0, -sigma_k], [sigma_k, 0]],
/// so the chirality Gamma = i gamma0 gamma1 gamma2 gamma3 = diag(1,1,-1,-1).
struct GammaSet {
  std::array<Eigen::Matrix4cd, 4> gamma;
  Eigen::Matrix4cd chirality;
};

const GammaSet& make_gammas();

/// Sum_r p_r gamma_r (plain sum over lower indices, no metric contraction).
Eigen::Matrix4cd momentum_slash(const FourVector& p);

/// Spin representation on Dirac spinors, S(h) = diag(h, h^{*-1}).
/// S is a homomorphism, commutes with the chirality, and intertwines the
/// vector action as  S(h^{*-1}) (p.gamma) S(h^{*-1})^{-1} = (delta(h)p).gamma,
/// which is exactly the fiber-preservation property of the bundle action.
Eigen::Matrix4cd spin_rep(const SL2& h);

/// Symmetric bilinear form Phi_lambda(X1,X2) = (1/2) lambda([X1,X2]) on the
/// odd sector, with the odd vectors modeled as R^4 ~ C^2 (+) conj(C^2) and
/// the bracket returning a four-vector.
struct CliffordForm {
  FourVector lambda;
  // bracket_table[mu](i,j): mu-component of [X_i, X_j] on the real basis of
  // the odd space; symmetrized on construction.
  std::array<Eigen::Matrix4d, 4> bracket_table;
};

/// Majorana-model form: the odd bracket is [X,X']_mu = Re(xi^* stilde_mu xi')
/// with stilde = (I, -sigma) and xi the C^2 packing of X.  lambda pairs
/// against bracket outputs through the Minkowski pairing.
CliffordForm majorana_form(const FourVector& lambda);

/// Bracket of two odd vectors, evaluated through the table.
FourVector odd_bracket(const CliffordForm& cf, const Eigen::Vector4d& x1,
                       const Eigen::Vector4d& x2);

double clifford_form(const CliffordForm& cf, const Eigen::Vector4d& x1,
                     const Eigen::Vector4d& x2);

inline double quadratic_form(const CliffordForm& cf,
                             const Eigen::Vector4d& x) {
  return clifford_form(cf, x, x);
}

/// Real symmetric Gram matrix G with Q_lambda(X) = X^T G X; its eigenvalues
/// decide the positive-energy condition Q_lambda >= 0.
Eigen::Matrix4d quadratic_gram(const CliffordForm& cf);

}  // namespace sqf::clifford
