#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sqf/common.hpp"

namespace sqf::fock {

// ---------------------------------------------------------------------------
// Exponential-vector calculus.  States are finite combinations of exponential
// vectors e(u); inner products are exact kernel arithmetic
// <e(u), e(v)> = exp <u,v>, so Weyl-operator identities carry no truncation
// error at all.
// ---------------------------------------------------------------------------

struct ExpVectorState {
  // (coefficient, single-particle vector) pairs.
  std::vector<std::pair<Complex, Eigen::VectorXcd>> terms;

  int single_dim() const {
    return terms.empty() ? 0 : static_cast<int>(terms[0].second.size());
  }
};

ExpVectorState exp_vector(const Eigen::VectorXcd& u);

Complex exp_inner(const ExpVectorState& x, const ExpVectorState& y);

inline double exp_norm(const ExpVectorState& x) {
  return std::sqrt(std::max(0.0, exp_inner(x, x).real()));
}

/// Weyl operator W(v, U): displacement by v after the second-quantized
/// rotation U, acting on exponential vectors as
///   W(v,U) e(u) = exp(-||v||^2/2 - <v, Uu>) e(Uu + v).
struct WeylOp {
  Eigen::VectorXcd v;
  Eigen::MatrixXcd U;

  WeylOp(Eigen::VectorXcd v_, Eigen::MatrixXcd U_);
  static WeylOp displacement(const Eigen::VectorXcd& v);
  static WeylOp rotation(const Eigen::MatrixXcd& U);
  static WeylOp identity(int dim);
};

ExpVectorState weyl_apply(const WeylOp& w, const ExpVectorState& x);

/// Exact multiplier law of the Weyl family:
///   W(v1,U1) W(v2,U2) = exp(-i Im<v1, U1 v2>) W(v1 + U1 v2, U1 U2).
/// Returns (phase, composed operator).
std::pair<Complex, WeylOp> weyl_compose(const WeylOp& a, const WeylOp& b);

/// Weyl operator together with an explicit central phase; these form an
/// honest group, which is what the cocycle machinery needs for exact
/// identities.
struct WeylElement {
  Complex phase;
  WeylOp op;

  static WeylElement identity(int dim);
  WeylElement operator*(const WeylElement& rhs) const;
  WeylElement inverse() const;
};

/// Metric used by the cocycle tests: phase, displacement and rotation parts
/// compared componentwise.
double weyl_distance(const WeylElement& x, const WeylElement& y);

// ---------------------------------------------------------------------------
// Truncated number-basis Fock space: M modes, occupations 0..cutoff.
// Ladder identities are exact only below the cutoff; the trusted subspace
// keeps every mode occupation <= cutoff - 2.
// ---------------------------------------------------------------------------

struct TruncatedFock {
  int modes;
  int cutoff;

  TruncatedFock(int modes_, int cutoff_);

  int dim() const;
  int occupation(int state_index, int mode) const;

  Eigen::MatrixXcd lower(int mode) const;     // a_m
  Eigen::MatrixXcd raise(int mode) const;     // a_m-adjoint
  Eigen::MatrixXcd number() const;            // total occupation Lambda
  Eigen::MatrixXcd parity() const;            // (-1)^Lambda
  Eigen::MatrixXcd trusted_projector() const;

  /// Largest total occupation on which the state index enumeration keeps
  /// every mode at or below cutoff - 2.
  bool trusted(int state_index) const;
};

struct LadderSet {
  Eigen::MatrixXcd a, adag, p, q;
};

/// Ladder family of a direction vector g: a(g) = sum_m g_m a_m together with
/// the quadratures q(g) = a + a-dagger and p(g) = i (a-dagger - a), so that
/// a = (q + i p)/2, a-dagger = (q - i p)/2 and q(g) = p(ig) hold exactly as
/// matrices.
LadderSet stone_ladder(const TruncatedFock& f, const Eigen::VectorXcd& g);

/// (Lambda, J) with J = (-1)^Lambda.
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> parity_ops(
    const TruncatedFock& f);

// ---------------------------------------------------------------------------
// Symmetric / antisymmetric tensor towers and the graded Fock assembly.
// ---------------------------------------------------------------------------

Eigen::MatrixXcd symmetrizer(int d, int n);
Eigen::MatrixXcd antisymmetrizer(int d, int n);

long sym_dim(int d, int n);   // C(d+n-1, n)
long asym_dim(int d, int n);  // C(d, n), zero for n > d

struct SuperFock {
  int single_dim;
  int degree_cap;
  std::vector<Eigen::MatrixXcd> sym_bases;   // per degree, d^n x dim_n
  std::vector<Eigen::MatrixXcd> asym_bases;
  int even_dim;  // total symmetric-sector dimension
  int odd_dim;   // total antisymmetric-sector dimension

  /// Grading operator on the disjoint union, +1 on the symmetric sector and
  /// -1 on the antisymmetric one.
  Eigen::VectorXd parity_diag() const;
};

SuperFock build_super_fock(int d, int degree_cap = 3);

}  // namespace sqf::fock
