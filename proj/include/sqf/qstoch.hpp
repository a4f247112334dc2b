#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "sqf/common.hpp"

namespace sqf::qstoch {

struct TimeGrid {
  double horizon;
  int bins;

  TimeGrid(double T, int n) : horizon(T), bins(n) {
    require(n >= 2 && T > 0, "TimeGrid: need n >= 2 and T > 0");
  }
  double dt() const { return horizon / bins; }
  double time_at(int k) const { return k * dt(); }
};

struct StepFunction {
  std::vector<Complex> values;

  static StepFunction constant(Complex c, int bins) {
    StepFunction s;
    s.values.assign(static_cast<size_t>(bins), c);
    return s;
  }
};

/// Time-binned boson Fock space: one truncated mode per bin.  The total
/// space (cutoff+1)^n is never materialized at scale; states and operators
/// are held in factored tensor form below.
struct BinFock {
  TimeGrid grid;
  int per_bin_cutoff;

  BinFock(TimeGrid g, int cutoff = 2) : grid(g), per_bin_cutoff(cutoff) {
    require(cutoff >= 1, "BinFock: cutoff must be >= 1");
  }
  int bin_dim() const { return per_bin_cutoff + 1; }
  /// Index of the first bin not strictly before time t.
  int bins_before(double t) const;

  Eigen::MatrixXcd bin_lower() const;   // a on one bin
  Eigen::MatrixXcd bin_parity() const;  // (-1)^Lambda on one bin
  Eigen::MatrixXcd bin_number() const;  // a-dagger a on one bin
  Eigen::VectorXcd bin_coherent(Complex alpha) const;
};

/// coeff * (x_0 (x) ... (x) x_{n-1}); bins not listed in overrides carry the
/// shared base factor.
struct ProductTerm {
  Complex coeff;
  std::shared_ptr<const std::vector<Eigen::VectorXcd>> base;
  std::vector<std::pair<int, Eigen::VectorXcd>> overrides;  // sorted by bin

  const Eigen::VectorXcd& factor(int k) const;
};

struct BinState {
  std::vector<ProductTerm> terms;
};

/// Sum of factored operator terms; bins absent from a term's factor list act
/// as the identity, which keeps adapted operators adapted by construction.
struct OpTerm {
  Complex coeff;
  std::vector<std::pair<int, Eigen::MatrixXcd>> factors;  // sorted by bin
};

struct BinOperator {
  std::vector<OpTerm> terms;
};

BinState exp_vector(const BinFock& bf, const StepFunction& u);
BinState apply(const BinFock& bf, const BinOperator& op, const BinState& s);
BinState state_add(const BinState& a, const BinState& b);
BinState state_scale(const BinState& a, Complex c);
Complex inner(const BinFock& bf, const BinState& a, const BinState& b);
double norm(const BinFock& bf, const BinState& a);

BinOperator op_add(const BinOperator& a, const BinOperator& b);
BinOperator op_scale(const BinOperator& a, Complex c);
BinOperator op_adjoint(const BinOperator& a);
/// a * b (apply b first).
BinOperator op_mul(const BinOperator& a, const BinOperator& b);
BinOperator op_identity();

struct Increments {
  BinOperator dA, dA_dag, dLambda;
};

/// Adapted increments on bin k:  dA_k = sqrt(dt) a_k,  dLambda_k = a_k+ a_k.
Increments increments(const BinFock& bf, int k);

/// Reflection J(t): (-1)^Lambda on every bin strictly before t.
BinOperator reflection(const BinFock& bf, double t);

/// Discrete boson-fermion correspondence dB = J dA.  sign=+1 uses the
/// adapted (left-point) reflection prefix J(t_k); sign=-1 uses the
/// parity-conjugate prefix J(t_{k+1}), the second supercharge of the pair.
/// Both satisfy the fermion relations up to O(dt).
std::pair<BinOperator, BinOperator> fermion_process(const BinFock& bf,
                                                    double t, int sign = +1);

/// |<J(t) e(u), F(t) e(v)> + <F-dagger(t) e(u), J(t) e(v)>| on truncated
/// exponential vectors.
double proposition_check(const BinFock& bf, const StepFunction& u,
                         const StepFunction& v, double t, int sign = +1);

/// <<u, v>>[0, t] = sum_{bins before t} conj(u_k) v_k dt.
Complex martingale_measure(const BinFock& bf, const StepFunction& u,
                           const StepFunction& v, double t);

// Ladder residuals, all measured on exponential-vector probes.
double qsde_residual(const BinFock& bf, const StepFunction& u);
double car_residual(const BinFock& bf, const StepFunction& u, double t,
                    int sign = +1);
double nilpotency_residual(const BinFock& bf, const StepFunction& u, double t,
                           int sign = +1);

// Dense realizations for small bin counts (cross-checks the factored path).
Eigen::MatrixXcd dense_operator(const BinFock& bf, const BinOperator& op);
Eigen::VectorXcd dense_state(const BinFock& bf, const BinState& s);

}  // namespace sqf::qstoch
