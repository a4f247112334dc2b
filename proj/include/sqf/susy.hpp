#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "sqf/fock.hpp"

namespace sqf::susy {

/// Witten-type N=1 model on a one-dimensional Dirichlet lattice.
/// With A = p - i h'(x) (central differences for both p = -i d/dx and h'),
///   Q = sigma- (x) A,   Q-dagger = sigma+ (x) A-dagger,
///   H = (1/2){Q, Q-dagger} = (1/2) diag(A-dagger A, A A-dagger).
/// Q^2 = 0 holds structurally (sigma-minus squares to zero); the two sector
/// blocks are kept explicitly since the full matrix is never needed at scale.
struct WittenModel {
  int grid_points;
  double x_min, x_max, dx;
  Eigen::VectorXd h_samples;   // superpotential on the interior grid
  Eigen::VectorXd dh_samples;  // central-difference h'
  Eigen::MatrixXd b;           // A = -i B, B = D_central + diag(h')
  Eigen::MatrixXd even_block;  // (1/2) B^T B
  Eigen::MatrixXd odd_block;   // (1/2) B B^T
};

WittenModel witten_build(const std::function<double(double)>& h,
                         int grid_points, double x_min, double x_max);

/// Dense 2N x 2N realizations of Q and H for desk-size grids.
Eigen::MatrixXcd witten_dense_q(const WittenModel& m);
Eigen::MatrixXcd witten_dense_h(const WittenModel& m);

/// Ascending eigenvalues of one sector block.
Eigen::VectorXd sector_spectrum(const Eigen::MatrixXd& block);

/// Parity-projected N=2 supercharges on a single truncated boson mode:
///   Q+- = a (1/2)(I +- J),  J = (-1)^Lambda,  H+- = {Q+-, Q+-dagger}.
struct ParityChargeSystem {
  fock::TruncatedFock space;
  Eigen::MatrixXcd q_plus, q_minus, h_plus, h_minus;
};

ParityChargeSystem parity_charges(int cutoff);

/// Hand model of H+ used as the independent check:
/// (Lambda + 1) P_odd + Lambda P_even, diagonal in the number basis.
Eigen::MatrixXcd parity_hand_model(const fock::TruncatedFock& f);

struct AlgebraReport {
  double nilpotency_q = 0;       // ||Q^2||
  double nilpotency_qdag = 0;    // ||(Q-dagger)^2||
  double closure = 0;            // ||{Q,Q-dagger} - norm * H||
  double commutator_q = 0;       // ||[Q,H]|| on the trusted subspace
  double commutator_qdag = 0;    // ||[Q-dagger,H]|| on the trusted subspace
  double off_block = 0;          // grading: ||P+ Q P+|| + ||P- Q P-||
  double projection_comm = 0;    // [Q, spectral projections of H], trusted
  double pairing_rel_err = 0;    // worst relative error over matched pairs
  std::vector<std::pair<double, double>> pairing;  // (even, odd) eigenvalues
};

/// Verify the parity-charge algebra (sign +1 -> Q+, else Q-).
AlgebraReport susy_verify(const ParityChargeSystem& s, int sign = +1);

/// Verify the Witten model; pairs counts matched nonzero sector eigenvalues.
AlgebraReport susy_verify(const WittenModel& m, int pairs = 5);

/// Residuals of the verbatim a (1/2)(I +- 2 pi i Lambda) reading, reported
/// for documentation; this reading does not close the algebra.
struct LiteralReadingReport {
  double nilpotency;
  double commutator;
};
LiteralReadingReport literal_parity_reading(int cutoff, int sign = +1);

}  // namespace sqf::susy
