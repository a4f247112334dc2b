#pragma once

#include <Eigen/Dense>

#include "sqf/common.hpp"

namespace sqf::supergrade {

enum class Parity { Even, Odd, Mixed };

/// Z2-graded complex vector: an even part and an odd part, either of which
/// may be empty.  Values are immutable once built; all operations are pure.
struct GradedVector {
  Eigen::VectorXcd even;
  Eigen::VectorXcd odd;

  GradedVector() = default;
  GradedVector(Eigen::VectorXcd e, Eigen::VectorXcd o)
      : even(std::move(e)), odd(std::move(o)) {}

  static GradedVector make_even(const Eigen::VectorXcd& e, int odd_dim) {
    return GradedVector(e, Eigen::VectorXcd::Zero(odd_dim));
  }
  static GradedVector make_odd(int even_dim, const Eigen::VectorXcd& o) {
    return GradedVector(Eigen::VectorXcd::Zero(even_dim), o);
  }

  int even_dim() const { return static_cast<int>(even.size()); }
  int odd_dim() const { return static_cast<int>(odd.size()); }
  double squared_norm() const { return even.squaredNorm() + odd.squaredNorm(); }
};

/// Parity of a vector; the zero vector counts as even.
Parity parity(const GradedVector& x, double tol = kAlgebraTol);

/// Block operator on a graded space.  ee : even->even, eo : odd->even,
/// oe : even->odd, oo : odd->odd.
struct GradedOperator {
  Eigen::MatrixXcd ee, eo, oe, oo;

  GradedOperator() = default;
  GradedOperator(Eigen::MatrixXcd ee_, Eigen::MatrixXcd eo_,
                 Eigen::MatrixXcd oe_, Eigen::MatrixXcd oo_);

  static GradedOperator even_op(const Eigen::MatrixXcd& a,
                                const Eigen::MatrixXcd& d);
  static GradedOperator odd_op(int d0, int d1, const Eigen::MatrixXcd& b,
                               const Eigen::MatrixXcd& c);
  static GradedOperator identity(int d0, int d1);

  int even_dim() const { return static_cast<int>(ee.rows()); }
  int odd_dim() const { return static_cast<int>(oo.rows()); }

  GradedVector apply(const GradedVector& x) const;
  GradedOperator operator*(const GradedOperator& rhs) const;
  GradedOperator operator+(const GradedOperator& rhs) const;
  GradedOperator operator-(const GradedOperator& rhs) const;
  GradedOperator scaled(Complex c) const;

  /// Plain Hilbert-space adjoint, blockwise conjugate transpose.
  GradedOperator hilbert_adjoint() const;

  double norm() const;
};

Parity parity(const GradedOperator& t, double tol = kAlgebraTol);

/// Even super Hilbert form: the plain inner product on even pairs, i times it
/// on odd pairs, zero across parities, extended sesquilinearly (conjugate
/// linear in the first slot) to mixed vectors.
Complex super_form(const GradedVector& x, const GradedVector& y);

/// Super adjoint T-dagger, solved blockwise from
///   <Tx,y> = (-1)^{p(T)p(x)} <x, T-dagger y>.
/// Rejects mixed-parity operators.
GradedOperator super_adjoint(const GradedOperator& t);

/// Graded bracket [a,b] = ab - (-1)^{p(a)p(b)} ba on homogeneous operators.
GradedOperator super_bracket(const GradedOperator& a, const GradedOperator& b);

}  // namespace sqf::supergrade
