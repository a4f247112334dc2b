#include "sqf/supergrade.hpp"

namespace sqf::supergrade {

namespace {

double block_scale(const GradedOperator& t) {
  return std::max({t.ee.size() ? t.ee.cwiseAbs().maxCoeff() : 0.0,
                   t.eo.size() ? t.eo.cwiseAbs().maxCoeff() : 0.0,
                   t.oe.size() ? t.oe.cwiseAbs().maxCoeff() : 0.0,
                   t.oo.size() ? t.oo.cwiseAbs().maxCoeff() : 0.0, 1.0});
}

}  // namespace

Parity parity(const GradedVector& x, double tol) {
  const double ne = x.even.size() ? x.even.cwiseAbs().maxCoeff() : 0.0;
  const double no = x.odd.size() ? x.odd.cwiseAbs().maxCoeff() : 0.0;
  if (no <= tol) return Parity::Even;
  if (ne <= tol) return Parity::Odd;
  return Parity::Mixed;
}

GradedOperator::GradedOperator(Eigen::MatrixXcd ee_, Eigen::MatrixXcd eo_,
                               Eigen::MatrixXcd oe_, Eigen::MatrixXcd oo_)
    : ee(std::move(ee_)), eo(std::move(eo_)), oe(std::move(oe_)),
      oo(std::move(oo_)) {
  require(ee.rows() == eo.rows() && oe.rows() == oo.rows() &&
              ee.cols() == oe.cols() && eo.cols() == oo.cols() &&
              ee.rows() == ee.cols() && oo.rows() == oo.cols(),
          "GradedOperator: inconsistent block shapes");
}

GradedOperator GradedOperator::even_op(const Eigen::MatrixXcd& a,
                                       const Eigen::MatrixXcd& d) {
  const int d0 = static_cast<int>(a.rows());
  const int d1 = static_cast<int>(d.rows());
  return GradedOperator(a, Eigen::MatrixXcd::Zero(d0, d1),
                        Eigen::MatrixXcd::Zero(d1, d0), d);
}

GradedOperator GradedOperator::odd_op(int d0, int d1,
                                      const Eigen::MatrixXcd& b,
                                      const Eigen::MatrixXcd& c) {
  require(b.rows() == d0 && b.cols() == d1 && c.rows() == d1 && c.cols() == d0,
          "odd_op: block shapes must be d0 x d1 and d1 x d0");
  return GradedOperator(Eigen::MatrixXcd::Zero(d0, d0), b, c,
                        Eigen::MatrixXcd::Zero(d1, d1));
}

GradedOperator GradedOperator::identity(int d0, int d1) {
  return even_op(Eigen::MatrixXcd::Identity(d0, d0),
                 Eigen::MatrixXcd::Identity(d1, d1));
}

GradedVector GradedOperator::apply(const GradedVector& x) const {
  require(x.even_dim() == even_dim() && x.odd_dim() == odd_dim(),
          "apply: dimension mismatch");
  return GradedVector(ee * x.even + eo * x.odd, oe * x.even + oo * x.odd);
}

GradedOperator GradedOperator::operator*(const GradedOperator& r) const {
  require(even_dim() == r.even_dim() && odd_dim() == r.odd_dim(),
          "operator*: dimension mismatch");
  return GradedOperator(ee * r.ee + eo * r.oe, ee * r.eo + eo * r.oo,
                        oe * r.ee + oo * r.oe, oe * r.eo + oo * r.oo);
}

GradedOperator GradedOperator::operator+(const GradedOperator& r) const {
  return GradedOperator(ee + r.ee, eo + r.eo, oe + r.oe, oo + r.oo);
}

GradedOperator GradedOperator::operator-(const GradedOperator& r) const {
  return GradedOperator(ee - r.ee, eo - r.eo, oe - r.oe, oo - r.oo);
}

GradedOperator GradedOperator::scaled(Complex c) const {
  return GradedOperator(c * ee, c * eo, c * oe, c * oo);
}

GradedOperator GradedOperator::hilbert_adjoint() const {
  return GradedOperator(ee.adjoint(), oe.adjoint(), eo.adjoint(),
                        oo.adjoint());
}

double GradedOperator::norm() const {
  return std::sqrt(ee.squaredNorm() + eo.squaredNorm() + oe.squaredNorm() +
                   oo.squaredNorm());
}

Parity parity(const GradedOperator& t, double tol) {
  const double scale = block_scale(t);
  const double diag = std::max(t.ee.size() ? t.ee.cwiseAbs().maxCoeff() : 0.0,
                               t.oo.size() ? t.oo.cwiseAbs().maxCoeff() : 0.0);
  const double off = std::max(t.eo.size() ? t.eo.cwiseAbs().maxCoeff() : 0.0,
                              t.oe.size() ? t.oe.cwiseAbs().maxCoeff() : 0.0);
  if (off <= tol * scale) return Parity::Even;
  if (diag <= tol * scale) return Parity::Odd;
  return Parity::Mixed;
}

Complex super_form(const GradedVector& x, const GradedVector& y) {
  require(x.even_dim() == y.even_dim() && x.odd_dim() == y.odd_dim(),
          "super_form: dimension mismatch");
  // <x,y> = (x0,y0) + i (x1,y1); cross-parity blocks contribute nothing.
  return x.even.dot(y.even) + Complex(0, 1) * x.odd.dot(y.odd);
}

GradedOperator super_adjoint(const GradedOperator& t) {
  const Parity p = parity(t);
  require(p != Parity::Mixed, "super_adjoint: operator must be homogeneous");
  if (p == Parity::Even) {
    // Even operators: the super adjoint coincides with the Hilbert adjoint.
    return t.hilbert_adjoint();
  }
  // Odd blocks solve the defining relation with the factor i of the odd form:
  //   eo-dagger = i (oe)^*,  oe-dagger = i (eo)^*.
  const Complex i(0, 1);
  return GradedOperator::odd_op(t.even_dim(), t.odd_dim(),
                                i * t.oe.adjoint(), i * t.eo.adjoint());
}

GradedOperator super_bracket(const GradedOperator& a,
                             const GradedOperator& b) {
  const Parity pa = parity(a);
  const Parity pb = parity(b);
  require(pa != Parity::Mixed && pb != Parity::Mixed,
          "super_bracket: operands must be homogeneous");
  const double sign =
      (pa == Parity::Odd && pb == Parity::Odd) ? -1.0 : 1.0;
  return a * b - (b * a).scaled(sign);
}

}  // namespace sqf::supergrade
