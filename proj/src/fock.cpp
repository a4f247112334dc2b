#include "sqf/fock.hpp"

#include <algorithm>
#include <numeric>

namespace sqf::fock {

ExpVectorState exp_vector(const Eigen::VectorXcd& u) {
  ExpVectorState s;
  s.terms.emplace_back(Complex(1, 0), u);
  return s;
}

Complex exp_inner(const ExpVectorState& x, const ExpVectorState& y) {
  Complex acc(0, 0);
  for (const auto& [cx, ux] : x.terms) {
    for (const auto& [cy, uy] : y.terms) {
      require(ux.size() == uy.size(), "exp_inner: dimension mismatch");
      acc += std::conj(cx) * cy * std::exp(ux.dot(uy));
    }
  }
  return acc;
}

WeylOp::WeylOp(Eigen::VectorXcd v_, Eigen::MatrixXcd U_)
    : v(std::move(v_)), U(std::move(U_)) {
  require(U.rows() == U.cols() && U.rows() == v.size(),
          "WeylOp: shape mismatch");
  const Eigen::MatrixXcd gram = U.adjoint() * U;
  require((gram - Eigen::MatrixXcd::Identity(U.rows(), U.cols())).norm() <=
              1e-12 * std::max<double>(1.0, static_cast<double>(U.rows())),
          "WeylOp: U must be unitary");
}

WeylOp WeylOp::displacement(const Eigen::VectorXcd& v) {
  return WeylOp(v, Eigen::MatrixXcd::Identity(v.size(), v.size()));
}

WeylOp WeylOp::rotation(const Eigen::MatrixXcd& U) {
  return WeylOp(Eigen::VectorXcd::Zero(U.rows()), U);
}

WeylOp WeylOp::identity(int dim) {
  return WeylOp(Eigen::VectorXcd::Zero(dim),
                Eigen::MatrixXcd::Identity(dim, dim));
}

ExpVectorState weyl_apply(const WeylOp& w, const ExpVectorState& x) {
  ExpVectorState out;
  out.terms.reserve(x.terms.size());
  const double v2 = w.v.squaredNorm();
  for (const auto& [c, u] : x.terms) {
    require(u.size() == w.v.size(), "weyl_apply: dimension mismatch");
    const Eigen::VectorXcd rotated = w.U * u;
    const Complex factor = std::exp(Complex(-0.5 * v2, 0) - w.v.dot(rotated));
    out.terms.emplace_back(c * factor, rotated + w.v);
  }
  return out;
}

std::pair<Complex, WeylOp> weyl_compose(const WeylOp& a, const WeylOp& b) {
  const Eigen::VectorXcd rotated = a.U * b.v;
  const Complex phase = std::exp(Complex(0, -1) * a.v.dot(rotated).imag());
  return {phase, WeylOp(a.v + rotated, a.U * b.U)};
}

WeylElement WeylElement::identity(int dim) {
  return {Complex(1, 0), WeylOp::identity(dim)};
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
  auto [phase, op_] = weyl_compose(op, rhs.op);
  return {this->phase * rhs.phase * phase, op_};
}

WeylElement WeylElement::inverse() const {
  // W(v,U)^{-1} = W(-U^{-1} v, U^{-1}); the residual phase follows from the
  // multiplier law applied to W W^{-1} = 1.
  const Eigen::MatrixXcd uinv = op.U.adjoint();
  const Eigen::VectorXcd vinv = -(uinv * op.v);
  const Complex mult = std::exp(Complex(0, -1) * op.v.dot(op.U * vinv).imag());
  return {std::conj(phase) / mult, WeylOp(vinv, uinv)};
}

double weyl_distance(const WeylElement& x, const WeylElement& y) {
  return std::abs(x.phase - y.phase) + (x.op.v - y.op.v).norm() +
         (x.op.U - y.op.U).norm();
}

// ---------------------------------------------------------------------------

TruncatedFock::TruncatedFock(int modes_, int cutoff_)
    : modes(modes_), cutoff(cutoff_) {
  require(modes >= 1 && cutoff >= 1, "TruncatedFock: need modes,cutoff >= 1");
  double d = std::pow(cutoff + 1.0, modes);
  require(d <= 4e6, "TruncatedFock: dimension too large");
}

int TruncatedFock::dim() const {
  int d = 1;
  for (int m = 0; m < modes; ++m) d *= cutoff + 1;
  return d;
}

int TruncatedFock::occupation(int state_index, int mode) const {
  int idx = state_index;
  for (int m = 0; m < mode; ++m) idx /= cutoff + 1;
  return idx % (cutoff + 1);
}

Eigen::MatrixXcd TruncatedFock::lower(int mode) const {
  require(mode >= 0 && mode < modes, "lower: mode out of range");
  const int d = dim();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d, d);
  int stride = 1;
  for (int m = 0; m < mode; ++m) stride *= cutoff + 1;
  for (int s = 0; s < d; ++s) {
    const int n = occupation(s, mode);
    if (n >= 1) a(s - stride, s) = std::sqrt(static_cast<double>(n));
  }
  return a;
}

Eigen::MatrixXcd TruncatedFock::raise(int mode) const {
  return lower(mode).adjoint();
}

Eigen::MatrixXcd TruncatedFock::number() const {
  const int d = dim();
  Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(d, d);
  for (int s = 0; s < d; ++s) {
    int total = 0;
    for (int m = 0; m < modes; ++m) total += occupation(s, m);
    n(s, s) = total;
  }
  return n;
}

Eigen::MatrixXcd TruncatedFock::parity() const {
  const int d = dim();
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(d, d);
  for (int s = 0; s < d; ++s) {
    int total = 0;
    for (int m = 0; m < modes; ++m) total += occupation(s, m);
    j(s, s) = (total % 2 == 0) ? 1.0 : -1.0;
  }
  return j;
}

bool TruncatedFock::trusted(int state_index) const {
  for (int m = 0; m < modes; ++m)
    if (occupation(state_index, m) > cutoff - 2) return false;
  return true;
}

Eigen::MatrixXcd TruncatedFock::trusted_projector() const {
  const int d = dim();
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(d, d);
  for (int s = 0; s < d; ++s)
    if (trusted(s)) p(s, s) = 1.0;
  return p;
}

LadderSet stone_ladder(const TruncatedFock& f, const Eigen::VectorXcd& g) {
  require(g.size() == f.modes, "stone_ladder: direction dimension mismatch");
  require(g.norm() > 0, "stone_ladder: zero direction vector");
  const int d = f.dim();
  LadderSet out;
  out.a = Eigen::MatrixXcd::Zero(d, d);
  out.adag = Eigen::MatrixXcd::Zero(d, d);
  // a(g) linear in g, a(g)-dagger antilinear, so that q(g) = p(ig).
  for (int m = 0; m < f.modes; ++m) {
    const Eigen::MatrixXcd am = f.lower(m);
    out.a += g(m) * am;
    out.adag += std::conj(g(m)) * am.adjoint();
  }
  out.q = out.a + out.adag;
  out.p = Complex(0, 1) * (out.adag - out.a);
  return out;
}

std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> parity_ops(
    const TruncatedFock& f) {
  return {f.number(), f.parity()};
}

// ---------------------------------------------------------------------------

namespace {

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int tensor_index(const std::vector<int>& digits, int d) {
  int idx = 0;
  for (int x : digits) idx = idx * d + x;
  return idx;
}

int perm_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

Eigen::MatrixXcd perm_projector(int d, int n, bool antisym) {
  if (n == 0) return Eigen::MatrixXcd::Identity(1, 1);
  long dimL = 1;
  for (int i = 0; i < n; ++i) dimL *= d;
  const int dim = static_cast<int>(dimL);
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    const double sgn = antisym ? perm_sign(perm) : 1.0;
    std::vector<int> digits(static_cast<size_t>(n));
    for (int col = 0; col < dim; ++col) {
      // digits of the source basis vector
      int rest = col;
      for (int slot = n - 1; slot >= 0; --slot) {
        digits[static_cast<size_t>(slot)] = rest % d;
        rest /= d;
      }
      // U_sigma e_{i_1 x ... x i_n} = e_{i_{sigma^{-1}(1)} x ...}
      std::vector<int> moved(static_cast<size_t>(n));
      for (int slot = 0; slot < n; ++slot)
        moved[static_cast<size_t>(slot)] =
            digits[static_cast<size_t>(perm[static_cast<size_t>(slot)])];
      proj(tensor_index(moved, d), col) += sgn;
    }
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return proj / static_cast<double>(count);
}

Eigen::MatrixXcd range_basis(const Eigen::MatrixXcd& projector) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(projector);
  std::vector<int> keep;
  for (int i = 0; i < projector.rows(); ++i)
    if (es.eigenvalues()(i) > 0.5) keep.push_back(i);
  Eigen::MatrixXcd basis(projector.rows(), static_cast<int>(keep.size()));
  for (size_t j = 0; j < keep.size(); ++j)
    basis.col(static_cast<int>(j)) = es.eigenvectors().col(keep[j]);
  return basis;
}

}  // namespace

Eigen::MatrixXcd symmetrizer(int d, int n) { return perm_projector(d, n, false); }

Eigen::MatrixXcd antisymmetrizer(int d, int n) {
  return perm_projector(d, n, true);
}

long sym_dim(int d, int n) { return binomial(d + n - 1, n); }

long asym_dim(int d, int n) { return binomial(d, n); }

SuperFock build_super_fock(int d, int degree_cap) {
  require(d >= 1 && degree_cap >= 0, "build_super_fock: bad arguments");
  SuperFock sf;
  sf.single_dim = d;
  sf.degree_cap = degree_cap;
  sf.even_dim = 0;
  sf.odd_dim = 0;
  for (int n = 0; n <= degree_cap; ++n) {
    sf.sym_bases.push_back(range_basis(symmetrizer(d, n)));
    sf.asym_bases.push_back(range_basis(antisymmetrizer(d, n)));
    sf.even_dim += static_cast<int>(sf.sym_bases.back().cols());
    sf.odd_dim += static_cast<int>(sf.asym_bases.back().cols());
  }
  return sf;
}

Eigen::VectorXd SuperFock::parity_diag() const {
  Eigen::VectorXd p(even_dim + odd_dim);
  p.head(even_dim).setOnes();
  p.tail(odd_dim).setConstant(-1.0);
  return p;
}

}  // namespace sqf::fock
