#include "sqf/qstoch.hpp"

#include <cmath>

namespace sqf::qstoch {

int BinFock::bins_before(double t) const {
  require(t >= -1e-12 && t <= grid.horizon + 1e-12,
          "BinFock: time outside the horizon");
  const int k = static_cast<int>(std::floor(t / grid.dt() + 1e-9));
  return std::min(k, grid.bins);
}

Eigen::MatrixXcd BinFock::bin_lower() const {
  const int d = bin_dim();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d, d);
  for (int m = 1; m < d; ++m) a(m - 1, m) = std::sqrt(static_cast<double>(m));
  return a;
}

Eigen::MatrixXcd BinFock::bin_parity() const {
  const int d = bin_dim();
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(d, d);
  for (int m = 0; m < d; ++m) j(m, m) = (m % 2 == 0) ? 1.0 : -1.0;
  return j;
}

Eigen::MatrixXcd BinFock::bin_number() const {
  const int d = bin_dim();
  Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(d, d);
  for (int m = 0; m < d; ++m) n(m, m) = m;
  return n;
}

Eigen::VectorXcd BinFock::bin_coherent(Complex alpha) const {
  const int d = bin_dim();
  Eigen::VectorXcd v(d);
  Complex num(1, 0);
  double fact = 1.0;
  for (int m = 0; m < d; ++m) {
    v(m) = num / std::sqrt(fact);
    num *= alpha;
    fact *= m + 1;
  }
  return v;
}

const Eigen::VectorXcd& ProductTerm::factor(int k) const {
  for (const auto& [bin, vec] : overrides)
    if (bin == k) return vec;
  return (*base)[static_cast<size_t>(k)];
}

BinState exp_vector(const BinFock& bf, const StepFunction& u) {
  require(static_cast<int>(u.values.size()) == bf.grid.bins,
          "exp_vector: step function does not match the grid");
  auto base = std::make_shared<std::vector<Eigen::VectorXcd>>();
  const double root_dt = std::sqrt(bf.grid.dt());
  base->reserve(u.values.size());
  for (Complex uk : u.values) base->push_back(bf.bin_coherent(uk * root_dt));
  BinState s;
  s.terms.push_back(ProductTerm{Complex(1, 0), base, {}});
  return s;
}

BinState apply(const BinFock& bf, const BinOperator& op, const BinState& s) {
  BinState out;
  out.terms.reserve(op.terms.size() * s.terms.size());
  for (const auto& ot : op.terms) {
    for (const auto& st : s.terms) {
      ProductTerm t = st;
      t.coeff *= ot.coeff;
      for (const auto& [bin, mat] : ot.factors) {
        require(bin >= 0 && bin < bf.grid.bins, "apply: bin out of range");
        Eigen::VectorXcd moved = mat * st.factor(bin);
        bool replaced = false;
        for (auto& [obin, ovec] : t.overrides) {
          if (obin == bin) {
            ovec = std::move(moved);
            replaced = true;
            break;
          }
        }
        if (!replaced) t.overrides.emplace_back(bin, std::move(moved));
      }
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

BinState state_add(const BinState& a, const BinState& b) {
  BinState out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return out;
}

BinState state_scale(const BinState& a, Complex c) {
  BinState out = a;
  for (auto& t : out.terms) t.coeff *= c;
  return out;
}

Complex inner(const BinFock& bf, const BinState& a, const BinState& b) {
  Complex acc(0, 0);
  const int n = bf.grid.bins;
  for (const auto& ta : a.terms) {
    for (const auto& tb : b.terms) {
      Complex prod = std::conj(ta.coeff) * tb.coeff;
      for (int k = 0; k < n && prod != Complex(0, 0); ++k)
        prod *= ta.factor(k).dot(tb.factor(k));
      acc += prod;
    }
  }
  return acc;
}

double norm(const BinFock& bf, const BinState& a) {
  return std::sqrt(std::max(0.0, inner(bf, a, a).real()));
}

BinOperator op_add(const BinOperator& a, const BinOperator& b) {
  BinOperator out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return out;
}

BinOperator op_scale(const BinOperator& a, Complex c) {
  BinOperator out = a;
  for (auto& t : out.terms) t.coeff *= c;
  return out;
}

BinOperator op_adjoint(const BinOperator& a) {
  BinOperator out = a;
  for (auto& t : out.terms) {
    t.coeff = std::conj(t.coeff);
    for (auto& [bin, mat] : t.factors) mat = mat.adjoint().eval();
  }
  return out;
}

BinOperator op_mul(const BinOperator& a, const BinOperator& b) {
  BinOperator out;
  out.terms.reserve(a.terms.size() * b.terms.size());
  for (const auto& ta : a.terms) {
    for (const auto& tb : b.terms) {
      OpTerm t;
      t.coeff = ta.coeff * tb.coeff;
      t.factors = tb.factors;
      for (const auto& [bin, mat] : ta.factors) {
        bool merged = false;
        for (auto& [obin, omat] : t.factors) {
          if (obin == bin) {
            omat = (mat * omat).eval();
            merged = true;
            break;
          }
        }
        if (!merged) t.factors.emplace_back(bin, mat);
      }
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

BinOperator op_identity() {
  BinOperator op;
  op.terms.push_back(OpTerm{Complex(1, 0), {}});
  return op;
}

Increments increments(const BinFock& bf, int k) {
  require(k >= 0 && k < bf.grid.bins, "increments: bin index out of range");
  const double root_dt = std::sqrt(bf.grid.dt());
  Increments inc;
  inc.dA.terms.push_back(
      OpTerm{Complex(root_dt, 0), {{k, bf.bin_lower()}}});
  inc.dA_dag = op_adjoint(inc.dA);
  inc.dLambda.terms.push_back(OpTerm{Complex(1, 0), {{k, bf.bin_number()}}});
  return inc;
}

BinOperator reflection(const BinFock& bf, double t) {
  const int upto = bf.bins_before(t);
  OpTerm term{Complex(1, 0), {}};
  term.factors.reserve(static_cast<size_t>(upto));
  const Eigen::MatrixXcd j = bf.bin_parity();
  for (int k = 0; k < upto; ++k) term.factors.emplace_back(k, j);
  BinOperator op;
  op.terms.push_back(std::move(term));
  return op;
}

std::pair<BinOperator, BinOperator> fermion_process(const BinFock& bf,
                                                    double t, int sign) {
  const int upto = bf.bins_before(t);
  const double root_dt = std::sqrt(bf.grid.dt());
  const Eigen::MatrixXcd j = bf.bin_parity();
  const Eigen::MatrixXcd a = bf.bin_lower();
  BinOperator f;
  f.terms.reserve(static_cast<size_t>(upto));
  for (int k = 0; k < upto; ++k) {
    OpTerm term{Complex(root_dt, 0), {}};
    for (int m = 0; m < k; ++m) term.factors.emplace_back(m, j);
    // sign < 0 extends the reflection through bin k itself.
    term.factors.emplace_back(k, sign >= 0 ? a : Eigen::MatrixXcd(j * a));
    f.terms.push_back(std::move(term));
  }
  return {f, op_adjoint(f)};
}

double proposition_check(const BinFock& bf, const StepFunction& u,
                         const StepFunction& v, double t, int sign) {
  const BinOperator j = reflection(bf, t);
  auto [f, fdag] = fermion_process(bf, t, sign);
  const BinState eu = exp_vector(bf, u);
  const BinState ev = exp_vector(bf, v);
  const Complex phi = inner(bf, apply(bf, j, eu), apply(bf, f, ev));
  const Complex psi = inner(bf, apply(bf, fdag, eu), apply(bf, j, ev));
  return std::abs(phi + psi);
}

Complex martingale_measure(const BinFock& bf, const StepFunction& u,
                           const StepFunction& v, double t) {
  require(static_cast<int>(u.values.size()) == bf.grid.bins &&
              static_cast<int>(v.values.size()) == bf.grid.bins,
          "martingale_measure: grid mismatch");
  Complex acc(0, 0);
  const int upto = bf.bins_before(t);
  for (int k = 0; k < upto; ++k)
    acc += std::conj(u.values[static_cast<size_t>(k)]) *
           v.values[static_cast<size_t>(k)] * bf.grid.dt();
  return acc;
}

double qsde_residual(const BinFock& bf, const StepFunction& u) {
  const BinState eu = exp_vector(bf, u);
  const double base = norm(bf, eu);
  double worst = 0.0;
  for (int k = 0; k + 1 <= bf.grid.bins; ++k) {
    const BinOperator jk = reflection(bf, bf.grid.time_at(k));
    const BinOperator jk1 = reflection(bf, bf.grid.time_at(k + 1));
    const BinOperator dlam = increments(bf, k).dLambda;
    // dJ + 2 J dLambda at step k, applied to the probe.
    BinOperator resid = op_add(op_add(jk1, op_scale(jk, Complex(-1, 0))),
                               op_scale(op_mul(jk, dlam), Complex(2, 0)));
    worst = std::max(worst, norm(bf, apply(bf, resid, eu)) / base);
  }
  return worst;
}

double car_residual(const BinFock& bf, const StepFunction& u, double t,
                    int sign) {
  auto [f, fdag] = fermion_process(bf, t, sign);
  const BinState eu = exp_vector(bf, u);
  const BinState anti = state_add(apply(bf, f, apply(bf, fdag, eu)),
                                  apply(bf, fdag, apply(bf, f, eu)));
  const double tt = bf.grid.dt() * bf.bins_before(t);
  const BinState resid = state_add(anti, state_scale(eu, Complex(-tt, 0)));
  return norm(bf, resid) / norm(bf, eu);
}

double nilpotency_residual(const BinFock& bf, const StepFunction& u, double t,
                           int sign) {
  auto [f, fdag] = fermion_process(bf, t, sign);
  const BinState eu = exp_vector(bf, u);
  return norm(bf, apply(bf, f, apply(bf, f, eu))) / norm(bf, eu);
}

Eigen::MatrixXcd dense_operator(const BinFock& bf, const BinOperator& op) {
  const int n = bf.grid.bins;
  const int d = bf.bin_dim();
  double total = std::pow(d, n);
  require(total <= 1024, "dense_operator: space too large");
  const int dim = static_cast<int>(total);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : op.terms) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1);
    for (int k = n - 1; k >= 0; --k) {
      // bin 0 is the fastest index, matching ProductTerm contraction order
      Eigen::MatrixXcd fk = Eigen::MatrixXcd::Identity(d, d);
      for (const auto& [bin, mat] : term.factors)
        if (bin == k) fk = mat;
      Eigen::MatrixXcd next(acc.rows() * d, acc.cols() * d);
      for (int i = 0; i < acc.rows(); ++i)
        for (int jj = 0; jj < acc.cols(); ++jj)
          next.block(i * d, jj * d, d, d) = acc(i, jj) * fk;
      acc = std::move(next);
    }
    out += term.coeff * acc;
  }
  return out;
}

Eigen::VectorXcd dense_state(const BinFock& bf, const BinState& s) {
  const int n = bf.grid.bins;
  const int d = bf.bin_dim();
  double total = std::pow(d, n);
  require(total <= 65536, "dense_state: space too large");
  const int dim = static_cast<int>(total);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
  for (const auto& term : s.terms) {
    Eigen::VectorXcd acc = Eigen::VectorXcd::Ones(1);
    for (int k = n - 1; k >= 0; --k) {
      const Eigen::VectorXcd& fk = term.factor(k);
      Eigen::VectorXcd next(acc.size() * d);
      for (int i = 0; i < acc.size(); ++i) next.segment(i * d, d) = acc(i) * fk;
      acc = std::move(next);
    }
    out += term.coeff * acc;
  }
  return out;
}

}  // namespace sqf::qstoch
