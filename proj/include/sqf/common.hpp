#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace sqf {

using Complex = std::complex<double>;

// Default absolute tolerance for algebraic identities at desk dimensions.
inline constexpr double kAlgebraTol = 1e-12;

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

/// Deterministic random source shared by the test suites.
///
/// Gaussian variates are produced by an explicit Box-Muller transform so a
/// given (seed, suite) pair replays the same stream on every run, independent
/// of the standard library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() {
    // 53-bit mantissa in [0,1).
    return (eng_() >> 11) * (1.0 / 9007199254740992.0);
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * M_PI * u2;
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
  }

  Complex cnormal() { return Complex(normal(), normal()) / std::sqrt(2.0); }

  Eigen::VectorXcd cnormal_vector(int n) {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = cnormal();
    return v;
  }

  Eigen::MatrixXcd cnormal_matrix(int r, int c) {
    Eigen::MatrixXcd m(r, c);
    for (int j = 0; j < c; ++j)
      for (int i = 0; i < r; ++i) m(i, j) = cnormal();
    return m;
  }

  /// Haar-ish random unitary from the QR of a Gaussian matrix.
  Eigen::MatrixXcd random_unitary(int n) {
    Eigen::MatrixXcd g = cnormal_matrix(n, n);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
      Complex d = r(i, i);
      q.col(i) *= (std::abs(d) > 0) ? d / std::abs(d) : Complex(1, 0);
    }
    return q;
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Stable stream id for (seed, suite-name) pairs: FNV-1a over the name mixed
/// into the seed, so every suite owns an independent reproducible stream.
inline std::uint64_t stream_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return seed ^ h;
}

}  // namespace sqf
