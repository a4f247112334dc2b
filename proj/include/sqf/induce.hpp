#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sqf/fock.hpp"
#include "sqf/poincare.hpp"
#include "sqf/spinbundle.hpp"

namespace sqf::induce {

using poincare::FourVector;
using poincare::PoincareElement;
using poincare::SL2;

/// Spinor-valued momentum function on the forward cone, held as a closed-form
/// evaluator so group actions compose pointwise and never leave the domain.
/// The sample set is a fixed list of cone points used for constraint checks
/// and pointwise comparisons.
struct Section {
  std::function<Eigen::Vector4cd(const FourVector&)> eval;
  std::vector<FourVector> samples;
};

/// Gaussian-profile section: amplitude exp(-|p3 - center|^2 / (2 width^2))
/// times the fiber (or helicity) projection of a reference spinor.
/// helicity: +1, -1, or 0 for the full fiber.
Section gaussian_section(const Eigen::Vector3d& center, double width,
                         int helicity, const Eigen::Vector4cd& reference,
                         std::vector<FourVector> samples);

std::vector<FourVector> default_samples(Rng& rng, int count);

/// Largest fiber-constraint violation of s over its sample set.
double section_constraint_residual(const Section& s);

/// (U_{h,x} s)(p) = exp(i {x,p}) S(h^{*-1}) s(delta(h)^{-1} p).
Section induced_apply(const SL2& h, const FourVector& x, const Section& s);
Section induced_apply(const PoincareElement& g, const Section& s);

/// Momentum-space Borel set given by a decidable predicate.
struct PVMRegion {
  std::function<bool(const FourVector&)> predicate;
  std::string label;
};

PVMRegion box_region(const FourVector& lo, const FourVector& hi);
PVMRegion halfspace_region(const FourVector& normal, double offset);
PVMRegion everything();

/// g.E: the predicate p -> E(delta(h)^{-1} p); translations act trivially.
PVMRegion transform_region(const PoincareElement& g, const PVMRegion& e);

Section pvm_apply(const PVMRegion& e, const Section& s);

/// Max pointwise residual of U_g P_E U_g^{-1} s  versus  P_{g.E} s.
double imprimitivity_check(const PoincareElement& g, const PVMRegion& e,
                           const Section& s,
                           const std::vector<FourVector>& points);

// ---------------------------------------------------------------------------
// Quadrature norm on sections.
// ---------------------------------------------------------------------------

struct ConeQuadrature {
  std::vector<FourVector> nodes;
  std::vector<double> weights;  // include the invariant measure density
};

/// Product rule: Gauss-Legendre radially on [0, r_max] and in cos(theta),
/// trapezoid in phi (exact for smooth periodic integrands).
ConeQuadrature cone_quadrature(int nr, int ntheta, int nphi, double r_max);

///  sum_i w_i fiber_inner(p_i, s(p_i), s(p_i)).
double section_norm2(const Section& s, const ConeQuadrature& q);

// ---------------------------------------------------------------------------
// Cocycles.
// ---------------------------------------------------------------------------

/// Data of the block map v(t) = t u0 (+) (+)_j (e^{-i t H_j} u_j - u_j).
struct FirstOrderCocycleSpec {
  Eigen::VectorXcd u0;
  std::vector<std::pair<Eigen::MatrixXcd, Eigen::VectorXcd>> blocks;
};

/// The stacked vector v(t); throws if any H_j fails to be Hermitian.
Eigen::VectorXcd first_order_cocycle(double t,
                                     const FirstOrderCocycleSpec& spec);

/// The unitary U_t = 1 (+) (+)_j e^{-i t H_j} on the stacked space, so that
/// v(t+s) = v(t) + U_t v(s).
Eigen::MatrixXcd cocycle_translation(double t,
                                     const FirstOrderCocycleSpec& spec);

/// Cocycle machinery over the cone  X = G / H0  with H0 the little group at
/// the base point (translations included).  m is an honest homomorphism of H0
/// into the phase-extended Weyl group; c is a tabulated Borel section of the
/// coset space with c(x0) = e.
struct CocycleData {
  FourVector x0;
  std::function<fock::WeylElement(const PoincareElement&)> m;
  std::vector<std::pair<FourVector, PoincareElement>> section_table;
  double lookup_tol = 1e-6;
};

/// Little-group Weyl homomorphism: the translation part contributes the
/// admissible character exp(i {x0, x}); the SL2 part m_{z,a} acts through the
/// real two-dimensional cocycle v = kappa a z with rotation arg(z^2), whose
/// Weyl multiplier vanishes identically, so m is a true homomorphism.
fock::WeylElement e2_weyl_homomorphism(const PoincareElement& g,
                                       double kappa);

/// Build cocycle data whose section table covers the given cone points (the
/// base point is always included, with c(x0) = e).
CocycleData make_cocycle_data(double kappa,
                              const std::vector<FourVector>& coset_points);

/// g.x0 in the coset picture: delta(h) x0.
FourVector coset_point(const CocycleData& cd, const PoincareElement& g);

/// Tabulated section lookup; throws on unknown cosets.
PoincareElement section_at(const CocycleData& cd, const FourVector& x);

/// b(g) = m(c(beta(g))^{-1} g); restricted to the little group b = m.
fock::WeylElement cocycle_b(const CocycleData& cd, const PoincareElement& g);

/// Strict cocycle value  phi(g1, g2) = b(g1 g2) b(g2)^{-1}.
fock::WeylElement strict_cocycle(const CocycleData& cd,
                                 const PoincareElement& g1,
                                 const PoincareElement& g2);

}  // namespace sqf::induce
