#pragma once

#include <Eigen/Dense>

#include "ftstab/qstate.hpp"

namespace ftstab {

enum class ControlLawKind { NonSmooth, Standard, BangBang };

/// Feedback-law parameters: gain K > 0, fractional exponent alpha in (0,1),
/// and the target state, which must be an eigenstate of the drift
/// Hamiltonian (checked to 1e-9 at construction).
class ControlParams {
 public:
  ControlParams(double gain, double exponent, StateVector target, const HermitianOperator& drift);

  double gain() const { return gain_; }
  double exponent() const { return exponent_; }
  const StateVector& target() const { return target_; }

 private:
  double gain_;
  double exponent_;
  StateVector target_;
};

namespace detail {

// Raw kernels shared with the integrators; no dimension or norm validation,
// so stage states of a Runge-Kutta step can be fed directly.

/// Im[e^{i ang(<psi|psi_f>)} <psi_f|H1|psi>], with the angle taken as 0
/// when the overlap vanishes. For the two-level system this equals
/// r1*cos(phi) of the polar decomposition.
template <class VecA, class VecB, class Mat>
double switching_term(const VecA& psi, const VecB& target, const Mat& h1) {
  const Complex overlap = psi.dot(target);  // <psi|psi_f>
  const double ang = std::abs(overlap) < 1e-300 ? 0.0 : std::arg(overlap);
  const Complex drive = target.dot(h1 * psi);  // <psi_f|H1|psi>
  return (std::exp(Complex(0.0, ang)) * drive).imag();
}

/// Feedback value for a precomputed switching term. sign(0) = 0 throughout.
double law_value(ControlLawKind kind, double gain, double exponent, double phi);

}  // namespace detail

/// V = 1 - |<psi_f|psi>|^2. Equals r1^2 for two-level states.
double lyapunov_value(const StateVector& psi, const StateVector& target);

/// The scalar whose sign and magnitude drive all three feedback laws.
double switching_function(const StateVector& psi, const StateVector& target,
                          const HermitianOperator& h1);

/// u1 for the chosen law:
///   NonSmooth: K sign(phi) |phi|^alpha    (continuous, not Lipschitz at phi = 0)
///   Standard:  K phi
///   BangBang:  K sign(phi)
/// where phi = switching_function(psi).
double control_value(ControlLawKind kind, const ControlParams& params, const StateVector& psi,
                     const HermitianOperator& h1);

/// Analytic dV/dt = -2 u1 |<psi|psi_f>| * switching_function(psi).
/// With the non-smooth law this equals -2 K r2 |r1 cos(phi)|^{alpha+1} <= 0;
/// the two expressions agree because the switching term is r1*cos(phi) and
/// the overlap magnitude is r2.
double lyapunov_rate(const ControlParams& params, const StateVector& psi,
                     const HermitianOperator& h1, double u1);

}  // namespace ftstab
