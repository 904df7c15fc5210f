#include "ftstab/control.hpp"

#include <cmath>

namespace ftstab {

namespace detail {

double law_value(ControlLawKind kind, double gain, double exponent, double phi) {
  switch (kind) {
    case ControlLawKind::NonSmooth:
      return gain * signed_pow(phi, exponent);
    case ControlLawKind::Standard:
      return gain * phi;
    case ControlLawKind::BangBang:
      if (phi > 0.0) return gain;
      if (phi < 0.0) return -gain;
      return 0.0;
  }
  return 0.0;
}

}  // namespace detail

ControlParams::ControlParams(double gain, double exponent, StateVector target,
                             const HermitianOperator& drift)
    : gain_(gain), exponent_(exponent), target_(std::move(target)) {
  if (!(gain_ > 0.0)) throw InvalidParam("ControlParams: gain must be > 0");
  if (!(exponent_ > 0.0 && exponent_ < 1.0)) {
    throw InvalidParam("ControlParams: exponent must lie in (0,1)");
  }
  if (drift.dim() != target_.dim()) {
    throw DimensionMismatch("ControlParams: drift/target dimensions differ");
  }
  // Eigenstate check: H0|t> must be parallel to |t>.
  const Eigen::VectorXcd& t = target_.amplitudes();
  const Eigen::VectorXcd ht = drift.matrix() * t;
  const Complex eig = t.dot(ht);
  if ((ht - eig * t).norm() > 1e-9) {
    throw InvalidParam("ControlParams: target is not an eigenstate of the drift Hamiltonian");
  }
}

double lyapunov_value(const StateVector& psi, const StateVector& target) {
  return 1.0 - fidelity_to_target(psi, target);
}

double switching_function(const StateVector& psi, const StateVector& target,
                          const HermitianOperator& h1) {
  if (psi.dim() != target.dim() || psi.dim() != h1.dim()) {
    throw DimensionMismatch("switching_function: dimensions differ");
  }
  return detail::switching_term(psi.amplitudes(), target.amplitudes(), h1.matrix());
}

double control_value(ControlLawKind kind, const ControlParams& params, const StateVector& psi,
                     const HermitianOperator& h1) {
  const double phi = switching_function(psi, params.target(), h1);
  return detail::law_value(kind, params.gain(), params.exponent(), phi);
}

double lyapunov_rate(const ControlParams& params, const StateVector& psi,
                     const HermitianOperator& h1, double u1) {
  const double phi = switching_function(psi, params.target(), h1);
  const double overlap = std::abs(psi.amplitudes().dot(params.target().amplitudes()));
  return -2.0 * u1 * overlap * phi;
}

}  // namespace ftstab
