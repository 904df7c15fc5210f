#pragma once

#include <Eigen/Dense>
#include <complex>

#include "ftstab/errors.hpp"

namespace ftstab {

using Complex = std::complex<double>;

/// Reduce an angle to the principal range [0, 2*pi).
double mod_two_pi(double angle);

/// sign(x)*|x|^a with sign(0) = 0. Guarded for |x| < 1e-300 so the log to
/// the fractional power never produces NaN near a zero of the argument.
double signed_pow(double x, double a);

/// Unit-norm pure state of an n-level system (n >= 2).
///
/// The constructor accepts vectors whose norm deviates from 1 by less than
/// 1e-6 and renormalizes them silently (integrator drift); larger deviations
/// are rejected so genuine bugs are not masked.
class StateVector {
 public:
  explicit StateVector(Eigen::VectorXcd amplitudes);

  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::Index dim() const { return amps_.size(); }
  Complex operator[](Eigen::Index i) const { return amps_(i); }

 private:
  Eigen::VectorXcd amps_;
};

/// n x n Hermitian matrix (energy units, hbar = 1). Hermiticity is checked
/// entrywise to 1e-12 at construction.
class HermitianOperator {
 public:
  explicit HermitianOperator(Eigen::MatrixXcd entries);

  const Eigen::MatrixXcd& matrix() const { return entries_; }
  Eigen::Index dim() const { return entries_.rows(); }

 private:
  Eigen::MatrixXcd entries_;
};

/// Exponential-form decomposition of a two-level state,
///   psi = r1 e^{i phi_a} |0> + r2 e^{i phi_b} |1>.
///
/// Convention: the phase of a zero amplitude is 0; phases live in [0, 2*pi);
/// phi is the relative phase phi_b - phi_a reduced mod 2*pi.
struct PolarDecomposition {
  double r1 = 0.0;
  double r2 = 0.0;
  double phi_a = 0.0;
  double phi_b = 0.0;
  double phi = 0.0;
};

/// Scale v to unit norm. Throws ZeroVector when ||v|| < 1e-12.
StateVector normalize(const Eigen::VectorXcd& v);

/// |<psi_f|psi>|^2, the population of the target state.
double fidelity_to_target(const StateVector& psi, const StateVector& psi_f);

/// True when psi1 and psi2 agree up to a global phase. Criterion used:
/// 1 - |<psi2|psi1>|^2 <= tol (both arguments are unit vectors, so this is
/// the infidelity between the two rays).
bool equivalent_up_to_phase(const StateVector& psi1, const StateVector& psi2,
                            double tol);

/// Magnitude/phase split of a two-level state. Reconstruction
/// r_j e^{i phi_j} recovers the input to 1e-12.
PolarDecomposition polar_decompose(const StateVector& psi);

/// Bloch-sphere angles (theta in [0, pi], phi in [0, 2*pi)) such that psi is
/// equivalent up to phase to [cos(theta/2), e^{i phi} sin(theta/2)].
/// At the poles phi is reported as 0.
std::pair<double, double> bloch_angles(const StateVector& psi);

/// State built from Bloch angles, [cos(theta/2), e^{i phi} sin(theta/2)].
StateVector state_from_bloch_angles(double theta, double phi);

}  // namespace ftstab
