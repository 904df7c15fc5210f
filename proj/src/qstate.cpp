#include "ftstab/qstate.hpp"

#include <cmath>
#include <numbers>

namespace ftstab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kNormRepairBand = 1e-6;
constexpr double kZeroNorm = 1e-12;
}  // namespace

double mod_two_pi(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;  // fmod rounding at the seam
  return r;
}

double signed_pow(double x, double a) {
  const double m = std::abs(x);
  if (m < 1e-300) return 0.0;
  const double p = std::pow(m, a);
  return x > 0.0 ? p : -p;
}

StateVector::StateVector(Eigen::VectorXcd amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() < 2) {
    throw DimensionMismatch("StateVector needs at least 2 amplitudes");
  }
  const double n = amps_.norm();
  if (!std::isfinite(n)) throw NonFinite("StateVector amplitudes are not finite");
  const double dev = std::abs(n - 1.0);
  if (dev >= kNormRepairBand) {
    throw InvalidParam("StateVector norm deviates from 1 by " + std::to_string(dev) +
                       "; use normalize() for unnormalized input");
  }
  if (dev > 0.0) amps_ /= n;
}

HermitianOperator::HermitianOperator(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw DimensionMismatch("HermitianOperator must be square");
  }
  const double asym = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (!(asym <= 1e-12)) {
    throw InvalidParam("matrix is not Hermitian (max |H - H^dag| = " + std::to_string(asym) + ")");
  }
}

StateVector normalize(const Eigen::VectorXcd& v) {
  const double n = v.norm();
  if (n < kZeroNorm) throw ZeroVector("cannot normalize a (near-)zero vector");
  return StateVector(Eigen::VectorXcd(v / n));
}

double fidelity_to_target(const StateVector& psi, const StateVector& psi_f) {
  if (psi.dim() != psi_f.dim()) {
    throw DimensionMismatch("fidelity_to_target: state dimensions differ");
  }
  // Eigen's dot conjugates its first operand: a.dot(b) = <a|b>.
  return std::norm(psi_f.amplitudes().dot(psi.amplitudes()));
}

bool equivalent_up_to_phase(const StateVector& psi1, const StateVector& psi2, double tol) {
  if (psi1.dim() != psi2.dim()) {
    throw DimensionMismatch("equivalent_up_to_phase: state dimensions differ");
  }
  if (!(tol > 0.0)) throw InvalidParam("equivalent_up_to_phase: tol must be > 0");
  return 1.0 - std::norm(psi2.amplitudes().dot(psi1.amplitudes())) <= tol;
}

PolarDecomposition polar_decompose(const StateVector& psi) {
  if (psi.dim() != 2) throw DimensionMismatch("polar_decompose: state must be two-level");
  const Complex x1 = psi[0];
  const Complex x2 = psi[1];
  PolarDecomposition p;
  p.r1 = std::abs(x1);
  p.r2 = std::abs(x2);
  p.phi_a = p.r1 == 0.0 ? 0.0 : mod_two_pi(std::arg(x1));
  p.phi_b = p.r2 == 0.0 ? 0.0 : mod_two_pi(std::arg(x2));
  p.phi = mod_two_pi(p.phi_b - p.phi_a);
  return p;
}

std::pair<double, double> bloch_angles(const StateVector& psi) {
  if (psi.dim() != 2) throw DimensionMismatch("bloch_angles: state must be two-level");
  const double r1 = std::abs(psi[0]);
  const double r2 = std::abs(psi[1]);
  const double theta = 2.0 * std::atan2(r2, r1);
  if (r1 == 0.0 || r2 == 0.0) return {theta, 0.0};
  return {theta, mod_two_pi(std::arg(psi[1]) - std::arg(psi[0]))};
}

StateVector state_from_bloch_angles(double theta, double phi) {
  Eigen::VectorXcd v(2);
  v << Complex(std::cos(theta / 2.0), 0.0),
      std::exp(Complex(0.0, phi)) * std::sin(theta / 2.0);
  return StateVector(std::move(v));
}

}  // namespace ftstab
