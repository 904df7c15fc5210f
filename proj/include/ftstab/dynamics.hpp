#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ftstab/coherence.hpp"
#include "ftstab/control.hpp"
#include "ftstab/qstate.hpp"

namespace ftstab {

enum class IntegrationMethod { RK4, Euler };

/// Fixed-step integrator settings. A fixed step keeps trajectories
/// bit-reproducible; the feedback is continuous, so no stiff machinery is
/// needed. Defaults resolve the reference experiments: dt = 1e-4 a.u.,
/// horizon 15 a.u.
struct IntegratorConfig {
  double dt = 1e-4;
  double t_max = 15.0;
  IntegrationMethod method = IntegrationMethod::RK4;
  bool renormalize_each_step = true;

  void validate() const;
};

enum class TrajectoryStatus {
  Completed,      // ran to t_max
  TargetReached,  // polar run terminated at the r1 pole threshold
};

/// Uniformly sampled record of a controlled two-level run. All columns have
/// the same length; times are i*dt. `norms` holds the state norm produced by
/// the raw integration step, recorded before any renormalization, so norm
/// drift stays observable with renormalization enabled. `g` records
/// |cos(phi)|^{alpha+1} along the trajectory for the stability analysis.
struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::Vector2cd> states;
  std::vector<double> controls;
  std::vector<double> lyapunov;
  std::vector<PolarDecomposition> polar;
  std::vector<double> norms;
  std::vector<double> g;
  TrajectoryStatus status = TrajectoryStatus::Completed;
  double dt = 0.0;

  size_t size() const { return times.size(); }
};

/// Scalar finite-time prototype dy/dt = -k sign(y) |y|^alpha.
struct ScalarPrototype {
  double k;
  double alpha;
  double y0;

  ScalarPrototype(double k_, double alpha_, double y0_);
};

/// Record of a scalar prototype run; `lyapunov` holds |y|.
struct ScalarTrajectory {
  std::vector<double> times;
  std::vector<double> values;
  std::vector<double> lyapunov;
  double dt = 0.0;

  size_t size() const { return times.size(); }
};

/// Rates of the polar representation (dr1, dr2, dphi_a, dphi_b).
struct PolarRates {
  double dr1;
  double dr2;
  double dphi_a;
  double dphi_b;
};

/// Radial subsystem rates for a given g = |cos(phi)|^{alpha+1}:
///   dr1 = -K r1^alpha r2 g,   dr2 = K r1^{alpha+1} g.
/// Well defined at both poles (unlike the phase rates).
struct RadialRates {
  double dr1;
  double dr2;
};

/// Drift Hamiltonian diag(1, -1) of the spin-1/2 system (|0>, |1> are its
/// eigenstates with eigenvalues +1, -1).
HermitianOperator spin_half_drift();

/// Control Hamiltonian [[0, -i], [i, 0]] of the spin-1/2 system.
HermitianOperator spin_half_coupling();

/// d|psi>/dt = -i (H0 + u1 H1) |psi>, hbar = 1. Any dimension.
Eigen::VectorXcd schrodinger_rhs(const StateVector& psi, double u1, const HermitianOperator& h0,
                                 const HermitianOperator& h1);

/// Integrate the controlled two-level system in the state-vector
/// representation. The control is recomputed from the current state at every
/// stage evaluation of the step (true state feedback, not frozen per step).
Trajectory simulate(const StateVector& psi0, ControlLawKind kind, const ControlParams& params,
                    const IntegratorConfig& cfg, const HermitianOperator& h0,
                    const HermitianOperator& h1);

/// Full polar rates with the non-smooth law substituted:
///   dr1   = -K r1^alpha r2 |cos phi|^{alpha+1}
///   dphi_a = -1 - u1 r2 sin(phi) / r1
///   dr2   =  K |r1 cos phi|^{alpha+1}
///   dphi_b =  1 - u1 r1 sin(phi) / r2
/// Throws PolarSingularity when r1 < 1e-9 or r2 < 1e-9 (the phase rates
/// divide by the radii); switch representation near the poles.
PolarRates polar_rhs(const PolarDecomposition& p, const ControlParams& params);

/// Radial rates with g frozen as an input; see RadialRates.
RadialRates polar_radial_rates(double r1, double r2, double g, const ControlParams& params);

/// Integrate the polar representation (non-smooth law). Terminates early
/// with TargetReached once r1 falls below the pole threshold 1e-9; the
/// state-vector representation is the fallback of record near poles.
Trajectory simulate_polar(const PolarDecomposition& p0, const ControlParams& params,
                          const IntegratorConfig& cfg);

/// Integrate the coherence-vector representation,
///   ds/dt = (1/trace_norm) (A0 + u1 A1) s,
/// with u1 computed from the state reconstructed on the Bloch sphere.
/// trace_norm is the basis normalization constant the adjoint matrices were
/// built with (2 for the Pauli basis).
Trajectory simulate_coherence(const CoherenceVector& s0, ControlLawKind kind,
                              const ControlParams& params, const IntegratorConfig& cfg,
                              const AdjointMatrix& a0, const AdjointMatrix& a1,
                              double trace_norm = 2.0);

/// Closed-form solution of the scalar prototype:
///   sign(y0) [ |y0|^{1-alpha} - k (1-alpha) t ]^{1/(1-alpha)}
/// for t below the settling time |y0|^{1-alpha} / (k (1-alpha)), 0 after.
double scalar_closed_form(const ScalarPrototype& proto, double t);

/// Numeric integration of the scalar prototype; oracle companion to
/// scalar_closed_form.
ScalarTrajectory scalar_simulate(const ScalarPrototype& proto, const IntegratorConfig& cfg);

}  // namespace ftstab
