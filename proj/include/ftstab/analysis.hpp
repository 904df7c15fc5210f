#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ftstab/dynamics.hpp"

namespace ftstab {

/// Outcome of settling detection plus any analytic bounds attached to it.
/// `satisfied` is true when a settling time was found and it does not exceed
/// any bound that is present (vacuously true over absent bounds).
struct SettlingReport {
  std::optional<double> settling_time;
  double threshold = 0.0;
  std::optional<double> bound_eq17;
  std::optional<double> bound_remark9;
  bool satisfied = false;
};

/// Positive dilation weights (d_1, ..., d_m); all ones is the standard dilation.
struct DilationSpec {
  std::vector<double> weights;
};

/// Estimated homogeneity degree and the max deviation of the per-sample
/// estimates from their mean.
struct HomogeneityEstimate {
  double degree = 0.0;
  double residual = 0.0;
};

struct CriterionCheck {
  bool holds = false;
  double max_violation = 0.0;
};

struct NeighborhoodResult {
  double u_value = 0.0;
  bool inside = false;
};

using ScalarField = std::function<double(double)>;
using VectorField = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// Earliest recorded time t* such that V(t) < eps_v for every recorded
/// t >= t* (a first crossing is not enough; the trajectory must stay below).
/// Absent when even the final sample violates the threshold.
SettlingReport detect_settling(std::span<const double> times, std::span<const double> lyapunov,
                               double eps_v);
SettlingReport detect_settling(const Trajectory& traj, double eps_v);
SettlingReport detect_settling(const ScalarTrajectory& traj, double eps_v);

/// Recompute `satisfied` after bounds were attached.
void finalize_satisfied(SettlingReport& report);

/// Key-value serialization of a report (one `key=value` per line).
std::string to_key_value(const SettlingReport& report);

/// Settling-time bound V0^{1-alpha} / (c (1-alpha)) from the differential
/// inequality dV/dt + c V^alpha <= 0.
double settling_bound_eq17(double v0, double c, double alpha);

/// Neighborhood settling-time bound 4 / (|c1| (1-alpha)) * (r1_0^2)^{(1-alpha)/2},
/// valid for r1_0 < sqrt(3)/2 (OutOfNeighborhood otherwise).
double settling_bound_remark9(double r1_0, double c1, double alpha);

/// Finite-difference check of dV/dt + c V^alpha <= 0 along a trajectory,
/// with tolerance 10*dt (first-order envelope over the sampled data).
/// The span overload accepts a per-sample c (size 1 = constant), which is
/// how the trajectory-dependent constants of the two-level analysis are fed.
CriterionCheck check_lyapunov_criterion(std::span<const double> times,
                                        std::span<const double> lyapunov,
                                        std::span<const double> c, double alpha);
CriterionCheck check_lyapunov_criterion(const Trajectory& traj, double c, double alpha);
CriterionCheck check_lyapunov_criterion(const ScalarTrajectory& traj, double c, double alpha);

/// Comparison-lemma verification: V(t) <= mu(t, proto.y0) + 1e-6 at every
/// sample, where mu is the scalar closed form. The prototype is expected to
/// start at m0 = V(0) with consistently translated (c, alpha).
bool comparison_check(std::span<const double> times, std::span<const double> lyapunov,
                      const ScalarPrototype& proto);
bool comparison_check(const Trajectory& traj, const ScalarPrototype& proto);
bool comparison_check(const ScalarTrajectory& traj, const ScalarPrototype& proto);

/// Log-ratio estimate of the homogeneity degree k of a vector field f with
/// respect to the dilation d: for each sample r, scale eps and component j,
///   k = log(f_j(delta_eps r) / f_j(r)) / log(eps) - d_j.
/// Components where f vanishes at a sample are skipped; if every sample is
/// degenerate the estimate is impossible and DegenerateSample is thrown.
HomogeneityEstimate estimate_homogeneity_degree(const VectorField& f, const DilationSpec& d,
                                                const std::vector<Eigen::VectorXd>& samples,
                                                const std::vector<double>& epsilons);

/// Finite-time stability certificate for homogeneous fields: asymptotic
/// stability together with negative degree.
bool homogeneous_finite_time_certificate(double degree, bool asymptotically_stable);

/// Two-sided level-set bound for homogeneous scalar fields on R:
///   min_{V1(z)=1} V2(z) * V1(r)^{l2/l1} <= V2(r) <= max_{V1(z)=1} V2(z) * V1(r)^{l2/l1}.
/// V1 must be positive definite and homogeneous of degree l1 > 0, V2
/// homogeneous of degree l2 > 0; the level set {V1 = 1} is {+-V1(+-1)^{-1/l1}}.
bool homogeneity_sandwich_check(const ScalarField& v1, const ScalarField& v2, double l1, double l2,
                                const std::vector<double>& samples);

/// Coefficient binomial(2j, j) / (2^{2j} (2j - 1)) of the sqrt(1 - x) series,
/// evaluated in log space so large j cannot overflow.
double series_coefficient(int j);

/// U(r1) = 2 K g (1 - sqrt(1 - r1^2)) and the flag U < c0/2 with c0 = 2 K g.
/// Algebraically the flag is equivalent to r1 < sqrt(3)/2.
NeighborhoodResult neighborhood_check(double r1, double gain, double g);

}  // namespace ftstab
