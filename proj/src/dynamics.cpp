#include "ftstab/dynamics.hpp"

#include <cmath>
#include <string>

namespace ftstab {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPoleThreshold = 1e-9;

template <class State, class F>
State step_once(const State& x, double dt, IntegrationMethod method, F&& f) {
  if (method == IntegrationMethod::Euler) {
    return x + dt * f(x);
  }
  const State k1 = f(x);
  const State k2 = f(State(x + (0.5 * dt) * k1));
  const State k3 = f(State(x + (0.5 * dt) * k2));
  const State k4 = f(State(x + dt * k3));
  return x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

size_t step_count(const IntegratorConfig& cfg) {
  return static_cast<size_t>(std::floor(cfg.t_max / cfg.dt));
}

void reserve_all(Trajectory& t, size_t n) {
  t.times.reserve(n);
  t.states.reserve(n);
  t.controls.reserve(n);
  t.lyapunov.reserve(n);
  t.polar.reserve(n);
  t.norms.reserve(n);
  t.g.reserve(n);
}

[[noreturn]] void throw_non_finite(double t) {
  throw NonFinite("state became non-finite at t = " + std::to_string(t) + " a.u.");
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!(dt > 0.0)) throw InvalidParam("IntegratorConfig: dt must be > 0");
  if (!(t_max > 0.0)) throw InvalidParam("IntegratorConfig: t_max must be > 0");
  if (!(dt <= t_max)) throw InvalidParam("IntegratorConfig: dt must not exceed t_max");
}

ScalarPrototype::ScalarPrototype(double k_, double alpha_, double y0_)
    : k(k_), alpha(alpha_), y0(y0_) {
  if (!(k > 0.0)) throw InvalidParam("ScalarPrototype: k must be > 0");
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidParam("ScalarPrototype: alpha must be in (0,1)");
}

HermitianOperator spin_half_drift() {
  Eigen::MatrixXcd h(2, 2);
  h << 1, 0, 0, -1;
  return HermitianOperator(std::move(h));
}

HermitianOperator spin_half_coupling() {
  Eigen::MatrixXcd h(2, 2);
  h << 0, -kI, kI, 0;
  return HermitianOperator(std::move(h));
}

Eigen::VectorXcd schrodinger_rhs(const StateVector& psi, double u1, const HermitianOperator& h0,
                                 const HermitianOperator& h1) {
  if (psi.dim() != h0.dim() || psi.dim() != h1.dim()) {
    throw DimensionMismatch("schrodinger_rhs: dimensions differ");
  }
  return -kI * ((h0.matrix() + u1 * h1.matrix()) * psi.amplitudes());
}

Trajectory simulate(const StateVector& psi0, ControlLawKind kind, const ControlParams& params,
                    const IntegratorConfig& cfg, const HermitianOperator& h0,
                    const HermitianOperator& h1) {
  cfg.validate();
  if (psi0.dim() != 2 || params.target().dim() != 2 || h0.dim() != 2 || h1.dim() != 2) {
    throw DimensionMismatch("simulate: the controlled system is two-level");
  }

  const Eigen::Matrix2cd mih0 = -kI * Eigen::Matrix2cd(h0.matrix());
  const Eigen::Matrix2cd mih1 = -kI * Eigen::Matrix2cd(h1.matrix());
  const Eigen::Matrix2cd h1m = h1.matrix();
  const Eigen::Vector2cd target = params.target().amplitudes();
  const double gain = params.gain();
  const double exponent = params.exponent();

  auto law = [&](const Eigen::Vector2cd& p) {
    return detail::law_value(kind, gain, exponent, detail::switching_term(p, target, h1m));
  };
  auto rhs = [&](const Eigen::Vector2cd& p) -> Eigen::Vector2cd {
    return mih0 * p + law(p) * (mih1 * p);
  };

  const size_t n = step_count(cfg);
  Trajectory traj;
  traj.dt = cfg.dt;
  reserve_all(traj, n + 1);

  Eigen::Vector2cd psi = psi0.amplitudes();
  double raw_norm = psi.norm();

  for (size_t i = 0;; ++i) {
    const double t = static_cast<double>(i) * cfg.dt;
    traj.times.push_back(t);
    traj.states.push_back(psi);
    traj.norms.push_back(raw_norm);
    traj.controls.push_back(law(psi));
    traj.lyapunov.push_back(1.0 - std::norm(target.dot(psi)));

    PolarDecomposition p;
    p.r1 = std::abs(psi(0));
    p.r2 = std::abs(psi(1));
    p.phi_a = p.r1 == 0.0 ? 0.0 : mod_two_pi(std::arg(psi(0)));
    p.phi_b = p.r2 == 0.0 ? 0.0 : mod_two_pi(std::arg(psi(1)));
    p.phi = mod_two_pi(p.phi_b - p.phi_a);
    traj.polar.push_back(p);
    traj.g.push_back(std::pow(std::abs(std::cos(p.phi)), exponent + 1.0));

    if (i == n) break;

    psi = step_once(psi, cfg.dt, cfg.method, rhs);
    if (!psi.allFinite()) throw_non_finite(t + cfg.dt);
    raw_norm = psi.norm();
    if (cfg.renormalize_each_step) psi /= raw_norm;
  }
  return traj;
}

RadialRates polar_radial_rates(double r1, double r2, double g, const ControlParams& params) {
  const double a = params.exponent();
  const double k = params.gain();
  return {-k * signed_pow(r1, a) * r2 * g, k * signed_pow(r1, a + 1.0) * g};
}

PolarRates polar_rhs(const PolarDecomposition& p, const ControlParams& params) {
  if (p.r1 < kPoleThreshold || p.r2 < kPoleThreshold) {
    throw PolarSingularity("polar rates undefined near a pole (r1 = " + std::to_string(p.r1) +
                           ", r2 = " + std::to_string(p.r2) + ")");
  }
  const double c = std::cos(p.phi);
  const double s = std::sin(p.phi);
  const double u = params.gain() * signed_pow(p.r1 * c, params.exponent());
  PolarRates r;
  r.dr1 = -u * p.r2 * c;
  r.dphi_a = -1.0 - u * p.r2 * s / p.r1;
  r.dr2 = u * p.r1 * c;
  r.dphi_b = 1.0 - u * p.r1 * s / p.r2;
  return r;
}

Trajectory simulate_polar(const PolarDecomposition& p0, const ControlParams& params,
                          const IntegratorConfig& cfg) {
  cfg.validate();
  if (p0.r2 < kPoleThreshold && p0.r1 >= kPoleThreshold) {
    throw PolarSingularity("simulate_polar: initial state at the r2 pole; use the state-vector "
                           "representation");
  }

  const double gain = params.gain();
  const double exponent = params.exponent();

  // State y = (r1, r2, phi_a, phi_b); phases accumulate unreduced and are
  // brought back to [0, 2*pi) only in the recorded samples.
  using Vec4 = Eigen::Vector4d;
  auto rhs = [&](const Vec4& y) -> Vec4 {
    PolarDecomposition p;
    p.r1 = y(0);
    p.r2 = y(1);
    p.phi = y(3) - y(2);
    const PolarRates r = polar_rhs(p, params);
    return Vec4(r.dr1, r.dr2, r.dphi_a, r.dphi_b);
  };

  const size_t n = step_count(cfg);
  Trajectory traj;
  traj.dt = cfg.dt;
  reserve_all(traj, n + 1);

  Vec4 y(p0.r1, p0.r2, p0.phi_a, p0.phi_b);
  double raw_norm = std::hypot(y(0), y(1));

  for (size_t i = 0;; ++i) {
    const double t = static_cast<double>(i) * cfg.dt;
    PolarDecomposition p;
    p.r1 = y(0);
    p.r2 = y(1);
    p.phi_a = mod_two_pi(y(2));
    p.phi_b = mod_two_pi(y(3));
    p.phi = mod_two_pi(y(3) - y(2));

    const double cphi = std::cos(p.phi);
    traj.times.push_back(t);
    traj.polar.push_back(p);
    traj.states.push_back(Eigen::Vector2cd(p.r1 * std::exp(kI * p.phi_a),
                                           p.r2 * std::exp(kI * p.phi_b)));
    traj.norms.push_back(raw_norm);
    traj.controls.push_back(gain * signed_pow(p.r1 * cphi, exponent));
    traj.lyapunov.push_back(p.r1 * p.r1);
    traj.g.push_back(std::pow(std::abs(cphi), exponent + 1.0));

    if (p.r1 < kPoleThreshold) {
      traj.status = TrajectoryStatus::TargetReached;
      break;
    }
    if (i == n) break;

    try {
      y = step_once(y, cfg.dt, cfg.method, rhs);
    } catch (const PolarSingularity&) {
      // A stage state dipped below the pole threshold during the final
      // approach; the recorded trajectory already ends at the target.
      traj.status = TrajectoryStatus::TargetReached;
      break;
    }
    if (!y.allFinite()) throw_non_finite(t + cfg.dt);
    raw_norm = std::hypot(y(0), y(1));
    if (cfg.renormalize_each_step) {
      y(0) /= raw_norm;
      y(1) /= raw_norm;
    }
  }
  return traj;
}

Trajectory simulate_coherence(const CoherenceVector& s0, ControlLawKind kind,
                              const ControlParams& params, const IntegratorConfig& cfg,
                              const AdjointMatrix& a0, const AdjointMatrix& a1,
                              double trace_norm) {
  cfg.validate();
  if (s0.s.size() != 3 || a0.a.rows() != 3 || a1.a.rows() != 3) {
    throw DimensionMismatch("simulate_coherence: two-level system expected (length-3 vector)");
  }
  if (std::abs(s0.s.norm() - 1.0) > 1e-9) {
    throw InvalidParam("simulate_coherence: initial coherence vector must have unit norm");
  }
  if (!(trace_norm > 0.0)) throw InvalidParam("simulate_coherence: trace_norm must be > 0");

  const Eigen::Matrix3d gen0 = a0.a / trace_norm;
  const Eigen::Matrix3d gen1 = a1.a / trace_norm;
  const Eigen::Vector2cd target = params.target().amplitudes();
  const Eigen::Matrix2cd h1m = spin_half_coupling().matrix();
  const double gain = params.gain();
  const double exponent = params.exponent();

  auto reconstruct = [](const Eigen::Vector3d& s) -> Eigen::Vector2cd {
    const double theta = std::acos(std::clamp(s(2), -1.0, 1.0));
    const double phi = std::atan2(s(1), s(0));
    return {Complex(std::cos(theta / 2.0), 0.0),
            std::exp(kI * phi) * std::sin(theta / 2.0)};
  };
  auto law = [&](const Eigen::Vector3d& s) {
    return detail::law_value(kind, gain, exponent,
                             detail::switching_term(reconstruct(s), target, h1m));
  };
  auto rhs = [&](const Eigen::Vector3d& s) -> Eigen::Vector3d {
    return gen0 * s + law(s) * (gen1 * s);
  };

  const size_t n = step_count(cfg);
  Trajectory traj;
  traj.dt = cfg.dt;
  reserve_all(traj, n + 1);

  Eigen::Vector3d s = s0.s;
  double raw_norm = s.norm();

  for (size_t i = 0;; ++i) {
    const double t = static_cast<double>(i) * cfg.dt;
    const Eigen::Vector2cd psi = reconstruct(s);

    PolarDecomposition p;
    p.r1 = std::abs(psi(0));
    p.r2 = std::abs(psi(1));
    p.phi_a = 0.0;  // reconstruction gauge: first amplitude real and nonnegative
    p.phi_b = p.r2 == 0.0 ? 0.0 : mod_two_pi(std::arg(psi(1)));
    p.phi = p.phi_b;

    traj.times.push_back(t);
    traj.states.push_back(psi);
    traj.norms.push_back(raw_norm);
    traj.controls.push_back(law(s));
    traj.lyapunov.push_back(1.0 - std::norm(target.dot(psi)));
    traj.polar.push_back(p);
    traj.g.push_back(std::pow(std::abs(std::cos(p.phi)), exponent + 1.0));

    if (i == n) break;

    s = step_once(s, cfg.dt, cfg.method, rhs);
    if (!s.allFinite()) throw_non_finite(t + cfg.dt);
    raw_norm = s.norm();
    if (cfg.renormalize_each_step) s /= raw_norm;
  }
  return traj;
}

double scalar_closed_form(const ScalarPrototype& proto, double t) {
  if (!(t >= 0.0)) throw InvalidParam("scalar_closed_form: t must be >= 0");
  if (proto.y0 == 0.0) return 0.0;
  const double one_minus = 1.0 - proto.alpha;
  const double core = std::pow(std::abs(proto.y0), one_minus) - proto.k * one_minus * t;
  if (core <= 0.0) return 0.0;
  const double mag = std::pow(core, 1.0 / one_minus);
  return proto.y0 > 0.0 ? mag : -mag;
}

ScalarTrajectory scalar_simulate(const ScalarPrototype& proto, const IntegratorConfig& cfg) {
  cfg.validate();
  auto rhs = [&](double y) { return -proto.k * signed_pow(y, proto.alpha); };

  const size_t n = step_count(cfg);
  ScalarTrajectory traj;
  traj.dt = cfg.dt;
  traj.times.reserve(n + 1);
  traj.values.reserve(n + 1);
  traj.lyapunov.reserve(n + 1);

  double y = proto.y0;
  for (size_t i = 0;; ++i) {
    traj.times.push_back(static_cast<double>(i) * cfg.dt);
    traj.values.push_back(y);
    traj.lyapunov.push_back(std::abs(y));
    if (i == n) break;
    y = step_once(y, cfg.dt, cfg.method, rhs);
    if (!std::isfinite(y)) throw_non_finite(static_cast<double>(i + 1) * cfg.dt);
  }
  return traj;
}

}  // namespace ftstab
