#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ftstab/qstate.hpp"

namespace ftstab {

/// Traceless Hermitian basis {sigma_k} of the n x n Hermitian matrices,
/// together with sigma_0 = I/sqrt(n).
///
/// Normalization convention: tr(sigma_m sigma_n) = trace_norm * delta_{mn}
/// with trace_norm = 2 (Pauli / Gell-Mann convention). This constant matters:
/// the adjoint matrices computed from the basis scale with it, and the
/// coherence-vector equation of motion is
///     ds/dt = (1/trace_norm) * (A0 + u1 A1) s
/// so that s has unit norm on the Bloch sphere for two-level pure states.
struct HermitianBasis {
  std::vector<Eigen::MatrixXcd> sigma;
  Eigen::MatrixXcd sigma0;
  double trace_norm = 2.0;
  Eigen::Index dim = 0;
};

/// Real expectation-value vector s_k = <psi|sigma_k|psi> (length n^2 - 1).
struct CoherenceVector {
  Eigen::VectorXd s;
};

/// Antisymmetric generator entries A(m,n) = tr(i H [sigma_m, sigma_n]).
/// Antisymmetry is checked to 1e-12 at construction.
struct AdjointMatrix {
  explicit AdjointMatrix(Eigen::MatrixXd entries);
  Eigen::MatrixXd a;
};

/// The Pauli basis sigma_x, sigma_y, sigma_z with sigma_0 = I/sqrt(2).
HermitianBasis pauli_basis();

/// Generalized Gell-Mann basis for an n-level system (n >= 2), same
/// tr(sigma_m sigma_n) = 2 delta_{mn} normalization. For n = 2 this
/// reproduces the Pauli basis.
HermitianBasis gell_mann_basis(Eigen::Index n);

/// Coherence vector of a pure state in the given basis. Expectation values
/// of Hermitian operators are real; an imaginary residue above 1e-10 raises
/// InternalConsistency instead of being silently discarded.
CoherenceVector to_coherence(const StateVector& psi, const HermitianBasis& basis);

/// Projector I/n + (1/trace_norm) * sum_k s_k sigma_k. For a coherence
/// vector of a pure state this reconstructs |psi><psi|; used to verify the
/// normalization convention self-consistently.
Eigen::MatrixXcd projector_from_coherence(const CoherenceVector& s, const HermitianBasis& basis);

/// A(m,n) = tr(i H [sigma_m, sigma_n]).
AdjointMatrix adjoint_matrix(const HermitianOperator& h, const HermitianBasis& basis);

/// (A0 + u1 A1) s. Plain linear-algebra helper; see HermitianBasis for the
/// 1/trace_norm factor that turns this into the Bloch equation of motion.
CoherenceVector coherence_rhs(const CoherenceVector& s, double u1, const AdjointMatrix& a0,
                              const AdjointMatrix& a1);

/// Two-level state on the Bloch sphere with coherence vector s (length 3):
/// theta = acos(s3), phi = atan2(s2, s1), psi = [cos(theta/2), e^{i phi} sin(theta/2)].
StateVector bloch_state(const CoherenceVector& s);

}  // namespace ftstab
