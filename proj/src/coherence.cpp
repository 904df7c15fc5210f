#include "ftstab/coherence.hpp"

#include <cmath>

namespace ftstab {

namespace {
constexpr Complex kI{0.0, 1.0};
}

AdjointMatrix::AdjointMatrix(Eigen::MatrixXd entries) : a(std::move(entries)) {
  if (a.rows() != a.cols()) throw DimensionMismatch("AdjointMatrix must be square");
  const double asym = (a + a.transpose()).cwiseAbs().maxCoeff();
  if (!(asym <= 1e-12)) {
    throw InvalidParam("adjoint matrix is not antisymmetric (residue " + std::to_string(asym) + ")");
  }
}

HermitianBasis pauli_basis() {
  HermitianBasis b;
  b.dim = 2;
  b.trace_norm = 2.0;
  Eigen::MatrixXcd sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, -kI, kI, 0;
  sz << 1, 0, 0, -1;
  b.sigma = {sx, sy, sz};
  b.sigma0 = Eigen::MatrixXcd::Identity(2, 2) / std::sqrt(2.0);
  return b;
}

HermitianBasis gell_mann_basis(Eigen::Index n) {
  if (n < 2) throw DimensionMismatch("gell_mann_basis: n must be >= 2");
  HermitianBasis b;
  b.dim = n;
  b.trace_norm = 2.0;
  b.sigma0 = Eigen::MatrixXcd::Identity(n, n) / std::sqrt(static_cast<double>(n));

  // Symmetric and antisymmetric off-diagonal generators.
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k) {
      Eigen::MatrixXcd sym = Eigen::MatrixXcd::Zero(n, n);
      sym(j, k) = 1.0;
      sym(k, j) = 1.0;
      b.sigma.push_back(sym);
      Eigen::MatrixXcd asym = Eigen::MatrixXcd::Zero(n, n);
      asym(j, k) = -kI;
      asym(k, j) = kI;
      b.sigma.push_back(asym);
    }
  }
  // Diagonal generators, tr(d_l^2) = 2.
  for (Eigen::Index l = 1; l < n; ++l) {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
    const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
    for (Eigen::Index m = 0; m < l; ++m) d(m, m) = scale;
    d(l, l) = -static_cast<double>(l) * scale;
    b.sigma.push_back(d);
  }
  return b;
}

CoherenceVector to_coherence(const StateVector& psi, const HermitianBasis& basis) {
  if (psi.dim() != basis.dim) throw DimensionMismatch("to_coherence: basis/state dimensions differ");
  const Eigen::VectorXcd& a = psi.amplitudes();
  Eigen::VectorXd s(static_cast<Eigen::Index>(basis.sigma.size()));
  for (size_t k = 0; k < basis.sigma.size(); ++k) {
    const Complex e = a.dot(basis.sigma[k] * a);
    if (std::abs(e.imag()) > 1e-10) {
      throw InternalConsistency("expectation value has imaginary residue " +
                                std::to_string(e.imag()));
    }
    s(static_cast<Eigen::Index>(k)) = e.real();
  }
  return {std::move(s)};
}

Eigen::MatrixXcd projector_from_coherence(const CoherenceVector& s, const HermitianBasis& basis) {
  if (s.s.size() != static_cast<Eigen::Index>(basis.sigma.size())) {
    throw DimensionMismatch("projector_from_coherence: coherence length does not match basis");
  }
  Eigen::MatrixXcd rho =
      Eigen::MatrixXcd::Identity(basis.dim, basis.dim) / static_cast<double>(basis.dim);
  for (size_t k = 0; k < basis.sigma.size(); ++k) {
    rho += (s.s(static_cast<Eigen::Index>(k)) / basis.trace_norm) * basis.sigma[k];
  }
  return rho;
}

AdjointMatrix adjoint_matrix(const HermitianOperator& h, const HermitianBasis& basis) {
  if (h.dim() != basis.dim) throw DimensionMismatch("adjoint_matrix: basis/operator dimensions differ");
  const auto m = static_cast<Eigen::Index>(basis.sigma.size());
  Eigen::MatrixXd a(m, m);
  for (Eigen::Index p = 0; p < m; ++p) {
    for (Eigen::Index q = 0; q < m; ++q) {
      const Eigen::MatrixXcd comm =
          basis.sigma[static_cast<size_t>(p)] * basis.sigma[static_cast<size_t>(q)] -
          basis.sigma[static_cast<size_t>(q)] * basis.sigma[static_cast<size_t>(p)];
      a(p, q) = (kI * (h.matrix() * comm).trace()).real();
    }
  }
  return AdjointMatrix(std::move(a));
}

CoherenceVector coherence_rhs(const CoherenceVector& s, double u1, const AdjointMatrix& a0,
                              const AdjointMatrix& a1) {
  if (a0.a.rows() != s.s.size() || a1.a.rows() != s.s.size()) {
    throw DimensionMismatch("coherence_rhs: matrix/vector dimensions differ");
  }
  return {Eigen::VectorXd((a0.a + u1 * a1.a) * s.s)};
}

StateVector bloch_state(const CoherenceVector& s) {
  if (s.s.size() != 3) throw DimensionMismatch("bloch_state: coherence vector must have length 3");
  const double s3 = std::clamp(s.s(2), -1.0, 1.0);
  const double theta = std::acos(s3);
  const double phi = std::atan2(s.s(1), s.s(0));  // atan2(0,0) = 0 at the poles
  return state_from_bloch_angles(theta, phi);
}

}  // namespace ftstab
