#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <complex>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace entsep {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

constexpr double kHermitianTol = 1e-10;
constexpr double kDefaultRankTol = 1e-8;

// Largest entrywise deviation |m - m^dagger|.
inline double hermiticity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i; j < m.cols(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

struct HermitianEigen {
  RealVector eigenvalues;  // sorted descending
  Matrix eigenvectors;     // orthonormal columns, paired with eigenvalues
};

inline HermitianEigen eig_hermitian(const Matrix& m, double tol = kHermitianTol) {
  const double defect = hermiticity_defect(m);
  if (!(defect <= tol)) {
    double worst = 0.0;
    Eigen::Index wi = 0, wj = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = i; j < m.cols(); ++j) {
        const double d = std::abs(m(i, j) - std::conj(m(j, i)));
        if (d > worst) { worst = d; wi = i; wj = j; }
      }
    std::ostringstream msg;
    msg << "matrix is not Hermitian: |m(" << wi << "," << wj << ") - conj(m(" << wj << "," << wi
        << "))| = " << worst << " exceeds tolerance " << tol;
    throw std::invalid_argument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver failed");
  HermitianEigen out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

// exp(a) for skew-Hermitian a = iH, computed as V diag(e^{i lambda}) V^dagger
// from the eigendecomposition of H. The result is unitary.
inline Matrix expm_skew_hermitian(const Matrix& a, double tol = kHermitianTol) {
  const Matrix h = Complex(0, -1) * a;
  if (hermiticity_defect(h) > tol)
    throw std::invalid_argument("expm_skew_hermitian: input is not skew-Hermitian within tolerance");
  const HermitianEigen eig = eig_hermitian(h, tol * 10);
  Vector phases(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k)
    phases(k) = std::exp(Complex(0, eig.eigenvalues(k)));
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

inline Vector kron(const Vector& a, const Vector& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

// Number of eigenvalues above rel_tol times the largest one. Zero matrix -> 0.
inline int rank_with_tolerance(const Matrix& m, double rel_tol = kDefaultRankTol) {
  const HermitianEigen eig = eig_hermitian(m);
  const double top = eig.eigenvalues.size() > 0 ? eig.eigenvalues(0) : 0.0;
  if (top <= 0.0) return 0;
  int rank = 0;
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k)
    if (eig.eigenvalues(k) > rel_tol * top) ++rank;
  return rank;
}

inline Matrix identity(int n) { return Matrix::Identity(n, n); }

inline Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

inline Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

// The eight standard Gell-Mann matrices, 1-indexed by convention (index 0 of
// the returned vector is lambda_1).
inline std::vector<Matrix> gell_mann_matrices() {
  std::vector<Matrix> lam(8, Matrix::Zero(3, 3));
  lam[0] << 0, 1, 0, 1, 0, 0, 0, 0, 0;
  lam[1] << 0, Complex(0, -1), 0, Complex(0, 1), 0, 0, 0, 0, 0;
  lam[2] << 1, 0, 0, 0, -1, 0, 0, 0, 0;
  lam[3] << 0, 0, 1, 0, 0, 0, 1, 0, 0;
  lam[4] << 0, 0, Complex(0, -1), 0, 0, 0, Complex(0, 1), 0, 0;
  lam[5] << 0, 0, 0, 0, 0, 1, 0, 1, 0;
  lam[6] << 0, 0, 0, 0, 0, Complex(0, -1), 0, Complex(0, 1), 0;
  const double s = 1.0 / std::sqrt(3.0);
  lam[7] << s, 0, 0, 0, s, 0, 0, 0, -2 * s;
  return lam;
}

}  // namespace entsep
