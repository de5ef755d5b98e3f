#pragma once

#include "entsep/numerics.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace entsep {

// Subsystem structure of the full Hilbert space. Leftmost factor is
// subsystem 0 in tensor-product order.
struct PartitionSpec {
  std::vector<int> subsystem_dims;

  PartitionSpec() = default;
  explicit PartitionSpec(std::vector<int> dims) : subsystem_dims(std::move(dims)) {
    for (int d : subsystem_dims)
      if (d < 1) throw std::invalid_argument("subsystem dimensions must be >= 1");
  }

  int n_parts() const { return static_cast<int>(subsystem_dims.size()); }

  int total_dim() const {
    return std::accumulate(subsystem_dims.begin(), subsystem_dims.end(), 1, std::multiplies<int>());
  }

  // Complex parameters of a generic state vector (Cartan count of the full group).
  int n_generic_params() const { return total_dim() - 1; }

  // Complex parameters of a fully product state vector.
  int n_product_params() const {
    int s = 0;
    for (int d : subsystem_dims) s += d - 1;
    return s;
  }
};

// Orthonormal Hermitian basis {g_i} of N x N matrices with g_0 = I/sqrt(N).
//
// Frozen ordering (column construction and file formats depend on it):
//   index 0:                I/sqrt(N)
//   for pairs (j,k), j<k in lexicographic order: the symmetric member
//   (E_jk + E_kj)/sqrt(2) followed by the antisymmetric one
//   -i(E_jk - E_kj)/sqrt(2), which reproduces sigma_y/sqrt(2) at N = 2;
//   then the diagonal members for l = 1..N-1:
//   (sum_{a<l} E_aa - l E_ll)/sqrt(l(l+1)).
struct GeneratorBasis {
  int dim = 0;
  std::vector<Matrix> generators;

  static GeneratorBasis build(int n) {
    if (n < 2) throw std::invalid_argument("generator basis requires dimension >= 2");
    GeneratorBasis basis;
    basis.dim = n;
    basis.generators.reserve(static_cast<std::size_t>(n) * n);
    basis.generators.push_back(Matrix::Identity(n, n) / std::sqrt(double(n)));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        Matrix sym = Matrix::Zero(n, n);
        sym(j, k) = inv_sqrt2;
        sym(k, j) = inv_sqrt2;
        basis.generators.push_back(sym);
        Matrix asym = Matrix::Zero(n, n);
        asym(j, k) = Complex(0, -inv_sqrt2);
        asym(k, j) = Complex(0, inv_sqrt2);
        basis.generators.push_back(asym);
      }
    }
    for (int l = 1; l < n; ++l) {
      Matrix d = Matrix::Zero(n, n);
      const double norm = 1.0 / std::sqrt(double(l) * (l + 1));
      for (int a = 0; a < l; ++a) d(a, a) = norm;
      d(l, l) = -double(l) * norm;
      basis.generators.push_back(d);
    }
    return basis;
  }

  int n_generators() const { return static_cast<int>(generators.size()); }

  // Flat index of the symmetric pair member for j < k; the antisymmetric one
  // is at pair_index(j,k) + 1.
  int pair_index(int j, int k) const {
    const int rank = j * dim - j * (j + 1) / 2 + (k - j - 1);
    return 1 + 2 * rank;
  }

  int diag_index(int l) const { return 1 + dim * (dim - 1) + (l - 1); }

  // r_i = Tr[g_i rho], evaluated in closed form from the matrix entries.
  RealVector vectorize(const Matrix& rho) const {
    if (rho.rows() != dim || rho.cols() != dim)
      throw std::invalid_argument("vectorize: dimension mismatch");
    RealVector r = RealVector::Zero(dim * dim);
    const double sqrt2 = std::sqrt(2.0);
    r(0) = rho.real().trace() / std::sqrt(double(dim));
    for (int j = 0; j < dim; ++j) {
      for (int k = j + 1; k < dim; ++k) {
        const int idx = pair_index(j, k);
        r(idx) = sqrt2 * rho(j, k).real();
        r(idx + 1) = -sqrt2 * rho(j, k).imag();
      }
    }
    for (int l = 1; l < dim; ++l) {
      const double norm = 1.0 / std::sqrt(double(l) * (l + 1));
      double acc = 0.0;
      for (int a = 0; a < l; ++a) acc += rho(a, a).real();
      acc -= double(l) * rho(l, l).real();
      r(diag_index(l)) = norm * acc;
    }
    return r;
  }

  // rho = sum_i g_i r_i. Hermitian by construction; not necessarily positive.
  Matrix devectorize(const RealVector& r) const {
    if (r.size() != dim * dim) throw std::invalid_argument("devectorize: component count must be N^2");
    Matrix rho = Matrix::Zero(dim, dim);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < dim; ++j) rho(j, j) = r(0) / std::sqrt(double(dim));
    for (int j = 0; j < dim; ++j) {
      for (int k = j + 1; k < dim; ++k) {
        const int idx = pair_index(j, k);
        const Complex v(inv_sqrt2 * r(idx), -inv_sqrt2 * r(idx + 1));
        rho(j, k) += v;
        rho(k, j) += std::conj(v);
      }
    }
    for (int l = 1; l < dim; ++l) {
      const double norm = 1.0 / std::sqrt(double(l) * (l + 1));
      const double v = r(diag_index(l));
      for (int a = 0; a < l; ++a) rho(a, a) += norm * v;
      rho(l, l) -= double(l) * norm * v;
    }
    return rho;
  }
};

// Process-wide cache: basis construction is deterministic, so instances are
// shared freely across threads once built.
inline const GeneratorBasis& shared_basis(int dim) {
  static std::mutex mu;
  static std::map<int, GeneratorBasis> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(dim);
  if (it == cache.end()) it = cache.emplace(dim, GeneratorBasis::build(dim)).first;
  return it->second;
}

inline double purity_of(const RealVector& r) { return r.squaredNorm(); }

// Characteristic-polynomial coefficients c_2..c_N of the Hermitian matrix
// represented by r, via elementary symmetric polynomials of its eigenvalues.
// All vanish exactly when the matrix has rank one and unit trace.
inline RealVector characteristic_constraints(const RealVector& r, const GeneratorBasis& basis) {
  const Matrix rho = basis.devectorize(r);
  const HermitianEigen eig = eig_hermitian(rho, 1e-8);
  const int n = basis.dim;
  // e[k] accumulates the k-th elementary symmetric polynomial.
  std::vector<double> e(n + 1, 0.0);
  e[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    const double x = eig.eigenvalues(i);
    for (int k = std::min(i + 1, n); k >= 1; --k) e[k] += x * e[k - 1];
  }
  RealVector c(n - 1);
  for (int m = 2; m <= n; ++m) c(m - 2) = ((m % 2 == 0) ? 1.0 : -1.0) * e[m];
  return c;
}

}  // namespace entsep
