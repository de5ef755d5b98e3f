#pragma once

#include "entsep/liouville.hpp"
#include "entsep/rng.hpp"

namespace entsep {

using PureState = Vector;  // normalized amplitude vector

// A grouping of subsystem indices into disjoint blocks. Product states are
// product across blocks; the fully split grouping (all singletons) gives
// K-product states, coarser groupings give e.g. biseparable states.
struct Grouping {
  std::vector<std::vector<int>> groups;

  static Grouping singletons(int k) {
    Grouping g;
    g.groups.reserve(k);
    for (int i = 0; i < k; ++i) g.groups.push_back({i});
    return g;
  }

  bool is_full_split() const {
    for (const auto& g : groups)
      if (g.size() != 1) return false;
    return true;
  }
};

inline int group_dim(const PartitionSpec& partition, const std::vector<int>& group) {
  int d = 1;
  for (int member : group) d *= partition.subsystem_dims.at(member);
  return d;
}

inline void validate_grouping(const PartitionSpec& partition, const Grouping& grouping) {
  std::vector<bool> seen(partition.n_parts(), false);
  for (const auto& g : grouping.groups)
    for (int member : g) {
      if (member < 0 || member >= partition.n_parts() || seen[member])
        throw std::invalid_argument("grouping is not a partition of the subsystems");
      seen[member] = true;
    }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("grouping does not cover all subsystems");
}

// Assembles the full state from one factor per group. Group members keep
// their position in the global tensor order; within a group, amplitudes are
// indexed row-major over the members in ascending order.
inline Vector assemble_grouped(const PartitionSpec& partition, const Grouping& grouping,
                               const std::vector<Vector>& factors) {
  const int n_parts = partition.n_parts();
  const int total = partition.total_dim();
  if (factors.size() != grouping.groups.size())
    throw std::invalid_argument("assemble_grouped: one factor per group required");
  Vector out(total);
  std::vector<int> idx(n_parts, 0);
  for (int flat = 0; flat < total; ++flat) {
    int rem = flat;
    for (int p = n_parts - 1; p >= 0; --p) {
      idx[p] = rem % partition.subsystem_dims[p];
      rem /= partition.subsystem_dims[p];
    }
    Complex amp(1.0, 0.0);
    for (std::size_t gi = 0; gi < grouping.groups.size(); ++gi) {
      int local = 0;
      for (int member : grouping.groups[gi]) local = local * partition.subsystem_dims[member] + idx[member];
      amp *= factors[gi](local);
    }
    out(flat) = amp;
  }
  return out;
}

struct ProductState {
  PartitionSpec partition;
  Grouping grouping;
  std::vector<Vector> factors;  // one normalized factor per group
  Vector assembled;             // equals assemble_grouped(partition, grouping, factors)
};

inline PureState haar_random_pure(int dim, RngStream& rng) {
  if (dim < 1) throw std::invalid_argument("haar_random_pure: dim must be >= 1");
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(rng.normal(), rng.normal());
  const double n = v.norm();
  if (n == 0.0) return haar_random_pure(dim, rng);
  return v / n;
}

// Haar-distributed unitary via QR of a complex Ginibre matrix with the
// standard phase correction on R's diagonal.
inline Matrix haar_random_unitary(int dim, RngStream& rng) {
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= (d == Complex(0, 0)) ? Complex(1, 0) : d / std::abs(d);
  }
  return q;
}

inline ProductState random_product_state(const PartitionSpec& partition, const Grouping& grouping,
                                         RngStream& rng) {
  validate_grouping(partition, grouping);
  ProductState p;
  p.partition = partition;
  p.grouping = grouping;
  p.factors.reserve(grouping.groups.size());
  for (const auto& g : grouping.groups) p.factors.push_back(haar_random_pure(group_dim(partition, g), rng));
  p.assembled = assemble_grouped(partition, grouping, p.factors);
  return p;
}

inline ProductState random_product_state(const PartitionSpec& partition, RngStream& rng) {
  return random_product_state(partition, Grouping::singletons(partition.n_parts()), rng);
}

namespace detail {
// exp(i sum_j alpha_j g_j) over the traceless generators of one factor,
// alpha_j iid normal(0, width^2). The generator sum is assembled through the
// closed-form basis expansion with the identity component held at zero.
inline Matrix random_factor_unitary(int dim, double width, RngStream& rng) {
  const GeneratorBasis& basis = shared_basis(dim);
  RealVector alpha(dim * dim);
  alpha(0) = 0.0;
  for (int j = 1; j < dim * dim; ++j) alpha(j) = width * rng.normal();
  return expm_skew_hermitian(Complex(0, 1) * basis.devectorize(alpha));
}
}  // namespace detail

// Applies an independent random unitary close to identity to each factor.
// The output is product by construction over the same grouping.
inline ProductState perturb_local(const ProductState& p, double width, RngStream& rng) {
  if (width < 0) throw std::invalid_argument("perturb_local: width must be >= 0");
  if (width == 0.0) return p;
  ProductState out = p;
  for (std::size_t gi = 0; gi < p.factors.size(); ++gi) {
    const int d = static_cast<int>(p.factors[gi].size());
    if (d < 2) continue;
    out.factors[gi] = (detail::random_factor_unitary(d, width, rng) * p.factors[gi]).eval();
    out.factors[gi].normalize();
  }
  out.assembled = assemble_grouped(out.partition, out.grouping, out.factors);
  return out;
}

// Random generic transformation exp(i sum alpha_i g_i) over all N^2 - 1
// traceless generators of the full space.
inline PureState perturb_generic(const PureState& s, double width, RngStream& rng) {
  if (width < 0) throw std::invalid_argument("perturb_generic: width must be >= 0");
  if (width == 0.0) return s;
  const int dim = static_cast<int>(s.size());
  PureState out = detail::random_factor_unitary(dim, width, rng) * s;
  out.normalize();
  return out;
}

}  // namespace entsep
