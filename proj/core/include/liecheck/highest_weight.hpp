#pragma once

// Finite-dimensional irreducible modules built from Cartan data by the
// Shapovalov-form route, plus the classical multiplicity oracles.

#include "liecheck/linalg.hpp"
#include "liecheck/root_datum.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace liecheck {

struct WeightSpace {
  Weight weight;
  long h_eigen = 0;  // <weight, 2 rho-check>
  std::size_t offset = 0;
  std::size_t dim = 0;
};

/// A contiguous run of basis vectors sharing one principal-h eigenvalue.
struct Eigenspace {
  long h_eigen = 0;
  std::size_t offset = 0;
  std::size_t dim = 0;
};

struct WeightModule {
  CartanType type;
  Weight highest;
  std::size_t dim = 0;
  /// Sorted by (h_eigen, weight); the basis of each space is contiguous.
  std::vector<WeightSpace> spaces;
  std::map<Weight, std::size_t> space_index;
  /// Per simple index i: matrices of e_i, f_i, h_i = alpha_i-check.
  std::vector<SparseMat> e, f, h;

  const WeightSpace* space(const Weight& mu) const;
  std::size_t multiplicity(const Weight& mu) const;
  std::vector<Eigenspace> eigenspaces() const;
  /// Weight of basis vector k.
  const Weight& weight_of(std::size_t k) const;
  long h_eigen_of(std::size_t k) const;
};

struct BuildOptions {
  std::size_t dim_bound = 500;
  /// Stop selecting Gram rows once the Freudenthal multiplicity is reached.
  /// When false the full Shapovalov rank of every weight space is computed
  /// and compared with Freudenthal afterwards.
  bool early_exit = true;
};

/// Throws DimensionBoundExceeded when the Weyl dimension exceeds the bound,
/// InvalidArgument for non-dominant input and InternalFailure when the
/// Shapovalov ranks disagree with the multiplicity oracle.
WeightModule build_irrep(const RootDatum& d, const Weight& highest, const BuildOptions& options = {});

/// Multiplicity of every weight of V(highest) (zero multiplicities omitted).
std::map<Weight, long> freudenthal_multiplicities(const RootDatum& d, const Weight& highest);
/// Sum over w of sign(w) P(w(highest + rho) - (mu + rho)).
Int kostant_multiplicity(const RootDatum& d, KostantPartition& partition, const Weight& highest, const Weight& mu);
Int weyl_dimension(const RootDatum& d, const Weight& highest);

/// Unit vector of the lowest weight w0(highest).
Vec lowest_weight_vector(const WeightModule& m);

struct SpecmData {
  std::vector<Weight> points;  // distinct weights, module order
  std::size_t zero_dim = 0;
  std::map<Weight, std::size_t> dims;
};
SpecmData specm_and_zero_space(const WeightModule& m);

/// Dominant weights with Weyl dimension <= bound, ordered by (dimension, weight).
std::vector<Weight> dominant_weights_up_to_dim(const RootDatum& d, std::size_t bound);

/// Checks [e_i, f_j] = delta_ij h_i, [h_i, e_j] = a_ij e_j, [h_i, f_j] = -a_ij f_j
/// and the Serre relations on m.
bool chevalley_relations_hold(const RootDatum& d, const WeightModule& m);

}  // namespace liecheck
