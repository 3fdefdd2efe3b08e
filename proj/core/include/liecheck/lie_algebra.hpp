#pragma once

// g from Cartan data: a Chevalley-type basis with exact structure constants,
// the principal sl2-triple, centralizers and exp-conjugation.

#include "liecheck/highest_weight.hpp"
#include "liecheck/linalg.hpp"
#include "liecheck/root_datum.hpp"

#include <cstddef>
#include <optional>
#include <tuple>
#include <vector>

namespace liecheck {

/// How a root vector is produced from simple generators:
/// x_alpha = scale * [x_{w_k}, [..., [x_{w_2}, x_{w_1}]]].
struct BracketWord {
  std::vector<std::size_t> letters;
  Rat scale = 1;
};

class LieAlgebraTable {
 public:
  /// Sparse coordinate vector: (basis index, coefficient).
  using SparseVec = std::vector<std::pair<std::size_t, Rat>>;

  static LieAlgebraTable build(const RootDatum& d);
  /// Rebuilds a table from cached structure constants; validates them.
  static LieAlgebraTable from_constants(const RootDatum& d,
                                        const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rat>>& constants);

  const RootDatum& datum() const noexcept { return datum_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t num_positive() const noexcept { return npos_; }

  /// Basis: h_0..h_{r-1} (simple coroots), e_alpha, f_alpha in the order of
  /// RootDatum::positive_roots().
  std::size_t h_index(std::size_t i) const { return i; }
  std::size_t e_index(std::size_t k) const { return rank_ + k; }
  std::size_t f_index(std::size_t k) const { return rank_ + npos_ + k; }
  /// Ad-h degree of basis element a under the principal h: 0, 2 ht, -2 ht.
  long degree(std::size_t a) const { return degrees_[a]; }
  /// Root-lattice weight of basis element a (fundamental coordinates).
  const Weight& weight(std::size_t a) const { return weights_[a]; }

  const SparseVec& bracket_basis(std::size_t a, std::size_t b) const { return table_[a * dim_ + b]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  /// Matrix of ad x.
  Mat ad(const Vec& x) const;
  Vec basis_vector(std::size_t a) const { return unit_vector(dim_, a); }

  /// Nonzero structure constants (i, j, k, c) with [b_i, b_j] = sum c b_k.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rat>> constants() const;

  const BracketWord& e_word(std::size_t k) const { return e_words_[k]; }
  const BracketWord& f_word(std::size_t k) const { return f_words_[k]; }

  bool jacobi_holds(std::size_t a, std::size_t b, std::size_t c) const;
  bool is_antisymmetric() const;

 private:
  void init_layout(const RootDatum& d);
  void derive_words();

  RootDatum datum_;
  std::size_t rank_ = 0, npos_ = 0, dim_ = 0;
  std::vector<long> degrees_;
  std::vector<Weight> weights_;
  std::vector<SparseVec> table_;
  std::vector<BracketWord> e_words_, f_words_;
};

inline LieAlgebraTable build_chevalley(const RootDatum& d) { return LieAlgebraTable::build(d); }

/// Matrix of the nested bracket [ops[w_k], [..., [ops[w_2], ops[w_1]]]].
SparseMat nested_commutator_matrix(const std::vector<SparseMat>& ops, const std::vector<std::size_t>& word);

/// Matrices of e_alpha and f_alpha (positive root order) on a module.
struct RootVectorMatrices {
  std::vector<SparseMat> e, f;
};
RootVectorMatrices root_vector_matrices(const LieAlgebraTable& L, const WeightModule& m, bool with_f = true);
/// Matrix of an element of n+ (coordinates supported on the e_alpha).
SparseMat positive_element_matrix(const LieAlgebraTable& L, const RootVectorMatrices& rv, const Vec& x);

/// Casimir operator for the invariant form with long roots of squared length 2
/// equals (highest, highest + 2 rho) times the identity on m.
bool casimir_scalar_holds(const LieAlgebraTable& L, const WeightModule& m);

struct PrincipalTriple {
  Vec e, h, f;
};
PrincipalTriple principal_triple(const LieAlgebraTable& L);
bool triple_relations_hold(const LieAlgebraTable& L, const PrincipalTriple& t);

struct Centralizer {
  std::vector<Vec> basis;
  /// Ad-h degrees of the basis (only for homogeneous x such as e).
  std::optional<std::vector<long>> degrees;
  /// degrees / 2, sorted.
  std::vector<long> exponents;
  bool abelian = false;
};
/// Kernel of ad x. If x is homogeneous for the ad-h grading the basis is
/// homogeneous and degrees are filled in.
Centralizer centralizer(const LieAlgebraTable& L, const Vec& x);

/// Element of h with integral coordinates t (in the simple coroot basis).
Vec cartan_element(const LieAlgebraTable& L, const std::vector<long>& t);

struct CartanConjugation {
  Rat t;
  /// Basis of Ad(exp(t ad e))(g^{e+h}); each lies in h.
  std::vector<Vec> images;
  /// dims of g^{e+h} intersected with the span of ad-h degrees <= 2k, k = 0..max exponent.
  std::vector<std::size_t> transported_dims;
};
/// Searches t in {1, 1/2, -1, -1/2}; throws InternalFailure if none works.
CartanConjugation conjugate_to_cartan(const LieAlgebraTable& L, const PrincipalTriple& triple);

/// sum_k (t ad x)^k / k! for nilpotent ad x.
Mat exp_ad(const LieAlgebraTable& L, const Vec& x, const Rat& t);

}  // namespace liecheck
