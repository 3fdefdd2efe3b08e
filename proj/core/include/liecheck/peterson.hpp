#pragma once

// The principal centralizer g^e acting on irreducible modules: cyclic
// submodules, annihilator ideals, joint kernels, the Kostant-Brylinski
// filtration of h and the finite scheme of weights.

#include "liecheck/graded_series.hpp"
#include "liecheck/highest_weight.hpp"
#include "liecheck/lie_algebra.hpp"
#include "liecheck/polynomial.hpp"
#include "liecheck/report.hpp"
#include "liecheck/root_datum.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace liecheck {

struct GeBasisAction {
  /// g^e basis elements in the coordinates of the Lie algebra table.
  std::vector<Vec> elements;
  /// m_i, half the ad-h degree of elements[i].
  std::vector<long> degrees;
  /// Matrix of elements[i] on the module.
  std::vector<SparseMat> ops;
};

/// Throws InternalFailure if the centralizer has no degrees or an element
/// leaves n+.
GeBasisAction ge_action(const LieAlgebraTable& L, const Centralizer& ge, const WeightModule& m);
/// Pairwise commutation and the eigenvalue shift 2 m_i, checked exactly.
bool ge_action_invariants_hold(const GeBasisAction& act, const WeightModule& m);

struct CyclicModuleReport {
  /// Coefficient d is dim of the span of degree-d monomials applied to v.
  GradedSeries series;
  std::size_t total = 0;
  std::size_t module_dim = 0;
  bool cyclic = false;
  std::size_t top_degree = 0;
  /// Number of new annihilator generators per degree (filled by
  /// annihilator_generators).
  std::vector<long> generator_counts;
};

/// v must lie in a single principal-h eigenspace.
CyclicModuleReport cyclic_submodule(const GeBasisAction& act, const WeightModule& m, const Vec& v);

/// Dimension of the smallest subspace containing the seeds and stable under
/// every op. Each seed must lie in a single principal-h eigenspace.
std::size_t closure_dimension(const GeBasisAction& act, const WeightModule& m, const std::vector<Vec>& seeds);

struct AnnihilatorDegree {
  std::size_t degree = 0;
  /// Monomial basis of S^degree g^e (weights m_i), graded-lex.
  std::vector<Exponents> monomials;
  /// dim of the kernel of S^degree g^e -> V.
  std::size_t kernel_dim = 0;
  /// dim of the image, i.e. the cyclic series coefficient.
  std::size_t image_dim = 0;
  /// Kernel elements not generated by lower degrees, as coefficient vectors
  /// over `monomials`.
  std::vector<Vec> generators;
};

struct Annihilator {
  std::vector<AnnihilatorDegree> degrees;  // index = degree, 0..cap
  std::size_t cap = 0;
  std::size_t generator_count() const;
};

/// Degrees 0..cap; the default cap is top degree + max m_i, which suffices
/// for the generators to span the whole annihilator ideal.
Annihilator annihilator_generators(const GeBasisAction& act, const WeightModule& m, const Vec& v,
                                   std::optional<std::size_t> degree_cap = std::nullopt);

/// dim of the joint kernel on V of the annihilator generators (each realised
/// through act_on_v). The caller checks the coset precondition.
std::size_t joint_kernel(const GeBasisAction& act_on_v, const WeightModule& v, const Annihilator& ann);

struct FiltrationTable {
  /// dims[k] = dim F_k h, k = 0..max exponent.
  std::vector<std::size_t> dims;
  /// Adapted basis x_1..x_r of h (simple coroot coordinates) and its
  /// filtration degrees m_1 <= ... <= m_r.
  std::vector<Vec> basis;
  std::vector<long> degrees;
};

FiltrationTable brylinski_filtration(const LieAlgebraTable& L, const PrincipalTriple& triple);
/// F_0 = 0, F_top = h, nondecreasing, basis adapted.
bool filtration_invariants_hold(const FiltrationTable& f, std::size_t rank);

struct SpecmScheme {
  std::vector<Weight> points;
  /// Values of the adapted basis at each point: coords[p][j] = x_j(points[p]).
  std::vector<Vec> coords;
  /// Filtration weights of the evaluation rows that were kept, in order.
  std::vector<std::size_t> kept_degrees;
  /// Number of candidate monomials examined.
  std::size_t candidates = 0;
  GradedSeries series;
};

/// gr^F of the functions on the weights of m. Candidate monomials are taken
/// in a Newton form of the adapted basis (same filtration, triangular values).
SpecmScheme specm_scheme(const WeightModule& m, const FiltrationTable& filt);

/// Per-type data shared by every instance.
class TypeContext {
 public:
  explicit TypeContext(CartanType type);
  TypeContext(CartanType type, LieAlgebraTable table);

  const CartanType& type() const noexcept { return datum_.type(); }
  const RootDatum& datum() const noexcept { return datum_; }
  const LieAlgebraTable& algebra() const noexcept { return algebra_; }
  const PrincipalTriple& triple() const noexcept { return triple_; }
  const Centralizer& ge() const noexcept { return ge_; }
  const FiltrationTable& filtration() const noexcept { return filt_; }
  std::vector<long> exponents() const { return ge_.exponents; }

 private:
  RootDatum datum_;
  LieAlgebraTable algebra_;
  PrincipalTriple triple_;
  Centralizer ge_;
  FiltrationTable filt_;
};

/// One (type, highest weight) pair; everything is computed on first use.
/// Not thread-safe; use one instance per thread.
class Instance {
 public:
  Instance(std::shared_ptr<const TypeContext> ctx, Weight highest, BuildOptions options = {});

  const TypeContext& context() const noexcept { return *ctx_; }
  std::shared_ptr<const TypeContext> shared_context() const noexcept { return ctx_; }
  const Weight& highest() const noexcept { return highest_; }
  Weight lowest() const { return ctx_->datum().antidominant_conjugate(highest_); }
  /// Weyl dimension; never builds the module.
  Int dimension() const;

  /// Throws DimensionBoundExceeded.
  const WeightModule& module();
  void set_module(WeightModule m);
  const GeBasisAction& action();
  const CyclicModuleReport& cyclic();
  const Annihilator& annihilator();
  const SpecmScheme& specm();

 private:
  std::shared_ptr<const TypeContext> ctx_;
  Weight highest_;
  BuildOptions options_;
  std::optional<WeightModule> module_;
  std::optional<GeBasisAction> action_;
  std::optional<CyclicModuleReport> cyclic_;
  std::optional<Annihilator> ann_;
  std::optional<SpecmScheme> specm_;
};

/// Fills check, type, lambda and lowest weight.
CheckReport make_report(const std::string& check, const TypeContext& ctx, const Weight& highest);

CheckReport verify_peterson(Instance& inst);
CheckReport verify_mult1(Instance& inst);
/// Throws InvalidArgument unless the highest weight lies in the root lattice.
CheckReport verify_kkk_and_ue(Instance& inst);
/// mu is a dominant minuscule-or-zero weight; the module of inst is the test
/// module V. Throws CosetMismatch when V's weights are not in mu + Q.
CheckReport verify_key_ii(Instance& inst, Instance& reference);
CheckReport grF_polynomial_ring_check(const TypeContext& ctx, std::size_t n);

/// Sum over dominant mu <= lambda (same coset) of q^(<mu,2 rho-check> - dim G/P_mu)
/// times the length series of W/W_mu.
GradedSeries schubert_cell_oracle(const RootDatum& d, const Weight& lambda);
CheckReport verify_cells(Instance& inst);

}  // namespace liecheck
