#pragma once

#include "liecheck/graded_series.hpp"
#include "liecheck/linalg.hpp"
#include "liecheck/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace liecheck {

/// Coordinates in the fundamental-weight basis.
using Weight = std::vector<long>;

std::string format_weight(const Weight& w);
/// "1,0,2"; throws ParseError on malformed input or wrong length.
Weight parse_weight(std::string_view text, std::size_t rank);

struct CartanType {
  char family = 'A';
  unsigned rank = 1;

  std::string label() const;
  friend bool operator==(const CartanType&, const CartanType&) = default;
  friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

/// Accepts labels such as "A2", "g2", "B3". Throws ParseError for malformed
/// labels and UnsupportedType for E types, rank above 4, or non-simple labels.
CartanType parse_type(std::string_view text);

class WeylGroup {
 public:
  WeylGroup() = default;
  /// Enumerates the group generated by the simple reflections S_i acting on
  /// fundamental coordinates. Element 0 is the identity; elements are in
  /// breadth-first (hence nondecreasing length) order.
  explicit WeylGroup(const std::vector<std::vector<long>>& cartan);

  std::size_t order() const noexcept { return lengths_.size(); }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t length(std::size_t w) const { return lengths_[w]; }
  int sign(std::size_t w) const { return lengths_[w] % 2 == 0 ? 1 : -1; }
  /// Index of w * s_i.
  std::size_t times_simple(std::size_t w, std::size_t i) const { return right_[w * rank_ + i]; }
  /// Row-major rank x rank integer matrix of w on fundamental coordinates.
  const std::vector<long>& matrix(std::size_t w) const { return matrices_[w]; }
  Mat rational_matrix(std::size_t w) const;
  Weight act(std::size_t w, const Weight& mu) const;
  std::size_t longest() const noexcept { return order() - 1; }

 private:
  std::size_t rank_ = 0;
  std::vector<std::vector<long>> matrices_;
  std::vector<std::size_t> lengths_;
  std::vector<std::size_t> right_;
};

struct PositiveRoot {
  std::vector<long> simple;  // coordinates in simple roots
  Weight weight;             // fundamental coordinates
  long height = 0;
  Rat half_norm;             // (beta, beta) / 2
};

class RootDatum {
 public:
  static RootDatum build(CartanType type);

  const CartanType& type() const noexcept { return type_; }
  std::size_t rank() const noexcept { return rank_; }
  long cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
  const std::vector<std::vector<long>>& cartan_matrix() const noexcept { return cartan_; }
  /// Symmetric (alpha_i, alpha_j); long roots have squared length 2.
  const Mat& gram() const noexcept { return gram_; }
  const Rat& simple_half_norm(std::size_t i) const { return half_norms_[i]; }

  const std::vector<PositiveRoot>& positive_roots() const noexcept { return roots_; }
  std::size_t num_positive_roots() const noexcept { return roots_.size(); }
  std::optional<std::size_t> root_index(const std::vector<long>& simple) const;
  Weight simple_root(std::size_t i) const;
  Weight rho() const { return Weight(rank_, 1); }
  Weight fundamental(std::size_t i) const;
  const PositiveRoot& highest_root() const { return roots_.back(); }
  /// Coefficients k with 2 rho-check = sum_i k_i alpha_i-check.
  const std::vector<long>& two_rho_check() const noexcept { return two_rho_check_; }

  /// mu written in simple roots (rational in general).
  Vec simple_coordinates(const Weight& mu) const;
  /// Integral simple-root coordinates, if mu lies in the root lattice.
  std::optional<std::vector<long>> root_lattice_coordinates(const Weight& mu) const;
  bool in_root_lattice(const Weight& mu) const { return root_lattice_coordinates(mu).has_value(); }
  Weight from_simple(const std::vector<long>& c) const;

  Rat form(const Weight& a, const Weight& b) const;
  /// <mu, beta-check> for positive root index k.
  long coroot_pairing(const Weight& mu, std::size_t k) const;
  /// Eigenvalue of the principal h on weight mu: <mu, 2 rho-check>.
  long h_eigenvalue(const Weight& mu) const;

  Weight reflect(const Weight& mu, std::size_t i) const;
  static bool is_dominant(const Weight& mu);
  /// Dominant W-conjugate of mu and the number of reflections applied.
  std::pair<Weight, std::size_t> dominant_conjugate(const Weight& mu) const;
  /// w0(mu): the antidominant conjugate of mu.
  Weight antidominant_conjugate(const Weight& mu) const;

  const WeylGroup& weyl() const noexcept { return weyl_; }
  /// dim g.
  std::size_t dimension() const { return rank_ + 2 * roots_.size(); }

 private:
  CartanType type_;
  std::size_t rank_ = 0;
  std::vector<std::vector<long>> cartan_;
  Mat gram_;
  std::vector<Rat> half_norms_;
  Mat cartan_inverse_;
  std::vector<PositiveRoot> roots_;
  std::map<std::vector<long>, std::size_t> root_lookup_;
  std::vector<long> two_rho_check_;
  WeylGroup weyl_;
};

inline RootDatum build_root_datum(CartanType t) { return RootDatum::build(t); }

/// Sorted orbit of mu.
std::vector<Weight> weyl_orbit(const RootDatum& d, const Weight& mu);
std::size_t stabilizer_order(const RootDatum& d, const Weight& mu);
/// Indices i with mu_i == 0: the simple reflections generating W_mu for dominant mu.
std::vector<std::size_t> stabilizer_generators(const Weight& dominant_mu);

/// Sum over minimal-length representatives of W / W_J of q^length.
GradedSeries length_gen_function(const RootDatum& d, const std::vector<std::size_t>& parabolic);

/// Requires mu dominant and nonzero (InvalidArgument otherwise).
bool is_minuscule(const RootDatum& d, const Weight& mu);
/// The unique minuscule-or-zero dominant weight congruent to mu modulo the
/// root lattice.
Weight minuscule_representative(const RootDatum& d, const Weight& mu);

/// Memoized Kostant partition function of one root datum.
class KostantPartition {
 public:
  explicit KostantPartition(const RootDatum& d);
  /// Number of ways to write beta (simple coordinates) as an N-combination of
  /// positive roots; 0 if beta has a negative coordinate.
  Int operator()(const std::vector<long>& beta);

 private:
  Int count(const std::vector<long>& beta, std::size_t k);

  std::vector<std::vector<long>> roots_;
  std::map<std::pair<std::vector<long>, std::size_t>, Int> memo_;
};

Int kostant_partition(const RootDatum& d, const std::vector<long>& beta);

bool dominance_leq(const RootDatum& d, const Weight& mu, const Weight& lambda);
/// Dominant mu <= lambda in the coset of lambda; lambda first, then by
/// increasing depth below lambda, ties in lexicographic order.
std::vector<Weight> dominant_weights_below(const RootDatum& d, const Weight& lambda);

}  // namespace liecheck
