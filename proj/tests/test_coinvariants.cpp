#include "liecheck/coinvariants.hpp"
#include "liecheck/errors.hpp"

#include <doctest.h>

#include <map>
#include <memory>

using namespace liecheck;

namespace {

std::shared_ptr<const TypeContext> context(const char* label) {
  static std::map<std::string, std::shared_ptr<const TypeContext>> memo;
  auto& slot = memo[label];
  if (!slot) slot = std::make_shared<const TypeContext>(parse_type(label));
  return slot;
}

// [n]_q! as an exact polynomial
GradedSeries q_factorial(std::size_t n) {
  GradedSeries out = GradedSeries::from_ints({1});
  for (std::size_t k = 1; k <= n; ++k) out = out * GradedSeries(std::vector<Int>(k, 1));
  return out;
}

// Gaussian binomial [n choose k]_q via exact division of q-factorials
GradedSeries q_binomial(std::size_t n, std::size_t k) {
  const auto num = q_factorial(n);
  const auto den = q_factorial(k) * q_factorial(n - k);
  const auto quotient = truncated_divide(num, den, static_cast<std::size_t>(num.degree()));
  return GradedSeries(quotient.coefficients());
}

GradedSeries prod_inverse(const std::vector<long>& degrees, std::size_t n) {
  GradedSeries s = GradedSeries::from_ints({1}).truncated(n + 1);
  for (auto d : degrees)
    s = truncated_divide(s, GradedSeries::from_ints({1}) - GradedSeries::monomial(static_cast<std::size_t>(d)), n);
  return s;
}

std::vector<std::size_t> all_elements(const RootDatum& d) {
  std::vector<std::size_t> out(d.weyl().order());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

}  // namespace

TEST_CASE("parabolic coinvariant algebras of A2") {
  const auto& d = context("A2")->datum();
  const auto regular = parabolic_coinvariant_dims(d, {1, 1});
  CHECK(regular.quotient == GradedSeries::from_ints({1, 2, 2, 1}));
  CHECK(regular.holds);
  CHECK(regular.stabilizer_order == 1);
  const auto zero = parabolic_coinvariant_dims(d, {0, 0});
  CHECK(zero.quotient == GradedSeries::from_ints({1}));
  const auto w1 = parabolic_coinvariant_dims(d, {1, 0});
  CHECK(w1.quotient == GradedSeries::from_ints({1, 1, 1}));
  CHECK(w1.parabolic == std::vector<std::size_t>{1});
  // a non-dominant weight has a conjugate stabilizer
  CHECK(parabolic_coinvariant_dims(d, {-1, 1}).quotient == w1.quotient);
}

TEST_CASE("Grassmannians: coinvariants are Gaussian binomials") {
  for (const char* label : {"A1", "A2", "A3", "A4"}) {
    const auto& d = context(label)->datum();
    const std::size_t n = d.rank() + 1;
    for (std::size_t k = 1; k < n; ++k) {
      CAPTURE(label);
      CAPTURE(k);
      const auto rep = parabolic_coinvariant_dims(d, d.fundamental(k - 1));
      CHECK(rep.quotient == q_binomial(n, k));
    }
  }
}

TEST_CASE("coinvariant totals, palindromes and the Borel check") {
  for (const char* label : {"B2", "G2", "B3", "C3"}) {
    const auto ctx = context(label);
    const auto& d = ctx->datum();
    for (const auto& lambda : dominant_weights_up_to_dim(d, 200)) {
      CAPTURE(label);
      CAPTURE(format_weight(lambda));
      const auto rep = parabolic_coinvariant_dims(d, lambda);
      CHECK(rep.holds);
      CHECK(rep.quotient.is_palindromic());
      CHECK(rep.quotient.total() * static_cast<unsigned long>(rep.stabilizer_order) ==
            static_cast<unsigned long>(d.weyl().order()));
      CHECK(verify_borel(*ctx, lambda).verdict == Verdict::Pass);
    }
  }
}

TEST_CASE("Molien series is a product over the fundamental degrees") {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4"}) {
    CAPTURE(label);
    const auto ctx = context(label);
    std::vector<long> degrees = ctx->exponents();
    for (auto& m : degrees) ++m;
    CHECK(equals(molien_series(ctx->datum(), all_elements(ctx->datum()), 20), prod_inverse(degrees, 20)));
  }
  const auto& a2 = context("A2")->datum();
  CHECK(equals(molien_series(a2, {0}, 4), GradedSeries::from_ints({1, 2, 3, 4, 5}).truncated(5)));
  CHECK(stabilizer_elements(a2, {1, 0}).size() == 2);
  CHECK_THROWS_AS(molien_series(a2, {}, 3), InvalidArgument);
}

TEST_CASE("Reynolds averages are invariant") {
  const auto& d = context("B2")->datum();
  const auto all = all_elements(d);
  const auto inv = reynolds_invariants(d, all, 2, 1);
  REQUIRE(inv.size() == 1);
  for (std::size_t w = 0; w < d.weyl().order(); ++w)
    CHECK(inv[0].linear_substitute(d.weyl().rational_matrix(w)) == inv[0]);
  CHECK(reynolds_invariants(d, all, 3, 5).empty());
}

TEST_CASE("surjectivity shadow and key1") {
  const auto ctx = context("A2");
  Instance w1(ctx, {1, 0});
  const auto s = verify_surjectivity_shadow(w1);
  CHECK(s.verdict == Verdict::Pass);
  CHECK(*s.series_lhs == *s.series_rhs);
  Instance zero(ctx, {0, 0});
  CHECK(verify_surjectivity_shadow(zero).verdict == Verdict::Pass);
  const auto k = verify_key_i(w1);
  CHECK(k.verdict == Verdict::Pass);
  CHECK(std::get<long long>(*k.find_fact("dim")) == 3);
  CHECK_THROWS_AS(verify_key_i(zero), InvalidArgument);
  Instance adj(ctx, {1, 1});
  CHECK_THROWS_AS(verify_key_i(adj), InvalidArgument);

  Instance a3(context("A3"), {0, 1, 0});
  CHECK(verify_key_i(a3).verdict == Verdict::Pass);
  Instance spin(context("B3"), {0, 0, 1});
  const auto b3 = verify_key_i(spin);
  CHECK(b3.verdict == Verdict::Pass);
  CHECK(std::get<long long>(*b3.find_fact("dim")) == 8);
}

TEST_CASE("adjoint A2: the regular stabilizer makes the surjectivity shadow fail") {
  // theta = rho for A2, so W_theta = 1 and the coinvariant side is all of H(G/B)
  Instance adj(context("A2"), {1, 1});
  const auto r = verify_surjectivity_shadow(adj);
  CHECK(std::get<long long>(*r.find_fact("stabilizer_order")) == 1);
  CHECK(*r.series_rhs == GradedSeries::from_ints({1, 2, 2, 1}));
  CHECK(*r.series_lhs == GradedSeries::from_ints({1, 1, 2, 2, 1}));
  CHECK(r.verdict == Verdict::Fail);
}

TEST_CASE("coinvariant cache returns the same report") {
  CoinvariantCache cache;
  const auto& d = context("B2")->datum();
  const auto& a = cache.get(d, {1, 0});
  const auto& b = cache.get(d, {3, 0});  // same parabolic
  CHECK(&a == &b);
  CHECK(a.quotient == parabolic_coinvariant_dims(d, {1, 0}).quotient);
}

TEST_CASE("invariants of g on S(g)") {
  const auto& sl2 = context("A1")->algebra();
  const auto inv = lie_invariants(sl2, 5);
  CHECK(inv.dims == std::vector<std::size_t>{1, 0, 1, 0, 1, 0});
  CHECK(inv.degrees == std::vector<long>{2});
  const auto sl3 = lie_invariants(context("A2")->algebra(), 4);
  CHECK(sl3.degrees == std::vector<long>{2, 3});
  CHECK(sl3.dims == std::vector<std::size_t>{1, 0, 1, 1, 1});
  CHECK_THROWS_AS(lie_invariants(context("G2")->algebra(), 2), DimensionBoundExceeded);
}

TEST_CASE("nilpotent cone Hilbert series") {
  const auto a1 = nilpotent_cone_hilbert_check(*context("A1"), 10);
  CHECK(a1.verdict == Verdict::Pass);
  CHECK(a1.series_lhs->coefficients() == std::vector<Int>{1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21});
  CHECK(nilpotent_cone_hilbert_check(*context("A2"), 6).verdict == Verdict::Pass);
  CHECK(nilpotent_cone_hilbert_check(*context("A1"), 0).series_lhs->coefficients() == std::vector<Int>{1});
  const auto skipped = nilpotent_cone_hilbert_check(*context("G2"), 4);
  CHECK(skipped.verdict == Verdict::Skip);
}

TEST_CASE("Hilbert series identity") {
  const auto a1 = hilbert_identity_check(*context("A1"), 10);
  CHECK(a1.verdict == Verdict::Pass);
  // (1 + t) / (1 - t)^3
  CHECK(equals(*a1.series_rhs, truncated_divide(GradedSeries::from_ints({1, 1}),
                                                GradedSeries::from_ints({1, -3, 3, -1}), 10)));
  for (const char* label : {"A2", "A3", "B2", "B3", "C3", "G2"}) {
    const auto r = hilbert_identity_check(*context(label), 30);
    CHECK_MESSAGE(r.verdict == Verdict::Pass, label);
    CHECK(r.notes.front().rfind("shadow-check", 0) == 0);
  }
}
