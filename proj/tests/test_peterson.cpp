#include "liecheck/errors.hpp"
#include "liecheck/peterson.hpp"

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

GradedSeries ones(std::size_t n) {
  std::vector<Int> c(n, 1);
  return GradedSeries(std::move(c));
}

// dim S^d of a polynomial ring with generators in the given degrees
std::size_t monomial_count(const std::vector<long>& degrees, std::size_t d) {
  std::vector<std::size_t> w(degrees.begin(), degrees.end());
  return weighted_monomials(w, d).size();
}

}  // namespace

TEST_CASE("g^e acting on modules") {
  Instance a1(context("A1"), {2});
  CHECK(a1.action().degrees == std::vector<long>{1});
  Instance adj(context("A2"), {1, 1});
  CHECK(adj.action().degrees == std::vector<long>{1, 2});
  CHECK(ge_action_invariants_hold(adj.action(), adj.module()));
  Instance g2(context("G2"), {1, 0});
  CHECK(g2.action().degrees == std::vector<long>{1, 5});
  CHECK_FALSE(g2.action().ops[1].is_zero());
}

TEST_CASE("cyclic submodules") {
  Instance trivial(context("B2"), {0, 0});
  CHECK(trivial.cyclic().series == GradedSeries::from_ints({1}));
  CHECK(trivial.cyclic().cyclic);
  Instance a1(context("A1"), {2});
  CHECK(a1.cyclic().series == GradedSeries::from_ints({1, 1, 1}));
  CHECK(a1.cyclic().cyclic);
  Instance adj(context("A2"), {1, 1});
  CHECK(adj.cyclic().total == 7);
  CHECK_FALSE(adj.cyclic().cyclic);
  CHECK(adj.cyclic().series == GradedSeries::from_ints({1, 1, 2, 2, 1}));
}

TEST_CASE("sl2: the cyclic series is 1 + q + ... + q^n on both sides") {
  for (long n = 0; n <= 8; ++n) {
    Instance inst(context("A1"), {n});
    const auto r = verify_peterson(inst);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(*r.series_lhs == ones(static_cast<std::size_t>(n) + 1));
  }
}

TEST_CASE("annihilator generators") {
  Instance trivial(context("A2"), {0, 0});
  const auto& ann0 = trivial.annihilator();
  CHECK(ann0.generator_count() == 2);
  CHECK(ann0.degrees[1].generators.size() == 1);
  CHECK(ann0.degrees[2].generators.size() == 1);

  for (long n = 0; n <= 4; ++n) {
    Instance inst(context("A1"), {n});
    const auto& ann = inst.annihilator();
    CHECK(ann.generator_count() == 1);
    CHECK(ann.degrees[static_cast<std::size_t>(n) + 1].generators.size() == 1);
  }
}

TEST_CASE("annihilator bookkeeping: dim S^d = image + kernel") {
  for (const char* label : {"A2", "B2", "G2"}) {
    const auto ctx = context(label);
    for (const auto& lambda : dominant_weights_up_to_dim(ctx->datum(), 30)) {
      Instance inst(ctx, lambda);
      const auto& ann = inst.annihilator();
      for (const auto& deg : ann.degrees) {
        CHECK(deg.monomials.size() == monomial_count(ctx->exponents(), deg.degree));
        CHECK(deg.monomials.size() == deg.kernel_dim + deg.image_dim);
        CHECK(Int(static_cast<unsigned long>(deg.image_dim)) == inst.cyclic().series.coeff(deg.degree));
      }
    }
  }
}

TEST_CASE("joint kernels") {
  const auto ctx = context("A2");
  Instance zero(ctx, {0, 0});
  Instance adj(ctx, {1, 1});
  CHECK(joint_kernel(adj.action(), adj.module(), zero.annihilator()) == 2);
  Instance trivial(ctx, {0, 0});
  Instance w1(ctx, {1, 0});
  CHECK(joint_kernel(trivial.action(), trivial.module(), w1.annihilator()) == 1);
  Instance v(ctx, {1, 0});
  CHECK(joint_kernel(v.action(), v.module(), w1.annihilator()) == 3);
}

TEST_CASE("joint kernel of the augmentation ideal is the zero weight space") {
  for (const char* label : {"A2", "B2", "G2", "A3"}) {
    const auto ctx = context(label);
    Instance zero(ctx, Weight(ctx->datum().rank(), 0));
    for (const auto& lambda : dominant_weights_up_to_dim(ctx->datum(), 40)) {
      if (!ctx->datum().in_root_lattice(lambda)) continue;
      Instance inst(ctx, lambda);
      CHECK(joint_kernel(inst.action(), inst.module(), zero.annihilator()) ==
            inst.module().multiplicity(Weight(ctx->datum().rank(), 0)));
    }
  }
}

TEST_CASE("Brylinski filtration") {
  CHECK(context("A1")->filtration().dims == std::vector<std::size_t>{0, 1});
  CHECK(context("A2")->filtration().dims == std::vector<std::size_t>{0, 1, 2});
  CHECK(context("A2")->filtration().degrees == std::vector<long>{1, 2});
  CHECK(context("G2")->filtration().degrees == std::vector<long>{1, 5});
  for (const char* label : {"A3", "B3", "C3"}) {
    const auto ctx = context(label);
    CHECK(filtration_invariants_hold(ctx->filtration(), ctx->datum().rank()));
    CHECK(ctx->filtration().degrees == ctx->exponents());
  }
}

TEST_CASE("Specm scheme") {
  Instance zero(context("A2"), {0, 0});
  CHECK(zero.specm().points.size() == 1);
  CHECK(zero.specm().series == GradedSeries::from_ints({1}));
  Instance a1(context("A1"), {2});
  CHECK(a1.specm().points.size() == 3);
  CHECK(a1.specm().series == GradedSeries::from_ints({1, 1, 1}));
  Instance adj(context("A2"), {1, 1});
  CHECK(adj.specm().points.size() == 7);
  CHECK(adj.specm().series == adj.cyclic().series);
}

TEST_CASE("verify_peterson, mult1, kkk") {
  Instance adj(context("A2"), {1, 1});
  const auto p = verify_peterson(adj);
  CHECK(p.verdict == Verdict::Pass);
  CHECK(*p.series_lhs == GradedSeries::from_ints({1, 1, 2, 2, 1}));
  CHECK(p.lowest_weight == Weight{-1, -1});

  const auto m = verify_mult1(adj);
  CHECK(m.verdict == Verdict::Pass);
  CHECK(std::get<bool>(*m.find_fact("cyclic")) == false);
  Instance g2(context("G2"), {1, 0});
  CHECK(std::get<bool>(*verify_mult1(g2).find_fact("cyclic")));
  Instance b2(context("B2"), {1, 0});
  CHECK(std::get<bool>(*verify_mult1(b2).find_fact("multiplicity_free")));

  const auto k = verify_kkk_and_ue(adj);
  CHECK(k.verdict == Verdict::Pass);
  CHECK(std::get<long long>(*k.find_fact("complement_dim")) == 2);
  Instance b2adj(context("B2"), {0, 2});
  const auto kb = verify_kkk_and_ue(b2adj);
  CHECK(kb.verdict == Verdict::Pass);
  CHECK(std::get<long long>(*kb.find_fact("zero_weight_dim")) == 2);
  Instance w1(context("A2"), {1, 0});
  CHECK_THROWS_AS(verify_kkk_and_ue(w1), InvalidArgument);
}

TEST_CASE("key2") {
  const auto ctx = context("A2");
  Instance adj(ctx, {1, 1});
  Instance zero(ctx, {0, 0});
  const auto r = verify_key_ii(adj, zero);
  CHECK(r.verdict == Verdict::Pass);
  CHECK(std::get<long long>(*r.find_fact("lhs_product")) == 12);
  Instance w1(ctx, {1, 0});
  Instance ref(ctx, {1, 0});
  CHECK(verify_key_ii(w1, ref).verdict == Verdict::Pass);
  Instance trivial(ctx, {0, 0});
  CHECK(verify_key_ii(trivial, zero).verdict == Verdict::Pass);
  CHECK_THROWS_AS(verify_key_ii(adj, ref), CosetMismatch);
  Instance not_minuscule(ctx, {1, 1});
  CHECK_THROWS_AS(verify_key_ii(adj, not_minuscule), InvalidArgument);
}

TEST_CASE("grF of S h is a polynomial ring") {
  const auto a2 = grF_polynomial_ring_check(*context("A2"), 20);
  CHECK(a2.verdict == Verdict::Pass);
  CHECK(a2.series_lhs->coefficients() ==
        std::vector<Int>{1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9, 10, 10, 11});
  CHECK(grF_polynomial_ring_check(*context("A1"), 5).series_lhs->coefficients() == std::vector<Int>(6, 1));
  CHECK(grF_polynomial_ring_check(*context("G2"), 20).verdict == Verdict::Pass);
}

TEST_CASE("Schubert cell oracle") {
  CHECK(schubert_cell_oracle(context("A2")->datum(), {0, 0}) == GradedSeries::from_ints({1}));
  CHECK(schubert_cell_oracle(context("A1")->datum(), {2}) == GradedSeries::from_ints({1, 1, 1}));
  CHECK(schubert_cell_oracle(context("A2")->datum(), {1, 1}) == GradedSeries::from_ints({1, 1, 2, 2, 1}));
  Instance adj(context("A2"), {1, 1});
  CHECK(verify_cells(adj).verdict == Verdict::Pass);
}

TEST_CASE("instance input validation") {
  CHECK_THROWS_AS(Instance(context("A2"), {1}), InvalidArgument);
  CHECK_THROWS_AS(Instance(context("A2"), {-1, 2}), InvalidArgument);
  Instance big(context("A2"), {6, 6}, BuildOptions{100, true});
  CHECK(big.dimension() == 343);
  CHECK_THROWS_AS(big.module(), DimensionBoundExceeded);
}
