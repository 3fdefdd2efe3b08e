#include "liecheck/errors.hpp"
#include "liecheck/highest_weight.hpp"
#include "liecheck/lie_algebra.hpp"

#include <doctest.h>

using namespace liecheck;

namespace {

RootDatum datum(const char* label) { return RootDatum::build(parse_type(label)); }

}  // namespace

TEST_CASE("Freudenthal multiplicities") {
  const auto a1 = freudenthal_multiplicities(datum("A1"), {2});
  CHECK(a1 == std::map<Weight, long>{{{-2}, 1}, {{0}, 1}, {{2}, 1}});
  const auto adj = freudenthal_multiplicities(datum("A2"), {1, 1});
  CHECK(adj.at({0, 0}) == 2);
  long total = 0;
  for (const auto& [w, m] : adj) total += m;
  CHECK(total == 8);
  const auto b2 = freudenthal_multiplicities(datum("B2"), {1, 0});
  CHECK(b2.size() == 5);
  for (const auto& [w, m] : b2) CHECK(m == 1);
}

TEST_CASE("three multiplicity oracles agree on built modules") {
  for (const char* label : {"A2", "B2", "G2", "A3"}) {
    const auto d = datum(label);
    KostantPartition partition(d);
    for (const auto& lambda : dominant_weights_up_to_dim(d, 64)) {
      CAPTURE(label);
      CAPTURE(format_weight(lambda));
      const auto m = build_irrep(d, lambda, BuildOptions{64, false});
      const auto fr = freudenthal_multiplicities(d, lambda);
      CHECK(Int(static_cast<unsigned long>(m.dim)) == weyl_dimension(d, lambda));
      CHECK(m.spaces.size() == fr.size());
      for (const auto& s : m.spaces) {
        CHECK(static_cast<long>(s.dim) == fr.at(s.weight));
        CHECK(kostant_multiplicity(d, partition, lambda, s.weight) == static_cast<long>(s.dim));
        for (std::size_t w = 0; w < d.weyl().order(); w += 3) CHECK(m.multiplicity(d.weyl().act(w, s.weight)) == s.dim);
      }
      CHECK(chevalley_relations_hold(d, m));
    }
  }
}

TEST_CASE("module layout") {
  const auto d = datum("A2");
  const auto m = build_irrep(d, {1, 1});
  CHECK(m.dim == 8);
  for (std::size_t k = 1; k < m.spaces.size(); ++k)
    CHECK(std::make_pair(m.spaces[k - 1].h_eigen, m.spaces[k - 1].weight) <
          std::make_pair(m.spaces[k].h_eigen, m.spaces[k].weight));
  const auto v = lowest_weight_vector(m);
  CHECK(v[0] == 1);
  CHECK(m.weight_of(0) == Weight{-1, -1});
  CHECK(m.multiplicity({-1, -1}) == 1);
  for (const auto& f : m.f) CHECK(is_zero(f.apply(v)));
  CHECK(m.eigenspaces().front().dim == 1);
}

TEST_CASE("small modules") {
  const auto a1 = build_irrep(datum("A1"), {3});
  CHECK(a1.dim == 4);
  const auto trivial = build_irrep(datum("B2"), {0, 0});
  CHECK(trivial.dim == 1);
  CHECK(lowest_weight_vector(trivial) == Vec{1});
  CHECK(build_irrep(datum("G2"), {1, 0}).dim == 7);
  const auto low = lowest_weight_vector(build_irrep(datum("A1"), {2}));
  CHECK(low == Vec{1, 0, 0});
}

TEST_CASE("build_irrep errors") {
  CHECK_THROWS_AS(build_irrep(datum("A2"), {-1, 0}), InvalidArgument);
  CHECK_THROWS_AS(build_irrep(datum("A2"), {4, 4}, BuildOptions{100, true}), DimensionBoundExceeded);
}

TEST_CASE("Casimir scalar and adjoint character") {
  const auto d = datum("A2");
  const auto L = LieAlgebraTable::build(d);
  for (const auto& lambda : dominant_weights_up_to_dim(d, 27)) CHECK(casimir_scalar_holds(L, build_irrep(d, lambda)));
  // character of V(theta) is that of the adjoint representation
  std::map<Weight, long> adjoint;
  for (std::size_t a = 0; a < L.dim(); ++a) ++adjoint[L.weight(a)];
  CHECK(freudenthal_multiplicities(d, {1, 1}) == adjoint);
}

TEST_CASE("root vector matrices on a module") {
  const auto d = datum("A2");
  const auto L = LieAlgebraTable::build(d);
  const auto m = build_irrep(d, {1, 1});
  const auto rv = root_vector_matrices(L, m);
  CHECK(rv.e.size() == 3);
  CHECK(rv.e[0] == m.e[0]);
  CHECK(nested_commutator_matrix(m.e, {0}) == m.e[0]);
  CHECK(nested_commutator_matrix(m.e, {0, 1}) == commutator(m.e[1], m.e[0]));
  // the matrices represent the brackets of the table
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      const auto lhs = commutator(rv.e[a], rv.f[b]);
      SparseMat rhs(m.dim, m.dim);
      for (const auto& [k, c] : L.bracket_basis(L.e_index(a), L.f_index(b))) {
        if (k < L.rank()) rhs = rhs + m.h[k].scaled(c);
        else if (k < L.rank() + 3) rhs = rhs + rv.e[k - L.rank()].scaled(c);
        else rhs = rhs + rv.f[k - L.rank() - 3].scaled(c);
      }
      CHECK(lhs == rhs);
    }
}

TEST_CASE("Specm and zero weight space") {
  const auto a1 = specm_and_zero_space(build_irrep(datum("A1"), {2}));
  CHECK(a1.points.size() == 3);
  CHECK(a1.zero_dim == 1);
  const auto adj = specm_and_zero_space(build_irrep(datum("A2"), {1, 1}));
  CHECK(adj.points.size() == 7);
  CHECK(adj.zero_dim == 2);
  const auto g2 = specm_and_zero_space(build_irrep(datum("G2"), {1, 0}));
  CHECK(g2.points.size() == 7);
  CHECK(g2.zero_dim == 1);
}

TEST_CASE("dominant weights by dimension") {
  const auto ws = dominant_weights_up_to_dim(datum("A2"), 10);
  CHECK(ws == std::vector<Weight>{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 1}, {0, 3}, {3, 0}});
}
