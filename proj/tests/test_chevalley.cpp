#include "liecheck/errors.hpp"
#include "liecheck/lie_algebra.hpp"

#include <doctest.h>

#include <random>

using namespace liecheck;

namespace {

LieAlgebraTable algebra(const char* label) { return LieAlgebraTable::build(RootDatum::build(parse_type(label))); }

std::vector<long> expected_exponents(const char* label) {
  const std::string s(label);
  if (s == "A1") return {1};
  if (s == "A2") return {1, 2};
  if (s == "A3") return {1, 2, 3};
  if (s == "B2") return {1, 3};
  if (s == "B3" || s == "C3") return {1, 3, 5};
  if (s == "G2") return {1, 5};
  if (s == "D4") return {1, 3, 3, 5};
  if (s == "F4") return {1, 5, 7, 11};
  return {};
}

bool spans_equal(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t n) {
  EchelonBasis x(n), y(n);
  for (const auto& v : a) x.insert(v);
  for (const auto& v : b) y.insert(v);
  if (x.rank() != y.rank()) return false;
  for (const auto& v : b)
    if (x.insert(v)) return false;
  return true;
}

}  // namespace

TEST_CASE("sl2 relations") {
  const auto L = algebra("A1");
  CHECK(L.dim() == 3);
  const auto h = L.basis_vector(L.h_index(0)), e = L.basis_vector(L.e_index(0)), f = L.basis_vector(L.f_index(0));
  CHECK(L.bracket(e, f) == h);
  CHECK(L.bracket(h, e) == scaled(e, 2));
  CHECK(L.bracket(h, f) == scaled(f, -2));
}

TEST_CASE("Jacobi identity on every basis triple, rank <= 2") {
  for (const char* label : {"A2", "B2", "G2"}) {
    const auto L = algebra(label);
    CHECK(L.is_antisymmetric());
    bool ok = true;
    for (std::size_t a = 0; a < L.dim() && ok; ++a)
      for (std::size_t b = 0; b < L.dim() && ok; ++b)
        for (std::size_t c = 0; c < L.dim() && ok; ++c) ok = L.jacobi_holds(a, b, c);
    CHECK_MESSAGE(ok, label);
  }
  CHECK(algebra("G2").dim() == 14);
  CHECK(algebra("A2").dim() == 8);
}

TEST_CASE("Jacobi identity on random triples, rank 3-4") {
  std::mt19937 rng(2024);
  for (const char* label : {"A3", "B3", "C3", "D4", "F4"}) {
    const auto L = algebra(label);
    std::uniform_int_distribution<std::size_t> pick(0, L.dim() - 1);
    bool ok = true;
    for (int k = 0; k < 1000 && ok; ++k) ok = L.jacobi_holds(pick(rng), pick(rng), pick(rng));
    CHECK_MESSAGE(ok, label);
  }
}

TEST_CASE("structure constants round-trip through from_constants") {
  const auto L = algebra("B2");
  const auto M = LieAlgebraTable::from_constants(L.datum(), L.constants());
  CHECK(M.constants() == L.constants());
  auto broken = L.constants();
  std::get<3>(broken.front()) += 1;
  CHECK_THROWS_AS(LieAlgebraTable::from_constants(L.datum(), broken), ParseError);
}

TEST_CASE("principal triple") {
  const auto L = algebra("A2");
  const auto t = principal_triple(L);
  CHECK(triple_relations_hold(L, t));
  CHECK(t.h[L.h_index(0)] == 2);
  CHECK(t.h[L.h_index(1)] == 2);
  CHECK(t.f[L.f_index(0)] == 2);
  CHECK(t.f[L.f_index(1)] == 2);
  for (const char* label : {"A1", "B2", "B3", "C3", "G2", "D4"}) {
    const auto M = algebra(label);
    CHECK_MESSAGE(triple_relations_hold(M, principal_triple(M)), label);
  }
}

TEST_CASE("exponents from ker ad e") {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4"}) {
    CAPTURE(label);
    const auto L = algebra(label);
    const auto t = principal_triple(L);
    const auto c = centralizer(L, t.e);
    CHECK(c.basis.size() == L.rank());
    CHECK(c.abelian);
    CHECK(c.exponents == expected_exponents(label));
    long prod = 1, sum = 0;
    for (auto m : c.exponents) prod *= m + 1, sum += 2 * m + 1;
    CHECK(static_cast<std::size_t>(prod) == L.datum().weyl().order());
    CHECK(static_cast<std::size_t>(sum) == L.dim());
  }
}

TEST_CASE("g^{e+t} is abelian of dimension rank") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coord(-3, 3);
  for (const char* label : {"A2", "B2", "G2", "A3"}) {
    const auto L = algebra(label);
    const auto t = principal_triple(L);
    for (int k = 0; k < 5; ++k) {
      std::vector<long> c(L.rank());
      for (auto& x : c) x = coord(rng);
      Vec x = t.e;
      axpy(x, 1, cartan_element(L, c));
      const auto z = centralizer(L, x);
      CHECK(z.basis.size() == L.rank());
      CHECK(z.abelian);
    }
  }
}

TEST_CASE("regular semisimple centralizer is h, zero centralizes everything") {
  const auto L = algebra("B2");
  const auto z = centralizer(L, cartan_element(L, {3, 1}));
  std::vector<Vec> h;
  for (std::size_t i = 0; i < L.rank(); ++i) h.push_back(L.basis_vector(L.h_index(i)));
  CHECK(spans_equal(z.basis, h, L.dim()));
  CHECK(centralizer(L, Vec(L.dim())).basis.size() == L.dim());
}

TEST_CASE("exp(t ad e) carries g^{e+h} onto h") {
  for (const char* label : {"A1", "A2", "B2", "G2", "B3"}) {
    CAPTURE(label);
    const auto L = algebra(label);
    const auto t = principal_triple(L);
    const auto conj = conjugate_to_cartan(L, t);
    std::vector<Vec> h;
    for (std::size_t i = 0; i < L.rank(); ++i) h.push_back(L.basis_vector(L.h_index(i)));
    CHECK(spans_equal(conj.images, h, L.dim()));
    // dims jump exactly at the exponents
    const auto ex = expected_exponents(label);
    for (std::size_t k = 0; k < conj.transported_dims.size(); ++k) {
      std::size_t below = 0;
      for (auto m : ex) below += static_cast<std::size_t>(m) <= k ? 1 : 0;
      CHECK(conj.transported_dims[k] == below);
    }
  }
  const auto A1 = algebra("A1");
  CHECK(conjugate_to_cartan(A1, principal_triple(A1)).t == Rat(1) / 2);
}

TEST_CASE("exp_ad of a nilpotent element is an automorphism") {
  const auto L = algebra("A2");
  const auto t = principal_triple(L);
  const Mat u = exp_ad(L, t.e, Rat(1) / 3);
  const auto a = L.basis_vector(L.f_index(0)), b = L.basis_vector(L.e_index(1));
  CHECK(u.apply(L.bracket(a, b)) == L.bracket(u.apply(a), u.apply(b)));
}
