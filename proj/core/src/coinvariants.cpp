#include "liecheck/coinvariants.hpp"

#include "liecheck/errors.hpp"

#include <algorithm>
#include <map>

namespace liecheck {

namespace {

// det(1 - t M) from the principal minors of M.
GradedSeries det_one_minus(const Mat& m) {
  const std::size_t r = m.rows();
  std::vector<Int> c(r + 1);
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    Mat sub(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = m(idx[a], idx[b]);
    const Rat det = idx.empty() ? Rat(1) : determinant(sub);
    if (det.get_den() != 1) throw InternalFailure("molien: non-integral minor");
    const Int v = det.get_num();
    if (idx.size() % 2 == 0) c[idx.size()] += v;
    else c[idx.size()] -= v;
  }
  return GradedSeries(std::move(c));
}

std::map<Exponents, std::size_t> monomial_index(const std::vector<Exponents>& monos) {
  std::map<Exponents, std::size_t> index;
  for (std::size_t k = 0; k < monos.size(); ++k) index.emplace(monos[k], k);
  return index;
}

// Invariants of a finite group of W elements acting on polynomials in the
// fundamental coordinates, one degree at a time. Products of generators found
// so far are tried first; Reynolds averages fill in whatever is missing.
class InvariantRing {
 public:
  InvariantRing(const RootDatum& d, std::vector<std::size_t> group, std::size_t max_degree)
      : rank_(d.rank()), group_(std::move(group)),
        molien_(molien_series(d, group_, max_degree)), max_degree_(max_degree) {
    forms_.resize(group_.size());
    powers_.resize(group_.size());
    for (std::size_t g = 0; g < group_.size(); ++g) {
      const Mat m = d.weyl().rational_matrix(group_[g]);
      for (std::size_t i = 0; i < rank_; ++i) {
        Polynomial p(rank_);
        for (std::size_t j = 0; j < rank_; ++j)
          if (sgn(m(i, j)) != 0) p.add_term(unit_exponents(rank_, j), m(i, j));
        forms_[g].push_back(std::move(p));
      }
      powers_[g].resize(rank_);
    }
  }

  std::size_t expected(std::size_t degree) const { return static_cast<std::size_t>(molien_.coeff(degree).get_ui()); }

  const std::vector<Polynomial>& basis(std::size_t degree) {
    if (degree > max_degree_) throw InvalidArgument("invariant ring: degree beyond the prepared bound");
    while (bases_.size() <= degree) extend();
    return bases_[degree];
  }

  const std::vector<std::pair<Polynomial, std::size_t>>& generators() const noexcept { return generators_; }

  Polynomial reynolds(const Exponents& a) {
    Polynomial sum(rank_);
    for (std::size_t g = 0; g < group_.size(); ++g) {
      Polynomial t = Polynomial::constant(rank_, 1);
      for (std::size_t i = 0; i < rank_; ++i)
        if (a[i] > 0) t = t * power(g, i, a[i]);
      sum += t;
    }
    return sum;
  }

 private:
  const Polynomial& power(std::size_t g, std::size_t i, unsigned k) {
    auto& pw = powers_[g][i];
    if (pw.empty()) pw.push_back(Polynomial::constant(rank_, 1));
    while (pw.size() <= k) pw.push_back(pw.back() * forms_[g][i]);
    return pw[k];
  }

  void extend() {
    const std::size_t d = bases_.size();
    const std::size_t want = expected(d);
    const auto monos = monomials_of_degree(rank_, d);
    std::vector<Polynomial> out;
    if (group_.size() == 1) {
      for (const auto& a : monos) out.push_back(Polynomial::monomial(a));
      if (d == 1)
        for (const auto& p : out) generators_.emplace_back(p, 1);
      bases_.push_back(std::move(out));
      return;
    }
    const auto index = monomial_index(monos);
    EchelonBasis span(monos.size());
    auto offer = [&](Polynomial p) {
      if (span.rank() >= want || p.is_zero()) return false;
      if (!span.insert(p.coordinates(index))) return false;
      out.push_back(std::move(p));
      return true;
    };
    for (const auto& [g, k] : generators_) {
      if (k > d || k == 0) continue;
      for (const auto& b : bases_[d - k]) offer(g * b);
    }
    if (d == 0) offer(Polynomial::constant(rank_, 1));
    for (const auto& a : monos) {
      if (span.rank() >= want) break;
      Polynomial p = reynolds(a);
      if (offer(p)) generators_.emplace_back(out.back(), d);
    }
    if (span.rank() != want) throw InternalFailure("invariant ring: Reynolds averages fall short of the Molien count");
    bases_.push_back(std::move(out));
  }

  std::size_t rank_;
  std::vector<std::size_t> group_;
  GradedSeries molien_;
  std::size_t max_degree_;
  std::vector<std::vector<Polynomial>> forms_;
  std::vector<std::vector<std::vector<Polynomial>>> powers_;
  std::vector<std::vector<Polynomial>> bases_;
  std::vector<std::pair<Polynomial, std::size_t>> generators_;
};

std::vector<long> fundamental_degrees(const TypeContext& ctx) {
  auto out = ctx.exponents();
  for (auto& m : out) ++m;
  return out;
}

GradedSeries one() { return GradedSeries::from_ints({1}); }

GradedSeries one_minus_power(std::size_t k) { return one() - GradedSeries::monomial(k); }

// 1 / (1 - t)^k through degree n.
GradedSeries inverse_power_of_one_minus(std::size_t k, std::size_t n) {
  GradedSeries s = one().truncated(n + 1);
  for (std::size_t i = 0; i < k; ++i) s = truncated_divide(s, one_minus_power(1), n);
  return s;
}

const char* kShadowNote = "shadow-check: graded-dimension identity only";

}  // namespace

// ---------------------------------------------------------------- Molien

std::vector<std::size_t> stabilizer_elements(const RootDatum& d, const Weight& mu) {
  std::vector<std::size_t> out;
  const auto& w = d.weyl();
  for (std::size_t x = 0; x < w.order(); ++x)
    if (w.act(x, mu) == mu) out.push_back(x);
  return out;
}

GradedSeries molien_series(const RootDatum& d, const std::vector<std::size_t>& elements, std::size_t n) {
  if (elements.empty()) throw InvalidArgument("molien_series: empty group");
  std::map<std::vector<Int>, std::size_t> classes;
  for (auto x : elements) ++classes[det_one_minus(d.weyl().rational_matrix(x)).coefficients()];
  GradedSeries sum = GradedSeries().truncated(n + 1);
  for (const auto& [poly, count] : classes) {
    const auto term = truncated_divide(one(), GradedSeries(poly), n);
    for (std::size_t k = 0; k < count; ++k) sum = sum + term;
  }
  std::vector<Int> c = sum.coefficients();
  for (auto& x : c) {
    if (!mpz_divisible_ui_p(x.get_mpz_t(), elements.size()))
      throw InternalFailure("molien_series: coefficient not divisible by the group order");
    x /= static_cast<unsigned long>(elements.size());
  }
  return GradedSeries(std::move(c), n + 1);
}

std::vector<Polynomial> reynolds_invariants(const RootDatum& d, const std::vector<std::size_t>& group,
                                            std::size_t degree, std::size_t expected) {
  InvariantRing ring(d, group, degree);
  const auto monos = monomials_of_degree(d.rank(), degree);
  const auto index = monomial_index(monos);
  EchelonBasis span(monos.size());
  std::vector<Polynomial> out;
  for (const auto& a : monos) {
    if (out.size() >= expected) break;
    Polynomial p = ring.reynolds(a);
    if (!p.is_zero() && span.insert(p.coordinates(index))) out.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------- coinvariants

CoinvariantReport parabolic_coinvariant_dims(const RootDatum& d, const Weight& lambda) {
  if (lambda.size() != d.rank()) throw InvalidArgument("parabolic_coinvariant_dims: weight has the wrong rank");
  const Weight dom = d.dominant_conjugate(lambda).first;
  CoinvariantReport rep;
  rep.parabolic = stabilizer_generators(dom);
  const auto stab = stabilizer_elements(d, dom);
  rep.stabilizer_order = stab.size();
  rep.length_series = length_gen_function(d, rep.parabolic);

  const std::size_t top = static_cast<std::size_t>(std::max(0L, rep.length_series.degree()));
  const std::size_t cap = d.num_positive_roots() + 1;
  std::vector<std::size_t> all(d.weyl().order());
  for (std::size_t x = 0; x < all.size(); ++x) all[x] = x;
  InvariantRing sub(d, stab, cap);
  InvariantRing full(d, all, cap);

  std::vector<Int> quotient;
  for (std::size_t deg = 0; deg <= cap; ++deg) {
    const auto& inv = sub.basis(deg);
    rep.invariant_dims.push_back(inv.size());
    full.basis(deg);  // make generators of degree deg available
    const auto monos = monomials_of_degree(d.rank(), deg);
    const auto index = monomial_index(monos);
    EchelonBasis ideal(monos.size());
    for (const auto& [f, k] : full.generators()) {
      if (k == 0 || k > deg) continue;
      for (const auto& b : sub.basis(deg - k)) {
        if (ideal.rank() == inv.size()) break;
        ideal.insert((f * b).coordinates(index));
      }
    }
    const std::size_t q = inv.size() - ideal.rank();
    quotient.emplace_back(static_cast<unsigned long>(q));
    if (deg > top && q == 0) break;
  }
  rep.quotient = GradedSeries(std::move(quotient));
  rep.holds = rep.quotient == rep.length_series;
  return rep;
}

const CoinvariantReport& CoinvariantCache::get(const RootDatum& d, const Weight& lambda) {
  const Weight dom = d.dominant_conjugate(lambda).first;
  auto key = std::make_pair(d.type().label(), stabilizer_generators(dom));
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  auto rep = parabolic_coinvariant_dims(d, dom);
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.emplace(std::move(key), std::move(rep)).first->second;
}

namespace {

CoinvariantReport coinvariants_via(CoinvariantCache* cache, const RootDatum& d, const Weight& lambda) {
  if (cache) return cache->get(d, lambda);
  return parabolic_coinvariant_dims(d, lambda);
}

std::vector<long> as_long(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

CheckReport verify_borel(const TypeContext& ctx, const Weight& lambda, CoinvariantCache* cache) {
  const auto& d = ctx.datum();
  const auto rep = coinvariants_via(cache, d, lambda);
  auto r = make_report("borel", ctx, d.dominant_conjugate(lambda).first);
  r.series_lhs = rep.quotient;
  r.series_rhs = rep.length_series;
  r.lhs_label = "S h^{W_lambda} / m_o S h^{W_lambda}";
  r.rhs_label = "length series of W^lambda";
  const std::size_t w = d.weyl().order();
  const bool total_ok = rep.quotient.total() == Int(static_cast<unsigned long>(w / rep.stabilizer_order));
  const bool palindromic = rep.quotient.is_palindromic();
  r.verdict = rep.holds && total_ok && palindromic ? Verdict::Pass : Verdict::Fail;
  r.fact("parabolic", as_long(rep.parabolic));
  r.fact("stabilizer_order", static_cast<long long>(rep.stabilizer_order));
  r.fact("weyl_order", static_cast<long long>(w));
  r.fact("total", static_cast<long long>(rep.quotient.total().get_si()));
  r.fact("invariant_dims", as_long(rep.invariant_dims));
  r.fact("palindromic", palindromic);
  if (!rep.holds) r.notes.push_back("quotient series differs from the coset length series");
  if (!total_ok) r.notes.push_back("total differs from |W|/|W_lambda|");
  return r;
}

CheckReport verify_surjectivity_shadow(Instance& inst, CoinvariantCache* cache) {
  const auto& d = inst.context().datum();
  const auto rep = coinvariants_via(cache, d, inst.highest());
  const auto& cyc = inst.cyclic();
  auto r = make_report("surj", inst.context(), inst.highest());
  r.series_lhs = cyc.series;
  r.series_rhs = rep.quotient;
  r.lhs_label = "U(g^e)/ann[g^e; v_lambda]";
  r.rhs_label = "S h^{W_lambda} / m_o S h^{W_lambda}";
  const bool geq = coeffwise_geq(cyc.series, rep.quotient);
  r.verdict = geq ? Verdict::Pass : Verdict::Fail;
  r.fact("dim", static_cast<long long>(inst.module().dim));
  r.fact("parabolic", as_long(rep.parabolic));
  r.fact("stabilizer_order", static_cast<long long>(rep.stabilizer_order));
  r.fact("borel_holds", rep.holds);
  if (!geq) {
    for (std::size_t k = 0; k < rep.quotient.coefficients().size(); ++k)
      if (cyc.series.coeff(k) < rep.quotient.coeff(k)) {
        r.notes.push_back("coefficient of q^" + std::to_string(k) + " is smaller on the left");
        break;
      }
  }
  return r;
}

CheckReport verify_key_i(Instance& inst, CoinvariantCache* cache) {
  const auto& d = inst.context().datum();
  const bool zero = std::all_of(inst.highest().begin(), inst.highest().end(), [](long x) { return x == 0; });
  if (zero || !is_minuscule(d, inst.highest()))
    throw InvalidArgument("key1: " + format_weight(inst.highest()) + " is not minuscule");
  const auto rep = coinvariants_via(cache, d, inst.highest());
  const auto& cyc = inst.cyclic();
  auto r = make_report("key1", inst.context(), inst.highest());
  r.series_lhs = cyc.series;
  r.series_rhs = rep.quotient;
  r.lhs_label = "U(g^e)/ann[g^e; v_mu]";
  r.rhs_label = "S h^{W_mu} / m_o S h^{W_mu}";
  const std::size_t w = d.weyl().order();
  const std::size_t dim = inst.module().dim;
  const bool series_ok = cyc.series == rep.quotient;
  const bool dim_ok = dim * rep.stabilizer_order == w;
  r.verdict = series_ok && dim_ok ? Verdict::Pass : Verdict::Fail;
  r.fact("dim", static_cast<long long>(dim));
  r.fact("weyl_order", static_cast<long long>(w));
  r.fact("stabilizer_order", static_cast<long long>(rep.stabilizer_order));
  r.fact("series_equal", series_ok);
  r.fact("dim_equals_index", dim_ok);
  return r;
}

// ---------------------------------------------------------------- S(g)^g

InvariantDegrees lie_invariants(const LieAlgebraTable& L, std::size_t max_degree, std::size_t dim_bound) {
  const std::size_t n = L.dim();
  if (n > dim_bound)
    throw DimensionBoundExceeded("lie_invariants: dim g = " + std::to_string(n) + " exceeds the bound " +
                                 std::to_string(dim_bound));
  const auto& d = L.datum();
  const std::size_t r = d.rank();

  // ad e_i as derivations of S(g)
  std::vector<std::vector<Polynomial>> derivations;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<long> unit(r, 0);
    unit[i] = 1;
    const std::size_t e = L.e_index(*d.root_index(unit));
    std::vector<Polynomial> images;
    for (std::size_t a = 0; a < n; ++a) {
      Polynomial p(n);
      for (const auto& [c, v] : L.bracket_basis(e, a)) p.add_term(unit_exponents(n, c), v);
      images.push_back(std::move(p));
    }
    derivations.push_back(std::move(images));
  }
  auto weight_of = [&](const Exponents& a) {
    Weight w(r, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < r; ++i) w[i] += static_cast<long>(a[j]) * L.weight(j)[i];
    return w;
  };

  InvariantDegrees out;
  const Weight zero(r, 0);
  for (std::size_t deg = 0; deg <= max_degree; ++deg) {
    std::vector<Exponents> monos;
    for (auto& a : monomials_of_degree(n, deg))
      if (weight_of(a) == zero) monos.push_back(std::move(a));
    const auto index = monomial_index(monos);

    std::map<std::pair<std::size_t, Exponents>, std::size_t> rows;
    std::vector<std::vector<std::pair<std::size_t, Rat>>> columns(monos.size());
    for (std::size_t k = 0; k < monos.size(); ++k) {
      const auto m = Polynomial::monomial(monos[k]);
      for (std::size_t i = 0; i < r; ++i) {
        const Polynomial image = m.apply_derivation(derivations[i]);
        for (const auto& [a, c] : image.terms()) {
          const auto it = rows.emplace(std::make_pair(i, a), rows.size()).first;
          columns[k].emplace_back(it->second, c);
        }
      }
    }
    Mat m(rows.size(), monos.size());
    for (std::size_t k = 0; k < monos.size(); ++k)
      for (const auto& [row, c] : columns[k]) m(row, k) = c;
    auto kernel = rank_kernel(m).kernel_basis;
    out.dims.push_back(kernel.size());

    // subalgebra generated so far
    EchelonBasis generated(monos.size());
    std::vector<std::size_t> gen_degrees;
    for (auto g : out.degrees) gen_degrees.push_back(static_cast<std::size_t>(g));
    for (const auto& e : weighted_monomials(gen_degrees, deg)) {
      Polynomial p = Polynomial::constant(n, 1);
      for (std::size_t g = 0; g < e.size(); ++g)
        if (e[g] > 0) p = p * out.generators[g].pow(e[g]);
      generated.insert(p.coordinates(index));
    }
    for (auto& v : kernel) {
      if (generated.rank() == kernel.size()) break;
      if (!generated.insert(v)) continue;
      Polynomial p(n);
      for (std::size_t k = 0; k < monos.size(); ++k)
        if (sgn(v[k]) != 0) p.add_term(monos[k], v[k]);
      out.generators.push_back(std::move(p));
      out.degrees.push_back(static_cast<long>(deg));
    }
  }
  return out;
}

GradedSeries nilpotent_cone_dims(const LieAlgebraTable& L, const InvariantDegrees& inv, std::size_t n) {
  const std::size_t nv = L.dim();
  const std::size_t r = L.datum().rank();
  auto weight_of = [&](const Exponents& a) {
    Weight w(r, 0);
    for (std::size_t j = 0; j < nv; ++j)
      for (std::size_t i = 0; i < r; ++i) w[i] += static_cast<long>(a[j]) * L.weight(j)[i];
    return w;
  };
  std::vector<Int> dims;
  for (std::size_t deg = 0; deg <= n; ++deg) {
    const auto monos = monomials_of_degree(nv, deg);
    std::map<Weight, std::vector<Polynomial>> products;
    for (std::size_t g = 0; g < inv.generators.size(); ++g) {
      const auto k = static_cast<std::size_t>(inv.degrees[g]);
      if (k == 0 || k > deg) continue;
      for (const auto& a : monomials_of_degree(nv, deg - k))
        products[weight_of(a)].push_back(inv.generators[g] * Polynomial::monomial(a));
    }
    std::size_t ideal = 0;
    for (const auto& [w, polys] : products) {
      std::map<Exponents, std::size_t> index;
      for (const auto& p : polys)
        for (const auto& [a, c] : p.terms()) index.emplace(a, index.size());
      EchelonBasis span(index.size());
      for (const auto& p : polys) span.insert(p.coordinates(index));
      ideal += span.rank();
    }
    dims.emplace_back(static_cast<unsigned long>(monos.size() - ideal));
  }
  return GradedSeries(std::move(dims), n + 1);
}

CheckReport nilpotent_cone_hilbert_check(const TypeContext& ctx, std::size_t n, std::size_t dim_bound) {
  auto r = make_report("nilcone", ctx, Weight(ctx.datum().rank(), 0));
  r.lhs_label = "S g / (S g^g)_+ S g";
  r.rhs_label = "prod (1 - t^d_i) / (1 - t)^dim g";
  r.notes.push_back(kShadowNote);
  const auto degrees = fundamental_degrees(ctx);
  const std::size_t dim = ctx.algebra().dim();
  r.fact("truncation", static_cast<long long>(n));
  r.fact("dim_g", static_cast<long long>(dim));
  if (dim > dim_bound) {
    r.verdict = Verdict::Skip;
    r.notes.push_back("dim g = " + std::to_string(dim) + " exceeds the invariant-theory bound " +
                      std::to_string(dim_bound));
    return r;
  }
  const auto top = static_cast<std::size_t>(*std::max_element(degrees.begin(), degrees.end()));
  const auto inv = lie_invariants(ctx.algebra(), top, dim_bound);
  GradedSeries target = one();
  for (auto k : degrees) target = target * one_minus_power(static_cast<std::size_t>(k));
  target = target * inverse_power_of_one_minus(dim, n);
  target = target.truncated(n + 1);
  const auto lhs = nilpotent_cone_dims(ctx.algebra(), inv, n);
  r.series_lhs = lhs;
  r.series_rhs = target;
  const bool degrees_ok = inv.degrees == degrees;
  r.verdict = degrees_ok && equals(lhs, target) ? Verdict::Pass : Verdict::Fail;
  r.fact("invariant_dims", std::vector<long>(inv.dims.begin(), inv.dims.end()));
  r.fact("fundamental_degrees", inv.degrees);
  r.fact("expected_degrees", degrees);
  if (!degrees_ok) r.notes.push_back("invariant generator degrees differ from exponents + 1");
  return r;
}

CheckReport hilbert_identity_check(const TypeContext& ctx, std::size_t n) {
  const auto& d = ctx.datum();
  auto r = make_report("hilb4", ctx, Weight(d.rank(), 0));
  r.lhs_label = "Hilb(S g) Hilb(S h) / Hilb(S h^W)";
  r.rhs_label = "Hilb(S g) P_B";
  r.notes.push_back(kShadowNote);
  const auto degrees = fundamental_degrees(ctx);
  const std::size_t rk = d.rank();
  const auto sg = inverse_power_of_one_minus(d.dimension(), n);
  const auto sh = inverse_power_of_one_minus(rk, n);
  GradedSeries numerator = one();
  for (auto k : degrees) numerator = numerator * one_minus_power(static_cast<std::size_t>(k));
  // Hilb(S h) / Hilb(S h^W) = Hilb(S h) * prod (1 - t^d_i)
  const auto lhs = (sg * sh * numerator).truncated(n + 1);
  const auto pb = length_gen_function(d, {});
  const auto rhs = (sg * pb).truncated(n + 1);
  const auto pb_formula = (numerator * sh).truncated(n + 1);

  // Chevalley: dim S^k h^W from the Molien series against prod 1/(1 - t^d_i)
  const std::size_t molien_n = std::max<std::size_t>(n, 20);
  std::vector<std::size_t> all(d.weyl().order());
  for (std::size_t x = 0; x < all.size(); ++x) all[x] = x;
  const auto molien = molien_series(d, all, molien_n);
  GradedSeries chevalley = one().truncated(molien_n + 1);
  for (auto k : degrees) chevalley = truncated_divide(chevalley, one_minus_power(static_cast<std::size_t>(k)), molien_n);

  r.series_lhs = lhs;
  r.series_rhs = rhs;
  const bool identity = equals(lhs, rhs);
  const bool pb_ok = equals(pb.truncated(n + 1), pb_formula);
  const bool molien_ok = equals(molien, chevalley);
  r.verdict = identity && pb_ok && molien_ok ? Verdict::Pass : Verdict::Fail;
  r.fact("truncation", static_cast<long long>(n));
  r.fact("fundamental_degrees", degrees);
  r.fact("poincare_matches_degrees", pb_ok);
  r.fact("molien_matches_degrees", molien_ok);
  r.fact("molien", molien);
  if (!pb_ok) r.notes.push_back("length series of W differs from prod (1 - t^d_i)/(1 - t)^r");
  if (!molien_ok) r.notes.push_back("Molien series differs from prod 1/(1 - t^d_i)");
  return r;
}

}  // namespace liecheck
