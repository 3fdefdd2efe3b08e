#include "liecheck/highest_weight.hpp"

#include "liecheck/errors.hpp"

#include <algorithm>
#include <set>

namespace liecheck {

const WeightSpace* WeightModule::space(const Weight& mu) const {
  auto it = space_index.find(mu);
  return it == space_index.end() ? nullptr : &spaces[it->second];
}

std::size_t WeightModule::multiplicity(const Weight& mu) const {
  const auto* s = space(mu);
  return s ? s->dim : 0;
}

std::vector<Eigenspace> WeightModule::eigenspaces() const {
  std::vector<Eigenspace> out;
  for (const auto& s : spaces) {
    if (out.empty() || out.back().h_eigen != s.h_eigen) out.push_back({s.h_eigen, s.offset, 0});
    out.back().dim += s.dim;
  }
  return out;
}

const Weight& WeightModule::weight_of(std::size_t k) const {
  auto it = std::upper_bound(spaces.begin(), spaces.end(), k,
                             [](std::size_t x, const WeightSpace& s) { return x < s.offset; });
  return std::prev(it)->weight;
}

long WeightModule::h_eigen_of(std::size_t k) const {
  auto it = std::upper_bound(spaces.begin(), spaces.end(), k,
                             [](std::size_t x, const WeightSpace& s) { return x < s.offset; });
  return std::prev(it)->h_eigen;
}

// ---------------------------------------------------------------- oracles

Int weyl_dimension(const RootDatum& d, const Weight& highest) {
  Weight shifted = highest;
  for (auto& x : shifted) ++x;
  Rat dim = 1;
  for (std::size_t k = 0; k < d.num_positive_roots(); ++k)
    dim *= Rat(d.coroot_pairing(shifted, k)) / d.coroot_pairing(d.rho(), k);
  if (!is_integer(dim)) throw InternalFailure("Weyl dimension formula gave a non-integer");
  return dim.get_num();
}

std::map<Weight, long> freudenthal_multiplicities(const RootDatum& d, const Weight& highest) {
  if (!RootDatum::is_dominant(highest)) throw InvalidArgument("highest weight " + format_weight(highest) + " is not dominant");
  const auto dominant = dominant_weights_below(d, highest);
  std::map<Weight, long> dom_mult;
  const Weight rho = d.rho();
  auto plus = [](Weight a, const Weight& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  const Weight lr = plus(highest, rho);
  const Rat top = d.form(lr, lr);
  auto lookup = [&](const Weight& mu) -> long {
    auto it = dom_mult.find(d.dominant_conjugate(mu).first);
    return it == dom_mult.end() ? 0 : it->second;
  };
  for (const auto& mu : dominant) {
    if (mu == highest) {
      dom_mult[mu] = 1;
      continue;
    }
    Rat sum = 0;
    for (const auto& beta : d.positive_roots()) {
      Weight nu = plus(mu, beta.weight);
      while (true) {
        const long m = lookup(nu);
        if (m == 0) break;
        sum += m * d.form(nu, beta.weight);
        nu = plus(nu, beta.weight);
      }
    }
    const Weight mr = plus(mu, rho);
    const Rat denom = top - d.form(mr, mr);
    const Rat mult = 2 * sum / denom;
    if (!is_integer(mult) || sgn(mult) < 0) throw InternalFailure("Freudenthal recursion gave " + to_string(mult));
    dom_mult[mu] = mult.get_num().get_si();
  }
  std::map<Weight, long> out;
  for (const auto& [mu, m] : dom_mult) {
    if (m == 0) continue;
    for (auto& w : weyl_orbit(d, mu)) out.emplace(std::move(w), m);
  }
  return out;
}

Int kostant_multiplicity(const RootDatum& d, KostantPartition& partition, const Weight& highest, const Weight& mu) {
  const auto& w = d.weyl();
  Weight lr = highest;
  for (auto& x : lr) ++x;
  Int total = 0;
  for (std::size_t x = 0; x < w.order(); ++x) {
    Weight diff = w.act(x, lr);
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= mu[i] + 1;
    auto c = d.root_lattice_coordinates(diff);
    if (!c) continue;
    Int p = partition(*c);
    if (w.sign(x) > 0)
      total += p;
    else
      total -= p;
  }
  return total;
}

std::vector<Weight> dominant_weights_up_to_dim(const RootDatum& d, std::size_t bound) {
  std::set<Weight> seen;
  std::vector<Weight> frontier{Weight(d.rank(), 0)};
  seen.insert(frontier.front());
  std::vector<std::pair<Int, Weight>> found;
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& mu : frontier) {
      const Int dim = weyl_dimension(d, mu);
      if (dim > static_cast<unsigned long>(bound)) continue;
      found.emplace_back(dim, mu);
      for (std::size_t i = 0; i < d.rank(); ++i) {
        Weight nu = mu;
        ++nu[i];
        if (seen.insert(nu).second) next.push_back(std::move(nu));
      }
    }
    frontier = std::move(next);
  }
  std::sort(found.begin(), found.end());
  std::vector<Weight> out;
  for (auto& [dim, mu] : found) out.push_back(std::move(mu));
  return out;
}

// ---------------------------------------------------------------- construction

namespace {

using BlockKey = std::pair<Weight, std::size_t>;

struct Builder {
  const RootDatum& d;
  std::size_t r;
  std::map<Weight, Mat> gram;        // Shapovalov Gram matrix of the chosen basis of L(mu)
  std::map<BlockKey, Mat> e_block;   // (mu, i): L(mu) -> L(mu + alpha_i)
  std::map<BlockKey, Mat> f_block;   // (nu, i): L(nu) -> L(nu - alpha_i)
  std::vector<Weight> alpha;

  Weight shift(const Weight& mu, std::size_t i, int sign) const {
    Weight out = mu;
    for (std::size_t a = 0; a < r; ++a) out[a] += sign * alpha[i][a];
    return out;
  }

  std::size_t dim(const Weight& mu) const {
    auto it = gram.find(mu);
    return it == gram.end() ? 0 : it->second.rows();
  }

  // Y_ij : L(mu + alpha_j) -> L(mu + alpha_i), the matrix of e_i f_j
  Mat y_block(const Weight& mu, std::size_t i, std::size_t j) const {
    const Weight src = shift(mu, j, +1);
    const Weight dst = shift(mu, i, +1);
    Mat y(dim(dst), dim(src));
    const Weight mid = shift(src, i, +1);
    if (dim(mid) > 0) {
      const Mat& ei = e_block.at({src, i});
      const Mat& fj = f_block.at({mid, j});
      y = fj * ei;
    }
    if (i == j) {
      const long c = dst[i];  // <mu + alpha_i, alpha_i-check>
      for (std::size_t k = 0; k < y.rows(); ++k) y(k, k) += c;
    }
    return y;
  }

  // Returns the rank found; fills blocks when rank > 0.
  std::size_t build_space(const Weight& mu, std::optional<std::size_t> target) {
    struct Cand {
      std::size_t i, k;
    };
    std::vector<Cand> cands;
    std::vector<std::size_t> present;
    std::vector<std::size_t> first(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      const std::size_t n = dim(shift(mu, i, +1));
      if (n == 0) continue;
      present.push_back(i);
      first[i] = cands.size();
      for (std::size_t k = 0; k < n; ++k) cands.push_back({i, k});
    }
    if (cands.empty()) return 0;
    std::map<std::pair<std::size_t, std::size_t>, Mat> y;
    for (auto i : present)
      for (auto j : present) y.emplace(std::make_pair(i, j), y_block(mu, i, j));

    const std::size_t n = cands.size();
    Mat g(n, n);
    for (auto i : present) {
      const Mat& gi = gram.at(shift(mu, i, +1));
      for (auto j : present) {
        const Mat blk = gi * y.at({i, j});
        for (std::size_t a = 0; a < blk.rows(); ++a)
          for (std::size_t b = 0; b < blk.cols(); ++b) g(first[i] + a, first[j] + b) = blk(a, b);
      }
    }
    // choose independent rows; symmetry makes the principal block nonsingular
    EchelonBasis rows(n);
    std::vector<std::size_t> chosen;
    for (std::size_t s = 0; s < n; ++s) {
      if (target && chosen.size() == *target) break;
      if (rows.insert(g.row(s))) chosen.push_back(s);
    }
    const std::size_t rk = chosen.size();
    if (rk == 0) return 0;

    Mat gs(rk, rk);
    for (std::size_t a = 0; a < rk; ++a)
      for (std::size_t b = 0; b < rk; ++b) gs(a, b) = g(chosen[a], chosen[b]);
    const Mat gs_inv = inverse(gs);

    for (auto i : present) {
      const Weight src = shift(mu, i, +1);
      const std::size_t ni = dim(src);
      Mat cols(rk, ni);
      for (std::size_t a = 0; a < rk; ++a)
        for (std::size_t k = 0; k < ni; ++k) cols(a, k) = g(chosen[a], first[i] + k);
      f_block[{src, i}] = gs_inv * cols;
    }
    for (auto j : present) {
      const std::size_t nj = dim(shift(mu, j, +1));
      Mat ej(nj, rk);
      for (std::size_t t = 0; t < rk; ++t) {
        const Cand& c = cands[chosen[t]];
        const Mat& yji = y.at({j, c.i});
        for (std::size_t a = 0; a < nj; ++a) ej(a, t) = yji(a, c.k);
      }
      e_block[{mu, j}] = std::move(ej);
    }
    gram[mu] = std::move(gs);
    return rk;
  }
};

}  // namespace

WeightModule build_irrep(const RootDatum& d, const Weight& highest, const BuildOptions& options) {
  if (highest.size() != d.rank() || !RootDatum::is_dominant(highest))
    throw InvalidArgument("highest weight " + format_weight(highest) + " is not a dominant weight of " + d.type().label());
  const Int weyl_dim = weyl_dimension(d, highest);
  if (weyl_dim > static_cast<unsigned long>(options.dim_bound))
    throw DimensionBoundExceeded("dim V(" + format_weight(highest) + ") = " + weyl_dim.get_str() + " exceeds bound " +
                                 std::to_string(options.dim_bound));
  const auto freud = freudenthal_multiplicities(d, highest);
  const std::size_t r = d.rank();

  Builder b{d, r, {}, {}, {}, {}};
  for (std::size_t i = 0; i < r; ++i) b.alpha.push_back(d.simple_root(i));
  b.gram[highest] = Mat::identity(1);

  std::vector<Weight> level{highest};
  while (!level.empty()) {
    std::set<Weight> next;
    for (const auto& nu : level)
      for (std::size_t i = 0; i < r; ++i) next.insert(b.shift(nu, i, -1));
    level.clear();
    for (const auto& mu : next) {
      auto it = freud.find(mu);
      const std::size_t expected = it == freud.end() ? 0 : static_cast<std::size_t>(it->second);
      if (options.early_exit && expected == 0) continue;
      std::optional<std::size_t> target;
      if (options.early_exit) target = expected;
      const std::size_t rk = b.build_space(mu, target);
      if (rk != expected)
        throw InternalFailure("Shapovalov rank " + std::to_string(rk) + " at weight " + format_weight(mu) +
                              " differs from Freudenthal multiplicity " + std::to_string(expected));
      if (rk > 0) level.push_back(mu);
    }
  }

  WeightModule m;
  m.type = d.type();
  m.highest = highest;
  for (const auto& [mu, g] : b.gram) m.spaces.push_back({mu, d.h_eigenvalue(mu), 0, g.rows()});
  std::sort(m.spaces.begin(), m.spaces.end(), [](const WeightSpace& x, const WeightSpace& y) {
    return x.h_eigen != y.h_eigen ? x.h_eigen < y.h_eigen : x.weight < y.weight;
  });
  for (std::size_t s = 0; s < m.spaces.size(); ++s) {
    m.spaces[s].offset = m.dim;
    m.dim += m.spaces[s].dim;
    m.space_index[m.spaces[s].weight] = s;
  }
  if (m.dim != weyl_dim) throw InternalFailure("module dimension differs from the Weyl dimension formula");
  if (b.gram.size() != freud.size()) throw InternalFailure("weight support differs from Freudenthal");

  std::vector<std::vector<SparseMat::Triplet>> et(r), ft(r), ht(r);
  for (const auto& s : m.spaces)
    for (std::size_t k = 0; k < s.dim; ++k)
      for (std::size_t i = 0; i < r; ++i)
        if (s.weight[i] != 0) ht[i].push_back({s.offset + k, s.offset + k, Rat(s.weight[i])});
  auto emit = [&m](std::vector<SparseMat::Triplet>& out, const Weight& src, const Weight& dst, const Mat& blk) {
    const auto& a = m.spaces[m.space_index.at(src)];
    const auto& t = m.spaces[m.space_index.at(dst)];
    for (std::size_t x = 0; x < blk.rows(); ++x)
      for (std::size_t y = 0; y < blk.cols(); ++y)
        if (sgn(blk(x, y)) != 0) out.push_back({t.offset + x, a.offset + y, blk(x, y)});
  };
  for (const auto& [key, blk] : b.e_block) {
    const Weight dst = b.shift(key.first, key.second, +1);
    if (blk.rows() > 0 && blk.cols() > 0) emit(et[key.second], key.first, dst, blk);
  }
  for (const auto& [key, blk] : b.f_block) {
    const Weight dst = b.shift(key.first, key.second, -1);
    if (blk.rows() > 0 && blk.cols() > 0) emit(ft[key.second], key.first, dst, blk);
  }
  for (std::size_t i = 0; i < r; ++i) {
    m.e.push_back(SparseMat::from_triplets(m.dim, m.dim, std::move(et[i])));
    m.f.push_back(SparseMat::from_triplets(m.dim, m.dim, std::move(ft[i])));
    m.h.push_back(SparseMat::from_triplets(m.dim, m.dim, std::move(ht[i])));
  }
  return m;
}

Vec lowest_weight_vector(const WeightModule& m) {
  Vec v(m.dim);
  if (m.dim == 0) return v;
  if (m.spaces.front().dim != 1) throw InternalFailure("lowest weight space is not one-dimensional");
  v[m.spaces.front().offset] = 1;
  return v;
}

SpecmData specm_and_zero_space(const WeightModule& m) {
  SpecmData out;
  for (const auto& s : m.spaces) {
    out.points.push_back(s.weight);
    out.dims[s.weight] = s.dim;
    if (std::all_of(s.weight.begin(), s.weight.end(), [](long x) { return x == 0; })) out.zero_dim = s.dim;
  }
  return out;
}

bool chevalley_relations_hold(const RootDatum& d, const WeightModule& m) {
  const std::size_t r = d.rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const SparseMat ef = commutator(m.e[i], m.f[j]);
      if (i == j ? !(ef == m.h[i]) : !ef.is_zero()) return false;
      if (!(commutator(m.h[i], m.e[j]) == m.e[j].scaled(d.cartan(i, j)))) return false;
      if (!(commutator(m.h[i], m.f[j]) == m.f[j].scaled(-d.cartan(i, j)))) return false;
      if (i == j) continue;
      SparseMat xe = m.e[j], xf = m.f[j];
      for (long k = 0; k < 1 - d.cartan(i, j); ++k) {
        xe = commutator(m.e[i], xe);
        xf = commutator(m.f[i], xf);
      }
      if (!xe.is_zero() || !xf.is_zero()) return false;
    }
  return true;
}

}  // namespace liecheck
