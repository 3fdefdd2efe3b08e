#include "liecheck/lie_algebra.hpp"

#include "liecheck/errors.hpp"

#include <algorithm>

namespace liecheck {

namespace {

std::vector<long> negated(std::vector<long> v) {
  for (auto& x : v) x = -x;
  return v;
}

// Simple-root coordinates of basis element a.
std::vector<long> root_coords(const RootDatum& d, std::size_t a) {
  const std::size_t r = d.rank(), n = d.num_positive_roots();
  if (a < r) return std::vector<long>(r, 0);
  if (a < r + n) return d.positive_roots()[a - r].simple;
  return negated(d.positive_roots()[a - r - n].simple);
}

// Basis index of the root space with simple coordinates c; nullopt if c is
// neither zero nor a root.
std::optional<std::size_t> root_space(const RootDatum& d, const std::vector<long>& c) {
  if (auto k = d.root_index(c)) return d.rank() + *k;
  if (auto k = d.root_index(negated(c))) return d.rank() + d.num_positive_roots() + *k;
  return std::nullopt;
}

// Coefficient c with big = c * small, or nullopt.
std::optional<Rat> proportion(const SparseMat& big, const SparseMat& small) {
  std::optional<Rat> ratio;
  for (std::size_t c = 0; c < small.cols() && !ratio; ++c)
    if (!small.column(c).empty()) {
      const auto& [row, v] = small.column(c).front();
      ratio = big.at(row, c) / v;
    }
  if (!ratio) return big.is_zero() ? std::optional<Rat>(0) : std::nullopt;
  if (!(big == small.scaled(*ratio))) return std::nullopt;
  return ratio;
}

}  // namespace

void LieAlgebraTable::init_layout(const RootDatum& d) {
  datum_ = d;
  rank_ = d.rank();
  npos_ = d.num_positive_roots();
  dim_ = rank_ + 2 * npos_;
  degrees_.assign(dim_, 0);
  weights_.assign(dim_, Weight(rank_, 0));
  for (std::size_t k = 0; k < npos_; ++k) {
    const auto& root = d.positive_roots()[k];
    degrees_[e_index(k)] = 2 * root.height;
    degrees_[f_index(k)] = -2 * root.height;
    weights_[e_index(k)] = root.weight;
    weights_[f_index(k)] = negated(root.weight);
  }
  table_.assign(dim_ * dim_, {});
}

LieAlgebraTable LieAlgebraTable::build(const RootDatum& d) {
  LieAlgebraTable L;
  L.init_layout(d);
  const std::size_t r = L.rank_, n = L.npos_;
  for (std::size_t i = 0; i < r; ++i)
    if (d.positive_roots()[i].height != 1 || d.positive_roots()[i].simple[i] != 1)
      throw InternalFailure("simple roots are not the first positive roots");

  // smallest fundamental module; every nonzero module of a simple algebra is faithful
  std::size_t best = 0;
  for (std::size_t i = 1; i < r; ++i)
    if (weyl_dimension(d, d.fundamental(i)) < weyl_dimension(d, d.fundamental(best))) best = i;
  const WeightModule v = build_irrep(d, d.fundamental(best), BuildOptions{100000, true});

  std::vector<SparseMat> x(L.dim_);
  for (std::size_t i = 0; i < r; ++i) {
    x[L.h_index(i)] = v.h[i];
    x[L.e_index(i)] = v.e[i];
    x[L.f_index(i)] = v.f[i];
  }
  for (std::size_t k = r; k < n; ++k) {
    const auto& alpha = d.positive_roots()[k].simple;
    std::size_t i = 0;
    std::optional<std::size_t> beta;
    for (; i < r; ++i) {
      auto c = alpha;
      --c[i];
      if ((beta = d.root_index(c))) break;
    }
    if (!beta) throw InternalFailure("positive root is not reachable from a lower root");
    long p = 0;
    for (auto c = d.positive_roots()[*beta].simple;;) {
      --c[i];
      if (!d.root_index(c)) break;
      ++p;
    }
    x[L.e_index(k)] = commutator(x[L.e_index(i)], x[L.e_index(*beta)]).scaled(Rat(1, p + 1));
    SparseMat fk = commutator(x[L.f_index(i)], x[L.f_index(*beta)]);
    // normalize so that [e_alpha, f_alpha] is the coroot of alpha
    const auto& root = d.positive_roots()[k];
    SparseMat coroot(v.dim, v.dim);
    for (std::size_t j = 0; j < r; ++j)
      if (alpha[j] != 0) coroot = coroot + v.h[j].scaled(alpha[j] * d.simple_half_norm(j) / root.half_norm);
    auto ratio = proportion(commutator(x[L.e_index(k)], fk), coroot);
    if (!ratio || sgn(*ratio) == 0) throw InternalFailure("root vectors do not close into an sl2-triple");
    x[L.f_index(k)] = fk.scaled(1 / *ratio);
  }

  for (std::size_t a = 0; a < L.dim_; ++a)
    for (std::size_t b = a + 1; b < L.dim_; ++b) {
      const SparseMat c = commutator(x[a], x[b]);
      if (c.is_zero()) continue;
      auto w = root_coords(d, a);
      const auto wb = root_coords(d, b);
      for (std::size_t j = 0; j < r; ++j) w[j] += wb[j];
      SparseVec out;
      if (std::all_of(w.begin(), w.end(), [](long t) { return t == 0; })) {
        // c is diagonal; solve c = sum_j y_j h_j on the diagonal
        Mat sys(v.dim, r);
        Vec rhs(v.dim);
        for (std::size_t row = 0; row < v.dim; ++row) {
          const Weight& mu = v.weight_of(row);
          for (std::size_t j = 0; j < r; ++j) sys(row, j) = mu[j];
          rhs[row] = c.at(row, row);
        }
        auto y = solve(sys, rhs);
        SparseMat check(v.dim, v.dim);
        if (y)
          for (std::size_t j = 0; j < r; ++j) check = check + v.h[j].scaled((*y)[j]);
        if (!y || !(check == c)) throw InternalFailure("bracket of opposite root vectors is not in the Cartan");
        for (std::size_t j = 0; j < r; ++j)
          if (sgn((*y)[j]) != 0) out.emplace_back(L.h_index(j), (*y)[j]);
      } else if (auto g = root_space(d, w)) {
        auto ratio = proportion(c, x[*g]);
        if (!ratio) throw InternalFailure("bracket is not proportional to the root vector");
        out.emplace_back(*g, *ratio);
      } else {
        throw InternalFailure("nonzero bracket outside the root system");
      }
      L.table_[a * L.dim_ + b] = out;
      for (auto& [idx, coef] : out) coef = -coef;
      L.table_[b * L.dim_ + a] = std::move(out);
    }
  L.derive_words();
  return L;
}

LieAlgebraTable LieAlgebraTable::from_constants(
    const RootDatum& d, const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rat>>& constants) {
  LieAlgebraTable L;
  L.init_layout(d);
  for (const auto& [i, j, k, c] : constants) {
    if (i >= L.dim_ || j >= L.dim_ || k >= L.dim_) throw ParseError("structure constant index out of range");
    L.table_[i * L.dim_ + j].emplace_back(k, c);
  }
  for (auto& entry : L.table_) std::sort(entry.begin(), entry.end());
  if (!L.is_antisymmetric()) throw ParseError("cached structure constants are not antisymmetric");
  for (std::size_t i = 0; i < L.rank_; ++i) {
    const auto& ef = L.bracket_basis(L.e_index(i), L.f_index(i));
    if (ef.size() != 1 || ef[0].first != L.h_index(i) || ef[0].second != 1)
      throw ParseError("cached structure constants violate [e_i, f_i] = h_i");
  }
  L.derive_words();
  return L;
}

void LieAlgebraTable::derive_words() {
  const auto& d = datum_;
  e_words_.assign(npos_, {});
  f_words_.assign(npos_, {});
  for (std::size_t k = 0; k < npos_; ++k) {
    if (k < rank_) {
      e_words_[k] = {{k}, 1};
      f_words_[k] = {{k}, 1};
      continue;
    }
    const auto& alpha = d.positive_roots()[k].simple;
    std::size_t i = 0;
    std::optional<std::size_t> beta;
    for (; i < rank_; ++i) {
      auto c = alpha;
      --c[i];
      if ((beta = d.root_index(c))) break;
    }
    if (!beta) throw InternalFailure("positive root is not reachable from a lower root");
    // [x_i, x_beta] = c x_alpha  =>  x_alpha = (scale_beta / c) [x_i, word_beta]
    auto coefficient = [&](std::size_t a, std::size_t b, std::size_t target) -> Rat {
      for (const auto& [idx, c] : bracket_basis(a, b))
        if (idx == target) return c;
      throw InternalFailure("root vector is not a bracket of simple generators");
    };
    const Rat ce = coefficient(e_index(i), e_index(*beta), e_index(k));
    const Rat cf = coefficient(f_index(i), f_index(*beta), f_index(k));
    e_words_[k] = e_words_[*beta];
    e_words_[k].letters.push_back(i);
    e_words_[k].scale /= ce;
    f_words_[k] = f_words_[*beta];
    f_words_[k].letters.push_back(i);
    f_words_[k].scale /= cf;
  }
}

Vec LieAlgebraTable::bracket(const Vec& x, const Vec& y) const {
  Vec out(dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (std::size_t b = 0; b < dim_; ++b) {
      if (sgn(y[b]) == 0) continue;
      const Rat s = x[a] * y[b];
      for (const auto& [k, c] : table_[a * dim_ + b]) out[k] += s * c;
    }
  }
  return out;
}

Mat LieAlgebraTable::ad(const Vec& x) const {
  Mat m(dim_, dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (std::size_t b = 0; b < dim_; ++b)
      for (const auto& [k, c] : table_[a * dim_ + b]) m(k, b) += x[a] * c;
  }
  return m;
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rat>> LieAlgebraTable::constants() const {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rat>> out;
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = 0; b < dim_; ++b)
      for (const auto& [k, c] : table_[a * dim_ + b]) out.emplace_back(a, b, k, c);
  return out;
}

bool LieAlgebraTable::jacobi_holds(std::size_t a, std::size_t b, std::size_t c) const {
  const Vec x = basis_vector(a), y = basis_vector(b), z = basis_vector(c);
  Vec s = bracket(x, bracket(y, z));
  const Vec t = bracket(y, bracket(z, x));
  const Vec u = bracket(z, bracket(x, y));
  for (std::size_t i = 0; i < dim_; ++i) s[i] += t[i] + u[i];
  return is_zero(s);
}

bool LieAlgebraTable::is_antisymmetric() const {
  for (std::size_t a = 0; a < dim_; ++a) {
    if (!table_[a * dim_ + a].empty()) return false;
    for (std::size_t b = a + 1; b < dim_; ++b) {
      const auto& x = table_[a * dim_ + b];
      const auto& y = table_[b * dim_ + a];
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].first != y[i].first || x[i].second != -y[i].second) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- representations

SparseMat nested_commutator_matrix(const std::vector<SparseMat>& ops, const std::vector<std::size_t>& word) {
  if (word.empty()) throw InvalidArgument("nested_commutator_matrix: empty word");
  for (auto w : word)
    if (w >= ops.size()) throw InvalidArgument("nested_commutator_matrix: letter out of range");
  SparseMat m = ops[word.front()];
  for (std::size_t k = 1; k < word.size(); ++k) m = commutator(ops[word[k]], m);
  return m;
}

RootVectorMatrices root_vector_matrices(const LieAlgebraTable& L, const WeightModule& m, bool with_f) {
  const auto& d = L.datum();
  RootVectorMatrices rv;
  for (std::size_t k = 0; k < L.num_positive(); ++k) {
    const auto& ew = L.e_word(k);
    const auto& fw = L.f_word(k);
    if (ew.letters.size() == 1) {
      rv.e.push_back(m.e[ew.letters[0]].scaled(ew.scale));
      if (with_f) rv.f.push_back(m.f[fw.letters[0]].scaled(fw.scale));
      continue;
    }
    // word(alpha) extends word(beta) by one letter, so reuse beta's matrix
    const std::size_t i = ew.letters.back();
    auto c = d.positive_roots()[k].simple;
    --c[i];
    const std::size_t beta = *d.root_index(c);
    rv.e.push_back(commutator(m.e[i], rv.e[beta]).scaled(ew.scale / L.e_word(beta).scale));
    if (with_f) rv.f.push_back(commutator(m.f[i], rv.f[beta]).scaled(fw.scale / L.f_word(beta).scale));
  }
  return rv;
}

SparseMat positive_element_matrix(const LieAlgebraTable& L, const RootVectorMatrices& rv, const Vec& x) {
  const std::size_t n = rv.e.empty() ? 0 : rv.e.front().rows();
  SparseMat out(n, n);
  for (std::size_t a = 0; a < L.dim(); ++a) {
    if (sgn(x[a]) == 0) continue;
    if (a < L.e_index(0) || a >= L.f_index(0))
      throw InvalidArgument("positive_element_matrix: element has components outside n+");
    out = out + rv.e[a - L.rank()].scaled(x[a]);
  }
  return out;
}

bool casimir_scalar_holds(const LieAlgebraTable& L, const WeightModule& m) {
  const auto& d = L.datum();
  const std::size_t r = d.rank();
  // (h_i, h_j) = (alpha_i, alpha_j) / (d_i d_j)
  Mat b(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) b(i, j) = d.gram()(i, j) / (d.simple_half_norm(i) * d.simple_half_norm(j));
  const Mat binv = inverse(b);
  const auto rv = root_vector_matrices(L, m);
  SparseMat omega(m.dim, m.dim);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (sgn(binv(i, j)) != 0) omega = omega + (m.h[i] * m.h[j]).scaled(binv(i, j));
  for (std::size_t k = 0; k < L.num_positive(); ++k) {
    const Rat& dk = d.positive_roots()[k].half_norm;
    omega = omega + (rv.e[k] * rv.f[k] + rv.f[k] * rv.e[k]).scaled(dk);
  }
  Weight shifted = m.highest;
  for (auto& x : shifted) x += 2;
  return omega == SparseMat::identity(m.dim).scaled(d.form(m.highest, shifted));
}

// ---------------------------------------------------------------- principal triple

PrincipalTriple principal_triple(const LieAlgebraTable& L) {
  PrincipalTriple t{Vec(L.dim()), Vec(L.dim()), Vec(L.dim())};
  const auto& k = L.datum().two_rho_check();
  for (std::size_t i = 0; i < L.rank(); ++i) {
    t.e[L.e_index(i)] = 1;
    t.h[L.h_index(i)] = k[i];
    t.f[L.f_index(i)] = k[i];
  }
  if (!triple_relations_hold(L, t)) throw InternalFailure("principal triple relations fail");
  return t;
}

bool triple_relations_hold(const LieAlgebraTable& L, const PrincipalTriple& t) {
  if (L.bracket(t.h, t.e) != scaled(t.e, 2)) return false;
  if (L.bracket(t.h, t.f) != scaled(t.f, -2)) return false;
  if (L.bracket(t.e, t.f) != t.h) return false;
  // alpha_i(h) = 2: [h, e_i] = 2 e_i for every simple root vector
  for (std::size_t i = 0; i < L.rank(); ++i)
    if (L.bracket(t.h, L.basis_vector(L.e_index(i))) != scaled(L.basis_vector(L.e_index(i)), 2)) return false;
  return true;
}

Centralizer centralizer(const LieAlgebraTable& L, const Vec& x) {
  Centralizer out;
  const Mat adx = L.ad(x);
  std::optional<long> deg;
  bool homogeneous = !is_zero(x);
  for (std::size_t a = 0; a < L.dim() && homogeneous; ++a) {
    if (sgn(x[a]) == 0) continue;
    if (deg && *deg != L.degree(a)) homogeneous = false;
    deg = L.degree(a);
  }
  if (homogeneous) {
    std::vector<long> degs;
    for (std::size_t a = 0; a < L.dim(); ++a) degs.push_back(L.degree(a));
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    std::vector<long> found;
    for (long dg : degs) {
      std::vector<std::size_t> cols;
      for (std::size_t a = 0; a < L.dim(); ++a)
        if (L.degree(a) == dg) cols.push_back(a);
      Mat sub(L.dim(), cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t row = 0; row < L.dim(); ++row) sub(row, c) = adx(row, cols[c]);
      for (const auto& kv : rank_kernel(sub).kernel_basis) {
        Vec v(L.dim());
        for (std::size_t c = 0; c < cols.size(); ++c) v[cols[c]] = kv[c];
        out.basis.push_back(std::move(v));
        found.push_back(dg);
      }
    }
    out.degrees = found;
    for (long dg : found) out.exponents.push_back(dg / 2);
    std::sort(out.exponents.begin(), out.exponents.end());
  } else {
    out.basis = rank_kernel(adx).kernel_basis;
  }
  out.abelian = true;
  for (std::size_t i = 0; i < out.basis.size() && out.abelian; ++i)
    for (std::size_t j = i + 1; j < out.basis.size(); ++j)
      if (!is_zero(L.bracket(out.basis[i], out.basis[j]))) {
        out.abelian = false;
        break;
      }
  return out;
}

Vec cartan_element(const LieAlgebraTable& L, const std::vector<long>& t) {
  Vec v(L.dim());
  for (std::size_t i = 0; i < L.rank(); ++i) v[L.h_index(i)] = t[i];
  return v;
}

Mat exp_ad(const LieAlgebraTable& L, const Vec& x, const Rat& t) {
  const Mat a = t * L.ad(x);
  Mat result = Mat::identity(L.dim());
  Mat term = Mat::identity(L.dim());
  for (unsigned k = 1; k <= L.dim(); ++k) {
    term = Rat(1, k) * (a * term);
    if (term.is_zero()) return result;
    result = result + term;
  }
  throw InvalidArgument("exp_ad: ad x is not nilpotent");
}

CartanConjugation conjugate_to_cartan(const LieAlgebraTable& L, const PrincipalTriple& triple) {
  Vec eh = triple.e;
  for (std::size_t a = 0; a < L.dim(); ++a) eh[a] += triple.h[a];
  const Centralizer c = centralizer(L, eh);
  if (c.basis.size() != L.rank() || !c.abelian) throw InternalFailure("g^{e+h} is not abelian of dimension rank");

  CartanConjugation out;
  long max_deg = 0;
  for (std::size_t a = 0; a < L.dim(); ++a) max_deg = std::max(max_deg, L.degree(a));
  for (long k = 0; 2 * k <= max_deg; ++k) {
    // g^{e+h} vectors with no components of degree > 2k
    std::vector<Vec> rows;
    for (std::size_t a = 0; a < L.dim(); ++a)
      if (L.degree(a) > 2 * k) {
        Vec row(c.basis.size());
        for (std::size_t j = 0; j < c.basis.size(); ++j) row[j] = c.basis[j][a];
        rows.push_back(std::move(row));
      }
    const std::size_t rk = rows.empty() ? 0 : rank(Mat::from_rows(rows, c.basis.size()));
    out.transported_dims.push_back(c.basis.size() - rk);
    if (out.transported_dims.back() == c.basis.size()) break;
  }

  for (const Rat& t : {Rat(1), Rat(1, 2), Rat(-1), Rat(-1, 2)}) {
    const Mat u = exp_ad(L, triple.e, t);
    std::vector<Vec> images;
    bool inside = true;
    for (const auto& v : c.basis) {
      Vec img = u.apply(v);
      for (std::size_t a = L.rank(); a < L.dim() && inside; ++a)
        if (sgn(img[a]) != 0) inside = false;
      images.push_back(std::move(img));
    }
    if (!inside || rank(Mat::from_rows(images, L.dim())) != L.rank()) continue;
    out.t = t;
    out.images = std::move(images);
    return out;
  }
  throw InternalFailure("no t in {1, 1/2, -1, -1/2} conjugates g^{e+h} into h");
}

}  // namespace liecheck
