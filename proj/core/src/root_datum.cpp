#include "liecheck/root_datum.hpp"

#include "liecheck/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>

namespace liecheck {

std::string format_weight(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

Weight parse_weight(std::string_view text, std::size_t rank) {
  Weight w;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view part = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (!part.empty() && part.front() == '+') part.remove_prefix(1);
    long v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
      throw ParseError("bad weight coordinate '" + std::string(part) + "' in \"" + std::string(text) + "\"");
    w.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (w.size() != rank)
    throw ParseError("weight \"" + std::string(text) + "\" has " + std::to_string(w.size()) +
                     " coordinates, expected " + std::to_string(rank));
  return w;
}

std::string CartanType::label() const { return std::string(1, family) + std::to_string(rank); }

CartanType parse_type(std::string_view text) {
  if (text.size() < 2) throw ParseError("bad type label \"" + std::string(text) + "\"");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  unsigned r = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), r);
  if (ec != std::errc() || ptr != text.data() + text.size() || std::string_view("ABCDEFG").find(f) == std::string_view::npos)
    throw ParseError("bad type label \"" + std::string(text) + "\"");
  const CartanType t{f, r};
  bool ok = false;
  switch (f) {
    case 'A': ok = r >= 1 && r <= 4; break;
    case 'B': ok = r >= 2 && r <= 4; break;
    case 'C': ok = r >= 2 && r <= 4; break;
    case 'D': ok = r == 4; break;
    case 'F': ok = r == 4; break;
    case 'G': ok = r == 2; break;
    default: ok = false;
  }
  if (!ok) throw UnsupportedType("unsupported type " + t.label() + " (supported: A1-A4, B2-B4, C2-C4, D4, F4, G2)");
  return t;
}

// ---------------------------------------------------------------- WeylGroup

WeylGroup::WeylGroup(const std::vector<std::vector<long>>& cartan) : rank_(cartan.size()) {
  const std::size_t r = rank_;
  // s_i on fundamental coordinates: mu -> mu - mu_i alpha_i, alpha_i = column i of A
  std::vector<std::vector<long>> simple(r, std::vector<long>(r * r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) simple[i][a * r + b] = (a == b ? 1 : 0) - (b == i ? cartan[a][i] : 0);

  auto multiply = [r](const std::vector<long>& x, const std::vector<long>& y) {
    std::vector<long> z(r * r, 0);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t k = 0; k < r; ++k)
        if (x[a * r + k] != 0)
          for (std::size_t b = 0; b < r; ++b) z[a * r + b] += x[a * r + k] * y[k * r + b];
    return z;
  };
  // w is identified by w(rho), rho regular
  auto key = [r](const std::vector<long>& m) {
    std::vector<long> k(r, 0);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) k[a] += m[a * r + b];
    return k;
  };

  std::map<std::vector<long>, std::size_t> index;
  std::vector<long> id(r * r, 0);
  for (std::size_t a = 0; a < r; ++a) id[a * r + a] = 1;
  matrices_.push_back(id);
  lengths_.push_back(0);
  index[key(id)] = 0;
  std::vector<std::vector<std::size_t>> right;
  for (std::size_t w = 0; w < matrices_.size(); ++w) {
    right.emplace_back(r);
    for (std::size_t i = 0; i < r; ++i) {
      auto m = multiply(matrices_[w], simple[i]);
      auto k = key(m);
      auto it = index.find(k);
      if (it == index.end()) {
        it = index.emplace(k, matrices_.size()).first;
        matrices_.push_back(std::move(m));
        lengths_.push_back(lengths_[w] + 1);
      }
      right[w][i] = it->second;
    }
  }
  right_.reserve(order() * r);
  for (const auto& row : right) right_.insert(right_.end(), row.begin(), row.end());
}

Mat WeylGroup::rational_matrix(std::size_t w) const {
  Mat m(rank_, rank_);
  for (std::size_t a = 0; a < rank_; ++a)
    for (std::size_t b = 0; b < rank_; ++b) m(a, b) = matrices_[w][a * rank_ + b];
  return m;
}

Weight WeylGroup::act(std::size_t w, const Weight& mu) const {
  Weight out(rank_, 0);
  const auto& m = matrices_[w];
  for (std::size_t a = 0; a < rank_; ++a)
    for (std::size_t b = 0; b < rank_; ++b) out[a] += m[a * rank_ + b] * mu[b];
  return out;
}

// ---------------------------------------------------------------- RootDatum

namespace {

Mat symmetric_gram(const CartanType& t) {
  const std::size_t n = t.rank;
  Mat g(n, n);
  auto link = [&g](std::size_t i, std::size_t j, const Rat& v) {
    g(i, j) = v;
    g(j, i) = v;
  };
  switch (t.family) {
    case 'A':
      for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (std::size_t i = 0; i < n; ++i) g(i, i) = i + 1 < n ? 2 : 1;
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'C':
      for (std::size_t i = 0; i < n; ++i) g(i, i) = i + 1 < n ? 1 : 2;
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, i + 2 < n ? Rat(-1, 2) : Rat(-1));
      break;
    case 'D':
      for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'F':
      g(0, 0) = 2;
      g(1, 1) = 2;
      g(2, 2) = 1;
      g(3, 3) = 1;
      link(0, 1, -1);
      link(1, 2, -1);
      link(2, 3, Rat(-1, 2));
      break;
    case 'G':
      g(0, 0) = Rat(2, 3);
      g(1, 1) = 2;
      link(0, 1, -1);
      break;
    default:
      throw UnsupportedType("unsupported type " + t.label());
  }
  return g;
}

long to_long(const Rat& x) {
  if (!is_integer(x)) throw InternalFailure("expected an integer, got " + to_string(x));
  return x.get_num().get_si();
}

}  // namespace

RootDatum RootDatum::build(CartanType type) {
  parse_type(type.label());  // validates
  RootDatum d;
  d.type_ = type;
  const std::size_t r = d.rank_ = type.rank;
  d.gram_ = symmetric_gram(type);
  d.half_norms_.resize(r);
  for (std::size_t i = 0; i < r; ++i) d.half_norms_[i] = d.gram_(i, i) / 2;
  d.cartan_.assign(r, std::vector<long>(r));
  Mat a(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      d.cartan_[i][j] = to_long(2 * d.gram_(i, j) / d.gram_(i, i));
      a(i, j) = d.cartan_[i][j];
    }
  d.cartan_inverse_ = inverse(a);

  // 2 rho-check: A^T k = 2
  Vec twos(r, Rat(2));
  auto k = solve(a.transpose(), twos);
  if (!k) throw InternalFailure("singular Cartan matrix");
  d.two_rho_check_.resize(r);
  for (std::size_t i = 0; i < r; ++i) d.two_rho_check_[i] = to_long((*k)[i]);

  // positive roots by root strings, processed in order of height
  std::vector<std::vector<long>> roots;
  std::set<std::vector<long>> known;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<long> c(r, 0);
    c[i] = 1;
    roots.push_back(c);
    known.insert(c);
  }
  for (std::size_t idx = 0; idx < roots.size(); ++idx) {
    const auto beta = roots[idx];
    for (std::size_t i = 0; i < r; ++i) {
      long pairing = 0;  // <beta, alpha_i-check>
      for (std::size_t j = 0; j < r; ++j) pairing += beta[j] * d.cartan_[i][j];
      long p = 0;
      auto down = beta;
      while (true) {
        --down[i];
        if (down[i] < 0 || !known.count(down)) break;
        ++p;
      }
      if (p - pairing > 0) {
        auto up = beta;
        ++up[i];
        if (known.insert(up).second) roots.push_back(up);
      }
    }
  }
  auto height = [](const std::vector<long>& c) {
    long h = 0;
    for (auto x : c) h += x;
    return h;
  };
  std::sort(roots.begin(), roots.end(), [&](const auto& x, const auto& y) {
    const long hx = height(x), hy = height(y);
    return hx != hy ? hx < hy : x > y;
  });
  for (const auto& c : roots) {
    PositiveRoot pr;
    pr.simple = c;
    pr.weight = d.from_simple(c);
    pr.height = height(c);
    Rat n = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) n += c[i] * c[j] * d.gram_(i, j);
    pr.half_norm = n / 2;
    d.root_lookup_[c] = d.roots_.size();
    d.roots_.push_back(std::move(pr));
  }
  d.weyl_ = WeylGroup(d.cartan_);
  return d;
}

std::optional<std::size_t> RootDatum::root_index(const std::vector<long>& simple) const {
  auto it = root_lookup_.find(simple);
  if (it == root_lookup_.end()) return std::nullopt;
  return it->second;
}

Weight RootDatum::simple_root(std::size_t i) const {
  Weight w(rank_);
  for (std::size_t a = 0; a < rank_; ++a) w[a] = cartan_[a][i];
  return w;
}

Weight RootDatum::fundamental(std::size_t i) const {
  Weight w(rank_, 0);
  w[i] = 1;
  return w;
}

Vec RootDatum::simple_coordinates(const Weight& mu) const {
  Vec c(rank_);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      if (mu[j] != 0) c[i] += cartan_inverse_(i, j) * mu[j];
  return c;
}

std::optional<std::vector<long>> RootDatum::root_lattice_coordinates(const Weight& mu) const {
  const Vec c = simple_coordinates(mu);
  std::vector<long> out(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (!is_integer(c[i])) return std::nullopt;
    out[i] = c[i].get_num().get_si();
  }
  return out;
}

Weight RootDatum::from_simple(const std::vector<long>& c) const {
  Weight w(rank_, 0);
  for (std::size_t a = 0; a < rank_; ++a)
    for (std::size_t j = 0; j < rank_; ++j) w[a] += cartan_[a][j] * c[j];
  return w;
}

Rat RootDatum::form(const Weight& a, const Weight& b) const {
  const Vec c = simple_coordinates(b);
  Rat s = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    if (a[i] != 0) s += a[i] * half_norms_[i] * c[i];
  return s;
}

long RootDatum::coroot_pairing(const Weight& mu, std::size_t k) const {
  const auto& beta = roots_[k];
  Rat s = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    if (mu[i] != 0 && beta.simple[i] != 0) s += mu[i] * half_norms_[i] * beta.simple[i];
  return to_long(s / beta.half_norm);
}

long RootDatum::h_eigenvalue(const Weight& mu) const {
  long s = 0;
  for (std::size_t i = 0; i < rank_; ++i) s += two_rho_check_[i] * mu[i];
  return s;
}

Weight RootDatum::reflect(const Weight& mu, std::size_t i) const {
  Weight out = mu;
  const long m = mu[i];
  if (m != 0)
    for (std::size_t a = 0; a < rank_; ++a) out[a] -= m * cartan_[a][i];
  return out;
}

bool RootDatum::is_dominant(const Weight& mu) {
  return std::all_of(mu.begin(), mu.end(), [](long x) { return x >= 0; });
}

std::pair<Weight, std::size_t> RootDatum::dominant_conjugate(const Weight& mu) const {
  Weight w = mu;
  std::size_t steps = 0;
  while (true) {
    std::size_t i = 0;
    while (i < rank_ && w[i] >= 0) ++i;
    if (i == rank_) return {w, steps};
    w = reflect(w, i);
    ++steps;
  }
}

Weight RootDatum::antidominant_conjugate(const Weight& mu) const {
  Weight neg = mu;
  for (auto& x : neg) x = -x;
  Weight d = dominant_conjugate(neg).first;
  for (auto& x : d) x = -x;
  return d;
}

// ---------------------------------------------------------------- free functions

std::vector<Weight> weyl_orbit(const RootDatum& d, const Weight& mu) {
  std::set<Weight> seen{mu};
  std::deque<Weight> queue{mu};
  while (!queue.empty()) {
    Weight w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < d.rank(); ++i) {
      if (w[i] == 0) continue;
      Weight s = d.reflect(w, i);
      if (seen.insert(s).second) queue.push_back(std::move(s));
    }
  }
  return {seen.begin(), seen.end()};
}

std::size_t stabilizer_order(const RootDatum& d, const Weight& mu) {
  return d.weyl().order() / weyl_orbit(d, mu).size();
}

std::vector<std::size_t> stabilizer_generators(const Weight& dominant_mu) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dominant_mu.size(); ++i)
    if (dominant_mu[i] == 0) out.push_back(i);
  return out;
}

GradedSeries length_gen_function(const RootDatum& d, const std::vector<std::size_t>& parabolic) {
  const auto& w = d.weyl();
  for (auto j : parabolic)
    if (j >= d.rank()) throw InvalidArgument("length_gen_function: generator index out of range");
  std::vector<Int> c;
  for (std::size_t x = 0; x < w.order(); ++x) {
    bool minimal = true;
    for (auto j : parabolic)
      if (w.length(w.times_simple(x, j)) < w.length(x)) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    if (c.size() <= w.length(x)) c.resize(w.length(x) + 1);
    ++c[w.length(x)];
  }
  return GradedSeries(std::move(c));
}

bool is_minuscule(const RootDatum& d, const Weight& mu) {
  if (!RootDatum::is_dominant(mu)) throw InvalidArgument("is_minuscule: weight " + format_weight(mu) + " is not dominant");
  if (std::all_of(mu.begin(), mu.end(), [](long x) { return x == 0; }))
    throw InvalidArgument("is_minuscule: zero weight (callers handle 'minuscule or zero' explicitly)");
  for (std::size_t k = 0; k < d.num_positive_roots(); ++k)
    if (d.coroot_pairing(mu, k) > 1) return false;
  return true;
}

Weight minuscule_representative(const RootDatum& d, const Weight& mu) {
  Weight zero(d.rank(), 0);
  std::vector<Weight> candidates{zero};
  for (std::size_t i = 0; i < d.rank(); ++i)
    if (is_minuscule(d, d.fundamental(i))) candidates.push_back(d.fundamental(i));
  for (const auto& c : candidates) {
    Weight diff = mu;
    for (std::size_t i = 0; i < d.rank(); ++i) diff[i] -= c[i];
    if (d.in_root_lattice(diff)) return c;
  }
  throw InternalFailure("no minuscule-or-zero weight in the coset of " + format_weight(mu));
}

KostantPartition::KostantPartition(const RootDatum& d) {
  for (const auto& r : d.positive_roots()) roots_.push_back(r.simple);
}

Int KostantPartition::operator()(const std::vector<long>& beta) {
  for (auto x : beta)
    if (x < 0) return 0;
  return count(beta, roots_.size());
}

// ways to write beta with the first k positive roots
Int KostantPartition::count(const std::vector<long>& beta, std::size_t k) {
  if (std::all_of(beta.begin(), beta.end(), [](long x) { return x == 0; })) return 1;
  if (k == 0) return 0;
  auto key = std::make_pair(beta, k);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  Int total = 0;
  const auto& root = roots_[k - 1];
  std::vector<long> rest = beta;
  while (true) {
    total += count(rest, k - 1);
    bool ok = true;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      rest[i] -= root[i];
      if (rest[i] < 0) ok = false;
    }
    if (!ok) break;
  }
  memo_.emplace(std::move(key), total);
  return total;
}

Int kostant_partition(const RootDatum& d, const std::vector<long>& beta) {
  KostantPartition p(d);
  return p(beta);
}

bool dominance_leq(const RootDatum& d, const Weight& mu, const Weight& lambda) {
  Weight diff = lambda;
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= mu[i];
  auto c = d.root_lattice_coordinates(diff);
  return c && std::all_of(c->begin(), c->end(), [](long x) { return x >= 0; });
}

std::vector<Weight> dominant_weights_below(const RootDatum& d, const Weight& lambda) {
  // a dominant mu has nonnegative simple coordinates, so lambda - mu = sum c_i alpha_i
  // has c_i bounded by the simple coordinates of lambda
  const Vec top = d.simple_coordinates(lambda);
  const std::size_t r = d.rank();
  std::vector<long> bound(r);
  for (std::size_t i = 0; i < r; ++i) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), top[i].get_num_mpz_t(), top[i].get_den_mpz_t());
    bound[i] = f.get_si();
  }
  std::vector<std::pair<long, Weight>> found;
  std::vector<long> c(r, 0);
  while (true) {
    Weight mu = lambda;
    long depth = 0;
    for (std::size_t j = 0; j < r; ++j) {
      depth += c[j];
      for (std::size_t a = 0; a < r; ++a) mu[a] -= d.cartan(a, j) * c[j];
    }
    if (RootDatum::is_dominant(mu)) found.emplace_back(depth, std::move(mu));
    std::size_t i = 0;
    while (i < r && c[i] == bound[i]) c[i++] = 0;
    if (i == r) break;
    ++c[i];
  }
  std::sort(found.begin(), found.end());
  std::vector<Weight> out;
  out.reserve(found.size());
  for (auto& [depth, mu] : found) out.push_back(std::move(mu));
  return out;
}

}  // namespace liecheck
