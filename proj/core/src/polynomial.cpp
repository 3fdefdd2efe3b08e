#include "liecheck/polynomial.hpp"

#include "liecheck/errors.hpp"

#include <numeric>

namespace liecheck {

std::size_t total_degree(const Exponents& a) { return std::accumulate(a.begin(), a.end(), std::size_t{0}); }

namespace {

void weighted_rec(const std::vector<std::size_t>& w, std::size_t j, std::size_t left, Exponents& cur,
                  std::vector<Exponents>& out) {
  if (j + 1 == w.size()) {
    if (left % w[j] == 0) {
      cur[j] = static_cast<std::uint16_t>(left / w[j]);
      out.push_back(cur);
    }
    return;
  }
  for (std::size_t a = left / w[j] + 1; a-- > 0;) {
    cur[j] = static_cast<std::uint16_t>(a);
    weighted_rec(w, j + 1, left - a * w[j], cur, out);
  }
  cur[j] = 0;
}

}  // namespace

std::vector<Exponents> weighted_monomials(const std::vector<std::size_t>& weights, std::size_t degree) {
  std::vector<Exponents> out;
  if (weights.empty()) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  for (auto w : weights)
    if (w == 0) throw InvalidArgument("weighted_monomials: weights must be positive");
  Exponents cur(weights.size(), 0);
  weighted_rec(weights, 0, degree, cur, out);
  return out;
}

std::vector<Exponents> monomials_of_degree(std::size_t nvars, std::size_t degree) {
  return weighted_monomials(std::vector<std::size_t>(nvars, 1), degree);
}

Polynomial Polynomial::constant(std::size_t nvars, const Rat& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Exponents a(nvars, 0);
  a[i] = 1;
  return monomial(std::move(a));
}

Polynomial Polynomial::monomial(Exponents a, const Rat& c) {
  Polynomial p(a.size());
  p.add_term(a, c);
  return p;
}

std::size_t Polynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [a, c] : terms_) d = std::max(d, total_degree(a));
  return d;
}

Rat Polynomial::coeff(const Exponents& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Exponents& a, const Rat& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial Polynomial::scaled(const Rat& s) const {
  Polynomial out(nvars_);
  if (sgn(s) == 0) return out;
  out.terms_ = terms_;
  for (auto& [a, c] : out.terms_) c *= s;
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial out = constant(nvars_, 1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

Rat Polynomial::evaluate(const Vec& point) const {
  Rat s = 0;
  for (const auto& [a, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (unsigned k = 0; k < a[i]; ++k) t *= point[i];
    s += t;
  }
  return s;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  Polynomial out(nvars_);
  for (const auto& [a, c] : terms_) {
    if (a[i] == 0) continue;
    Exponents b = a;
    --b[i];
    out.add_term(b, c * a[i]);
  }
  return out;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars_) throw InvalidArgument("substitute: wrong number of images");
  const std::size_t m = images.empty() ? 0 : images.front().nvars();
  // powers[i][k] = images[i]^k, filled lazily
  std::vector<std::vector<Polynomial>> powers(nvars_);
  auto power = [&](std::size_t i, unsigned k) -> const Polynomial& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(constant(m, 1));
    while (pw.size() <= k) pw.push_back(pw.back() * images[i]);
    return pw[k];
  };
  Polynomial out(m);
  for (const auto& [a, c] : terms_) {
    Polynomial t = constant(m, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (a[i] > 0) t = t * power(i, a[i]);
    out += t;
  }
  return out;
}

Polynomial Polynomial::linear_substitute(const Mat& m) const {
  std::vector<Polynomial> images;
  images.reserve(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    Polynomial p(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) p.add_term(unit_exponents(m.cols(), j), m(i, j));
    images.push_back(std::move(p));
  }
  return substitute(images);
}

Polynomial Polynomial::apply_derivation(const std::vector<Polynomial>& images) const {
  Polynomial out(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (images[i].is_zero()) continue;
    Polynomial d = derivative(i);
    if (!d.is_zero()) out += d * images[i];
  }
  return out;
}

Vec Polynomial::coordinates(const std::map<Exponents, std::size_t>& index) const {
  Vec v(index.size());
  for (const auto& [a, c] : terms_) {
    auto it = index.find(a);
    if (it == index.end()) throw InvalidArgument("coordinates: monomial outside the given basis");
    v[it->second] = c;
  }
  return v;
}

Exponents unit_exponents(std::size_t nvars, std::size_t i) {
  Exponents a(nvars, 0);
  a[i] = 1;
  return a;
}

}  // namespace liecheck
