#include "liecheck/linalg.hpp"

#include "liecheck/errors.hpp"

#include <algorithm>

namespace liecheck {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; });
}

void axpy(Vec& y, const Rat& a, const Vec& x) {
  if (sgn(a) == 0) return;
  Rat t;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    t = a * x[i];
    y[i] += t;
  }
}

Rat dot(const Vec& a, const Vec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

Vec scaled(const Vec& v, const Rat& a) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out[i] = a * v[i];
  return out;
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

void make_primitive(Vec& v) {
  Int den = 1;
  Int num = 0;
  const Rat* lead = nullptr;
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    if (!lead) lead = &x;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
  }
  if (!lead) return;
  Rat factor(den, num);
  factor.canonicalize();
  if (sgn(*lead) < 0) factor = -factor;
  for (auto& x : v)
    if (sgn(x) != 0) x *= factor;
}

// ---------------------------------------------------------------- Mat

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Mat m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

Vec Mat::row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vec Mat::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vec Mat::apply(const Vec& v) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0 && sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return sgn(x) == 0; });
}

Mat operator*(const Mat& a, const Mat& b) {
  Mat out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += x * b(k, j);
    }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  Mat out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Mat operator*(const Rat& s, const Mat& m) {
  Mat out = m;
  for (auto& x : out.data_) x *= s;
  return out;
}

std::vector<std::size_t> row_reduce(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Rat t;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) swap(m(p, j), m(r, j));
    const Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) {
          t = f * m(r, j);
          m(i, j) -= t;
        }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RankKernel rank_kernel(const Mat& m) {
  Mat r = m;
  const auto pivots = row_reduce(r);
  RankKernel out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const Mat& m) {
  Mat r = m;
  return row_reduce(r).size();
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

Mat inverse(const Mat& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InvalidArgument("inverse: matrix is not square");
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw InternalFailure("inverse: matrix is singular");
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Rat determinant(Mat m) {
  const std::size_t n = m.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      const Rat f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

// ---------------------------------------------------------------- SparseMat

SparseMat::SparseMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

SparseMat SparseMat::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets) {
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  SparseMat m(rows, cols);
  for (std::size_t i = 0; i < triplets.size();) {
    const auto& t = triplets[i];
    if (t.row >= rows || t.col >= cols) throw InvalidArgument("SparseMat: triplet out of range");
    Rat v = t.value;
    std::size_t j = i + 1;
    while (j < triplets.size() && triplets[j].row == t.row && triplets[j].col == t.col) v += triplets[j++].value;
    if (sgn(v) != 0) m.columns_[t.col].emplace_back(static_cast<std::uint32_t>(t.row), std::move(v));
    i = j;
  }
  return m;
}

SparseMat SparseMat::identity(std::size_t n) {
  SparseMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].emplace_back(static_cast<std::uint32_t>(i), Rat(1));
  return m;
}

SparseMat SparseMat::from_dense(const Mat& d) {
  SparseMat m(d.rows(), d.cols());
  for (std::size_t c = 0; c < d.cols(); ++c)
    for (std::size_t r = 0; r < d.rows(); ++r)
      if (sgn(d(r, c)) != 0) m.columns_[c].emplace_back(static_cast<std::uint32_t>(r), d(r, c));
  return m;
}

std::size_t SparseMat::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

Rat SparseMat::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) return it->second;
  return 0;
}

Vec SparseMat::apply(const Vec& v) const {
  Vec out(rows_);
  Rat t;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(v[c]) == 0) continue;
    for (const auto& [r, x] : columns_[c]) {
      t = x * v[c];
      out[r] += t;
    }
  }
  return out;
}

Mat SparseMat::to_dense() const {
  Mat m(rows_, cols_);
  for_each([&](std::size_t r, std::size_t c, const Rat& v) { m(r, c) = v; });
  return m;
}

bool SparseMat::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

SparseMat SparseMat::operator*(const SparseMat& other) const {
  if (cols_ != other.rows_) throw InvalidArgument("SparseMat: dimension mismatch in product");
  SparseMat out(rows_, other.cols_);
  std::vector<Rat> acc(rows_);
  std::vector<char> touched(rows_, 0);
  std::vector<std::uint32_t> rows_hit;
  Rat t;
  for (std::size_t j = 0; j < other.cols_; ++j) {
    rows_hit.clear();
    for (const auto& [k, b] : other.columns_[j]) {
      for (const auto& [i, a] : columns_[k]) {
        t = a * b;
        acc[i] += t;
        if (!touched[i]) {
          touched[i] = 1;
          rows_hit.push_back(i);
        }
      }
    }
    std::sort(rows_hit.begin(), rows_hit.end());
    auto& col = out.columns_[j];
    for (auto i : rows_hit) {
      if (sgn(acc[i]) != 0) col.emplace_back(i, acc[i]);
      acc[i] = 0;
      touched[i] = 0;
    }
  }
  return out;
}

namespace {

SparseMat combine(const SparseMat& a, const SparseMat& b, int sign) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("SparseMat: dimension mismatch in sum");
  std::vector<SparseMat::Triplet> trip;
  trip.reserve(a.nonzeros() + b.nonzeros());
  a.for_each([&](std::size_t r, std::size_t c, const Rat& v) { trip.push_back({r, c, v}); });
  b.for_each([&](std::size_t r, std::size_t c, const Rat& v) { trip.push_back({r, c, sign > 0 ? Rat(v) : Rat(-v)}); });
  return SparseMat::from_triplets(a.rows(), a.cols(), std::move(trip));
}

}  // namespace

SparseMat SparseMat::operator+(const SparseMat& other) const { return combine(*this, other, +1); }
SparseMat SparseMat::operator-(const SparseMat& other) const { return combine(*this, other, -1); }

SparseMat SparseMat::scaled(const Rat& s) const {
  if (sgn(s) == 0) return SparseMat(rows_, cols_);
  SparseMat out = *this;
  for (auto& col : out.columns_)
    for (auto& e : col) e.second *= s;
  return out;
}

SparseMat commutator(const SparseMat& a, const SparseMat& b) { return a * b - b * a; }

// ---------------------------------------------------------------- EchelonBasis

Vec EchelonBasis::reduce(Vec v) const {
  Rat t;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (sgn(v[p]) == 0) continue;
    const Rat f = v[p];
    const Vec& row = rows_[k];
    for (std::size_t j = p; j < ambient_; ++j) {
      if (sgn(row[j]) == 0) continue;
      t = f * row[j];
      v[j] -= t;
    }
  }
  return v;
}

bool EchelonBasis::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool EchelonBasis::insert(Vec v) {
  if (v.size() != ambient_) throw InvalidArgument("EchelonBasis: vector has wrong length");
  if (full()) return false;
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < ambient_ && sgn(v[p]) == 0) ++p;
  if (p == ambient_) return false;
  const Rat inv = 1 / v[p];
  for (std::size_t j = p; j < ambient_; ++j)
    if (sgn(v[j]) != 0) v[j] *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

// ---------------------------------------------------------------- FilteredSpan

bool FilteredSpan::add(Vec v, std::size_t degree) {
  if (last_degree_ && degree < *last_degree_) throw InvalidArgument("FilteredSpan: degrees must be nondecreasing");
  last_degree_ = degree;
  if (!basis_.insert(std::move(v))) return false;
  if (jumps_.size() <= degree) jumps_.resize(degree + 1, 0);
  ++jumps_[degree];
  return true;
}

GradedSeries FilteredSpan::series() const {
  std::vector<Int> c;
  c.reserve(jumps_.size());
  for (auto j : jumps_) c.emplace_back(static_cast<unsigned long>(j));
  return GradedSeries(std::move(c));
}

GradedSeries filtered_span_dims(std::vector<std::pair<Vec, std::size_t>> vectors) {
  if (vectors.empty()) return {};
  std::stable_sort(vectors.begin(), vectors.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  FilteredSpan span(vectors.front().first.size());
  for (auto& [v, d] : vectors) span.add(std::move(v), d);
  return span.series();
}

}  // namespace liecheck
