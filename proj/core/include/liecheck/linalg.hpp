#pragma once

// Exact dense and sparse linear algebra over Q.

#include "liecheck/graded_series.hpp"
#include "liecheck/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace liecheck {

using Vec = std::vector<Rat>;

bool is_zero(const Vec& v);
/// y += a * x
void axpy(Vec& y, const Rat& a, const Vec& x);
Rat dot(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, const Rat& a);
Vec unit_vector(std::size_t n, std::size_t i);
/// Scales v to a primitive integer vector with positive leading entry.
void make_primitive(Vec& v);

/// Dense row-major matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  Vec apply(const Vec& v) const;
  Mat transpose() const;
  bool is_zero() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Rat& s, const Mat& m);
  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Brings m to reduced row echelon form in place and returns the pivot columns.
std::vector<std::size_t> row_reduce(Mat& m);

struct RankKernel {
  std::size_t rank = 0;
  std::vector<Vec> kernel_basis;
};

RankKernel rank_kernel(const Mat& m);
std::size_t rank(const Mat& m);

/// Some solution of a x = b, if one exists.
std::optional<Vec> solve(const Mat& a, const Vec& b);
/// Throws InternalFailure if m is singular.
Mat inverse(const Mat& m);
Rat determinant(Mat m);

/// Column-compressed sparse matrix; no explicit zeros are stored.
class SparseMat {
 public:
  using Entry = std::pair<std::uint32_t, Rat>;

  SparseMat() = default;
  SparseMat(std::size_t rows, std::size_t cols);

  struct Triplet {
    std::size_t row;
    std::size_t col;
    Rat value;
  };
  /// Duplicate positions are summed.
  static SparseMat from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);
  static SparseMat identity(std::size_t n);
  static SparseMat from_dense(const Mat& m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const;
  const std::vector<Entry>& column(std::size_t c) const { return columns_[c]; }
  Rat at(std::size_t r, std::size_t c) const;

  Vec apply(const Vec& v) const;
  Mat to_dense() const;
  bool is_zero() const;

  SparseMat operator*(const SparseMat& other) const;
  SparseMat operator+(const SparseMat& other) const;
  SparseMat operator-(const SparseMat& other) const;
  SparseMat scaled(const Rat& s) const;
  friend bool operator==(const SparseMat& a, const SparseMat& b) = default;

  /// Visits every stored entry as (row, col, value).
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t c = 0; c < cols_; ++c)
      for (const auto& [r, v] : columns_[c]) f(static_cast<std::size_t>(r), c, v);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

SparseMat commutator(const SparseMat& a, const SparseMat& b);

/// Incrementally maintained row echelon basis of a subspace of Q^n.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == ambient_; }

  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  /// Adds v to the span; returns false when v was already in it.
  bool insert(Vec v);
  const std::vector<Vec>& rows() const noexcept { return rows_; }

 private:
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Tracks dim span{v : deg(v) <= d} as vectors arrive in nondecreasing degree.
class FilteredSpan {
 public:
  explicit FilteredSpan(std::size_t ambient) : basis_(ambient) {}

  /// Throws InvalidArgument if degrees decrease.
  bool add(Vec v, std::size_t degree);
  std::size_t rank() const noexcept { return basis_.rank(); }
  bool full() const noexcept { return basis_.full(); }
  /// Coefficient d = number of new dimensions contributed at degree d.
  GradedSeries series() const;
  const EchelonBasis& basis() const noexcept { return basis_; }

 private:
  EchelonBasis basis_;
  std::vector<std::size_t> jumps_;
  std::optional<std::size_t> last_degree_;
};

GradedSeries filtered_span_dims(std::vector<std::pair<Vec, std::size_t>> vectors);

}  // namespace liecheck
