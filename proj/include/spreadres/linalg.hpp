#pragma once

// Dense linear algebra over a prime field GF(p).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spreadres {

using Scalar = std::uint32_t;
using Vec = std::vector<Scalar>;

/// The prime field GF(p), 2 <= p < 2^16.
class Field {
public:
  explicit Field(std::uint32_t p = 2);

  std::uint32_t p() const { return p_; }

  Scalar add(Scalar a, Scalar b) const {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Scalar inv(Scalar a) const;
  Scalar reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }

  bool operator==(const Field&) const = default;

private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field = Field{});
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries, Field field);

  static Matrix identity(std::size_t n, Field field);
  static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, Field field);
  /// Columns given as vectors of equal length `rows`.
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols, Field field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& entries() const { return data_; }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;
  Matrix transpose() const;
  bool is_zero() const;
  std::vector<std::vector<std::int64_t>> to_rows() const;

  Matrix operator*(const Matrix& rhs) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(Scalar s) const;

  bool operator==(const Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
  }

  Matrix hstack(const Matrix& rhs) const;
  Matrix vstack(const Matrix& rhs) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_{};
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
bool is_invertible(const Matrix& m);

/// Basis of the null space {v : M v = 0}. One vector per free column, with a 1
/// in that column.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Some x with A x = b, or nullopt. Throws std::invalid_argument on a shape
/// mismatch.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Solves A X = B column by column; nullopt if any column is inconsistent.
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);

/// Standard basis vectors completing span(subspace) to the ambient space: the
/// non-pivot directions of the row-reduced subspace basis, in index order.
std::vector<Vec> quotient_representatives(std::size_t ambient_dim,
                                          std::span<const Vec> subspace, Field field);

/// Reduction modulo a subspace. `coords` returns the coordinates of the class
/// of v with respect to quotient_representatives().
class QuotientMap {
public:
  QuotientMap(std::size_t ambient_dim, std::span<const Vec> subspace, Field field);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t subspace_dim() const { return basis_.size(); }
  std::size_t quotient_dim() const { return free_.size(); }
  const std::vector<std::size_t>& free_columns() const { return free_; }

  Vec reduce(Vec v) const;
  Vec coords(const Vec& v) const;
  bool contains(const Vec& v) const;

private:
  std::size_t ambient_;
  Field field_;
  std::vector<Vec> basis_;  // reduced rows
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> free_;
};

/// Incrementally maintained row-reduced basis of a growing subspace.
class SpanBuilder {
public:
  SpanBuilder(std::size_t ambient_dim, Field field) : ambient_(ambient_dim), field_(field) {}

  /// Adds v; returns true if it was independent of the current span.
  bool add(Vec v);
  bool contains(Vec v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::vector<Vec> basis() const { return rows_; }

private:
  Vec reduced(Vec v) const;

  std::size_t ambient_;
  Field field_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace spreadres
