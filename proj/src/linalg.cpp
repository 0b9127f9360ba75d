#include "spreadres/linalg.hpp"

#include <algorithm>

namespace spreadres {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(std::uint32_t p) : p_(p) {
  if (p >= (1u << 16) || !is_prime(p)) {
    throw std::invalid_argument("field characteristic must be a prime below 65536, got " +
                                std::to_string(p));
  }
}

Scalar Field::inv(Scalar a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  // Fermat: a^(p-2).
  Scalar result = 1;
  Scalar base = a;
  std::uint32_t e = p_ - 2;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
  for (auto& x : data_) x %= field_.p();
}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, Field field) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c, field);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = field.reduce(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols, Field field) {
  Matrix m(rows, cols.size(), field);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
}

std::vector<std::vector<std::int64_t>> Matrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_, field_);
  const std::uint64_t p = field_.p();
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out(i, j) = static_cast<Scalar>((out(i, j) + a * rhs(k, j)) % p);
      }
    }
  }
  return out;
}

Vec Matrix::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vec out(rows_, 0);
  const std::uint64_t p = field_.p();
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < cols_; ++k) acc = (acc + static_cast<std::uint64_t>((*this)(i, k)) * v[k]) % p;
    out[i] = static_cast<Scalar>(acc);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = field_.mul(x, s);
  return out;
}

Matrix Matrix::hstack(const Matrix& rhs) const {
  if (rows_ != rhs.rows_) throw std::invalid_argument("hstack row mismatch");
  Matrix out(rows_, cols_ + rhs.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& rhs) const {
  if (cols_ != rhs.cols_) throw std::invalid_argument("vstack column mismatch");
  Matrix out(rows_ + rhs.rows_, cols_, field_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(rhs.data_.begin(), rhs.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

RrefResult rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t j = col; j < a.cols(); ++j) std::swap(a(sel, j), a(row, j));
    }
    const Scalar inv = f.inv(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = f.mul(a(row, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row) continue;
      const Scalar factor = a(i, col);
      if (factor == 0) continue;
      for (std::size_t j = col; j < a.cols(); ++j) {
        a(i, j) = f.sub(a(i, j), f.mul(factor, a(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (a.rows() != b.size()) {
    throw std::invalid_argument("solve: system has " + std::to_string(a.rows()) +
                                " rows but right-hand side has length " + std::to_string(b.size()));
  }
  Matrix aug = a.hstack(Matrix::from_columns(b.size(), {b}, a.field()));
  auto [r, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, a.cols());
  return x;
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_matrix: row mismatch");
  auto [r, pivots] = rref(a.hstack(b));
  for (auto c : pivots) {
    if (c >= a.cols()) return std::nullopt;
  }
  Matrix x(a.cols(), b.cols(), a.field());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = r(i, a.cols() + j);
  return x;
}

std::vector<Vec> quotient_representatives(std::size_t ambient_dim, std::span<const Vec> subspace,
                                          Field field) {
  QuotientMap q(ambient_dim, subspace, field);
  std::vector<Vec> reps;
  for (auto c : q.free_columns()) {
    Vec e(ambient_dim, 0);
    e[c] = 1;
    reps.push_back(std::move(e));
  }
  return reps;
}

QuotientMap::QuotientMap(std::size_t ambient_dim, std::span<const Vec> subspace, Field field)
    : ambient_(ambient_dim), field_(field) {
  Matrix m(subspace.size(), ambient_dim, field);
  for (std::size_t i = 0; i < subspace.size(); ++i) {
    if (subspace[i].size() != ambient_dim) throw std::invalid_argument("subspace vector has wrong length");
    for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = subspace[i][j] % field.p();
  }
  auto [r, pivots] = rref(m);
  pivots_ = pivots;
  for (std::size_t i = 0; i < pivots.size(); ++i) basis_.push_back(r.row(i));
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) free_.push_back(c);
}

Vec QuotientMap::reduce(Vec v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar factor = v[pivots_[i]];
    if (factor == 0) continue;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
      v[j] = field_.sub(v[j], field_.mul(factor, basis_[i][j]));
    }
  }
  return v;
}

Vec QuotientMap::coords(const Vec& v) const {
  Vec r = reduce(v);
  Vec out(free_.size());
  for (std::size_t k = 0; k < free_.size(); ++k) out[k] = r[free_[k]];
  return out;
}

bool QuotientMap::contains(const Vec& v) const {
  Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Scalar x) { return x == 0; });
}

Vec SpanBuilder::reduced(Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar factor = v[pivots_[i]];
    if (factor == 0) continue;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j) v[j] = field_.sub(v[j], field_.mul(factor, rows_[i][j]));
  }
  return v;
}

bool SpanBuilder::add(Vec v) {
  if (v.size() != ambient_) throw std::invalid_argument("SpanBuilder: wrong vector length");
  v = reduced(std::move(v));
  std::size_t piv = 0;
  while (piv < ambient_ && v[piv] == 0) ++piv;
  if (piv == ambient_) return false;
  const Scalar inv = field_.inv(v[piv]);
  for (std::size_t j = piv; j < ambient_; ++j) v[j] = field_.mul(v[j], inv);
  // Keep rows fully reduced against the new pivot.
  for (auto& row : rows_) {
    const Scalar factor = row[piv];
    if (factor == 0) continue;
    for (std::size_t j = piv; j < ambient_; ++j) row[j] = field_.sub(row[j], field_.mul(factor, v[j]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool SpanBuilder::contains(Vec v) const {
  v = reduced(std::move(v));
  return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

}  // namespace spreadres
