#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "strathom/errors.hpp"
#include "strathom/field.hpp"

namespace strathom {

template <class K>
using Vec = std::vector<K>;

template <class K>
Vec<K> zero_vec(std::size_t n) {
  return Vec<K>(n, K::from_int(0));
}

template <class K>
Vec<K> unit_vec(std::size_t n, std::size_t i) {
  auto v = zero_vec<K>(n);
  v[i] = K::from_int(1);
  return v;
}

template <class K>
bool is_zero(std::span<const K> v) {
  return std::all_of(v.begin(), v.end(), [](const K& x) { return x.is_zero(); });
}

template <class K>
bool is_zero(const Vec<K>& v) {
  return is_zero(std::span<const K>(v));
}

template <class K>
Vec<K>& axpy(Vec<K>& y, const K& a, const Vec<K>& x) {
  if (a.is_zero()) return y;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
  return y;
}

template <class K>
Vec<K> operator+(Vec<K> a, const Vec<K>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class K>
Vec<K> operator-(Vec<K> a, const Vec<K>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class K>
Vec<K> scaled(Vec<K> a, const K& s) {
  for (auto& x : a) x *= s;
  return a;
}

/// Dense row-major matrix over an exact field.
template <class K>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K::from_int(0)) {}

  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K::from_int(1);
    return m;
  }
  static Mat from_rows(const std::vector<Vec<K>>& rows, std::size_t cols) {
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DomainError("ragged rows in matrix");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Mat from_ints(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t c = rows.size() ? rows.begin()->size() : 0;
    Mat m(rows.size(), c);
    std::size_t i = 0;
    for (const auto& r : rows) {
      if (r.size() != c) throw DomainError("ragged rows in matrix");
      std::size_t j = 0;
      for (long x : r) m(i, j++) = K::from_int(x);
      ++i;
    }
    return m;
  }
  /// Single row.
  static Mat row_matrix(const Vec<K>& v) { return from_rows({v}, v.size()); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const K> row_span(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vec<K> row(std::size_t i) const { return Vec<K>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
  void set_row(std::size_t i, const Vec<K>& v) { std::copy(v.begin(), v.end(), data_.begin() + i * cols_); }
  Vec<K> col(std::size_t j) const {
    Vec<K> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  std::vector<Vec<K>> row_list() const {
    std::vector<Vec<K>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }
  const std::vector<K>& data() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const K& x) { return x.is_zero(); });
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  K trace() const {
    K t = K::from_int(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  /// Copies `block` with its top-left corner at (r, c).
  void set_block(std::size_t r, std::size_t c, const Mat& block) {
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) (*this)(r + i, c + j) = block(i, j);
  }
  Mat block(std::size_t r, std::size_t c, std::size_t nr, std::size_t nc) const {
    Mat b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r + i, c + j);
    return b;
  }

  /// Row vector times matrix.
  Vec<K> apply(std::span<const K> v) const {
    if (v.size() != rows_) throw DomainError("vector/matrix shape mismatch");
    auto out = zero_vec<K>(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (v[i].is_zero()) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        const K& m = (*this)(i, j);
        if (!m.is_zero()) out[j] += v[i] * m;
      }
    }
    return out;
  }
  Vec<K> apply(const Vec<K>& v) const { return apply(std::span<const K>(v)); }

  Mat& operator+=(const Mat& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Mat& operator*=(const K& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const K& s) { return a *= s; }
  friend Mat operator*(const K& s, Mat a) { return a *= s; }
  Mat operator-() const { return *this * K::from_int(-1); }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    Mat out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const K& y = b(k, j);
          if (!y.is_zero()) out(i, j) += x * y;
        }
      }
    return out;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
      s += "]";
    }
    return s + "]";
  }

 private:
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

template <class K>
Mat<K> hstack(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() != b.rows()) throw DomainError("hstack row mismatch");
  Mat<K> m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

template <class K>
Mat<K> vstack(const Mat<K>& a, const Mat<K>& b) {
  if (a.cols() != b.cols()) throw DomainError("vstack column mismatch");
  Mat<K> m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

template <class K>
Mat<K> block_diag(const std::vector<Mat<K>>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) r += b.rows(), c += b.cols();
  Mat<K> m(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

/// Flattens row-major.
template <class K>
Vec<K> flatten(const Mat<K>& m) {
  return m.data();
}

template <class K>
Mat<K> unflatten(const Vec<K>& v, std::size_t rows, std::size_t cols) {
  Mat<K> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

namespace detail {

template <class K>
void check_single_field(const Mat<K>& m) {
  if constexpr (K::is_prime_field) {
    if (m.rows() == 0 || m.cols() == 0) return;
    auto p = m(0, 0).modulus();
    for (const auto& x : m.data())
      if (x.modulus() != p) throw FieldMismatch("entries from F_" + std::to_string(p) + " and F_" + std::to_string(x.modulus()));
  }
}

}  // namespace detail

template <class K>
struct Rref {
  Mat<K> reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row-echelon form. Pivot choice is the first row with a nonzero
/// entry in the leftmost remaining column, so the output is deterministic.
template <class K>
Rref<K> rref(Mat<K> m) {
  detail::check_single_field(m);
  Rref<K> out;
  std::size_t r = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    K inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      K f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

template <class K>
std::size_t rank(const Mat<K>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return rref(m).rank;
}

/// Columns form a basis of {x : m x = 0}.
template <class K>
Mat<K> kernel_basis(const Mat<K>& m) {
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  Mat<K> k(m.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = K::from_int(1);
    for (std::size_t i = 0; i < r.rank; ++i) k(r.pivots[i], f) = -r.reduced(i, free[f]);
  }
  return k;
}

/// Rows form a basis of {y : y m = 0}.
template <class K>
Mat<K> left_kernel(const Mat<K>& m) {
  return kernel_basis(m.transpose()).transpose();
}

/// Some x with m x = b, or nullopt when inconsistent.
template <class K>
std::optional<Vec<K>> solve(const Mat<K>& m, const Vec<K>& b) {
  if (b.size() != m.rows()) throw DomainError("solve: right-hand side has wrong length");
  Mat<K> aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < b.size(); ++i) aug(i, m.cols()) = b[i];
  auto r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  auto x = zero_vec<K>(m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, m.cols());
  return x;
}

/// Inverse of a square matrix; throws when singular.
template <class K>
Mat<K> inverse(const Mat<K>& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
  auto r = rref(hstack(m, Mat<K>::identity(m.rows())));
  if (r.rank < m.rows() || (m.rows() > 0 && r.pivots[m.rows() - 1] >= m.cols())) throw DomainError("matrix is singular");
  return r.reduced.block(0, m.cols(), m.rows(), m.cols());
}

/// Kronecker (tensor) product.
template <class K>
Mat<K> kron(const Mat<K>& a, const Mat<K>& b) {
  Mat<K> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

/// A linear subspace of K^n kept as an rref basis. Coordinates of members
/// are read off at the pivot columns.
template <class K>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : n_(ambient) {}
  Subspace(const Mat<K>& spanning_rows) : n_(spanning_rows.cols()) {  // NOLINT
    if (spanning_rows.rows() == 0) return;
    auto r = rref(spanning_rows);
    for (std::size_t i = 0; i < r.rank; ++i) rows_.push_back(r.reduced.row(i));
    pivots_ = r.pivots;
  }
  static Subspace span(const std::vector<Vec<K>>& vs, std::size_t ambient) {
    if (vs.empty()) return Subspace(ambient);
    return Subspace(Mat<K>::from_rows(vs, ambient));
  }

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec<K>>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Mat<K> basis_matrix() const { return Mat<K>::from_rows(rows_, n_); }

  /// v minus its component along the pivot columns.
  Vec<K> reduce(Vec<K> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      K c = v[pivots_[i]];
      if (c.is_zero()) continue;
      axpy(v, -c, rows_[i]);
    }
    return v;
  }
  bool contains(const Vec<K>& v) const { return is_zero(reduce(v)); }

  /// Coordinates of a member in basis(). Throws when v is not a member.
  Vec<K> coords(const Vec<K>& v) const {
    if (!contains(v)) throw DomainError("vector is not in the subspace");
    Vec<K> c;
    c.reserve(rows_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
  }

  /// Adds v; returns false when it was already in the span.
  bool extend(const Vec<K>& v) {
    auto w = reduce(v);
    std::size_t p = 0;
    while (p < w.size() && w[p].is_zero()) ++p;
    if (p == w.size()) return false;
    K inv = w[p].inverse();
    for (auto& x : w) x *= inv;
    for (auto& row : rows_)
      if (!row[p].is_zero()) axpy(row, -row[p], w);
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(w));
    return true;
  }

  bool contains_all(const Subspace& o) const {
    return std::all_of(o.rows_.begin(), o.rows_.end(), [&](const Vec<K>& v) { return contains(v); });
  }
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

  /// Indices of non-pivot columns: the unit vectors there span a complement.
  std::vector<std::size_t> complement_columns() const {
    std::vector<bool> piv(n_, false);
    for (auto p : pivots_) piv[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n_; ++j)
      if (!piv[j]) out.push_back(j);
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Vec<K>> rows_;
  std::vector<std::size_t> pivots_;
};

/// V / W for W a subspace of K^n, with the complement spanned by unit
/// vectors at W's non-pivot columns.
template <class K>
class QuotientSpace {
 public:
  explicit QuotientSpace(Subspace<K> w) : w_(std::move(w)), comp_(w_.complement_columns()) {}
  std::size_t dim() const { return comp_.size(); }
  const Subspace<K>& sub() const { return w_; }
  const std::vector<std::size_t>& complement() const { return comp_; }
  Vec<K> coords(const Vec<K>& v) const {
    auto r = w_.reduce(v);
    Vec<K> c;
    c.reserve(comp_.size());
    for (auto j : comp_) c.push_back(r[j]);
    return c;
  }
  Vec<K> lift(const Vec<K>& c) const {
    auto v = zero_vec<K>(w_.ambient());
    for (std::size_t i = 0; i < comp_.size(); ++i) v[comp_[i]] = c[i];
    return v;
  }

 private:
  Subspace<K> w_;
  std::vector<std::size_t> comp_;
};

}  // namespace strathom
