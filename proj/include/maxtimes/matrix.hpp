#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxtimes/errors.hpp"
#include "maxtimes/scalar.hpp"

namespace maxtimes {

// Dense matrix over a max-times scalar. Entries are nonnegative; shapes are
// validated by the operations, not by callers.
template <semiring_scalar S>
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(check_shape(rows, cols), scalar_traits<S>::zero()) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<S> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != check_shape(rows, cols))
      throw dimension_error("matrix: entry count does not match shape");
    for (const S& v : e_)
      if (!scalar_traits<S>::valid(v))
        throw invalid_input_error("matrix: entry is negative or not finite");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_traits<S>::one();
    return m;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<S>> rows) {
    std::vector<S> flat;
    std::size_t n_rows = rows.size(), n_cols = 0;
    for (const auto& r : rows) {
      if (n_cols == 0) n_cols = r.size();
      if (r.size() != n_cols)
        throw dimension_error("matrix: rows of unequal length");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return Matrix(n_rows, n_cols, std::move(flat));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const S& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }
  S& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

 private:
  static std::size_t check_shape(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0)
      throw dimension_error("matrix: dimensions must be positive");
    return rows * cols;
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<S> e_;
};

// Column vector over a max-times scalar.
template <semiring_scalar S>
class Vector {
 public:
  Vector() = default;

  explicit Vector(std::size_t dim)
      : e_(check_dim(dim), scalar_traits<S>::zero()) {}

  explicit Vector(std::vector<S> entries) : e_(std::move(entries)) {
    check_dim(e_.size());
    for (const S& v : e_)
      if (!scalar_traits<S>::valid(v))
        throw invalid_input_error("vector: entry is negative or not finite");
  }

  Vector(std::initializer_list<S> entries) : Vector(std::vector<S>(entries)) {}

  static Vector ones(std::size_t dim) {
    Vector v(dim);
    for (auto& x : v.e_) x = scalar_traits<S>::one();
    return v;
  }

  static Vector unit(std::size_t dim, std::size_t index) {
    Vector v(dim);
    v[index] = scalar_traits<S>::one();
    return v;
  }

  std::size_t dim() const { return e_.size(); }
  const S& operator[](std::size_t i) const { return e_[i]; }
  S& operator[](std::size_t i) { return e_[i]; }

  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  auto begin() { return e_.begin(); }
  auto end() { return e_.end(); }

 private:
  static std::size_t check_dim(std::size_t dim) {
    if (dim == 0) throw dimension_error("vector: dimension must be positive");
    return dim;
  }

  std::vector<S> e_;
};

// --- predicates -------------------------------------------------------------

template <semiring_scalar S>
bool is_zero(const Vector<S>& v) {
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (!scalar_traits<S>::is_zero(v[i])) return false;
  return true;
}

template <semiring_scalar S>
bool is_zero(const Matrix<S>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!scalar_traits<S>::is_zero(m(i, j))) return false;
  return true;
}

// No zero entries.
template <semiring_scalar S>
bool is_regular(const Vector<S>& v) {
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (scalar_traits<S>::is_zero(v[i])) return false;
  return true;
}

// Every row has at least one nonzero entry.
template <semiring_scalar S>
bool is_row_regular(const Matrix<S>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool any = false;
    for (std::size_t j = 0; j < m.cols() && !any; ++j)
      any = !scalar_traits<S>::is_zero(m(i, j));
    if (!any) return false;
  }
  return true;
}

// Every column has no zero entry at all (regular columns).
template <semiring_scalar S>
bool has_regular_columns(const Matrix<S>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (scalar_traits<S>::is_zero(m(i, j))) return false;
  return true;
}

// --- elementwise and structural operations ----------------------------------

// Entrywise max (semiring addition).
template <semiring_scalar S>
Matrix<S> add(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw dimension_error("add: shape mismatch");
  Matrix<S> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = tropical_add(a(i, j), b(i, j));
  return out;
}

// Max-times matrix product: (a b)[i][j] = max_k a[i][k] * b[k][j].
template <semiring_scalar S>
Matrix<S> multiply(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) throw dimension_error("multiply: shape mismatch");
  Matrix<S> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const S& aik = a(i, k);
      if (scalar_traits<S>::is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (scalar_traits<S>::is_zero(b(k, j))) continue;
        S prod = scalar_traits<S>::mul(aik, b(k, j));
        if (scalar_traits<S>::less(out(i, j), prod)) out(i, j) = std::move(prod);
      }
    }
  return out;
}

template <semiring_scalar S>
Matrix<S> scale(const S& c, const Matrix<S>& a) {
  Matrix<S> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = scalar_traits<S>::mul(c, a(i, j));
  return out;
}

template <semiring_scalar S>
Vector<S> scale(const S& c, const Vector<S>& v) {
  Vector<S> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i)
    out[i] = scalar_traits<S>::mul(c, v[i]);
  return out;
}

// Conjugate transpose: out[i][j] = 1 / a[j][i] for nonzero entries, else 0.
template <semiring_scalar S>
Matrix<S> conjugate_transpose(const Matrix<S>& a) {
  if (is_zero(a))
    throw invalid_input_error("conjugate_transpose: all-zero matrix");
  Matrix<S> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!scalar_traits<S>::is_zero(a(i, j)))
        out(j, i) = scalar_traits<S>::inverse(a(i, j));
  return out;
}

// Entrywise conjugate of a vector: zeros stay zero.
template <semiring_scalar S>
Vector<S> conjugate(const Vector<S>& v) {
  if (is_zero(v)) throw invalid_input_error("conjugate: zero vector");
  Vector<S> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (!scalar_traits<S>::is_zero(v[i]))
      out[i] = scalar_traits<S>::inverse(v[i]);
  return out;
}

template <semiring_scalar S>
Matrix<S> power(const Matrix<S>& a, std::size_t p) {
  if (!a.is_square()) throw dimension_error("power: matrix must be square");
  Matrix<S> out = Matrix<S>::identity(a.rows());
  for (std::size_t i = 0; i < p; ++i) out = multiply(out, a);
  return out;
}

// --- vector arithmetic -------------------------------------------------------

template <semiring_scalar S>
Vector<S> mat_vec(const Matrix<S>& a, const Vector<S>& x) {
  if (a.cols() != x.dim()) throw dimension_error("mat_vec: shape mismatch");
  Vector<S> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out[i] = tropical_add(out[i], scalar_traits<S>::mul(a(i, j), x[j]));
  return out;
}

// Row vector times matrix: out[j] = max_i x[i] * a[i][j].
template <semiring_scalar S>
Vector<S> vec_mat(const Vector<S>& x, const Matrix<S>& a) {
  if (a.rows() != x.dim()) throw dimension_error("vec_mat: shape mismatch");
  Vector<S> out(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out[j] = tropical_add(out[j], scalar_traits<S>::mul(x[i], a(i, j)));
  return out;
}

// max_i u[i] * v[i]: the scalar product of a row and a column.
template <semiring_scalar S>
S max_dot(const Vector<S>& u, const Vector<S>& v) {
  if (u.dim() != v.dim()) throw dimension_error("max_dot: shape mismatch");
  S out = scalar_traits<S>::zero();
  for (std::size_t i = 0; i < u.dim(); ++i)
    out = tropical_add(out, scalar_traits<S>::mul(u[i], v[i]));
  return out;
}

// Outer product: out[i][j] = u[i] * v[j].
template <semiring_scalar S>
Matrix<S> outer(const Vector<S>& u, const Vector<S>& v) {
  Matrix<S> out(u.dim(), v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j)
      out(i, j) = scalar_traits<S>::mul(u[i], v[j]);
  return out;
}

template <semiring_scalar S>
Vector<S> column(const Matrix<S>& a, std::size_t j) {
  Vector<S> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = a(i, j);
  return out;
}

// Column maxima as a vector of length cols().
template <semiring_scalar S>
Vector<S> col_max(const Matrix<S>& a) {
  Vector<S> out(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out[j] = tropical_add(out[j], a(i, j));
  return out;
}

template <semiring_scalar S>
S max_entry(const Vector<S>& v) {
  S out = v[0];
  for (std::size_t i = 1; i < v.dim(); ++i) out = tropical_add(out, v[i]);
  return out;
}

// v scaled so its largest entry is exactly 1.
template <semiring_scalar S>
Vector<S> scale_to_unit_max(const Vector<S>& v) {
  if (is_zero(v)) throw invalid_input_error("scale_to_unit_max: zero vector");
  const S m = scalar_traits<S>::inverse(max_entry(v));
  Vector<S> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i)
    out[i] = scalar_traits<S>::mul(m, v[i]);
  return out;
}

// --- comparisons ------------------------------------------------------------

template <semiring_scalar S>
bool vector_eq(const Vector<S>& a, const Vector<S>& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!scalar_traits<S>::eq(a[i], b[i])) return false;
  return true;
}

template <semiring_scalar S>
bool matrix_eq(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!scalar_traits<S>::eq(a(i, j), b(i, j))) return false;
  return true;
}

// Lexicographic entry order; ties resolved by the scalar equality notion.
template <semiring_scalar S>
bool lex_less(const Vector<S>& a, const Vector<S>& b) {
  if (a.dim() != b.dim()) throw dimension_error("lex_less: shape mismatch");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (scalar_traits<S>::eq(a[i], b[i])) continue;
    return scalar_traits<S>::less(a[i], b[i]);
  }
  return false;
}

// True when x and y span the same ray: zeros match positionally and the
// ratio over the nonzero support is constant.
template <semiring_scalar S>
bool collinear(const Vector<S>& x, const Vector<S>& y) {
  if (x.dim() != y.dim()) throw dimension_error("collinear: shape mismatch");
  if (is_zero(x) || is_zero(y))
    throw invalid_input_error("collinear: zero vector");
  std::optional<S> ratio;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const bool zx = scalar_traits<S>::is_zero(x[i]);
    const bool zy = scalar_traits<S>::is_zero(y[i]);
    if (zx != zy) return false;
    if (zx) continue;
    S r = scalar_traits<S>::div(x[i], y[i]);
    if (!ratio)
      ratio = std::move(r);
    else if (!scalar_traits<S>::eq(*ratio, r))
      return false;
  }
  return true;
}

// --- closure and spectrum ----------------------------------------------------

// I + A + A^2 + ... + A^(n-1) by repeated multiplication. The sum is always
// this finite truncation; callers who need convergence guarantees check the
// spectral radius themselves.
template <semiring_scalar S>
Matrix<S> kleene_star(const Matrix<S>& a) {
  if (!a.is_square())
    throw dimension_error("kleene_star: matrix must be square");
  Matrix<S> acc = Matrix<S>::identity(a.rows());
  Matrix<S> term = acc;
  for (std::size_t p = 1; p < a.rows(); ++p) {
    term = multiply(term, a);
    acc = add(acc, term);
  }
  return acc;
}

// Result of the spectral radius computation. The radius is the maximum over
// all cycles of the cycle product's k-th root, reported as the maximizing
// pair (cycle_product, cycle_length). value holds the radius itself whenever
// the realization can represent that root exactly (always, for float).
template <semiring_scalar S>
struct SpectralOutcome {
  S cycle_product;             // product along a maximizing cycle
  unsigned long cycle_length;  // its length, in [1, n]
  std::optional<S> value;      // cycle_product^(1/cycle_length) if representable
  double approx;               // double approximation of the radius

  bool is_zero() const { return scalar_traits<S>::is_zero(cycle_product); }
};

// Maximum cycle geometric mean via diagonals of successive powers:
// lambda = max over k in [1, n] of (max_i (A^k)[i][i])^(1/k).
// Candidates are compared without materializing roots; ties prefer the
// shortest cycle, which keeps the reported pair deterministic.
template <semiring_scalar S>
SpectralOutcome<S> spectral_radius(const Matrix<S>& a) {
  if (!a.is_square())
    throw dimension_error("spectral_radius: matrix must be square");
  const std::size_t n = a.rows();
  S best = scalar_traits<S>::zero();
  unsigned long best_len = 1;
  Matrix<S> pw = a;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) pw = multiply(pw, a);
    S diag = pw(0, 0);
    for (std::size_t i = 1; i < n; ++i) diag = tropical_add(diag, pw(i, i));
    if (scalar_traits<S>::is_zero(diag)) continue;
    const bool improves =
        scalar_traits<S>::is_zero(best) ||
        scalar_traits<S>::compare_root(diag, k, best, best_len) ==
            std::strong_ordering::greater;
    if (improves) {
      best = std::move(diag);
      best_len = k;
    }
  }
  SpectralOutcome<S> out;
  out.cycle_product = best;
  out.cycle_length = best_len;
  out.value = scalar_traits<S>::root(best, best_len);
  out.approx = std::pow(scalar_traits<S>::to_double(best),
                        1.0 / static_cast<double>(best_len));
  return out;
}

}  // namespace maxtimes
