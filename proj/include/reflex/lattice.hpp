#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "reflex/errors.hpp"
#include "reflex/numeric.hpp"

namespace reflex {

/// Dense row-major matrix of arbitrary-precision integers, at least 1x1.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw DimensionError("IntMatrix: empty shape");
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVector>& rows) {
    if (rows.empty()) throw DimensionError("IntMatrix: no rows");
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DimensionError("IntMatrix: ragged rows");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
    }
    return m;
  }

  static IntMatrix from_columns(const std::vector<IntVector>& cols) { return from_rows(cols).transposed(); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const {
    auto first = data_.begin() + static_cast<std::ptrdiff_t>(i * cols_);
    return IntVector(first, first + static_cast<std::ptrdiff_t>(cols_));
  }

  IntVector column(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntVector operator*(const IntVector& x) const {
    if (x.size() != cols_) throw DimensionError("matrix-vector: shape mismatch");
    IntVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
      y[i] = std::move(s);
    }
    return y;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product: shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// Shape first, then entries in row-major order.
  friend std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      if (a.data_[i] < b.data_[i]) return std::strong_ordering::less;
      if (b.data_[i] < a.data_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  const std::vector<Integer>& data() const noexcept { return data_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

namespace detail {

/// Fraction-free (Bareiss) determinant of an n x n row-major matrix.
template <class T>
T bareiss_det(std::vector<T> a, std::size_t n) {
  if (n == 0) return T(1);
  T sign = 1;
  T prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
    }
    prev = a[k * n + k];
  }
  return sign * a[(n - 1) * n + (n - 1)];
}

/// Row-style Hermite reduction in place: a (r x c) becomes H, u (r x r, may
/// be null) accumulates the row operations so that H = U * a_original.
template <class T>
void hermite_in_place(std::vector<T>& a, std::size_t r, std::size_t c, std::vector<T>* u) {
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < c; ++k) std::swap(a[i * c + k], a[j * c + k]);
    if (u)
      for (std::size_t k = 0; k < r; ++k) std::swap((*u)[i * r + k], (*u)[j * r + k]);
  };
  // row_i -= q * row_j
  auto sub_rows = [&](std::size_t i, std::size_t j, const T& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < c; ++k) a[i * c + k] -= q * a[j * c + k];
    if (u)
      for (std::size_t k = 0; k < r; ++k) (*u)[i * r + k] -= q * (*u)[j * r + k];
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t k = 0; k < c; ++k) a[i * c + k] = -a[i * c + k];
    if (u)
      for (std::size_t k = 0; k < r; ++k) (*u)[i * r + k] = -(*u)[i * r + k];
  };

  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    for (;;) {
      std::size_t best = r;
      for (std::size_t i = row; i < r; ++i) {
        if (a[i * c + col] == 0) continue;
        if (best == r || abs_value(a[i * c + col]) < abs_value(a[best * c + col])) best = i;
      }
      if (best == r) break;
      if (best != row) swap_rows(best, row);
      bool cleared = true;
      for (std::size_t i = row + 1; i < r; ++i) {
        if (a[i * c + col] == 0) continue;
        sub_rows(i, row, a[i * c + col] / a[row * c + col]);
        if (a[i * c + col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (a[row * c + col] == 0) continue;
    if (a[row * c + col] < 0) negate_row(row);
    for (std::size_t i = 0; i < row; ++i) sub_rows(i, row, floor_div(a[i * c + col], a[row * c + col]));
    ++row;
  }
}

template <class T>
std::vector<T> convert_all(const std::vector<Integer>& xs) {
  std::vector<T> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(convert<T>(x));
  return out;
}

template <class T>
IntMatrix to_matrix(const std::vector<T>& xs, std::size_t r, std::size_t c) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = to_integer(xs[i * c + j]);
  return m;
}

}  // namespace detail

inline Integer det(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("det: matrix is not square");
  return detail::with_fast_path([&]<class T>() {
    return detail::to_integer(detail::bareiss_det(detail::convert_all<T>(m.data()), m.rows()));
  });
}

/// H = U * m in row-style Hermite normal form, U unimodular.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
};

/// Echelon form with positive pivots; entries above a pivot lie in [0, pivot).
inline HermiteForm hermite_normal_form(const IntMatrix& m) {
  return detail::with_fast_path([&]<class T>() {
    auto a = detail::convert_all<T>(m.data());
    auto u = detail::convert_all<T>(IntMatrix::identity(m.rows()).data());
    detail::hermite_in_place(a, m.rows(), m.cols(), &u);
    return HermiteForm{detail::to_matrix(a, m.rows(), m.cols()), detail::to_matrix(u, m.rows(), m.rows())};
  });
}

inline std::size_t rank(const IntMatrix& m) {
  IntMatrix h = hermite_normal_form(m).h;
  std::size_t rk = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < h.cols() && !nonzero; ++j) nonzero = h(i, j) != 0;
    if (nonzero) ++rk;
  }
  return rk;
}

/// U * m * V = D with U, V unimodular and D diagonal in Smith form.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  IntVector diagonal() const {
    IntVector diag;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) diag.push_back(d(i, i));
    return diag;
  }
};

inline SmithForm smith_decomposition(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(r);
  IntMatrix v = IntMatrix::identity(c);

  auto row_sub = [&](std::size_t i, std::size_t j, const Integer& q) {  // row_i -= q row_j
    for (std::size_t k = 0; k < c; ++k) a(i, k) -= q * a(j, k);
    for (std::size_t k = 0; k < r; ++k) u(i, k) -= q * u(j, k);
  };
  auto col_sub = [&](std::size_t i, std::size_t j, const Integer& q) {  // col_i -= q col_j
    for (std::size_t k = 0; k < r; ++k) a(k, i) -= q * a(k, j);
    for (std::size_t k = 0; k < c; ++k) v(k, i) -= q * v(k, j);
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < c; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < r; ++k) std::swap(u(i, k), u(j, k));
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < r; ++k) std::swap(a(k, i), a(k, j));
    for (std::size_t k = 0; k < c; ++k) std::swap(v(k, i), v(k, j));
  };

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      std::size_t bi = r, bj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (a(i, j) != 0 && (bi == r || abs(a(i, j)) < abs(a(bi, bj)))) bi = i, bj = j;
      if (bi == r) break;
      if (bi != t) row_swap(bi, t);
      if (bj != t) col_swap(bj, t);

      bool done = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a(i, t) == 0) continue;
        row_sub(i, t, a(i, t) / a(t, t));
        if (a(i, t) != 0) done = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a(t, j) == 0) continue;
        col_sub(j, t, a(t, j) / a(t, t));
        if (a(t, j) != 0) done = false;
      }
      if (!done) continue;

      // Enforce divisibility of the trailing block by the pivot.
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == r) break;
      row_sub(t, bad, Integer(-1));
    }
    if (a(t, t) < 0) {
      for (std::size_t k = 0; k < c; ++k) a(t, k) = -a(t, k);
      for (std::size_t k = 0; k < r; ++k) u(t, k) = -u(t, k);
    }
  }
  return SmithForm{std::move(a), std::move(u), std::move(v)};
}

/// Invariant factors d1 | d2 | ..., padded with zeros for rank deficiency.
inline IntVector smith_normal_form(const IntMatrix& m) { return smith_decomposition(m).diagonal(); }

/// Exact solution of m x = rhs for square nonsingular m.
inline RatVector solve_rational(const IntMatrix& m, const IntVector& rhs) {
  if (!m.is_square()) throw DimensionError("solve_rational: matrix is not square");
  if (rhs.size() != m.rows()) throw DimensionError("solve_rational: rhs length mismatch");
  const std::size_t n = m.rows();
  std::vector<Rational> a(n * (n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * (n + 1) + j] = m(i, j);
    a[i * (n + 1) + n] = rhs[i];
  }
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * (n + 1) + j]; };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && at(p, k) == 0) ++p;
    if (p == n) throw SingularMatrixError("solve_rational: singular matrix");
    if (p != k)
      for (std::size_t j = k; j <= n; ++j) std::swap(at(p, j), at(k, j));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || at(i, k) == 0) continue;
      Rational f = at(i, k) / at(k, k);
      for (std::size_t j = k; j <= n; ++j) at(i, j) -= f * at(k, j);
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = at(i, n) / at(i, i);
  return x;
}

/// True iff the d given vectors of length d generate Z^d.
inline bool is_lattice_basis(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) throw DimensionError("is_lattice_basis: no vectors");
  const std::size_t d = vectors.front().size();
  if (vectors.size() != d) throw DimensionError("is_lattice_basis: need exactly d vectors of length d");
  return abs(det(IntMatrix::from_rows(vectors))) == 1;
}

}  // namespace reflex
