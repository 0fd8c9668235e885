#include "gkm/intlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gkm {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long long x : r) entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows,
                                  std::span<const IntVector> columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows)
      throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(entries_.begin() + r * cols_,
                   entries_.begin() + (r + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("matrix product: dimension mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out(i, j) += a * other(k, j);
    }
  return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (cols_ != v.size())
    throw std::invalid_argument("matrix-vector product: dimension mismatch");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (v[k] != 0) out[i] += (*this)(i, k) * v[k];
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out = *this;
  for (auto& x : out.entries_) x = -x;
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source,
                                 const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source,
                                 const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntVector SNFDecomposition::diagonal() const {
  IntVector d(std::min(S.rows(), S.cols()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = S(i, i);
  return d;
}

namespace {

// Smallest nonzero |entry| in the block rows >= t, cols >= t; ties go to
// the first one in row-major order.
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix& s,
                                                             std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  BigInt best_abs;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      BigInt a = abs(s(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = std::move(a);
      }
    }
  return best;
}

}  // namespace

SNFDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SNFDecomposition d{IntMatrix::identity(m), a, IntMatrix::identity(n), 0};
  IntMatrix& s = d.S;
  IntMatrix& u = d.U;
  IntMatrix& v = d.V;

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    for (;;) {
      auto pivot = min_pivot(s, t);
      if (!pivot) {
        d.rank = t;
        return d;
      }
      s.swap_rows(t, pivot->first);
      u.swap_rows(t, pivot->first);
      s.swap_cols(t, pivot->second);
      v.swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        BigInt q = s(i, t) / s(t, t);
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        BigInt q = s(t, j) / s(t, t);
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility chain: fold any row holding a non-multiple into row t.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < m && !offender; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (s(i, j) % s(t, t) != 0) {
            offender = i;
            break;
          }
      if (!offender) break;
      s.add_row_multiple(t, *offender, 1);
      u.add_row_multiple(t, *offender, 1);
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  d.rank = t;
  return d;
}

namespace {

void normalize_sign(IntVector& v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    return;
  }
}

}  // namespace

std::vector<IntVector> kernel_saturated(const IntMatrix& a) {
  SNFDecomposition d = smith_normal_form(a);
  std::vector<IntVector> basis;
  for (std::size_t j = d.rank; j < a.cols(); ++j) {
    basis.push_back(d.V.column(j));
    normalize_sign(basis.back());
  }
  return basis;
}

IntegerSolver::IntegerSolver(IntMatrix a)
    : a_(std::move(a)), snf_(smith_normal_form(a_)) {}

std::optional<IntVector> IntegerSolver::solve(const IntVector& b) const {
  if (b.size() != a_.rows())
    throw std::invalid_argument("solve_integer: dimension mismatch");
  IntVector c = snf_.U * b;
  IntVector y(a_.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < snf_.rank) {
      const BigInt& s = snf_.S(i, i);
      if (c[i] % s != 0) return std::nullopt;
      y[i] = c[i] / s;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return snf_.V * y;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows())
    throw std::invalid_argument("solve_integer: dimension mismatch");
  return IntegerSolver(a).solve(b);
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) return false;
  BigInt d = determinant(a);
  return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (!is_unimodular(a)) throw std::invalid_argument("matrix is not unimodular");
  SNFDecomposition d = smith_normal_form(a);
  // U A V = I, so A^{-1} = V U.
  return d.V * d.U;
}

BigInt content(std::span<const BigInt> v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, abs(x));
  return g;
}

IntVector primitive_part(const IntVector& v) {
  BigInt g = content(v);
  if (g == 0) throw std::invalid_argument("primitive_part of the zero vector");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

bool is_zero(std::span<const BigInt> v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

namespace {

struct ExtendedGcd {
  BigInt g, x, y;  // g = x*a + y*b, g >= 0
};

ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

IntMatrix hermite_rows(const IntMatrix& a) {
  IntMatrix h = a;
  const std::size_t m = h.rows(), n = h.cols();
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < n && pivot_row < m; ++col) {
    for (std::size_t i = pivot_row + 1; i < m; ++i) {
      if (h(i, col) == 0) continue;
      if (h(pivot_row, col) == 0) {
        h.swap_rows(pivot_row, i);
        continue;
      }
      auto [g, x, y] = extended_gcd(h(pivot_row, col), h(i, col));
      BigInt p = h(pivot_row, col) / g, q = h(i, col) / g;
      for (std::size_t j = 0; j < n; ++j) {
        BigInt top = x * h(pivot_row, j) + y * h(i, j);
        BigInt bottom = p * h(i, j) - q * h(pivot_row, j);
        h(pivot_row, j) = std::move(top);
        h(i, j) = std::move(bottom);
      }
    }
    if (h(pivot_row, col) == 0) continue;
    if (h(pivot_row, col) < 0) h.negate_row(pivot_row);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      BigInt reduced = floor_mod(h(i, col), h(pivot_row, col));
      BigInt q = (h(i, col) - reduced) / h(pivot_row, col);
      h.add_row_multiple(i, pivot_row, -q);
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  IntMatrix out(pivot_row, n);
  for (std::size_t i = 0; i < pivot_row; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = h(i, j);
  return out;
}

}  // namespace gkm
