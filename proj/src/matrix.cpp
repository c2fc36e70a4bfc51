#include "latpoly/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace latpoly {

namespace {

Int narrow(__int128 v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min()) {
    throw OverflowError("integer overflow in matrix elimination");
  }
  return static_cast<Int>(v);
}

// Replace rows (a, b) of each matrix in `ms` by (x*ra + y*rb, s*ra + t*rb).
void combine_rows(IntMatrix& m, std::size_t a, std::size_t b, Int x, Int y, Int s, Int t) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Int va = m(a, c);
    const Int vb = m(b, c);
    m(a, c) = checked_add(checked_mul(x, va), checked_mul(y, vb));
    m(b, c) = checked_add(checked_mul(s, va), checked_mul(t, vb));
  }
}

void combine_cols(IntMatrix& m, std::size_t a, std::size_t b, Int x, Int y, Int s, Int t) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Int va = m(r, a);
    const Int vb = m(r, b);
    m(r, a) = checked_add(checked_mul(x, va), checked_mul(y, vb));
    m(r, b) = checked_add(checked_mul(s, va), checked_mul(t, vb));
  }
}

// Unimodular 2x2 (x y; s t) sending (a, b) to (gcd, 0). When a divides b this is a plain
// elimination that leaves the first vector untouched, which keeps the Smith loop from cycling.
void gcd_step(Int a, Int b, Int& x, Int& y, Int& s, Int& t) {
  if (a != 0 && b % a == 0) {
    x = 1;
    y = 0;
    s = checked_neg(b / a);
    t = 1;
    return;
  }
  const Int g = ext_gcd(a, b, x, y);
  s = checked_neg(b / g);
  t = a / g;
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidArgument("row length does not match column count");
    std::copy(rows[r].begin(), rows[r].end(), m.row_span(r).begin());
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  auto s = row_span(r);
  return {s.begin(), s.end()};
}

IntVector IntMatrix::col(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Int v) { return v == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, Int factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(dst, c) = checked_add((*this)(dst, c), checked_mul(factor, (*this)(src, c)));
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, Int factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, dst) = checked_add((*this)(r, dst), checked_mul(factor, (*this)(r, src)));
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = checked_neg((*this)(r, c));
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = checked_neg((*this)(r, c));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product dimension mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int v = a(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        p(i, j) = checked_add(p(i, j), checked_mul(v, b(k, j)));
    }
  return p;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntVector row_times(std::span<const Int> v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw InvalidArgument("vector-matrix dimension mismatch");
  IntVector out(m.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = checked_add(out[j], checked_mul(v[i], m(i, j)));
  }
  return out;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) throw InvalidArgument("dot product dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 v = static_cast<__int128>(m(i, j)) * m(k, k) - static_cast<__int128>(m(i, k)) * m(k, j);
        m(i, j) = narrow(v / prev);
      }
    prev = m(k, k);
  }
  return checked_mul(sign, m(n - 1, n - 1));
}

std::size_t rank(const IntMatrix& a) {
  IntMatrix m = a;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        const __int128 v = static_cast<__int128>(m(i, j)) * m(r, c) - static_cast<__int128>(m(i, c)) * m(r, j);
        m(i, j) = narrow(v / prev);
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

HermiteResult hermite_normal_form(const IntMatrix& a) {
  HermiteResult res{a, IntMatrix::identity(a.rows()), 0};
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, c) == 0) continue;
      if (h(r, c) == 0) {
        h.swap_rows(r, i);
        u.swap_rows(r, i);
        continue;
      }
      Int x = 0, y = 0, s = 0, t = 0;
      gcd_step(h(r, c), h(i, c), x, y, s, t);
      combine_rows(h, r, i, x, y, s, t);
      combine_rows(u, r, i, x, y, s, t);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Int q = floor_div(h(i, c), h(r, c));
      if (q != 0) {
        h.add_row_multiple(i, r, checked_neg(q));
        u.add_row_multiple(i, r, checked_neg(q));
      }
    }
    ++r;
  }
  res.rank = r;
  return res;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix d = a;
  IntMatrix left = IntMatrix::identity(m);
  IntMatrix right = IntMatrix::identity(n);
  const std::size_t k = std::min(m, n);
  std::size_t rank_found = 0;

  for (std::size_t t = 0; t < k; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = m, pc = n;
    Int best = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const Int v = checked_abs(d(i, j));
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    if (best == 0) break;
    d.swap_rows(t, pr);
    left.swap_rows(t, pr);
    d.swap_cols(t, pc);
    right.swap_cols(t, pc);

    for (;;) {
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Int x = 0, y = 0, s = 0, u = 0;
        gcd_step(d(t, t), d(i, t), x, y, s, u);
        combine_rows(d, t, i, x, y, s, u);
        combine_rows(left, t, i, x, y, s, u);
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Int x = 0, y = 0, s = 0, u = 0;
        gcd_step(d(t, t), d(t, j), x, y, s, u);
        combine_cols(d, t, j, x, y, s, u);
        combine_cols(right, t, j, x, y, s, u);
      }
      bool column_clear = true;
      for (std::size_t i = t + 1; i < m; ++i) column_clear = column_clear && d(i, t) == 0;
      if (!column_clear) continue;

      // Divisibility: fold an offending row into the pivot row and repeat.
      std::size_t bad_row = m;
      for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == m) break;
      d.add_row_multiple(t, bad_row, 1);
      left.add_row_multiple(t, bad_row, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      left.negate_row(t);
    }
    ++rank_found;
  }

  SmithDecomposition out{std::move(left), std::move(right), IntVector(k, 0), rank_found};
  for (std::size_t t = 0; t < k; ++t) out.diagonal[t] = d(t, t);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) return IntMatrix::identity(n);
  const HermiteResult hr = hermite_normal_form(a.transposed());
  const std::size_t dim = n - hr.rank;
  IntMatrix basis(dim, n);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t c = 0; c < n; ++c) basis(i, c) = hr.u(hr.rank + i, c);
  if (dim == 0) return basis;
  return hermite_normal_form(basis).h;
}

Adjugate adjugate(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("adjugate of a non-square matrix");
  const std::size_t n = a.rows();
  Adjugate out{IntMatrix(n, n), determinant(a)};
  if (n == 0) return out;
  if (n == 1) {
    out.adj(0, 0) = 1;
    return out;
  }
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // Cofactor C_ij goes to adj(j, i).
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = a(r, c);
        }
        ++rr;
      }
      const Int cof = determinant(minor);
      out.adj(j, i) = ((i + j) % 2 == 0) ? cof : checked_neg(cof);
    }
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  Adjugate adj = adjugate(a);
  if (adj.det != 1 && adj.det != -1) throw InvalidArgument("matrix is not unimodular");
  if (adj.det == -1)
    for (std::size_t r = 0; r < adj.adj.rows(); ++r) adj.adj.negate_row(r);
  return adj.adj;
}

std::optional<IntVector> solve_row_combination(const IntMatrix& b, std::span<const Int> x) {
  // Solve b^T y = x by rational Gauss-Jordan on the augmented system.
  const std::size_t r = b.rows();
  const std::size_t d = b.cols();
  if (x.size() != d) throw InvalidArgument("solve_row_combination: dimension mismatch");
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(r + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < r; ++j) m[i][j] = b(j, i);
    m[i][r] = x[i];
  }
  std::vector<std::size_t> pivot_row_of(r, d);
  std::size_t row = 0;
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t p = row;
    while (p < d && m[p][c].sign() == 0) ++p;
    if (p == d) return std::nullopt;  // rows of b are dependent
    std::swap(m[row], m[p]);
    const Rational inv = Rational(1) / m[row][c];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == row || m[i][c].sign() == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j <= r; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_row_of[c] = row++;
  }
  for (std::size_t i = row; i < d; ++i)
    if (m[i][r].sign() != 0) return std::nullopt;
  IntVector y(r);
  for (std::size_t c = 0; c < r; ++c) {
    const Rational& v = m[pivot_row_of[c]][r];
    if (!v.is_integer()) return std::nullopt;
    y[c] = v.num();
  }
  return y;
}

}  // namespace latpoly
