#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latpoly/arith.hpp"

namespace latpoly {

/// Integer vector; also the coordinate type of lattice points.
using IntVector = std::vector<Int>;

/// Dense row-major integer matrix. Entries are exact; all arithmetic is overflow-checked.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  /// Stack the given vectors as rows; every vector must have length `cols`.
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;
  std::span<Int> row_span(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Int> row_span(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  IntMatrix transposed() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, Int factor);
  void add_col_multiple(std::size_t dst, std::size_t src, Int factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Row vector times matrix: (v * M)_j = sum_i v_i M_ij.
IntVector row_times(std::span<const Int> v, const IntMatrix& m);
Int dot(std::span<const Int> a, std::span<const Int> b);

/// Exact determinant (fraction-free Bareiss elimination). Square matrices only.
Int determinant(const IntMatrix& a);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& a);

struct HermiteResult {
  IntMatrix h;  ///< row-style Hermite normal form
  IntMatrix u;  ///< unimodular, h = u * a
  std::size_t rank = 0;
};

/// Row-style HNF: h = u * a with u unimodular, h in echelon form, pivots positive, entries above
/// each pivot reduced into [0, pivot). Zero rows sit at the bottom. Deterministic.
HermiteResult hermite_normal_form(const IntMatrix& a);

struct SmithDecomposition {
  IntMatrix left;   ///< unimodular, rows x rows
  IntMatrix right;  ///< unimodular, cols x cols
  /// Elementary divisors d_0 | d_1 | ... (length min(rows, cols)); trailing zeros for rank deficiency.
  IntVector diagonal;
  std::size_t rank = 0;
};

/// left * a * right = diag(diagonal).
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Saturated integer basis (as rows) of {x in Z^cols : a x = 0}. Rows are primitive and the
/// basis spans every integer solution.
IntMatrix integer_kernel(const IntMatrix& a);

/// Inverse of a unimodular matrix (throws InvalidArgument if |det| != 1).
IntMatrix unimodular_inverse(const IntMatrix& a);

/// Solve y * b = x for integer y when b's rows are linearly independent. Returns nullopt when x is
/// not in the rational row space or the solution is not integral.
std::optional<IntVector> solve_row_combination(const IntMatrix& b, std::span<const Int> x);

/// Exact rational inverse-free solve: returns adj and det with a * adj = det * I (square a).
struct Adjugate {
  IntMatrix adj;
  Int det = 0;
};
Adjugate adjugate(const IntMatrix& a);

}  // namespace latpoly
