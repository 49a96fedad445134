#ifndef LP_MATRIX_HPP
#define LP_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "lp/polynomial.hpp"

namespace lp {

/// Dense rows x cols matrix of polynomials.
class PolyMatrix {
public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws ShapeError unless all rows have equal length.
  static PolyMatrix fromRows(const std::vector<std::vector<Polynomial>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial& at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
  const Polynomial& at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

  /// Copy with the listed rows and columns removed (indices may be unsorted).
  PolyMatrix without(const std::vector<std::size_t>& dropRows,
                     const std::vector<std::size_t>& dropCols) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> data_;
};

/// Exact determinant by cofactor expansion along rows, memoizing
/// sub-determinants on the set of remaining columns.  The 0x0 determinant is 1.
/// Throws NonSquareError.
Polynomial determinant(const PolyMatrix& m);

}  // namespace lp

#endif  // LP_MATRIX_HPP
