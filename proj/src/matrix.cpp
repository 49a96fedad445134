#include "lp/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

namespace lp {

PolyMatrix PolyMatrix::fromRows(const std::vector<std::vector<Polynomial>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  PolyMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("PolyMatrix::fromRows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

PolyMatrix PolyMatrix::without(const std::vector<std::size_t>& dropRows,
                               const std::vector<std::size_t>& dropCols) const {
  auto keep = [](std::size_t n, const std::vector<std::size_t>& drop) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
      if (std::find(drop.begin(), drop.end(), i) == drop.end()) out.push_back(i);
    return out;
  };
  for (auto r : dropRows)
    if (r >= rows_) throw IndexError("row index out of range");
  for (auto c : dropCols)
    if (c >= cols_) throw IndexError("column index out of range");
  const auto rs = keep(rows_, dropRows);
  const auto cs = keep(cols_, dropCols);
  PolyMatrix out(rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) out.at(i, j) = at(rs[i], cs[j]);
  return out;
}

namespace {

class CofactorExpansion {
public:
  explicit CofactorExpansion(const PolyMatrix& m) : m_(m) {}

  // Determinant of the bottom rows restricted to the columns in `mask`.
  const Polynomial& det(std::uint32_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    Polynomial result;
    const auto remaining = static_cast<std::size_t>(std::popcount(mask));
    if (remaining == 0) {
      result = Polynomial(1);
    } else {
      const std::size_t row = m_.rows() - remaining;
      int sign = 1;
      for (std::size_t c = 0; c < m_.cols(); ++c) {
        if (!(mask >> c & 1u)) continue;
        const Polynomial& entry = m_.at(row, c);
        if (!entry.isZero()) {
          Polynomial term = entry * det(mask & ~(1u << c));
          if (sign > 0)
            result += term;
          else
            result -= term;
        }
        sign = -sign;
      }
    }
    return memo_.emplace(mask, std::move(result)).first->second;
  }

private:
  const PolyMatrix& m_;
  std::unordered_map<std::uint32_t, Polynomial> memo_;
};

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols())
    throw NonSquareError("determinant of a " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
  if (m.rows() > 31) throw ShapeError("determinant: matrix too large for cofactor expansion");
  CofactorExpansion expansion(m);
  return expansion.det(m.rows() == 0 ? 0u : (1u << m.rows()) - 1u);
}

}  // namespace lp
