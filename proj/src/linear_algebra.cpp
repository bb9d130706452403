#include "posetlie/linear_algebra.hpp"

#include <utility>

namespace posetlie {

std::vector<ScalarRow> row_reduce(std::vector<ScalarRow> rows)
{
  if (rows.empty())
    return rows;
  const std::size_t cols = rows.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t found = pivot_row;
    while (found < rows.size() && rows[found][col].is_zero())
      ++found;
    if (found == rows.size())
      continue;
    std::swap(rows[pivot_row], rows[found]);
    const Scalar inv = rows[pivot_row][col].inverse();
    for (auto& entry : rows[pivot_row])
      entry *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col].is_zero())
        continue;
      const Scalar factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c)
        if (!rows[pivot_row][c].is_zero())
          rows[r][c] -= factor * rows[pivot_row][c];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::size_t rank(const std::vector<ScalarRow>& rows)
{
  return row_reduce(rows).size();
}

std::vector<ScalarRow> nullspace(const std::vector<ScalarRow>& rows, std::size_t columns,
                                 const Field& field)
{
  const auto reduced = row_reduce(rows);
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(columns, false);
  for (const auto& row : reduced) {
    std::size_t c = 0;
    while (row[c].is_zero())
      ++c;
    pivot_of_row.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<ScalarRow> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free])
      continue;
    ScalarRow v(columns, field.zero());
    v[free] = field.one();
    for (std::size_t r = 0; r < reduced.size(); ++r)
      v[pivot_of_row[r]] = -reduced[r][free];
    basis.push_back(std::move(v));
  }
  return row_reduce(std::move(basis));
}

bool in_span(const std::vector<ScalarRow>& basis, const ScalarRow& v)
{
  auto extended = basis;
  extended.push_back(v);
  return rank(extended) == rank(basis);
}

} // namespace posetlie
