#pragma once

#include "posetlie/scalar.hpp"

#include <cstddef>
#include <vector>

namespace posetlie {

using ScalarRow = std::vector<Scalar>;

/// Reduced row echelon form of `rows`, zero rows dropped. Exact Gaussian
/// elimination; the result is canonical for the row space.
std::vector<ScalarRow> row_reduce(std::vector<ScalarRow> rows);

std::size_t rank(const std::vector<ScalarRow>& rows);

/// Basis of {v : sum_j rows[i][j] v[j] = 0 for every i}, in a canonical order.
std::vector<ScalarRow> nullspace(const std::vector<ScalarRow>& rows, std::size_t columns,
                                 const Field& field);

/// Whether v lies in the span of the rows of `basis`.
bool in_span(const std::vector<ScalarRow>& basis, const ScalarRow& v);

} // namespace posetlie
