#pragma once

#include "posetlie/edge_bijection.hpp"
#include "posetlie/poset.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace posetlie {

/// 1 < 2 < ... < n
Poset chain(std::size_t n);
/// K_{1,n}: x1 below y1..yn.
Poset star(std::size_t n);
/// The zigzag x1 < y1 > x2 < y2 > ... on n vertices.
Poset fence(std::size_t n);
/// Cr_n: x_i < y_i and x_{i+1} < y_i (indices mod n), n >= 2.
Poset crown(std::size_t n);
/// K_{m,n}: every x_i below every y_j.
Poset kmn(std::size_t m, std::size_t n);
/// 1 < 2 < {4,5}, 1 < 3 < {5,6}
Poset example6();
/// Two copies of a 10-element poset glued at the top element 10, with 7 split
/// into 7' and 7'' on the primed side.
Poset example20();

/// The monotone involution of example20() exchanging the two ~-classes.
EdgeBijection example20_theta(const Poset& example20);

/// Family selectors: chain:4, star:4, fence:5, crown:3, kmn:2x3, example:6, example:20.
/// Throws InvalidParameter.
Poset family(std::string_view selector);

/// The selectors the verification harness quantifies over.
const std::vector<std::string>& suite_selectors();

} // namespace posetlie
