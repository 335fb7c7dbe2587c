#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "regset/group.hpp"

namespace regset {

Group make_cyclic(std::size_t n);
// Symmetries of the regular n-gon, order 2n.
Group make_dihedral(std::size_t n);
Group make_quaternion8();
Group make_symmetric(std::size_t n);
Group make_alternating(std::size_t n);
// 2x2 matrices of determinant 1 over the field with 3 elements.
Group make_sl23();
Group make_klein4();
// Elements (a, b) numbered a * |B| + b.
Group direct_product(const Group& a, const Group& b);
// C_m ⋊ C_n with the generator of C_n acting as x -> x^k; needs k^n = 1 mod m.
Group make_metacyclic(std::size_t m, std::size_t n, std::size_t k, std::string label);
// <a, x | a^(2n) = 1, x^2 = a^n, x^-1 a x = a^-1>, order 4n.
Group make_dicyclic(std::size_t n);

// Catalog of every group of order 1..16, one entry per isomorphism class,
// indexed 1..count within each order.
std::size_t small_group_count(std::size_t order);
Group make_small_group(std::size_t order, std::size_t index);

// All groups of order <= 16 followed by S4, D12 (order 24) and SL(2,3).
std::vector<Group> corpus_groups();

}  // namespace regset
