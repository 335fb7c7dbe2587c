#pragma once

#include <cstddef>
#include <cstdint>

namespace regset {

// Size limits shared by the group constructors, enumerators and searches.
struct Limits {
  std::size_t closure_cap = 5000;
  std::size_t enumeration_cap = 48;
  // Coset graphs with more vertices answer adjacency from the group table
  // instead of storing neighbour lists.
  std::size_t materialize_threshold = 4096;
  std::uint64_t search_node_budget = 20'000'000;

  // Defaults, with REGSET_MAX_ORDER (if set to a positive integer) replacing
  // the enumeration cap and raising the closure cap to at least that value.
  static Limits from_env();
};

}  // namespace regset
