#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "oracle.hpp"
#include "regset/group.hpp"
#include "regset/presets.hpp"

namespace testing {

using oracle::Perm;
using regset::Elem;

// Permutation group with elements numbered as GroupTable::from_generators
// documents: breadth-first from the identity, right multiplication by the
// generators in order.
struct PermGroup {
  regset::Group group;
  std::vector<Perm> elements;

  Elem index(const Perm& p) const {
    return static_cast<Elem>(std::find(elements.begin(), elements.end(), p) - elements.begin());
  }
  Elem cycle(std::initializer_list<std::uint32_t> pts) const {
    Perm p(elements.front().size());
    for (std::uint32_t i = 0; i < p.size(); ++i) p[i] = i;
    std::vector<std::uint32_t> v(pts);
    for (std::size_t i = 0; i < v.size(); ++i) p[v[i]] = v[(i + 1) % v.size()];
    return index(p);
  }
};

inline PermGroup perm_group(std::size_t degree, const std::vector<Perm>& gens) {
  PermGroup out;
  Perm id(degree);
  for (std::uint32_t i = 0; i < degree; ++i) id[i] = i;
  out.elements.push_back(id);
  for (std::size_t i = 0; i < out.elements.size(); ++i)
    for (const auto& g : gens) {
      Perm q = oracle::compose(out.elements[i], g);
      if (std::find(out.elements.begin(), out.elements.end(), q) == out.elements.end())
        out.elements.push_back(q);
    }
  out.group = regset::GroupTable::from_generators(degree, gens);
  return out;
}

// S3 from (0 1 2) and (0 1).
inline PermGroup s3() { return perm_group(3, {{1, 2, 0}, {1, 0, 2}}); }

inline regset::Subgroup sub(const regset::Group& g, std::vector<Elem> elems) {
  return regset::generate_subgroup(g, elems);
}

inline regset::ElementSet members(const oracle::Set& s) { return {s.begin(), s.end()}; }

// Corpus groups up to a given order.
inline std::vector<regset::Group> corpus_upto(std::size_t order) {
  std::vector<regset::Group> out;
  for (auto& g : regset::corpus_groups())
    if (g->order() <= order) out.push_back(g);
  return out;
}

}  // namespace testing
