#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "regset/group.hpp"

namespace regset {

// Left cosets gH of a subgroup, each represented by its least element.
// Coset 0 is H itself.
struct CosetSpace {
  Subgroup subgroup;
  std::vector<Elem> reps;
  std::vector<std::size_t> coset_of;

  std::size_t size() const noexcept { return reps.size(); }
  const GroupTable& group() const noexcept { return subgroup.group(); }
  ElementSet coset(std::size_t i) const;
};

// (H,H)-double cosets covering some subset S of the group.
struct DoubleCosetDecomp {
  Subgroup subgroup;
  std::vector<Elem> reps;                 // least element of each class, ascending
  std::vector<ElementSet> member_sets;
  // Index of the class containing reps[i]^-1, or nullopt when that class
  // lies outside S.
  std::vector<std::optional<std::size_t>> inverse_index;
  std::vector<bool> self_inverse;

  std::size_t size() const noexcept { return reps.size(); }
  // (i, j) pairs with j the class of reps[i]^-1; classes whose partner is
  // outside S are omitted.
  std::vector<std::pair<std::size_t, std::size_t>> inverse_pairing() const;
  bool inverse_closed() const;
  // Class containing g, if any.
  std::optional<std::size_t> class_of(Elem g) const;

  std::vector<std::size_t> class_index;  // per element; npos outside S
};

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

CosetSpace left_cosets(const Subgroup& h);
std::vector<Elem> left_transversal(const Subgroup& a);
ElementSet double_coset(const Subgroup& h, Elem x);
// Throws NotDoubleCosetUnion if some HxH meets S without lying inside it.
DoubleCosetDecomp decompose_into_double_cosets(std::span<const Elem> s, const Subgroup& h);
// |U| / |H|; throws NotLeftCosetUnion unless U H = U.
std::size_t left_coset_count(std::span<const Elem> u, const Subgroup& h);
// |H| / |H ∩ H^t|, which also equals |HtH| / |H|.
std::size_t conj_index(const Subgroup& h, Elem t);

}  // namespace regset
