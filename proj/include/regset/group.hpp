#pragma once

// Finite groups stored as complete multiplication tables.
//
// Elements are indices 0..n-1 and index 0 is always the identity. Every
// representative choice made anywhere in the library picks the minimum
// index, so all results are deterministic functions of the table.
//
// Conjugation is on the right: H^g := g^-1 H g.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regset/config.hpp"
#include "regset/error.hpp"

namespace regset {

using Elem = std::uint32_t;
// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<Elem>;
// Image list: p[i] is the image of point i.
using Permutation = std::vector<std::uint32_t>;

class GroupTable;
using Group = std::shared_ptr<const GroupTable>;

class GroupTable {
 public:
  static constexpr Elem kIdentity = 0;

  // Validates the Latin-square property, identity, inverses and
  // associativity (exhaustive up to 512 elements, 10^5 random triples
  // above). The identity is relabelled to index 0 if necessary.
  static Group from_table(const std::vector<std::vector<std::int64_t>>& matrix,
                          std::string label = {});

  // Group generated by permutations of 0..degree-1. The product a*b applies
  // a first, then b. Elements are numbered in breadth-first discovery order
  // from the identity, multiplying on the right by generators in input order.
  static Group from_generators(std::size_t degree,
                               const std::vector<Permutation>& generators,
                               std::size_t cap = Limits{}.closure_cap,
                               std::string label = {});

  // Table already known to be a group with identity 0 (row-major, n*n).
  static Group from_trusted(std::size_t order, std::vector<Elem> mult,
                            std::string label);

  std::size_t order() const noexcept { return order_; }
  Elem mul(Elem a, Elem b) const { return mult_[a * order_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem pow(Elem a, std::uint64_t k) const;
  std::size_t element_order(Elem a) const;
  bool is_involution(Elem a) const { return a != kIdentity && mul(a, a) == kIdentity; }

  const std::string& label() const noexcept { return label_; }
  std::vector<std::vector<Elem>> rows() const;
  bool operator==(const GroupTable& other) const { return mult_ == other.mult_; }

 private:
  GroupTable(std::size_t order, std::vector<Elem> mult, std::string label);

  std::size_t order_;
  std::vector<Elem> mult_;
  std::vector<Elem> inv_;
  std::string label_;
};

// Breadth-first closure of `generators` under `compose`, returning the
// multiplication table. T must be totally ordered. Shared by
// GroupTable::from_generators and the matrix/pair-based presets.
template <class T, class Compose>
Group close_under(const T& identity, const std::vector<T>& generators, Compose compose,
                  std::size_t cap, std::string label) {
  std::vector<T> elements{identity};
  std::map<T, Elem> index{{identity, 0}};
  // right[i * g + k] = index of elements[i] * generators[k]
  const std::size_t ngen = generators.size();
  std::vector<Elem> right;
  std::vector<Elem> parent{0};
  std::vector<std::size_t> via{0};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t k = 0; k < ngen; ++k) {
      T next = compose(elements[i], generators[k]);
      auto it = index.find(next);
      if (it == index.end()) {
        if (elements.size() >= cap) {
          throw Error(ErrorCode::ClosureExceedsCap,
                      "closure exceeds " + std::to_string(cap) + " elements");
        }
        Elem id = static_cast<Elem>(elements.size());
        it = index.emplace(next, id).first;
        elements.push_back(std::move(next));
        parent.push_back(static_cast<Elem>(i));
        via.push_back(k);
      }
      right.push_back(it->second);
    }
  }
  const std::size_t n = elements.size();
  std::vector<Elem> mult(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    mult[i * n] = static_cast<Elem>(i);
    // elements[j] = elements[parent[j]] * generators[via[j]], parent[j] < j
    for (std::size_t j = 1; j < n; ++j) {
      Elem left = mult[i * n + parent[j]];
      mult[i * n + j] = right[left * ngen + via[j]];
    }
  }
  return GroupTable::from_trusted(n, std::move(mult), std::move(label));
}

namespace detail {
struct SubgroupAccess;
}

// A subgroup of a GroupTable. Immutable; members are sorted.
class Subgroup {
 public:
  // Validates that `members` contains the identity and is closed under
  // multiplication and inversion; throws NotSubgroup otherwise.
  Subgroup(Group parent, ElementSet members);

  static Subgroup trivial(Group parent);
  static Subgroup whole(Group parent);

  const Group& parent() const noexcept { return parent_; }
  const GroupTable& group() const noexcept { return *parent_; }
  const ElementSet& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  std::size_t index() const noexcept { return parent_->order() / members_.size(); }
  bool contains(Elem g) const { return g < mask_.size() && mask_[g]; }
  const std::vector<bool>& mask() const noexcept { return mask_; }

  bool operator==(const Subgroup& other) const { return members_ == other.members_; }
  // Ordered by (order, member list).
  std::strong_ordering operator<=>(const Subgroup& other) const;

 private:
  friend struct detail::SubgroupAccess;
  struct Trusted {};
  Subgroup(Trusted, Group parent, ElementSet members);

  Group parent_;
  ElementSet members_;
  std::vector<bool> mask_;
};

// base/kernel for a kernel normal in base (both subgroups of one parent).
// Cosets are numbered by increasing minimum element; coset 0 is the kernel.
class QuotientGroup {
 public:
  QuotientGroup(Subgroup base, Subgroup kernel, Group table,
                std::vector<std::optional<Elem>> projection, std::vector<Elem> section);

  const Subgroup& base() const noexcept { return base_; }
  const Subgroup& kernel() const noexcept { return kernel_; }
  const Group& table() const noexcept { return table_; }

  bool in_domain(Elem g) const { return g < projection_.size() && projection_[g].has_value(); }
  // Throws PreconditionViolated when g lies outside the base subgroup.
  Elem project(Elem g) const;
  Elem section(Elem coset) const { return section_.at(coset); }

  // Image of a subgroup of the base.
  Subgroup image(const Subgroup& sub) const;
  // All base elements mapping into `cosets`.
  ElementSet preimage(std::span<const Elem> cosets) const;

 private:
  Subgroup base_;
  Subgroup kernel_;
  Group table_;
  std::vector<std::optional<Elem>> projection_;
  std::vector<Elem> section_;
};

// Sorted, deduplicated copy.
ElementSet make_set(std::vector<Elem> elems);
ElementSet set_intersection(std::span<const Elem> a, std::span<const Elem> b);
ElementSet set_union(std::span<const Elem> a, std::span<const Elem> b);
ElementSet set_difference(std::span<const Elem> a, std::span<const Elem> b);
ElementSet inverse_set(const GroupTable& g, std::span<const Elem> s);

Subgroup generate_subgroup(const Group& g, std::span<const Elem> seed);
// H^g = g^-1 H g.
Subgroup conjugate_subgroup(const Subgroup& h, Elem g);
// N_G(H), G being the parent of H.
Subgroup normalizer(const Subgroup& h);
// N_K(H) = K ∩ N_G(H).
Subgroup normalizer(const Subgroup& k, const Subgroup& h);
Subgroup intersect(const Subgroup& h, const Subgroup& k);
ElementSet set_product(const GroupTable& g, std::span<const Elem> a, std::span<const Elem> b);
bool is_subgroup_of(const Subgroup& h, const Subgroup& k);
// True iff H^k = H for every k in K.
bool is_normal(const Subgroup& h, const Subgroup& k);
// Throws NotNormal unless kernel is a normal subgroup of base.
QuotientGroup quotient(const Subgroup& base, const Subgroup& kernel);
// Sylow p-subgroup of A grown one factor p at a time through normalizers.
Subgroup sylow_subgroup(const Subgroup& a, std::uint64_t p);
// Every subgroup sorted by (order, members). Throws OrderExceedsCap.
std::vector<Subgroup> all_subgroups(const Group& g, std::size_t cap = Limits{}.enumeration_cap);
// Some y in xA with y^2 = 1 and y != 1. Callers pass x outside A.
bool involution_exists_in_coset(const Subgroup& a, Elem x);

// Left coset xS of an arbitrary subset S.
ElementSet left_translate(const GroupTable& g, Elem x, std::span<const Elem> s);

}  // namespace regset
