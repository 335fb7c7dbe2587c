#include "regset/group.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <random>
#include <set>

namespace regset {

namespace detail {
struct SubgroupAccess {
  static Subgroup make(Group parent, ElementSet members) {
    return Subgroup(Subgroup::Trusted{}, std::move(parent), std::move(members));
  }
};
}  // namespace detail

namespace {

using detail::SubgroupAccess;

constexpr std::size_t kFullAssociativityLimit = 512;
constexpr std::size_t kRandomTriples = 100'000;

}  // namespace

// ---------------------------------------------------------------------------
// GroupTable

GroupTable::GroupTable(std::size_t order, std::vector<Elem> mult, std::string label)
    : order_(order), mult_(std::move(mult)), inv_(order, 0), label_(std::move(label)) {
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = 0; b < order_; ++b) {
      if (mult_[a * order_ + b] == kIdentity) {
        inv_[a] = b;
        break;
      }
    }
  }
}

Group GroupTable::from_trusted(std::size_t order, std::vector<Elem> mult, std::string label) {
  return Group(new GroupTable(order, std::move(mult), std::move(label)));
}

Group GroupTable::from_table(const std::vector<std::vector<std::int64_t>>& matrix,
                             std::string label) {
  const std::size_t n = matrix.size();
  if (n == 0) throw Error(ErrorCode::NotLatinSquare, "empty table");
  for (const auto& row : matrix) {
    if (row.size() != n) throw Error(ErrorCode::NotLatinSquare, "table is not square");
    for (auto v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw Error(ErrorCode::NotLatinSquare, "entry out of range: " + std::to_string(v));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      auto r = static_cast<std::size_t>(matrix[i][j]);
      auto c = static_cast<std::size_t>(matrix[j][i]);
      if (seen_row[r]) throw Error(ErrorCode::NotLatinSquare, "repeated entry in row", i);
      if (seen_col[c]) throw Error(ErrorCode::NotLatinSquare, "repeated entry in column", i);
      seen_row[r] = seen_col[c] = true;
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(matrix[a][b]); };

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorCode::NoIdentity, "no two-sided identity");
  const std::size_t e = *identity;

  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = at(a, b) == e && at(b, a) == e;
    if (!found) throw Error(ErrorCode::NoInverse, "element has no inverse", a);
  }

  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    return at(at(a, b), c) == at(a, at(b, c));
  };
  if (n <= kFullAssociativityLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw Error(ErrorCode::NotAssociative, "non-associative triple", a);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < kRandomTriples; ++i) {
      std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (!assoc(a, b, c)) throw Error(ErrorCode::NotAssociative, "non-associative triple", a);
    }
  }

  // Swap labels e <-> 0 so the identity is element 0.
  auto relabel = [&](std::size_t x) -> Elem {
    if (x == e) return 0;
    if (x == 0) return static_cast<Elem>(e);
    return static_cast<Elem>(x);
  };
  std::vector<Elem> mult(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mult[relabel(a) * n + relabel(b)] = relabel(at(a, b));
  return from_trusted(n, std::move(mult), std::move(label));
}

Group GroupTable::from_generators(std::size_t degree, const std::vector<Permutation>& generators,
                                  std::size_t cap, std::string label) {
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& p = generators[k];
    if (p.size() != degree) {
      throw Error(ErrorCode::InvalidPermutation,
                  "generator " + std::to_string(k) + " has wrong degree", k);
    }
    std::vector<bool> hit(degree, false);
    for (auto img : p) {
      if (img >= degree || hit[img]) {
        throw Error(ErrorCode::InvalidPermutation,
                    "generator " + std::to_string(k) + " is not a bijection", k);
      }
      hit[img] = true;
    }
  }
  Permutation identity(degree);
  std::iota(identity.begin(), identity.end(), 0u);
  auto compose = [](const Permutation& a, const Permutation& b) {
    Permutation c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
    return c;
  };
  return close_under(identity, generators, compose, cap, std::move(label));
}

Elem GroupTable::pow(Elem a, std::uint64_t k) const {
  Elem result = kIdentity;
  Elem base = a;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    base = mul(base, base);
    k >>= 1u;
  }
  return result;
}

std::size_t GroupTable::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != kIdentity; x = mul(x, a)) ++k;
  return k;
}

std::vector<std::vector<Elem>> GroupTable::rows() const {
  std::vector<std::vector<Elem>> out(order_);
  for (std::size_t a = 0; a < order_; ++a)
    out[a].assign(mult_.begin() + static_cast<std::ptrdiff_t>(a * order_),
                  mult_.begin() + static_cast<std::ptrdiff_t>((a + 1) * order_));
  return out;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(Trusted, Group parent, ElementSet members)
    : parent_(std::move(parent)), members_(std::move(members)), mask_(parent_->order(), false) {
  for (auto m : members_) mask_[m] = true;
}

Subgroup::Subgroup(Group parent, ElementSet members)
    : Subgroup(Trusted{}, std::move(parent), make_set(std::move(members))) {
  const auto& g = *parent_;
  for (auto m : members_) {
    if (m >= g.order()) throw Error(ErrorCode::NotSubgroup, "element out of range", m);
  }
  if (members_.empty() || members_.front() != GroupTable::kIdentity) {
    throw Error(ErrorCode::NotSubgroup, "identity missing");
  }
  for (auto a : members_) {
    if (!contains(g.inv(a))) throw Error(ErrorCode::NotSubgroup, "not inverse-closed", a);
    for (auto b : members_) {
      if (!contains(g.mul(a, b))) throw Error(ErrorCode::NotSubgroup, "not closed", a);
    }
  }
}

Subgroup Subgroup::trivial(Group parent) {
  return Subgroup(Trusted{}, std::move(parent), ElementSet{GroupTable::kIdentity});
}

Subgroup Subgroup::whole(Group parent) {
  ElementSet all(parent->order());
  std::iota(all.begin(), all.end(), 0u);
  return Subgroup(Trusted{}, std::move(parent), std::move(all));
}

std::strong_ordering Subgroup::operator<=>(const Subgroup& other) const {
  if (auto c = order() <=> other.order(); c != 0) return c;
  return members_ <=> other.members_;
}

// ---------------------------------------------------------------------------
// QuotientGroup

QuotientGroup::QuotientGroup(Subgroup base, Subgroup kernel, Group table,
                             std::vector<std::optional<Elem>> projection,
                             std::vector<Elem> section)
    : base_(std::move(base)),
      kernel_(std::move(kernel)),
      table_(std::move(table)),
      projection_(std::move(projection)),
      section_(std::move(section)) {}

Elem QuotientGroup::project(Elem g) const {
  if (!in_domain(g)) {
    throw Error(ErrorCode::PreconditionViolated, "element outside the quotient's base", g);
  }
  return *projection_[g];
}

Subgroup QuotientGroup::image(const Subgroup& sub) const {
  std::vector<Elem> cosets;
  cosets.reserve(sub.order());
  for (auto g : sub.members()) cosets.push_back(project(g));
  return SubgroupAccess::make(table_, make_set(std::move(cosets)));
}

ElementSet QuotientGroup::preimage(std::span<const Elem> cosets) const {
  std::vector<bool> wanted(table_->order(), false);
  for (auto c : cosets) wanted.at(c) = true;
  ElementSet out;
  for (auto g : base_.members())
    if (wanted[*projection_[g]]) out.push_back(g);
  return out;
}

// ---------------------------------------------------------------------------
// Set helpers

ElementSet make_set(std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return elems;
}

ElementSet set_intersection(std::span<const Elem> a, std::span<const Elem> b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet set_union(std::span<const Elem> a, std::span<const Elem> b) {
  ElementSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet set_difference(std::span<const Elem> a, std::span<const Elem> b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet inverse_set(const GroupTable& g, std::span<const Elem> s) {
  std::vector<Elem> out;
  out.reserve(s.size());
  for (auto x : s) out.push_back(g.inv(x));
  return make_set(std::move(out));
}

ElementSet left_translate(const GroupTable& g, Elem x, std::span<const Elem> s) {
  std::vector<Elem> out;
  out.reserve(s.size());
  for (auto y : s) out.push_back(g.mul(x, y));
  return make_set(std::move(out));
}

ElementSet set_product(const GroupTable& g, std::span<const Elem> a, std::span<const Elem> b) {
  std::vector<bool> hit(g.order(), false);
  for (auto x : a)
    for (auto y : b) hit[g.mul(x, y)] = true;
  ElementSet out;
  for (Elem z = 0; z < g.order(); ++z)
    if (hit[z]) out.push_back(z);
  return out;
}

// ---------------------------------------------------------------------------
// Subgroup operations

namespace {

// Closure of {1} under right multiplication by `gens`; in a finite group
// this is the generated subgroup.
ElementSet close(const GroupTable& g, std::span<const Elem> gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> elems{GroupTable::kIdentity};
  seen[GroupTable::kIdentity] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (auto s : gens) {
      Elem next = g.mul(elems[i], s);
      if (!seen[next]) {
        seen[next] = true;
        elems.push_back(next);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace

Subgroup generate_subgroup(const Group& g, std::span<const Elem> seed) {
  std::vector<Elem> gens;
  for (auto s : seed) {
    if (s >= g->order()) throw Error(ErrorCode::PreconditionViolated, "seed element out of range", s);
    if (s != GroupTable::kIdentity) gens.push_back(s);
  }
  gens = make_set(std::move(gens));
  return SubgroupAccess::make(g, close(*g, gens));
}

Subgroup conjugate_subgroup(const Subgroup& h, Elem g) {
  const auto& grp = h.group();
  std::vector<Elem> out;
  out.reserve(h.order());
  const Elem gi = grp.inv(g);
  for (auto x : h.members()) out.push_back(grp.mul(grp.mul(gi, x), g));
  return SubgroupAccess::make(h.parent(), make_set(std::move(out)));
}

namespace {

bool normalizes(const Subgroup& h, Elem g) {
  const auto& grp = h.group();
  const Elem gi = grp.inv(g);
  for (auto x : h.members())
    if (!h.contains(grp.mul(grp.mul(gi, x), g))) return false;
  return true;
}

}  // namespace

Subgroup normalizer(const Subgroup& h) {
  ElementSet out;
  for (Elem g = 0; g < h.group().order(); ++g)
    if (normalizes(h, g)) out.push_back(g);
  return SubgroupAccess::make(h.parent(), std::move(out));
}

Subgroup normalizer(const Subgroup& k, const Subgroup& h) {
  ElementSet out;
  for (auto g : k.members())
    if (normalizes(h, g)) out.push_back(g);
  return SubgroupAccess::make(h.parent(), std::move(out));
}

Subgroup intersect(const Subgroup& h, const Subgroup& k) {
  return SubgroupAccess::make(h.parent(), set_intersection(h.members(), k.members()));
}

bool is_subgroup_of(const Subgroup& h, const Subgroup& k) {
  return std::includes(k.members().begin(), k.members().end(), h.members().begin(),
                       h.members().end());
}

bool is_normal(const Subgroup& h, const Subgroup& k) {
  for (auto g : k.members())
    if (!normalizes(h, g)) return false;
  return true;
}

QuotientGroup quotient(const Subgroup& base, const Subgroup& kernel) {
  if (!is_subgroup_of(kernel, base) || !is_normal(kernel, base)) {
    throw Error(ErrorCode::NotNormal, "kernel is not a normal subgroup of the base");
  }
  const auto& g = base.group();
  std::vector<std::optional<Elem>> projection(g.order());
  std::vector<Elem> section;
  for (auto x : base.members()) {
    if (projection[x]) continue;
    const auto c = static_cast<Elem>(section.size());
    section.push_back(x);
    for (auto k : kernel.members()) projection[g.mul(x, k)] = c;
  }
  const std::size_t n = section.size();
  std::vector<Elem> mult(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mult[a * n + b] = *projection[g.mul(section[a], section[b])];
  auto table = GroupTable::from_trusted(n, std::move(mult), g.label() + "/K");
  return QuotientGroup(base, kernel, std::move(table), std::move(projection), std::move(section));
}

Subgroup sylow_subgroup(const Subgroup& a, std::uint64_t p) {
  const std::size_t order = a.order();
  if (p < 2 || order % p != 0) {
    throw Error(ErrorCode::PNotDividing, std::to_string(p) + " does not divide the order");
  }
  std::size_t target = 1;
  for (std::size_t rest = order; rest % p == 0; rest /= p) target *= p;

  const auto& g = a.group();
  Subgroup current = Subgroup::trivial(a.parent());
  std::vector<Elem> gens;
  while (current.order() < target) {
    // p divides |N_A(P) : P| while P is not Sylow; pick the least x in the
    // normalizer whose image in N_A(P)/P has order p.
    const Subgroup norm = normalizer(a, current);
    std::optional<Elem> pick;
    for (auto x : norm.members()) {
      if (!current.contains(x) && current.contains(g.pow(x, p))) {
        pick = x;
        break;
      }
    }
    if (!pick) throw Error(ErrorCode::ConstructionFailed, "no p-element in normalizer quotient");
    gens.push_back(*pick);
    current = SubgroupAccess::make(a.parent(), close(g, gens));
  }
  return current;
}

std::vector<Subgroup> all_subgroups(const Group& g, std::size_t cap) {
  if (g->order() > cap) {
    throw Error(ErrorCode::OrderExceedsCap,
                "order " + std::to_string(g->order()) + " exceeds cap " + std::to_string(cap));
  }
  // Every subgroup is a join of cyclic subgroups, so joining with cyclic
  // generators until nothing new appears reaches all of them.
  std::vector<Elem> cyclic_gens;
  std::set<ElementSet> cyclic_seen;
  for (Elem x = 0; x < g->order(); ++x) {
    const Elem one[] = {x};
    if (cyclic_seen.insert(close(*g, x == 0 ? std::span<const Elem>{} : std::span<const Elem>(one)))
            .second) {
      cyclic_gens.push_back(x);
    }
  }

  std::map<ElementSet, std::vector<Elem>> found;  // members -> generators
  std::vector<const ElementSet*> work;
  auto add = [&](ElementSet members, std::vector<Elem> gens) {
    auto [it, inserted] = found.emplace(std::move(members), std::move(gens));
    if (inserted) work.push_back(&it->first);
  };
  for (auto x : cyclic_gens) {
    std::vector<Elem> gens;
    if (x != 0) gens.push_back(x);
    add(close(*g, gens), gens);
  }
  while (!work.empty()) {
    const ElementSet* members = work.back();
    work.pop_back();
    const std::vector<Elem> gens = found.at(*members);
    std::vector<bool> in(g->order(), false);
    for (auto m : *members) in[m] = true;
    for (auto x : cyclic_gens) {
      if (in[x]) continue;
      auto joined = gens;
      joined.push_back(x);
      add(close(*g, joined), joined);
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& [members, gens] : found) out.push_back(SubgroupAccess::make(g, members));
  std::sort(out.begin(), out.end());
  return out;
}

bool involution_exists_in_coset(const Subgroup& a, Elem x) {
  const auto& g = a.group();
  for (auto y : a.members())
    if (g.is_involution(g.mul(x, y))) return true;
  return false;
}

}  // namespace regset
