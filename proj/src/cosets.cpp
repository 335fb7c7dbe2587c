#include "regset/cosets.hpp"

#include <algorithm>

namespace regset {

ElementSet CosetSpace::coset(std::size_t i) const {
  return left_translate(group(), reps.at(i), subgroup.members());
}

std::vector<std::pair<std::size_t, std::size_t>> DoubleCosetDecomp::inverse_pairing() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (inverse_index[i]) out.emplace_back(i, *inverse_index[i]);
  return out;
}

bool DoubleCosetDecomp::inverse_closed() const {
  return std::all_of(inverse_index.begin(), inverse_index.end(),
                     [](const auto& j) { return j.has_value(); });
}

std::optional<std::size_t> DoubleCosetDecomp::class_of(Elem g) const {
  if (g >= class_index.size() || class_index[g] == npos) return std::nullopt;
  return class_index[g];
}

CosetSpace left_cosets(const Subgroup& h) {
  const auto& g = h.group();
  CosetSpace space{h, {}, std::vector<std::size_t>(g.order(), npos)};
  space.reps.reserve(h.index());
  for (Elem x = 0; x < g.order(); ++x) {
    if (space.coset_of[x] != npos) continue;
    const std::size_t c = space.reps.size();
    space.reps.push_back(x);
    for (auto k : h.members()) space.coset_of[g.mul(x, k)] = c;
  }
  return space;
}

std::vector<Elem> left_transversal(const Subgroup& a) { return left_cosets(a).reps; }

ElementSet double_coset(const Subgroup& h, Elem x) {
  const auto& g = h.group();
  std::vector<bool> hit(g.order(), false);
  for (auto a : h.members()) {
    const Elem ax = g.mul(a, x);
    for (auto b : h.members()) hit[g.mul(ax, b)] = true;
  }
  ElementSet out;
  for (Elem z = 0; z < g.order(); ++z)
    if (hit[z]) out.push_back(z);
  return out;
}

DoubleCosetDecomp decompose_into_double_cosets(std::span<const Elem> s, const Subgroup& h) {
  const auto& g = h.group();
  std::vector<bool> in_s(g.order(), false);
  for (auto x : s) in_s.at(x) = true;

  DoubleCosetDecomp out{h, {}, {}, {}, {}, std::vector<std::size_t>(g.order(), npos)};
  for (Elem x = 0; x < g.order(); ++x) {
    if (!in_s[x] || out.class_index[x] != npos) continue;
    ElementSet cls = double_coset(h, x);
    const std::size_t id = out.reps.size();
    for (auto y : cls) {
      if (!in_s[y]) {
        throw Error(ErrorCode::NotDoubleCosetUnion, "double coset straddles the set boundary", y);
      }
      out.class_index[y] = id;
    }
    out.reps.push_back(x);
    out.member_sets.push_back(std::move(cls));
  }
  out.inverse_index.resize(out.size());
  out.self_inverse.resize(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t j = out.class_index[g.inv(out.reps[i])];
    if (j != npos) out.inverse_index[i] = j;
    out.self_inverse[i] = (j == i);
  }
  return out;
}

std::size_t left_coset_count(std::span<const Elem> u, const Subgroup& h) {
  const auto& g = h.group();
  std::vector<bool> in_u(g.order(), false);
  for (auto x : u) in_u.at(x) = true;
  for (auto x : u)
    for (auto k : h.members())
      if (!in_u[g.mul(x, k)]) {
        throw Error(ErrorCode::NotLeftCosetUnion, "set is not a union of left cosets", x);
      }
  std::size_t distinct = 0;
  for (bool b : in_u) distinct += b ? 1 : 0;
  return distinct / h.order();
}

std::size_t conj_index(const Subgroup& h, Elem t) {
  return h.order() / intersect(h, conjugate_subgroup(h, t)).order();
}

}  // namespace regset
