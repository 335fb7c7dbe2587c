#pragma once

// Brute-force reference computations for the tests. Only the raw
// multiplication table is shared with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "regset/group.hpp"

namespace oracle {

using regset::Elem;
using regset::GroupTable;
using Set = std::set<Elem>;
using Perm = std::vector<std::uint32_t>;

// a then b
inline Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

inline std::set<Perm> closure(std::size_t degree, const std::vector<Perm>& gens) {
  Perm id(degree);
  for (std::uint32_t i = 0; i < degree; ++i) id[i] = i;
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        Perm q = compose(p, g);
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return seen;
}

inline Elem inverse(const GroupTable& g, Elem x) {
  for (Elem y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == 0) return y;
  return 0;
}

inline bool closed(const GroupTable& g, const Set& s) {
  if (!s.count(0)) return false;
  for (auto a : s)
    for (auto b : s)
      if (!s.count(g.mul(a, b))) return false;
  return true;
}

// Every subset containing 1 and closed under multiplication.
inline std::vector<Set> subgroups(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<Set> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    Set s{0};
    for (std::size_t i = 1; i < n; ++i)
      if (mask >> (i - 1) & 1) s.insert(static_cast<Elem>(i));
    if (closed(g, s)) out.push_back(s);
  }
  return out;
}

inline Set product(const GroupTable& g, const Set& a, const Set& b) {
  Set out;
  for (auto x : a)
    for (auto y : b) out.insert(g.mul(x, y));
  return out;
}

inline Set conjugate(const GroupTable& g, const Set& h, Elem x) {
  Set out;
  for (auto e : h) out.insert(g.mul(g.mul(inverse(g, x), e), x));
  return out;
}

inline Set normalizer(const GroupTable& g, const Set& h) {
  Set out;
  for (Elem x = 0; x < g.order(); ++x)
    if (conjugate(g, h, x) == h) out.insert(x);
  return out;
}

inline std::vector<Set> left_cosets(const GroupTable& g, const Set& h) {
  std::set<Set> cosets;
  for (Elem x = 0; x < g.order(); ++x) cosets.insert(product(g, {x}, h));
  return {cosets.begin(), cosets.end()};
}

inline std::vector<Set> double_cosets(const GroupTable& g, const Set& h) {
  std::set<Set> out;
  for (Elem x = 0; x < g.order(); ++x) out.insert(product(g, product(g, h, {x}), h));
  return {out.begin(), out.end()};
}

struct Graph {
  std::vector<Set> vertices;  // cosets
  std::vector<std::vector<bool>> adj;
};

// g1H ~ g2H iff some g1 in the first coset, g2 in the second has g1^-1 g2 in U.
inline Graph coset_graph(const GroupTable& g, const Set& h, const Set& u) {
  Graph out;
  out.vertices = left_cosets(g, h);
  const std::size_t n = out.vertices.size();
  out.adj.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (auto a : out.vertices[i])
        for (auto b : out.vertices[j])
          if (u.count(g.mul(inverse(g, a), b))) out.adj[i][j] = true;
  return out;
}

// Vertices whose coset lies in A.
inline std::vector<bool> inside(const Graph& gr, const Set& a) {
  std::vector<bool> out;
  for (const auto& v : gr.vertices) out.push_back(a.count(*v.begin()) > 0);
  return out;
}

// (r, s) if every member of C sees r members of C and every other vertex s;
// a side with no vertices reports 0.
inline std::optional<std::pair<std::size_t, std::size_t>> profile(const Graph& gr,
                                                                  const std::vector<bool>& c) {
  std::optional<std::size_t> r, s;
  for (std::size_t v = 0; v < gr.vertices.size(); ++v) {
    std::size_t cnt = 0;
    for (std::size_t w = 0; w < gr.vertices.size(); ++w)
      if (gr.adj[v][w] && c[w]) ++cnt;
    auto& slot = c[v] ? r : s;
    if (slot && *slot != cnt) return std::nullopt;
    slot = cnt;
  }
  return std::make_pair(r.value_or(0), s.value_or(0));
}

// Inverse-closed unions of double cosets outside H, as (D ∪ D^-1) blocks.
inline std::vector<Set> connection_blocks(const GroupTable& g, const Set& h) {
  std::set<Set> blocks;
  for (const auto& d : double_cosets(g, h)) {
    if (d.count(0)) continue;
    Set b = d;
    for (auto x : d) b.insert(inverse(g, x));
    for (const auto& e : double_cosets(g, h))
      if (e.count(inverse(g, *d.begin()))) b.insert(e.begin(), e.end());
    blocks.insert(b);
  }
  return {blocks.begin(), blocks.end()};
}

// Every (r, s) realised by the A-cosets over all valid connection sets. With
// A = G only r is meaningful and s is reported as every value in range.
inline std::set<std::pair<std::size_t, std::size_t>> achievable(const GroupTable& g, const Set& h,
                                                               const Set& a) {
  const auto blocks = connection_blocks(g, h);
  const std::size_t k = a.size() / h.size();
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << blocks.size()); ++mask) {
    Set u;
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (mask >> i & 1) u.insert(blocks[i].begin(), blocks[i].end());
    const Graph gr = coset_graph(g, h, u);
    const auto p = profile(gr, inside(gr, a));
    if (!p) continue;
    if (a.size() == g.order()) {
      for (std::size_t s = 0; s <= k; ++s) out.insert({p->first, s});
    } else {
      out.insert(*p);
    }
  }
  return out;
}

inline Set to_set(const std::vector<Elem>& v) { return {v.begin(), v.end()}; }

}  // namespace oracle
