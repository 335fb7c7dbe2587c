#include "regset/coset_graph.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace regset {

ConnectionSet::ConnectionSet(Subgroup h, ElementSet members)
    : subgroup_(std::move(h)), members_(std::move(members)), mask_(subgroup_.group().order(), false) {
  for (auto m : members_) mask_[m] = true;
}

ConnectionSet validate_connection_set(const Subgroup& h, std::span<const Elem> u) {
  const auto& g = h.group();
  ElementSet members = make_set({u.begin(), u.end()});
  for (auto x : members) {
    if (x >= g.order()) throw Error(ErrorCode::PreconditionViolated, "element out of range", x);
    if (h.contains(x)) throw Error(ErrorCode::IntersectsH, "U meets H", x);
  }
  ConnectionSet out(h, std::move(members));
  for (auto x : out.members())
    if (!out.contains(g.inv(x))) throw Error(ErrorCode::NotInverseClosed, "U is not inverse-closed", x);
  for (auto x : out.members())
    for (auto a : h.members()) {
      const Elem ax = g.mul(a, x);
      for (auto b : h.members())
        if (!out.contains(g.mul(ax, b))) {
          throw Error(ErrorCode::NotDoubleCosetUnion, "HUH is larger than U", x);
        }
    }
  return out;
}

CosetGraph::CosetGraph(CosetSpace space, ConnectionSet connection,
                       std::size_t materialize_threshold)
    : space_(std::move(space)), connection_(std::move(connection)) {
  if (vertex_count() <= materialize_threshold) {
    adjacency_.reserve(vertex_count());
    for (Vertex v = 0; v < vertex_count(); ++v) adjacency_.push_back(compute_neighbors(v));
  }
}

VertexSet CosetGraph::compute_neighbors(Vertex v) const {
  // Neighbours of gH are the cosets g u H, u ∈ U.
  const auto& g = space_.group();
  const Elem rep = space_.reps[v];
  VertexSet out;
  out.reserve(connection_.members().size());
  for (auto u : connection_.members()) out.push_back(space_.coset_of[g.mul(rep, u)]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  assert(!std::binary_search(out.begin(), out.end(), v) && "loop in coset graph");
  return out;
}

bool CosetGraph::adjacent(Vertex u, Vertex v) const {
  const auto& g = space_.group();
  return connection_.contains(g.mul(g.inv(space_.reps[u]), space_.reps[v]));
}

VertexSet CosetGraph::neighbors(Vertex v) const {
  if (!adjacency_.empty()) return adjacency_[v];
  return compute_neighbors(v);
}

std::vector<std::pair<Vertex, Vertex>> CosetGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (auto v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

CosetGraph build(const ConnectionSet& u, std::size_t materialize_threshold) {
  return CosetGraph(left_cosets(u.subgroup()), u, materialize_threshold);
}

std::optional<RegularityProfile> profile_subset(const CosetGraph& graph, std::span<const Vertex> c) {
  const std::size_t n = graph.vertex_count();
  std::vector<bool> in_c(n, false);
  std::size_t size = 0;
  for (auto v : c) {
    if (!in_c.at(v)) ++size;
    in_c[v] = true;
  }
  std::optional<std::size_t> r, s;
  for (Vertex v = 0; v < n; ++v) {
    std::size_t hits = 0;
    for (auto w : graph.neighbors(v)) hits += in_c[w] ? 1 : 0;
    auto& slot = in_c[v] ? r : s;
    if (slot && *slot != hits) return std::nullopt;
    slot = hits;
  }
  return RegularityProfile{r.value_or(0), s.value_or(0), size == 0 || size == n};
}

bool is_perfect_code(const CosetGraph& graph, std::span<const Vertex> c) {
  auto p = profile_subset(graph, c);
  if (!p || p->r != 0) return false;
  // With no outside vertex the s-component is vacuous; an independent C
  // covering everything is a perfect code.
  return p->s == 1 || (p->degenerate && !c.empty());
}

QuotientMatrix quotient_matrix(const CosetGraph& graph, const std::vector<VertexSet>& cells) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::size_t> cell_of(n, npos);
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (auto v : cells[i]) {
      if (v >= n || cell_of[v] != npos) {
        throw Error(ErrorCode::PreconditionViolated, "cells do not partition the vertices", v);
      }
      cell_of[v] = i;
    }
  for (Vertex v = 0; v < n; ++v)
    if (cell_of[v] == npos) throw Error(ErrorCode::PreconditionViolated, "vertex in no cell", v);

  const std::size_t k = cells.size();
  QuotientMatrix m{cells, std::vector<std::vector<std::size_t>>(k, std::vector<std::size_t>(k, 0))};
  std::vector<bool> row_set(k, false);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<std::size_t> counts(k, 0);
    for (auto w : graph.neighbors(v)) ++counts[cell_of[w]];
    const std::size_t i = cell_of[v];
    if (!row_set[i]) {
      m.entries[i] = counts;
      row_set[i] = true;
    } else if (m.entries[i] != counts) {
      throw Error(ErrorCode::NotEquitable,
                  "vertex " + std::to_string(v) + " disagrees with its cell", v);
    }
  }
  return m;
}

std::optional<std::pair<std::int64_t, std::int64_t>> two_cell_eigenvalues(const QuotientMatrix& m) {
  if (m.entries.size() != 2) return std::nullopt;
  const auto a = static_cast<std::int64_t>(m.entries[0][0]);
  const auto b = static_cast<std::int64_t>(m.entries[0][1]);
  const auto c = static_cast<std::int64_t>(m.entries[1][0]);
  const auto d = static_cast<std::int64_t>(m.entries[1][1]);
  // x^2 - (a+d) x + (ad - bc)
  const std::int64_t trace = a + d;
  const std::int64_t det = a * d - b * c;
  const std::int64_t disc = trace * trace - 4 * det;
  if (disc < 0) return std::nullopt;
  auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(disc))));
  while (root * root > disc) --root;
  while ((root + 1) * (root + 1) <= disc) ++root;
  if (root * root != disc || (trace + root) % 2 != 0) return std::nullopt;
  return std::pair{(trace + root) / 2, (trace - root) / 2};
}

VertexSet cosets_inside(const CosetSpace& space, const Subgroup& a) {
  VertexSet out;
  for (Vertex v = 0; v < space.size(); ++v)
    if (a.contains(space.reps[v])) out.push_back(v);
  return out;
}

void write_edge_list(std::ostream& out, const CosetGraph& graph) {
  out << "{\"vertices\":" << graph.vertex_count() << ",\"representatives\":[";
  for (std::size_t i = 0; i < graph.space().reps.size(); ++i)
    out << (i ? "," : "") << graph.space().reps[i];
  out << "]}\n";
  for (auto [u, v] : graph.edges()) out << u << ' ' << v << '\n';
}

}  // namespace regset
