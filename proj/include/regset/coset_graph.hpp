#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "regset/config.hpp"
#include "regset/cosets.hpp"
#include "regset/group.hpp"

namespace regset {

// U with U ∩ H = ∅, U = U^-1 and HUH = U.
class ConnectionSet {
 public:
  const Subgroup& subgroup() const noexcept { return subgroup_; }
  const ElementSet& members() const noexcept { return members_; }
  bool contains(Elem g) const { return mask_[g]; }
  std::size_t degree() const noexcept { return members_.size() / subgroup_.order(); }

 private:
  friend ConnectionSet validate_connection_set(const Subgroup& h, std::span<const Elem> u);
  ConnectionSet(Subgroup h, ElementSet members);

  Subgroup subgroup_;
  ElementSet members_;
  std::vector<bool> mask_;
};

// Throws IntersectsH, NotInverseClosed or NotDoubleCosetUnion (checked in
// that order).
ConnectionSet validate_connection_set(const Subgroup& h, std::span<const Elem> u);

using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>;

// Cos(G, H, U): vertices are the left cosets of H, and g1H ~ g2H iff
// g1^-1 g2 ∈ U.
class CosetGraph {
 public:
  CosetGraph(CosetSpace space, ConnectionSet connection,
             std::size_t materialize_threshold = Limits{}.materialize_threshold);

  const CosetSpace& space() const noexcept { return space_; }
  const ConnectionSet& connection() const noexcept { return connection_; }
  std::size_t vertex_count() const noexcept { return space_.size(); }
  std::size_t degree() const noexcept { return connection_.degree(); }
  bool materialized() const noexcept { return !adjacency_.empty() || vertex_count() == 0; }

  bool adjacent(Vertex u, Vertex v) const;
  // Sorted neighbours of v.
  VertexSet neighbors(Vertex v) const;
  // Edges (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

 private:
  VertexSet compute_neighbors(Vertex v) const;

  CosetSpace space_;
  ConnectionSet connection_;
  std::vector<VertexSet> adjacency_;
};

CosetGraph build(const ConnectionSet& u,
                 std::size_t materialize_threshold = Limits{}.materialize_threshold);

struct RegularityProfile {
  std::size_t r = 0;
  std::size_t s = 0;
  // C is empty or covers every vertex, so one of r, s is vacuous and
  // reported as 0.
  bool degenerate = false;

  bool operator==(const RegularityProfile&) const = default;
};

// (r, s) when every vertex of C has exactly r neighbours in C and every
// other vertex exactly s; nullopt otherwise.
std::optional<RegularityProfile> profile_subset(const CosetGraph& graph, std::span<const Vertex> c);
bool is_perfect_code(const CosetGraph& graph, std::span<const Vertex> c);

struct QuotientMatrix {
  std::vector<VertexSet> cells;
  std::vector<std::vector<std::size_t>> entries;
};

// Throws NotEquitable (witness = offending vertex) or PreconditionViolated
// when `cells` is not a partition of the vertex set.
QuotientMatrix quotient_matrix(const CosetGraph& graph, const std::vector<VertexSet>& cells);

// Both eigenvalues of a 2x2 quotient matrix, larger first, computed from the
// characteristic polynomial in exact integer arithmetic. nullopt when they
// are not integers.
std::optional<std::pair<std::int64_t, std::int64_t>> two_cell_eigenvalues(const QuotientMatrix& m);

// The vertices whose cosets lie inside the subgroup `a` (which contains H).
VertexSet cosets_inside(const CosetSpace& space, const Subgroup& a);

// First line: {"vertices":n,"representatives":[...]}; then one "u v" line
// per edge with u < v.
void write_edge_list(std::ostream& out, const CosetGraph& graph);

}  // namespace regset
