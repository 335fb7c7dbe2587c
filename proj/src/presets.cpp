#include "regset/presets.hpp"

#include <array>
#include <numeric>

namespace regset {

namespace {

Permutation cycle_perm(std::size_t degree, std::initializer_list<std::uint32_t> cycle) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<std::uint32_t> pts(cycle);
  for (std::size_t i = 0; i < pts.size(); ++i) p[pts[i]] = pts[(i + 1) % pts.size()];
  return p;
}

// N ⋊ C_n where the generator of C_n acts on N through the element
// permutation `alpha` (an automorphism with alpha^n = 1). Element (v, b) is
// numbered b * |N| + v.
Group semidirect_cyclic(const GroupTable& normal, const std::vector<Elem>& alpha, std::size_t n,
                        std::string label) {
  const std::size_t m = normal.order();
  // powers[b][v] = alpha^b(v)
  std::vector<std::vector<Elem>> powers(n, std::vector<Elem>(m));
  std::iota(powers[0].begin(), powers[0].end(), 0u);
  for (std::size_t b = 1; b < n; ++b)
    for (std::size_t v = 0; v < m; ++v) powers[b][v] = alpha[powers[b - 1][v]];

  const std::size_t order = m * n;
  std::vector<Elem> mult(order * order);
  for (std::size_t b1 = 0; b1 < n; ++b1)
    for (std::size_t v1 = 0; v1 < m; ++v1)
      for (std::size_t b2 = 0; b2 < n; ++b2)
        for (std::size_t v2 = 0; v2 < m; ++v2) {
          const Elem v = normal.mul(static_cast<Elem>(v1), powers[b1][v2]);
          const std::size_t b = (b1 + b2) % n;
          mult[(b1 * m + v1) * order + (b2 * m + v2)] = static_cast<Elem>(b * m + v);
        }
  return GroupTable::from_trusted(order, std::move(mult), std::move(label));
}

Group with_label(const Group& g, std::string label) {
  std::vector<Elem> mult;
  mult.reserve(g->order() * g->order());
  for (const auto& row : g->rows()) mult.insert(mult.end(), row.begin(), row.end());
  return GroupTable::from_trusted(g->order(), std::move(mult), std::move(label));
}

// Monomial 2x2 matrices with entries in {±1, ±i} acting on the eight
// vectors i^k e_j, point j * 4 + k.
Group make_pauli() {
  Permutation x(8), z(8), scalar(8);
  for (std::uint32_t j = 0; j < 2; ++j)
    for (std::uint32_t k = 0; k < 4; ++k) {
      x[j * 4 + k] = (1 - j) * 4 + k;
      z[j * 4 + k] = j * 4 + (j == 1 ? (k + 2) % 4 : k);
      scalar[j * 4 + k] = j * 4 + (k + 1) % 4;
    }
  return GroupTable::from_generators(8, {x, z, scalar}, 16, "C4oD4");
}

}  // namespace

Group make_cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "cyclic group of order 0");
  std::vector<Permutation> gens;
  if (n > 1) {
    Permutation p(n);
    for (std::uint32_t i = 0; i < n; ++i) p[i] = (i + 1) % static_cast<std::uint32_t>(n);
    gens.push_back(std::move(p));
  }
  return GroupTable::from_generators(n, gens, n, "C" + std::to_string(n));
}

Group make_metacyclic(std::size_t m, std::size_t n, std::size_t k, std::string label) {
  const Group cm = make_cyclic(m);
  std::vector<Elem> alpha(m);
  // Element i of C_m is g^i.
  for (std::size_t i = 0; i < m; ++i) alpha[i] = static_cast<Elem>((i * k) % m);
  std::size_t kn = 1;
  for (std::size_t i = 0; i < n; ++i) kn = (kn * k) % m;
  if (m > 1 && kn != 1 % m) {
    throw Error(ErrorCode::PreconditionViolated, "k^n is not 1 modulo m");
  }
  return semidirect_cyclic(*cm, alpha, n, std::move(label));
}

Group make_dihedral(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "dihedral group of a 0-gon");
  return make_metacyclic(n, 2, n - 1, "D" + std::to_string(n));
}

Group make_dicyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "dicyclic group with n = 0");
  const std::size_t m = 2 * n;
  const std::size_t order = 2 * m;
  auto id = [m](std::size_t i, std::size_t e) { return static_cast<Elem>(e * m + i % m); };
  std::vector<Elem> mult(order * order);
  for (std::size_t e = 0; e < 2; ++e)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t f = 0; f < 2; ++f)
        for (std::size_t j = 0; j < m; ++j) {
          Elem prod;
          if (e == 0) {
            prod = id(i + j, f);
          } else if (f == 0) {
            prod = id(i + m - j, 1);  // a^i x a^j = a^(i-j) x
          } else {
            prod = id(i + m - j + n, 0);  // x^2 = a^n
          }
          mult[id(i, e) * order + id(j, f)] = prod;
        }
  std::string label = n == 2 ? "Q8" : n == 4 ? "Q16" : "Dic" + std::to_string(n);
  return GroupTable::from_trusted(order, std::move(mult), std::move(label));
}

Group make_quaternion8() { return make_dicyclic(2); }

Group make_symmetric(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "symmetric group on 0 points");
  std::vector<Permutation> gens;
  if (n > 1) {
    Permutation cycle(n);
    for (std::uint32_t i = 0; i < n; ++i) cycle[i] = (i + 1) % static_cast<std::uint32_t>(n);
    gens.push_back(std::move(cycle));
    gens.push_back(cycle_perm(n, {0, 1}));
  }
  return GroupTable::from_generators(n, gens, Limits{}.closure_cap, "S" + std::to_string(n));
}

Group make_alternating(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "alternating group on 0 points");
  std::vector<Permutation> gens;
  for (std::uint32_t k = 2; k < n; ++k) gens.push_back(cycle_perm(n, {0, 1, k}));
  return GroupTable::from_generators(n, gens, Limits{}.closure_cap, "A" + std::to_string(n));
}

Group make_sl23() {
  // Nonzero vectors (x, y) of F_3^2, point index x + 3y - 1.
  using Matrix = std::array<int, 4>;  // row-major
  auto as_perm = [](const Matrix& m) {
    Permutation p(8);
    for (int y = 0; y < 3; ++y)
      for (int x = 0; x < 3; ++x) {
        if (x == 0 && y == 0) continue;
        const int nx = (m[0] * x + m[1] * y) % 3;
        const int ny = (m[2] * x + m[3] * y) % 3;
        p[static_cast<std::size_t>(x + 3 * y - 1)] = static_cast<std::uint32_t>(nx + 3 * ny - 1);
      }
    return p;
  };
  return GroupTable::from_generators(8, {as_perm({1, 1, 0, 1}), as_perm({1, 0, 1, 1})}, 24,
                                     "SL(2,3)");
}

Group make_klein4() {
  return GroupTable::from_generators(4, {cycle_perm(4, {0, 1}), cycle_perm(4, {2, 3})}, 4, "V4");
}

Group direct_product(const Group& a, const Group& b) {
  const std::size_t na = a->order(), nb = b->order(), n = na * nb;
  std::vector<Elem> mult(n * n);
  for (Elem a1 = 0; a1 < na; ++a1)
    for (Elem b1 = 0; b1 < nb; ++b1)
      for (Elem a2 = 0; a2 < na; ++a2)
        for (Elem b2 = 0; b2 < nb; ++b2)
          mult[(a1 * nb + b1) * n + (a2 * nb + b2)] =
              static_cast<Elem>(a->mul(a1, a2) * nb + b->mul(b1, b2));
  return GroupTable::from_trusted(n, std::move(mult), a->label() + "x" + b->label());
}

std::size_t small_group_count(std::size_t order) {
  static constexpr std::array<std::size_t, 17> counts{0, 1, 1, 1, 2, 1, 2, 1, 5,
                                                      2, 2, 1, 5, 1, 2, 1, 14};
  return order < counts.size() ? counts[order] : 0;
}

Group make_small_group(std::size_t order, std::size_t index) {
  if (index == 0 || index > small_group_count(order)) {
    throw Error(ErrorCode::PreconditionViolated,
                "no catalog entry " + std::to_string(order) + "," + std::to_string(index));
  }
  auto c = [](std::size_t n) { return make_cyclic(n); };
  auto x = [](const Group& a, const Group& b) { return direct_product(a, b); };
  switch (order) {
    case 4:
      return index == 1 ? c(4) : make_klein4();
    case 6:
      return index == 1 ? with_label(make_dihedral(3), "S3") : c(6);
    case 8:
      switch (index) {
        case 1: return c(8);
        case 2: return x(c(4), c(2));
        case 3: return make_dihedral(4);
        case 4: return make_quaternion8();
        default: return x(x(c(2), c(2)), c(2));
      }
    case 9:
      return index == 1 ? c(9) : x(c(3), c(3));
    case 10:
      return index == 1 ? make_dihedral(5) : c(10);
    case 12:
      switch (index) {
        case 1: return make_dicyclic(3);
        case 2: return c(12);
        case 3: return make_alternating(4);
        case 4: return make_dihedral(6);
        default: return x(c(6), c(2));
      }
    case 14:
      return index == 1 ? make_dihedral(7) : c(14);
    case 16:
      switch (index) {
        case 1: return c(16);
        case 2: return x(c(4), c(4));
        case 3: {
          // C2^2 ⋊ C4, the generator swapping the two factors.
          const Group v = make_klein4();
          std::vector<Elem> swap(4);
          for (Elem e = 0; e < 4; ++e) {
            // Klein four in BFS order: 0 = 1, 1 = a, 2 = b, 3 = ab.
            swap[e] = e == 1 ? 2 : e == 2 ? 1 : e;
          }
          return semidirect_cyclic(*v, swap, 4, "C2^2:C4");
        }
        case 4: return make_metacyclic(4, 4, 3, "C4:C4");
        case 5: return x(c(8), c(2));
        case 6: return make_metacyclic(8, 2, 5, "M16");
        case 7: return make_dihedral(8);
        case 8: return make_metacyclic(8, 2, 3, "QD16");
        case 9: return make_dicyclic(4);
        case 10: return x(x(c(4), c(2)), c(2));
        case 11: return x(c(2), make_dihedral(4));
        case 12: return x(c(2), make_quaternion8());
        case 13: return make_pauli();
        default: return x(x(x(c(2), c(2)), c(2)), c(2));
      }
    default:
      return c(order);
  }
}

std::vector<Group> corpus_groups() {
  std::vector<Group> out;
  for (std::size_t n = 1; n <= 16; ++n)
    for (std::size_t k = 1; k <= small_group_count(n); ++k) out.push_back(make_small_group(n, k));
  out.push_back(make_symmetric(4));
  out.push_back(make_dihedral(12));
  out.push_back(make_sl23());
  return out;
}

}  // namespace regset
