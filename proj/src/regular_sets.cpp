#include "regset/regular_sets.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace regset {

namespace {

std::size_t gcd2(std::size_t n) { return n % 2 == 0 ? 2 : 1; }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::PreconditionViolated, what);
}

void require_range(const PairSpec& pair, std::size_t r, std::size_t s) {
  require(r + 1 <= pair.code_size(), "r exceeds |A:H| - 1");
  require(s <= pair.code_size(), "s exceeds |A:H|");
}

bool is_normal_in_parent(const Subgroup& a) { return is_normal(a, Subgroup::whole(a.parent())); }

std::size_t product_size(const Subgroup& x, const Subgroup& y) {
  return set_product(x.group(), x.members(), y.members()).size();
}

bool self_inverse_double_coset(const Subgroup& h, Elem x) {
  const ElementSet d = double_coset(h, x);
  return std::binary_search(d.begin(), d.end(), h.group().inv(x));
}

ElementSet union_of_double_cosets(const Subgroup& h, std::span<const Elem> reps) {
  ElementSet out;
  for (auto x : reps) out = set_union(out, double_coset(h, x));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

PairSpec::PairSpec(Subgroup h, Subgroup a) : h_(std::move(h)), a_(std::move(a)) {
  require(h_.parent() == a_.parent() || *h_.parent() == *a_.parent(),
          "H and A live in different groups");
  require(is_subgroup_of(h_, a_), "H is not contained in A");
}

bool all_pass(const Transcript& t) {
  return std::all_of(t.begin(), t.end(), [](const Check& c) { return c.pass; });
}

bool ConditionReport::verdict() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.pass; });
}

const Condition* ConditionReport::find(const std::string& id) const {
  for (const auto& c : conditions)
    if (c.id == id) return &c;
  return nullptr;
}

std::optional<RegularityProfile> profile_of_pair(const PairSpec& pair, const ConnectionSet& u) {
  const CosetGraph graph = build(u);
  return profile_subset(graph, cosets_inside(graph.space(), pair.a()));
}

// ---------------------------------------------------------------------------
// XH conditions and certificate auditing

TheoremAResult verify_theorem_a(const PairSpec& pair, std::span<const Elem> x, std::size_t r,
                                std::size_t s) {
  const auto& g = pair.group();
  const auto& h = pair.h();
  const auto& a = pair.a();
  for (auto e : x) require(e < g.order(), "X element out of range");

  TheoremAResult out;
  const ElementSet xh = set_product(g, make_set({x.begin(), x.end()}), h.members());
  const ElementSet hxinv = set_product(g, h.members(), inverse_set(g, x));
  out.transcript.push_back({"XH = HX^-1", xh == hxinv});
  out.transcript.push_back({"XH misses H", set_intersection(xh, h.members()).empty()});

  auto count_is = [&](const ElementSet& part, std::size_t want) {
    try {
      return left_coset_count(part, h) == want;
    } catch (const Error&) {
      return false;
    }
  };
  out.transcript.push_back({"|XH ∩ A : H| = r", count_is(set_intersection(xh, a.members()), r)});

  bool outside = true;
  for (auto t : left_transversal(a)) {
    if (a.contains(t)) continue;
    if (!count_is(set_intersection(xh, left_translate(g, t, a.members())), s)) {
      outside = false;
      break;
    }
  }
  out.transcript.push_back({"|XH ∩ tA : H| = s for t outside A", outside});
  out.holds = all_pass(out.transcript);
  return out;
}

Transcript audit_certificate(const PairSpec& pair, std::span<const Elem> u,
                             std::span<const Elem> x, std::span<const Elem> reps,
                             std::size_t r, std::size_t s) {
  const auto& g = pair.group();
  const auto& h = pair.h();
  Transcript t;
  const auto in_range = [&](std::span<const Elem> v) {
    return std::all_of(v.begin(), v.end(), [&](Elem e) { return e < g.order(); });
  };
  if (!in_range(u) || !in_range(x) || !in_range(reps)) {
    t.push_back({"elements in range", false});
    return t;
  }

  std::optional<ConnectionSet> conn;
  try {
    conn = validate_connection_set(h, u);
  } catch (const Error&) {
  }
  t.push_back({"U is a valid connection set", conn.has_value()});

  const ElementSet uset = make_set({u.begin(), u.end()});
  t.push_back({"U = XH", set_product(g, make_set({x.begin(), x.end()}), h.members()) == uset});
  t.push_back({"U is the union of H x H over the listed representatives",
               union_of_double_cosets(h, reps) == uset});

  for (auto& c : verify_theorem_a(pair, x, r, s).transcript) t.push_back(std::move(c));

  t.push_back({"0 <= r <= |A:H| - 1 and 0 <= s <= |A:H|",
               r + 1 <= pair.code_size() && s <= pair.code_size()});

  bool oracle = false;
  if (conn) {
    if (auto p = profile_of_pair(pair, *conn)) {
      // With A = G there are no outside cosets and s is vacuous.
      oracle = p->r == r && (pair.code_index() == 1 || p->s == s);
    }
  }
  t.push_back({"graph oracle profile = (r, s)", oracle});
  t.push_back({"|U|/|H| = r + (|G:A| - 1) s",
               uset.size() == (r + (pair.code_index() - 1) * s) * h.order()});
  return t;
}

namespace {

RegSetCertificate make_certificate(const PairSpec& pair, std::size_t r, std::size_t s,
                                   std::vector<Elem> reps, const ElementSet& u,
                                   Transcript extra = {}) {
  std::sort(reps.begin(), reps.end());
  Transcript t = audit_certificate(pair, u, u, reps, r, s);
  for (auto& c : extra) t.push_back(std::move(c));
  if (!all_pass(t)) {
    std::string failed;
    for (const auto& c : t)
      if (!c.pass) failed += " [" + c.name + "]";
    throw Error(ErrorCode::ConstructionFailed, "certificate rejected:" + failed);
  }
  return RegSetCertificate{pair, r, s, std::move(reps), validate_connection_set(pair.h(), u), u,
                           std::move(t)};
}

}  // namespace

// ---------------------------------------------------------------------------
// General search

struct RegularSetSearch::Impl {
  struct Unit {
    std::vector<std::size_t> classes;
    std::vector<std::pair<std::size_t, std::size_t>> counts;  // (local coset, count)
    std::size_t weight = 0;
  };
  struct Component {
    std::vector<std::size_t> cosets;  // global A-coset indices
    std::vector<Unit> units;          // decreasing weight
    // suffix[k * ncosets + c]: total count of units k.. in local coset c
    std::vector<std::size_t> suffix;
  };

  PairSpec pair;
  DoubleCosetDecomp decomp;
  std::vector<Component> components;
  std::size_t unit_total = 0;

  explicit Impl(PairSpec p)
      : pair(std::move(p)),
        decomp(decompose_into_double_cosets(
            set_difference(Subgroup::whole(pair.group_ptr()).members(), pair.h().members()),
            pair.h())) {
    const auto& g = pair.group();
    const CosetSpace cos_a = left_cosets(pair.a());
    const std::size_t ncos = cos_a.size();

    // Inverse-closed units over global cosets.
    std::vector<Unit> units;
    for (std::size_t i = 0; i < decomp.size(); ++i) {
      const std::size_t j = *decomp.inverse_index[i];
      if (j < i) continue;
      Unit unit;
      unit.classes = (i == j) ? std::vector<std::size_t>{i} : std::vector<std::size_t>{i, j};
      std::vector<std::size_t> tally(ncos, 0);
      for (auto c : unit.classes)
        for (auto e : decomp.member_sets[c]) ++tally[cos_a.coset_of[e]];
      for (std::size_t c = 0; c < ncos; ++c)
        if (tally[c] > 0) {
          unit.counts.emplace_back(c, tally[c] / pair.h().order());
          unit.weight += tally[c] / pair.h().order();
        }
      units.push_back(std::move(unit));
    }
    unit_total = units.size();

    // Units touching several A-cosets tie those cosets together; separate
    // components are solved independently.
    std::vector<std::size_t> root(ncos);
    std::iota(root.begin(), root.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return root[x] == x ? x : root[x] = find(root[x]);
    };
    for (const auto& unit : units)
      for (std::size_t k = 1; k < unit.counts.size(); ++k)
        root[find(unit.counts[k].first)] = find(unit.counts[0].first);

    std::vector<std::size_t> comp_of(ncos, npos), local(ncos, npos);
    for (std::size_t c = 0; c < ncos; ++c) {
      const std::size_t rc = find(c);
      if (comp_of[rc] == npos) {
        comp_of[rc] = components.size();
        components.emplace_back();
      }
      auto& comp = components[comp_of[rc]];
      local[c] = comp.cosets.size();
      comp.cosets.push_back(c);
    }
    for (auto& unit : units) {
      auto& comp = components[comp_of[find(unit.counts.front().first)]];
      for (auto& [c, n] : unit.counts) c = local[c];
      comp.units.push_back(std::move(unit));
    }
    for (auto& comp : components) {
      std::stable_sort(comp.units.begin(), comp.units.end(),
                       [](const Unit& x, const Unit& y) { return x.weight > y.weight; });
      const std::size_t nc = comp.cosets.size();
      comp.suffix.assign((comp.units.size() + 1) * nc, 0);
      for (std::size_t k = comp.units.size(); k-- > 0;) {
        std::copy_n(comp.suffix.begin() + static_cast<std::ptrdiff_t>((k + 1) * nc), nc,
                    comp.suffix.begin() + static_cast<std::ptrdiff_t>(k * nc));
        for (auto [c, n] : comp.units[k].counts) comp.suffix[k * nc + c] += n;
      }
    }
    (void)g;
  }

  struct VecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (auto x : v) h = (h ^ x) * 1099511628211ull;
      return h;
    }
  };

  // Depth-first search over the units of one component; on success
  // `chosen` lists the selected unit indices.
  bool solve(const Component& comp, const std::vector<std::size_t>& target,
             std::vector<std::size_t>& chosen, std::uint64_t& nodes, std::uint64_t budget) const {
    const std::size_t nc = comp.cosets.size();
    std::vector<std::size_t> sums(nc, 0);
    std::unordered_set<std::vector<std::uint32_t>, VecHash> dead;
    constexpr std::size_t kMemoLimit = 1u << 21;

    std::function<bool(std::size_t)> dfs = [&](std::size_t k) -> bool {
      if (++nodes > budget) {
        throw Error(ErrorCode::SearchBudgetExceeded,
                    "search exceeded " + std::to_string(budget) + " nodes");
      }
      bool done = true;
      for (std::size_t c = 0; c < nc; ++c) {
        if (sums[c] + comp.suffix[k * nc + c] < target[c]) return false;
        done = done && sums[c] == target[c];
      }
      if (done) return true;
      if (k == comp.units.size()) return false;

      std::vector<std::uint32_t> key;
      key.reserve(nc + 1);
      key.push_back(static_cast<std::uint32_t>(k));
      for (auto v : sums) key.push_back(static_cast<std::uint32_t>(v));
      if (dead.count(key)) return false;

      const auto& unit = comp.units[k];
      bool fits = true;
      for (auto [c, n] : unit.counts) fits = fits && sums[c] + n <= target[c];
      if (fits) {
        for (auto [c, n] : unit.counts) sums[c] += n;
        chosen.push_back(k);
        if (dfs(k + 1)) return true;
        chosen.pop_back();
        for (auto [c, n] : unit.counts) sums[c] -= n;
      }
      if (dfs(k + 1)) return true;
      if (dead.size() < kMemoLimit) dead.insert(std::move(key));
      return false;
    };
    return dfs(0);
  }
};

RegularSetSearch::RegularSetSearch(PairSpec pair)
    : impl_(std::make_shared<const Impl>(std::move(pair))) {}

const PairSpec& RegularSetSearch::pair() const noexcept { return impl_->pair; }

std::size_t RegularSetSearch::unit_count() const noexcept { return impl_->unit_total; }

std::optional<RegSetCertificate> RegularSetSearch::decide(std::size_t r, std::size_t s,
                                                          const SearchOptions& options) const {
  const auto& impl = *impl_;
  require_range(impl.pair, r, s);
  std::uint64_t nodes = 0;
  std::vector<Elem> reps;
  ElementSet u;
  for (const auto& comp : impl.components) {
    std::vector<std::size_t> target(comp.cosets.size());
    for (std::size_t c = 0; c < comp.cosets.size(); ++c) target[c] = comp.cosets[c] == 0 ? r : s;
    std::vector<std::size_t> chosen;
    if (!impl.solve(comp, target, chosen, nodes, options.node_budget)) return std::nullopt;
    for (auto k : chosen)
      for (auto cls : comp.units[k].classes) {
        reps.push_back(impl.decomp.reps[cls]);
        u = set_union(u, impl.decomp.member_sets[cls]);
      }
  }
  return make_certificate(impl.pair, r, s, std::move(reps), u);
}

std::optional<RegSetCertificate> decide_general(const PairSpec& pair, std::size_t r, std::size_t s,
                                                const SearchOptions& options) {
  require_range(pair, r, s);
  return RegularSetSearch(pair).decide(r, s, options);
}

// ---------------------------------------------------------------------------
// Normal chains

namespace {

void require_normal_chain(const PairSpec& pair) {
  require(is_normal(pair.h(), pair.a()), "H is not normal in A");
  require(is_normal_in_parent(pair.a()), "A is not normal in G");
}

// Elements x outside A standing for their coset xA (all of them in strict mode).
std::vector<Elem> outside_candidates(const Subgroup& a, bool strict) {
  std::vector<Elem> out;
  if (strict) {
    for (Elem x = 0; x < a.group().order(); ++x)
      if (!a.contains(x)) out.push_back(x);
  } else {
    for (auto t : left_transversal(a))
      if (!a.contains(t)) out.push_back(t);
  }
  return out;
}

// Some a ∈ A (least first) with H xa H self-inverse.
std::optional<Elem> self_inverse_translate(const PairSpec& pair, Elem x) {
  const auto& g = pair.group();
  for (auto a : pair.a().members())
    if (self_inverse_double_coset(pair.h(), g.mul(x, a))) return g.mul(x, a);
  return std::nullopt;
}

}  // namespace

ConditionReport check_theorem_b(const PairSpec& pair, std::size_t r, std::size_t s,
                                const TheoremBOptions& options) {
  require_normal_chain(pair);
  require_range(pair, r, s);
  const auto& g = pair.group();
  const auto& a = pair.a();
  ConditionReport report;

  report.conditions.push_back({"a", r % gcd2(pair.code_size() - 1) == 0, std::nullopt});

  Condition b{"b", true, std::nullopt};
  Condition c{"c", true, std::nullopt};
  for (auto x : outside_candidates(a, options.strict)) {
    const std::size_t ci = conj_index(pair.h(), x);
    if (s % ci != 0) {
      if (b.pass) b = {"b", false, x};
      continue;
    }
    if (c.pass && a.contains(g.mul(x, x)) && (s / ci) % 2 == 1 && !self_inverse_translate(pair, x)) {
      c = {"c", false, x};
    }
  }
  report.conditions.push_back(b);
  report.conditions.push_back(c);
  return report;
}

RegSetCertificate construct_theorem_b(const PairSpec& pair, std::size_t r, std::size_t s) {
  if (!check_theorem_b(pair, r, s).verdict()) {
    throw Error(ErrorCode::PreconditionViolated, "conditions (a)-(c) do not hold");
  }
  const auto& g = pair.group();
  const auto& h = pair.h();
  const auto& a = pair.a();
  std::vector<Elem> reps;
  auto fail = [](const std::string& what) { throw Error(ErrorCode::ConstructionFailed, what); };

  // U0: r non-trivial cosets of H in A closed under inversion. Inverse pairs
  // first, then involutions of A/H.
  {
    const CosetSpace cos_h = left_cosets(h);
    std::vector<std::pair<Elem, Elem>> pairs;
    std::vector<Elem> involutions;
    for (Elem rep : cos_h.reps) {
      if (!a.contains(rep) || h.contains(rep)) continue;
      const Elem inv_rep = cos_h.reps[cos_h.coset_of[g.inv(rep)]];
      if (inv_rep == rep) {
        involutions.push_back(rep);
      } else if (rep < inv_rep) {
        pairs.emplace_back(rep, inv_rep);
      }
    }
    std::size_t need = r;
    for (std::size_t i = 0; i < pairs.size() && need >= 2; ++i, need -= 2) {
      reps.push_back(pairs[i].first);
      reps.push_back(pairs[i].second);
    }
    if (need > involutions.size()) fail("not enough involutions in A/H for r");
    reps.insert(reps.end(), involutions.begin(), involutions.begin() + static_cast<std::ptrdiff_t>(need));
  }

  // U1: per orbit {tA, t^-1 A}, l_t = s / conj_index double cosets of tA.
  std::vector<bool> done(g.order(), false);
  for (auto t : left_transversal(a)) {
    if (a.contains(t) || done[t]) continue;
    const ElementSet ta = left_translate(g, t, a.members());
    const ElementSet tinv_a = left_translate(g, g.inv(t), a.members());
    for (auto e : ta) done[e] = true;
    for (auto e : tinv_a) done[e] = true;

    const std::size_t lt = s / conj_index(h, t);
    const DoubleCosetDecomp d = decompose_into_double_cosets(ta, h);
    if (ta != tinv_a) {
      if (lt > d.size()) fail("too few double cosets in tA");
      for (std::size_t i = 0; i < lt; ++i) {
        reps.push_back(d.reps[i]);
        reps.push_back(double_coset(h, g.inv(d.reps[i])).front());
      }
      continue;
    }

    std::vector<std::size_t> paired, selfs;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d.self_inverse[i]) {
        selfs.push_back(i);
      } else if (i < *d.inverse_index[i]) {
        paired.push_back(i);
      }
    }
    std::size_t need = lt;
    std::vector<std::size_t> take;
    if (need % 2 == 1) {
      const auto xa = self_inverse_translate(pair, t);
      if (!xa) fail("no self-inverse double coset in tA for odd l_t");
      const std::size_t first = *d.class_of(*xa);
      take.push_back(first);
      selfs.erase(std::find(selfs.begin(), selfs.end(), first));
      --need;
    }
    for (std::size_t i = 0; i < paired.size() && need >= 2; ++i, need -= 2) {
      take.push_back(paired[i]);
      take.push_back(*d.inverse_index[paired[i]]);
    }
    if (need > selfs.size()) fail("too few self-inverse double coset in tA");
    take.insert(take.end(), selfs.begin(), selfs.begin() + static_cast<std::ptrdiff_t>(need));
    for (auto i : take) reps.push_back(d.reps[i]);
  }

  return make_certificate(pair, r, s, reps, union_of_double_cosets(h, reps));
}

// ---------------------------------------------------------------------------
// Cayley-case corollaries

bool check_corollary_b1(const Subgroup& a, std::size_t r, std::size_t s) {
  require(is_normal_in_parent(a), "A is not normal in G");
  require(r % gcd2(a.order() - 1) == 0, "gcd(2, |A| - 1) does not divide r");
  require(r + 1 <= a.order() && s <= a.order(), "(r, s) out of range");
  if (s % 2 == 0) return true;
  const auto& g = a.group();
  for (Elem x = 0; x < g.order(); ++x) {
    if (a.contains(x) || !a.contains(g.mul(x, x))) continue;
    if (!involution_exists_in_coset(a, x)) return false;
  }
  return true;
}

bool hxz_perfect_code_normal(const Subgroup& a) {
  require(is_normal_in_parent(a), "A is not normal in G");
  const auto& g = a.group();
  for (Elem x = 0; x < g.order(); ++x) {
    if (!a.contains(g.mul(x, x))) continue;
    bool found = false;
    for (auto y : a.members()) {
      const Elem xy = g.mul(x, y);
      if (g.mul(xy, xy) == GroupTable::kIdentity) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

CorollaryB2Result check_corollary_b2(const Subgroup& a, std::size_t r, std::size_t s) {
  require(is_normal_in_parent(a), "A is not normal in G");
  require(s % 2 == 1, "s must be odd");
  require(r % gcd2(a.order() - 1) == 0, "gcd(2, |A| - 1) does not divide r");
  require(r + 1 <= a.order() && s <= a.order(), "(r, s) out of range");
  CorollaryB2Result out;
  out.verdict = hxz_perfect_code_normal(a);
  const PairSpec pair(Subgroup::trivial(a.parent()), a);
  out.consistent = out.verdict == decide_general(pair, r, s).has_value();
  return out;
}

// ---------------------------------------------------------------------------
// Normalizer reduction

namespace {

struct NormalizerView {
  Subgroup n;       // N_G(H)
  Subgroup na;      // N_A(H)
  QuotientGroup q;  // N_G(H)/H
  Subgroup b;       // N_A(H)/H inside q
};

NormalizerView normalizer_view(const PairSpec& pair) {
  Subgroup n = normalizer(pair.h());
  Subgroup na = intersect(pair.a(), n);
  QuotientGroup q = quotient(n, pair.h());
  Subgroup b = q.image(na);
  return NormalizerView{std::move(n), std::move(na), std::move(q), std::move(b)};
}

bool covered_by(const PairSpec& pair, const Subgroup& n) {
  return product_size(n, pair.a()) == pair.group().order();
}

}  // namespace

TheoremCResult check_theorem_c(const PairSpec& pair, std::size_t r, std::size_t s) {
  require(is_normal_in_parent(pair.a()), "A is not normal in G");
  const NormalizerView view = normalizer_view(pair);
  const std::size_t b = view.b.order();
  require(r % gcd2(b - 1) == 0, "gcd(2, |N_A(H)/H| - 1) does not divide r");
  require(r + 1 <= b && s <= b, "(r, s) out of range for N_A(H)/H");

  TheoremCResult out;
  out.applicable = covered_by(pair, view.n);
  out.quotient_condition = check_corollary_b1(view.b, r, s);
  out.verdict = out.applicable && out.quotient_condition;

  if (out.verdict) {
    const PairSpec quotient_pair(Subgroup::trivial(view.q.table()), view.b);
    const RegSetCertificate base = construct_theorem_b(quotient_pair, r, s);
    const ElementSet u = view.q.preimage(base.u.members());

    // Transversal of A in G chosen inside N_G(H), least element per coset.
    const CosetSpace cos_a = left_cosets(pair.a());
    std::vector<bool> hit(cos_a.size(), false);
    for (auto e : view.n.members()) hit[cos_a.coset_of[e]] = true;
    const bool inside = std::all_of(hit.begin(), hit.end(), [](bool v) { return v; });

    std::vector<Elem> reps;
    for (auto rep : decompose_into_double_cosets(u, pair.h()).reps) reps.push_back(rep);
    out.lifted = make_certificate(pair, r, s, std::move(reps), u,
                                  {{"G = N_G(H) A", out.applicable},
                                   {"transversal of A inside N_G(H)", inside}});
  } else if (s == 1) {
    out.converse_consistent = !decide_general(pair, r, 1).has_value();
  }
  return out;
}

PerfectCodeResult perfect_code_pair(const PairSpec& pair) {
  if (pair.code_index() == 1) {
    return {true, make_certificate(pair, 0, 1, {}, {})};
  }
  if (!is_normal_in_parent(pair.a())) {
    auto cert = decide_general(pair, 0, 1);
    return {cert.has_value(), std::move(cert)};
  }
  const NormalizerView view = normalizer_view(pair);
  PerfectCodeResult out;
  out.is_perfect_code = covered_by(pair, view.n) && hxz_perfect_code_normal(view.b);
  if (out.is_perfect_code) {
    auto c = check_theorem_c(pair, 0, 1);
    out.certificate = c.lifted ? std::move(c.lifted) : decide_general(pair, 0, 1);
  }
  return out;
}

bool check_corollary_d(const PairSpec& pair) {
  require(is_normal_in_parent(pair.a()), "A is not normal in G");
  const auto& g = pair.group();
  const Subgroup n = normalizer(pair.h());
  if (!covered_by(pair, n)) return false;
  for (Elem x = 0; x < g.order(); ++x) {
    if (!pair.a().contains(g.mul(x, x))) continue;
    bool found = false;
    for (auto b : pair.a().members()) {
      const Elem xb = g.mul(x, b);
      if (n.contains(xb) && pair.h().contains(g.mul(xb, xb))) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool check_quotient_corollary(const PairSpec& pair) {
  require(is_normal(pair.h(), pair.a()), "H is not normal in A");
  require(is_normal_in_parent(pair.a()), "A is not normal in G");
  if (!is_normal_in_parent(pair.h())) return false;
  const QuotientGroup q = quotient(Subgroup::whole(pair.group_ptr()), pair.h());
  return hxz_perfect_code_normal(q.image(pair.a()));
}

bool check_odd_order_corollary(const PairSpec& pair) {
  require(is_normal_in_parent(pair.a()), "A is not normal in G");
  require(pair.a().order() % 2 == 1 || pair.code_index() % 2 == 1,
          "neither |A| nor |G:A| is odd");
  return covered_by(pair, normalizer(pair.h()));
}

FrattiniResult check_frattini_sylow(const Subgroup& a, std::uint64_t p) {
  require(is_normal_in_parent(a), "A is not normal in G");
  require(p >= 2 && a.order() % p == 0, "p does not divide |A|");
  Subgroup h = sylow_subgroup(a, p);
  const Subgroup n = normalizer(h);
  const PairSpec pair(h, a);
  if (!covered_by(pair, n)) throw Error(ErrorCode::FrattiniCheckFailed, "G != N_G(H) A");

  const auto& g = a.group();
  bool verdict = true;
  for (Elem x = 0; x < g.order() && verdict; ++x) {
    if (a.contains(x) || !a.contains(g.mul(x, x))) continue;
    bool found = false;
    for (auto y : a.members()) {
      const Elem xa = g.mul(x, y);
      if (n.contains(xa) && h.contains(g.mul(xa, xa))) {
        found = true;
        break;
      }
    }
    verdict = found;
  }
  return {std::move(h), verdict};
}

// ---------------------------------------------------------------------------
// Necessary conditions without normality of A

bool necessary_lem1(const PairSpec& pair) {
  const auto& g = pair.group();
  const auto& h = pair.h();
  for (Elem x = 0; x < g.order(); ++x) {
    bool found = false;
    for (auto y : pair.a().members()) {
      const Elem ga = g.mul(x, y);
      if (intersect(conjugate_subgroup(pair.a(), ga), h) == intersect(conjugate_subgroup(h, ga), h)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool necessary_divisibility(const PairSpec& pair) {
  require(is_normal(pair.h(), pair.a()), "H is not normal in A");
  const auto& g = pair.group();
  for (Elem x = 0; x < g.order(); ++x) {
    const Subgroup ax = conjugate_subgroup(pair.a(), x);
    const std::size_t hax = product_size(pair.h(), ax);
    const std::size_t aax = product_size(pair.a(), ax);
    if (aax % hax != 0) return false;
  }
  return true;
}

Transcript structural_identities(const RegSetCertificate& cert) {
  const auto& pair = cert.pair;
  const std::size_t k = cert.u.members().size() / pair.h().order();
  Transcript t;
  t.push_back({"|U|/|H| = r + (|G:A| - 1) s", k == cert.r + (pair.code_index() - 1) * cert.s});
  if (pair.code_index() == 1) return t;

  const CosetGraph graph = build(cert.u);
  const VertexSet inside = cosets_inside(graph.space(), pair.a());
  VertexSet outside;
  for (Vertex v = 0; v < graph.vertex_count(); ++v)
    if (!std::binary_search(inside.begin(), inside.end(), v)) outside.push_back(v);

  bool matrix = false, spectrum = false;
  try {
    const QuotientMatrix m = quotient_matrix(graph, {inside, outside});
    const std::vector<std::vector<std::size_t>> want{{cert.r, k - cert.r}, {cert.s, k - cert.s}};
    matrix = m.entries == want;
    if (auto ev = two_cell_eigenvalues(m)) {
      const auto kk = static_cast<std::int64_t>(k);
      const auto diff = static_cast<std::int64_t>(cert.r) - static_cast<std::int64_t>(cert.s);
      spectrum = (ev->first == kk && ev->second == diff) || (ev->first == diff && ev->second == kk);
    }
  } catch (const Error&) {
  }
  t.push_back({"quotient matrix = [[r, k-r], [s, k-s]]", matrix});
  t.push_back({"eigenvalues = {k, r-s}", spectrum});
  return t;
}

// ---------------------------------------------------------------------------
// Single double coset connection sets

ArcTransitiveReport arc_transitive_perfect_code(const PairSpec& pair, Elem x) {
  const auto& g = pair.group();
  const auto& h = pair.h();
  const auto& a = pair.a();
  require(x < g.order() && !h.contains(x), "x must lie outside H");
  require(self_inverse_double_coset(h, x), "HxH is not inverse-closed");

  ArcTransitiveReport out;
  const ElementSet axa = set_product(g, a.members(), left_translate(g, x, a.members()));
  out.covers = set_union(a.members(), axa).size() == g.order();

  const Subgroup ax = conjugate_subgroup(a, x);
  out.stabilizers_agree = intersect(h, conjugate_subgroup(h, x)) == intersect(h, ax);

  const Subgroup both = intersect(a, ax);
  out.translates_meet = std::all_of(a.members().begin(), a.members().end(), [&](Elem y) {
    return std::any_of(h.members().begin(), h.members().end(),
                       [&](Elem k) { return both.contains(g.mul(k, y)); });
  });
  out.outside_a = !a.contains(x);
  return out;
}

bool arc_transitive_oracle(const PairSpec& pair, Elem x) {
  const ConnectionSet u = validate_connection_set(pair.h(), double_coset(pair.h(), x));
  const CosetGraph graph = build(u);
  return is_perfect_code(graph, cosets_inside(graph.space(), pair.a()));
}

}  // namespace regset
