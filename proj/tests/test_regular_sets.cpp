#include "doctest.h"
#include "helpers.hpp"
#include "regset/regular_sets.hpp"

using namespace regset;
using testing::sub;

namespace {

struct Sl23Instance {
  Group g;
  Subgroup a;
  std::vector<Subgroup> hs;  // the three C4 inside A
  std::vector<Elem> order3;
};

Sl23Instance sl23_instance() {
  Sl23Instance out{make_sl23(), Subgroup::trivial(make_sl23()), {}, {}};
  out.a = sylow_subgroup(Subgroup::whole(out.g), 2);
  for (const auto& s : all_subgroups(out.g))
    if (s.order() == 4) out.hs.push_back(s);
  for (Elem x = 0; x < out.g->order(); ++x)
    if (out.g->element_order(x) == 3) out.order3.push_back(x);
  return out;
}

Elem generator(const Subgroup& h) {
  for (auto e : h.members())
    if (h.group().element_order(e) == h.order()) return e;
  return 0;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("PairSpec requires H <= A") {
  const Group c4 = make_cyclic(4);
  CHECK(code_of([&] { PairSpec(Subgroup(c4, {0, 2}), Subgroup::trivial(c4)); }) ==
        ErrorCode::PreconditionViolated);
  const PairSpec p(Subgroup::trivial(c4), Subgroup(c4, {0, 2}));
  CHECK(p.code_size() == 2);
  CHECK(p.code_index() == 2);
}

TEST_CASE("verify_theorem_a") {
  const Group c4 = make_cyclic(4);
  const PairSpec pair(Subgroup::trivial(c4), Subgroup(c4, {0, 2}));
  CHECK(verify_theorem_a(pair, std::vector<Elem>{}, 0, 0).holds);
  const TheoremAResult bad = verify_theorem_a(pair, std::vector<Elem>{1}, 0, 1);
  CHECK_FALSE(bad.holds);
  REQUIRE_FALSE(bad.transcript.empty());
  CHECK(bad.transcript[0].name == "XH = HX^-1");
  CHECK_FALSE(bad.transcript[0].pass);
  CHECK(verify_theorem_a(pair, std::vector<Elem>{1, 3}, 0, 2).holds);
  CHECK_FALSE(verify_theorem_a(pair, std::vector<Elem>{1, 3}, 0, 1).holds);
}

TEST_CASE("SL(2,3): explicit X gives a (0,2)-regular set") {
  const Sl23Instance rm = sl23_instance();
  const auto& g = *rm.g;
  REQUIRE(rm.hs.size() == 3);
  REQUIRE(rm.order3.size() == 8);
  for (const auto& h : rm.hs) {
    const PairSpec pair(h, rm.a);
    CHECK(normalizer(h) == rm.a);
    const Elem hg = generator(h);
    for (auto x : rm.order3) {
      const Elem xi = g.inv(x);
      const std::vector<Elem> x_set{g.mul(hg, x), g.mul(hg, xi), x, xi};
      CHECK(verify_theorem_a(pair, x_set, 0, 2).holds);

      const ElementSet xh = set_product(g, make_set(x_set), h.members());
      const ElementSet xa = left_translate(g, x, rm.a.members());
      const ElementSet xia = left_translate(g, xi, rm.a.members());
      CHECK(xh == set_union(xa, xia));
      CHECK(set_intersection(xh, xa) ==
            set_union(left_translate(g, g.mul(hg, x), h.members()), left_translate(g, x, h.members())));
      // The intersection with x^-1 A is spanned by hx^-1 H and x^-1 H; the
      // same expression with xH in place of XH is empty.
      CHECK(set_intersection(xh, xia) ==
            set_union(left_translate(g, g.mul(hg, xi), h.members()), left_translate(g, xi, h.members())));
      CHECK(set_intersection(left_translate(g, x, h.members()), xia).empty());
    }
  }
}

TEST_CASE("decide_general examples") {
  const Group c4 = make_cyclic(4);
  const PairSpec pair(Subgroup::trivial(c4), Subgroup(c4, {0, 2}));
  const auto zero = decide_general(pair, 0, 0);
  REQUIRE(zero);
  CHECK(zero->u.members().empty());
  CHECK_FALSE(decide_general(pair, 0, 1));
  const auto two = decide_general(pair, 0, 2);
  REQUIRE(two);
  CHECK(two->u.members() == ElementSet{1, 3});
  CHECK(all_pass(two->transcript));

  CHECK(code_of([&] { decide_general(pair, 2, 0); }) == ErrorCode::PreconditionViolated);
  CHECK(code_of([&] { decide_general(pair, 0, 3); }) == ErrorCode::PreconditionViolated);

  const Sl23Instance rm = sl23_instance();
  const auto cert = decide_general(PairSpec(rm.hs[0], rm.a), 0, 2);
  REQUIRE(cert);
  CHECK(all_pass(cert->transcript));
  CHECK(cert->u.members().size() == 16);
  CHECK_FALSE(decide_general(PairSpec(rm.hs[0], rm.a), 0, 1));
}

TEST_CASE("decide_general reports an exhausted budget") {
  const Group g = make_small_group(16, 3);
  const PairSpec pair(Subgroup::trivial(g), Subgroup::trivial(g));
  CHECK(code_of([&] { decide_general(pair, 0, 1, {1}); }) == ErrorCode::SearchBudgetExceeded);
  CHECK(decide_general(pair, 0, 1).has_value());
}

TEST_CASE("decide_general matches exhaustive enumeration on small groups") {
  for (const auto& gp : testing::corpus_upto(8)) {
    const auto subs = all_subgroups(gp);
    for (const auto& a : subs)
      for (const auto& h : subs) {
        if (!is_subgroup_of(h, a)) continue;
        const PairSpec pair(h, a);
        const auto want = oracle::achievable(*gp, oracle::to_set(h.members()), oracle::to_set(a.members()));
        const RegularSetSearch search(pair);
        for (std::size_t r = 0; r < pair.code_size(); ++r)
          for (std::size_t s = 0; s <= pair.code_size(); ++s)
            CHECK_MESSAGE(search.decide(r, s).has_value() == (want.count({r, s}) > 0),
                          gp->label() << " |H|=" << h.order() << " |A|=" << a.order() << " (" << r
                                      << "," << s << ")");
      }
  }
}

TEST_CASE("audit_certificate detects tampering") {
  const Sl23Instance rm = sl23_instance();
  const PairSpec pair(rm.hs[0], rm.a);
  const auto cert = decide_general(pair, 0, 2);
  REQUIRE(cert);
  const auto& u = cert->u.members();
  CHECK(all_pass(audit_certificate(pair, u, cert->x, cert->double_coset_reps, 0, 2)));
  CHECK_FALSE(all_pass(audit_certificate(pair, u, cert->x, cert->double_coset_reps, 0, 1)));
  CHECK_FALSE(all_pass(audit_certificate(pair, u, cert->x, cert->double_coset_reps, 1, 2)));
  std::vector<Elem> fewer(u.begin() + 1, u.end());
  CHECK_FALSE(all_pass(audit_certificate(pair, fewer, fewer, cert->double_coset_reps, 0, 2)));
  std::vector<Elem> out_of_range = u;
  out_of_range.push_back(99);
  CHECK_FALSE(all_pass(audit_certificate(pair, out_of_range, u, cert->double_coset_reps, 0, 2)));
}

TEST_CASE("check_theorem_b") {
  const Group c4 = make_cyclic(4);
  const PairSpec pair(Subgroup::trivial(c4), Subgroup(c4, {0, 2}));
  const ConditionReport rep = check_theorem_b(pair, 0, 1);
  CHECK(rep.find("a")->pass);
  CHECK(rep.find("b")->pass);
  CHECK_FALSE(rep.find("c")->pass);
  CHECK(rep.find("c")->witness == Elem{1});
  CHECK_FALSE(rep.verdict());
  CHECK(check_theorem_b(pair, 0, 2).verdict());

  const Group s3 = make_symmetric(3);
  const Subgroup whole = Subgroup::whole(s3);
  for (const auto& h : all_subgroups(s3)) {
    if (!is_normal(h, whole)) continue;
    const PairSpec p(h, whole);
    for (std::size_t r = 0; r < p.code_size(); ++r) {
      const ConditionReport cr = check_theorem_b(p, r, 0);
      CHECK(cr.verdict() == (r % (p.code_size() % 2 == 1 ? 2 : 1) == 0));
    }
  }

  // A of order 2 in S3 is not normal.
  Subgroup two = Subgroup::trivial(s3);
  for (const auto& h : all_subgroups(s3))
    if (h.order() == 2) two = h;
  CHECK(code_of([&] { check_theorem_b(PairSpec(Subgroup::trivial(s3), two), 0, 0); }) ==
        ErrorCode::PreconditionViolated);
}

TEST_CASE("construct_theorem_b") {
  const Group c4 = make_cyclic(4);
  const PairSpec pair(Subgroup::trivial(c4), Subgroup(c4, {0, 2}));
  CHECK(construct_theorem_b(pair, 0, 0).u.members().empty());
  CHECK(construct_theorem_b(pair, 0, 2).u.members() == ElementSet{1, 3});
  CHECK(code_of([&] { construct_theorem_b(pair, 0, 1); }) == ErrorCode::PreconditionViolated);

  const Group q8 = make_quaternion8();
  const PairSpec qp(Subgroup(q8, {0, 2}), Subgroup(q8, {0, 1, 2, 3}));
  const RegSetCertificate cert = construct_theorem_b(qp, 1, 2);
  CHECK(all_pass(cert.transcript));
  CHECK(profile_of_pair(qp, cert.u) == RegularityProfile{1, 2, false});
}

TEST_CASE("Cayley-case corollaries") {
  const Group c4 = make_cyclic(4);
  const Subgroup a = Subgroup(c4, {0, 2});
  CHECK(check_corollary_b1(a, 0, 2));
  CHECK_FALSE(check_corollary_b1(a, 0, 1));
  const auto s3 = testing::s3();
  const Subgroup c3 = sub(s3.group, {s3.cycle({0, 1, 2})});
  CHECK(check_corollary_b1(c3, 0, 1));
  CHECK(code_of([&] { check_corollary_b1(c3, 1, 1); }) == ErrorCode::PreconditionViolated);

  CHECK(hxz_perfect_code_normal(Subgroup::whole(c4)));
  CHECK_FALSE(hxz_perfect_code_normal(a));
  const Group q8 = make_quaternion8();
  CHECK_FALSE(hxz_perfect_code_normal(Subgroup(q8, {0, 2})));

  const CorollaryB2Result b2 = check_corollary_b2(c3, 0, 1);
  CHECK(b2.verdict);
  CHECK(b2.consistent);
  const CorollaryB2Result b2c4 = check_corollary_b2(a, 1, 1);
  CHECK_FALSE(b2c4.verdict);
  CHECK(b2c4.consistent);
  const Group c2 = make_cyclic(2);
  const CorollaryB2Result b2c2 = check_corollary_b2(Subgroup::trivial(c2), 0, 1);
  CHECK(b2c2.verdict);
  CHECK(b2c2.consistent);
  CHECK(code_of([&] { check_corollary_b2(a, 0, 2); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("check_theorem_c") {
  const Sl23Instance rm = sl23_instance();
  const PairSpec pair(rm.hs[0], rm.a);
  const TheoremCResult one = check_theorem_c(pair, 0, 1);
  CHECK_FALSE(one.applicable);
  CHECK_FALSE(one.verdict);
  REQUIRE(one.converse_consistent);
  CHECK(*one.converse_consistent);
  const TheoremCResult two = check_theorem_c(pair, 0, 2);
  CHECK_FALSE(two.verdict);
  CHECK(decide_general(pair, 0, 2).has_value());

  // H normal in G: N_G(H) = G and the test is check_corollary_b1 on G/H.
  const Group q8 = make_quaternion8();
  const PairSpec qp(Subgroup(q8, {0, 2}), Subgroup(q8, {0, 1, 2, 3}));
  const TheoremCResult c = check_theorem_c(qp, 0, 2);
  CHECK(c.applicable);
  CHECK(c.verdict);
  REQUIRE(c.lifted);
  CHECK(all_pass(c.lifted->transcript));
}

TEST_CASE("perfect_code_pair") {
  const Sl23Instance rm = sl23_instance();
  CHECK_FALSE(perfect_code_pair(PairSpec(rm.hs[0], rm.a)).is_perfect_code);
  const Group c4 = make_cyclic(4);
  const auto whole = perfect_code_pair(PairSpec(Subgroup(c4, {0, 2}), Subgroup::whole(c4)));
  CHECK(whole.is_perfect_code);
  REQUIRE(whole.certificate);
  CHECK(whole.certificate->u.members().empty());
  const auto s3 = testing::s3();
  const auto c3 = perfect_code_pair(PairSpec(Subgroup::trivial(s3.group), sub(s3.group, {s3.cycle({0, 1, 2})})));
  CHECK(c3.is_perfect_code);
  REQUIRE(c3.certificate);
  CHECK(all_pass(c3.certificate->transcript));
  // Non-normal A goes through the general search.
  const Subgroup t = sub(s3.group, {s3.cycle({0, 1})});
  CHECK(perfect_code_pair(PairSpec(Subgroup::trivial(s3.group), t)).is_perfect_code ==
        decide_general(PairSpec(Subgroup::trivial(s3.group), t), 0, 1).has_value());
}

TEST_CASE("perfect-code criteria on named instances") {
  const Sl23Instance rm = sl23_instance();
  const PairSpec rp(rm.hs[0], rm.a);
  CHECK_FALSE(check_corollary_d(rp));
  CHECK_FALSE(check_quotient_corollary(rp));

  const Group q8 = make_quaternion8();
  const PairSpec qp(Subgroup(q8, {0, 2}), Subgroup(q8, {0, 1, 2, 3}));
  CHECK(check_quotient_corollary(qp) == perfect_code_pair(qp).is_perfect_code);
  CHECK(check_corollary_d(qp) == perfect_code_pair(qp).is_perfect_code);

  const auto s3 = testing::s3();
  const Subgroup c3 = sub(s3.group, {s3.cycle({0, 1, 2})});
  CHECK(check_odd_order_corollary(PairSpec(c3, c3)));
  const Subgroup whole = Subgroup::whole(s3.group);
  CHECK(check_odd_order_corollary(PairSpec(Subgroup::trivial(s3.group), whole)));

  const Group a4 = make_alternating(4);
  Subgroup v4 = Subgroup::trivial(a4);
  for (const auto& s : all_subgroups(a4))
    if (s.order() == 4) v4 = s;
  for (const auto& h : all_subgroups(a4)) {
    if (h.order() != 2) continue;
    const PairSpec p(h, v4);
    const bool covered = set_product(*a4, normalizer(h).members(), v4.members()).size() == 12;
    CHECK(check_odd_order_corollary(p) == covered);
    CHECK(check_odd_order_corollary(p) == perfect_code_pair(p).is_perfect_code);
  }
}

TEST_CASE("check_frattini_sylow") {
  const Group c4 = make_cyclic(4);
  CHECK(check_frattini_sylow(Subgroup::whole(c4), 2).verdict);
  const Sl23Instance rm = sl23_instance();
  const FrattiniResult fr = check_frattini_sylow(rm.a, 2);
  CHECK(fr.sylow == rm.a);
  CHECK(fr.verdict == perfect_code_pair(PairSpec(rm.a, rm.a)).is_perfect_code);

  const Group s4 = make_symmetric(4);
  Subgroup a4 = Subgroup::trivial(s4);
  for (const auto& s : all_subgroups(s4))
    if (s.order() == 12) a4 = s;
  const FrattiniResult f3 = check_frattini_sylow(a4, 3);
  CHECK(f3.sylow.order() == 3);
  CHECK(f3.verdict == perfect_code_pair(PairSpec(f3.sylow, a4)).is_perfect_code);
  CHECK(code_of([&] { check_frattini_sylow(a4, 5); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("necessary conditions") {
  const Group c4 = make_cyclic(4);
  CHECK(necessary_lem1(PairSpec(Subgroup(c4, {0, 2}), Subgroup::whole(c4))));
  CHECK(necessary_lem1(PairSpec(Subgroup::trivial(c4), Subgroup(c4, {0, 2}))));
  const Sl23Instance rm = sl23_instance();
  const PairSpec rp(rm.hs[0], rm.a);
  const bool lem1 = necessary_lem1(rp);
  CHECK((lem1 || !perfect_code_pair(rp).is_perfect_code));
  CHECK(necessary_divisibility(rp));
  CHECK(necessary_divisibility(PairSpec(rm.a, rm.a)));

  const Group s4 = make_symmetric(4);
  for (const auto& a : all_subgroups(s4)) {
    if (a.order() != 8) continue;
    std::vector<Elem> central;
    for (auto x : a.members())
      if (std::all_of(a.members().begin(), a.members().end(),
                      [&](Elem y) { return s4->mul(x, y) == s4->mul(y, x); }))
        central.push_back(x);
    const PairSpec p(Subgroup(s4, central), a);
    CHECK(p.h().order() == 2);
    if (!necessary_divisibility(p) || !necessary_lem1(p)) CHECK_FALSE(perfect_code_pair(p).is_perfect_code);
  }
}

TEST_CASE("arc-transitive conditions") {
  const auto s3 = testing::s3();
  const Subgroup h = sub(s3.group, {s3.cycle({0, 1})});
  const Elem x = s3.cycle({1, 2});
  const PairSpec pair(h, h);
  const ArcTransitiveReport rep = arc_transitive_perfect_code(pair, x);
  CHECK(rep.verdict() == arc_transitive_oracle(pair, x));
  CHECK(code_of([&] { arc_transitive_perfect_code(pair, s3.cycle({0, 1})); }) ==
        ErrorCode::PreconditionViolated);

  const Group d4 = make_dihedral(4);
  Elem z = 0;
  for (Elem e = 1; e < 8; ++e)
    if (d4->is_involution(e) && normalizer(sub(d4, {e})).order() == 8) z = e;
  for (Elem t = 1; t < 8; ++t) {
    if (!d4->is_involution(t) || t == z) continue;
    const Subgroup hh = sub(d4, {t});
    const Subgroup a = sub(d4, {t, z});
    const PairSpec p(hh, a);
    for (Elem y = 0; y < 8; ++y) {
      if (hh.contains(y)) continue;
      const ElementSet d = double_coset(hh, y);
      if (!std::binary_search(d.begin(), d.end(), d4->inv(y))) {
        CHECK(code_of([&] { arc_transitive_perfect_code(p, y); }) == ErrorCode::PreconditionViolated);
        continue;
      }
      CHECK(arc_transitive_perfect_code(p, y).verdict() == arc_transitive_oracle(p, y));
    }
  }

  // A = G: condition (1) holds for every x.
  const Group c4 = make_cyclic(4);
  const PairSpec full(Subgroup::trivial(c4), Subgroup::whole(c4));
  const ArcTransitiveReport r2 = arc_transitive_perfect_code(full, 2);
  CHECK(r2.covers);
  CHECK(r2.conditions());
  CHECK_FALSE(r2.outside_a);
  CHECK_FALSE(r2.verdict());
  CHECK_FALSE(arc_transitive_oracle(full, 2));
}

TEST_CASE("structural identities") {
  const Sl23Instance rm = sl23_instance();
  const auto cert = decide_general(PairSpec(rm.hs[0], rm.a), 0, 2);
  REQUIRE(cert);
  const Transcript t = structural_identities(*cert);
  CHECK(t.size() == 3);
  CHECK(all_pass(t));
}
