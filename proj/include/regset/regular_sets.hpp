#pragma once

// (r,s)-regular sets and perfect codes of a pair (G, H).
//
// A subgroup A containing H is an (r,s)-regular set of (G, H) when some
// coset graph Cos(G, H, U) has the left H-cosets inside A as an
// (r,s)-regular vertex set. Since U is a union of (H,H)-double cosets, the
// question reduces to choosing inverse-closed groups of double cosets whose
// left H-coset counts inside each left A-coset hit (r, s, s, ..., s).
//
// Everything here works on the tables from group.hpp and is re-checked
// against the brute-force graph oracle from coset_graph.hpp before a
// certificate is handed out.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regset/config.hpp"
#include "regset/coset_graph.hpp"
#include "regset/cosets.hpp"
#include "regset/group.hpp"

namespace regset {

// H <= A <= G, with G the common parent.
class PairSpec {
 public:
  // Throws PreconditionViolated unless H <= A (same parent).
  PairSpec(Subgroup h, Subgroup a);

  const Group& group_ptr() const noexcept { return h_.parent(); }
  const GroupTable& group() const noexcept { return h_.group(); }
  const Subgroup& h() const noexcept { return h_; }
  const Subgroup& a() const noexcept { return a_; }
  // |A : H|
  std::size_t code_size() const noexcept { return a_.order() / h_.order(); }
  // |G : A|
  std::size_t code_index() const noexcept { return a_.index(); }

 private:
  Subgroup h_;
  Subgroup a_;
};

struct Check {
  std::string name;
  bool pass = false;
  bool operator==(const Check&) const = default;
};

using Transcript = std::vector<Check>;

bool all_pass(const Transcript& t);

struct RegSetCertificate {
  PairSpec pair;
  std::size_t r = 0;
  std::size_t s = 0;
  std::vector<Elem> double_coset_reps;
  ConnectionSet u;
  ElementSet x;
  Transcript transcript;
};

struct Condition {
  std::string id;
  bool pass = true;
  std::optional<Elem> witness;
};

struct ConditionReport {
  std::vector<Condition> conditions;
  bool verdict() const;
  const Condition* find(const std::string& id) const;
};

struct TheoremAResult {
  bool holds = false;
  Transcript transcript;
};

struct SearchOptions {
  std::uint64_t node_budget = Limits{}.search_node_budget;
};

struct TheoremBOptions {
  // Test (b) and (c) on every element rather than one per A-coset.
  bool strict = false;
};

// Checks XH = HX^-1, XH ∩ H = ∅, |XH ∩ A : H| = r and |XH ∩ tA : H| = s for
// every left transversal element t outside A.
TheoremAResult verify_theorem_a(const PairSpec& pair, std::span<const Elem> x, std::size_t r,
                                std::size_t s);

// Re-checks a certificate from scratch: connection-set validity, U = XH,
// U built from the listed double cosets, the verify_theorem_a clauses, the graph
// oracle, the (r,s) bounds and the degree identity.
Transcript audit_certificate(const PairSpec& pair, std::span<const Elem> u,
                             std::span<const Elem> x, std::span<const Elem> reps,
                             std::size_t r, std::size_t s);

// Complete search over inverse-closed unions of double cosets. nullopt
// proves that no U exists. Throws PreconditionViolated for (r, s) outside
// 0 <= r <= |A:H|-1, 0 <= s <= |A:H| and SearchBudgetExceeded when the
// node budget runs out.
std::optional<RegSetCertificate> decide_general(const PairSpec& pair, std::size_t r, std::size_t s,
                                                const SearchOptions& options = {});

// decide_general with the double-coset units and their coset counts
// computed once, for sweeping many (r, s) over one pair.
class RegularSetSearch {
 public:
  explicit RegularSetSearch(PairSpec pair);

  const PairSpec& pair() const noexcept;
  std::optional<RegSetCertificate> decide(std::size_t r, std::size_t s,
                                          const SearchOptions& options = {}) const;
  // Number of inverse-closed search units (self-inverse double cosets and
  // inverse pairs) outside H.
  std::size_t unit_count() const noexcept;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// Conditions (a), (b), (c) for H ⊴ A ⊴ G. Throws PreconditionViolated if
// the chain is not normal or (r, s) is out of range.
ConditionReport check_theorem_b(const PairSpec& pair, std::size_t r, std::size_t s,
                                const TheoremBOptions& options = {});

// Explicit U for a chain passing check_theorem_b: U0 inside A from
// inverse-closed sets of A/H, U1 outside A from l_t = s / conj_index
// double cosets per {tA, t^-1 A}. Throws PreconditionViolated when the
// conditions fail and ConstructionFailed if the oracle rejects the result.
RegSetCertificate construct_theorem_b(const PairSpec& pair, std::size_t r, std::size_t s);

// Cayley case, A ⊴ G. Throws PreconditionViolated unless A is normal,
// gcd(2, |A|-1) divides r and (r, s) is in range.
bool check_corollary_b1(const Subgroup& a, std::size_t r, std::size_t s);

// For A ⊴ G: every x with x^2 ∈ A has some a ∈ A with (xa)^2 = 1.
bool hxz_perfect_code_normal(const Subgroup& a);

struct CorollaryB2Result {
  bool verdict = false;
  // verdict agrees with decide_general on (G, 1, A, r, s)
  bool consistent = false;
};

CorollaryB2Result check_corollary_b2(const Subgroup& a, std::size_t r, std::size_t s);

struct TheoremCResult {
  bool applicable = false;          // G = N_G(H) A
  bool quotient_condition = false;  // N_A(H)/H is (r,s)-regular in N_G(H)/H
  bool verdict = false;
  std::optional<RegSetCertificate> lifted;
  // For s = 1 and a negative verdict: decide_general also finds nothing.
  std::optional<bool> converse_consistent;
};

TheoremCResult check_theorem_c(const PairSpec& pair, std::size_t r, std::size_t s);

struct PerfectCodeResult {
  bool is_perfect_code = false;
  std::optional<RegSetCertificate> certificate;
};

// Normal A: G = N_G(H) A and the quotient perfect-code test; otherwise the
// general search for (0, 1).
PerfectCodeResult perfect_code_pair(const PairSpec& pair);

bool check_corollary_d(const PairSpec& pair);
bool check_quotient_corollary(const PairSpec& pair);
bool check_odd_order_corollary(const PairSpec& pair);

struct FrattiniResult {
  Subgroup sylow;
  bool verdict = false;
};

// H := a Sylow p-subgroup of A; throws FrattiniCheckFailed if G != N_G(H) A.
FrattiniResult check_frattini_sylow(const Subgroup& a, std::uint64_t p);

bool necessary_lem1(const PairSpec& pair);
bool necessary_divisibility(const PairSpec& pair);

struct ArcTransitiveReport {
  bool covers = false;           // G = A ∪ AxA
  bool stabilizers_agree = false;  // H ∩ H^x = H ∩ A^x
  bool translates_meet = false;    // ∀a ∈ A ∃h ∈ H: ha ∈ A ∩ A^x
  bool outside_a = false;          // x ∉ A, i.e. HxH misses A
  // The three listed conditions.
  bool conditions() const { return covers && stabilizers_agree && translates_meet; }
  bool verdict() const { return conditions() && outside_a; }
};

// Requires HxH = Hx^-1 H and x ∉ H (PreconditionViolated otherwise).
ArcTransitiveReport arc_transitive_perfect_code(const PairSpec& pair, Elem x);

// Graph-oracle answer for the same question: are the A-cosets a perfect
// code of Cos(G, H, HxH)?
bool arc_transitive_oracle(const PairSpec& pair, Elem x);

// Degree identity and, when A != G, the two-cell quotient matrix
// [[r, k-r], [s, k-s]] with eigenvalues {k, r-s}, k = |U|/|H|.
Transcript structural_identities(const RegSetCertificate& cert);

// Left H-coset profile of the A-cosets in Cos(G, H, U).
std::optional<RegularityProfile> profile_of_pair(const PairSpec& pair, const ConnectionSet& u);

}  // namespace regset
