#include "regset/survey.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>
#include <tuple>

namespace regset {

namespace {

bool normal_in_parent(const Subgroup& s) { return is_normal(s, Subgroup::whole(s.parent())); }

std::size_t gcd2(std::size_t n) { return n % 2 == 0 ? 2 : 1; }

// p if |H| is the full p-part of |A| for a prime p, else 0.
std::uint64_t sylow_prime(const PairSpec& pair) {
  std::size_t n = pair.h().order();
  if (n == 1) return 0;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  if (n != 1 || pair.code_size() % p == 0) return 0;
  return p;
}

std::string rs_tag(std::size_t r, std::size_t s) {
  return "(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

}  // namespace

SurveyRow survey_pair(const PairSpec& pair, const SurveyOptions& options) {
  const auto& g = pair.group();
  const auto& h = pair.h();
  const auto& a = pair.a();
  SurveyRow row;
  row.h = h.members();
  row.a = a.members();
  row.h_normal_in_a = is_normal(h, a);
  row.a_normal = normal_in_parent(a);
  row.h_normal = normal_in_parent(h);
  row.degenerate = pair.code_index() == 1;

  auto agree = [&row](const std::string& name, bool ok, const std::string& detail = {}) {
    if (ok) {
      ++row.agreements[name];
    } else {
      row.anomalies.push_back(detail.empty() ? name : name + " " + detail);
    }
  };

  try {
    const std::size_t k = pair.code_size();
    const RegularSetSearch search(pair);
    std::vector<std::vector<bool>> present(k, std::vector<bool>(k + 1, false));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t s = 0; s <= k; ++s) {
        const auto cert = search.decide(r, s, {options.node_budget});
        if (!cert) continue;
        present[r][s] = true;
        row.achievable.emplace_back(r, s);
        agree("certificate", all_pass(cert->transcript) && all_pass(structural_identities(*cert)),
              rs_tag(r, s));
      }

    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t s = 0; s <= k; ++s)
        agree("rs_split", present[r][s] == (present[r][0] && present[0][s]), rs_tag(r, s));

    if (row.h_normal_in_a && row.a_normal) {
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t s = 0; s <= k; ++s) {
          const bool verdict = check_theorem_b(pair, r, s, {options.strict}).verdict();
          agree("theorem_b", verdict == present[r][s], rs_tag(r, s));
          if (verdict) {
            bool built = true;
            try {
              construct_theorem_b(pair, r, s);
            } catch (const Error&) {
              built = false;
            }
            agree("theorem_b_construction", built, rs_tag(r, s));
          }
        }
    }

    if (h.order() == 1) {
      const std::size_t step = gcd2(a.order() - 1);
      for (std::size_t r = 0; r < k; r += step)
        for (std::size_t s = 0; s <= k; ++s) {
          if (s % 2 == 0 && a.order() > 1) agree("even_s_cayley", present[r][s], rs_tag(r, s));
          if (!row.a_normal) continue;
          agree("corollary_b1", check_corollary_b1(a, r, s) == present[r][s], rs_tag(r, s));
          if (s % 2 == 1) agree("corollary_b2", hxz_perfect_code_normal(a) == present[r][s], rs_tag(r, s));
        }
    }

    if (row.a_normal) {
      const std::size_t b = intersect(a, normalizer(h)).order() / h.order();
      for (std::size_t r = 0; r < b; r += gcd2(b - 1))
        for (std::size_t s = 0; s <= b; ++s) {
          const TheoremCResult c = check_theorem_c(pair, r, s);
          if (c.verdict) agree("theorem_c_forward", c.lifted.has_value() && present[r][s], rs_tag(r, s));
          if (s == 1) agree("theorem_c_s1", c.verdict == present[r][1], rs_tag(r, s));
        }
    }

    const PerfectCodeResult pc = perfect_code_pair(pair);
    const bool pcp = pc.is_perfect_code;
    agree("perfect_code_pair", pcp == present[0][1]);
    if (pc.certificate) agree("perfect_code_certificate", all_pass(pc.certificate->transcript));

    if (row.a_normal) {
      agree("corollary_d", check_corollary_d(pair) == pcp);
      if (row.h_normal) agree("quotient_corollary", check_quotient_corollary(pair) == pcp);
      if (a.order() % 2 == 1 || pair.code_index() % 2 == 1)
        agree("odd_order_corollary", check_odd_order_corollary(pair) == pcp);
      if (const auto p = sylow_prime(pair)) {
        try {
          const FrattiniResult fr = check_frattini_sylow(a, p);
          if (fr.sylow == h) agree("frattini_corollary", fr.verdict == pcp);
        } catch (const Error& e) {
          agree("frattini_corollary", false, e.what());
        }
      }
    }

    if (pcp) {
      agree("necessary_lem1", necessary_lem1(pair));
      if (row.h_normal_in_a) agree("necessary_divisibility", necessary_divisibility(pair));
    }

    const DoubleCosetDecomp classes = decompose_into_double_cosets(
        [&] {
          std::vector<Elem> all(g.order());
          for (Elem x = 0; x < g.order(); ++x) all[x] = x;
          return all;
        }(),
        h);
    std::vector<std::optional<bool>> oracle(classes.reps.size());
    for (Elem x = 0; x < g.order(); ++x) {
      if (h.contains(x)) continue;
      const std::size_t cls = *classes.class_of(x);
      if (!classes.self_inverse[cls]) continue;
      if (!oracle[cls]) oracle[cls] = arc_transitive_oracle(pair, x);
      const ArcTransitiveReport rep = arc_transitive_perfect_code(pair, x);
      agree("arc_transitive", rep.verdict() == *oracle[cls], "x=" + std::to_string(x));
      if (rep.conditions() != *oracle[cls]) ++row.arc_literal_mismatches;
    }
  } catch (const Error& e) {
    row.anomalies.push_back(std::string("error: ") + e.what());
  }
  return row;
}

SurveyReport survey(const Group& g, const SurveyOptions& options) {
  const std::vector<Subgroup> subs = all_subgroups(g, Limits::from_env().enumeration_cap);
  std::vector<PairSpec> pairs;
  for (const auto& a : subs)
    for (const auto& h : subs)
      if (is_subgroup_of(h, a)) pairs.emplace_back(h, a);

  std::vector<SurveyRow> rows(pairs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) rows[i] = survey_pair(pairs[i], options);
  };
  std::size_t n = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min(n, std::max<std::size_t>(pairs.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::sort(rows.begin(), rows.end(), [](const SurveyRow& x, const SurveyRow& y) {
    return std::forward_as_tuple(x.h.size(), x.h, x.a.size(), x.a) <
           std::forward_as_tuple(y.h.size(), y.h, y.a.size(), y.a);
  });
  return SurveyReport{g->label(), g->order(), std::move(rows)};
}

std::size_t SurveyReport::anomaly_count() const {
  std::size_t n = 0;
  for (const auto& row : rows) n += row.anomalies.size();
  return n;
}

nlohmann::ordered_json SurveyReport::to_json() const {
  nlohmann::ordered_json out;
  out["group"] = group;
  out["order"] = order;
  out["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json j;
    j["H"] = row.h;
    j["A"] = row.a;
    j["H_normal_in_A"] = row.h_normal_in_a;
    j["A_normal"] = row.a_normal;
    j["H_normal"] = row.h_normal;
    j["degenerate"] = row.degenerate;
    j["achievable"] = nlohmann::ordered_json::array();
    for (const auto& [r, s] : row.achievable) j["achievable"].push_back({r, s});
    j["agreements"] = nlohmann::ordered_json::object();
    for (const auto& [name, count] : row.agreements) j["agreements"][name] = count;
    j["anomalies"] = row.anomalies;
    j["arc_literal_mismatches"] = row.arc_literal_mismatches;
    out["rows"].push_back(std::move(j));
  }
  out["anomaly_count"] = anomaly_count();
  return out;
}

std::string SurveyReport::to_text() const {
  std::ostringstream out;
  out << group << " (order " << order << "), " << rows.size() << " pairs, " << anomaly_count()
      << " anomalies\n";
  out << std::left << std::setw(6) << "|H|" << std::setw(6) << "|A|" << std::setw(8) << "normal"
      << std::setw(12) << "achievable" << std::setw(8) << "checks" << "anomalies\n";
  for (const auto& row : rows) {
    std::size_t checks = 0;
    for (const auto& kv : row.agreements) checks += kv.second;
    std::string flags;
    flags += row.h_normal_in_a ? 'h' : '-';
    flags += row.a_normal ? 'a' : '-';
    flags += row.degenerate ? 'd' : '-';
    out << std::setw(6) << row.h.size() << std::setw(6) << row.a.size() << std::setw(8) << flags
        << std::setw(12) << row.achievable.size() << std::setw(8) << checks << row.anomalies.size()
        << "\n";
    for (const auto& an : row.anomalies) out << "    " << an << "\n";
  }
  return out.str();
}

}  // namespace regset
