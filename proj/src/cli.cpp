#include "regset/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "regset/certificate_io.hpp"
#include "regset/group_spec.hpp"
#include "regset/survey.hpp"

namespace regset {

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

// "g3" or "3"
Elem parse_element(const std::string& token, const GroupTable& g) {
  std::string digits = token;
  if (!digits.empty() && digits.front() == 'g') digits.erase(0, 1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
    throw Error(ErrorCode::ParseError, "bad element \"" + token + "\"");
  const unsigned long v = std::stoul(digits);
  if (v >= g.order()) throw Error(ErrorCode::ParseError, "element " + token + " out of range");
  return static_cast<Elem>(v);
}

// Element list "0,2,5" (brackets optional) taken as is; generators
// "g1,g4" or "gens:1,4" closed to a subgroup; "trivial"; "all".
Subgroup parse_subgroup(const std::string& text, const Group& g) {
  if (text == "trivial" || text.empty()) return Subgroup::trivial(g);
  if (text == "all") return Subgroup::whole(g);
  std::string body = text;
  bool gens = body.rfind("gens:", 0) == 0;
  if (gens) body.erase(0, 5);
  gens = gens || body.find('g') != std::string::npos;
  std::replace_if(body.begin(), body.end(), [](char c) { return c == ',' || c == '[' || c == ']'; }, ' ');
  std::istringstream in(body);
  std::vector<Elem> elems;
  for (std::string tok; in >> tok;) elems.push_back(parse_element(tok, *g));
  if (gens) return generate_subgroup(g, elems);
  return Subgroup(g, make_set(std::move(elems)));
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write \"" + path + "\"");
  f << text;
}

std::string format_set(const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

struct PairArgs {
  std::string group;
  std::string h = "trivial";
  std::string a;
  std::size_t r = 0;
  std::size_t s = 0;
  std::string emit;
  std::string graph;
  bool strict = false;
};

void emit_certificate(const RegSetCertificate& cert, const nlohmann::json& spec, const PairArgs& args,
                      std::ostream& out) {
  const std::string text = certificate_to_json(cert, spec).dump(2);
  if (args.emit.empty()) {
    out << text << "\n";
  } else {
    write_file(args.emit, text + "\n");
  }
  if (!args.graph.empty()) {
    std::ofstream f(args.graph);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write \"" + args.graph + "\"");
    write_edge_list(f, build(cert.u));
  }
}

int run_check(const PairArgs& args, std::ostream& out) {
  const ParsedGroup pg = parse_group_argument(args.group);
  const PairSpec pair(parse_subgroup(args.h, pg.group), parse_subgroup(args.a, pg.group));
  const auto cert = decide_general(pair, args.r, args.s);
  out << (cert ? "true" : "false") << "\n";
  if (!cert) return kFalse;
  emit_certificate(*cert, pg.spec, args, out);
  return kTrue;
}

int run_construct(const PairArgs& args, std::ostream& out) {
  const ParsedGroup pg = parse_group_argument(args.group);
  const PairSpec pair(parse_subgroup(args.h, pg.group), parse_subgroup(args.a, pg.group));
  const ConditionReport report = check_theorem_b(pair, args.r, args.s, {args.strict});
  for (const auto& c : report.conditions) {
    out << "(" << c.id << ") " << (c.pass ? "holds" : "fails");
    if (c.witness) out << " at " << *c.witness;
    out << "\n";
  }
  if (!report.verdict()) return kFalse;
  emit_certificate(construct_theorem_b(pair, args.r, args.s), pg.spec, args, out);
  return kTrue;
}

int run_perfect_code(const PairArgs& args, std::ostream& out) {
  const ParsedGroup pg = parse_group_argument(args.group);
  const PairSpec pair(parse_subgroup(args.h, pg.group), parse_subgroup(args.a, pg.group));
  const PerfectCodeResult res = perfect_code_pair(pair);
  out << (res.is_perfect_code ? "true" : "false") << "\n";
  if (!res.is_perfect_code) return kFalse;
  if (res.certificate) emit_certificate(*res.certificate, pg.spec, args, out);
  return kTrue;
}

int run_survey(const std::string& group, const std::string& path, const SurveyOptions& options,
               std::ostream& out) {
  const ParsedGroup pg = parse_group_argument(group);
  const SurveyReport report = survey(pg.group, options);
  const std::string json = report.to_json().dump(2) + "\n";
  if (path.empty()) {
    out << json;
  } else {
    write_file(path, json);
    out << report.to_text();
  }
  return report.anomaly_count() == 0 ? kTrue : kFalse;
}

int run_verify(const std::string& path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open \"" + path + "\"");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  const VerifyReport report = verify_certificate(doc);
  for (const auto& c : report.transcript) out << (c.pass ? "pass  " : "FAIL  ") << c.name << "\n";
  out << (report.valid ? "valid" : "invalid") << "\n";
  return report.valid ? kTrue : kFalse;
}

int run_show(const std::string& group, std::ostream& out) {
  const ParsedGroup pg = parse_group_argument(group);
  const Group& g = pg.group;
  out << g->label() << ", order " << g->order() << "\n";
  out << "element orders:";
  for (Elem x = 0; x < g->order(); ++x) out << " g" << x << ":" << g->element_order(x);
  out << "\n";
  const auto subs = all_subgroups(g, Limits::from_env().enumeration_cap);
  out << subs.size() << " subgroups\n";
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const Subgroup& s = subs[i];
    const Subgroup n = normalizer(s);
    std::vector<std::size_t> above;
    for (std::size_t j = i + 1; j < subs.size(); ++j)
      if (is_subgroup_of(s, subs[j])) above.push_back(j);
    out << "  #" << i << " order " << s.order() << " " << format_set(s.members())
        << (n.order() == g->order() ? " normal" : "") << " |N_G|=" << n.order() << " in:";
    for (auto j : above) out << " #" << j;
    out << "\n";
  }
  return kTrue;
}

void add_pair_options(CLI::App* cmd, PairArgs& args, bool needs_rs) {
  cmd->add_option("group", args.group, "preset:name[:n], product with '*', JSON file, or inline JSON")
      ->required();
  cmd->add_option("--H", args.h, "element list, gens:<list>, or trivial");
  cmd->add_option("--A", args.a, "element list, gens:<list>, or all")->required();
  if (needs_rs) {
    cmd->add_option("--r", args.r)->required();
    cmd->add_option("--s", args.s)->required();
  }
  cmd->add_option("--emit", args.emit, "write the certificate here instead of stdout");
  cmd->add_option("--graph", args.graph, "write the coset graph edge list here");
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"regular sets and perfect codes in coset graphs", "regset"};
  app.require_subcommand(1);

  PairArgs check_args, construct_args, perfect_args;
  add_pair_options(app.add_subcommand("check", "decide whether A is an (r,s)-regular set"),
                   check_args, true);
  auto* construct = app.add_subcommand("construct", "explicit construction for H ⊴ A ⊴ G");
  add_pair_options(construct, construct_args, true);
  construct->add_flag("--strict", construct_args.strict, "check conditions on every element");
  add_pair_options(app.add_subcommand("perfect-code", "decide whether A is a perfect code"),
                   perfect_args, false);

  std::string survey_group, survey_out;
  SurveyOptions survey_opts;
  auto* survey_cmd = app.add_subcommand("survey", "cross-check every pair H <= A <= G");
  survey_cmd->add_option("group", survey_group)->required();
  survey_cmd->add_option("--out", survey_out, "JSON report path (stdout if omitted)");
  survey_cmd->add_option("--threads", survey_opts.threads);
  survey_cmd->add_flag("--strict", survey_opts.strict);

  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "re-check a certificate file");
  verify->add_option("certificate", cert_path)->required();

  std::string show_group;
  auto* show = app.add_subcommand("show", "subgroup lattice and normalizers");
  show->add_option("group", show_group)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kError;
  }

  try {
    if (app.got_subcommand("check")) return run_check(check_args, out);
    if (app.got_subcommand("construct")) return run_construct(construct_args, out);
    if (app.got_subcommand("perfect-code")) return run_perfect_code(perfect_args, out);
    if (app.got_subcommand("survey")) return run_survey(survey_group, survey_out, survey_opts, out);
    if (app.got_subcommand("verify")) return run_verify(cert_path, out);
    if (app.got_subcommand("show")) return run_show(show_group, out);
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

int cli_main(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace regset
