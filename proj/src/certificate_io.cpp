#include "regset/certificate_io.hpp"

#include <fstream>

#include "regset/group_spec.hpp"

namespace regset {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::vector<Elem> elems(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_array())
    parse_error(std::string("missing array \"") + key + "\"");
  std::vector<Elem> out;
  for (const auto& v : doc.at(key)) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
      parse_error(std::string("\"") + key + "\" must hold non-negative integers");
    const auto e = v.get<std::int64_t>();
    out.push_back(e > UINT32_MAX ? UINT32_MAX : static_cast<Elem>(e));
  }
  return out;
}

std::size_t count(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_number_integer() || doc.at(key).get<std::int64_t>() < 0)
    parse_error(std::string("\"") + key + "\" must be a non-negative integer");
  return doc.at(key).get<std::size_t>();
}

}  // namespace

nlohmann::ordered_json certificate_to_json(const RegSetCertificate& cert, const json& group_spec) {
  const auto& g = cert.pair.group();
  nlohmann::ordered_json out;
  out["group"] = {{"label", g.label()}, {"order", g.order()}, {"spec", group_spec}};
  out["H"] = cert.pair.h().members();
  out["A"] = cert.pair.a().members();
  out["r"] = cert.r;
  out["s"] = cert.s;
  out["double_coset_reps"] = cert.double_coset_reps;
  out["U"] = cert.u.members();
  out["X"] = cert.x;
  out["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : cert.transcript) out["checks"].push_back({{"name", c.name}, {"pass", c.pass}});
  return out;
}

nlohmann::ordered_json certificate_to_json(const RegSetCertificate& cert) {
  return certificate_to_json(cert, emit_group_spec(cert.pair.group()));
}

VerifyReport verify_certificate(const json& doc) {
  if (!doc.is_object()) parse_error("certificate must be a JSON object");
  if (!doc.contains("group") || !doc.at("group").is_object()) parse_error("missing \"group\"");
  const json& grp = doc.at("group");
  if (!grp.contains("spec")) parse_error("group has no \"spec\"");
  const std::size_t order = count(grp, "order");
  const auto h_elems = elems(doc, "H");
  const auto a_elems = elems(doc, "A");
  const auto reps = elems(doc, "double_coset_reps");
  const auto u = elems(doc, "U");
  const auto x = elems(doc, "X");
  const std::size_t r = count(doc, "r");
  const std::size_t s = count(doc, "s");

  const Group g = group_from_spec(grp.at("spec"));
  VerifyReport out;
  auto& t = out.transcript;
  t.push_back({"group order matches", g->order() == order});

  auto subgroup = [&](const std::vector<Elem>& m) -> std::optional<Subgroup> {
    for (auto e : m)
      if (e >= g->order()) return std::nullopt;
    try {
      return Subgroup(g, make_set(m));
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  const auto h = subgroup(h_elems);
  const auto a = subgroup(a_elems);
  t.push_back({"H is a subgroup", h.has_value()});
  t.push_back({"A is a subgroup", a.has_value()});
  const bool chain = h && a && is_subgroup_of(*h, *a);
  t.push_back({"H <= A", chain});
  if (chain) {
    for (auto& c : audit_certificate(PairSpec(*h, *a), u, x, reps, r, s)) t.push_back(std::move(c));
  }
  out.valid = all_pass(t);
  return out;
}

bool verify_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open \"" + path + "\"");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    parse_error(path + ": " + e.what());
  }
  return verify_certificate(doc).valid;
}

}  // namespace regset
