#pragma once

#include <json.hpp>

#include "lcy/curve_pairs.hpp"
#include "lcy/fan.hpp"
#include "lcy/fibration.hpp"
#include "lcy/gadgets.hpp"
#include "lcy/heisenberg.hpp"
#include "lcy/rational.hpp"
#include "lcy/smith.hpp"
#include "lcy/todd_coxeter.hpp"

// JSON views of the library types.  Rationals and big integers are
// lowest-terms strings ("p" or "p/q"); plain JSON numbers are accepted on
// input.  Object keys come out sorted (nlohmann default), so serialized
// output is byte-stable.
namespace lcy::io {

using json = nlohmann::json;

inline json rat_json(const Rat& q) { return rat_to_string(q); }
inline json int_json(const Int& n) { return n.str(); }

inline Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<long long>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw ParseError("expected a rational as \"p/q\" string or integer");
}

inline Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    auto v = parse_int(j.get<std::string>());
    if (v) return *v;
  }
  throw ParseError("expected an integer");
}

// --- curve pairs -----------------------------------------------------------

inline json to_json(const curves::CurveDivisor& d) {
  json pts = json::array();
  for (const auto& p : d.points) pts.push_back({{"label", p.label}, {"coeff", rat_json(p.coeff)}});
  return {{"genus", d.genus}, {"points", pts}};
}

inline curves::CurveDivisor curve_divisor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("genus") || !j.contains("points"))
    throw ParseError("curve divisor needs {\"genus\": 0|1, \"points\": [...]}");
  std::vector<curves::MarkedPoint> pts;
  for (const auto& p : j.at("points")) {
    if (!p.contains("label") || !p.contains("coeff"))
      throw ParseError("divisor point needs \"label\" and \"coeff\"");
    pts.push_back({p.at("label").get<std::string>(), rat_from_json(p.at("coeff"))});
  }
  return curves::make_curve_divisor(j.at("genus").get<int>(), std::move(pts));
}

inline json to_json(const curves::ComplementCertificate& c) {
  return {{"N", int_json(c.n)}, {"gamma_plus", to_json(c.gamma_plus)}};
}

inline json to_json(const curves::CurvePairClass& c) {
  json out{{"kind", curves::kind_name(c.kind)}};
  if (c.sporadic) out["sporadic"] = json::array({2, 3, c.sporadic->n});
  if (c.elliptic) out["elliptic_family"] = curves::family_name(*c.elliptic);
  if (c.toric_witness) out["witness"] = to_json(*c.toric_witness);
  return out;
}

inline json to_json(const curves::GroupId& id) {
  json out{{"description", id.description}, {"consistent", id.consistent}};
  out["order"] = id.order ? int_json(*id.order) : json();
  return out;
}

// --- finitely presented groups ----------------------------------------------

inline json to_json(const fp::Presentation& p) {
  json rels = json::array();
  for (const auto& r : p.relators) rels.push_back(r);
  return {{"generators", p.names}, {"relators", rels}, {"text", fp::to_text(p)}};
}

inline fp::Presentation presentation_from_json(const json& j) {
  if (j.is_string()) return fp::parse_presentation(j.get<std::string>());
  if (!j.is_object()) throw ParseError("presentation must be text or an object");
  if (j.contains("text")) return fp::parse_presentation(j.at("text").get<std::string>());
  if (!j.contains("generators") || !j.contains("relators"))
    throw ParseError("presentation object needs \"generators\" and \"relators\"");
  std::vector<std::string> names;
  for (const auto& g : j.at("generators")) names.push_back(g.get<std::string>());
  std::vector<fp::Word> rels;
  for (const auto& r : j.at("relators")) {
    fp::Word w;
    for (const auto& x : r) w.push_back(x.get<int>());
    rels.push_back(std::move(w));
  }
  const int gens = static_cast<int>(names.size());
  return fp::Presentation(gens, std::move(rels), std::move(names));
}

inline json to_json(const fp::CosetTable& t) {
  json rows = json::array();
  for (const auto& row : t.table) {
    json r = json::array();
    for (int v : row) r.push_back(v < 0 ? json() : json(v + 1));  // 1-based cosets
    rows.push_back(r);
  }
  return {{"status", t.status == fp::CosetTable::Status::Complete ? "complete" : "exceeded"},
          {"index", t.index()},
          {"table", rows}};
}

inline json to_json(const fp::AbelianInvariants& a) {
  json tor = json::array();
  for (const auto& d : a.torsion) tor.push_back(int_json(d));
  return {{"torsion", tor}, {"free_rank", a.free_rank}, {"rank", a.rank()}};
}

// --- Heisenberg --------------------------------------------------------------

inline json to_json(const heis::HeisenbergElement& e) { return e.to_string(); }

inline json to_json(const heis::LatticeSubgroupDatum& l) {
  return {{"basis", json::array({json::array({int_json(l.basis[0][0]), int_json(l.basis[0][1])}),
                                 json::array({int_json(l.basis[1][0]), int_json(l.basis[1][1])})})}};
}

inline json to_json(const heis::GadgetCheck& c) {
  return {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
}

inline json gadget_json(const heis::GadgetReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"gadget", r.gadget},
          {"passed", r.passed()},
          {"subgroup_index", int_json(r.subgroup_index)},
          {"checks", checks}};
}

// --- fans ----------------------------------------------------------------------

inline json to_json(const fan::Fan2D& f) {
  json rays = json::array();
  for (const auto& r : f.rays) rays.push_back(json::array({r.x, r.y}));
  return {{"rays", rays}};
}

inline fan::Fan2D fan_from_json(const json& j) {
  const json& rays = j.is_array() ? j : (j.contains("rays") ? j.at("rays") : j);
  if (!rays.is_array()) throw ParseError("fan needs {\"rays\": [[a,b],...]}");
  std::vector<fan::Ray> out;
  for (const auto& r : rays) {
    if (!r.is_array() || r.size() != 2) throw ParseError("ray must be a pair [a,b]");
    out.push_back({r[0].get<long long>(), r[1].get<long long>()});
  }
  return fan::make_fan(std::move(out));
}

inline json to_json(const fan::ConeReport& c) {
  return {{"index", int_json(c.index)},
          {"type", json::array({int_json(c.n), int_json(c.q)})},
          {"label", c.label_text()}};
}

// --- fibration ------------------------------------------------------------------

inline json to_json(const fib::AdjunctionPointDatum& d) {
  json contribs = json::array();
  for (const auto& [b, mult] : d.contributions)
    contribs.push_back({{"coeff", rat_json(b)}, {"mult", int_json(mult)}});
  return {{"orbifold_index", int_json(d.m_p)}, {"contributions", contribs}};
}

inline json to_json(const fib::FibrationFiberDatum& f) {
  return {{"multiplicity", int_json(f.m_p)}, {"a", rat_json(f.a_p)}};
}

inline json to_json(const fib::CoverCoeffDatum& c) {
  return {{"m", int_json(c.m)}, {"b", rat_json(c.b)}, {"a", rat_json(c.a)}};
}

inline json to_json(const fib::StructureCertificate& c) {
  return {{"case_label", c.case_label},
          {"kind", fib::subgroup_kind_name(c.kind)},
          {"rank_bound", c.rank_bound},
          {"index_bound", int_json(c.index_bound)},
          {"statement", c.statement},
          {"table_version", c.table_version}};
}

}  // namespace lcy::io
