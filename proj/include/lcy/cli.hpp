#pragma once

#include <CLI11.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lcy/serialization.hpp"
#include "lcy/verify.hpp"

namespace lcy::cli {

using io::json;

/// Exit codes are part of the interface: 0 ok, 2 parse error, 3
/// precondition violation, 4 budget exceeded, 5 verification failure.
enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kPreconditionError = 3,
  kBudgetExceeded = 4,
  kVerificationFailure = 5,
};

struct CommandResult {
  int exit_code = kOk;
  json payload;
};

namespace detail {

constexpr int kSchemaVersion = 1;

inline json ok(json body) {
  body["status"] = "ok";
  body["schema_version"] = kSchemaVersion;
  return body;
}

inline json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON input");
  return j;
}

inline fan::Ray parse_ray(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("ray must be given as 'x,y'");
  auto x = ::lcy::parse_int(text.substr(0, comma));
  auto y = ::lcy::parse_int(text.substr(comma + 1));
  if (!x || !y) throw ParseError("ray must be given as 'x,y'");
  return {static_cast<long long>(*x), static_cast<long long>(*y)};
}

inline curves::PairKind parse_kind(const std::string& s) {
  if (s == "toric") return curves::PairKind::Toric;
  if (s == "elliptic") return curves::PairKind::Elliptic;
  if (s == "sporadic") return curves::PairKind::Sporadic;
  throw ParseError("class must be toric, elliptic, or sporadic");
}

inline Int parse_integer_arg(const std::string& s, const char* what) {
  auto v = ::lcy::parse_int(s);
  if (!v) throw ParseError(std::string(what) + " must be an integer, got '" + s + "'");
  return *v;
}

inline json classify_payload(const curves::CurveDivisor& d) {
  curves::CurvePairClass cls = curves::classify_trichotomy(d);
  auto op = curves::orbifold_presentation(d);
  json loops = json::object();
  for (const auto& [label, gen] : op.point_loops)
    loops[label] = op.presentation.name_of(gen);
  json out{{"divisor", io::to_json(d)},
           {"degree", io::rat_json(curves::pair_degree(d))},
           {"classification", io::to_json(cls)},
           {"presentation", io::to_json(op.presentation)},
           {"point_loops", loops},
           {"group", io::to_json(curves::identify_curve_group(d))}};
  auto cover = curves::abelianization_cover(d);
  out["abelianization_cover"] = {{"degree", io::int_json(cover.degree)},
                                 {"target", io::to_json(cover.target)}};
  return out;
}

inline json enumerate_payload(int max_denominator) {
  if (max_denominator < 2) throw PreconditionError("denominator cap must be at least 2");
  json pairs = json::array();
  int sporadic = 0, toric = 0, elliptic = 0;
  for (const auto& ms : verify::detail::standard_multisets(max_denominator)) {
    curves::CurveDivisor d = verify::detail::divisor_from_indices(ms);
    if (curves::pair_degree(d) > 0) continue;
    curves::CurvePairClass cls = curves::classify_trichotomy(d);
    json coeffs = json::array();
    for (const auto& p : d.points) coeffs.push_back(io::rat_json(p.coeff));
    json entry{{"coeffs", coeffs}, {"classification", io::to_json(cls)}};
    switch (cls.kind) {
      case curves::PairKind::Sporadic:
        ++sporadic;
        entry["group"] = io::to_json(curves::identify_curve_group(d));
        break;
      case curves::PairKind::Toric: ++toric; break;
      case curves::PairKind::Elliptic: ++elliptic; break;
    }
    pairs.push_back(std::move(entry));
  }
  return {{"max_denominator", max_denominator},
          {"count", pairs.size()},
          {"counts", {{"toric", toric}, {"elliptic", elliptic}, {"sporadic", sporadic}}},
          {"pairs", pairs}};
}

inline json suites_payload(const std::vector<verify::SuiteResult>& results) {
  json suites = json::array();
  bool all = true;
  for (const auto& r : results) {
    json checks = json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    suites.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}});
    all = all && r.passed();
  }
  return {{"passed", all}, {"suites", suites}};
}

}  // namespace detail

/// Dispatches one command line (without the program name) and returns the
/// JSON payload plus exit code.  Never throws; all errors are mapped to
/// the documented exit codes.
inline CommandResult run(std::vector<std::string> args) {
  CLI::App app{"exact computations around orbifold fundamental groups of log Calabi-Yau "
               "surface pairs"};
  app.require_subcommand(0, 1);
  std::function<json()> action;
  int exit_code = kOk;

  // classify
  std::string divisor_text;
  auto* classify = app.add_subcommand("classify", "classify a curve pair and present its group");
  classify->add_option("divisor", divisor_text, "curve divisor as JSON")->required();
  classify->callback([&] {
    action = [&] {
      return detail::classify_payload(io::curve_divisor_from_json(detail::parse_json(divisor_text)));
    };
  });

  // enumerate
  int max_den = 30;
  auto* enumerate = app.add_subcommand("enumerate",
                                       "classify all standard genus-0 pairs up to a denominator cap");
  enumerate->add_option("--max-denominator", max_den, "orbifold index cap (default 30)");
  enumerate->callback([&] { action = [&] { return detail::enumerate_payload(max_den); }; });

  // coset
  std::string pres_text;
  std::vector<std::string> subgroup_words;
  int max_cosets = 100000;
  bool with_table = false;
  auto* coset = app.add_subcommand("coset", "Todd-Coxeter coset enumeration");
  coset->add_option("presentation", pres_text, "presentation text or JSON")->required();
  coset->add_option("--subgroup", subgroup_words, "subgroup generator words");
  coset->add_option("--max-cosets", max_cosets, "coset budget (default 100000)");
  coset->add_flag("--table", with_table, "include the full coset table");
  coset->callback([&] {
    action = [&] {
      fp::Presentation p = io::presentation_from_json(
          pres_text.find('<') != std::string::npos ? json(pres_text) : detail::parse_json(pres_text));
      std::vector<fp::Word> gens;
      for (const auto& w : subgroup_words) gens.push_back(fp::parse_word(p, w));
      fp::CosetTable t = fp::coset_enumerate(p, gens, max_cosets);
      json tj = io::to_json(t);
      // "status" belongs to the result envelope; the table reports
      // completeness under its own key
      json out{{"complete", t.status == fp::CosetTable::Status::Complete},
               {"index", tj["index"]},
               {"presentation", fp::to_text(p)},
               {"subgroup", subgroup_words}};
      if (with_table) out["table"] = tj["table"];
      return out;
    };
  });

  // abelianize
  std::string ab_text;
  auto* abelianize = app.add_subcommand("abelianize", "Smith-normal-form abelianization");
  abelianize->add_option("presentation", ab_text, "presentation text or JSON")->required();
  abelianize->callback([&] {
    action = [&] {
      fp::Presentation p = io::presentation_from_json(
          ab_text.find('<') != std::string::npos ? json(ab_text) : detail::parse_json(ab_text));
      return json{{"presentation", fp::to_text(p)},
                  {"abelianization", io::to_json(fp::abelianization(p))}};
    };
  });

  // heis
  auto* heis_cmd = app.add_subcommand("heis", "Heisenberg-style group arithmetic");
  heis_cmd->require_subcommand(1);
  std::string k_text = "0", u_text, v_text, m_text = "1", det_bound_text = "0";
  auto add_k = [&](CLI::App* sub) { sub->add_option("--k", k_text, "parameter k")->required(); };

  auto* hmul = heis_cmd->add_subcommand("mul", "normal-form product");
  add_k(hmul);
  hmul->add_option("--u", u_text, "element x,y,z")->required();
  hmul->add_option("--v", v_text, "element x,y,z")->required();
  hmul->callback([&] {
    action = [&] {
      Int k = detail::parse_integer_arg(k_text, "k");
      auto r = heis::h_mul(heis::parse_heisenberg(k, u_text), heis::parse_heisenberg(k, v_text));
      return json{{"result", r.to_string()}};
    };
  });

  auto* hcomm = heis_cmd->add_subcommand("comm", "commutator u v u^-1 v^-1");
  add_k(hcomm);
  hcomm->add_option("--u", u_text, "element x,y,z")->required();
  hcomm->add_option("--v", v_text, "element x,y,z")->required();
  hcomm->callback([&] {
    action = [&] {
      Int k = detail::parse_integer_arg(k_text, "k");
      auto r =
          heis::h_commutator(heis::parse_heisenberg(k, u_text), heis::parse_heisenberg(k, v_text));
      return json{{"result", r.to_string()}};
    };
  });

  auto* hmin = heis_cmd->add_subcommand("minindex", "minimal abelian normal index in G_{m,k}");
  add_k(hmin);
  hmin->add_option("--m", m_text, "central order m")->required();
  hmin->add_option("--det-bound", det_bound_text, "search bound (default 4m)");
  hmin->callback([&] {
    action = [&] {
      Int k = detail::parse_integer_arg(k_text, "k");
      Int m = detail::parse_integer_arg(m_text, "m");
      Int bound = detail::parse_integer_arg(det_bound_text, "det-bound");
      heis::MinIndexResult r = heis::min_abelian_normal_index(m, k, bound);
      return json{{"index", io::int_json(r.index)},
                  {"witness", io::to_json(r.witness)},
                  {"lower_bound", io::int_json(r.lower_bound)},
                  {"normal", heis::witness_is_normal(k, r.witness)},
                  {"provenance", "derived by exhaustive sublattice search"}};
    };
  });

  auto* hva = heis_cmd->add_subcommand("vabelian", "virtual abelianity of H_k");
  add_k(hva);
  hva->callback([&] {
    action = [&] {
      Int k = detail::parse_integer_arg(k_text, "k");
      heis::VirtualAbelianityReport r = heis::is_virtually_abelian(k);
      json out{{"virtually_abelian", r.virtually_abelian}};
      if (!r.virtually_abelian) {
        out["witness"] = r.witness;
        out["sample_commutator"] = r.sample->to_string();
      }
      return out;
    };
  });

  // fan
  auto* fan_cmd = app.add_subcommand("fan", "complete fans in the rank-2 lattice");
  fan_cmd->require_subcommand(1);
  std::string fan_text, ray_text, rho_text = "0", bsum_text = "0";

  auto* findex = fan_cmd->add_subcommand("index", "cone indices and singularity labels");
  findex->add_option("fan", fan_text, "fan JSON")->required();
  findex->callback([&] {
    action = [&] {
      fan::Fan2D f = io::fan_from_json(detail::parse_json(fan_text));
      json cones = json::array();
      for (int i = 0; i < f.ray_count(); ++i) {
        json c = io::to_json(fan::cone_report(f.ray(i), f.ray(i + 1)));
        c["rays"] = json::array({json::array({f.ray(i).x, f.ray(i).y}),
                                 json::array({f.ray(i + 1).x, f.ray(i + 1).y})});
        cones.push_back(std::move(c));
      }
      return json{{"fan", io::to_json(f)}, {"cones", cones}};
    };
  });

  auto* fsub = fan_cmd->add_subcommand("subdivide", "star subdivision at a ray");
  fsub->add_option("fan", fan_text, "fan JSON")->required();
  fsub->add_option("--ray", ray_text, "ray x,y")->required();
  fsub->callback([&] {
    action = [&] {
      fan::Fan2D f = io::fan_from_json(detail::parse_json(fan_text));
      return json{{"fan", io::to_json(fan::star_subdivide(f, detail::parse_ray(ray_text)))}};
    };
  });

  auto* fres = fan_cmd->add_subcommand("resolve", "Hirzebruch-Jung resolution of all cones");
  fres->add_option("fan", fan_text, "fan JSON")->required();
  fres->callback([&] {
    action = [&] {
      fan::Fan2D f = io::fan_from_json(detail::parse_json(fan_text));
      json cones = json::array();
      for (int i = 0; i < f.ray_count(); ++i) {
        json steps = json::array();
        for (const auto& s : fan::hj_resolve(f.ray(i), f.ray(i + 1)))
          steps.push_back({{"ray", json::array({s.ray.x, s.ray.y})},
                           {"self_intersection", io::rat_json(s.self_intersection)}});
        cones.push_back({{"cone", i}, {"insertions", steps}});
      }
      return json{{"fan", io::to_json(f)},
                  {"cones", cones},
                  {"resolved", io::to_json(fan::resolve_fan(f))}};
    };
  });

  auto* fself = fan_cmd->add_subcommand("selfint", "invariant-curve self-intersections");
  fself->add_option("fan", fan_text, "fan JSON")->required();
  fself->callback([&] {
    action = [&] {
      fan::Fan2D f = io::fan_from_json(detail::parse_json(fan_text));
      json rays = json::array();
      for (int i = 0; i < f.ray_count(); ++i)
        rays.push_back({{"ray", json::array({f.ray(i).x, f.ray(i).y})},
                        {"self_intersection", io::rat_json(fan::self_intersection(f, i))}});
      return json{{"fan", io::to_json(f)}, {"self_intersections", rays}};
    };
  });

  auto* frec = fan_cmd->add_subcommand("recognize", "identify the named surfaces");
  frec->add_option("fan", fan_text, "fan JSON")->required();
  frec->callback([&] {
    action = [&] {
      fan::Fan2D f = io::fan_from_json(detail::parse_json(fan_text));
      return json{{"fan", io::to_json(f)}, {"surface", fan::recognize(f).text()}};
    };
  });

  auto* fcx = fan_cmd->add_subcommand("complexity", "rho + 2 - |Delta| and the toric flag");
  fcx->add_option("--rho", rho_text, "Picard rank")->required();
  fcx->add_option("--boundary-sum", bsum_text, "coefficient sum |Delta|")->required();
  fcx->callback([&] {
    action = [&] {
      fan::BoundarySum b{detail::parse_integer_arg(rho_text, "rho"), parse_rat(bsum_text)};
      auto rep = fan::complexity(b);
      return json{{"complexity", io::rat_json(rep.value)}, {"toric", rep.toric_flag}};
    };
  });

  // adjunction / base pair / compatibility / pullback
  std::string mp_text = "1", a_text = "0", b_text = "0";
  std::vector<std::string> contribs;
  auto* adj = app.add_subcommand("adj", "adjunction coefficient at a point");
  adj->add_option("--index", mp_text, "orbifold index m_P")->required();
  adj->add_option("--contrib", contribs, "contribution b or b:mult (repeatable)");
  adj->callback([&] {
    action = [&] {
      fib::AdjunctionPointDatum d;
      d.m_p = detail::parse_integer_arg(mp_text, "index");
      for (const auto& c : contribs) {
        auto colon = c.find(':');
        Rat b = parse_rat(colon == std::string::npos ? c : c.substr(0, colon));
        Int mult = colon == std::string::npos ? Int(1)
                                              : detail::parse_integer_arg(c.substr(colon + 1), "mult");
        d.contributions.emplace_back(b, mult);
      }
      return json{{"input", io::to_json(d)},
                  {"coefficient", io::rat_json(fib::adjunction_coefficient(d))}};
    };
  });

  auto* basepair = app.add_subcommand("basepair", "multiple-fiber coefficient delta(p)");
  basepair->add_option("--mult", m_text, "fiber multiplicity")->required();
  basepair->add_option("--a", a_text, "horizontal coefficient a_p")->required();
  basepair->callback([&] {
    action = [&] {
      fib::FibrationFiberDatum f{detail::parse_integer_arg(m_text, "m"), parse_rat(a_text)};
      return json{{"input", io::to_json(f)},
                  {"coefficient", io::rat_json(fib::base_pair_coefficient(f))}};
    };
  });

  auto* compat = app.add_subcommand("compat", "cover compatibility m(1-b^st) = 1-a^st");
  compat->add_option("--m", m_text, "ramification degree")->required();
  compat->add_option("--b", b_text, "downstream coefficient")->required();
  compat->add_option("--a", a_text, "upstream coefficient")->required();
  compat->callback([&] {
    action = [&] {
      fib::CoverCoeffDatum c{detail::parse_integer_arg(m_text, "m"), parse_rat(b_text),
                             parse_rat(a_text)};
      return json{{"input", io::to_json(c)}, {"compatible", fib::check_compatible(c)}};
    };
  });

  auto* pullback = app.add_subcommand("pullback", "ramification pullback a = m b - (m-1)");
  pullback->add_option("--b", b_text, "downstream coefficient")->required();
  pullback->add_option("--m", m_text, "ramification degree")->required();
  pullback->callback([&] {
    action = [&] {
      return json{{"coefficient",
                   io::rat_json(fib::ramification_pullback(parse_rat(b_text),
                                                           detail::parse_integer_arg(m_text, "m")))}};
    };
  });

  // cert
  std::string fiber_text, base_text;
  auto* cert = app.add_subcommand("cert", "structure certificate for a fibration");
  cert->add_option("--fiber", fiber_text, "fiber class: toric|elliptic|sporadic")->required();
  cert->add_option("--base", base_text, "base class: toric|elliptic|sporadic")->required();
  cert->callback([&] {
    action = [&] {
      return json{{"certificate",
                   io::to_json(fib::nori_certificate(detail::parse_kind(fiber_text),
                                                     detail::parse_kind(base_text)))}};
    };
  });

  // verify
  std::string suite = "all";
  bool list_suites = false;
  auto* verify_cmd = app.add_subcommand("verify", "replay the verification suites");
  verify_cmd->add_option("suite", suite, "suite name or 'all'");
  verify_cmd->add_flag("--list", list_suites, "list available suites");
  verify_cmd->callback([&] {
    action = [&] {
      if (list_suites) return json{{"suites", verify::suite_names()}};
      std::vector<verify::SuiteResult> results;
      if (suite == "all")
        results = verify::run_all();
      else
        results.push_back(verify::run_suite(suite));
      json out = detail::suites_payload(results);
      if (!out["passed"].get<bool>()) exit_code = kVerificationFailure;
      return out;
    };
  });

  CommandResult res;
  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
    if (!action) {
      res.exit_code = kParseError;
      res.payload = {{"status", "error"}, {"code", kParseError},
                     {"message", "missing subcommand; try --help"}};
      return res;
    }
    res.payload = detail::ok(action());
    res.exit_code = exit_code;
  } catch (const CLI::CallForHelp&) {
    res.payload = {{"status", "ok"}, {"help", app.help()}};
    res.exit_code = kOk;
  } catch (const CLI::ParseError& e) {
    res.exit_code = kParseError;
    res.payload = {{"status", "error"}, {"code", kParseError}, {"message", e.what()}};
  } catch (const ParseError& e) {
    res.exit_code = kParseError;
    res.payload = {{"status", "error"}, {"code", kParseError}, {"message", e.what()}};
  } catch (const BudgetError& e) {
    res.exit_code = kBudgetExceeded;
    res.payload = {{"status", "error"}, {"code", kBudgetExceeded}, {"message", e.what()}};
  } catch (const PreconditionError& e) {
    res.exit_code = kPreconditionError;
    res.payload = {{"status", "error"}, {"code", kPreconditionError}, {"message", e.what()}};
  } catch (const std::exception& e) {
    res.exit_code = kPreconditionError;
    res.payload = {{"status", "error"}, {"code", kPreconditionError}, {"message", e.what()}};
  }
  return res;
}

}  // namespace lcy::cli
