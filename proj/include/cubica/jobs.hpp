#ifndef CUBICA_JOBS_HPP
#define CUBICA_JOBS_HPP

// Job dispatch behind the command-line tool.  A job is
//   {"command": ..., "field": ..., "payload": {...}, "seed": n, "output": path}
// and produces one JSON document plus an exit code.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "bitwist.hpp"
#include "json_io.hpp"
#include "pure_cubic.hpp"
#include "selftest.hpp"

namespace cubica {

struct JobResult {
  json doc;
  int exit_code = 0;       // 0 ok, 1 domain error, 2 schema error
  std::string diagnostic;  // empty on success
};

namespace jobs {

inline const json& need(const json& o, const char* key) {
  io::expect(o.is_object() && o.contains(key), std::string("missing field \"") + key + "\"");
  return o.at(key);
}

inline Field need_field(const json& job) {
  const json& f = need(job, "field");
  io::expect(f.is_string() || f.is_number_unsigned(), "field must be a string");
  return io::field(f.is_string() ? f.get<std::string>() : std::to_string(f.get<std::uint64_t>()));
}

inline int need_int(const json& o, const char* key) {
  const json& v = need(o, key);
  io::expect(v.is_number_integer(), std::string(key) + " must be an integer");
  return v.get<int>();
}

inline bool flag(const json& o, const char* key) {
  if (!o.contains(key)) return false;
  io::expect(o.at(key).is_boolean(), std::string(key) + " must be a boolean");
  return o.at(key).get<bool>();
}

inline std::vector<Place> places(const Field& F, const json& j) {
  io::expect(j.is_array(), "places must be an array");
  std::vector<Place> out;
  for (const auto& p : j) out.push_back(io::place(F, p));
  return out;
}

inline json count_json(const mpz_class& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

inline json report_json(const CubicModel& M, const std::vector<Poly>& factors = {}) {
  return io::to_json(analyze(M, factors), M.F);
}

inline json pure_enumerate(const Field& F, const json& p) {
  json models = json::array();
  for (const auto& e : enumerate_pure(places(F, need(p, "places"))))
    models.push_back({{"signs", e.signs}, {"model", io::to_json(e.model)}});
  return {{"count", models.size()}, {"models", models}};
}

inline json pure_count(const json& p) {
  int s = need_int(p, "s"), t = need_int(p, "t");
  io::expect(s >= 0 && t >= 0, "s and t must be nonnegative");
  return {{"count", count_json(count_pure(s, t))}};
}

inline json pure_twists(const Field& F, const json& p) {
  CubicModel M = io::model(F, need(p, "model"));
  std::vector<Elem> units;
  if (p.contains("units")) {
    io::expect(p.at("units").is_array(), "units must be an array");
    for (const auto& u : p.at("units")) units.push_back(io::elem(F, u));
  } else if (!F.finite()) {
    throw SchemaError("units are required over Q");
  }
  json out = json::array();
  for (const auto& m : twists_pure(M, units)) out.push_back(io::to_json(m));
  return {{"count", out.size()}, {"twists", out}};
}

inline json pure_bitwists3(const Field& F) {
  json out = json::array();
  for (const auto& m : bitwist_reps_deg3(F)) out.push_back({{"model", io::to_json(m)}, {"report", report_json(m)}});
  return {{"count", out.size()}, {"models", out}};
}

inline json descent_json(const DescentResult& r, bool with_twists) {
  json o = io::to_json(r);
  if (with_twists) {
    json tw = json::array();
    for (const auto& m : twists_descent(r)) tw.push_back(io::to_json(m));
    o["twists"] = tw;
  }
  return o;
}

// Places may carry "sign": +1 or -1 (default +1).
inline json descend(const Field& F, const json& p) {
  QuadraticModel M = io::quadratic(F, need(p, "closure"));
  const json& pl = need(p, "places");
  io::expect(pl.is_array(), "places must be an array");
  DescentProblem pb{M, {}, {}};
  for (const auto& e : pl) {
    pb.T.push_back(io::place(F, e));
    int s = e.contains("sign") ? need_int(e, "sign") : 1;
    io::expect(s == 1 || s == -1, "sign must be 1 or -1");
    pb.signs.push_back(s);
  }
  bool tw = flag(p, "twists");
  if (!flag(p, "all_signs")) return descent_json(construct(pb), tw);
  json all = json::array();
  for (const auto& r : enumerate_descents(M, pb.T)) all.push_back(descent_json(r, tw));
  return {{"count", all.size()}, {"descents", all}};
}

// Over Q the zeros of alpha^2 - 4c^3 (or of beta) come from the caller as
// "factors": a list of irreducible polynomials.
inline json analyze_job(const Field& F, const json& p) {
  CubicModel M = io::model(F, need(p, "model"));
  std::vector<Poly> factors;
  if (!F.finite()) {
    const json& fs = need(p, "factors");
    io::expect(fs.is_array(), "factors must be an array of polynomials");
    for (const auto& f : fs) factors.push_back(io::poly(F, f));
  }
  return report_json(M, factors);
}

inline FamilyParams family_params(const Field& F, const json& j) {
  io::expect(j.is_object(), "params must be an object");
  FamilyParams prm;
  auto opt = [&](const char* k, std::optional<Elem>& dst) {
    if (j.contains(k)) dst = io::elem(F, j.at(k));
  };
  opt("a", prm.a);
  opt("b", prm.b);
  opt("d", prm.d);
  opt("nu", prm.nu);
  opt("lambda", prm.lambda);
  prm.mu_form = flag(j, "mu_form");
  return prm;
}

inline json params_json(const FamilyParams& prm) {
  json o = json::object();
  auto put = [&](const char* k, const std::optional<Elem>& v) {
    if (v) o[k] = io::to_json(*v);
  };
  put("a", prm.a);
  put("b", prm.b);
  put("d", prm.d);
  put("nu", prm.nu);
  put("lambda", prm.lambda);
  if (prm.mu_form) o["mu_form"] = true;
  return o;
}

inline json bitwists(const Field& F, const json& p) {
  const json& tag = need(p, "tag");
  io::expect(tag.is_string(), "tag must be a string");
  Family fam;
  try {
    fam = parse_family(tag.get<std::string>());
  } catch (const DomainError& e) {
    throw SchemaError(e.what());
  }
  RamRow row = family_row(fam);
  json o{{"tag", family_name(fam)},
         {"row", {{"total_deg", row.total_deg}, {"partial_deg", row.partial_deg}, {"genus", row.genus}}}};
  json models = json::array();
  if (p.contains("params")) {
    FamilyParams prm = family_params(F, p.at("params"));
    CubicModel m = family_member(fam, F, prm);
    json e{{"model", io::to_json(m)}, {"params", params_json(prm)}};
    if (F.finite()) e["report"] = report_json(m);
    models.push_back(e);
  } else {
    if (!F.finite()) throw DomainError("bitwists: class enumeration needs a finite field; pass params over Q");
    for (const auto& c : enumerate_classes(fam, F)) {
      json e{{"model", io::to_json(c.model)}, {"params", params_json(c.params)}, {"report", report_json(c.model)}};
      if (c.trivial_pure) e["trivial_pure"] = true;
      models.push_back(e);
    }
    o["class_count"] = class_count(fam, static_cast<long long>(F.size()));
  }
  o["count"] = models.size();
  o["models"] = models;
  return o;
}

inline json checks_json(const std::vector<IdentityCheck>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back({{"name", c.name}, {"ok", c.ok}});
  return a;
}

inline json parshin_genus1(const Field& F, const json& p) {
  Genus1Parshin G = genus1_parshin(io::elem(F, need(p, "lambda")));
  return {{"lambda", io::to_json(G.lambda)}, {"Z", io::to_json(G.Z)},           {"Y", io::to_json(G.Y)},
          {"X", io::to_json(G.X)},           {"checks", checks_json(G.checks)}};
}

inline json parshin_weierstrass(const Field& F, const json& p) {
  WeierstrassParshin W = weierstrass_parshin(io::poly(F, need(p, "g")), io::elem(F, need(p, "c")));
  return {{"c", io::to_json(W.c)},
          {"g", io::to_json(W.g)},
          {"X", io::to_json(W.X)},
          {"Y", io::to_json(W.Y)},
          {"phi", {{"x", io::to_json(W.phi_x)}, {"w", io::to_json(W.phi_w)}}},
          {"genus_X", W.genus_X},
          {"genus_Y", W.genus_Y},
          {"identity_ok", W.identity_ok},
          {"pullback_ok", W.pullback_ok},
          {"shadow", io::to_json(W.shadow, F)},
          {"total_on_X", io::to_json(W.total_on_X)},
          {"partial_on_X", io::to_json(W.partial_on_X)}};
}

inline json parshin_cover_job(const Field& F, const json& p) {
  EtaleCover C(io::poly(F, need(p, "curve")));
  ParshinCover R = parshin_cover(C, io::point(F, need(p, "point")), flag(p, "partner"));
  return {{"W", io::to_json(C.W().F())},
          {"X", io::to_json(R.X)},
          {"Q", io::to_json(R.Qt)},
          {"E", io::to_json(R.E)},
          {"3E", io::to_json(R.threeE)},
          {"P_tilde", io::to_json(R.Pt)},
          {"P_tilde_partner", io::to_json(R.Pt_partner)},
          {"P", io::to_json(R.P)},
          {"f", {{"a", io::to_json(R.f.a)}, {"b", io::to_json(R.f.b)}, {"c", io::to_json(R.f.c)}}},
          {"lambda", io::to_json(R.lambda)},
          {"alpha",
           {{"A", io::to_json(R.alpha.A)},
            {"B", io::to_json(R.alpha.B)},
            {"D", io::to_json(R.alpha.D)},
            {"text", R.alpha.to_string()}}},
          {"divisor_ok", R.divisor_ok},
          {"closure_ok", R.closure_ok},
          {"branch_ok", R.branch_ok},
          {"genus_X", R.genus_X},
          {"genus_Y", R.genus_Y}};
}

inline JobResult selftest(std::uint64_t seed) {
  JobResult r;
  json rows = json::array();
  bool all = true;
  for (const auto& c : run_acceptance(seed)) {
    rows.push_back({{"id", c.id}, {"name", c.name}, {"ok", c.ok}, {"detail", c.detail}, {"seconds", c.seconds}});
    all = all && c.ok;
  }
  r.doc = {{"ok", all}, {"criteria", rows}};
  if (!all) {
    r.exit_code = 1;
    r.diagnostic = "selftest: at least one criterion failed";
  }
  return r;
}

inline JobResult dispatch(const json& job) {
  io::expect(job.is_object(), "job must be an object");
  const json& cmd = need(job, "command");
  io::expect(cmd.is_string(), "command must be a string");
  std::string c = cmd.get<std::string>();
  std::uint64_t seed = kDefaultSeed;
  if (job.contains("seed")) {
    io::expect(job.at("seed").is_number_unsigned(), "seed must be a nonnegative integer");
    seed = job.at("seed").get<std::uint64_t>();
  }
  static const std::vector<std::string> known{"pure.count", "pure.enumerate", "pure.twists", "pure.bitwists3",
                                              "descend",    "analyze",        "bitwists",    "parshin.genus1",
                                              "parshin.weierstrass", "parshin.cover", "selftest"};
  if (std::find(known.begin(), known.end(), c) == known.end()) throw SchemaError("unknown command '" + c + "'");
  if (c == "selftest") return selftest(seed);
  static const json empty = json::object();
  const json& p = job.contains("payload") ? job.at("payload") : empty;
  io::expect(p.is_object(), "payload must be an object");
  JobResult r;
  if (c == "pure.count") {
    r.doc = pure_count(p);
    return r;
  }
  Field F = need_field(job);
  if (c == "pure.enumerate") r.doc = pure_enumerate(F, p);
  else if (c == "pure.twists") r.doc = pure_twists(F, p);
  else if (c == "pure.bitwists3") r.doc = pure_bitwists3(F);
  else if (c == "descend") r.doc = descend(F, p);
  else if (c == "analyze") r.doc = analyze_job(F, p);
  else if (c == "bitwists") r.doc = bitwists(F, p);
  else if (c == "parshin.genus1") r.doc = parshin_genus1(F, p);
  else if (c == "parshin.weierstrass") r.doc = parshin_weierstrass(F, p);
  else r.doc = parshin_cover_job(F, p);
  return r;
}

}  // namespace jobs

/// Runs one job; never throws for bad input.
inline JobResult run(const json& job) {
  try {
    return jobs::dispatch(job);
  } catch (const SchemaError& e) {
    return {json(nullptr), 2, std::string("schema error: ") + e.what()};
  } catch (const json::exception& e) {
    return {json(nullptr), 2, std::string("schema error: ") + e.what()};
  } catch (const DomainError& e) {
    return {json(nullptr), 1, std::string("domain error: ") + e.what()};
  }
}

/// Parses `text` as a job (or an array of jobs, run in order).  A batch
/// returns an array of documents and the largest exit code.
inline JobResult run_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    return {json(nullptr), 2, std::string("malformed JSON: ") + e.what()};
  }
  if (!j.is_array()) return run(j);
  JobResult all{json::array(), 0, ""};
  for (const auto& job : j) {
    JobResult r = run(job);
    all.doc.push_back(r.exit_code ? json{{"error", r.diagnostic}, {"exit_code", r.exit_code}} : r.doc);
    if (r.exit_code > all.exit_code) all.exit_code = r.exit_code;
    if (!r.diagnostic.empty()) all.diagnostic += r.diagnostic + "\n";
  }
  return all;
}

}  // namespace cubica

#endif  // CUBICA_JOBS_HPP
