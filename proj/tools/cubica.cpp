// cubica: command-line front end.  Every subcommand builds a job document
// and hands it to cubica::run; `cubica run FILE` takes the job directly.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "cubica/jobs.hpp"

using cubica::json;

namespace {

struct Options {
  std::uint64_t seed = cubica::kDefaultSeed;
  std::string output;
  std::string field;
};

json parse_arg(const std::string& what, const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw cubica::SchemaError("--" + what + ": malformed JSON: " + e.what());
  }
}

int emit(const Options& o, const cubica::JobResult& r) {
  if (!r.diagnostic.empty()) std::cerr << r.diagnostic << (r.diagnostic.back() == '\n' ? "" : "\n");
  if (r.doc.is_null()) return r.exit_code;
  std::string text = r.doc.dump(2) + "\n";
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.output);
    if (!f) {
      std::cerr << "cannot write " << o.output << "\n";
      return 2;
    }
    f << text;
  }
  return r.exit_code;
}

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream f(path);
  if (!f) throw cubica::SchemaError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cubica: cubic extensions of k(x) with prescribed ramification"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "seed for randomized subroutines");
  app.add_option("-o,--output", o.output, "write the JSON document here instead of stdout");

  // Raw option text, turned into JSON after parsing so bad input maps to exit 2.
  std::string places, closure, model, units, params, tag, lambda, g, c, curve, point, job_file;
  int s = 0, t = 0;
  bool all_signs = false, twists = false, partner = false, as_json = false;

  auto need_field = [&](CLI::App* sc, bool required = true) {
    auto* opt = sc->add_option("--field", o.field, "Q, a prime p != 3, or p^2 written as an integer");
    if (required) opt->required();
  };

  auto* pure = app.add_subcommand("pure", "purely cubic extensions");
  pure->require_subcommand(1);
  auto* p_enum = pure->add_subcommand("enumerate", "one model per class with total ramification T");
  need_field(p_enum);
  p_enum->add_option("--places", places, "JSON list of places")->required();
  auto* p_count = pure->add_subcommand("count", "number of classes for t places, s of them of degree divisible by 3");
  p_count->add_option("s", s)->required();
  p_count->add_option("t", t)->required();
  auto* p_tw = pure->add_subcommand("twists", "twists of a purely cubic model");
  need_field(p_tw);
  p_tw->add_option("--model", model, "JSON model {\"beta\": ...}")->required();
  p_tw->add_option("--units", units, "JSON list of units (required over Q)");
  auto* p_b3 = pure->add_subcommand("bitwists3", "degree-3 bi-twist representatives");
  need_field(p_b3);

  auto* desc = app.add_subcommand("descend", "cubic extension with given closure and total ramification");
  need_field(desc);
  desc->add_option("--closure", closure, "JSON quadratic model")->required();
  desc->add_option("--places", places, "JSON list of places, each with optional \"sign\"")->required();
  desc->add_flag("--all-signs", all_signs, "every sign choice");
  desc->add_flag("--twists", twists, "attach twists");

  auto* an = app.add_subcommand("analyze", "ramification report of a cubic model");
  need_field(an);
  an->add_option("--model", model, "JSON model")->required();
  std::string factors;
  an->add_option("--factors", factors, "JSON list of irreducible factors (required over Q)");

  auto* bw = app.add_subcommand("bitwists", "bi-twist classes of a ramification family");
  need_field(bw);
  bw->add_option("--tag", tag, "R33, R322, R3322, R32_char2, R332_char2, R33_char2_AS")->required();
  bw->add_option("--params", params, "JSON parameters for a single member");

  auto* par = app.add_subcommand("parshin", "Parshin covers");
  par->require_subcommand(1);
  auto* g1 = par->add_subcommand("genus1", "explicit genus-one family");
  g1->add_option("--lambda", lambda)->required();
  auto* we = par->add_subcommand("weierstrass", "cover of y^2 = (x^2 - 4c^3) g(x)");
  we->add_option("--g", g, "JSON polynomial")->required();
  we->add_option("--c", c)->required();
  auto* cv = par->add_subcommand("cover", "cover attached to a point of an even degree-8 curve");
  cv->add_option("--curve", curve, "JSON polynomial F with W: v^2 = F(u)")->required();
  cv->add_option("--point", point, "JSON point [u, v] on W")->required();
  cv->add_flag("--partner", partner, "use the partner of P~");
  for (auto* sc : {g1, we, cv}) sc->add_option("--field", o.field, "defaults to Q");

  auto* st = app.add_subcommand("selftest", "run the acceptance suite");
  st->add_flag("--json", as_json, "JSON instead of a table");

  auto* rn = app.add_subcommand("run", "run a job document (or an array of jobs) from FILE or -");
  rn->add_option("file", job_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (rn->parsed()) {
      cubica::JobResult r = cubica::run_text(slurp(job_file));
      return emit(o, r);
    }

    json job{{"seed", o.seed}};
    json p = json::object();
    auto field = [&](const char* dflt = nullptr) {
      if (!o.field.empty()) job["field"] = o.field;
      else if (dflt) job["field"] = dflt;
    };
    if (p_enum->parsed()) {
      job["command"] = "pure.enumerate";
      p["places"] = parse_arg("places", places);
    } else if (p_count->parsed()) {
      job["command"] = "pure.count";
      p = {{"s", s}, {"t", t}};
    } else if (p_tw->parsed()) {
      job["command"] = "pure.twists";
      p["model"] = parse_arg("model", model);
      if (!units.empty()) p["units"] = parse_arg("units", units);
    } else if (p_b3->parsed()) {
      job["command"] = "pure.bitwists3";
    } else if (desc->parsed()) {
      job["command"] = "descend";
      p = {{"closure", parse_arg("closure", closure)},
           {"places", parse_arg("places", places)},
           {"all_signs", all_signs},
           {"twists", twists}};
    } else if (an->parsed()) {
      job["command"] = "analyze";
      p["model"] = parse_arg("model", model);
      if (!factors.empty()) p["factors"] = parse_arg("factors", factors);
    } else if (bw->parsed()) {
      job["command"] = "bitwists";
      p["tag"] = tag;
      if (!params.empty()) p["params"] = parse_arg("params", params);
    } else if (g1->parsed()) {
      job["command"] = "parshin.genus1";
      p["lambda"] = lambda;
    } else if (we->parsed()) {
      job["command"] = "parshin.weierstrass";
      p = {{"g", parse_arg("g", g)}, {"c", c}};
    } else if (cv->parsed()) {
      job["command"] = "parshin.cover";
      p = {{"curve", parse_arg("curve", curve)}, {"point", parse_arg("point", point)}, {"partner", partner}};
    } else if (st->parsed()) {
      job["command"] = "selftest";
    }
    field(par->parsed() ? "Q" : nullptr);
    job["payload"] = p;

    cubica::JobResult r = cubica::run(job);
    if (st->parsed() && !as_json && !r.doc.is_null()) {
      for (const auto& row : r.doc.at("criteria"))
        std::printf("%s criterion %d (%s): %s [%.3fs]\n", row.at("ok").get<bool>() ? "PASS" : "FAIL",
                    row.at("id").get<int>(), row.at("name").get<std::string>().c_str(),
                    row.at("detail").get<std::string>().c_str(), row.at("seconds").get<double>());
      if (!r.diagnostic.empty()) std::cerr << r.diagnostic << "\n";
      return r.exit_code;
    }
    return emit(o, r);
  } catch (const cubica::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  }
}
