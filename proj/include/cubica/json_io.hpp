#ifndef CUBICA_JSON_IO_HPP
#define CUBICA_JSON_IO_HPP

// JSON encodings used by the command-line tool.  Needs nlohmann/json.

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "analyzer.hpp"
#include "descent.hpp"
#include "mumford.hpp"
#include "parshin.hpp"

namespace cubica {

using json = nlohmann::json;

/// Malformed or mistyped input, as opposed to a mathematical DomainError.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace io {

inline void expect(bool cond, const std::string& what) {
  if (!cond) throw SchemaError(what);
}

/// "Q", "p" or "q = p^2".  Unparsable text is a schema error, an
/// unsupported order a domain error.
inline Field field(const std::string& s) {
  bool digits = !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
  expect(digits || s == "Q", "field must be \"Q\" or a prime power, got '" + s + "'");
  return Field::parse(s);
}

/// Accepts JSON integers as well as the text forms "n", "a/b", "c0+c1t".
inline Elem elem(const Field& F, const json& j) {
  if (j.is_number_integer()) return F.from_int(j.get<long long>());
  expect(j.is_string(), "element must be an integer or a string, got " + j.dump());
  try {
    return F.parse_elem(j.get<std::string>());
  } catch (const DomainError& e) {
    throw SchemaError(e.what());
  }
}

inline json to_json(const Elem& e) { return e.to_string(); }

inline Poly poly(const Field& F, const json& j) {
  expect(j.is_array(), "polynomial must be a coefficient array (constant term first), got " + j.dump());
  std::vector<Elem> c;
  for (const auto& x : j) c.push_back(elem(F, x));
  return Poly(F, c);
}

inline json to_json(const Poly& p) {
  json a = json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(to_json(p[i]));
  return a;
}

/// A coefficient array, or {"num": [...], "den": [...]}.
inline RatFunc ratfunc(const Field& F, const json& j) {
  if (j.is_array()) return RatFunc(poly(F, j));
  expect(j.is_object() && j.contains("num"), "rational function must be an array or {num, den}");
  Poly num = poly(F, j.at("num"));
  Poly den = j.contains("den") ? poly(F, j.at("den")) : Poly(F.one());
  if (den.is_zero()) throw DomainError("rational function: zero denominator");
  return RatFunc(num, den);
}

inline json to_json(const RatFunc& f) {
  return {{"num", to_json(f.num())}, {"den", to_json(f.den())}, {"text", f.to_string()}};
}

/// {"inf": true} or {"poly": [...]}; finite-field places are checked for
/// irreducibility, places over Q are taken on trust.
inline Place place(const Field& F, const json& j) {
  expect(j.is_object(), "place must be an object, got " + j.dump());
  if (j.contains("inf")) {
    expect(j.at("inf").is_boolean() && j.at("inf").get<bool>(), "place: inf must be true");
    return Place::infinity(F);
  }
  expect(j.contains("poly"), "place needs \"inf\" or \"poly\"");
  return Place::finite(poly(F, j.at("poly")), F.finite());
}

inline json to_json(const Place& p) {
  if (p.is_inf()) return {{"inf", true}};
  return {{"poly", to_json(p.poly())}};
}

inline json to_json(const PlaceSet& s) {
  json a = json::array();
  for (const auto& p : s) a.push_back(to_json(p));
  return a;
}

inline json to_json(const Divisor& d) {
  json a = json::array();
  for (const auto& [p, m] : d.terms()) a.push_back({{"place", to_json(p)}, {"mult", m}});
  return a;
}

/// {"kummer": [...]} or {"artin_schreier": true} (y^2 + y = x) or
/// {"artin_schreier": <constant>}.
inline QuadraticModel quadratic(const Field& F, const json& j) {
  expect(j.is_object(), "quadratic model must be an object");
  if (j.contains("kummer")) return QuadraticModel::kummer(poly(F, j.at("kummer")));
  expect(j.contains("artin_schreier"), "quadratic model needs \"kummer\" or \"artin_schreier\"");
  const json& a = j.at("artin_schreier");
  if (a.is_boolean()) {
    expect(a.get<bool>(), "artin_schreier: true expected");
    return QuadraticModel::artin_schreier(RatFunc(Poly::x(F)));
  }
  return QuadraticModel::artin_schreier(RatFunc(elem(F, a)));
}

inline json to_json(const QuadraticModel& M) {
  if (M.kind() == QuadraticModel::Kind::kummer) return {{"kummer", to_json(M.f())}};
  if (M.g() == RatFunc(Poly::x(M.field()))) return {{"artin_schreier", true}};
  return {{"artin_schreier", to_json(M.g().constant_value())}};
}

inline json to_json(const QuadClass& c) { return {{"class", c.to_string()}, {"trivial", c.is_trivial()}}; }

/// {"beta": f} for y^3 = beta, {"alpha": f, "c": e} for y^3 = 3cy + alpha.
inline CubicModel model(const Field& F, const json& j) {
  expect(j.is_object(), "model must be an object");
  if (j.contains("beta")) return CubicModel::pure(ratfunc(F, j.at("beta")));
  expect(j.contains("alpha"), "model needs \"beta\" or \"alpha\"");
  Elem c = j.contains("c") ? elem(F, j.at("c")) : F.one();
  return CubicModel::impure(c, ratfunc(F, j.at("alpha")));
}

inline json to_json(const CubicModel& m) {
  json o;
  if (m.is_pure()) {
    o["beta"] = to_json(m.beta);
  } else {
    o["c"] = to_json(m.c);
    o["alpha"] = to_json(m.alpha);
  }
  o["equation"] = m.to_string();
  return o;
}

inline json to_json(const RamificationReport& r, const Field& F) {
  json o{{"total", to_json(r.total)}, {"partial", to_json(r.partial)}, {"genus", r.genus}};
  if (F.p() == 2) o["assumption"] = "partial places in characteristic 2 counted with different exponent 2";
  return o;
}

inline json to_json(const MumfordClass& D) {
  return {{"u", to_json(D.u)}, {"v", to_json(D.v)}, {"weights", {D.a, D.b}}, {"text", D.to_string()}};
}

inline AffinePoint point(const Field& F, const json& j) {
  expect(j.is_array() && j.size() == 2, "point must be [x, y]");
  return {elem(F, j[0]), elem(F, j[1])};
}

inline json to_json(const AffinePoint& P) { return json::array({to_json(P.x), to_json(P.y)}); }

inline json to_json(const KElem& e) { return {{"P", to_json(e.P)}, {"Q", to_json(e.Q)}}; }

inline json to_json(const DescentResult& r) {
  json o{{"c", to_json(r.model.c)},
         {"alpha", to_json(r.model.alpha)},
         {"case", r.case_tag},
         {"theta", to_json(r.theta)},
         {"f", to_json(r.f)},
         {"lambda", to_json(r.lambda)},
         {"flipped", r.flipped},
         {"model", to_json(r.model)},
         {"report", to_json(analyze(r.model), r.model.F)}};
  if (r.unit_model) o["unit_model"] = to_json(*r.unit_model);
  return o;
}

}  // namespace io
}  // namespace cubica

#endif  // CUBICA_JSON_IO_HPP
