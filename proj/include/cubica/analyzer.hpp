#ifndef CUBICA_ANALYZER_HPP
#define CUBICA_ANALYZER_HPP

#include <map>
#include <string>
#include <vector>

#include "quadratic.hpp"

namespace cubica {

namespace detail {

// (place, multiplicity) pairs of a nonconstant polynomial; over Q the
// caller's irreducible factors are matched by trial division.
inline std::vector<std::pair<Place, int>> zeros_of(const Poly& g, const std::vector<Poly>& q_factors) {
  std::vector<std::pair<Place, int>> out;
  if (g.is_constant()) return out;
  if (g.field().finite()) {
    for (const auto& [p, m] : poly_factor(g)) out.push_back({Place::finite(p), m});
    return out;
  }
  Poly rest = g;
  for (const auto& p0 : q_factors) {
    Poly p = p0.monic();
    if (p.degree() < 1) continue;
    int m = 0;
    while (rest.degree() >= p.degree() && p.divides(rest)) {
      rest = rest / p;
      ++m;
    }
    if (m) out.push_back({Place::finite(p), m});
  }
  if (!rest.is_constant())
    throw DomainError("analyze over Q: supply the irreducible factors of " + rest.to_string());
  return out;
}

}  // namespace detail

/// Pole orders of a function at all its poles (positive numbers).
inline std::map<Place, int> pole_orders(const RatFunc& a, const std::vector<Poly>& q_factors = {}) {
  std::map<Place, int> out;
  for (const auto& [p, m] : detail::zeros_of(a.den(), q_factors)) out[p] = m;
  int vinf = a.den().degree() - a.num().degree();
  if (vinf < 0) out[Place::infinity(a.field())] = -vinf;
  return out;
}

/// Total and partial ramification and genus of a cubic model.
inline RamificationReport analyze(const CubicModel& M, const std::vector<Poly>& q_factors = {}) {
  RamificationReport R;
  const Field& F = M.F;
  if (F.p() == 3) throw DomainError("analyze: characteristic 3");
  if (M.is_pure()) {
    const RatFunc& b = M.beta;
    for (const Poly* g : {&b.num(), &b.den()})
      for (const auto& [p, m] : detail::zeros_of(*g, q_factors))
        if (m % 3) R.total.insert(p);
    int vinf = b.den().degree() - b.num().degree();
    if (vinf % 3) R.total.insert(Place::infinity(F));
  } else if (F.p() == 2) {
    Elem s = sqrt(M.c);
    RatFunc a = M.alpha / RatFunc(M.c * s);
    if (a.is_zero()) throw DomainError("analyze: alpha = 0");
    for (const auto& [p, m] : pole_orders(a))
      if (m % 3) R.total.insert(p);
    RatFunc g = as_reduce(a.inv());
    for (const auto& [p, m] : pole_orders(g)) R.partial.insert(p);
  } else {
    const Poly& N = M.alpha.num();
    const Poly& D = M.alpha.den();
    for (const auto& [p, m] : pole_orders(M.alpha, q_factors))
      if (m % 3) R.total.insert(p);
    Elem c3 = M.c * M.c * M.c;
    Poly disc = N * N - D * D * (F.from_int(4) * c3);
    if (disc.is_zero()) throw DomainError("analyze: alpha^2 = 4c^3, degenerate model");
    for (const auto& [p, m] : detail::zeros_of(disc, q_factors))
      if (m % 2) R.partial.insert(p);
    int vinf = 2 * D.degree() - disc.degree();
    if (vinf % 2) R.partial.insert(Place::infinity(F));
  }
  R.genus = genus_of_cubic(places_degree(R.total), places_degree(R.partial), F.p());
  return R;
}

struct VerifyDiff {
  bool ok = true;
  PlaceSet missing_total, extra_total, missing_partial, extra_partial;

  std::string to_string() const {
    if (ok) return "ok";
    std::string s;
    auto part = [&](const char* name, const PlaceSet& ps) {
      if (!ps.empty()) s += std::string(s.empty() ? "" : "; ") + name + " " + cubica::to_string(ps);
    };
    part("missing total", missing_total);
    part("unexpected total", extra_total);
    part("missing partial", missing_partial);
    part("unexpected partial", extra_partial);
    return s;
  }
};

inline VerifyDiff verify_against(const RamificationReport& R, const PlaceSet& total, const PlaceSet& partial) {
  VerifyDiff d;
  for (const auto& p : total)
    if (!R.total.count(p)) d.missing_total.insert(p);
  for (const auto& p : R.total)
    if (!total.count(p)) d.extra_total.insert(p);
  for (const auto& p : partial)
    if (!R.partial.count(p)) d.missing_partial.insert(p);
  for (const auto& p : R.partial)
    if (!partial.count(p)) d.extra_partial.insert(p);
  d.ok = d.missing_total.empty() && d.extra_total.empty() && d.missing_partial.empty() && d.extra_partial.empty();
  return d;
}

inline VerifyDiff verify_against(const CubicModel& M, const PlaceSet& total, const PlaceSet& partial,
                                 const std::vector<Poly>& q_factors = {}) {
  return verify_against(analyze(M, q_factors), total, partial);
}

}  // namespace cubica

#endif  // CUBICA_ANALYZER_HPP
