#ifndef CUBICA_BITWIST_HPP
#define CUBICA_BITWIST_HPP

#include <optional>
#include <string>
#include <vector>

#include "analyzer.hpp"
#include "pure_cubic.hpp"
#include "quadratic.hpp"

namespace cubica {

enum class Family { R33, R322, R3322, R32_char2, R332_char2, R33_char2_AS };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::R33: return "R33";
    case Family::R322: return "R322";
    case Family::R3322: return "R3322";
    case Family::R32_char2: return "R32_char2";
    case Family::R332_char2: return "R332_char2";
    case Family::R33_char2_AS: return "R33_char2_AS";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  for (Family f : {Family::R33, Family::R322, Family::R3322, Family::R32_char2, Family::R332_char2,
                   Family::R33_char2_AS})
    if (family_name(f) == s) return f;
  throw DomainError("unknown family tag: " + s);
}

/// Ramification row (R, g_L): degrees of the total and partial loci and the
/// genus of the cover.
struct RamRow {
  int total_deg;
  int partial_deg;
  int genus;
};

inline RamRow family_row(Family f) {
  switch (f) {
    case Family::R33: return {2, 0, 0};
    case Family::R322: return {1, 2, 0};
    case Family::R3322: return {2, 2, 1};
    case Family::R32_char2: return {1, 1, 0};
    case Family::R332_char2: return {2, 1, 1};
    case Family::R33_char2_AS: return {2, 0, 0};
  }
  return {0, 0, 0};
}

/// Parameters of a family member.  Unused fields are ignored.
///   R33:          quadratic X^2 + a X + b (irreducible)
///   R322:         d != 0
///   R3322:        nu not in {0, 1}, d != 0; mu_form switches to the
///                 x -> (x+1)/(x-1) model with mu = 2 - 4/(1 - nu) (d = 1 only)
///   R332_char2:   lambda not in {0, 1}, Artin-Schreier constant a
///   R33_char2_AS: Artin-Schreier constant a of trace 1
struct FamilyParams {
  std::optional<Elem> a, b, d, nu, lambda;
  bool mu_form = false;
};

namespace detail {

inline const Elem& need(const std::optional<Elem>& e, const char* what) {
  if (!e) throw DomainError(std::string("missing parameter ") + what);
  return *e;
}

inline void need_char(const Field& F, bool two, Family f) {
  if (F.p() == 3) throw DomainError(family_name(f) + ": characteristic 3");
  if ((F.p() == 2) != two)
    throw DomainError(family_name(f) + (two ? ": needs characteristic 2" : ": needs characteristic != 2"));
}

}  // namespace detail

inline CubicModel family_member(Family fam, const Field& F, const FamilyParams& prm = {}) {
  Poly x = Poly::x(F);
  Poly one(F.one());
  Elem two = F.from_int(2);
  switch (fam) {
    case Family::R33: {
      detail::need_char(F, false, fam);
      const Elem& a = detail::need(prm.a, "a");
      const Elem& b = detail::need(prm.b, "b");
      Poly q(F, {b, a, F.one()});
      if (F.finite() ? !is_irreducible(q) : !is_irreducible_q(q))
        throw DomainError("R33: X^2 + aX + b must be irreducible");
      Poly num(F, {a * a - two * b, two * a, two});
      return CubicModel::impure(F.one(), RatFunc(num, q));
    }
    case Family::R322: {
      detail::need_char(F, false, fam);
      const Elem& d = detail::need(prm.d, "d");
      if (d.is_zero()) throw DomainError("R322: d = 0");
      Poly num(F, {-d, F.zero(), two});
      return CubicModel::impure(F.one(), RatFunc(num * two) / RatFunc(d));
    }
    case Family::R3322: {
      detail::need_char(F, false, fam);
      const Elem& nu = detail::need(prm.nu, "nu");
      if (nu.is_zero() || nu.is_one()) throw DomainError("R3322: nu must avoid 0 and 1");
      if (prm.mu_form) {
        Elem mu = two - F.from_int(4) / (F.one() - nu);
        Poly num(F, {F.one(), mu + F.from_int(4), F.one()});
        Poly den(F, {F.one(), -mu, F.one()});
        if (poly_gcd(den, den.derivative()).degree() > 0) throw DomainError("R3322: mu = +-2");
        return CubicModel::impure(F.one(), RatFunc(num * two, den));
      }
      const Elem& d = detail::need(prm.d, "d");
      if (d.is_zero()) throw DomainError("R3322: d = 0");
      Elem dn = d * nu;
      Poly num(F, {-dn, F.zero(), two * nu - F.one()});
      Poly den(F, {-dn, F.zero(), F.one()});
      return CubicModel::impure(F.one(), RatFunc(num * two, den));
    }
    case Family::R32_char2: {
      detail::need_char(F, true, fam);
      return CubicModel::impure(F.one(), RatFunc(x));
    }
    case Family::R332_char2: {
      detail::need_char(F, true, fam);
      const Elem& lam = detail::need(prm.lambda, "lambda");
      if (lam.is_zero() || lam.is_one()) throw DomainError("R332_char2: lambda must avoid 0 and 1");
      Elem a = prm.a ? *prm.a : F.zero();
      Poly den(F, {a, F.one(), F.one()});
      return CubicModel::impure(F.one(), RatFunc(Poly(lam), den));
    }
    case Family::R33_char2_AS: {
      detail::need_char(F, true, fam);
      const Elem& a = detail::need(prm.a, "a");
      if (detail::trace2(a) != 1) throw DomainError("R33_char2_AS: X^2 + X + a must be irreducible");
      Poly den(F, {a, F.one(), F.one()});
      return CubicModel::impure(F.one(), RatFunc(one, den));
    }
  }
  throw DomainError("family_member: bad tag");
}

/// Number of bi-isomorphism classes over F_q.
inline long long class_count(Family fam, long long q) {
  switch (fam) {
    case Family::R33:
    case Family::R33_char2_AS:
    case Family::R322: return 2;
    case Family::R3322:
    case Family::R332_char2: return 2 * (q - 2);
    case Family::R32_char2: return 1;
  }
  return 0;
}

struct ClassEntry {
  CubicModel model;
  FamilyParams params;
  bool trivial_pure = false;  // the y^3 = x class of the (3^2, 0) row
};

/// One model per bi-isomorphism class of the family over a finite field.
inline std::vector<ClassEntry> enumerate_classes(Family fam, const Field& F) {
  if (!F.finite()) throw DomainError("enumerate_classes: finite field required");
  bool two = fam == Family::R32_char2 || fam == Family::R332_char2 || fam == Family::R33_char2_AS;
  detail::need_char(F, two, fam);
  std::vector<ClassEntry> out;
  Poly x = Poly::x(F);
  std::vector<Elem> params;
  for (std::uint64_t i = 2; i < F.size(); ++i) params.push_back(F.from_index(i));  // skips 0, 1
  switch (fam) {
    case Family::R33: {
      Poly q = first_irreducible(F, 2);
      FamilyParams p;
      p.a = q.coeffs()[1];
      p.b = q.coeffs()[0];
      out.push_back({CubicModel::pure(RatFunc(x)), {}, true});
      out.push_back({family_member(fam, F, p), p, false});
      break;
    }
    case Family::R33_char2_AS: {
      FamilyParams p;
      p.a = fixed_as_constant(F);
      out.push_back({CubicModel::pure(RatFunc(x)), {}, true});
      out.push_back({family_member(fam, F, p), p, false});
      break;
    }
    case Family::R322:
      for (const Elem& d : {F.one(), fixed_nonsquare(F)}) {
        FamilyParams p;
        p.d = d;
        out.push_back({family_member(fam, F, p), p, false});
      }
      break;
    case Family::R3322:
      for (const Elem& nu : params)
        for (const Elem& d : {F.one(), fixed_nonsquare(F)}) {
          FamilyParams p;
          p.nu = nu;
          p.d = d;
          out.push_back({family_member(fam, F, p), p, false});
        }
      break;
    case Family::R32_char2:
      out.push_back({family_member(fam, F), {}, false});
      break;
    case Family::R332_char2:
      for (const Elem& lam : params)
        for (const Elem& a : {F.zero(), fixed_as_constant(F)}) {
          FamilyParams p;
          p.lambda = lam;
          p.a = a;
          out.push_back({family_member(fam, F, p), p, false});
        }
      break;
  }
  return out;
}

/// Row computed from the analyzer, for comparison with family_row.
inline RamRow observed_row(const CubicModel& M) {
  RamificationReport r = analyze(M);
  return {places_degree(r.total), places_degree(r.partial), r.genus};
}

}  // namespace cubica

#endif  // CUBICA_BITWIST_HPP
