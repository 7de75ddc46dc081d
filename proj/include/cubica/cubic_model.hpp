#ifndef CUBICA_CUBIC_MODEL_HPP
#define CUBICA_CUBIC_MODEL_HPP

#include <string>

#include "factor.hpp"
#include "finite_sqrt.hpp"
#include "ratfunc.hpp"

namespace cubica {

namespace detail {

// Multiplicities of the nonconstant squarefree parts of a nonzero polynomial.
inline std::vector<Factor> sqf_parts(const Poly& f) {
  if (f.is_constant()) return {};
  return squarefree_decomposition(f);
}

}  // namespace detail

/// True when g is a cube in k(x).  Needs only squarefree decompositions, so
/// it works over Q as well.
inline bool is_cube(const RatFunc& g) {
  if (g.is_zero()) return true;
  for (const Poly* p : {&g.num(), &g.den()})
    for (const auto& [h, m] : detail::sqf_parts(*p))
      if (m % 3 != 0) return false;
  return is_cube(g.num().lc());
}

/// y^3 = beta (pure) or y^3 = 3 c y + alpha (impure).  In characteristic 2
/// the impure equation reads y^3 = c y + alpha.
struct CubicModel {
  enum class Kind { pure, impure };

  Kind kind = Kind::pure;
  Field F;
  RatFunc beta;
  Elem c;
  RatFunc alpha;

  static CubicModel pure(const RatFunc& b) {
    if (b.is_zero()) throw DomainError("pure model: beta = 0");
    if (is_cube(b)) throw DomainError("pure model: beta is a cube, the extension is not a field");
    CubicModel m;
    m.kind = Kind::pure;
    m.F = b.field();
    m.beta = b;
    m.c = m.F.zero();
    m.alpha = RatFunc(m.F.zero());
    return m;
  }

  static CubicModel impure(const Elem& c, const RatFunc& a) {
    Field F = a.field();
    if (c.fd() != F.data()) throw DomainError("impure model: field mismatch");
    if (c.is_zero()) throw DomainError("impure model: c = 0");
    RatFunc disc = a * a - RatFunc(F.from_int(4) * c * c * c);
    if (disc.is_zero()) throw DomainError("impure model: alpha^2 = 4c^3, degenerate");
    CubicModel m;
    m.kind = Kind::impure;
    m.F = F;
    m.c = c;
    m.alpha = a;
    m.beta = RatFunc(F.zero());
    return m;
  }

  bool is_pure() const { return kind == Kind::pure; }

  std::string to_string() const {
    if (is_pure()) return "y^3 = " + beta.to_string();
    Elem lin = F.p() == 2 ? c : F.from_int(3) * c;
    std::string cs = lin.is_one() ? "" : lin.to_string() + "*";
    return "y^3 = " + cs + "y + " + alpha.to_string();
  }
};

}  // namespace cubica

#endif  // CUBICA_CUBIC_MODEL_HPP
