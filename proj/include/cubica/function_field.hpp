#ifndef CUBICA_FUNCTION_FIELD_HPP
#define CUBICA_FUNCTION_FIELD_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "factor.hpp"
#include "ratfunc.hpp"

namespace cubica {

/// A place of k(x): the infinite place or a monic irreducible polynomial.
class Place {
 public:
  static Place infinity(Field F) { return Place(F); }
  /// Normalizes to monic.  Irreducibility is the caller's responsibility
  /// unless `check` is set.
  static Place finite(const Poly& p, bool check = false) {
    if (p.degree() < 1) throw DomainError("place: polynomial must be nonconstant");
    if (check && !is_irreducible(p)) throw DomainError("place: " + p.to_string() + " is not irreducible");
    return Place(p.monic());
  }

  bool is_inf() const { return inf_; }
  const Poly& poly() const {
    if (inf_) throw DomainError("place: infinity has no polynomial");
    return p_;
  }
  const Field& field() const { return F_; }
  int degree() const { return inf_ ? 1 : p_.degree(); }

  friend bool operator==(const Place& a, const Place& b) {
    return a.inf_ == b.inf_ && a.F_ == b.F_ && (a.inf_ || a.p_ == b.p_);
  }
  friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }
  /// Finite places in canonical polynomial order, then infinity.
  friend bool operator<(const Place& a, const Place& b) {
    if (a.inf_ != b.inf_) return b.inf_;
    if (a.inf_) return false;
    return canonical_less(a.p_, b.p_);
  }

  std::string to_string() const { return inf_ ? "inf" : "(" + p_.to_string() + ")"; }

 private:
  explicit Place(Field F) : F_(F), inf_(true), p_(F) {}
  explicit Place(const Poly& p) : F_(p.field()), inf_(false), p_(p) {}

  Field F_;
  bool inf_;
  Poly p_;
};

using PlaceSet = std::set<Place>;

inline int places_degree(const PlaceSet& s) {
  int d = 0;
  for (const auto& p : s) d += p.degree();
  return d;
}

inline std::string to_string(const PlaceSet& s) {
  std::string r = "{";
  for (const auto& p : s) r += (r.size() > 1 ? ", " : "") + p.to_string();
  return r + "}";
}

/// Formal sum of places with nonzero integer multiplicities.
class Divisor {
 public:
  Divisor() = default;
  Divisor(std::initializer_list<std::pair<const Place, int>> l) {
    for (const auto& [p, m] : l) add(p, m);
  }

  void add(const Place& p, int m) {
    if (m == 0) return;
    int& v = m_[p];
    v += m;
    if (v == 0) m_.erase(p);
  }
  int mult(const Place& p) const {
    auto it = m_.find(p);
    return it == m_.end() ? 0 : it->second;
  }
  int degree() const {
    int d = 0;
    for (const auto& [p, m] : m_) d += m * p.degree();
    return d;
  }
  bool is_zero() const { return m_.empty(); }
  const std::map<Place, int>& terms() const { return m_; }

  friend Divisor operator+(Divisor a, const Divisor& b) {
    for (const auto& [p, m] : b.m_) a.add(p, m);
    return a;
  }
  Divisor operator-() const {
    Divisor r;
    for (const auto& [p, m] : m_) r.m_[p] = -m;
    return r;
  }
  friend Divisor operator-(const Divisor& a, const Divisor& b) { return a + (-b); }
  friend Divisor operator*(int k, const Divisor& a) {
    Divisor r;
    if (k == 0) return r;
    for (const auto& [p, m] : a.m_) r.m_[p] = k * m;
    return r;
  }
  friend bool operator==(const Divisor& a, const Divisor& b) { return a.m_ == b.m_; }
  friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }

  std::string to_string() const {
    if (m_.empty()) return "0";
    std::string s;
    for (const auto& [p, m] : m_) {
      if (!s.empty()) s += m > 0 ? " + " : " - ";
      else if (m < 0) s += "-";
      int a = m < 0 ? -m : m;
      if (a != 1) s += std::to_string(a);
      s += p.to_string();
    }
    return s;
  }

 private:
  std::map<Place, int> m_;
};

/// Multiplicity of p in the nonzero polynomial f.
inline int poly_valuation(Poly f, const Poly& p) {
  if (f.is_zero()) throw DomainError("valuation of zero");
  int v = 0;
  for (;;) {
    auto [q, r] = divmod(f, p);
    if (!r.is_zero()) return v;
    f = std::move(q);
    ++v;
  }
}

inline int valuation(const RatFunc& f, const Place& p) {
  if (f.is_zero()) throw DomainError("valuation: zero function");
  if (p.is_inf()) return f.den().degree() - f.num().degree();
  return poly_valuation(f.num(), p.poly()) - poly_valuation(f.den(), p.poly());
}

/// Principal divisor over a finite field.  Over Q the caller passes the
/// irreducible factors of numerator and denominator; they are matched by
/// trial division and must account for the whole function.
inline Divisor divisor_of(const RatFunc& f, const std::vector<Poly>& q_factors = {}) {
  if (f.is_zero()) throw DomainError("divisor_of: zero function");
  Divisor D;
  auto collect = [&](const Poly& g, int sign) {
    if (g.field().finite()) {
      for (const auto& [p, m] : poly_factor(g)) D.add(Place::finite(p), sign * m);
      return;
    }
    Poly rest = g;
    for (const auto& p : q_factors) {
      if (p.degree() < 1) continue;
      int m = 0;
      while (p.divides(rest) && rest.degree() >= p.degree()) {
        rest = rest / p;
        ++m;
      }
      D.add(Place::finite(p), sign * m);
    }
    if (rest.degree() > 0) throw DomainError("divisor_of: factors over Q do not cover " + g.to_string());
  };
  if (!f.num().is_constant()) collect(f.num(), 1);
  if (!f.den().is_constant()) collect(f.den(), -1);
  D.add(Place::infinity(f.field()), valuation(f, Place::infinity(f.field())));
  return D;
}

/// Value of f at a place where it is regular, as an element of the residue
/// field k[x]/(p).  At infinity the residue field is k.
inline Poly residue_at(const RatFunc& f, const Place& p) {
  if (valuation(f, p) < 0) throw DomainError("residue_at: pole");
  if (p.is_inf()) {
    int d = f.num().degree();
    if (d < f.den().degree()) return Poly(f.field());
    return Poly(f.num().lc() / f.den().lc());
  }
  const Poly& m = p.poly();
  Poly n = f.num() % m, dd = f.den() % m;
  return (n * poly_invmod(dd, m)) % m;
}

/// Riemann-Hurwitz for a geometric cubic cover of the line.  Partial
/// ramification contributes different exponent 1 (tame) or 2 (char 2).
inline int genus_of_cubic(int deg_total, int deg_partial, std::uint64_t characteristic) {
  if (characteristic == 3) throw DomainError("genus_of_cubic: characteristic 3");
  int w = characteristic == 2 ? 2 : 1;
  int twice = -4 + 2 * deg_total + w * deg_partial;
  if (twice < 0 || twice % 2 != 0)
    throw DomainError("genus_of_cubic: inconsistent ramification data (2g = " + std::to_string(twice) + ")");
  return twice / 2;
}

struct RamificationReport {
  PlaceSet total;
  PlaceSet partial;
  int genus = 0;
};

}  // namespace cubica

#endif  // CUBICA_FUNCTION_FIELD_HPP
