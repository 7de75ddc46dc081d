#ifndef CUBICA_QUADRATIC_HPP
#define CUBICA_QUADRATIC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubic_model.hpp"
#include "function_field.hpp"
#include "residue_field.hpp"

namespace cubica {

namespace detail {

/// Squarefree part of an integer, sign kept.  Trial division to 10^6; a
/// cofactor without small prime factors is taken as squarefree unless it is
/// a perfect square.
inline mpz_class squarefree_int(mpz_class n) {
  if (n == 0) throw DomainError("squarefree part of zero");
  mpz_class sign = n < 0 ? -1 : 1;
  n = abs(n);
  mpz_class r = 1;
  for (unsigned long p = 2; p < 1000000 && mpz_class(p) * p <= n; ++p) {
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e % 2) r *= p;
  }
  if (!mpz_perfect_square_p(n.get_mpz_t())) r *= n;
  return sign * r;
}

/// Smallest element of F_q with the given property, in canonical order.
template <class Pred>
Elem first_elem(const Field& F, Pred pred) {
  for (std::uint64_t i = 0; i < F.size(); ++i) {
    Elem e = F.from_index(i);
    if (pred(e)) return e;
  }
  throw DomainError("no element with the requested property in " + F.name());
}

/// Absolute trace F_q -> F_2 (char 2 only), returned as 0/1.
inline int trace2(const Elem& a) {
  Elem t = a, s = a;
  for (std::uint64_t q = a.field().size(); q > 2; q >>= 1) {
    t = t * t;
    s = s + t;
  }
  return s.is_zero() ? 0 : 1;
}

}  // namespace detail

/// Smallest non-square of a finite field of odd characteristic.
inline Elem fixed_nonsquare(const Field& F) {
  return detail::first_elem(F, [](const Elem& e) { return !e.is_zero() && !is_square(e); });
}

/// Smallest element of trace 1 (char 2): the non-split Artin-Schreier constant.
inline Elem fixed_as_constant(const Field& F) {
  return detail::first_elem(F, [](const Elem& e) { return detail::trace2(e) == 1; });
}

/// Canonical representative of the Artin-Schreier class of g in char 2:
/// principal parts with odd pole orders only, polynomial part with odd
/// monomials only, and constant 0 or the fixed trace-1 constant.
inline RatFunc as_reduce(const RatFunc& g) {
  Field F = g.field();
  if (F.p() != 2) throw DomainError("Artin-Schreier classes need characteristic 2");
  auto [poly_part, rem] = divmod(g.num(), g.den());
  RatFunc out{Poly(F)};
  if (!g.den().is_constant()) {
    for (const auto& [p, m] : poly_factor(g.den())) {
      Poly pm = p.pow(static_cast<unsigned long>(m));
      Poly cof = g.den() / pm;
      Poly Np = (rem * poly_invmod(cof, pm)) % pm;
      // p-adic digits keyed by pole order
      std::map<int, Poly> dig;
      Poly t = Np;
      for (int j = 0; j < m; ++j) {
        auto [q, r] = divmod(t, p);
        if (!r.is_zero()) dig[m - j] = r;
        t = q;
      }
      ResidueField R(p, false);
      for (int e = m; e >= 2; --e) {
        auto it = dig.find(e);
        if (it == dig.end() || e % 2) continue;
        Poly a = it->second;
        dig.erase(it);
        Poly s = R.sqrt(a);
        Poly carry = (s * s - a) / p;
        auto add = [&](int ord, const Poly& v) {
          Poly w = (dig.count(ord) ? dig[ord] : Poly(F)) + v;
          if (w.is_zero()) dig.erase(ord);
          else dig[ord] = w;
        };
        if (!carry.is_zero()) add(e - 1, -carry);
        add(e / 2, -s);
      }
      for (const auto& [e, a] : dig) out += RatFunc(a, p.pow(static_cast<unsigned long>(e)));
    }
  }
  std::vector<Elem> c = poly_part.coeffs();
  for (int d = static_cast<int>(c.size()) - 1; d >= 2; --d) {
    if (d % 2 || c[static_cast<std::size_t>(d)].is_zero()) continue;
    Elem s = sqrt(c[static_cast<std::size_t>(d)]);
    c[static_cast<std::size_t>(d)] = F.zero();
    c[static_cast<std::size_t>(d / 2)] -= s;
  }
  if (!c.empty()) c[0] = detail::trace2(c[0]) ? fixed_as_constant(F) : F.zero();
  out += RatFunc(Poly(F, c));
  return out;
}

/// A quadratic extension of K (or K itself) up to K-isomorphism.  In odd
/// characteristic it is the square class c0*S with S monic squarefree and c0
/// a fixed constant-class representative; in characteristic 2 it is the
/// reduced Artin-Schreier class.
class QuadClass {
 public:
  static QuadClass trivial(Field F) {
    QuadClass q;
    q.F_ = F;
    q.c0_ = F.one();
    q.S_ = Poly(F.one());
    q.gamma_ = RatFunc(Poly(F));
    return q;
  }

  /// Square class of a nonzero d (odd characteristic or Q).
  static QuadClass square(const RatFunc& d) {
    Field F = d.field();
    if (F.p() == 2) throw DomainError("square classes are not used in characteristic 2");
    if (d.is_zero()) throw DomainError("square class of zero");
    QuadClass q = trivial(F);
    Poly S(F.one());
    for (const Poly* p : {&d.num(), &d.den()})
      for (const auto& [h, m] : detail::sqf_parts(*p))
        if (m % 2) S *= h;
    q.S_ = S.monic();
    Elem lc = d.num().lc();
    if (F.finite()) {
      q.c0_ = is_square(lc) ? F.one() : fixed_nonsquare(F);
    } else {
      mpq_class v = lc.q();
      q.c0_ = F.from_mpq(mpq_class(detail::squarefree_int(v.get_num() * v.get_den())));
    }
    return q;
  }

  /// Artin-Schreier class of X^2 + X = g (characteristic 2).
  static QuadClass artin_schreier(const RatFunc& g) {
    QuadClass q = trivial(g.field());
    if (g.field().p() != 2) throw DomainError("Artin-Schreier classes need characteristic 2");
    q.gamma_ = as_reduce(g);
    return q;
  }

  const Field& field() const { return F_; }
  bool char2() const { return F_.p() == 2; }
  bool is_trivial() const { return char2() ? gamma_.is_zero() : (c0_.is_one() && S_.is_one()); }
  bool is_constant() const { return char2() ? gamma_.is_constant() : S_.is_one(); }
  const Elem& c0() const { return c0_; }
  const Poly& S() const { return S_; }
  const RatFunc& gamma() const { return gamma_; }
  /// The defining function: c0*S, or the reduced Artin-Schreier function.
  RatFunc representative() const { return char2() ? gamma_ : RatFunc(S_ * c0_); }

  friend bool operator==(const QuadClass& a, const QuadClass& b) {
    if (a.F_ != b.F_) return false;
    if (a.char2()) return a.gamma_ == b.gamma_;
    return a.c0_ == b.c0_ && a.S_ == b.S_;
  }
  friend bool operator!=(const QuadClass& a, const QuadClass& b) { return !(a == b); }

  std::string to_string() const {
    if (is_trivial()) return "K";
    if (char2()) return "K(X^2+X=" + gamma_.to_string() + ")";
    return "K(sqrt(" + RatFunc(S_ * c0_).to_string() + "))";
  }

 private:
  QuadClass() = default;

  Field F_;
  Elem c0_;
  Poly S_;
  RatFunc gamma_;
};

/// The third quadratic subextension determined by two classes: product of
/// square classes, or sum of Artin-Schreier classes.
inline QuadClass complementary(const QuadClass& a, const QuadClass& b) {
  if (a.field() != b.field()) throw DomainError("complementary: field mismatch");
  if (a.char2()) return QuadClass::artin_schreier(a.gamma() + b.gamma());
  return QuadClass::square(a.representative() * b.representative());
}

/// Class of K(zeta_3): -3 in odd characteristic, constant class of 1 in char 2.
inline QuadClass zeta3_class(const Field& F) {
  if (F.p() == 2) return QuadClass::artin_schreier(RatFunc(F.one()));
  return QuadClass::square(RatFunc(F.from_int(-3)));
}

/// Purely cubic closure of a cubic model.
inline QuadClass purely_cubic_closure(const CubicModel& M) {
  if (M.is_pure()) return QuadClass::trivial(M.F);
  if (M.F.p() == 2) {
    // y^3 = c y + alpha; rescale y by sqrt(c) to reach c = 1, closure X^2+X = 1/alpha
    Elem s = sqrt(M.c);
    RatFunc a = M.alpha / RatFunc(M.c * s);
    if (a.is_zero()) throw DomainError("closure: alpha = 0 in characteristic 2 is inseparable");
    return QuadClass::artin_schreier(a.inv());
  }
  Elem c3 = M.c * M.c * M.c;
  RatFunc d = M.alpha * M.alpha - RatFunc(M.F.from_int(4) * c3);
  if (d.is_zero()) throw DomainError("closure: degenerate model");
  return QuadClass::square(d);
}

/// Resolvent extension: complementary to the closure and K(zeta_3).
inline QuadClass resolvent(const CubicModel& M) { return complementary(purely_cubic_closure(M), zeta3_class(M.F)); }

struct Classification {
  bool purely_cubic;
  bool galois;
};

inline Classification classify(const CubicModel& M) {
  if (!M.F.finite()) throw DomainError("classify: finite base field required");
  return {purely_cubic_closure(M).is_trivial(), resolvent(M).is_trivial()};
}

/// Genus-zero quadratic extension: K(sqrt f) with f squarefree of degree
/// <= 2 (degree 0: constant extension), or X^2 + X = g in characteristic 2
/// with g = x or a trace-1 constant.
class QuadraticModel {
 public:
  enum class Kind { kummer, artin_schreier };

  static QuadraticModel kummer(const Poly& f) {
    Field F = f.field();
    if (F.p() == 2) throw DomainError("Kummer quadratic models need odd characteristic");
    if (f.is_zero()) throw DomainError("quadratic model: f = 0");
    if (f.degree() > 2) throw DomainError("quadratic model: degree > 2 gives positive genus");
    if (f.degree() == 0 && is_square(f.lc()))
      throw DomainError("quadratic model: constant square, not a field extension");
    if (f.degree() == 2 && !poly_gcd(f, f.derivative()).is_one()) throw DomainError("quadratic model: f not squarefree");
    QuadraticModel m;
    m.kind_ = Kind::kummer;
    m.F_ = F;
    m.f_ = f;
    return m;
  }

  static QuadraticModel artin_schreier(const RatFunc& g) {
    Field F = g.field();
    if (F.p() != 2) throw DomainError("Artin-Schreier models need characteristic 2");
    bool is_x = g == RatFunc(Poly::x(F));
    bool nonsplit_const = g.is_constant() && detail::trace2(g.constant_value()) == 1;
    if (!is_x && !nonsplit_const) throw DomainError("Artin-Schreier model: only X^2+X=x and trace-1 constants");
    QuadraticModel m;
    m.kind_ = Kind::artin_schreier;
    m.F_ = F;
    m.g_ = g;
    return m;
  }

  Kind kind() const { return kind_; }
  const Field& field() const { return F_; }
  const Poly& f() const { return f_; }
  const RatFunc& g() const { return g_; }
  bool is_constant() const { return kind_ == Kind::kummer ? f_.degree() == 0 : g_.is_constant(); }

  QuadClass cls() const {
    return kind_ == Kind::kummer ? QuadClass::square(RatFunc(f_)) : QuadClass::artin_schreier(g_);
  }

  /// Places of K ramified in this extension.
  PlaceSet branch() const {
    PlaceSet s;
    if (kind_ == Kind::artin_schreier) {
      if (!g_.is_constant()) s.insert(Place::infinity(F_));
      return s;
    }
    if (f_.degree() % 2) s.insert(Place::infinity(F_));
    if (f_.degree() >= 1) {
      if (F_.finite()) {
        for (const auto& [p, m] : poly_factor(f_)) s.insert(Place::finite(p));
      } else if (f_.degree() == 1 || is_irreducible(f_)) {
        s.insert(Place::finite(f_));
      } else {
        for (const auto& r : rational_roots()) s.insert(Place::finite(Poly(F_, {-r, F_.one()})));
      }
    }
    return s;
  }

  /// Rational roots of f over Q (degree <= 2), sorted.
  std::vector<Elem> rational_roots() const {
    std::vector<Elem> out;
    if (f_.degree() == 1) out.push_back(-f_[0] / f_[1]);
    if (f_.degree() == 2) {
      Elem disc = f_[1] * f_[1] - F_.from_int(4) * f_[2] * f_[0];
      if (is_square(disc)) {
        Elem s = sqrt(disc), two_a = F_.from_int(2) * f_[2];
        out.push_back((-f_[1] - s) / two_a);
        out.push_back((-f_[1] + s) / two_a);
      }
    }
    std::sort(out.begin(), out.end(), [](const Elem& a, const Elem& b) { return canonical_less(a, b); });
    return out;
  }

  std::string to_string() const {
    if (kind_ == Kind::kummer) return "r^2 = " + f_.to_string();
    return "r^2 + r = " + g_.to_string();
  }

  QuadraticModel() = default;

 private:
  Kind kind_ = Kind::kummer;
  Field F_;
  Poly f_;
  RatFunc g_;
};

/// A place of K' above a split place of K, named by the value rho of r in
/// the residue field (polynomial in xbar of degree < deg p; a constant at
/// infinity).  For Artin-Schreier models rho is a root of X^2 + X = g.
struct UpstairsPlace {
  Place base;
  Poly rho;
};

struct Splitting {
  enum class Type { split, inert, ramified };
  Type type;
  std::optional<UpstairsPlace> minus, plus;  // set when split; minus is the canonical default

  std::string type_name() const {
    switch (type) {
      case Type::split: return "split";
      case Type::inert: return "inert";
      default: return "ramified";
    }
  }
};

namespace detail {

// Square roots in the residue field of a place; degree-1 places work over Q.
inline std::optional<std::pair<Poly, Poly>> residue_sqrts(const Poly& a, const Place& p) {
  Field F = a.field();
  if (p.is_inf() || p.degree() == 1) {
    Elem v = a.is_zero() ? F.zero() : a[0];
    if (!is_square(v)) return std::nullopt;
    Elem s = sqrt(v), t = -s;
    if (canonical_less(t, s)) std::swap(s, t);
    return std::make_pair(Poly(s), Poly(t));
  }
  if (!F.finite()) throw DomainError("places of degree > 1 over Q are not supported here");
  ResidueField R(p.poly(), false);
  if (!R.is_square(a)) return std::nullopt;
  Poly s = R.sqrt(a), t = R.reduce(-s);
  return std::make_pair(s, t);
}

}  // namespace detail

/// Decomposition of the place p of K in the quadratic extension M.
inline Splitting splitting_type(const QuadraticModel& M, const Place& p) {
  using T = Splitting::Type;
  Field F = M.field();
  if (M.kind() == QuadraticModel::Kind::artin_schreier) {
    if (M.branch().count(p)) return {T::ramified, {}, {}};
    // X^2 + X = gbar in the residue field; split iff the trace vanishes
    Poly gbar = residue_at(M.g(), p);
    if (p.is_inf() || p.degree() == 1) {
      Elem v = gbar.is_zero() ? F.zero() : gbar[0];
      if (detail::trace2(v)) return {T::inert, {}, {}};
      Elem r = detail::first_elem(F, [&](const Elem& e) { return e * e + e == v; });
      return {T::split, UpstairsPlace{p, Poly(r)}, UpstairsPlace{p, Poly(r + F.one())}};
    }
    ResidueField R(p.poly(), false);
    if (!R.trace_prime(gbar).is_zero()) return {T::inert, {}, {}};
    for (unsigned long i = 0;; ++i) {
      Poly r = R.nth(i);
      if (R.add(R.mul(r, r), r) == R.reduce(gbar))
        return {T::split, UpstairsPlace{p, r}, UpstairsPlace{p, R.reduce(r + Poly(F.one()))}};
    }
  }
  const Poly& f = M.f();
  Poly a;
  if (p.is_inf()) {
    if (f.degree() % 2) return {T::ramified, {}, {}};
    a = Poly(f.lc());
  } else {
    a = f % p.poly();
    if (a.is_zero()) return {T::ramified, {}, {}};
  }
  auto roots = detail::residue_sqrts(a, p);
  if (!roots) return {T::inert, {}, {}};
  return {T::split, UpstairsPlace{p, roots->first}, UpstairsPlace{p, roots->second}};
}

}  // namespace cubica

#endif  // CUBICA_QUADRATIC_HPP
