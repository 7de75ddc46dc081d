#ifndef CUBICA_PARAMETRIZE_HPP
#define CUBICA_PARAMETRIZE_HPP

#include <optional>
#include <string>
#include <vector>

#include "quadratic.hpp"

namespace cubica {

/// Element P + Q r of K' = K(r), r^2 = f, with P, Q in k(x).
struct KElem {
  RatFunc P, Q;
};

/// Arithmetic in K' = K(sqrt f).
class KPrime {
 public:
  explicit KPrime(const Poly& f) : f_(f) {}
  const Poly& f() const { return f_; }

  KElem from_K(const RatFunc& a) const { return {a, RatFunc(Poly(f_.field()))}; }
  KElem r() const { return {RatFunc(Poly(f_.field())), RatFunc(f_.field().one())}; }
  KElem add(const KElem& a, const KElem& b) const { return {a.P + b.P, a.Q + b.Q}; }
  KElem mul(const KElem& a, const KElem& b) const {
    return {a.P * b.P + a.Q * b.Q * RatFunc(f_), a.P * b.Q + a.Q * b.P};
  }
  KElem sigma(const KElem& a) const { return {a.P, -a.Q}; }
  RatFunc norm(const KElem& a) const { return a.P * a.P - a.Q * a.Q * RatFunc(f_); }
  RatFunc trace(const KElem& a) const { return a.P + a.P; }
  KElem inv(const KElem& a) const {
    RatFunc n = norm(a);
    if (n.is_zero()) throw DomainError("K': inverse of zero");
    return {a.P / n, -a.Q / n};
  }
  KElem div(const KElem& a, const KElem& b) const { return mul(a, inv(b)); }
  /// Horner evaluation of a polynomial in u at the element u.
  KElem eval(const Poly& g, const KElem& u) const {
    KElem r = from_K(RatFunc(Poly(f_.field())));
    for (int i = g.degree(); i >= 0; --i) r = add(mul(r, u), from_K(RatFunc(g[i])));
    return r;
  }
  bool is_zero(const KElem& a) const { return a.P.is_zero() && a.Q.is_zero(); }

 private:
  Poly f_;
};

/// Isomorphism of a genus-zero K' with a rational function field k(u) and
/// the involution sigma written on the u-line.  For a constant extension
/// the line is k'(x) with k' = k(sqrt d), and sigma acts on coefficients.
struct ULine {
  QuadraticModel M;
  bool constant = false;
  Field k;   // coefficients of the u-line
  Field kp;  // k' for constant extensions
  // nonconstant
  RatFunc x_of_u, r_of_u;
  KElem u;
  Elem sa, sb, sc, sd;  // sigma(u) = (sa u + sb)/(sc u + sd)
  // constant
  Elem sqrt_d;
  // common: places named on the line
  Divisor eta;                 // pullback of the infinite place of K
  std::optional<Place> stable;  // rational sigma-stable place, if any
  std::optional<Place> kappa;   // rational place with ell*sigma(ell) constant
  RatFunc ell;
  Elem c;
  Elem x0, r0;  // rational point used for the line (nonsquare leading coefficient)

  std::string describe() const;
};

namespace detail {

inline Place uinf(const Field& k) { return Place::infinity(k); }
inline Place ulin(const Elem& a) { return Place::finite(Poly(a.field(), {-a, a.field().one()})); }

/// The field F_p^2 containing the square roots of F_p.
inline Field quadratic_over(const Field& k) {
  if (k.kind() != FieldKind::prime) throw DomainError("constant extensions need a prime base field");
  return Field::quadratic_default(k.p());
}

/// Image of a prime-field element in its quadratic extension.
inline Elem up(const Elem& a, const Field& kp) { return Elem(kp.data(), a.c0(), 0); }
inline Poly up(const Poly& g, const Field& kp) {
  return g.map(kp, [&](const Elem& e) { return up(e, kp); });
}
inline Poly conj(const Poly& g) {
  return g.map(g.field(), [](const Elem& e) { return e.conj(); });
}
inline RatFunc conj(const RatFunc& g) { return RatFunc(conj(g.num()), conj(g.den())); }
/// Coefficients fixed by conjugation, moved down to the prime field.
inline Poly down(const Poly& g, const Field& k) {
  return g.map(k, [&](const Elem& e) {
    if (e.c1() != 0) throw DomainError("coefficient not in the base field");
    return k.from_int(static_cast<long long>(e.c0()));
  });
}
inline RatFunc down(const RatFunc& g, const Field& k) { return RatFunc(down(g.num(), k), down(g.den(), k)); }

/// Irreducible factors over a finite field, or over Q for degree <= 2.
inline std::vector<Factor> factor_small(const Poly& g) {
  if (g.field().finite()) return poly_factor(g);
  Field F = g.field();
  if (g.degree() <= 1) return g.degree() == 1 ? std::vector<Factor>{{g.monic(), 1}} : std::vector<Factor>{};
  if (g.degree() > 2) throw DomainError("factorization over Q beyond degree 2 is not supported");
  Poly h = g.monic();
  Elem disc = h[1] * h[1] - F.from_int(4) * h[0];
  if (!is_square(disc)) return {{h, 1}};
  Elem s = sqrt(disc), two = F.from_int(2);
  Poly a(F, {(h[1] - s) / two, F.one()}), b(F, {(h[1] + s) / two, F.one()});
  if (a == b) return {{a, 2}};
  std::vector<Factor> out{{a, 1}, {b, 1}};
  detail::sort_factors(out);
  return out;
}

}  // namespace detail

/// Builds the u-line.  Over Q a rational point is searched among small
/// integers when the leading coefficient of f is not a square.
inline ULine parametrize(const QuadraticModel& M) {
  if (M.kind() != QuadraticModel::Kind::kummer)
    throw DomainError("parametrize: only Kummer models in odd characteristic");
  const Field k = M.field();
  const Poly& f = M.f();
  ULine L;
  L.M = M;
  L.k = k;
  L.kp = k;
  Elem one = k.one(), zero = k.zero(), two = k.from_int(2);
  RatFunc X(Poly::x(k));
  Poly U = Poly::x(k);

  if (f.degree() == 0) {
    L.constant = true;
    L.kp = detail::quadratic_over(k);
    L.k = L.kp;
    L.sqrt_d = sqrt(detail::up(f[0], L.kp));
    L.eta.add(Place::infinity(L.kp), 1);
    return L;
  }

  if (f.degree() == 1) {
    // u = r, x = u^2/a + e
    Elem a = f[1], e = -f[0] / f[1];
    L.x_of_u = RatFunc(Poly(k, {a * e, zero, one}) * a.inv());
    L.r_of_u = RatFunc(U);
    L.u = {RatFunc(Poly(k)), RatFunc(one)};
    L.sa = -one, L.sb = zero, L.sc = zero, L.sd = one;
    L.eta.add(detail::uinf(k), 2);
    L.stable = detail::uinf(k);
    return L;
  }

  Elem a = f.lc();
  Poly S = f.monic();
  Elem beta = S[1], gamma = S[0];
  Elem half_beta = beta / two;
  Elem delta = half_beta * half_beta - gamma;
  if (is_square(a)) {
    // u = r/s + x + beta/2, s^2 = a; sigma(u) = delta/u
    Elem s = sqrt(a);
    L.x_of_u = RatFunc(Poly(k, {delta, -beta, one}), Poly(k, {zero, two}));
    L.r_of_u = RatFunc(Poly(k, {-delta, zero, one}) * s, Poly(k, {zero, two}));
    L.u = {X + RatFunc(half_beta), RatFunc(s.inv())};
    L.sa = zero, L.sb = delta, L.sc = one, L.sd = zero;
    L.eta.add(detail::ulin(zero), 1);
    L.eta.add(detail::uinf(k), 1);
    if (is_square(delta)) {
      // rational branch points x = -beta/2 +- sqrt(delta) sit at u = x + beta/2
      Elem sd = sqrt(delta);
      Elem e1 = -half_beta + sd, e2 = -half_beta - sd;
      Elem e = canonical_less(e1, e2) ? e1 : e2;
      L.stable = detail::ulin(e + half_beta);
    } else {
      L.kappa = detail::ulin(zero);
      L.ell = RatFunc(U);
      L.c = delta;
    }
    return L;
  }

  // leading coefficient a non-square: line through a rational point (x0, r0)
  std::vector<Elem> roots = M.rational_roots();
  Elem x0 = zero, r0 = zero;
  bool found = false;
  if (!roots.empty()) {
    x0 = roots.front();
    found = true;
  } else if (k.finite()) {
    for (std::uint64_t i = 0; i < k.size() && !found; ++i) {
      Elem t = k.from_index(i), v = f.eval(t);
      if (!v.is_zero() && is_square(v)) {
        x0 = t;
        r0 = sqrt(v);
        found = true;
      }
    }
  } else {
    for (long n = 0; n <= 2000 && !found; ++n)
      for (long sgn : {1L, -1L}) {
        Elem t = k.from_int(sgn * n), v = f.eval(t);
        if (!found && !v.is_zero() && is_square(v)) {
          x0 = t;
          r0 = sqrt(v);
          found = true;
        }
      }
  }
  if (!found) throw DomainError("parametrize: no rational point found on " + M.to_string());
  Elem fp = f.derivative().eval(x0);
  L.x0 = x0;
  L.r0 = r0;
  // x = x0 + (f'(x0) - 2 r0 u)/(u^2 - a), r = r0 + u (x - x0)
  Poly den(k, {-a, zero, one});
  RatFunc dx(Poly(k, {fp, -two * r0}), den);
  L.x_of_u = RatFunc(x0) + dx;
  L.r_of_u = RatFunc(r0) + RatFunc(U) * dx;
  RatFunc inv_dx = RatFunc(X - RatFunc(x0)).inv();
  L.u = {RatFunc(-r0) * inv_dx, inv_dx};
  L.sa = -fp, L.sb = two * r0 * a, L.sc = -two * r0, L.sd = fp;
  L.eta.add(Place::finite(den), 1);
  if (r0.is_zero()) {
    L.stable = detail::uinf(k);
  } else {
    Elem m = fp / (two * r0);
    L.kappa = detail::ulin(m);
    L.ell = RatFunc(Poly(k, {-m, one}));
    RatFunc sig_u(Poly(k, {L.sb, L.sa}), Poly(k, {L.sd, L.sc}));
    RatFunc prod = L.ell * (sig_u - RatFunc(m));
    if (!prod.is_constant()) throw DomainError("parametrize: ell*sigma(ell) not constant");
    L.c = prod.constant_value();
  }
  return L;
}

/// g(u) -> g(sigma(u)) on the line.
inline RatFunc sigma_on_line(const ULine& L, const RatFunc& g) {
  if (L.constant) return detail::conj(g);
  return g.compose(RatFunc(Poly(L.k, {L.sb, L.sa}), Poly(L.k, {L.sd, L.sc})));
}

/// Pullback of a function of x to the line.
inline RatFunc pullback(const ULine& L, const RatFunc& g) {
  if (L.constant) return RatFunc(detail::up(g.num(), L.kp), detail::up(g.den(), L.kp));
  return g.compose(L.x_of_u);
}

/// Places of the line above a place p of K, with ramification indices.
inline std::vector<std::pair<Place, int>> places_over(const ULine& L, const Place& p) {
  std::vector<std::pair<Place, int>> out;
  if (L.constant) {
    if (p.is_inf()) return {{Place::infinity(L.kp), 1}};
    for (const auto& [h, m] : poly_factor(detail::up(p.poly(), L.kp))) out.push_back({Place::finite(h), m});
    return out;
  }
  const Poly& A = L.x_of_u.num();
  const Poly& B = L.x_of_u.den();
  Poly target;
  int full;
  if (p.is_inf()) {
    target = B;
    full = 2;
  } else {
    // numerator of p(A/B): sum p_i A^i B^(n-i)
    const Poly& pp = p.poly();
    int n = pp.degree();
    target = Poly(L.k);
    for (int i = 0; i <= n; ++i)
      target += A.pow(static_cast<unsigned long>(i)) * B.pow(static_cast<unsigned long>(n - i)) * pp[i];
    full = 2 * n;
  }
  int got = 0;
  if (!target.is_constant())
    for (const auto& [h, m] : detail::factor_small(target)) {
      out.push_back({Place::finite(h), m});
      got += m * h.degree();
    }
  if (got < full) out.push_back({detail::uinf(L.k), full - got});
  return out;
}

/// The place of the line above a split place of K where r takes the value rho.
inline Place line_place(const ULine& L, const UpstairsPlace& P) {
  const Place& p = P.base;
  auto over = places_over(L, p);
  if (over.size() != 2) throw DomainError("line_place: " + p.to_string() + " does not split");
  if (L.constant) {
    // residue of r is sqrt_d; residue of rho(xbar) is computed in k'[x]/(pi)
    for (const auto& [pi, m] : over) {
      Poly rho = detail::up(P.rho, L.kp) % pi.poly();
      if (rho == Poly(L.sqrt_d) % pi.poly()) return pi;
    }
    throw DomainError("line_place: no place matches rho");
  }
  RatFunc r_val = L.r_of_u, rho_val;
  if (p.is_inf()) {
    int h = L.M.f().degree() / 2;
    r_val = L.r_of_u / L.x_of_u.pow(h);
    rho_val = RatFunc(P.rho.is_zero() ? L.k.zero() : P.rho[0]);
  } else {
    rho_val = RatFunc(P.rho).compose(L.x_of_u);
  }
  for (const auto& [pi, m] : over)
    if (residue_at(r_val, pi) == residue_at(rho_val, pi)) return pi;
  throw DomainError("line_place: no place matches rho");
}

inline std::string ULine::describe() const {
  if (constant) return "u = x over " + kp.name() + ", sigma conjugates constants, r = " + sqrt_d.to_string();
  RatFunc s(Poly(k, {sb, sa}), Poly(k, {sd, sc}));
  return "x = " + x_of_u.to_string("u") + ", r = " + r_of_u.to_string("u") + ", sigma(u) = " + s.to_string("u");
}

}  // namespace cubica

#endif  // CUBICA_PARAMETRIZE_HPP
