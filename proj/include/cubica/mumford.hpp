#ifndef CUBICA_MUMFORD_HPP
#define CUBICA_MUMFORD_HPP

#include <string>

#include "factor.hpp"
#include "finite_sqrt.hpp"
#include "poly.hpp"

namespace cubica {

/// y^2 = F(x) with deg F = 2g + 2 and square leading coefficient, so the
/// two points at infinity are rational.
class SplitHyperelliptic {
 public:
  explicit SplitHyperelliptic(const Poly& F) : F_(F) {
    int d = F.degree();
    if (d < 4 || d % 2) throw DomainError("split model: degree must be even and >= 4");
    if (F.field().p() == 2) throw DomainError("split model: characteristic 2");
    if (poly_gcd(F, F.derivative()).degree() > 0) throw DomainError("split model: F is not squarefree");
    if (!is_square(F.lc())) throw DomainError("split model: leading coefficient must be a square");
    g_ = d / 2 - 1;
    V_ = sqrt_top();
  }

  const Poly& F() const { return F_; }
  const Field& field() const { return F_.field(); }
  int genus() const { return g_; }
  /// Polynomial part of the expansion of sqrt(F) at the place infinity+.
  const Poly& V() const { return V_; }
  int up() const { return (g_ + 1) / 2; }  // weight of infinity+ in D_inf
  int down() const { return g_ / 2; }

  bool on_curve(const Elem& x, const Elem& y) const { return y * y == F_.eval(x); }

 private:
  Poly sqrt_top() const {
    const Field& k = F_.field();
    int n = g_ + 1;
    std::vector<Elem> v(static_cast<std::size_t>(n) + 1, k.zero());
    v[static_cast<std::size_t>(n)] = sqrt(F_.lc());
    Elem inv2 = (k.from_int(2) * v[static_cast<std::size_t>(n)]).inv();
    for (int j = n - 1; j >= 0; --j) {
      Poly cur(k, v);
      Poly r = F_ - cur * cur;
      v[static_cast<std::size_t>(j)] = r[n + j] * inv2;
    }
    return Poly(k, v);
  }

  Poly F_;
  int g_ = 0;
  Poly V_;
};

/// Degree-zero class div(u, v) + a inf+ + b inf- - D_inf with
/// D_inf = ceil(g/2) inf+ + floor(g/2) inf-; deg u + a + b = g.
struct MumfordClass {
  Poly u, v;
  int a = 0, b = 0;

  friend bool operator==(const MumfordClass& p, const MumfordClass& q) {
    return p.u == q.u && p.v == q.v && p.a == q.a && p.b == q.b;
  }
  friend bool operator!=(const MumfordClass& p, const MumfordClass& q) { return !(p == q); }

  std::string to_string() const {
    return "(" + u.to_string() + ", " + v.to_string() + "; " + std::to_string(a) + ", " + std::to_string(b) + ")";
  }
};

inline MumfordClass mumford_zero(const SplitHyperelliptic& C) {
  const Field& k = C.field();
  return {Poly(k.one()), Poly(k), C.up(), C.down()};
}

namespace detail {

// One reduction step along y - vs, where vs = v mod u.
inline MumfordClass mumford_step(const SplitHyperelliptic& C, const MumfordClass& D, const Poly& vs) {
  Poly num = C.F() - vs * vs;
  auto [q, r] = divmod(num, D.u);
  if (!r.is_zero()) throw DomainError("mumford: u does not divide F - v^2");
  Poly u2 = q.monic();
  Poly pp = C.V() - vs, pm = -C.V() - vs;
  int total = num.degree();
  int op, om;
  if (!pp.is_zero() && !pm.is_zero()) {
    op = pp.degree();
    om = pm.degree();
  } else if (pp.is_zero()) {
    om = pm.degree();
    op = total - om;
  } else {
    op = pp.degree();
    om = total - op;
  }
  MumfordClass out;
  out.u = u2;
  out.v = u2.degree() > 0 ? (-vs) % u2 : Poly(C.field());
  out.a = D.a + op - u2.degree();
  out.b = D.b + om - u2.degree();
  return out;
}

}  // namespace detail

/// Reduced balanced representative: deg u <= g, deg v < deg u, a, b >= 0.
inline MumfordClass mumford_normalize(const SplitHyperelliptic& C, MumfordClass D) {
  int g = C.genus();
  if (D.u.is_zero()) throw DomainError("mumford: u = 0");
  D.u = D.u.monic();
  D.v = D.u.degree() > 0 ? D.v % D.u : Poly(C.field());
  auto plus = [&](const MumfordClass& E) {
    return detail::mumford_step(C, E, C.V() + (E.v - C.V()) % E.u);
  };
  auto minus = [&](const MumfordClass& E) {
    return detail::mumford_step(C, E, -C.V() + (E.v + C.V()) % E.u);
  };
  int guard = 0;
  while (D.u.degree() > g + 1) {
    D = detail::mumford_step(C, D, D.v);
    if (++guard > 64 * (g + 2)) throw DomainError("mumford: reduction did not terminate");
  }
  if (D.u.degree() == g + 1) D = plus(D);
  while (D.b < 0) {
    D = plus(D);
    if (++guard > 64 * (g + 2)) throw DomainError("mumford: reduction did not terminate");
  }
  while (D.a < 0) {
    D = minus(D);
    if (++guard > 64 * (g + 2)) throw DomainError("mumford: reduction did not terminate");
  }
  if (D.u.degree() > g || D.b < 0) throw DomainError("mumford: reduction failed");
  return D;
}

/// Cantor composition followed by balanced reduction.
inline MumfordClass mumford_add(const SplitHyperelliptic& C, const MumfordClass& D1, const MumfordClass& D2) {
  auto [d0, e1, e2] = poly_ext_gcd(D1.u, D2.u);
  auto [d, c1, c2] = poly_ext_gcd(d0, D1.v + D2.v);
  Poly s1 = c1 * e1, s2 = c1 * e2, s3 = c2;
  Poly u = (D1.u * D2.u) / (d * d);
  Poly w = (s1 * D1.u * D2.v + s2 * D2.u * D1.v + s3 * (D1.v * D2.v + C.F())) / d;
  MumfordClass out;
  out.u = u;
  out.v = w;
  out.a = D1.a + D2.a + d.degree() - C.up();
  out.b = D1.b + D2.b + d.degree() - C.down();
  return mumford_normalize(C, out);
}

inline MumfordClass mumford_neg(const SplitHyperelliptic& C, const MumfordClass& D) {
  MumfordClass out{D.u, -D.v, 2 * C.up() - D.u.degree() - D.a, 2 * C.down() - D.u.degree() - D.b};
  return mumford_normalize(C, out);
}

inline MumfordClass mumford_scalar(const SplitHyperelliptic& C, const MumfordClass& D, long long n) {
  MumfordClass base = n < 0 ? mumford_neg(C, D) : D;
  unsigned long long m = n < 0 ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
  MumfordClass acc = mumford_zero(C);
  while (m) {
    if (m & 1) acc = mumford_add(C, acc, base);
    m >>= 1;
    if (m) base = mumford_add(C, base, base);
  }
  return acc;
}

/// Push-forward along i(x, y) = (-x, -y); needs F even.  i swaps the two
/// points at infinity.
inline MumfordClass mumford_i(const SplitHyperelliptic& C, const MumfordClass& D) {
  const Field& k = C.field();
  Poly mx(k, {k.zero(), -k.one()});
  if (C.F().compose(mx) != C.F()) throw DomainError("mumford_i: F is not even");
  int delta = C.up() - C.down();
  MumfordClass out{D.u.compose(mx), -D.v.compose(mx), D.b + delta, D.a - delta};
  return mumford_normalize(C, out);
}

/// Class of P - i(P) for P = (x0, y0).
inline MumfordClass mumford_anti(const SplitHyperelliptic& C, const Elem& x0, const Elem& y0) {
  if (!C.on_curve(x0, y0)) throw DomainError("mumford_anti: point not on curve");
  const Field& k = C.field();
  MumfordClass D{Poly(k, {-(x0 * x0), k.zero(), k.one()}), Poly(y0), C.up() - 1, C.down() - 1};
  return mumford_normalize(C, D);
}

}  // namespace cubica

#endif  // CUBICA_MUMFORD_HPP
