#ifndef CUBICA_FINITE_SQRT_HPP
#define CUBICA_FINITE_SQRT_HPP

#include <gmpxx.h>

#include <optional>

#include "field.hpp"

namespace cubica {

/// Square roots in a finite field of order q, generic over the element type.
/// Ops must provide one(), mul(a,b), pow(a, mpz), eq(a,b), is_zero(a),
/// order() (= q, an mpz) and nth(i) enumerating the nonzero elements in
/// canonical order for the non-residue search.
template <class E, class Ops>
bool ff_is_square(const Ops& ops, const E& a) {
  if (ops.is_zero(a)) return true;
  mpz_class q = ops.order();
  if (mpz_even_p(q.get_mpz_t())) return true;
  return ops.eq(ops.pow(a, (q - 1) / 2), ops.one());
}

template <class E, class Ops>
std::optional<E> ff_sqrt(const Ops& ops, const E& a) {
  if (ops.is_zero(a)) return a;
  mpz_class q = ops.order();
  if (mpz_even_p(q.get_mpz_t())) return ops.pow(a, q / 2);
  if (!ff_is_square<E>(ops, a)) return std::nullopt;
  mpz_class m = q - 1;
  unsigned long s = 0;
  while (mpz_even_p(m.get_mpz_t())) {
    m /= 2;
    ++s;
  }
  if (s == 1) return ops.pow(a, (q + 1) / 4);
  // Tonelli-Shanks with the smallest non-residue in canonical order.
  E z = ops.one();
  for (unsigned long i = 1;; ++i) {
    z = ops.nth(i);
    if (!ff_is_square<E>(ops, z)) break;
  }
  E c = ops.pow(z, m);
  E x = ops.pow(a, (m + 1) / 2);
  E t = ops.pow(a, m);
  unsigned long M = s;
  while (!ops.eq(t, ops.one())) {
    unsigned long i = 0;
    E t2 = t;
    while (!ops.eq(t2, ops.one())) {
      t2 = ops.mul(t2, t2);
      ++i;
    }
    E b = c;
    for (unsigned long j = 0; j + 1 < M - i; ++j) b = ops.mul(b, b);
    x = ops.mul(x, b);
    c = ops.mul(b, b);
    t = ops.mul(t, c);
    M = i;
  }
  return x;
}

namespace detail {
struct ElemOps {
  Field F;
  Elem one() const { return F.one(); }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem pow(const Elem& a, const mpz_class& e) const { return a.pow(e); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  mpz_class order() const { return mpz_class(static_cast<unsigned long>(F.size())); }
  Elem nth(unsigned long i) const { return F.from_index(i); }
};
}  // namespace detail

/// Euler criterion over F_q; over Q exact for rationals.
inline bool is_square(const Elem& a) {
  if (a.is_rational()) {
    if (sgn(a.q()) < 0) return false;
    return mpz_perfect_square_p(a.q().get_num_mpz_t()) && mpz_perfect_square_p(a.q().get_den_mpz_t());
  }
  return ff_is_square<Elem>(detail::ElemOps{a.field()}, a);
}

/// A square root; the canonically smaller of the two roots is returned so
/// that results do not depend on the algorithm's internal choices.
inline Elem sqrt(const Elem& a) {
  if (a.is_rational()) {
    if (!is_square(a)) throw DomainError("sqrt: not a square in Q");
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), a.q().get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), a.q().get_den_mpz_t());
    return Elem(a.fd(), mpq_class(n, d));
  }
  auto r = ff_sqrt<Elem>(detail::ElemOps{a.field()}, a);
  if (!r) throw DomainError("sqrt: " + a.to_string() + " is not a square in " + a.field().name());
  Elem s = *r, t = -s;
  return canonical_less(t, s) ? t : s;
}

/// Cube test: a nonzero a is a cube iff a^((q-1)/gcd(3,q-1)) = 1.
inline bool is_cube(const Elem& a) {
  if (a.is_zero()) return true;
  if (a.is_rational()) {
    mpz_class n, d;
    bool ok = mpz_root(n.get_mpz_t(), a.q().get_num_mpz_t(), 3) != 0;
    return ok && mpz_root(d.get_mpz_t(), a.q().get_den_mpz_t(), 3) != 0;
  }
  std::uint64_t q = a.field().size();
  if ((q - 1) % 3 != 0) return true;
  return a.pow(static_cast<long long>((q - 1) / 3)).is_one();
}

}  // namespace cubica

#endif  // CUBICA_FINITE_SQRT_HPP
