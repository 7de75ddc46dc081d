#ifndef CUBICA_RESIDUE_FIELD_HPP
#define CUBICA_RESIDUE_FIELD_HPP

#include <string>

#include "factor.hpp"
#include "finite_sqrt.hpp"

namespace cubica {

/// F_q[x]/(m) for an irreducible m; elements are reduced polynomials.
class ResidueField {
 public:
  ResidueField(const Poly& modulus, bool check = true) : m_(modulus.monic()) {
    if (m_.degree() < 1) throw DomainError("residue_field: modulus must be nonconstant");
    if (!m_.field().finite()) throw DomainError("residue_field: finite base field required");
    if (check && !is_irreducible(m_)) throw DomainError("residue_field: " + m_.to_string() + " is reducible");
    mpz_class b(static_cast<unsigned long>(m_.field().size()));
    mpz_pow_ui(q_.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(m_.degree()));
  }

  const Poly& modulus() const { return m_; }
  const Field& base() const { return m_.field(); }
  int degree() const { return m_.degree(); }
  const mpz_class& order() const { return q_; }

  Poly reduce(const Poly& f) const { return f % m_; }
  Poly from(const Elem& c) const { return Poly(c); }
  Poly gen() const { return reduce(Poly::x(base())); }
  Poly one() const { return Poly(base().one()); }
  Poly zero() const { return Poly(base()); }

  Poly add(const Poly& a, const Poly& b) const { return a + b; }
  Poly sub(const Poly& a, const Poly& b) const { return a - b; }
  Poly mul(const Poly& a, const Poly& b) const { return (a * b) % m_; }
  Poly inv(const Poly& a) const {
    if (a.is_zero()) throw DomainError("residue_field: inverse of zero");
    return poly_invmod(a, m_);
  }
  Poly div(const Poly& a, const Poly& b) const { return mul(a, inv(b)); }
  Poly pow(const Poly& a, const mpz_class& e) const {
    if (e < 0) return poly_powmod(inv(a), -e, m_);
    return poly_powmod(a, e, m_);
  }
  bool eq(const Poly& a, const Poly& b) const { return a == b; }
  bool is_zero(const Poly& a) const { return a.is_zero(); }

  /// Element with canonical index i: base-q digits are coefficient indices.
  Poly nth(unsigned long i) const {
    std::vector<Elem> c;
    std::uint64_t qb = base().size();
    for (int k = 0; k < degree(); ++k) {
      c.push_back(base().from_index(i % qb));
      i /= qb;
    }
    return Poly(base(), std::move(c));
  }

  bool is_square(const Poly& a) const { return ff_is_square<Poly>(*this, reduce(a)); }
  /// The canonically smaller square root, or throws.
  Poly sqrt(const Poly& a) const {
    auto r = ff_sqrt<Poly>(*this, reduce(a));
    if (!r) throw DomainError("residue_field: not a square");
    Poly s = *r, t = reduce(-s);
    return less(t, s) ? t : s;
  }
  /// Order matching nth(): compare from the top coefficient down.
  bool less(const Poly& a, const Poly& b) const {
    for (int i = degree() - 1; i >= 0; --i)
      if (a[i] != b[i]) return canonical_less(a[i], b[i]);
    return false;
  }
  /// Absolute trace down to the prime field (used in characteristic 2).
  Poly trace_prime(const Poly& a) const {
    unsigned long k = 0;
    mpz_class q = q_;
    mpz_class p(static_cast<unsigned long>(base().p()));
    while (q > 1) {
      q /= p;
      ++k;
    }
    Poly t = reduce(a), s = t;
    for (unsigned long i = 1; i < k; ++i) {
      t = pow(t, p);
      s = s + t;
    }
    return s;
  }

  std::string to_string(const Poly& a) const { return a.to_string("X"); }

 private:
  Poly m_;
  mpz_class q_;
};

}  // namespace cubica

#endif  // CUBICA_RESIDUE_FIELD_HPP
