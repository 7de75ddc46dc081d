#ifndef CUBICA_POLY_HPP
#define CUBICA_POLY_HPP

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "field.hpp"

namespace cubica {

/// Dense univariate polynomial, coefficients lowest degree first.  The zero
/// polynomial has an empty coefficient vector and degree -1.
class Poly {
 public:
  Poly() : F_(Field::rationals()) {}
  explicit Poly(Field F) : F_(F) {}
  Poly(Field F, std::vector<Elem> c) : F_(F), c_(std::move(c)) { trim(); }
  Poly(const Elem& c) : F_(c.field()) {  // NOLINT: constants promote implicitly
    if (!c.is_zero()) c_.push_back(c);
  }

  static Poly constant(Field F, long long v) { return Poly(F.from_int(v)); }
  static Poly x(Field F) { return Poly(F, {F.zero(), F.one()}); }
  /// c x^n
  static Poly monomial(const Elem& c, int n) {
    Field F = c.field();
    std::vector<Elem> v(static_cast<std::size_t>(n) + 1, F.zero());
    v[static_cast<std::size_t>(n)] = c;
    return Poly(F, std::move(v));
  }
  static Poly from_ints(Field F, const std::vector<long long>& v) {
    std::vector<Elem> c;
    for (long long a : v) c.push_back(F.from_int(a));
    return Poly(F, std::move(c));
  }

  const Field& field() const { return F_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem operator[](int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : F_.zero();
  }
  Elem lc() const { return c_.empty() ? F_.zero() : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  Poly monic() const {
    if (is_zero()) return *this;
    Elem li = lc().inv();
    return *this * li;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.F_ == b.F_ && a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    check(a, b);
    std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), a.F_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(a.F_, std::move(r));
  }
  Poly operator-() const {
    std::vector<Elem> r;
    r.reserve(c_.size());
    for (const auto& e : c_) r.push_back(-e);
    return Poly(F_, std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    check(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.F_);
    std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, a.F_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(a.F_, std::move(r));
  }
  friend Poly operator*(const Poly& a, const Elem& s) {
    if (s.is_zero()) return Poly(a.F_);
    std::vector<Elem> r;
    r.reserve(a.c_.size());
    for (const auto& e : a.c_) r.push_back(e * s);
    return Poly(a.F_, std::move(r));
  }
  friend Poly operator*(const Elem& s, const Poly& a) { return a * s; }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  /// Euclidean division; throws on a zero divisor.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    check(a, b);
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(a.F_), a};
    std::vector<Elem> r = a.c_;
    int db = b.degree();
    std::vector<Elem> q(static_cast<std::size_t>(a.degree() - db + 1), a.F_.zero());
    Elem li = b.lc().inv();
    for (int i = a.degree(); i >= db; --i) {
      Elem c = r[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      c *= li;
      q[static_cast<std::size_t>(i - db)] = c;
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.c_[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {Poly(a.F_, std::move(q)), Poly(a.F_, std::move(r))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
  bool divides(const Poly& a) const { return (a % *this).is_zero(); }

  Elem eval(const Elem& v) const {
    Elem r = v.field().zero();
    for (std::size_t i = c_.size(); i-- > 0;) r = r * v + lift(c_[i], v.field());
    return r;
  }
  /// Horner substitution of a polynomial.
  Poly compose(const Poly& g) const {
    Poly r(g.field());
    for (std::size_t i = c_.size(); i-- > 0;) r = r * g + Poly(c_[i]);
    return r;
  }
  Poly derivative() const {
    std::vector<Elem> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * F_.from_int(static_cast<long long>(i)));
    return Poly(F_, std::move(r));
  }
  /// x^deg f(1/x) with the given formal degree.
  Poly reversed(int n) const {
    std::vector<Elem> r(static_cast<std::size_t>(n + 1), F_.zero());
    for (int i = 0; i <= degree(); ++i) r[static_cast<std::size_t>(n - i)] = c_[static_cast<std::size_t>(i)];
    return Poly(F_, std::move(r));
  }
  /// Coefficient-wise image under an element map.
  template <class Fn>
  Poly map(Field G, Fn fn) const {
    std::vector<Elem> r;
    for (const auto& e : c_) r.push_back(fn(e));
    return Poly(G, std::move(r));
  }

  Poly pow(unsigned long e) const {
    Poly r = Poly(F_.one()), b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      const Elem& c = c_[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      std::string cs = c.to_string();
      bool compound = c.fd()->kind == FieldKind::quadratic && c.c0() != 0 && c.c1() != 0;
      if (compound) cs = "(" + cs + ")";
      if (!s.empty()) {
        if (cs[0] == '-') {
          s += " - ";
          cs = cs.substr(1);
        } else {
          s += " + ";
        }
      }
      if (i == 0) {
        s += cs;
        continue;
      }
      if (cs == "-1") s += "-";
      else if (cs != "1") s += cs + "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
  }
  /// Lowest-first coefficient strings, the wire format.
  std::vector<std::string> to_strings() const {
    std::vector<std::string> r;
    for (const auto& e : c_) r.push_back(e.to_string());
    return r;
  }
  static Poly from_strings(Field F, const std::vector<std::string>& v) {
    std::vector<Elem> c;
    for (const auto& s : v) c.push_back(F.parse_elem(s));
    return Poly(F, std::move(c));
  }

 private:
  static void check(const Poly& a, const Poly& b) {
    if (a.F_ != b.F_) throw DomainError("polynomial field mismatch");
  }
  static Elem lift(const Elem& c, const Field& G) {
    if (c.fd() == G.data()) return c;
    // prime field coefficient evaluated in an extension with the same characteristic
    if (G.finite() && c.fd()->kind == FieldKind::prime && c.fd()->p == G.p()) return Elem(G.data(), c.c0(), 0);
    throw DomainError("eval: incompatible fields");
  }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Field F_;
  std::vector<Elem> c_;
};

/// Canonical order: degree, then coefficients from the leading term down.
inline bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a[i] != b[i]) return canonical_less(a[i], b[i]);
  }
  return false;
}

inline Poly poly_gcd(Poly a, Poly b) {
  if (a.field() != b.field()) throw DomainError("poly_gcd: field mismatch");
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with s a + t b = g, g monic.
inline std::tuple<Poly, Poly, Poly> poly_ext_gcd(const Poly& a, const Poly& b) {
  Field F = a.field();
  Poly r0 = a, r1 = b, s0(F.one()), s1(F), t0(F), t1(F.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Elem li = r0.lc().inv();
  return {r0 * li, s0 * li, t0 * li};
}

/// Inverse of a modulo m; throws if not coprime.
inline Poly poly_invmod(const Poly& a, const Poly& m) {
  auto [g, s, t] = poly_ext_gcd(a % m, m);
  if (!g.is_one()) throw DomainError("poly_invmod: not invertible");
  return s % m;
}

inline Poly poly_powmod(Poly b, mpz_class e, const Poly& m) {
  Poly r = Poly(b.field().one()) % m;
  b = b % m;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = (r * r) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % m;
  }
  return r;
}

/// Over Q: scale to integer coefficients with content 1 and positive leading
/// coefficient.  Returns the primitive part.
inline Poly primitive_part_q(const Poly& f) {
  if (f.is_zero() || f.field().finite()) return f;
  mpz_class l = 1, g = 0;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.q().get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : f.coeffs()) {
    mpq_class v = c.q() * l;
    z.push_back(v.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  }
  if (z.back() < 0) g = -g;
  std::vector<Elem> r;
  for (auto& v : z) r.push_back(f.field().from_mpq(mpq_class(v / g)));
  return Poly(f.field(), std::move(r));
}

}  // namespace cubica

#endif  // CUBICA_POLY_HPP
