#ifndef CUBICA_FIELD_HPP
#define CUBICA_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <string>
#include <variant>

namespace cubica {

/// Raised for inputs outside the mathematical domain of an operation.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FieldKind { prime, quadratic, rationals };

/// Immutable descriptor.  For the quadratic kind the generator t satisfies
/// t^2 = a t + b over F_p.
struct FieldData {
  FieldKind kind;
  std::uint64_t p = 0;
  std::uint64_t a = 0, b = 0;
  std::uint64_t q = 0;
};

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p);
}

// Descriptors are interned for the lifetime of the process so that elements
// can carry a plain pointer.
inline const FieldData* intern(const FieldData& fd) {
  static std::mutex mu;
  static std::deque<FieldData> pool;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& e : pool)
    if (e.kind == fd.kind && e.p == fd.p && e.a == fd.a && e.b == fd.b) return &e;
  pool.push_back(fd);
  return &pool.back();
}

}  // namespace detail

class Elem;

class Field {
 public:
  Field() : d_(rationals().d_) {}
  explicit Field(const FieldData* d) : d_(d) {}

  static Field prime(std::uint64_t p) {
    if (!detail::is_prime_u64(p)) throw DomainError("field: " + std::to_string(p) + " is not prime");
    if (p == 3) throw DomainError("field: characteristic 3 is not supported");
    if (p >= (1ULL << 32)) throw DomainError("field: prime too large");
    return Field(detail::intern(FieldData{FieldKind::prime, p, 0, 0, p}));
  }

  /// F_p[t]/(t^2 - a t - b); irreducibility is checked by a root search.
  static Field quadratic(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
    prime(p);
    a %= p;
    b %= p;
    for (std::uint64_t r = 0; r < p; ++r) {
      std::uint64_t v = (detail::mulmod(r, r, p) + p - detail::mulmod(a, r, p) + p - b) % p;
      if (v == 0) throw DomainError("field: t^2 - a t - b has a root, not irreducible");
    }
    return Field(detail::intern(FieldData{FieldKind::quadratic, p, a, b, p * p}));
  }

  /// The quadratic extension of F_p with the lexicographically smallest (a, b).
  static Field quadratic_default(std::uint64_t p) {
    prime(p);
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b) {
        bool root = false;
        for (std::uint64_t r = 0; r < p && !root; ++r)
          root = (detail::mulmod(r, r, p) + p - detail::mulmod(a, r, p) + p - b) % p == 0;
        if (!root) return quadratic(p, a, b);
      }
    throw DomainError("field: no irreducible quadratic");
  }

  static Field rationals() {
    static const FieldData* q = detail::intern(FieldData{FieldKind::rationals, 0, 0, 0, 0});
    return Field(q);
  }

  /// "Q", a prime "p", or a prime square "p^2" written as the integer q.
  static Field parse(const std::string& s) {
    if (s == "Q" || s == "q" || s == "QQ") return rationals();
    std::uint64_t n = 0;
    try {
      std::size_t pos = 0;
      n = std::stoull(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw DomainError("field: cannot parse '" + s + "'");
    }
    if (detail::is_prime_u64(n)) return prime(n);
    for (std::uint64_t p = 2; p * p <= n; ++p)
      if (p * p == n && detail::is_prime_u64(p)) return quadratic_default(p);
    throw DomainError("field: unsupported order " + s);
  }

  FieldKind kind() const { return d_->kind; }
  bool finite() const { return d_->kind != FieldKind::rationals; }
  std::uint64_t characteristic() const { return d_->p; }
  std::uint64_t p() const { return d_->p; }
  /// Number of elements (0 for Q).
  std::uint64_t size() const { return d_->q; }
  const FieldData* data() const { return d_; }
  /// Prime subfield (F_p), or Q itself.
  Field base() const { return d_->kind == FieldKind::quadratic ? prime(d_->p) : *this; }

  bool operator==(const Field& o) const { return d_ == o.d_; }
  bool operator!=(const Field& o) const { return d_ != o.d_; }

  std::string name() const {
    switch (d_->kind) {
      case FieldKind::prime: return "F_" + std::to_string(d_->p);
      case FieldKind::quadratic:
        return "F_" + std::to_string(d_->q) + "[t^2=" + std::to_string(d_->a) + "t+" + std::to_string(d_->b) + "]";
      default: return "Q";
    }
  }

  Elem zero() const;
  Elem one() const;
  Elem from_int(long long v) const;
  Elem from_mpq(const mpq_class& v) const;
  Elem from_index(std::uint64_t i) const;
  Elem gen() const;
  Elem parse_elem(const std::string& s) const;

 private:
  const FieldData* d_;
};

/// Field element.  Finite elements are stored as c0 + c1 t with residues in
/// [0, p); rationals are GMP fractions in lowest terms.
class Elem {
 public:
  struct Fin {
    std::uint64_t c0 = 0, c1 = 0;
  };

  Elem() : F_(Field::rationals().data()), v_(mpq_class(0)) {}
  Elem(const FieldData* F, std::uint64_t c0, std::uint64_t c1 = 0) : F_(F), v_(Fin{c0, c1}) {}
  Elem(const FieldData* F, mpq_class q) : F_(F), v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }

  Field field() const { return Field(F_); }
  const FieldData* fd() const { return F_; }
  bool is_rational() const { return F_->kind == FieldKind::rationals; }
  std::uint64_t c0() const { return std::get<Fin>(v_).c0; }
  std::uint64_t c1() const { return std::get<Fin>(v_).c1; }
  const mpq_class& q() const { return std::get<mpq_class>(v_); }

  bool is_zero() const {
    if (is_rational()) return sgn(q()) == 0;
    const auto& f = std::get<Fin>(v_);
    return f.c0 == 0 && f.c1 == 0;
  }
  bool is_one() const {
    if (is_rational()) return q() == 1;
    const auto& f = std::get<Fin>(v_);
    return f.c0 == 1 && f.c1 == 0;
  }

  friend bool operator==(const Elem& x, const Elem& y) {
    if (x.F_ != y.F_) return false;
    if (x.is_rational()) return x.q() == y.q();
    return x.c0() == y.c0() && x.c1() == y.c1();
  }
  friend bool operator!=(const Elem& x, const Elem& y) { return !(x == y); }

  friend Elem operator+(const Elem& x, const Elem& y) {
    check(x, y);
    if (x.is_rational()) return Elem(x.F_, mpq_class(x.q() + y.q()));
    std::uint64_t p = x.F_->p;
    return Elem(x.F_, (x.c0() + y.c0()) % p, (x.c1() + y.c1()) % p);
  }
  friend Elem operator-(const Elem& x, const Elem& y) {
    check(x, y);
    if (x.is_rational()) return Elem(x.F_, mpq_class(x.q() - y.q()));
    std::uint64_t p = x.F_->p;
    return Elem(x.F_, (x.c0() + p - y.c0()) % p, (x.c1() + p - y.c1()) % p);
  }
  Elem operator-() const {
    if (is_rational()) return Elem(F_, mpq_class(-q()));
    std::uint64_t p = F_->p;
    return Elem(F_, (p - c0()) % p, (p - c1()) % p);
  }
  friend Elem operator*(const Elem& x, const Elem& y) {
    check(x, y);
    if (x.is_rational()) return Elem(x.F_, mpq_class(x.q() * y.q()));
    std::uint64_t p = x.F_->p;
    using detail::mulmod;
    if (x.F_->kind == FieldKind::prime) return Elem(x.F_, mulmod(x.c0(), y.c0(), p), 0);
    std::uint64_t hi = mulmod(x.c1(), y.c1(), p);
    std::uint64_t r0 = (mulmod(x.c0(), y.c0(), p) + mulmod(hi, x.F_->b, p)) % p;
    std::uint64_t r1 = (mulmod(x.c0(), y.c1(), p) + mulmod(x.c1(), y.c0(), p) + mulmod(hi, x.F_->a, p)) % p;
    return Elem(x.F_, r0, r1);
  }
  friend Elem operator/(const Elem& x, const Elem& y) { return x * y.inv(); }
  Elem& operator+=(const Elem& y) { return *this = *this + y; }
  Elem& operator-=(const Elem& y) { return *this = *this - y; }
  Elem& operator*=(const Elem& y) { return *this = *this * y; }
  Elem& operator/=(const Elem& y) { return *this = *this / y; }

  /// Galois conjugate over the prime field (identity unless quadratic kind).
  Elem conj() const {
    if (F_->kind != FieldKind::quadratic) return *this;
    std::uint64_t p = F_->p;
    return Elem(F_, (c0() + detail::mulmod(F_->a, c1(), p)) % p, (p - c1()) % p);
  }
  /// Norm down to the prime field, returned as an element of this field.
  Elem norm() const { return *this * conj(); }

  Elem inv() const {
    if (is_zero()) throw DomainError("division by zero");
    if (is_rational()) return Elem(F_, mpq_class(1 / q()));
    std::uint64_t p = F_->p;
    if (F_->kind == FieldKind::prime) return Elem(F_, powmod(c0(), p - 2, p), 0);
    Elem c = conj();
    std::uint64_t n = (*this * c).c0();
    std::uint64_t ni = powmod(n, p - 2, p);
    return Elem(F_, detail::mulmod(c.c0(), ni, p), detail::mulmod(c.c1(), ni, p));
  }

  Elem pow(const mpz_class& e) const {
    if (e < 0) return inv().pow(-e);
    Elem r = Field(F_).one(), b = *this;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = r * r;
      if (mpz_tstbit(e.get_mpz_t(), i)) r = r * b;
    }
    return r;
  }
  Elem pow(long long e) const { return pow(mpz_class(static_cast<long>(e))); }

  /// Position in the canonical enumeration c0 + p c1 of a finite field.
  std::uint64_t index() const {
    if (is_rational()) throw DomainError("index: rationals are not enumerable");
    return c0() + F_->p * c1();
  }

  /// Canonical total order: enumeration index, or numeric order over Q.
  friend bool canonical_less(const Elem& x, const Elem& y) {
    if (x.is_rational()) return x.q() < y.q();
    return x.index() < y.index();
  }

  std::string to_string() const {
    if (is_rational()) return q().get_str();
    if (F_->kind == FieldKind::prime) return std::to_string(c0());
    if (c1() == 0) return std::to_string(c0());
    std::string s = c0() ? std::to_string(c0()) + "+" : "";
    return s + (c1() == 1 ? "" : std::to_string(c1())) + "t";
  }

 private:
  static void check(const Elem& x, const Elem& y) {
    if (x.F_ != y.F_) throw DomainError("field mismatch");
  }
  static std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
      if (e & 1) r = detail::mulmod(r, b, p);
      b = detail::mulmod(b, b, p);
      e >>= 1;
    }
    return r;
  }

  const FieldData* F_;
  std::variant<Fin, mpq_class> v_;
};

inline Elem Field::zero() const { return finite() ? Elem(d_, 0, 0) : Elem(d_, mpq_class(0)); }
inline Elem Field::one() const { return finite() ? Elem(d_, 1, 0) : Elem(d_, mpq_class(1)); }
inline Elem Field::from_int(long long v) const {
  if (!finite()) return Elem(d_, mpq_class(static_cast<long>(v)));
  long long p = static_cast<long long>(d_->p);
  long long r = v % p;
  if (r < 0) r += p;
  return Elem(d_, static_cast<std::uint64_t>(r), 0);
}
inline Elem Field::from_mpq(const mpq_class& v) const {
  if (!finite()) return Elem(d_, v);
  mpz_class p(static_cast<unsigned long>(d_->p));
  mpz_class n = v.get_num() % p, d = v.get_den() % p;
  if (n < 0) n += p;
  if (d == 0) throw DomainError("denominator divisible by the characteristic");
  return Elem(d_, n.get_ui(), 0) / Elem(d_, d.get_ui(), 0);
}
inline Elem Field::from_index(std::uint64_t i) const {
  if (!finite()) throw DomainError("from_index: rationals are not enumerable");
  if (i >= d_->q) throw DomainError("from_index: out of range");
  return Elem(d_, i % d_->p, i / d_->p);
}
inline Elem Field::gen() const {
  if (d_->kind != FieldKind::quadratic) throw DomainError("gen: not a quadratic field");
  return Elem(d_, 0, 1);
}

/// Accepts "n", "a/b", and for the quadratic kind "c0+c1t", "c1t", "t".
inline Elem Field::parse_elem(const std::string& raw) const {
  std::string s;
  for (char ch : raw)
    if (ch != ' ') s += ch;
  if (s.empty()) throw DomainError("empty element");
  if (!finite()) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw DomainError("bad rational '" + raw + "'");
    v.canonicalize();
    if (v.get_den() == 0) throw DomainError("zero denominator");
    return Elem(d_, v);
  }
  auto scalar = [&](const std::string& t) -> Elem {
    mpq_class v;
    if (t.empty() || t == "+") return one();
    if (t == "-") return -one();
    if (v.set_str(t, 10) != 0) throw DomainError("bad element '" + raw + "'");
    v.canonicalize();
    return from_mpq(v);
  };
  std::size_t tpos = s.find('t');
  if (tpos == std::string::npos) return scalar(s);
  if (d_->kind != FieldKind::quadratic || tpos + 1 != s.size()) throw DomainError("bad element '" + raw + "'");
  std::string body = s.substr(0, tpos);
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;)
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  Elem c0 = zero();
  std::string c1s = body;
  if (split != std::string::npos) {
    c0 = scalar(body.substr(0, split));
    c1s = body.substr(split);
  }
  if (c1s.size() > 1 && c1s[0] == '+') c1s = c1s.substr(1);
  return c0 + scalar(c1s) * gen();
}

}  // namespace cubica

#endif  // CUBICA_FIELD_HPP
