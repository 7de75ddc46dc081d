#ifndef CUBICA_RATFUNC_HPP
#define CUBICA_RATFUNC_HPP

#include <string>

#include "poly.hpp"

namespace cubica {

/// Element of k(x) in lowest terms with monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(Field::rationals()), den_(Field::rationals().one()) {}
  RatFunc(const Poly& n) : num_(n), den_(n.field().one()) {}  // NOLINT
  RatFunc(const Elem& c) : num_(c), den_(c.field().one()) {}  // NOLINT
  RatFunc(const Poly& n, const Poly& d) : num_(n), den_(d) { normalize(); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const Field& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_poly() const { return den_.is_one(); }
  /// Constant value; throws if nonconstant.
  Elem constant_value() const {
    if (!is_constant()) throw DomainError("not a constant function");
    return num_[0];
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc(Poly(a.field()));
    Poly g1 = poly_gcd(a.num_, b.den_), g2 = poly_gcd(b.num_, a.den_);
    RatFunc r;
    r.num_ = (a.num_ / g1) * (b.num_ / g2);
    r.den_ = (a.den_ / g2) * (b.den_ / g1);
    return r;  // already reduced with monic denominator
  }
  RatFunc inv() const {
    if (is_zero()) throw DomainError("rational function: inverse of zero");
    return RatFunc(den_, num_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

  RatFunc pow(long e) const {
    if (e < 0) return inv().pow(-e);
    return RatFunc(num_.pow(static_cast<unsigned long>(e)), den_.pow(static_cast<unsigned long>(e)));
  }

  Elem eval(const Elem& v) const {
    Elem d = den_.eval(v);
    if (d.is_zero()) throw DomainError("rational function: pole at evaluation point");
    return num_.eval(v) / d;
  }
  /// Substitution x -> g.
  RatFunc compose(const RatFunc& g) const {
    // Horner on numerator and denominator separately
    auto sub = [&](const Poly& p) {
      RatFunc r(Poly(g.field()));
      for (int i = p.degree(); i >= 0; --i) r = r * g + RatFunc(p[i]);
      return r;
    };
    return sub(num_) / sub(den_);
  }
  RatFunc derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  std::string to_string(const std::string& var = "x") const {
    if (den_.is_one()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw DomainError("rational function: zero denominator");
    if (num_.field() != den_.field()) throw DomainError("rational function: field mismatch");
    if (num_.is_zero()) {
      den_ = Poly(num_.field().one());
      return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    Elem l = den_.lc();
    if (!l.is_one()) {
      Elem li = l.inv();
      num_ = num_ * li;
      den_ = den_ * li;
    }
  }

  Poly num_, den_;
};

}  // namespace cubica

#endif  // CUBICA_RATFUNC_HPP
