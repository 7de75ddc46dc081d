#ifndef CUBICA_MPOLY_HPP
#define CUBICA_MPOLY_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "field.hpp"

namespace cubica {

/// Sparse Laurent polynomial over Q in a fixed number of variables.  Used
/// only to check polynomial identities, so it stays small.
class MPoly {
 public:
  using Mono = std::vector<int>;

  explicit MPoly(int nvars = 0) : n_(nvars) {}

  static MPoly constant(int n, const mpq_class& c) {
    MPoly p(n);
    if (c != 0) p.t_[Mono(static_cast<std::size_t>(n), 0)] = c;
    return p;
  }
  static MPoly var(int n, int i, int e = 1) {
    MPoly p(n);
    Mono m(static_cast<std::size_t>(n), 0);
    m[static_cast<std::size_t>(i)] = e;
    p.t_[m] = 1;
    return p;
  }

  int nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<Mono, mpq_class>& terms() const { return t_; }

  friend MPoly operator+(MPoly a, const MPoly& b) {
    for (const auto& [m, c] : b.t_) a.add(m, c);
    return a;
  }
  friend MPoly operator-(MPoly a, const MPoly& b) {
    for (const auto& [m, c] : b.t_) a.add(m, -c);
    return a;
  }
  MPoly operator-() const { return MPoly(n_) - *this; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.n_);
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) {
        Mono m(ma);
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
        r.add(m, ca * cb);
      }
    return r;
  }
  friend MPoly operator*(const mpq_class& s, MPoly a) {
    if (s == 0) return MPoly(a.n_);
    for (auto& [m, c] : a.t_) c *= s;
    return a;
  }
  friend MPoly operator+(MPoly a, const mpq_class& s) { return a + constant(a.n_, s); }
  friend MPoly operator-(MPoly a, const mpq_class& s) { return a - constant(a.n_, s); }
  friend bool operator==(const MPoly& a, const MPoly& b) { return (a - b).is_zero(); }

  MPoly pow(unsigned e) const {
    MPoly r = constant(n_, 1), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  /// Rewrite every occurrence of var^k (k >= e) using var^e = rep, where
  /// rep has lower degree in var.
  MPoly reduce(int var, int e, const MPoly& rep) const {
    MPoly cur = *this;
    for (;;) {
      MPoly next(n_);
      bool changed = false;
      for (const auto& [m, c] : cur.t_) {
        int k = m[static_cast<std::size_t>(var)];
        if (k >= e) {
          Mono rest(m);
          rest[static_cast<std::size_t>(var)] = k - e;
          MPoly mono(n_);
          mono.t_[rest] = c;
          next = next + mono * rep;
          changed = true;
        } else {
          next.add(m, c);
        }
      }
      cur = next;
      if (!changed) return cur;
    }
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [m, c] = *it;
      if (!s.empty()) s += " + ";
      s += c.get_str();
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) s += "*" + names[i] + (m[i] == 1 ? "" : "^" + std::to_string(m[i]));
    }
    return s;
  }

 private:
  void add(const Mono& m, const mpq_class& c) {
    if (c == 0) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  int n_;
  std::map<Mono, mpq_class> t_;
};

}  // namespace cubica

#endif  // CUBICA_MPOLY_HPP
