#ifndef CUBICA_FACTOR_HPP
#define CUBICA_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace cubica {

struct Factor {
  Poly p;
  int mult;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'c0b1'ca11ULL;

namespace detail {

inline mpz_class field_order(const Field& F) { return mpz_class(static_cast<unsigned long>(F.size())); }

// c^(1/p) in F_q, q = p^k: equal to c^(q/p).
inline Elem pth_root(const Elem& c) {
  std::uint64_t q = c.field().size(), p = c.field().p();
  return c.pow(static_cast<long long>(q / p));
}

inline Poly pth_root_poly(const Poly& f) {
  std::uint64_t p = f.field().p();
  std::vector<Elem> r;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) r.push_back(pth_root(f[i]));
  return Poly(f.field(), std::move(r));
}

inline void sort_factors(std::vector<Factor>& v) {
  std::sort(v.begin(), v.end(), [](const Factor& a, const Factor& b) {
    if (a.p != b.p) return canonical_less(a.p, b.p);
    return a.mult < b.mult;
  });
}

}  // namespace detail

/// Squarefree decomposition of a monic polynomial over F_q: pairs (g_i, i)
/// with f = prod g_i^i, g_i squarefree and pairwise coprime.
inline std::vector<Factor> squarefree_decomposition(const Poly& f0) {
  if (f0.is_zero()) throw DomainError("squarefree_decomposition: zero polynomial");
  Poly f = f0.monic();
  std::vector<Factor> out;
  if (!f.field().finite()) {
    // characteristic zero: Yun
    Poly d = f.derivative();
    Poly a = poly_gcd(f, d);
    Poly b = f / a, c = d / a;
    for (int i = 1; !b.is_constant(); ++i) {
      Poly e = c - b.derivative();
      Poly g = poly_gcd(b, e);
      if (!g.is_constant()) out.push_back({g, i});
      b = b / g;
      c = e / g;
    }
    return out;
  }
  int p = static_cast<int>(f.field().p());
  std::map<int, Poly> acc;
  std::vector<std::pair<Poly, int>> stack{{f, 1}};
  while (!stack.empty()) {
    auto [g, scale] = stack.back();
    stack.pop_back();
    if (g.is_constant()) continue;
    Poly d = g.derivative();
    if (d.is_zero()) {
      stack.push_back({detail::pth_root_poly(g), scale * p});
      continue;
    }
    Poly c = poly_gcd(g, d);
    Poly w = g / c;
    for (int i = 1; !w.is_constant(); ++i) {
      Poly y = poly_gcd(w, c);
      Poly z = w / y;
      if (!z.is_constant()) {
        auto it = acc.find(i * scale);
        if (it == acc.end()) acc.emplace(i * scale, z);
        else it->second = it->second * z;
      }
      w = y;
      c = c / y;
    }
    if (!c.is_constant()) stack.push_back({detail::pth_root_poly(c), scale * p});
  }
  for (auto& [m, g] : acc) out.push_back({g.monic(), m});
  return out;
}

/// Distinct-degree factorization of a monic squarefree polynomial over F_q.
inline std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f0) {
  Poly f = f0.monic();
  Field F = f.field();
  mpz_class q = detail::field_order(F);
  std::vector<std::pair<Poly, int>> out;
  Poly x = Poly::x(F);
  Poly h = x % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = poly_powmod(h, q, f);
    Poly g = poly_gcd(h - x, f);
    if (!g.is_one()) {
      out.push_back({g, d});
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back({f, f.degree()});
  return out;
}

/// Splits a monic squarefree product of irreducibles of equal degree d.
inline std::vector<Poly> equal_degree(const Poly& f, int d, std::mt19937_64& rng) {
  if (f.degree() == d) return {f};
  Field F = f.field();
  mpz_class q = detail::field_order(F);
  mpz_class qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
  bool even = F.p() == 2;
  int k = 0;
  if (even)
    for (std::uint64_t t = F.size(); t > 1; t >>= 1) ++k;
  for (;;) {
    std::vector<Elem> c;
    for (int i = 0; i < f.degree(); ++i) c.push_back(F.from_index(rng() % F.size()));
    Poly a(F, std::move(c));
    if (a.is_constant()) continue;
    Poly b;
    if (even) {
      // trace to F_2 of a in F_{2^(k d)}
      Poly t = a % f, s = t;
      for (int i = 1; i < k * d; ++i) {
        t = (t * t) % f;
        s = s + t;
      }
      b = s;
    } else {
      b = poly_powmod(a, (qd - 1) / 2, f) - Poly(F.one());
    }
    Poly g = poly_gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      auto l = equal_degree(g, d, rng);
      auto r = equal_degree(f / g, d, rng);
      l.insert(l.end(), r.begin(), r.end());
      return l;
    }
  }
}

/// Complete factorization over F_q into monic irreducibles with
/// multiplicities, sorted canonically.  The leading coefficient is dropped.
inline std::vector<Factor> poly_factor(const Poly& f, std::uint64_t seed = kDefaultSeed) {
  if (f.is_zero()) throw DomainError("poly_factor: zero polynomial");
  if (!f.field().finite()) throw DomainError("poly_factor: factorization over Q is not supported");
  std::mt19937_64 rng(seed);
  std::vector<Factor> out;
  for (const auto& [g, m] : squarefree_decomposition(f))
    for (const auto& [h, d] : distinct_degree(g))
      for (const auto& irr : equal_degree(h, d, rng)) out.push_back({irr.monic(), m});
  detail::sort_factors(out);
  return out;
}

/// Reassembles lc * prod p^m.
inline Poly factor_product(const Elem& lc, const std::vector<Factor>& fs) {
  Poly r(lc);
  for (const auto& [p, m] : fs) r *= p.pow(static_cast<unsigned long>(m));
  return r;
}

/// Roots in the coefficient field, canonically sorted.
inline std::vector<Elem> poly_roots(const Poly& f) {
  std::vector<Elem> r;
  if (f.field().finite()) {
    for (const auto& [p, m] : poly_factor(f))
      if (p.degree() == 1) r.push_back(-p[0]);
  } else {
    throw DomainError("poly_roots: unsupported over Q");
  }
  std::sort(r.begin(), r.end(), [](const Elem& a, const Elem& b) { return canonical_less(a, b); });
  return r;
}

namespace detail {

inline bool rabin_irreducible(const Poly& f) {
  int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  Poly g = f.monic();
  Field F = g.field();
  mpz_class q = field_order(F);
  Poly x = Poly::x(F);
  std::vector<int> primes;
  for (int m = n, r = 2; m > 1; ++r)
    if (m % r == 0) {
      primes.push_back(r);
      while (m % r == 0) m /= r;
    }
  for (int r : primes) {
    mpz_class e;
    mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n / r));
    Poly h = poly_powmod(x, e, g);
    if (!poly_gcd(h - x, g).is_one()) return false;
  }
  mpz_class e;
  mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n));
  return poly_powmod(x, e, g) == x % g;
}

inline std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> d;
  for (mpz_class i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      d.push_back(i);
      if (i * i != n) d.push_back(n / i);
    }
  return d;
}

// Integer coefficients of a primitive polynomial over Q.
inline std::vector<mpz_class> int_coeffs(const Poly& f) {
  std::vector<mpz_class> z;
  Poly g = primitive_part_q(f);
  for (const auto& c : g.coeffs()) z.push_back(c.q().get_num());
  return z;
}

inline Poly reduce_mod(const std::vector<mpz_class>& z, std::uint64_t p) {
  Field F = Field::prime(p);
  std::vector<Elem> c;
  for (const auto& a : z) c.push_back(F.from_mpq(mpq_class(a)));
  return Poly(F, std::move(c));
}

}  // namespace detail

/// Deterministic irreducibility certificate over Q: discriminant test in
/// degree 2, rational roots in degree 3, and for every degree the
/// intersection of factor-degree patterns modulo small good primes.
/// Returns false when irreducibility cannot be certified.
inline bool is_irreducible_q(const Poly& f) {
  int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  auto z = detail::int_coeffs(f);
  if (n == 2) {
    mpz_class disc = z[1] * z[1] - 4 * z[2] * z[0];
    return !(disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t()));
  }
  if (n == 3 && abs(z[0]) < mpz_class("1000000000000") && abs(z[3]) < mpz_class("1000000000000")) {
    if (z[0] == 0) return false;
    for (const auto& a : detail::divisors(z[0]))
      for (const auto& b : detail::divisors(z[3]))
        for (int s : {1, -1}) {
          mpq_class r(s * a, b);
          r.canonicalize();
          mpq_class v = 0;
          for (int i = 3; i >= 0; --i) v = v * r + mpq_class(z[static_cast<std::size_t>(i)]);
          if (v == 0) return false;
        }
    return true;
  }
  // achievable factor degrees: subset sums of the modular factor degrees
  std::vector<bool> possible(static_cast<std::size_t>(n) + 1, true);
  int good = 0;
  for (std::uint64_t p = 2; p < 2000 && good < 60; ++p) {
    if (!detail::is_prime_u64(p) || p == 3) continue;
    if (z.back() % static_cast<unsigned long>(p) == 0) continue;
    Poly g = detail::reduce_mod(z, p);
    if (!poly_gcd(g, g.derivative()).is_one()) continue;
    ++good;
    std::vector<bool> sums(static_cast<std::size_t>(n) + 1, false);
    sums[0] = true;
    for (const auto& [h, d] : distinct_degree(g))
      for (int k = 0; k < h.degree() / d; ++k)
        for (int s = n; s >= d; --s)
          if (sums[static_cast<std::size_t>(s - d)]) sums[static_cast<std::size_t>(s)] = true;
    bool only_trivial = true;
    for (int s = 1; s < n; ++s) {
      possible[static_cast<std::size_t>(s)] = possible[static_cast<std::size_t>(s)] && sums[static_cast<std::size_t>(s)];
      if (possible[static_cast<std::size_t>(s)]) only_trivial = false;
    }
    if (only_trivial) return true;
  }
  return false;
}

/// Irreducibility over any supported field (certified test over Q).
inline bool is_irreducible(const Poly& f) {
  if (!f.field().finite()) return is_irreducible_q(f);
  return detail::rabin_irreducible(f);
}

}  // namespace cubica

#endif  // CUBICA_FACTOR_HPP
