#ifndef CUBICA_PURE_CUBIC_HPP
#define CUBICA_PURE_CUBIC_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "function_field.hpp"
#include "quadratic.hpp"

namespace cubica {

/// Places of T in bucket order: degree = 0, 2, 1 (mod 3); infinity is
/// dropped and reported separately.
inline std::vector<Place> bucket_order(const std::vector<Place>& T, bool* has_inf = nullptr) {
  std::vector<Place> fin;
  bool inf = false;
  for (const auto& p : T) {
    if (p.is_inf()) inf = true;
    else fin.push_back(p);
  }
  auto bucket = [](const Place& p) {
    int r = p.degree() % 3;
    return r == 0 ? 0 : (r == 2 ? 1 : 2);
  };
  std::stable_sort(fin.begin(), fin.end(), [&](const Place& a, const Place& b) {
    if (bucket(a) != bucket(b)) return bucket(a) < bucket(b);
    return a < b;
  });
  if (has_inf) *has_inf = inf;
  return fin;
}

struct PureEntry {
  std::vector<int> signs;  // one per finite place, in bucket order
  CubicModel model;
};

/// One purely cubic model per k-bar-isomorphism class with total
/// ramification exactly T (unit u = 1).
inline std::vector<PureEntry> enumerate_pure(const std::vector<Place>& T) {
  std::vector<PureEntry> out;
  if (T.empty()) return out;
  {
    PlaceSet seen(T.begin(), T.end());
    if (seen.size() != T.size()) throw DomainError("enumerate_pure: repeated place");
  }
  if (T.front().field().p() == 3) throw DomainError("enumerate_pure: characteristic 3");
  bool inf = false;
  std::vector<Place> P = bucket_order(T, &inf);
  std::size_t n = P.size();
  if (n == 0) return out;
  Field F = T.front().field();
  for (std::uint64_t mask = 0; mask < (1ULL << (n - 1)); ++mask) {
    std::vector<int> eps(n, 1);
    for (std::size_t i = 1; i < n; ++i)
      if (mask >> (n - 1 - i) & 1) eps[i] = -1;
    int sum = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (P[i].degree() % 3) sum += eps[i];
    bool zero = ((sum % 3) + 3) % 3 == 0;
    if (zero == inf) continue;
    Poly num(F.one()), den(F.one());
    for (std::size_t i = 0; i < n; ++i) {
      // degree 2 (mod 3) places sit in the denominator
      int e = eps[i] * (P[i].degree() % 3 == 2 ? -1 : 1);
      (e > 0 ? num : den) *= P[i].poly();
    }
    out.push_back({eps, CubicModel::pure(RatFunc(num, den))});
  }
  return out;
}

/// Closed-form count of purely cubic covers (s places of degree divisible
/// by 3 among t).
inline mpz_class count_pure(int s, int t) {
  if (s < 0 || t < 0 || s > t) throw DomainError("count_pure: need 0 <= s <= t");
  if (t == 0) return 0;
  if (t == s) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(s - 1));
    return r;
  }
  mpz_class a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), 2, static_cast<unsigned long>(s));
  mpz_ui_pow_ui(b.get_mpz_t(), 2, static_cast<unsigned long>(t - s - 1));
  b -= (t - s - 1) % 2 ? -1 : 1;
  return a * b / 3;
}

/// Sign vectors over t places (the first s exempt from the sum condition)
/// with sum = 0 mod 3, counted up to global negation.
inline mpz_class count_pure_bruteforce(int s, int t) {
  if (s < 0 || t < 1 || s > t) throw DomainError("count_pure_bruteforce: need 0 <= s <= t, t >= 1");
  std::uint64_t valid = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << t); ++mask) {
    int sum = 0;
    for (int i = s; i < t; ++i) sum += (mask >> i & 1) ? -1 : 1;
    if (((sum % 3) + 3) % 3 == 0) ++valid;
  }
  return mpz_class(static_cast<unsigned long>(valid / 2));
}

/// (E_k, F_k) by iterating E' = F, F' = 2E + F from (0, 2), and the closed
/// forms (2/3)(2^(k-1) - (-1)^(k-1)), (2/3)(2^k - (-1)^k).
inline std::pair<mpz_class, mpz_class> recursion_iterate(int k) {
  if (k < 1) throw DomainError("recursion: k >= 1");
  mpz_class E = 0, F = 2;
  for (int i = 1; i < k; ++i) {
    mpz_class e2 = F, f2 = 2 * E + F;
    E = e2;
    F = f2;
  }
  return {E, F};
}

inline std::pair<mpz_class, mpz_class> recursion_closed(int k) {
  if (k < 1) throw DomainError("recursion: k >= 1");
  mpz_class a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), 2, static_cast<unsigned long>(k - 1));
  mpz_ui_pow_ui(b.get_mpz_t(), 2, static_cast<unsigned long>(k));
  a -= (k - 1) % 2 ? -1 : 1;
  b -= k % 2 ? -1 : 1;
  return {2 * a / 3, 2 * b / 3};
}

/// Representatives of k^*/(k^*)^3, smallest element of each coset.
inline std::vector<Elem> cube_class_reps(const Field& F) {
  if (!F.finite()) throw DomainError("cube classes of Q are infinite; pass explicit units");
  std::vector<Elem> reps;
  for (std::uint64_t i = 1; i < F.size(); ++i) {
    Elem u = F.from_index(i);
    bool known = false;
    for (const auto& r : reps)
      if (is_cube(u / r)) known = true;
    if (!known) reps.push_back(u);
  }
  return reps;
}

/// y^3 = u beta for each cube class u (or the caller's units).
inline std::vector<CubicModel> twists_pure(const CubicModel& M, const std::vector<Elem>& units = {}) {
  if (!M.is_pure()) throw DomainError("twists_pure: pure model required");
  std::vector<Elem> us = units.empty() ? cube_class_reps(M.F) : units;
  std::vector<CubicModel> out;
  for (const auto& u : us) out.push_back(CubicModel::pure(RatFunc(u) * M.beta));
  return out;
}

/// Smallest monic irreducible polynomial of degree d in canonical order.
inline Poly first_irreducible(const Field& F, int d) {
  std::uint64_t q = F.size();
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= q;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    // canonical order: leading-down coefficients, i.e. big-endian digits
    std::vector<Elem> c(static_cast<std::size_t>(d) + 1, F.zero());
    c[static_cast<std::size_t>(d)] = F.one();
    std::uint64_t v = idx;
    for (int i = 0; i < d; ++i) {
      c[static_cast<std::size_t>(i)] = F.from_index(v % q);
      v /= q;
    }
    Poly f(F, c);
    if (is_irreducible(f)) return f;
  }
  throw DomainError("no irreducible polynomial found");
}

/// Representatives y^3 = c f with f one of x(x-1), x * (irreducible
/// quadratic), irreducible cubic, and c over the cube classes.
inline std::vector<CubicModel> bitwist_reps_deg3(const Field& F) {
  if (!F.finite()) throw DomainError("bitwist_reps_deg3: finite field required");
  if (F.p() == 3) throw DomainError("bitwist_reps_deg3: characteristic 3");
  Poly x = Poly::x(F);
  std::vector<Poly> fs{x * Poly::from_ints(F, {-1, 1}), x * first_irreducible(F, 2), first_irreducible(F, 3)};
  std::vector<CubicModel> out;
  for (const auto& f : fs)
    for (const auto& c : cube_class_reps(F)) out.push_back(CubicModel::pure(RatFunc(f * c)));
  return out;
}

}  // namespace cubica

#endif  // CUBICA_PURE_CUBIC_HPP
