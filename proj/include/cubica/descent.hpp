#ifndef CUBICA_DESCENT_HPP
#define CUBICA_DESCENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "parametrize.hpp"

namespace cubica {

/// K' together with the places T of K that should be totally ramified.
/// signs[i] = +1 takes the default place above T[i] (Splitting::minus),
/// -1 takes its conjugate.
struct DescentProblem {
  QuadraticModel closure;
  std::vector<Place> T;
  std::vector<int> signs;
};

struct DescentResult {
  CubicModel model;                     // y^3 = 3 c y + alpha
  std::optional<CubicModel> unit_model;  // c = 1 form in case_2b
  std::string case_tag;                 // even | odd_stable_point | case_2b
  KElem theta;                          // theta = P + Q r
  KElem f;                              // f with alpha = c (f + c/f)
  Elem lambda;                          // f * sigma(f)
  Divisor theta_divisor;                // on the parametrizing line
  bool flipped = false;                 // y -> -y normalization applied
  ULine line;
};

/// Every place of T splits in K' (and T is nonempty).
inline bool exists_descent(const QuadraticModel& M, const std::vector<Place>& T) {
  if (M.field().p() == 2) throw DomainError("descent in characteristic 2 is covered by the closed families");
  if (T.empty()) return false;
  for (const auto& p : T)
    if (splitting_type(M, p).type != Splitting::Type::split) return false;
  return true;
}

namespace detail {

// Chosen representative of {a, -a} under y -> -y: the smaller canonical
// index over F_q, the positive one over Q.
inline bool prefer_negated(const Elem& lc) {
  Elem m = -lc;
  if (lc.is_rational()) return sgn(lc.q()) < 0;
  return canonical_less(m, lc);
}

inline RatFunc line_function(const Divisor& D, const Field& k) {
  Poly num(k.one()), den(k.one());
  for (const auto& [pl, m] : D.terms()) {
    if (pl.is_inf()) continue;
    if (m > 0) num *= pl.poly().pow(static_cast<unsigned long>(m));
    else den *= pl.poly().pow(static_cast<unsigned long>(-m));
  }
  return RatFunc(num, den);
}

// sum over T of the chosen places above, as line divisor
inline Divisor chosen_places(const ULine& L, const DescentProblem& pb, std::vector<Place>* minus_out = nullptr) {
  Divisor D;
  for (std::size_t i = 0; i < pb.T.size(); ++i) {
    Splitting s = splitting_type(pb.closure, pb.T[i]);
    if (s.type != Splitting::Type::split)
      throw DomainError("construct: " + pb.T[i].to_string() + " is " + s.type_name() + " in K'");
    int sign = i < pb.signs.size() ? pb.signs[i] : 1;
    if (sign != 1 && sign != -1) throw DomainError("construct: signs must be +1 or -1");
    Place P = line_place(L, sign == 1 ? *s.minus : *s.plus);
    if (minus_out) minus_out->push_back(P);
    D.add(P, 1);
  }
  return D;
}

}  // namespace detail

/// Builds y^3 = 3 c y + alpha with purely cubic closure K' and total
/// ramification exactly T.
inline DescentResult construct(const DescentProblem& pb) {
  const QuadraticModel& M = pb.closure;
  if (!exists_descent(M, pb.T)) throw DomainError("construct: some place of T does not split in K' (or T is empty)");
  {
    PlaceSet seen(pb.T.begin(), pb.T.end());
    if (seen.size() != pb.T.size()) throw DomainError("construct: repeated place in T");
  }
  ULine L = parametrize(M);
  const Field k = M.field();
  int degT = 0;
  for (const auto& p : pb.T) degT += p.degree();

  DescentResult res;
  res.model = CubicModel::impure(k.one(), RatFunc(k.one()));
  res.line = L;
  std::vector<Place> minus;
  Divisor sumP = detail::chosen_places(L, pb, &minus);

  if (L.constant) {
    // theta = product of the chosen places over k'; f = sigma(theta)/theta
    RatFunc theta = detail::line_function(sumP, L.kp);
    res.theta_divisor = sumP;
    res.theta_divisor.add(Place::infinity(L.kp), -sumP.degree());
    res.case_tag = "even";
    RatFunc fl = detail::conj(theta) / theta;
    RatFunc alpha_p = fl + detail::conj(fl);
    RatFunc alpha = detail::down(alpha_p, k);
    if (detail::prefer_negated(alpha.num().lc())) {
      res.flipped = true;
      theta = RatFunc(L.sqrt_d) * theta;
      fl = -fl;
      alpha = -alpha;
    }
    Elem two = L.kp.from_int(2);
    RatFunc P = (theta + detail::conj(theta)) / RatFunc(two);
    RatFunc Q = (theta - detail::conj(theta)) / RatFunc(two * L.sqrt_d);
    res.theta = {detail::down(P, k), detail::down(Q, k)};
    RatFunc fP = (fl + detail::conj(fl)) / RatFunc(two);
    RatFunc fQ = (fl - detail::conj(fl)) / RatFunc(two * L.sqrt_d);
    res.f = {detail::down(fP, k), detail::down(fQ, k)};
    RatFunc lam = fl * detail::conj(fl);
    if (!lam.is_constant()) throw DomainError("construct: f*sigma(f) is not constant");
    res.lambda = detail::down(lam, k).constant_value();
    res.model = CubicModel::impure(k.one(), alpha);
    return res;
  }

  KPrime Kp(M.f());
  auto to_K = [&](const RatFunc& g) { return Kp.div(Kp.eval(g.num(), L.u), Kp.eval(g.den(), L.u)); };
  auto build = [&](const Divisor& D) {
    if (D.degree() != 0) throw DomainError("construct: internal divisor of nonzero degree");
    return to_K(detail::line_function(D, L.k));
  };
  auto alpha_of = [&](const KElem& th, const std::optional<KElem>& ell, const Elem& c) {
    // alpha = c * Tr(ell * sigma(theta)^2) / N(theta)
    KElem s2 = Kp.mul(Kp.sigma(th), Kp.sigma(th));
    if (ell) s2 = Kp.mul(*ell, s2);
    return RatFunc(c) * Kp.trace(s2) / Kp.norm(th);
  };
  auto f_of = [&](const KElem& th, const std::optional<KElem>& ell) {
    KElem fv = Kp.div(Kp.sigma(th), th);
    return ell ? Kp.mul(*ell, fv) : fv;
  };

  Divisor D;
  std::optional<KElem> ell;
  Elem c = k.one();
  if (degT % 2 == 0) {
    res.case_tag = "even";
    D = sumP - (degT / 2) * L.eta;
  } else if (L.stable) {
    res.case_tag = "odd_stable_point";
    D = sumP;
    D.add(*L.stable, -degT);
  } else {
    res.case_tag = "case_2b";
    D = sumP - ((degT + 1) / 2) * L.eta;
    D.add(*L.kappa, 1);
    ell = to_K(L.ell);
    c = L.c;
    // c = 1 form with a double pole at the first odd-degree place
    std::size_t i1 = pb.T.size();
    for (std::size_t i = 0; i < pb.T.size(); ++i) {
      if (pb.T[i].degree() % 2 == 0) continue;
      if (i1 == pb.T.size() || pb.T[i].degree() < pb.T[i1].degree() ||
          (pb.T[i].degree() == pb.T[i1].degree() && pb.T[i] < pb.T[i1]))
        i1 = i;
    }
    int d1 = pb.T[i1].degree();
    Divisor D1 = sumP - ((degT - 3 * d1) / 2) * L.eta;
    D1.add(minus[i1], -3);
    KElem th1 = build(D1);
    RatFunc a1 = alpha_of(th1, std::nullopt, k.one());
    if (detail::prefer_negated(a1.num().lc())) a1 = -a1;
    res.unit_model = CubicModel::impure(k.one(), a1);
  }
  res.theta_divisor = D;
  KElem theta = build(D);
  RatFunc alpha = alpha_of(theta, ell, c);
  if (detail::prefer_negated(alpha.num().lc())) {
    res.flipped = true;
    theta = {theta.Q * RatFunc(M.f()), theta.P};  // theta -> r theta
    alpha = alpha_of(theta, ell, c);
  }
  res.theta = theta;
  res.f = f_of(theta, ell);
  RatFunc lam = Kp.norm(res.f);
  if (!lam.is_constant()) throw DomainError("construct: f*sigma(f) is not constant");
  res.lambda = lam.constant_value();
  res.model = CubicModel::impure(c, alpha);
  return res;
}

/// All 2^(t-1) descents for T (first sign fixed), or none.
inline std::vector<DescentResult> enumerate_descents(const QuadraticModel& M, const std::vector<Place>& T) {
  std::vector<DescentResult> out;
  if (!exists_descent(M, T)) return out;
  std::size_t t = T.size();
  for (std::uint64_t mask = 0; mask < (1ULL << (t - 1)); ++mask) {
    DescentProblem pb{M, T, std::vector<int>(t, 1)};
    for (std::size_t i = 1; i < t; ++i)
      if (mask >> (i - 1) & 1) pb.signs[i] = -1;
    out.push_back(construct(pb));
  }
  return out;
}

/// Representatives of N1/N1^3 for N1 the norm-one subgroup of k'^*.
inline std::vector<Elem> norm_one_cube_classes(const Field& kp) {
  std::uint64_t q = kp.size();
  std::uint64_t p = kp.p();  // |k| = p, |N1| = p + 1
  std::vector<Elem> reps{kp.one()};
  if ((p + 1) % 3 != 0) return reps;
  // generator of N1: g^(p-1) for a generator g of k'^*
  for (std::uint64_t i = 1; i < q; ++i) {
    Elem g = kp.from_index(i);
    bool gen = true;
    for (std::uint64_t r = 2; r <= q - 1 && gen; ++r) {
      if ((q - 1) % r) continue;
      bool prime = true;
      for (std::uint64_t s = 2; s * s <= r; ++s)
        if (r % s == 0) prime = false;
      if (prime && g.pow(static_cast<long long>((q - 1) / r)).is_one()) gen = false;
    }
    if (!gen) continue;
    Elem h = g.pow(static_cast<long long>(p - 1));
    reps.push_back(h);
    reps.push_back(h * h);
    return reps;
  }
  throw DomainError("no generator found");
}

/// Twists of a descent: f -> u f for u in N1/N1^3 (constant K'), otherwise
/// the model itself.
inline std::vector<CubicModel> twists_descent(const DescentResult& r) {
  if (!r.line.constant) return {r.model};
  const Field& kp = r.line.kp;
  const Field k = r.model.F;
  // f on the line k'(x): P + Q sqrt_d
  RatFunc fl = pullback(r.line, r.f.P) + RatFunc(r.line.sqrt_d) * pullback(r.line, r.f.Q);
  std::vector<CubicModel> out;
  for (const Elem& u : norm_one_cube_classes(kp)) {
    RatFunc g = RatFunc(u) * fl;
    RatFunc a = detail::down(g + detail::conj(g), k);
    if (detail::prefer_negated(a.num().lc())) a = -a;
    out.push_back(CubicModel::impure(k.one(), a));
  }
  return out;
}

/// Character-sum count of S3 covers with s double and t triple branch
/// points; s = 0 counts cyclic cubic covers.
inline mpq_class serre_count(int s, int t) {
  if (s < 0 || t < 1) throw DomainError("serre_count: need s >= 0, t >= 1");
  if (s == 0) {
    // tuples in (Z/3 \ 0)^t with sum 0, up to the automorphism -1
    mpz_class two_t;
    mpz_ui_pow_ui(two_t.get_mpz_t(), 2, static_cast<unsigned long>(t));
    mpq_class tuples(two_t + 2 * (t % 2 ? -1 : 1), 3);
    tuples.canonicalize();
    return tuples / 2;
  }
  // S3: classes transposition (size 3), 3-cycle (size 2); characters
  // trivial, sign, standard (degree 2)
  int n = s + t;
  mpq_class sum = 0;
  const int chi_tr[3] = {1, -1, 0}, chi_cy[3] = {1, 1, -1}, deg[3] = {1, 1, 2};
  for (int j = 0; j < 3; ++j) {
    mpq_class term = 1;
    for (int i = 0; i < s; ++i) term *= chi_tr[j];
    for (int i = 0; i < t; ++i) term *= chi_cy[j];
    mpq_class d = 1;
    for (int i = 0; i < n - 2; ++i) d *= deg[j];
    if (n < 2)
      for (int i = 0; i < 2 - n; ++i) term *= deg[j];
    sum += term / d;
  }
  mpz_class sizes;
  mpz_class a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), 3, static_cast<unsigned long>(s));
  mpz_ui_pow_ui(b.get_mpz_t(), 2, static_cast<unsigned long>(t));
  sizes = a * b;
  mpq_class tuples = mpq_class(sizes) * sum / 6;
  return tuples / 6;  // S3 has trivial center: conjugation acts freely
}

}  // namespace cubica

#endif  // CUBICA_DESCENT_HPP
