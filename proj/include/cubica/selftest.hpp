#ifndef CUBICA_SELFTEST_HPP
#define CUBICA_SELFTEST_HPP

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "analyzer.hpp"
#include "bitwist.hpp"
#include "descent.hpp"
#include "mumford.hpp"
#include "parshin.hpp"
#include "pure_cubic.hpp"

namespace cubica {

/// Random genus-zero K' over a prime field: a constant non-square, a linear
/// f, or a squarefree quadratic f.
inline QuadraticModel random_closure(const Field& F, std::mt19937_64& rng) {
  auto rnd = [&](bool nonzero) {
    for (;;) {
      Elem e = F.from_index(rng() % F.size());
      if (!nonzero || !e.is_zero()) return e;
    }
  };
  switch (rng() % 3) {
    case 0: {
      Elem d = rnd(true);
      while (is_square(d)) d = rnd(true);
      return QuadraticModel::kummer(Poly(d));
    }
    case 1: return QuadraticModel::kummer(Poly(F, {rnd(false), rnd(true)}));
    default:
      for (;;) {
        Poly f(F, {rnd(false), rnd(false), rnd(true)});
        if (poly_gcd(f, f.derivative()).degree() == 0) return QuadraticModel::kummer(f);
      }
  }
}

/// Places of degree <= 2 (and infinity) that split in M.
inline std::vector<Place> split_places(const QuadraticModel& M) {
  const Field& F = M.field();
  std::vector<Place> out;
  if (splitting_type(M, Place::infinity(F)).type == Splitting::Type::split) out.push_back(Place::infinity(F));
  std::uint64_t q = F.size();
  for (int d = 1; d <= 2; ++d) {
    std::uint64_t total = d == 1 ? q : q * q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<Elem> c(static_cast<std::size_t>(d) + 1, F.one());
      c[0] = F.from_index(idx % q);
      if (d == 2) c[1] = F.from_index(idx / q);
      Poly p(F, c);
      if (!is_irreducible(p)) continue;
      Place pl = Place::finite(p);
      if (splitting_type(M, pl).type == Splitting::Type::split) out.push_back(pl);
    }
  }
  return out;
}

/// A satisfiable problem with 1 <= |T| <= max_t and random signs.
inline DescentProblem random_descent_problem(const Field& F, std::mt19937_64& rng, int max_t = 4) {
  for (;;) {
    QuadraticModel M = random_closure(F, rng);
    std::vector<Place> cand = split_places(M);
    if (cand.empty()) continue;
    std::shuffle(cand.begin(), cand.end(), rng);
    std::size_t t = 1 + rng() % static_cast<std::uint64_t>(max_t);
    if (t > cand.size()) t = cand.size();
    DescentProblem pb{M, std::vector<Place>(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(t)), {}};
    for (std::size_t i = 0; i < t; ++i) pb.signs.push_back(rng() % 2 ? 1 : -1);
    return pb;
  }
}

/// Empty on success, otherwise the first failed check.
inline std::string check_descent(const DescentProblem& pb, const DescentResult& r) {
  const CubicModel& m = r.model;
  RamificationReport rep = analyze(m);
  PlaceSet T(pb.T.begin(), pb.T.end());
  if (rep.total != T) return "total " + to_string(rep.total) + " != T " + to_string(T);
  if (rep.partial != pb.closure.branch()) return "partial " + to_string(rep.partial) + " != branch";
  if (purely_cubic_closure(m) != pb.closure.cls()) return "closure " + purely_cubic_closure(m).to_string();
  // pole bound
  Divisor da = divisor_of(m.alpha);
  int doubles = 0;
  for (const auto& [pl, v] : da.terms()) {
    if (v < -2) return "pole of order " + std::to_string(-v) + " at " + pl.to_string();
    if (v == -2) ++doubles;
  }
  bool c2b = r.case_tag == "case_2b";
  if (doubles != 0) return "double pole in the c-form";
  if (c2b) {
    if (!r.unit_model) return "case_2b without unit model";
    Divisor du = divisor_of(r.unit_model->alpha);
    int d2 = 0;
    for (const auto& [pl, v] : du.terms()) {
      if (v < -2) return "unit model pole of order " + std::to_string(-v);
      if (v == -2) ++d2;
    }
    if (d2 != 1) return "unit model has " + std::to_string(d2) + " double poles";
    RamificationReport ru = analyze(*r.unit_model);
    if (ru.total != T || ru.partial != pb.closure.branch()) return "unit model ramification";
  } else if (r.unit_model) {
    return "unit model outside case_2b";
  }
  // f sigma(f) = lambda in k, and alpha = c Tr(f)
  RatFunc d = pb.closure.kind() == QuadraticModel::Kind::kummer ? RatFunc(pb.closure.f()) : RatFunc(m.F.one());
  RatFunc N = r.f.P * r.f.P - r.f.Q * r.f.Q * d;
  if (!N.is_constant() || N.constant_value() != r.lambda) return "f sigma(f) not the constant lambda";
  if (r.lambda != m.c) return "lambda != c";
  if (m.alpha != RatFunc(m.c * m.F.from_int(2)) * r.f.P) return "alpha != c (f + sigma f)";
  return {};
}

struct CriterionResult {
  int id;
  std::string name;
  bool ok;
  std::string detail;
  double seconds;
};

namespace detail {

template <class Fn>
CriterionResult timed(int id, std::string name, double limit, Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r{id, std::move(name), false, {}, 0.0};
  try {
    r.ok = fn(r.detail);
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit > 0 && r.seconds > limit) {
    r.ok = false;
    r.detail += (r.detail.empty() ? "" : "; ") + std::string("time limit exceeded");
  }
  return r;
}

inline Place place_of(const Field& F, std::vector<long long> c) { return Place::finite(Poly::from_ints(F, c)); }

}  // namespace detail

inline CriterionResult criterion_pure_count() {
  return detail::timed(1, "pure-cubic count vs brute force", 1.0, [](std::string& msg) {
    int n = 0;
    for (int t = 1; t <= 12; ++t)
      for (int s = 0; s <= t; ++s, ++n)
        if (count_pure(s, t) != count_pure_bruteforce(s, t)) {
          msg = "mismatch at (s, t) = (" + std::to_string(s) + ", " + std::to_string(t) + ")";
          return false;
        }
    msg = std::to_string(n) + " pairs";
    return true;
  });
}

inline CriterionResult criterion_recursion() {
  return detail::timed(2, "recursion vs closed form", 0, [](std::string& msg) {
    for (int k = 1; k <= 30; ++k)
      if (recursion_iterate(k) != recursion_closed(k)) {
        msg = "mismatch at k = " + std::to_string(k);
        return false;
      }
    msg = "k = 1..30";
    return true;
  });
}

inline CriterionResult criterion_descent_roundtrip(std::uint64_t seed = kDefaultSeed) {
  return detail::timed(3, "descent round trip", 30.0, [seed](std::string& msg) {
    std::mt19937_64 rng(seed);
    int cases[3] = {0, 0, 0};
    for (std::uint64_t p : {5, 7, 11, 13}) {
      Field F = Field::prime(p);
      for (int i = 0; i < 100; ++i) {
        DescentProblem pb = random_descent_problem(F, rng);
        DescentResult r = construct(pb);
        std::string err = check_descent(pb, r);
        if (!err.empty()) {
          msg = "F" + std::to_string(p) + " K' = " + pb.closure.to_string() + ": " + err;
          return false;
        }
        ++cases[r.case_tag == "even" ? 0 : r.case_tag == "odd_stable_point" ? 1 : 2];
      }
    }
    msg = "400 problems (even " + std::to_string(cases[0]) + ", odd_stable_point " + std::to_string(cases[1]) +
          ", case_2b " + std::to_string(cases[2]) + ")";
    return true;
  });
}

inline CriterionResult criterion_descent_count() {
  return detail::timed(4, "descent counts and Serre count", 0, [](std::string& msg) {
    Field F7 = Field::prime(7);
    // K': y^2 = x^2 - 3 (branch a degree-2 place); split places (x - a) with a^2 - 3 a square
    QuadraticModel M = QuadraticModel::kummer(Poly::from_ints(F7, {-3, 0, 1}));
    std::vector<Place> split = split_places(M);
    std::vector<Place> inert;
    for (std::uint64_t a = 0; a < 7; ++a) {
      Place pl = Place::finite(Poly(F7, {-F7.from_index(a), F7.one()}));
      if (splitting_type(M, pl).type == Splitting::Type::inert) inert.push_back(pl);
    }
    if (split.size() < 5 || inert.empty()) {
      msg = "not enough test places";
      return false;
    }
    for (int t = 1; t <= 5; ++t) {
      std::vector<Place> T(split.begin(), split.begin() + t);
      auto all = enumerate_descents(M, T);
      if (all.size() != (1ULL << (t - 1))) {
        msg = "split t = " + std::to_string(t) + ": " + std::to_string(all.size());
        return false;
      }
      std::set<std::string> alphas;
      for (const auto& r : all) alphas.insert(r.model.alpha.to_string());
      if (alphas.size() != all.size()) {
        msg = "repeated alpha at t = " + std::to_string(t);
        return false;
      }
      if (serre_count(2, t) != mpq_class(static_cast<unsigned long>(all.size()))) {
        msg = "serre_count(2, " + std::to_string(t) + ")";
        return false;
      }
      T.back() = inert.front();
      if (!enumerate_descents(M, T).empty()) {
        msg = "non-split t = " + std::to_string(t) + " produced descents";
        return false;
      }
    }
    for (int t = 1; t <= 8; ++t)
      if (serre_count(0, t) != mpq_class(count_pure(0, t))) {
        msg = "serre_count(0, " + std::to_string(t) + ")";
        return false;
      }
    msg = "t <= 5, Serre t <= 8";
    return true;
  });
}

inline CriterionResult criterion_bitwist_table() {
  return detail::timed(5, "bi-twist table", 0, [](std::string& msg) {
    std::ostringstream os;
    auto check = [&](Family fam, const Field& F) {
      auto cls = enumerate_classes(fam, F);
      if (static_cast<long long>(cls.size()) != class_count(fam, static_cast<long long>(F.size()))) {
        msg = family_name(fam) + " over F" + std::to_string(F.size()) + ": " + std::to_string(cls.size()) + " classes";
        return false;
      }
      RamRow want = family_row(fam);
      for (const auto& c : cls) {
        RamRow got = observed_row(c.model);
        if (got.total_deg != want.total_deg || got.partial_deg != want.partial_deg || got.genus != want.genus) {
          msg = family_name(fam) + " member " + c.model.to_string() + " has the wrong row";
          return false;
        }
      }
      os << family_name(fam) << "/F" << F.size() << "=" << cls.size() << " ";
      return true;
    };
    for (std::uint64_t q : {5, 7}) {
      Field F = Field::prime(q);
      for (Family fam : {Family::R33, Family::R322, Family::R3322})
        if (!check(fam, F)) return false;
      auto reps = bitwist_reps_deg3(F);
      std::size_t want = q % 3 == 1 ? 9 : 3;
      if (reps.size() != want) {
        msg = "degree-3 pure over F" + std::to_string(q) + ": " + std::to_string(reps.size());
        return false;
      }
      for (const auto& m : reps) {
        RamRow r = observed_row(m);
        if (r.total_deg != 3 || r.partial_deg != 0 || r.genus != 1) {
          msg = "degree-3 pure member " + m.to_string() + " has the wrong row";
          return false;
        }
      }
      os << "pure3/F" << q << "=" << reps.size() << " ";
    }
    for (const char* q : {"2", "4"}) {
      Field F = Field::parse(q);
      for (Family fam : {Family::R32_char2, Family::R332_char2, Family::R33_char2_AS})
        if (!check(fam, F)) return false;
    }
    msg = os.str();
    if (!msg.empty()) msg.pop_back();
    return true;
  });
}

/// The R33 formula for X^2 + a X + b.
inline RatFunc r33_alpha(const Field& F, long long a, long long b) {
  FamilyParams p;
  p.a = F.from_int(a);
  p.b = F.from_int(b);
  return family_member(Family::R33, F, p).alpha;
}

inline CriterionResult criterion_r33_formula() {
  return detail::timed(6, "R33 formula vs descent", 0, [](std::string& msg) {
    Field F5 = Field::prime(5);
    QuadraticModel M = QuadraticModel::kummer(Poly::from_ints(F5, {2}));
    // T = {x^2 + 2}: the quadratic X^2 + aX + b whose roots are the place is (0, 2);
    // (0, -2) describes the other split degree-2 place x^2 - 2.
    std::vector<std::pair<long long, long long>> ab{{0, 2}, {0, -2}};
    for (auto [a, b] : ab) {
      Place pl = detail::place_of(F5, {b, a, 1});
      for (int s : {1, -1}) {
        RatFunc got = construct({M, {pl}, {s}}).model.alpha;
        RatFunc want = r33_alpha(F5, a, b);
        if (got != want && got != -want) {
          msg = "T = {" + pl.to_string() + "}: " + got.to_string() + " vs " + want.to_string();
          return false;
        }
      }
    }
    msg = "T={x^2+2}: " + construct({M, {detail::place_of(F5, {2, 0, 1})}, {1}}).model.alpha.to_string();
    return true;
  });
}

inline CriterionResult criterion_parshin_golden() {
  return detail::timed(7, "Parshin golden cover", 10.0, [](std::string& msg) {
    Field Q = Field::rationals();
    auto q = [&](long long n, long long d = 1) { return Q.from_int(n) / Q.from_int(d); };
    EtaleCover C(Poly::from_ints(Q, {-5, 0, 0, 0, 4, 0, 4, 0, 1}));
    ParshinCover R = parshin_cover(C, AffinePoint{q(1), q(2)});
    MumfordClass threeE{Poly(Q, {q(-49, 9), q(0), q(1)}), Poly(q(3278, 81)), 1, 0};
    if (R.E != MumfordClass{Poly::from_ints(Q, {-1, 0, 1}), Poly(q(2)), 1, 0}) {
      msg = "E = " + R.E.to_string();
      return false;
    }
    if (R.threeE != threeE) {
      msg = "3E = " + R.threeE.to_string();
      return false;
    }
    AffinePoint Pt{q(7, 3), q(-3278, 81)};
    if (!(R.Pt == Pt) || !(R.Pt_partner == C.j(Pt))) {
      msg = "P~ = " + R.Pt.to_string();
      return false;
    }
    if (!(R.P == AffinePoint{q(49, 9), q(-22946, 243)})) {
      msg = "P = " + R.P.to_string();
      return false;
    }
    if (R.lambda != q(5)) {
      msg = "lambda = " + R.lambda.to_string();
      return false;
    }
    FunctionOnX want{Poly::from_ints(Q, {1050, 2680, -6860, 1320, 210}), Poly::from_ints(Q, {-480, -320}),
                     Poly::from_ints(Q, {49, -156, 174, -76, 9})};
    if (R.alpha.A != want.A || R.alpha.B != want.B || R.alpha.D != want.D) {
      msg = "alpha = " + R.alpha.to_string();
      return false;
    }
    if (!R.divisor_ok || !R.closure_ok || !R.branch_ok || R.genus_Y != 5) {
      msg = "verification flags";
      return false;
    }
    ParshinCover R2 = parshin_cover(C, AffinePoint{q(1), q(2)}, true);
    if (!R2.divisor_ok || !R2.closure_ok || !(R2.Pt == C.j(Pt))) {
      msg = "partner run";
      return false;
    }
    msg = "3E, P~, P, lambda = 5, alpha verbatim; partner run verified";
    return true;
  });
}

inline CriterionResult criterion_identities() {
  return detail::timed(8, "symbolic identities", 0, [](std::string& msg) {
    for (const auto& c : genus1_identities())
      if (!c.ok) {
        msg = "genus one: " + c.name;
        return false;
      }
    // (z^3 - 3cz)^2 - 4c^3 = (z^2 - 4c)(z^2 - c)^2 over Q[c, z]
    enum { Cv, Zv };
    MPoly c = MPoly::var(2, Cv), z = MPoly::var(2, Zv);
    MPoly lhs = (z.pow(3) - mpq_class(3) * c * z).pow(2) - mpq_class(4) * c.pow(3);
    MPoly rhs = (z.pow(2) - mpq_class(4) * c) * (z.pow(2) - c).pow(2);
    if (!(lhs == rhs)) {
      msg = "weierstrass identity";
      return false;
    }
    msg = std::to_string(genus1_identities().size()) + " genus-one identities + weierstrass identity";
    return true;
  });
}

inline CriterionResult criterion_properties(std::uint64_t seed = kDefaultSeed) {
  return detail::timed(9, "property suite", 0, [seed](std::string& msg) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    int checks = 0;
    // divisors
    for (std::uint64_t p : {5, 7, 11}) {
      Field F = Field::prime(p);
      auto rp = [&](int d) {
        std::vector<Elem> c;
        for (int i = 0; i <= d; ++i) c.push_back(F.from_index(rng() % p));
        if (c.back().is_zero()) c.back() = F.one();
        return Poly(F, c);
      };
      for (int it = 0; it < 40; ++it) {
        RatFunc f(rp(1 + it % 4), rp(it % 3)), g(rp(it % 5), rp(1 + it % 3));
        if (f.is_zero() || g.is_zero()) continue;
        Divisor df = divisor_of(f), dg = divisor_of(g);
        if (df.degree() != 0 || divisor_of(f * g) != df + dg || divisor_of(f.inv()) != -df) {
          msg = "divisor additivity / degree over F" + std::to_string(p);
          return false;
        }
        checks += 3;
      }
    }
    // Euler criterion vs exhaustive squares
    for (std::uint64_t q : {2, 4, 5, 7, 11, 13, 17, 19, 23, 25, 29, 31, 37, 41, 43, 47, 49}) {
      Field F = Field::parse(std::to_string(q));
      std::vector<bool> sq(q, false);
      for (std::uint64_t i = 0; i < q; ++i) {
        Elem a = F.from_index(i);
        sq[(a * a).index()] = true;
      }
      for (std::uint64_t i = 0; i < q; ++i, ++checks)
        if (is_square(F.from_index(i)) != sq[i]) {
          msg = "Euler criterion over F" + std::to_string(q);
          return false;
        }
    }
    // f sigma(f) constancy in every descent
    for (std::uint64_t p : {5, 7, 11, 13}) {
      Field F = Field::prime(p);
      for (int i = 0; i < 25; ++i, ++checks) {
        DescentProblem pb = random_descent_problem(F, rng);
        std::string err = check_descent(pb, construct(pb));
        if (!err.empty()) {
          msg = "descent over F" + std::to_string(p) + ": " + err;
          return false;
        }
      }
    }
    // Mumford bilinearity on the golden curve reduced mod 11 and 13
    for (std::uint64_t p : {11, 13}) {
      Field F = Field::prime(p);
      SplitHyperelliptic W(Poly::from_ints(F, {-5, 0, 0, 0, 4, 0, 4, 0, 1}));
      std::vector<MumfordClass> classes;
      for (std::uint64_t i = 1; i < p && classes.size() < 3; ++i) {
        Elem x0 = F.from_index(i), fx = W.F().eval(x0);
        if (fx.is_zero() || !is_square(fx)) continue;
        classes.push_back(mumford_anti(W, x0, sqrt(fx)));
      }
      for (const auto& D : classes) {
        std::vector<MumfordClass> mult{mumford_zero(W)};
        for (int k = 1; k <= 16; ++k) mult.push_back(mumford_add(W, mult.back(), D));
        for (int m = 0; m <= 8; ++m)
          for (int n = 0; n <= 8; ++n, ++checks)
            if (mumford_add(W, mult[static_cast<std::size_t>(m)], mult[static_cast<std::size_t>(n)]) !=
                    mult[static_cast<std::size_t>(m + n)] ||
                mumford_scalar(W, D, m + n) != mult[static_cast<std::size_t>(m + n)]) {
              msg = "bilinearity mod " + std::to_string(p) + " at (" + std::to_string(m) + ", " + std::to_string(n) + ")";
              return false;
            }
      }
      if (classes.empty()) {
        msg = "no rational points mod " + std::to_string(p);
        return false;
      }
    }
    msg = std::to_string(checks) + " assertions";
    return true;
  });
}

inline std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed) {
  return {criterion_pure_count(),    criterion_recursion(),     criterion_descent_roundtrip(seed),
          criterion_descent_count(), criterion_bitwist_table(), criterion_r33_formula(),
          criterion_parshin_golden(), criterion_identities(),   criterion_properties(seed)};
}

}  // namespace cubica

#endif  // CUBICA_SELFTEST_HPP
