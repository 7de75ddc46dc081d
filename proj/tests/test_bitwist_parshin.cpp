#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cubica/parametrize.hpp"
#include "cubica/selftest.hpp"

using namespace cubica;

namespace {

Poly P(Field F, std::vector<long long> c) { return Poly::from_ints(F, c); }
Elem q(long long n, long long d = 1) {
  Field Q = Field::rationals();
  return Q.from_int(n) / Q.from_int(d);
}

const Poly& example_F() {
  static const Poly F = P(Field::rationals(), {-5, 0, 0, 0, 4, 0, 4, 0, 1});
  return F;
}

}  // namespace

TEST(Bitwist, FamilyExamples) {
  Field F5 = Field::prime(5), F2 = Field::prime(2);
  EXPECT_EQ(r33_alpha(F5, 0, 2), RatFunc(P(F5, {1, 0, 2}), P(F5, {2, 0, 1})));
  FamilyParams d2;
  d2.d = F5.from_int(2);
  EXPECT_EQ(family_member(Family::R322, F5, d2).alpha, RatFunc(P(F5, {3, 0, 2})));
  CubicModel m32 = family_member(Family::R32_char2, F2);
  EXPECT_EQ(m32.alpha, RatFunc(Poly::x(F2)));
  EXPECT_TRUE(m32.c.is_one());
}

TEST(Bitwist, EmittedFormulas) {
  Field F7 = Field::prime(7);
  RatFunc x(Poly::x(F7));
  RatFunc two(F7.from_int(2)), one(F7.one());
  for (std::uint64_t i = 2; i < 7; ++i)
    for (long long dv : {1, 3}) {
      FamilyParams p;
      p.nu = F7.from_index(i);
      p.d = F7.from_int(dv);
      RatFunc nu(*p.nu), d(*p.d);
      RatFunc want = two * ((two * nu - one) * x * x - d * nu) / (x * x - d * nu);
      EXPECT_EQ(family_member(Family::R3322, F7, p).alpha, want);
    }
  Field F4 = Field::parse("4");
  RatFunc x4(Poly::x(F4));
  for (std::uint64_t i = 2; i < 4; ++i)
    for (const Elem& a : {F4.zero(), fixed_as_constant(F4)}) {
      FamilyParams p;
      p.lambda = F4.from_index(i);
      p.a = a;
      EXPECT_EQ(family_member(Family::R332_char2, F4, p).alpha,
                RatFunc(*p.lambda) / (x4 * x4 + x4 + RatFunc(a)));
    }
}

TEST(Bitwist, ParameterValidation) {
  Field F5 = Field::prime(5), F2 = Field::prime(2);
  FamilyParams red;
  red.a = F5.zero();
  red.b = F5.from_int(-1);  // x^2 - 1 splits
  EXPECT_THROW(family_member(Family::R33, F5, red), DomainError);
  FamilyParams zero;
  zero.d = F5.zero();
  EXPECT_THROW(family_member(Family::R322, F5, zero), DomainError);
  FamilyParams nu1;
  nu1.nu = F5.one();
  nu1.d = F5.one();
  EXPECT_THROW(family_member(Family::R3322, F5, nu1), DomainError);
  EXPECT_THROW(family_member(Family::R32_char2, F5), DomainError);
  FamilyParams any;
  any.d = F2.one();
  EXPECT_THROW(family_member(Family::R322, F2, any), DomainError);
  EXPECT_THROW(family_member(Family::R322, F5, {}), DomainError);
  EXPECT_THROW(parse_family("R99"), DomainError);
  EXPECT_EQ(parse_family("R3322"), Family::R3322);
}

TEST(Bitwist, ClassCounts) {
  EXPECT_EQ(class_count(Family::R3322, 5), 6);
  EXPECT_EQ(class_count(Family::R32_char2, 2), 1);
  EXPECT_EQ(class_count(Family::R33, 7), 2);
  EXPECT_EQ(class_count(Family::R332_char2, 4), 4);
  EXPECT_EQ(class_count(Family::R322, 11), 2);
}

TEST(Bitwist, EnumerationSizesAndRows) {
  auto run = [](Family fam, const Field& F) {
    auto cls = enumerate_classes(fam, F);
    EXPECT_EQ(static_cast<long long>(cls.size()), class_count(fam, static_cast<long long>(F.size())))
        << family_name(fam) << " F" << F.size();
    RamRow want = family_row(fam);
    for (const auto& c : cls) {
      RamRow got = observed_row(c.model);
      EXPECT_EQ(got.total_deg, want.total_deg) << c.model.to_string();
      EXPECT_EQ(got.partial_deg, want.partial_deg) << c.model.to_string();
      EXPECT_EQ(got.genus, want.genus) << c.model.to_string();
    }
    return cls;
  };
  for (std::uint64_t p : {5, 7, 11, 13})
    for (Family f : {Family::R33, Family::R322, Family::R3322}) run(f, Field::prime(p));
  for (const char* s : {"2", "4"})
    for (Family f : {Family::R32_char2, Family::R332_char2, Family::R33_char2_AS}) run(f, Field::parse(s));
  EXPECT_EQ(enumerate_classes(Family::R3322, Field::prime(5)).size(), 6u);
  EXPECT_EQ(enumerate_classes(Family::R332_char2, Field::parse("4")).size(), 4u);
  EXPECT_THROW(enumerate_classes(Family::R322, Field::rationals()), DomainError);
}

TEST(Bitwist, R33ClosureIsTheConstantQuadratic) {
  for (std::uint64_t p : {5, 7, 11, 13}) {
    Field F = Field::prime(p);
    auto cls = enumerate_classes(Family::R33, F);
    ASSERT_EQ(cls.size(), 2u);
    EXPECT_TRUE(cls[0].trivial_pure);
    const auto& prm = cls[1].params;
    Elem disc = *prm.a * *prm.a - F.from_int(4) * *prm.b;
    EXPECT_EQ(purely_cubic_closure(cls[1].model), QuadClass::square(RatFunc(disc)));
    EXPECT_FALSE(purely_cubic_closure(cls[1].model).is_trivial());
  }
}

TEST(Bitwist, ExactlyOneGaloisR33Class) {
  for (std::uint64_t p : {5, 7, 11, 13, 17, 19}) {
    Field F = Field::prime(p);
    auto cls = enumerate_classes(Family::R33, F);
    int galois = 0;
    bool trivial_is_galois = false;
    for (const auto& c : cls)
      if (classify(c.model).galois) {
        ++galois;
        trivial_is_galois = c.trivial_pure;
      }
    EXPECT_EQ(galois, 1) << p;
    EXPECT_EQ(trivial_is_galois, p % 3 == 1) << p;
  }
}

TEST(Bitwist, CharTwoMembersAreDistinct) {
  Field F4 = Field::parse("4");
  auto cls = enumerate_classes(Family::R332_char2, F4);
  std::set<std::string> eqs;
  for (const auto& c : cls) eqs.insert(c.model.to_string());
  EXPECT_EQ(eqs.size(), cls.size());
  // the two Artin-Schreier choices at the same lambda: split vs inert total locus
  EXPECT_NE(analyze(cls[0].model).total, analyze(cls[1].model).total);
}

// x -> (x+1)/(x-1) carries the mu-form to the nu-form (d = 1) up to alpha -> -alpha.
TEST(Bitwist, MuFormMatchesNuForm) {
  for (std::uint64_t p : {5, 7, 11, 13}) {
    Field F = Field::prime(p);
    RatFunc sub(P(F, {1, 1}), P(F, {-1, 1}));
    for (std::uint64_t i = 2; i < p; ++i) {
      FamilyParams nu;
      nu.nu = F.from_index(i);
      nu.d = F.one();
      FamilyParams mu = nu;
      mu.mu_form = true;
      CubicModel a;
      try {
        a = family_member(Family::R3322, F, mu);
      } catch (const DomainError&) {
        continue;  // mu = +-2 degenerates in this chart
      }
      RatFunc lhs = a.alpha.compose(sub), rhs = family_member(Family::R3322, F, nu).alpha;
      EXPECT_EQ(lhs, -rhs) << "nu = " << nu.nu->to_string() << " over F" << p;
    }
  }
}

TEST(Mumford, GoldenTripling) {
  SplitHyperelliptic W(example_F());
  EXPECT_EQ(W.genus(), 3);
  MumfordClass E = mumford_anti(W, q(1), q(2));
  EXPECT_EQ(E, (MumfordClass{P(Field::rationals(), {-1, 0, 1}), Poly(q(2)), 1, 0}));
  MumfordClass E3 = mumford_scalar(W, E, 3);
  EXPECT_EQ(E3, (MumfordClass{Poly(Field::rationals(), {q(-49, 9), q(0), q(1)}), Poly(q(3278, 81)), 1, 0}));
  EXPECT_EQ(mumford_scalar(W, E, 0), mumford_zero(W));
  EXPECT_EQ(mumford_scalar(W, E, 1), E);
  EXPECT_EQ(mumford_add(W, E, mumford_neg(W, E)), mumford_zero(W));
  EXPECT_EQ(mumford_scalar(W, E, -3), mumford_neg(W, E3));
}

TEST(Mumford, BilinearityModPrimes) {
  for (std::uint64_t p : {11, 13}) {
    Field F = Field::prime(p);
    SplitHyperelliptic W(P(F, {-5, 0, 0, 0, 4, 0, 4, 0, 1}));
    std::vector<MumfordClass> base;
    for (std::uint64_t i = 1; i < p; ++i) {
      Elem x0 = F.from_index(i), fx = W.F().eval(x0);
      if (!fx.is_zero() && is_square(fx)) base.push_back(mumford_anti(W, x0, sqrt(fx)));
    }
    ASSERT_GE(base.size(), 2u);
    // random anti-invariant classes: sums of the P - i(P) classes
    std::mt19937_64 rng(p);
    for (int trial = 0; trial < 4; ++trial) {
      MumfordClass D = mumford_zero(W);
      for (const auto& B : base)
        if (rng() % 2) D = mumford_add(W, D, B);
      for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n)
          EXPECT_EQ(mumford_scalar(W, D, m + n), mumford_add(W, mumford_scalar(W, D, m), mumford_scalar(W, D, n)))
              << "p = " << p << " m = " << m << " n = " << n;
    }
  }
}

TEST(Mumford, InvolutionEquivariance) {
  for (std::uint64_t p : {11, 13}) {
    Field F = Field::prime(p);
    SplitHyperelliptic W(P(F, {-5, 0, 0, 0, 4, 0, 4, 0, 1}));
    for (std::uint64_t i = 1; i < p; ++i) {
      Elem x0 = F.from_index(i), fx = W.F().eval(x0);
      if (fx.is_zero() || !is_square(fx)) continue;
      MumfordClass D = mumford_anti(W, x0, sqrt(fx));
      EXPECT_EQ(mumford_i(W, D), mumford_neg(W, D));
      for (int n = 1; n <= 9; ++n) EXPECT_EQ(mumford_scalar(W, mumford_i(W, D), n), mumford_i(W, mumford_scalar(W, D, n)));
    }
  }
}

TEST(Mumford, RejectsBadModels) {
  Field Q = Field::rationals();
  EXPECT_THROW(SplitHyperelliptic(P(Q, {1, 0, 0, 0, 0, 1})), DomainError);
  EXPECT_THROW(SplitHyperelliptic(P(Q, {1, 0, 0, 0, 0, 0, 2})), DomainError);
  EXPECT_THROW(SplitHyperelliptic(P(Q, {0, 0, 1, 0, 1})), DomainError);
  SplitHyperelliptic W(example_F());
  EXPECT_THROW(mumford_anti(W, q(1), q(3)), DomainError);
}

TEST(Parshin, GoldenCover) {
  EtaleCover C(example_F());
  ParshinCover R = parshin_cover(C, AffinePoint{q(1), q(2)});
  EXPECT_EQ(R.threeE.to_string(), "(x^2 - 49/9, 3278/81; 1, 0)");
  AffinePoint Pt{q(7, 3), q(-3278, 81)};
  EXPECT_EQ(R.Pt, Pt);
  EXPECT_EQ(R.Pt_partner, C.j(Pt));
  EXPECT_EQ(R.P, (AffinePoint{q(49, 9), q(-22946, 243)}));
  EXPECT_EQ(R.lambda, q(5));
  EXPECT_EQ(R.alpha.to_string(),
            "((-320*x - 480)*y + (210*x^4 + 1320*x^3 - 6860*x^2 + 2680*x + 1050))/(9*x^4 - 76*x^3 + 174*x^2 - 156*x + 49)");
  EXPECT_TRUE(R.divisor_ok);
  EXPECT_TRUE(R.closure_ok);
  EXPECT_TRUE(R.branch_ok);
  EXPECT_EQ(R.genus_X, 2);
  EXPECT_EQ(R.genus_Y, 5);
  EXPECT_EQ(R.X, P(Field::rationals(), {0, -5, 0, 4, 4, 1}));
}

TEST(Parshin, PartnerPointGivesSameBranchClass) {
  EtaleCover C(example_F());
  ParshinCover R = parshin_cover(C, AffinePoint{q(1), q(2)});
  ParshinCover S = parshin_cover(C, AffinePoint{q(1), q(2)}, true);
  EXPECT_EQ(S.Pt, R.Pt_partner);
  EXPECT_TRUE(S.divisor_ok);
  EXPECT_TRUE(S.closure_ok);
  EXPECT_TRUE(S.branch_ok);
  // the partner lies over iota(P): same x-coordinate on X
  EXPECT_EQ(S.P.x, R.P.x);
  EXPECT_EQ(S.P.y, -R.P.y);
}

TEST(Parshin, SwappedDivisorInvertsF) {
  EtaleCover C(example_F());
  AffinePoint Qt{q(1), q(2)};
  ParshinCover R = parshin_cover(C, Qt);
  FunctionOnW g = interpolate_f(C, C.i(Qt), C.i(R.Pt));
  EXPECT_TRUE(check_divisor(C, g, C.i(Qt), C.i(R.Pt)));
  // f * g has trivial divisor: y-part vanishes and the rest is a constant multiple of c_f c_g
  const Poly& F = C.W().F();
  Poly ypart = R.f.a * g.b + R.f.b * g.a;
  Poly rest = R.f.a * g.a + R.f.b * g.b * F;
  Poly den = R.f.c * g.c;
  EXPECT_TRUE(ypart.is_zero());
  auto [qt, r] = divmod(rest, den);
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(qt.degree(), 0);
  Elem lam2 = norm_constant(C, g);
  EXPECT_FALSE(lam2.is_zero());
}

TEST(Parshin, FindPtildeRequiresAntiInvariance) {
  EtaleCover C(example_F());
  const SplitHyperelliptic& W = C.W();
  MumfordClass D = mumford_add(W, mumford_anti(W, q(1), q(2)), MumfordClass{P(Field::rationals(), {-1, 1}), Poly(q(2)), 1, 1});
  EXPECT_THROW(find_Ptilde(C, D), DomainError);
}

TEST(Parshin, CoverOverFiniteField) {
  Field F13 = Field::prime(13);
  EtaleCover C(P(F13, {-5, 0, 0, 0, 4, 0, 4, 0, 1}));
  int ran = 0;
  for (std::uint64_t i = 1; i < 13; ++i) {
    Elem x0 = F13.from_index(i), fx = C.W().F().eval(x0);
    if (fx.is_zero() || !is_square(fx)) continue;
    try {
      ParshinCover R = parshin_cover(C, AffinePoint{x0, sqrt(fx)});
      EXPECT_TRUE(R.divisor_ok) << x0.to_string();
      EXPECT_TRUE(R.closure_ok) << x0.to_string();
      EXPECT_FALSE(R.lambda.is_zero());
      ++ran;
    } catch (const DomainError& e) {
      // irrational P~ over F13 is a legitimate outcome
      EXPECT_NE(std::string(e.what()).find("find_Ptilde"), std::string::npos) << e.what();
    }
  }
  EXPECT_GT(ran, 0);
}

TEST(Genus1, IdentitiesHold) {
  auto checks = genus1_identities();
  EXPECT_EQ(checks.size(), 10u);
  for (const auto& c : checks) EXPECT_TRUE(c.ok) << c.name;
}

TEST(Genus1, SampledPointsMapCurveToCurve) {
  Field F7 = Field::prime(7);
  Genus1Parshin G = genus1_parshin(F7.one());
  Field K = detail::quadratic_over(F7);
  Poly Z = detail::up(G.Z, K), Y = detail::up(G.Y, K), X = detail::up(G.X, K);
  int sampled = 0;
  for (std::uint64_t i = 1; i < K.size() && sampled < 20; ++i) {
    Elem s = K.from_index(i);
    if ((s * s + K.one()).is_zero()) continue;  // u = s + 1/s = 0
    Elem z = Z.eval(s);
    if (z.is_zero() || !is_square(z)) continue;
    AffinePoint pz{s, sqrt(z)};
    auto [py, px] = genus1_images(G, pz);
    EXPECT_EQ(py.y * py.y, Y.eval(py.x)) << s.to_string();
    EXPECT_EQ(px.y * px.y, X.eval(px.x)) << s.to_string();
    ++sampled;
  }
  EXPECT_EQ(sampled, 20);
}

TEST(Genus1, DegreeThreeFibers) {
  Field F7 = Field::prime(7);
  Poly u = Poly::x(F7);
  for (std::uint64_t i = 0; i < 7; ++i) {
    Elem x0 = F7.from_index(i);
    if (x0 == F7.from_int(2) || x0 == F7.from_int(-2)) continue;  // branch values of u^3 - 3u
    Poly fib = u.pow(3) - Poly(F7.from_int(3)) * u - Poly(x0);
    EXPECT_EQ(poly_gcd(fib, fib.derivative()).degree(), 0) << x0.to_string();
    int deg = 0;
    for (const auto& [h, e] : poly_factor(fib)) deg += e * h.degree();
    EXPECT_EQ(deg, 3);
  }
}

TEST(Genus1, RejectsSingularParameter) {
  Field F7 = Field::prime(7);
  EXPECT_THROW(genus1_parshin(F7.from_int(2)), DomainError);
  EXPECT_THROW(genus1_parshin(Field::prime(3).one()), DomainError);
}

TEST(Weierstrass, LinearOverF5) {
  Field F5 = Field::prime(5);
  WeierstrassParshin W = weierstrass_parshin(Poly::x(F5), F5.one());
  EXPECT_EQ(W.Y, P(F5, {0, 2, 0, 3, 0, 1}));
  EXPECT_EQ(poly_gcd(W.Y, W.Y.derivative()).degree(), 0);
  EXPECT_TRUE(W.identity_ok);
  EXPECT_TRUE(W.pullback_ok);
  EXPECT_EQ(W.genus_X, 1);
  EXPECT_EQ(W.genus_Y, 2);
  EXPECT_EQ(W.total_on_X, (PlaceSet{Place::infinity(F5)}));
  EXPECT_TRUE(W.partial_on_X.empty());
}

TEST(Weierstrass, GenusFiveOverQ) {
  Field Q = Field::rationals();
  WeierstrassParshin W = weierstrass_parshin(P(Q, {1, 0, 0, 1}), Q.one());
  EXPECT_EQ(W.genus_X, 2);
  EXPECT_EQ(W.genus_Y, 5);
  EXPECT_EQ(W.genus_Y, 3 * W.genus_X - 1);
  EXPECT_TRUE(W.identity_ok);
  EXPECT_TRUE(W.pullback_ok);
  EXPECT_EQ(W.total_on_X, (PlaceSet{Place::infinity(Q)}));
  EXPECT_TRUE(W.partial_on_X.empty());
}

TEST(Weierstrass, GeneralC) {
  Field F11 = Field::prime(11);
  for (long long c : {1, 2, 3, 5}) {
    SCOPED_TRACE(c);
    Elem cc = F11.from_int(c);
    Poly g, x = Poly::x(F11);
    for (long long k = 1;; ++k) {
      g = P(F11, {k, 1, 0, 1});
      Poly f = (x * x - Poly(F11.from_int(4) * cc * cc * cc)) * g;
      if (poly_gcd(f, f.derivative()).degree() == 0) break;
    }
    WeierstrassParshin W = weierstrass_parshin(g, cc);
    EXPECT_TRUE(W.identity_ok) << c;
    EXPECT_TRUE(W.pullback_ok) << c;
    EXPECT_EQ(W.genus_Y, 3 * W.genus_X - 1);
  }
  EXPECT_THROW(weierstrass_parshin(P(F11, {-4, 0, 1}), F11.one()), DomainError);
  EXPECT_THROW(weierstrass_parshin(P(F11, {-2, 1}), F11.one()), DomainError);
}
