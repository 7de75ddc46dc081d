#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cubica/factor.hpp"
#include "cubica/finite_sqrt.hpp"
#include "cubica/ratfunc.hpp"
#include "cubica/residue_field.hpp"

using namespace cubica;

namespace {

Poly P(Field F, std::vector<long long> c) { return Poly::from_ints(F, c); }

Poly random_poly(Field F, int deg, std::mt19937_64& rng) {
  std::vector<Elem> c;
  for (int i = 0; i <= deg; ++i) c.push_back(F.from_index(rng() % F.size()));
  return Poly(F, c);
}

}  // namespace

TEST(Field, ParseAndBasics) {
  Field F5 = Field::parse("5");
  EXPECT_EQ(F5.size(), 5u);
  EXPECT_EQ((F5.from_int(3) * F5.from_int(4)).c0(), 2u);
  EXPECT_EQ(F5.from_int(2).inv(), F5.from_int(3));
  EXPECT_THROW(Field::parse("3"), DomainError);
  EXPECT_THROW(Field::parse("6"), DomainError);
  Field F25 = Field::parse("25");
  EXPECT_EQ(F25.size(), 25u);
  Elem t = F25.gen();
  EXPECT_EQ(t * t, F25.from_int(2));  // t^2 = 2
  Field F4 = Field::parse("4");
  Elem w = F4.gen();
  EXPECT_EQ(w * w, w + F4.one());
  EXPECT_THROW(Field::quadratic(5, 0, 1), DomainError);  // t^2 - 1 splits
}

TEST(Field, QuadraticInverseAndNorm) {
  Field F = Field::parse("49");
  for (std::uint64_t i = 1; i < F.size(); ++i) {
    Elem a = F.from_index(i);
    EXPECT_TRUE((a * a.inv()).is_one());
    EXPECT_EQ(a.norm().c1(), 0u);
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ(a.pow(7), a.conj());
  }
}

TEST(Field, ElementStrings) {
  Field F = Field::parse("25");
  for (std::uint64_t i = 0; i < F.size(); ++i) {
    Elem a = F.from_index(i);
    EXPECT_EQ(F.parse_elem(a.to_string()), a) << a.to_string();
  }
  Field Q = Field::rationals();
  EXPECT_EQ(Q.parse_elem("-6/4").to_string(), "-3/2");
  EXPECT_EQ(Field::prime(7).parse_elem("1/2"), Field::prime(7).from_int(4));
}

TEST(PolyGcd, Examples) {
  Field F = Field::prime(5);
  EXPECT_EQ(poly_gcd(P(F, {-1, 0, 1}), P(F, {-1, 1})), P(F, {-1, 1}));
  EXPECT_EQ(poly_gcd(P(F, {2, 0, 1}), P(F, {0, 1})), P(F, {1}));
  EXPECT_EQ(poly_gcd(Poly(F), P(F, {2, 4})), P(F, {3, 1}));
  EXPECT_THROW(poly_gcd(P(F, {1}), P(Field::prime(7), {1})), DomainError);
}

TEST(PolyGcd, DividesBothAndBezout) {
  std::mt19937_64 rng(11);
  Field F = Field::prime(7);
  for (int it = 0; it < 50; ++it) {
    Poly c = random_poly(F, 2, rng);
    Poly a = random_poly(F, 4, rng) * c, b = random_poly(F, 3, rng) * c;
    if (a.is_zero() || b.is_zero()) continue;
    Poly g = poly_gcd(a, b);
    EXPECT_TRUE(g.divides(a));
    EXPECT_TRUE(g.divides(b));
    if (!c.is_zero()) {
      EXPECT_TRUE(c.divides(g));  // any common divisor divides the gcd
    }
    auto [g2, s, t] = poly_ext_gcd(a, b);
    EXPECT_EQ(g2, g);
    EXPECT_EQ(s * a + t * b, g);
  }
}

TEST(PolyFactor, Examples) {
  Field F = Field::prime(5);
  auto f1 = poly_factor(P(F, {-1, 0, 1}));
  ASSERT_EQ(f1.size(), 2u);
  EXPECT_EQ(f1[0].p, P(F, {1, 1}));  // x+1 sorts before x-1 = x+4
  EXPECT_EQ(f1[1].p, P(F, {-1, 1}));
  auto f2 = poly_factor(P(F, {2, 0, 1}));
  ASSERT_EQ(f2.size(), 1u);
  EXPECT_EQ(f2[0].p, P(F, {2, 0, 1}));
  EXPECT_THROW(poly_factor(Poly(F)), DomainError);
  EXPECT_THROW(poly_factor(P(Field::rationals(), {1, 1})), DomainError);
}

// Brute force over monic divisors of degree <= 2 decides irreducibility of a
// quartic, independently of the factoring code path.
TEST(PolyFactor, QuarticMod7AgainstBruteForce) {
  Field F = Field::prime(7);
  Poly f = P(F, {-5, 0, 4, 4, 1});
  bool has_small_divisor = false;
  for (int a = 0; a < 7; ++a) {
    if (P(F, {a, 1}).divides(f)) has_small_divisor = true;
    for (int b = 0; b < 7; ++b)
      if (P(F, {b, a, 1}).divides(f)) has_small_divisor = true;
  }
  auto fs = poly_factor(f);
  EXPECT_FALSE(has_small_divisor);
  ASSERT_EQ(fs.size(), 1u);
  EXPECT_EQ(fs[0].p, f);
  EXPECT_EQ(fs[0].mult, 1);
}

TEST(PolyFactor, ReassemblesRandomInputs) {
  std::mt19937_64 rng(7);
  for (std::uint64_t q : {5ull, 7ull, 2ull, 4ull, 25ull}) {
    Field F = Field::parse(std::to_string(q));
    for (int it = 0; it < 40; ++it) {
      Poly f = random_poly(F, 1 + static_cast<int>(rng() % 8), rng);
      if (it % 4 == 0) f = f * f * random_poly(F, 2, rng);
      if (f.is_zero() || f.degree() < 1) continue;
      auto fs = poly_factor(f);
      EXPECT_EQ(factor_product(f.lc(), fs), f) << F.name() << " " << f.to_string();
      for (const auto& fa : fs) {
        EXPECT_TRUE(fa.p.is_monic());
        EXPECT_TRUE(is_irreducible(fa.p)) << fa.p.to_string();
      }
    }
  }
}

TEST(PolyFactor, CharTwoPowers) {
  Field F = Field::prime(2);
  Poly f = P(F, {1, 1, 1}).pow(4) * P(F, {0, 1}).pow(2);
  auto fs = poly_factor(f);
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0].mult, 2);
  EXPECT_EQ(fs[1].mult, 4);
}

TEST(Sqrt, Examples) {
  Field F7 = Field::prime(7);
  EXPECT_TRUE(is_square(F7.from_int(2)));
  EXPECT_EQ(sqrt(F7.from_int(2)), F7.from_int(3));
  EXPECT_FALSE(is_square(F7.from_int(3)));
  EXPECT_THROW(sqrt(F7.from_int(3)), DomainError);
  for (const char* q : {"2", "4", "5", "25", "13"}) {
    Field F = Field::parse(q);
    EXPECT_EQ(sqrt(F.one()), F.one());
  }
  EXPECT_EQ(sqrt(Field::rationals().parse_elem("9/4")).to_string(), "3/2");
}

// Euler criterion against the exhaustive table of squares for every
// supported q <= 49.
TEST(Sqrt, EulerMatchesExhaustive) {
  for (std::uint64_t q : {2, 4, 5, 7, 11, 13, 17, 19, 23, 25, 29, 31, 37, 41, 43, 47, 49}) {
    Field F = Field::parse(std::to_string(q));
    std::set<std::uint64_t> squares;
    for (std::uint64_t i = 0; i < q; ++i) {
      Elem a = F.from_index(i);
      squares.insert((a * a).index());
    }
    for (std::uint64_t i = 0; i < q; ++i) {
      Elem a = F.from_index(i);
      bool sq = squares.count(i) > 0;
      EXPECT_EQ(is_square(a), sq) << q << " " << a.to_string();
      if (sq) {
        EXPECT_EQ(sqrt(a) * sqrt(a), a);
      }
    }
  }
}

TEST(ResidueField, Examples) {
  Field F = Field::prime(5);
  ResidueField R(P(F, {2, 0, 1}));
  EXPECT_EQ(R.order(), 25);
  EXPECT_TRUE(R.is_square(Poly(F.from_int(2))));
  Poly s = R.sqrt(Poly(F.from_int(2)));
  EXPECT_EQ(R.mul(s, s), Poly(F.from_int(2)));
  // xbar^12 decides the square class of xbar
  Poly x = R.gen();
  EXPECT_EQ(R.is_square(x), R.pow(x, 12).is_one());
  ResidueField L(P(F, {-1, 1}));
  EXPECT_EQ(L.order(), 5);
  EXPECT_EQ(L.reduce(P(F, {3, 2, 1})), Poly(F.from_int(1)));
  EXPECT_THROW(ResidueField(P(F, {-1, 0, 1})), DomainError);
}

TEST(ResidueField, SqrtOverQuadraticBase) {
  Field F = Field::parse("25");
  Poly m = poly_factor(P(F, {1, 1, 0, 1}))[0].p;
  if (m.degree() < 2) m = P(F, {2, 0, 1}) * Poly(F.one());
  ResidueField R(m, false);
  for (unsigned long i = 1; i < 60; ++i) {
    Poly a = R.nth(i);
    if (R.is_square(a)) {
      EXPECT_EQ(R.mul(R.sqrt(a), R.sqrt(a)), a);
    }
  }
}

TEST(RatFunc, NormalizationAndArithmetic) {
  Field F = Field::prime(7);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 50; ++it) {
    Poly a = random_poly(F, 3, rng), b = random_poly(F, 2, rng), c = random_poly(F, 3, rng), d = random_poly(F, 2, rng);
    if (a.is_zero() || b.is_zero() || c.is_zero() || d.is_zero()) continue;
    RatFunc x(a, b), y(c, d);
    EXPECT_EQ(RatFunc(x.num(), x.den()), x);  // idempotent
    EXPECT_TRUE(x.den().is_monic());
    EXPECT_TRUE(poly_gcd(x.num(), x.den()).is_one());
    RatFunc s = x + y, p = x * y;
    EXPECT_EQ(s.num() * b * d, (a * d + c * b) * s.den());
    EXPECT_EQ(p.num() * b * d, a * c * p.den());
    EXPECT_EQ((x / y) * y, x);
  }
  EXPECT_THROW(RatFunc(P(F, {1}), Poly(F)), DomainError);
}

TEST(IrreducibleQ, Certificates) {
  Field Q = Field::rationals();
  EXPECT_TRUE(is_irreducible(P(Q, {2, 0, 1})));
  EXPECT_FALSE(is_irreducible(P(Q, {-4, 0, 1})));
  EXPECT_TRUE(is_irreducible(P(Q, {-2, 0, 0, 1})));
  EXPECT_FALSE(is_irreducible(P(Q, {-8, 0, 0, 27})));
  EXPECT_FALSE(is_irreducible(P(Q, {6, -11, 6, -1})));
  EXPECT_TRUE(is_irreducible(P(Q, {-5, 0, 4, 4, 1})));
  EXPECT_FALSE(is_irreducible(P(Q, {1, 0, 2, 0, 1})));  // (x^2+1)^2
  EXPECT_FALSE(is_irreducible(P(Q, {4, 0, 0, 0, 1})));  // Sophie Germain
}
