#include <gtest/gtest.h>

#include <random>

#include "sptok/algebra.hpp"
#include "sptok/error.hpp"

namespace sptok {
namespace {

LaurentPoly X(int k, int e = 1) { return LaurentPoly::variable(VarId::x(k), e); }
LaurentPoly Y(int k, int e = 1) { return LaurentPoly::variable(VarId::y(k), e); }
LaurentPoly Q(int e = 1) { return LaurentPoly::variable(VarId::q(), e); }

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 4), coef(-3, 3), exp(-2, 2), var(0, 4);
  const VarId vars[] = {VarId::x(1), VarId::x(2), VarId::y(1), VarId::t(), VarId::q()};
  LaurentPoly p;
  for (int i = terms(rng); i > 0; --i) {
    Monomial m;
    for (int j = 0; j < 2; ++j) m *= Monomial(vars[var(rng)], exp(rng));
    p.add_term(m, coef(rng));
  }
  return p;
}

TEST(LaurentPoly, AddCancelsToEmpty) {
  LaurentPoly p = X(1) + (-X(1));
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.size(), 0u);
}

TEST(LaurentPoly, AddBarredPair) {
  LaurentPoly p = (X(1) + Y(1)) + (X(1, -1) + Y(1, -1));
  EXPECT_EQ(p.size(), 4u);
  EXPECT_EQ(p, X(1) + Y(1) + X(1, -1) + Y(1, -1));
}

TEST(LaurentPoly, AddMergesCoefficients) {
  EXPECT_EQ((LaurentPoly(1) + Q()) + Q(), LaurentPoly(1) + LaurentPoly(Monomial(VarId::q()), 2));
}

TEST(LaurentPoly, StaircaseProductRankOne) {
  LaurentPoly p = (X(1) + Y(1)) * (LaurentPoly(1) + X(1, -1) * Y(1, -1));
  EXPECT_EQ(p, X(1) + Y(1) + Y(1, -1) + X(1, -1));
}

TEST(LaurentPoly, MultiplicativeIdentity) {
  LaurentPoly p = X(1) * Y(2, -3) + 5;
  EXPECT_EQ(p * LaurentPoly(1), p);
}

TEST(LaurentPoly, QProductRankOne) {
  LaurentPoly p = (X(1) + Q() * X(1)) * (LaurentPoly(1) + Q(-1) * X(1, -2));
  EXPECT_EQ(p, (LaurentPoly(1) + Q()) * X(1) + (LaurentPoly(1) + Q(-1)) * X(1, -1));
}

TEST(LaurentPoly, EqualityIsCanonical) {
  EXPECT_EQ(X(1) + Y(1), Y(1) + X(1));
  LaurentPoly p = X(1);
  p.add_term(Monomial(VarId::y(1)), 0);
  EXPECT_EQ(p, X(1));
  EXPECT_EQ(p.size(), 1u);
  EXPECT_FALSE(X(1) == X(1, -1));
}

TEST(LaurentPoly, PowAndCoefficients) {
  LaurentPoly p = (LaurentPoly(1) + Q()).pow(7);
  EXPECT_EQ(p.size(), 8u);
  EXPECT_EQ(p.coeff(Monomial(VarId::q(), 3)), 35);
  EXPECT_EQ(LaurentPoly(3).pow(0), LaurentPoly(1));
}

TEST(LaurentPoly, CoefficientsDoNotOverflow) {
  LaurentPoly p = (LaurentPoly(1) + X(1)).pow(80);
  mpz_class c = p.coeff(Monomial(VarId::x(1), 40));
  mpz_class expect;
  mpz_bin_uiui(expect.get_mpz_t(), 80, 40);
  EXPECT_EQ(c, expect);
  EXPECT_GT(mpz_sizeinbase(c.get_mpz_t(), 2), 64u);
}

TEST(LaurentPoly, SubstituteMonomials) {
  // y1 -> q x1
  std::map<VarId, Monomial> img{{VarId::y(1), Monomial(VarId::q()) * Monomial(VarId::x(1))}};
  EXPECT_EQ((X(1) + Y(1)).substitute(img), (LaurentPoly(1) + Q()) * X(1));
  EXPECT_EQ((X(1, -1) + Y(1, -1)).substitute(img), (LaurentPoly(1) + Q(-1)) * X(1, -1));
}

TEST(LaurentPoly, VariablesInCanonicalOrder) {
  LaurentPoly p = Q() * X(2) + Y(1, -1) + LaurentPoly::variable(VarId::t(), 2);
  std::vector<VarId> want{VarId::x(2), VarId::y(1), VarId::t(), VarId::q()};
  EXPECT_EQ(p.variables(), want);
}

TEST(LaurentPoly, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
  }
}

TEST(PolyText, CanonicalForm) {
  LaurentPoly p = LaurentPoly(Monomial(VarId::x(1)) * Monomial(VarId::y(2), -3) * Monomial(VarId::q(), 2), 5) -
                  LaurentPoly(2);
  EXPECT_EQ(to_string(p), "-2 + 5 * x1 * y2^-3 * q^2");
  EXPECT_EQ(to_string(LaurentPoly()), "0");
}

TEST(PolyText, PrettyForm) {
  EXPECT_EQ(to_pretty_string(X(1) + Y(1, -1)), "y1^-1 + x1");
  EXPECT_EQ(to_pretty_string(LaurentPoly(Monomial(VarId::x(2)), -3)), "-3*x2");
}

TEST(PolyText, RoundTripRandom) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    LaurentPoly p = random_poly(rng) * random_poly(rng);
    ASSERT_EQ(parse_poly(to_string(p)), p);
    ASSERT_EQ(parse_poly(to_pretty_string(p)), p);
  }
}

TEST(PolyText, ParseErrors) {
  for (const char* bad : {"", "x", "x1^", "3 +", "z2", "x1 ** x2"}) {
    try {
      parse_poly(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::ParseError) << bad;
    }
  }
}

TEST(EvalMod, InverseExample) {
  EXPECT_EQ(eval_mod(X(1) + X(1, -1), {{VarId::x(1), 2}}, 7), 6u);
}

TEST(EvalMod, ZeroPolynomial) { EXPECT_EQ(eval_mod(LaurentPoly(), {{VarId::x(1), 3}}, 7), 0u); }

TEST(EvalMod, NegativeCoefficients) {
  EXPECT_EQ(eval_mod(LaurentPoly(-1) - X(1), {{VarId::x(1), 2}}, 7), 4u);
}

TEST(EvalMod, Errors) {
  try {
    eval_mod(X(1) * Y(1), {{VarId::x(1), 2}}, 7);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnassignedVariable);
  }
  try {
    eval_mod(X(1, -1), {{VarId::x(1), 14}}, 7);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonInvertiblePoint);
  }
  // a positive power of a zero residue is fine
  EXPECT_EQ(eval_mod(X(1, 2) + 1, {{VarId::x(1), 7}}, 7), 1u);
}

TEST(EvalMod, IdentityAgreesAtRandomPoints) {
  LaurentPoly p = (X(1) + Y(1)) * (LaurentPoly(1) + X(1, -1) * Y(1, -1));
  LaurentPoly p2 = X(1) + Y(1) + X(1, -1) + Y(1, -1);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> d(1, PrimeField::kDefaultPrime - 1);
  for (int i = 0; i < 50; ++i) {
    Assignment a{{VarId::x(1), d(rng)}, {VarId::y(1), d(rng)}};
    ASSERT_EQ(eval_mod(p, a, PrimeField::kDefaultPrime), eval_mod(p2, a, PrimeField::kDefaultPrime));
  }
}

TEST(EvalMod, IsRingHomomorphism) {
  std::mt19937_64 rng(5);
  for (std::uint64_t prime : {PrimeField::kDefaultPrime, std::uint64_t{1000003}}) {
    std::uniform_int_distribution<std::uint64_t> d(1, prime - 1);
    PrimeField f(prime);
    for (int i = 0; i < 300; ++i) {
      LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
      Assignment pt{{VarId::x(1), d(rng)}, {VarId::x(2), d(rng)}, {VarId::y(1), d(rng)},
                    {VarId::t(), d(rng)},  {VarId::q(), d(rng)}};
      const auto ea = eval_mod(a, pt, prime), eb = eval_mod(b, pt, prime), ec = eval_mod(c, pt, prime);
      ASSERT_EQ(eval_mod(a * b + c, pt, prime), f.add(f.mul(ea, eb), ec));
    }
  }
}

TEST(PrimeField, MersenneFoldMatchesPlainReduction) {
  PrimeField m;
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::uint64_t> d(0, m.modulus() - 1);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t a = d(rng), b = d(rng);
    ASSERT_EQ(m.mul(a, b), (a * b) % m.modulus());
  }
  EXPECT_EQ(m.mul(m.inv(12345), 12345), 1u);
}

TEST(PrimeField, RejectsComposite) {
  EXPECT_TRUE(is_prime(2147483647ULL));
  EXPECT_FALSE(is_prime(2147483649ULL));
  EXPECT_THROW(PrimeField(15), Error);
}

}  // namespace
}  // namespace sptok
