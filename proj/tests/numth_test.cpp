#include <random>

#include <gtest/gtest.h>

#include "gkspec/numth.hpp"
#include "oracles.hpp"

using gkspec::Factorization;
using gkspec::u128;
using gkspec::ZsigmondyException;

namespace {

u128 parse(const char* s) { return gkspec::parse_u128(s); }

}  // namespace

TEST(Int128, ParseAndPrintRoundTrip) {
  for (const char* s : {"0", "1", "18446744073709551616", "170141183460469231731687303715884105727",
                        "340282366920938463463374607431768211455"})
    EXPECT_EQ(gkspec::to_string(parse(s)), s);
  EXPECT_THROW(parse("340282366920938463463374607431768211456"), gkspec::OverflowError);
  EXPECT_THROW(parse(""), gkspec::InvalidInput);
  EXPECT_THROW(parse("12a"), gkspec::InvalidInput);
  EXPECT_THROW(parse("-3"), gkspec::InvalidInput);
}

TEST(Int128, CheckedArithmetic) {
  EXPECT_FALSE(gkspec::checked_mul(u128{1} << 64, u128{1} << 64));
  EXPECT_EQ(*gkspec::checked_pow(2, 127), u128{1} << 127);
  EXPECT_FALSE(gkspec::checked_pow(2, 128));
  EXPECT_EQ(gkspec::lcm(4, 6), 12);
  EXPECT_THROW(gkspec::lcm(u128{1} << 100, (u128{1} << 100) - 1), gkspec::OverflowError);
}

TEST(Factorize, SmallValues) {
  EXPECT_TRUE(gkspec::factorize(1).factors.empty());
  EXPECT_EQ(gkspec::factorize(29120).factors, (std::map<u128, unsigned>{{2, 6}, {5, 1}, {7, 1}, {13, 1}}));
  EXPECT_EQ(gkspec::factorize(1025).factors, (std::map<u128, unsigned>{{5, 2}, {41, 1}}));
  EXPECT_THROW(gkspec::factorize(0), gkspec::RangeError);
}

TEST(Factorize, AgreesWithTrialDivisionBelowTwoPow32) {
  std::mt19937_64 rng(20);
  for (int i = 0; i < 3000; ++i) {
    const std::uint64_t n = 1 + rng() % (std::uint64_t{1} << 32);
    std::map<u128, unsigned> expect;
    for (auto [p, e] : oracle::trial_factor(n)) expect[p] = e;
    EXPECT_EQ(gkspec::factorize(n).factors, expect) << n;
  }
}

TEST(Factorize, ReconstructsLargeInputs) {
  // q^4 - 1 and q^2 + 1 for q = 2^alpha, the numbers the Suzuki formulas factor.
  for (unsigned alpha = 1; alpha <= 31; alpha += 2) {
    const u128 q = u128{1} << alpha;
    for (u128 n : {q * q * q * q - 1, q * q + 1, q - 1}) {
      const Factorization f = gkspec::factorize(n);
      EXPECT_EQ(f.value(), n) << alpha;
      for (auto [p, e] : f.factors) EXPECT_TRUE(gkspec::is_prime(p));
    }
  }
  const u128 semiprime = parse("1000000000000000000117") * 1000000007;
  EXPECT_EQ(gkspec::factorize(semiprime).factors,
            (std::map<u128, unsigned>{{1000000007, 1}, {parse("1000000000000000000117"), 1}}));
}

TEST(Factorize, MersenneAndBeyondTwoPow96) {
  // 2^127 - 1 is prime; 2^126 - 1 has 19 prime factors counted with multiplicity.
  EXPECT_TRUE(gkspec::is_prime((u128{1} << 127) - 1));
  const Factorization f = gkspec::factorize((u128{1} << 126) - 1);
  EXPECT_EQ(f.value(), (u128{1} << 126) - 1);
  EXPECT_EQ(f.factors.at(3), 3u);
  EXPECT_THROW(gkspec::factorize(u128{1} << 127), gkspec::RangeError);
}

TEST(Factorize, TinyBudgetSignalsBudgetExceeded) {
  gkspec::FactorOptions opts;
  opts.trial_bound = 100;
  opts.rho_budget = 4;
  EXPECT_THROW(gkspec::factorize(u128{1000000007} * 998244353, opts), gkspec::BudgetExceeded);
}

TEST(IsPrime, MatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(gkspec::is_prime(n), oracle::trial_is_prime(n)) << n;
  // Strong pseudoprimes to base 2 and Carmichael numbers.
  for (std::uint64_t n : {2047ull, 3277ull, 4033ull, 561ull, 1105ull, 3215031751ull, 3825123056546413051ull})
    EXPECT_FALSE(gkspec::is_prime(n)) << n;
}

TEST(PrimeSet, Examples) {
  EXPECT_TRUE(gkspec::prime_set(1).empty());
  EXPECT_EQ(gkspec::prime_set(20), (std::vector<u128>{2, 5}));
  EXPECT_EQ(gkspec::prime_set(29120), (std::vector<u128>{2, 5, 7, 13}));
}

TEST(MultiplicativeOrder, Examples) {
  EXPECT_EQ(gkspec::multiplicative_order(2, 7), 3u);
  EXPECT_EQ(gkspec::multiplicative_order(2, 41), 20u);
  EXPECT_EQ(gkspec::multiplicative_order(2, 3), 2u);
  EXPECT_THROW(gkspec::multiplicative_order(6, 3), gkspec::InvalidInput);
}

TEST(MultiplicativeOrder, MatchesStepping) {
  for (std::uint64_t r = 3; r < 3000; ++r) {
    if (!oracle::trial_is_prime(r)) continue;
    for (std::uint64_t q : {2ull, 3ull, 10ull, 49ull})
      if (q % r) {
        ASSERT_EQ(gkspec::multiplicative_order(q, r), oracle::order_mod(q, r)) << q << " " << r;
      }
  }
}

TEST(PrimitivePrimeDivisor, Examples) {
  const auto a = gkspec::primitive_prime_divisor(2, 6);
  ASSERT_FALSE(a.has_prime());
  EXPECT_EQ(a.exception(), ZsigmondyException::TwoSix);
  const auto b = gkspec::primitive_prime_divisor(7, 2);
  ASSERT_FALSE(b.has_prime());
  EXPECT_EQ(b.exception(), ZsigmondyException::MersenneSquare);
  EXPECT_EQ(gkspec::primitive_prime_divisor(2, 20).prime(), 41);
  EXPECT_EQ(gkspec::primitive_prime_divisor(2, 4).prime(), 5);
  EXPECT_EQ(gkspec::primitive_prime_divisor(32, 4).prime(), 5);  // 32 = 2 mod 5, of order 4
}

TEST(PrimitivePrimeDivisor, CompositeMersenneBaseHasNone) {
  // 15^2 - 1 = 2^5 * 7 and 7 | 15 - 1, although 15 is not prime.
  const auto r = gkspec::primitive_prime_divisor(15, 2);
  ASSERT_FALSE(r.has_prime());
  EXPECT_EQ(r.exception(), ZsigmondyException::CompositeMersenneSquare);
}

TEST(PrimitivePrimeDivisor, ExceptionsAreExactlyTheListedCasesForPrimePowerBases) {
  for (std::uint64_t q = 2; q <= 50; ++q) {
    if (oracle::trial_factor(q).size() != 1) continue;
    for (unsigned n = 2; n <= 20; ++n) {
      const bool listed = (q == 2 && n == 6) || (n == 2 && gkspec::is_mersenne_prime(q));
      EXPECT_EQ(!gkspec::primitive_prime_divisor(q, n).has_prime(), listed) << q << "^" << n;
      EXPECT_EQ(oracle::has_primitive_divisor(q, n), !listed) << q << "^" << n;
    }
  }
}

TEST(PrimitivePrimeDivisor, AgreesWithCyclotomicOracleAndIsLeast) {
  for (std::uint64_t q = 2; q <= 50; ++q)
    for (unsigned n = 2; n <= 20; ++n) {
      const auto r = gkspec::primitive_prime_divisor(q, n);
      ASSERT_EQ(r.has_prime(), oracle::has_primitive_divisor(q, n)) << q << "^" << n;
      if (!r.has_prime()) continue;
      const u128 p = r.prime();
      EXPECT_EQ((*gkspec::checked_pow(q, n) - 1) % p, 0u);
      EXPECT_EQ(gkspec::multiplicative_order(q, p), n);
      // Least: no smaller prime has order n.
      if (p < 100000)
        for (std::uint64_t s = 2; s < p; ++s)
          if (oracle::trial_is_prime(s) && q % s != 0) {
            ASSERT_NE(oracle::order_mod(q, s), n) << q << "^" << n;
          }
    }
}

TEST(PrimitivePrimeDivisor, RejectsSmallArguments) {
  EXPECT_THROW(gkspec::primitive_prime_divisor(1, 5), gkspec::RangeError);
  EXPECT_THROW(gkspec::primitive_prime_divisor(5, 1), gkspec::RangeError);
}
