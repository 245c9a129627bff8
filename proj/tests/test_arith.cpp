#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "shimura/arith.hpp"

using namespace shimura;

TEST(Factorize, SmallValues) {
  EXPECT_EQ(factorize(66), (Factorization{{2, 1}, {3, 1}, {11, 1}}));
  EXPECT_EQ(factorize(9), (Factorization{{3, 2}}));
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_THROW(factorize(0), DomainError);
  EXPECT_THROW(factorize(-5), DomainError);
}

TEST(Factorize, RoundTripRandom) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<Int> dist(1, 2'000'000);
  for (int i = 0; i < 2000; ++i) {
    const Int n = dist(rng);
    const auto f = factorize(n);
    EXPECT_EQ(reconstruct(f), n);
    Int prev = 1;
    for (const auto& pp : f) {
      EXPECT_TRUE(oracle::is_prime(pp.prime)) << n;
      EXPECT_GT(pp.prime, prev);
      EXPECT_GE(pp.exponent, 1);
      prev = pp.prime;
    }
    const auto ref = oracle::trial_factor(n);
    ASSERT_EQ(f.size(), ref.size());
  }
}

TEST(Primes, AgreeWithTrialDivision) {
  for (Int n = -3; n < 5000; ++n) EXPECT_EQ(is_prime(n), oracle::is_prime(n)) << n;
}

TEST(Squarefree, Basics) {
  EXPECT_TRUE(is_squarefree(1));
  EXPECT_TRUE(is_squarefree(210));
  EXPECT_FALSE(is_squarefree(12));
  EXPECT_FALSE(is_squarefree(25));
  EXPECT_EQ(valuation(48, 2), 4);
  EXPECT_EQ(valuation(48, 5), 0);
  EXPECT_EQ(omega(1), 0);
  EXPECT_EQ(omega(60), 3);
}

TEST(Squares, IsqrtExact) {
  for (Int n = 0; n < 20000; ++n) {
    const Int r = isqrt(n);
    EXPECT_LE(r * r, n);
    EXPECT_GT((r + 1) * (r + 1), n);
    EXPECT_EQ(is_square(n), r * r == n);
  }
  EXPECT_FALSE(is_square(-4));
}

TEST(Kronecker, Examples) {
  EXPECT_EQ(kronecker(-4, 2), 0);
  EXPECT_EQ(kronecker(-4, 3), -1);
  EXPECT_EQ(kronecker(-3, 13), 1);
  EXPECT_EQ(kronecker(5, 1), 1);
  EXPECT_EQ(kronecker(1, 0), 1);
  EXPECT_EQ(kronecker(2, 0), 0);
}

TEST(Kronecker, MatchesResidueOracle) {
  for (Int a = -60; a <= 60; ++a)
    for (Int n = -40; n <= 300; ++n)
      ASSERT_EQ(kronecker(a, n), oracle::kronecker(a, n)) << "(" << a << "/" << n << ")";
}

TEST(Kronecker, MultiplicativeInTopRandom) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> a_dist(-500, 500);
  std::uniform_int_distribution<Int> n_dist(1, 2000);
  for (int i = 0; i < 3000; ++i) {
    const Int a = a_dist(rng), b = a_dist(rng), n = n_dist(rng);
    EXPECT_EQ(kronecker(a * b, n), kronecker(a, n) * kronecker(b, n));
  }
}

TEST(HallDivisors, Examples) {
  EXPECT_EQ(hall_divisors(12), (std::vector<Int>{1, 3, 4, 12}));
  EXPECT_EQ(hall_divisors(66), (std::vector<Int>{1, 2, 3, 6, 11, 22, 33, 66}));
  EXPECT_EQ(hall_divisors(1), (std::vector<Int>{1}));
}

TEST(HallDivisors, CountAndCoprimeRandom) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Int> dist(1, 100000);
  for (int i = 0; i < 500; ++i) {
    const Int n = dist(rng);
    const auto hs = hall_divisors(n);
    EXPECT_EQ(static_cast<Int>(hs.size()), ipow(2, omega(n)));
    for (Int m : hs) {
      EXPECT_EQ(n % m, 0);
      EXPECT_EQ(oracle::gcd(m, n / m), 1);
      EXPECT_TRUE(is_hall_divisor(m, n));
    }
    Int count = 0;
    for (Int m = 1; m <= n && count < 200000; ++m)
      if (n % m == 0 && oracle::gcd(m, n / m) == 1) ++count;
    EXPECT_EQ(count, static_cast<Int>(hs.size()));
  }
}

TEST(MultValues, Examples) {
  EXPECT_EQ(mult_values(6), (MultValues{2, 12, 2}));
  EXPECT_EQ(mult_values(9), (MultValues{6, 12, 1}));
  EXPECT_EQ(mult_values(10), (MultValues{4, 18, 2}));
  EXPECT_EQ(psi_p(3, 9), 12);
  EXPECT_EQ(psi_p(3, 2), 1);
  EXPECT_EQ(psi_p(2, 8), 12);
}

TEST(MultValues, PhiMatchesCountingOracle) {
  for (Int n = 1; n < 1500; ++n) EXPECT_EQ(mult_values(n).phi, oracle::euler_phi(n)) << n;
}

TEST(MultValues, MultiplicativeRandom) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Int> dist(1, 3000);
  for (int i = 0; i < 2000; ++i) {
    const Int a = dist(rng), b = dist(rng);
    if (oracle::gcd(a, b) != 1) continue;
    const auto ma = mult_values(a), mb = mult_values(b), mab = mult_values(a * b);
    EXPECT_EQ(mab.phi, ma.phi * mb.phi);
    EXPECT_EQ(mab.psi, ma.psi * mb.psi);
    EXPECT_EQ(mab.omega, ma.omega + mb.omega);
  }
}

TEST(MultValues, PsiIsIndexOfGamma0) {
  // psi(n) = n prod_{p | n} (1 + 1/p)
  for (Int n = 1; n < 2000; ++n) {
    Int num = n, den = 1;
    for (const auto& [p, e] : oracle::trial_factor(n)) {
      num *= p + 1;
      den *= p;
    }
    EXPECT_EQ(mult_values(n).psi, num / den);
  }
}
