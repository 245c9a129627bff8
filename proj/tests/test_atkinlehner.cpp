#include <gtest/gtest.h>

#include <random>

#include "shimura/atkinlehner.hpp"
#include "shimura/fixtures.hpp"
#include "shimura/pipeline.hpp"

using namespace shimura;

TEST(ALGroup, ProductLaw) {
  EXPECT_EQ(al_product(2, 6), 3);
  EXPECT_EQ(al_product(6, 6), 1);
  EXPECT_EQ(al_product(14, 17), 238);
}

TEST(ALGroup, SubgroupValidation) {
  const CurveLabel l(34, 7);
  EXPECT_NO_THROW(ALSubgroup(l, {1, 14, 17, 238}));
  EXPECT_THROW(ALSubgroup(l, {14, 17, 238}), DomainError);
  EXPECT_THROW(ALSubgroup(l, {1, 14, 17}), DomainError);
  EXPECT_THROW(ALSubgroup(l, {1, 4}), DomainError);
  EXPECT_EQ(ALSubgroup::generated_by(l, {14, 17}).elements(), (std::vector<Int>{1, 14, 17, 238}));
  EXPECT_EQ(ALSubgroup::full(l).order(), 8u);
}

TEST(ALGroup, SubgroupCounts) {
  // Subspaces of F_2^r: 1, 2, 5, 16, 67 for r = 0..4.
  EXPECT_EQ(all_subgroups(CurveLabel(6, 1)).size(), 5u);
  EXPECT_EQ(all_subgroups(CurveLabel(34, 7)).size(), 16u);
  EXPECT_EQ(all_subgroups(CurveLabel(6, 35)).size(), 67u);
  for (const auto& h : all_subgroups(CurveLabel(6, 35))) {
    const auto n = h.order();
    EXPECT_TRUE(n == 1 || n == 2 || n == 4 || n == 8 || n == 16);
    EXPECT_TRUE(h.is_subgroup_of(ALSubgroup::full(CurveLabel(6, 35))));
  }
}

TEST(FixedPoints, Orders) {
  auto discs = [](Int m) {
    std::vector<Int> out;
    for (const auto& r : fixed_point_orders(m)) out.push_back(r.discriminant());
    return out;
  };
  EXPECT_EQ(discs(2), (std::vector<Int>{-4, -8}));
  EXPECT_EQ(discs(7), (std::vector<Int>{-7, -28}));
  EXPECT_EQ(discs(6), (std::vector<Int>{-24}));
  EXPECT_THROW(fixed_point_orders(1), DomainError);
}

TEST(FixedPoints, Counts) {
  EXPECT_EQ(fixed_point_count(CurveLabel(6, 11), 6), 4);
  EXPECT_EQ(fixed_point_count(CurveLabel(6, 11), 66), 8);
  EXPECT_EQ(fixed_point_count(CurveLabel(6, 23), 138), 8);
  EXPECT_EQ(fricke_count(CurveLabel(6, 11)), 8);
  EXPECT_EQ(fricke_count(CurveLabel(10, 1)), 2);
  EXPECT_EQ(fricke_count(CurveLabel(6, 23)), 8);
  EXPECT_THROW(fixed_point_count(CurveLabel(6, 11), 4), DomainError);
  EXPECT_THROW(fixed_point_count(CurveLabel(6, 11), 1), DomainError);
}

TEST(QuotientGenus, Examples) {
  EXPECT_EQ(quotient_genus(CurveLabel(6, 23), 138), 1);
  EXPECT_EQ(quotient_genus(CurveLabel(6, 25), 2), 2);
  EXPECT_EQ(quotient_genus(CurveLabel(10, 9), 90), 1);
}

TEST(QuotientGenus, Subgroups) {
  EXPECT_EQ(subgroup_quotient_genus(ALSubgroup(CurveLabel(34, 7), {1, 14, 17, 238})), 0);
  EXPECT_EQ(subgroup_quotient_genus(ALSubgroup::full(CurveLabel(214, 1))), 1);
  // The order-two quotient by w_107: genus 8, w_107 fixes 6 points, so
  // 2 * 8 - 2 = 2 (2 g - 2) + 6 gives g = 3.
  const CurveLabel l(214, 1);
  EXPECT_EQ(genus(l), 8);
  EXPECT_EQ(fixed_point_count(l, 107), 6);
  EXPECT_EQ(subgroup_quotient_genus(ALSubgroup(l, {1, 107})), 3);
}

TEST(QuotientGenus, FrickeAlwaysHasFixedPoints) {
  const auto fx = load_fixtures();
  for (const auto& l : bielliptic_candidates(fx)) EXPECT_GT(fricke_count(l), 0) << l.to_string();
}

TEST(QuotientGenus, IntegralOverAllCandidatesAndHallDivisors) {
  const auto fx = load_fixtures();
  std::size_t checked = 0;
  for (const auto& l : bielliptic_candidates(fx))
    for (Int m : hall_divisors(l.DN())) {
      if (m == 1) continue;
      ASSERT_NO_THROW(quotient_genus(l, m)) << l.to_string() << " m=" << m;
      ++checked;
    }
  for (const auto& l : trigonal_candidates())
    for (Int m : hall_divisors(l.DN()))
      if (m != 1) {
        ASSERT_NO_THROW(quotient_genus(l, m)) << l.to_string() << " m=" << m;
      }
  EXPECT_GT(checked, 1000u);
}

TEST(QuotientGenus, RiemannHurwitzAgreesOnOrderTwo) {
  const auto fx = load_fixtures();
  for (const auto& l : bielliptic_candidates(fx))
    for (Int m : hall_divisors(l.DN())) {
      if (m == 1) continue;
      ASSERT_EQ(subgroup_quotient_genus(ALSubgroup(l, {1, m})), quotient_genus(l, m))
          << l.to_string() << " m=" << m;
    }
}

TEST(QuotientGenus, SubgroupGenusMonotone) {
  // g(X/H') <= g(X/H) for H <= H'.
  std::mt19937_64 rng(99);
  const auto fx = load_fixtures();
  const auto cands = bielliptic_candidates(fx);
  std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
  for (int i = 0; i < 40; ++i) {
    const auto& l = cands[pick(rng)];
    const auto subs = all_subgroups(l);
    for (const auto& a : subs)
      for (const auto& b : subs)
        if (a.is_subgroup_of(b)) {
          ASSERT_LE(subgroup_quotient_genus(b), subgroup_quotient_genus(a)) << l.to_string();
        }
  }
}
