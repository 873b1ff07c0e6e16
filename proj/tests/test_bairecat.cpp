#include <gtest/gtest.h>

#include <random>

#include "topogame/bairecat.hpp"

using namespace topogame;
using q::Rational;

namespace {

q::Interval cell(std::uint64_t n, std::uint64_t k) {
  const Rational a(zigzag(k)), scale(std::int64_t{1} << n);
  return {a / scale, (a + 1) / scale};
}

// Some g below the bound agrees with every vector somewhere.
bool covering_by_brute_force(const std::vector<std::vector<std::uint64_t>>& vs, const std::vector<std::uint64_t>& bound) {
  std::uint64_t total = 1;
  for (auto b : bound) total *= b;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::uint64_t> g;
    for (std::uint64_t c = code, i = 0; i < bound.size(); ++i) {
      g.push_back(c % bound[i]);
      c /= bound[i];
    }
    bool all = true;
    for (const auto& v : vs) {
      bool agree = false;
      for (std::size_t n = 0; n < v.size(); ++n) agree = agree || v[n] == g[n];
      all = all && agree;
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

TEST(Sequences, Extends) {
  EXPECT_TRUE(extends({1, 2, 3}, {1, 2}));
  EXPECT_TRUE(extends({1}, {}));
  EXPECT_FALSE(extends({1, 3}, {1, 2}));
  EXPECT_FALSE(extends({1}, {1, 2}));
}

TEST(DyadicTable, CellsAreDyadicIntervals) {
  const auto t = dyadic_cover_table(6);
  for (std::uint64_t n = 0; n < 6; ++n)
    for (std::uint64_t k = 0; k < 20; ++k) {
      const auto iv = q::interval_at(t.at(n, k).parts().front());
      EXPECT_EQ(iv.lo, cell(n, k).lo);
      EXPECT_EQ(iv.hi, cell(n, k).hi);
    }
}

TEST(DyadicTable, MembershipInNAlpha) {
  const auto s = rationals();
  const auto t = dyadic_cover_table(4);
  const OpenSet b = OpenSet::basic(q::interval_index(Rational(1, 4), Rational(1, 2)));
  const q::Interval bi{Rational(1, 4), Rational(1, 2)};
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    SeqPrefix f;
    for (int n = 0; n < 4; ++n) f.push_back(rng() % 12);
    bool misses = true;
    for (std::uint64_t n = 0; n < 4; ++n) misses = misses && !q::overlap(bi, cell(n, f[n]));
    EXPECT_EQ(in_N_alpha(s, b, t, f), tri(misses));
  }
  EXPECT_THROW(in_N_alpha(s, b, t, {0}), DimensionError);
}

TEST(DyadicTable, WitnessMeetsThePiBaseElement) {
  const auto s = rationals();
  const auto t = dyadic_cover_table(12);
  for (Base b = 0; b < 200; b += 7) {
    const auto bi = q::interval_at(b);
    SeqPrefix sigma;
    for (std::uint64_t k = 0; k < 12; ++k) {
      const auto tau = nowhere_dense_witness(s, OpenSet::basic(b), t, sigma);
      ASSERT_EQ(tau.size(), k + 1);
      EXPECT_TRUE(extends(tau, sigma));
      EXPECT_TRUE(q::overlap(bi, cell(k, tau.back()))) << b << " row " << k;
      sigma = tau;
    }
    EXPECT_THROW(nowhere_dense_witness(s, OpenSet::basic(b), t, sigma), DimensionError);
  }
}

TEST(DyadicTable, DiagonalSelectionMeetsEveryElement) {
  const auto s = rationals();
  std::vector<OpenSet> pibase;
  for (Base b = 0; b < 10; ++b) pibase.push_back(OpenSet::basic(b));
  const auto t = dyadic_cover_table(14);
  const auto f = diagonal_selector(s, pibase, t);
  ASSERT_EQ(f.size(), 14u);
  const auto sel = selection(t, f);
  for (Base b = 0; b < 10; ++b) EXPECT_TRUE(q::overlap(q::interval_at(b), cell(b, f[b])));
  EXPECT_EQ(sel.size(), 14u);
  EXPECT_THROW(diagonal_selector(s, pibase, dyadic_cover_table(5)), DimensionError);
}

TEST(PropertyP, SmallExamples) {
  const VectorFamily two{{{0, 0}, {1, 1}}, {}};
  EXPECT_FALSE(has_property_P(two, {2, 2}));
  const VectorFamily three{{{0, 0}, {1, 1}, {2, 2}}, {}};
  EXPECT_TRUE(has_property_P(three, {3, 3}));
  EXPECT_THROW(has_property_P(three, {2, 3}), InvalidArgument);
  EXPECT_THROW(has_property_P(three, {3}), DimensionError);
  EXPECT_EQ(sentinel_bound({&two, &three}), (std::vector<std::uint64_t>{3, 3}));
}

TEST(PropertyP, ComplementsCoveringSelections) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t len = 1 + rng() % 3, count = 1 + rng() % 4;
    VectorFamily fam;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<std::uint64_t> v;
      for (std::size_t n = 0; n < len; ++n) v.push_back(rng() % 3);
      fam.vectors.push_back(v);
    }
    const auto bound = sentinel_bound({&fam});
    const bool cover = covering_by_brute_force(fam.vectors, bound);
    EXPECT_EQ(covering_selection_exists(discrete_cover_family(fam), count, bound), cover);
    EXPECT_EQ(has_property_P(fam, bound), !cover);
  }
}

TEST(PropertyP, Padding) {
  const auto out = pad_family({{{5, 1, 1}, 1}, {{0, 1, 0}, 0}}, {3, 2, 2});
  const std::vector<std::vector<std::uint64_t>> expect = {{0, 1, 1}, {1, 1, 1}, {2, 1, 1}, {0, 1, 0}};
  EXPECT_EQ(out.vectors, expect);
  EXPECT_EQ(out.bound, (std::vector<std::uint64_t>{3, 2, 2}));
  EXPECT_THROW(pad_family({{{0, 5}, 1}}, {2, 2}), InvalidArgument);
  EXPECT_THROW(pad_family({{{0, 0}, 3}}, {2, 2}), DimensionError);
}

TEST(DiscreteCovers, MembersAreLevelSets) {
  const VectorFamily fam{{{0, 1}, {1, 0}, {0, 0}}, {}};
  const auto t = discrete_cover_family(fam);
  EXPECT_EQ(t.rows, 2u);
  EXPECT_EQ(t.width(0), Count(2));
  EXPECT_EQ(t.at(0, 0).parts(), (std::vector<Base>{0, 2}));
  EXPECT_EQ(t.at(1, 1).parts(), (std::vector<Base>{0}));
  EXPECT_TRUE(covering_selection_exists(t, 3, {2, 2}));
}
