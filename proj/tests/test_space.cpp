#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "topogame/spaces.hpp"

using namespace topogame;
using q::Rational;

namespace {

// Up-closed masks of a relation, by brute force over all subsets.
std::vector<Mask> up_closed(std::uint64_t n, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& rel) {
  std::vector<Mask> out;
  for (Mask m = 0; m < bit(n); ++m) {
    bool ok = true;
    for (auto [i, j] : rel)
      if ((m >> i & 1) && !(m >> j & 1)) ok = false;
    if (ok) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST(Pairing, DiagWalksTheDiagonals) {
  std::uint64_t n = 0;
  for (std::uint64_t s = 0; s < 60; ++s)
    for (std::uint64_t k = 0; k <= s; ++k) {
      EXPECT_EQ(diag(k, s - k), n);
      EXPECT_EQ(unpair(n), std::make_pair(k, s - k));
      ++n;
    }
}

TEST(Pairing, UnpairLargeValues) {
  for (std::uint64_t k : {0ull, 7ull, 123456ull, 3000000000ull})
    for (std::uint64_t j : {0ull, 1ull, 99999ull, 1000000000ull}) EXPECT_EQ(unpair(diag(k, j)), std::make_pair(k, j));
}

TEST(Pairing, Zigzag) {
  const std::vector<std::int64_t> expect = {0, -1, 1, -2, 2, -3, 3};
  for (std::uint64_t n = 0; n < expect.size(); ++n) EXPECT_EQ(zigzag(n), expect[n]);
  for (std::int64_t z = -500; z <= 500; ++z) EXPECT_EQ(zigzag(unzigzag(z)), z);
}

TEST(Masks, ElementsRoundTrip) {
  EXPECT_EQ(mask_elements(0b10110), (std::vector<std::uint64_t>{1, 2, 4}));
  EXPECT_EQ(elements_mask({1, 2, 4}), Mask{0b10110});
  EXPECT_EQ(full_mask(64), ~Mask{0});
}

TEST(Rationals, EnumerationMatchesDiagonalListing) {
  std::vector<Rational> expect = {Rational(0)};
  for (std::int64_t s = 2; expect.size() < 20000; ++s)
    for (std::int64_t a = 1; a < s; ++a)
      if (std::gcd(a, s) == 1) {
        expect.emplace_back(a, s - a);
        expect.emplace_back(-a, s - a);
      }
  for (std::uint64_t n = 0; n < expect.size(); ++n) {
    ASSERT_EQ(q::rational_at(n), expect[n]) << n;
    ASSERT_EQ(q::rational_index(expect[n]), n) << n;
  }
}

TEST(Rationals, FarIndicesRoundTrip) {
  for (std::uint64_t n : {123456789ull, 9876543210ull, 100000000000ull})
    EXPECT_EQ(q::rational_index(q::rational_at(n)), n);
  EXPECT_THROW(q::rational_index(Rational(1, 1 << 21)), DimensionError);
}

TEST(Rationals, DyadicsAreABijection) {
  std::set<Rational> seen;
  for (std::uint64_t i = 0; i < 800; ++i) {
    const auto x = q::dyadic_at(i);
    EXPECT_TRUE(q::is_dyadic(x));
    EXPECT_TRUE(seen.insert(x).second);
    EXPECT_EQ(q::dyadic_index(x), i);
  }
  for (std::int64_t a = -40; a <= 40; ++a)
    for (std::int64_t d : {1, 2, 4, 8, 16}) {
      const Rational x(a, d);
      EXPECT_EQ(q::dyadic_at(q::dyadic_index(x)), x);
    }
  EXPECT_THROW(q::dyadic_index(Rational(1, 3)), InvalidArgument);
  EXPECT_THROW(q::dyadic_at(diag(41, 0)), DimensionError);
}

TEST(Rationals, PositiveDyadicsAndIntervals) {
  for (std::uint64_t j = 0; j < 2000; ++j) {
    const auto w = q::positive_dyadic_at(j);
    EXPECT_GT(w, Rational(0));
    EXPECT_EQ(q::positive_dyadic_index(w), j);
  }
  for (std::uint64_t b = 0; b < 2000; ++b) {
    const auto iv = q::interval_at(b);
    EXPECT_LT(iv.lo, iv.hi);
    EXPECT_EQ(q::interval_index(iv.lo, iv.hi), b);
  }
}

TEST(Rationals, IntervalWithin) {
  const q::Interval unit{Rational(0), Rational(1)};
  EXPECT_TRUE(q::interval_within(unit, {{Rational(-1), Rational(1, 2)}, {Rational(1, 4), Rational(2)}}));
  EXPECT_FALSE(q::interval_within(unit, {{Rational(0), Rational(1, 2)}, {Rational(1, 2), Rational(1)}}));
  EXPECT_FALSE(q::interval_within(unit, {{Rational(1, 8), Rational(1)}}));
  EXPECT_TRUE(q::interval_within(unit, {unit}));
}

TEST(Rationals, FloorAndCeil) {
  EXPECT_EQ(q::floor(Rational(7, 2)), Rational(3));
  EXPECT_EQ(q::floor(Rational(-7, 2)), Rational(-4));
  EXPECT_EQ(q::floor(Rational(-4)), Rational(-4));
  EXPECT_EQ(q::ceil(Rational(-7, 2)), Rational(-3));
}

TEST(FiniteSets, ColexIndex) {
  EXPECT_EQ(FiniteSet({2, 0}).index(), 5u);
  EXPECT_EQ(FiniteSet::from_index(6).elements(), (std::vector<Point>{1, 2}));
  EXPECT_TRUE(FiniteSet({1}).subset_of(FiniteSet({0, 1})));
  EXPECT_FALSE(FiniteSet({2}).subset_of(FiniteSet({0, 1})));
  EXPECT_EQ(OpenSet({3, 1, 3}).parts(), (std::vector<Base>{1, 3}));
}

TEST(FiniteSpaces, PreorderCounts) {
  // number of preorders and partial orders on 1..4 labelled points
  const std::vector<std::size_t> preorders = {1, 4, 29, 355}, posets = {1, 3, 19, 219};
  for (std::uint64_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(all_preorders(n).size(), preorders[n - 1]);
    EXPECT_EQ(all_preorders(n, true).size(), posets[n - 1]);
  }
}

TEST(FiniteSpaces, OpenSetsAreUpSets) {
  for (const auto& o : all_preorders(3)) {
    const auto s = finite_space(o, preorder_label(o));
    EXPECT_EQ(open_lattice(s), up_closed(3, o.pairs)) << s.label();
  }
}

TEST(FiniteSpaces, Builtins) {
  EXPECT_EQ(open_lattice(sierpinski()), (std::vector<Mask>{0, 2, 3}));
  EXPECT_EQ(open_lattice(chain(3)), (std::vector<Mask>{0, 4, 6, 7}));
  EXPECT_EQ(open_lattice(indiscrete(3)), (std::vector<Mask>{0, 7}));
  EXPECT_EQ(open_lattice(discrete(3)).size(), 8u);
  EXPECT_THROW(finite_space({3, {{0, 1}, {1, 2}}}), InvalidArgument);
}

TEST(FiniteSpaces, MeetsAndWithin) {
  const auto s = chain(3);
  EXPECT_EQ(s.meet_witness(0, 2), Point{2});
  EXPECT_EQ(s.meets(1, 2), Tri::True);
  EXPECT_EQ(s.within(2, OpenSet::basic(1)), Tri::True);
  EXPECT_EQ(s.within(0, OpenSet::basic(1)), Tri::False);
  EXPECT_EQ(s.open_of_mask(6).parts(), (std::vector<Base>{1, 2}));
  EXPECT_THROW(s.open_of_mask(1), InvalidArgument);
  const auto d = discrete(2);
  EXPECT_EQ(d.meets(0, 1), Tri::False);
}

TEST(RationalSpace, MembershipIsIntervalContainment) {
  const auto s = rationals();
  EXPECT_FALSE(s.finite());
  for (Base b = 0; b < 300; ++b) {
    const auto iv = q::interval_at(b);
    EXPECT_TRUE(iv.contains(q::rational_at(s.witness(b)))) << b;
    for (Point p = 0; p < 300; ++p) ASSERT_EQ(s.member(p, b), iv.contains(q::rational_at(p))) << p << " " << b;
  }
}

TEST(RationalSpace, MeetsAndWithinAgreeWithIntervals) {
  const auto s = rationals();
  for (Base a = 0; a < 60; ++a)
    for (Base b = 0; b < 60; ++b) {
      const auto ia = q::interval_at(a), ib = q::interval_at(b);
      const bool overlap = std::max(ia.lo, ib.lo) < std::min(ia.hi, ib.hi);
      EXPECT_EQ(s.meets(a, b), tri(overlap));
      if (auto w = s.meet_witness(a, b)) {
        EXPECT_TRUE(ia.contains(q::rational_at(*w)));
        EXPECT_TRUE(ib.contains(q::rational_at(*w)));
      }
      const bool inside = ib.lo <= ia.lo && ia.hi <= ib.hi;
      EXPECT_EQ(s.within(a, OpenSet::basic(b)), tri(inside));
    }
}

TEST(RationalSpace, NeighbourhoodsContainThePoint) {
  const auto s = rationals();
  for (Point p = 0; p < 200; ++p)
    for (std::uint64_t seed = 0; seed < 4; ++seed) EXPECT_TRUE(s.member(p, s.neighborhood(p, seed)));
}

TEST(Products, RectanglesOfFiniteFactors) {
  const auto x = chain(2), y = discrete(2);
  const auto p = product(x, y);
  const auto pts = product_points(x, y), bs = product_bases(x, y);
  ASSERT_EQ(p.n(), 4u);
  ASSERT_EQ(p.nbases(), 4u);
  for (Point z = 0; z < 4; ++z)
    for (Base b = 0; b < 4; ++b) {
      const auto [px, py] = pts.decode(z);
      const auto [bx, by] = bs.decode(b);
      EXPECT_EQ(p.member(z, b), x.member(px, bx) && y.member(py, by));
    }
  // product of the Sierpinski space with itself: 6 open sets
  EXPECT_EQ(open_lattice(product(sierpinski(), sierpinski())).size(), 6u);
}

TEST(Products, RationalsSquaredMembership) {
  const auto s = rationals();
  const auto p = product(s, s);
  const auto pts = product_points(s, s), bs = product_bases(s, s);
  for (Point z = 0; z < 200; ++z)
    for (Base b = 0; b < 50; ++b) {
      const auto [px, py] = pts.decode(z);
      const auto [bx, by] = bs.decode(b);
      EXPECT_EQ(p.member(z, b), s.member(px, bx) && s.member(py, by));
    }
}

TEST(Double, TopCopyIsIsolated) {
  const auto x = chain(2);
  const auto d = alexandroff_double(x);
  ASSERT_EQ(d.n(), 4u);
  EXPECT_EQ(d.nbases(), 2u + 2u * 4u);
  for (Point p = 0; p < 2; ++p) {
    const auto b = double_singleton(x, p);
    EXPECT_EQ(d.base_mask(b), bit(2 * p + 1));
  }
  // neighbourhood of (0,0) from base element 0 of the chain, removing nothing
  EXPECT_EQ(d.base_mask(double_basic(x, 0, {})), Mask{0b1111});
  EXPECT_EQ(d.base_mask(double_basic(x, 0, FiniteSet({1}))), Mask{0b0111});
  // on a finite factor the whole top copy can be removed
  EXPECT_EQ(d.base_mask(double_basic(x, 0, FiniteSet({0, 1}))), Mask{0b0101});
  EXPECT_EQ(open_lattice(d).size(), 12u);
}

TEST(Subspaces, FiniteAndOpen) {
  const auto s = chain(3);
  const auto sub = finite_subspace(s, 0b101);
  EXPECT_EQ(sub.n(), 2u);
  EXPECT_EQ(open_lattice(sub), (std::vector<Mask>{0, 2, 3}));
  const auto o = open_subspace(s, OpenSet::basic(1));
  EXPECT_EQ(o.label(), "opensub:chain:3,[1]");
  EXPECT_EQ(o.n(), 2u);
  EXPECT_EQ(open_lattice(o), (std::vector<Mask>{0, 2, 3}));
}

TEST(Subspaces, DenseSubspaceOfRationals) {
  const auto s = rationals();
  const auto d = dense_subspace(s, dyadic_points());
  for (Base b = 0; b < 40; ++b) {
    const auto w = d.witness(b);
    EXPECT_TRUE(d.member(w, b));
  }
}
