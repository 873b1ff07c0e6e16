#include <gtest/gtest.h>

#include <random>

#include "topogame/pixleyroy.hpp"

using namespace topogame;

namespace {

struct MaskPair {
  Mask f, u;
};

// Open sets of a finite space straight from the base masks: all unions.
std::vector<Mask> opens_by_unions(const Space& s) {
  std::vector<Mask> out;
  for (std::uint64_t sel = 0; sel < bit(s.nbases()); ++sel) {
    Mask m = 0;
    for (auto b : mask_elements(sel)) m |= s.base_mask(b);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  return out;
}

// The union of the [F, U] meets every nonempty [G, V], by searching for a
// common finite set H.
bool union_dense_in_pr(std::uint64_t n, const std::vector<Mask>& opens, const std::vector<MaskPair>& fam) {
  for (auto v : opens)
    for (Mask g = 0; g < bit(n); ++g) {
      if (!subset_of(g, v)) continue;
      bool hit = false;
      for (const auto& p : fam)
        for (Mask h = 0; h < bit(n) && !hit; ++h)
          hit = subset_of(p.f, h) && subset_of(h, p.u) && subset_of(g, h) && subset_of(h, v);
      if (!hit) return false;
    }
  return true;
}

DoubleCover as_cover(const Space& s, const std::vector<MaskPair>& fam) {
  std::vector<DoublePair> pairs;
  for (const auto& p : fam) pairs.emplace_back(FiniteSet::from_mask(p.f), s.open_of_mask(p.u));
  return DoubleCover::of("test", std::move(pairs));
}

}  // namespace

TEST(PixleyRoy, FiniteHyperspaceShape) {
  for (const auto& s : small_spaces(3)) {
    const auto pr = pixley_roy(s);
    const auto opens = opens_by_unions(s);
    std::uint64_t expect_bases = 0;
    for (auto w : opens) expect_bases += bit(popcount(w));
    EXPECT_EQ(pr.space.n(), bit(s.n()));
    EXPECT_EQ(pr.space.nbases(), expect_bases) << s.label();
  }
}

TEST(PixleyRoy, BasicSetsAreIntervals) {
  const auto s = chain(3);
  const auto pr = pixley_roy(s);
  for (Base k = 0; k < pr.space.nbases(); ++k) {
    const auto [f, u] = pr.decode(k);
    const Mask w = s.open_mask(u);
    EXPECT_TRUE(subset_of(f.mask(), w));
    for (Point g = 0; g < pr.space.n(); ++g) EXPECT_EQ(pr.space.member(g, k), subset_of(f.mask(), g) && subset_of(g, w));
    EXPECT_EQ(pr.encode(f, u), k);
  }
  EXPECT_THROW(pr.encode(FiniteSet({0}), OpenSet::basic(2)), InvalidArgument);
}

TEST(PixleyRoy, HyperspaceOfTheRationals) {
  const auto s = rationals();
  const auto pr = pixley_roy(s);
  const FiniteSet f({0, 1});
  const OpenSet u({q::interval_index(q::Rational(-1), q::Rational(2))});
  const auto k = pr.encode(f, u);
  const auto [f2, u2] = pr.decode(k);
  EXPECT_EQ(f2, f);
  EXPECT_EQ(u2, u);
  EXPECT_TRUE(pr.space.member(f.index(), k));
  EXPECT_FALSE(pr.space.member(FiniteSet({0}).index(), k));
  EXPECT_THROW(pr.encode(FiniteSet({2}), OpenSet::basic(0)), InvalidArgument);
}

TEST(PixleyRoy, FamilyConversionsRoundTrip) {
  const auto s = sierpinski();
  const auto pr = pixley_roy(s);
  const auto dc = as_cover(s, {{0, 3}, {1, 3}, {2, 2}});
  const auto fam = doublecover_to_hyperspace_family(pr, dc);
  const auto back = hyperspace_family_to_doublecover(pr, fam);
  for (std::uint64_t n = 0; n < 3; ++n) EXPECT_EQ(back.at(n), dc.at(n));
  const auto bad = CoverFamily::of("bad", {OpenSet({0, 1})});
  EXPECT_THROW(hyperspace_family_to_doublecover(pr, bad).at(0), InvalidArgument);
}

TEST(PixleyRoy, DoubleCoverIffDenseUnion) {
  std::mt19937_64 rng(7);
  std::uint64_t agree = 0;
  for (const auto& s : small_spaces(3)) {
    const auto opens = opens_by_unions(s);
    std::vector<MaskPair> all;
    for (auto u : opens)
      for (Mask f = 0; f < bit(s.n()); ++f)
        if (subset_of(f, u)) all.push_back({f, u});
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<MaskPair> fam;
      const auto k = 1 + rng() % 4;
      for (std::uint64_t i = 0; i < k; ++i) fam.push_back(all[rng() % all.size()]);
      const bool dense = union_dense_in_pr(s.n(), opens, fam);
      EXPECT_EQ(is_double_cover_at_horizon(s, as_cover(s, fam), 64, 64), tri(dense)) << s.label();
      ++agree;
    }
  }
  EXPECT_GT(agree, 100u);
}

TEST(PixleyRoy, AllPairsIsADoubleCover) {
  for (const auto& s : small_spaces(3)) EXPECT_EQ(is_double_cover_at_horizon(s, all_pairs_double_cover(s), 64, 4096), Tri::True);
  EXPECT_EQ(is_double_cover_at_horizon(rationals(), all_pairs_double_cover(rationals()), 6, 1 << 16), Tri::True);
}

TEST(PixleyRoy, MissingPairIsReported) {
  const auto s = discrete(2);
  // ({0}, X) has no F inside V = {1}
  EXPECT_EQ(is_double_cover_at_horizon(s, as_cover(s, {{1, 3}}), 64, 64), Tri::False);
  EXPECT_EQ(is_double_cover_at_horizon(s, as_cover(s, {{0, 3}}), 64, 64), Tri::True);
}

TEST(PixleyRoy, OmegaCoversEmbed) {
  const auto s = discrete(3);
  const auto oc = CoverFamily::of("whole", {OpenSet({0, 1, 2})});
  const auto dc = embed_omega_cover(oc);
  EXPECT_TRUE(dc.at(0).first.empty());
  EXPECT_EQ(dc.at(0).second, oc.at(0));
  EXPECT_EQ(is_double_cover_at_horizon(s, dc, 64, 64), Tri::True);
}

TEST(PixleyRoy, OmegaSelectionContainsItsFiniteSet) {
  const auto s = discrete(3);
  const CoverSequence covers = [](std::uint64_t n) {
    std::vector<OpenSet> members;
    for (std::uint64_t m = 0; m < 8; ++m) members.push_back(OpenSet::from_index((m + n) % 8));
    return CoverFamily::of("rot", members);
  };
  const auto sel = omega_selector_countable(s, covers);
  for (std::uint64_t n = 0; n < 24; ++n) EXPECT_TRUE(s.contains(sel.at(n), FiniteSet::from_index(n % 8)));
}

TEST(PixleyRoy, DiagonalPartition) {
  EXPECT_EQ(union_base(0), OpenSet({0}));
  EXPECT_EQ(union_base(2), OpenSet({0, 1}));
  for (std::uint64_t k = 0; k < 10; ++k)
    for (std::uint64_t j = 0; j < 10; ++j) EXPECT_EQ(partition_owner(diag(k, j)), k);
}

TEST(PixleyRoy, SecondCountableSelectorStaysInsideItsBase) {
  const auto s = discrete(3);
  const DoubleCoverSequence dcs = [&](std::uint64_t) { return all_pairs_double_cover(s); };
  const auto sel = second_countable_double_selector(s, dcs);
  for (std::uint64_t n : {0, 1, 2, 5, 9, 14, 20, 27}) {
    const auto [f, u] = sel.at(n);
    const auto bk = union_base(partition_owner(n));
    EXPECT_TRUE(subset_of(s.open_mask(u), s.open_mask(bk))) << n;
    EXPECT_TRUE(s.contains(u, f));
  }
}
