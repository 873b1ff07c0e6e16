#include <gtest/gtest.h>

#include "topogame/finsolve.hpp"

using namespace topogame;

namespace {

// Minimal nonempty open sets, from the lattice.
std::vector<Mask> atoms(const std::vector<Mask>& opens) {
  std::vector<Mask> out;
  for (auto u : opens) {
    if (!u) continue;
    bool minimal = true;
    for (auto v : opens)
      if (v && v != u && subset_of(v, u)) minimal = false;
    if (minimal) out.push_back(u);
  }
  return out;
}

// Smallest number of points whose minimal neighbourhoods together contain
// every atom, by brute force over point subsets.
std::uint64_t min_pointing(const Space& s) {
  const auto at = atoms(open_lattice(s));
  std::uint64_t best = s.n();
  for (Mask pts = 1; pts < bit(s.n()); ++pts) {
    Mask reach = 0;
    for (auto x : mask_elements(pts)) reach |= s.base_mask(x);
    bool ok = true;
    for (auto a : at) ok = ok && subset_of(a, reach);
    if (ok) best = std::min<std::uint64_t>(best, popcount(pts));
  }
  return best;
}

}  // namespace

TEST(FinTopology, InteriorAndClosure) {
  const auto t = FinTopology::of(chain(3));
  EXPECT_EQ(interior(t, 0b011), 0u);
  EXPECT_EQ(interior(t, 0b110), 0b110u);
  EXPECT_EQ(closure(t, 0b100), 0b111u);
  EXPECT_EQ(closure(t, 0b001), 0b001u);
  EXPECT_TRUE(is_dense(t, 0b100));
  EXPECT_FALSE(is_dense(t, 0b011));
  EXPECT_THROW(FinTopology::from_opens(3, {0b001, 0b010}), InvalidArgument);
  EXPECT_NO_THROW(FinTopology::from_opens(3, {0b001, 0b010, 0b011}));
}

TEST(FinTopology, SpecializationRecoversThePreorder) {
  for (const auto& o : all_preorders(3)) {
    const auto s = finite_space(o);
    const auto back = specialization(FinTopology::of(s));
    EXPECT_EQ(back.up_sets(), o.up_sets());
  }
}

TEST(Solver, SPlusBoundIsTheNumberOfAtoms) {
  for (const auto& s : small_spaces(3)) {
    const auto r = solve_game(s, GameKind::splus());
    EXPECT_EQ(r.winner, Player::II) << s.label();
    ASSERT_TRUE(r.bound);
    EXPECT_EQ(*r.bound, atoms(open_lattice(s)).size()) << s.label();
    EXPECT_TRUE(r.certified);
  }
}

TEST(Solver, OpenPickingBoundIsAMinimumPointing) {
  for (const auto& s : small_spaces(3)) {
    const auto r = solve_game(s, GameKind::open_picking());
    EXPECT_EQ(r.winner, Player::I) << s.label();
    ASSERT_TRUE(r.bound);
    EXPECT_EQ(*r.bound, min_pointing(s)) << s.label();
    EXPECT_TRUE(r.certified);
  }
}

TEST(Solver, DiscreteSelectionNeedsEveryPoint) {
  for (std::uint64_t n = 1; n <= 4; ++n) {
    const auto r = solve_game(discrete(n), GameKind::sel_cover(FamilyClass::Cover, FamilyClass::Cover));
    EXPECT_EQ(r.winner, Player::II);
    EXPECT_EQ(r.bound, n);
    const auto f = solve_game(discrete(n), GameKind::sel_cover_fin(FamilyClass::Cover, FamilyClass::Cover));
    EXPECT_EQ(f.bound, 1u);
  }
}

TEST(Solver, RankStrategiesSurviveVerification) {
  for (const auto& s : small_spaces(2))
    for (const auto& k : {GameKind::sel_cover(), GameKind::dgame(), GameKind::point_open(), GameKind::splus_fin()}) {
      const auto r = solve_game(s, k);
      EXPECT_TRUE(r.certified) << s.label() << " " << k.name();
      auto g = std::make_shared<const FinGame>(s, k);
      EXPECT_TRUE(verify_strategy(*g, rank_strategy(g, r.rank, r.winner), r.winner).ok);
    }
}

TEST(Verifier, FindsALosingLine) {
  const auto s = discrete(2);
  const FinGame g(s, GameKind::splus());
  const Strategy lowest{"lowest", [](const History& h) { return Move::point(h.back().open.parts().front()); }, {}};
  const auto v = verify_strategy(g, lowest, Player::II);
  EXPECT_FALSE(v.ok);
  ASSERT_TRUE(v.counterexample);
  // replaying the counterexample never makes the accumulated set dense
  EXPECT_FALSE(evaluate(GameKind::splus(), s, *v.counterexample, 16).met());
}

TEST(FinGame, MovesAndResponses) {
  const FinGame g(chain(2), GameKind::splus());
  // dense open sets of the two-point chain: {1} and {0,1}; {1} alone is minimal
  EXPECT_EQ(g.i_moves(false).size(), 2u);
  EXPECT_EQ(g.i_moves(true).size(), 1u);
  const auto mi = g.to_move(g.i_moves(false).back());
  EXPECT_EQ(g.responses(mi, true).size(), 2u);
  EXPECT_TRUE(g.win(0b10));
  EXPECT_FALSE(g.win(0b01));
}

TEST(Memoryless, TablesCountAndCap) {
  const FinGame g(discrete(2), GameKind::splus());
  // states: the non-dense accumulated sets {}, {0}, {1}; one dense open set
  EXPECT_EQ(enumerate_memoryless_tables(g, Player::I).size(), 1u);
  const FinGame h(chain(3), GameKind::open_picking());
  // states: the four sets missing the top point; three points to choose from
  EXPECT_EQ(enumerate_memoryless_tables(h, Player::I).size(), 81u);
  const FinGame big(discrete(4), GameKind::open_picking());
  try {
    enumerate_memoryless_tables(big, Player::I, 10);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    // 15 non-dense states, 4 points each
    EXPECT_EQ(e.count, 1073741824u);
  }
}
