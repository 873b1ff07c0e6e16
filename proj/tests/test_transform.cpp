#include <gtest/gtest.h>

#include "topogame/transform.hpp"

using namespace topogame;

namespace {

Strategy solver(const Space& s, const GameKind& k, Player p) {
  const auto r = solve_game(s, k, false);
  return rank_strategy(std::make_shared<const FinGame>(s, k), r.rank, p);
}

}  // namespace

TEST(Duality, PairsNameTheirGames) {
  EXPECT_EQ(pointing_game(DualPair::PoOd), GameKind::open_picking());
  EXPECT_EQ(selection_game(DualPair::PoOd), GameKind::sel_cover(FamilyClass::Cover, FamilyClass::DenseUnion));
  EXPECT_EQ(pointing_game(DualPair::OpDd), GameKind::point_open());
  EXPECT_EQ(selection_game(DualPair::OpDd), GameKind::dgame());
  EXPECT_EQ(parse_pair("op-dd"), DualPair::OpDd);
  EXPECT_THROW(parse_pair("xx"), InvalidArgument);
}

TEST(Duality, ForwardOnFiniteSpacesWins) {
  for (auto pair : {DualPair::PoOd, DualPair::OpDd})
    for (const auto& s : small_spaces(3)) {
      const auto tau = solver(s, pointing_game(pair), pointing_game(pair).target());
      const auto sigma = dual_forward(pair, s, tau);
      const FinGame g(s, selection_game(pair));
      EXPECT_TRUE(verify_strategy(g, sigma, Player::II).ok) << s.label() << " " << to_string(pair);
    }
}

TEST(Duality, ForwardOnTheRationalsSelectsWitnesses) {
  const auto s = rationals();
  const auto sigma = dual_forward(DualPair::PoOd, s, witness_pointing_strategy(s));
  const auto k = selection_game(DualPair::PoOd);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto t = play(k, s, random_cover_adversary(s, seed), sigma, 10);
    for (std::uint64_t n = 0; n < 10; ++n) {
      const auto& [mi, mii] = t.innings[n];
      EXPECT_TRUE(s.contains(mi.family.at(mii.index), s.witness(n)));
    }
    const auto v = evaluate(k, s, t, 10);
    EXPECT_TRUE(v.met());
    EXPECT_LE(v.inning, 10u);
  }
}

TEST(Duality, ClaimPointHasOnlyAnsweredNeighbourhoods) {
  for (const auto& s : small_spaces(3)) {
    const auto k = selection_game(DualPair::PoOd);
    const auto sigma = solver(s, k, Player::II);
    const auto c = claim(DualPair::PoOd, sigma, s, {});
    const auto x = c.move.index;
    // recompute sigma's answers over every cover
    const FinGame g(s, k);
    std::vector<Mask> answers;
    for (const auto& f : g.i_moves(false)) answers.push_back(f.members[sigma.next({g.to_move(f)}).index]);
    for (auto v : open_lattice(s))
      if (v >> x & 1) EXPECT_NE(std::find(answers.begin(), answers.end(), v), answers.end()) << s.label();
  }
}

TEST(Duality, ClaimRejectsAnswersOutsideTheCover) {
  const auto s = discrete(2);
  const Strategy bad{"bad", [](const History&) { return Move::pick(99); }, {}};
  EXPECT_THROW(claim(DualPair::PoOd, bad, s, {}), ClaimViolation);
}

TEST(Duality, BackwardOnFiniteSpacesWins) {
  for (auto pair : {DualPair::PoOd, DualPair::OpDd})
    for (const auto& s : small_spaces(2)) {
      const auto sigma = solver(s, selection_game(pair), Player::II);
      const auto tau = dual_backward_strategy(pair, s, sigma);
      const FinGame g(s, pointing_game(pair));
      EXPECT_TRUE(verify_strategy(g, tau, Player::I).ok) << s.label() << " " << to_string(pair);
    }
}

TEST(Duality, SecondPlayerTransfersStayLegal) {
  const auto s = rationals();
  const auto ii = dual_backward_II(DualPair::PoOd, s, random_cover_adversary(s, 5));
  const auto t = play(GameKind::open_picking(), s, random_point_adversary(s, 9), ii, 6);
  for (const auto& [mi, mii] : t.innings) EXPECT_TRUE(s.contains(mii.open, mi.index));

  const auto sierp = sierpinski();
  const auto one = dual_forward_II(DualPair::PoOd, sierp, random_neighborhood_responder(sierp, 2));
  EXPECT_NO_THROW(play(GameKind::sel_cover(), sierp, one, random_pick_responder(3), 4));
}

TEST(Products, PointingUsesTheDenseSequence) {
  const auto s = rationals();
  const auto pts = product_points(s, s);
  const auto tau = product_pointing_strategy(s, s, witness_pointing_strategy(s), witness_points(s));
  const auto p = product(s, s);
  const auto t = play(GameKind::open_picking(), p, tau, random_neighborhood_responder(p, 4), 15);
  for (std::uint64_t n = 0; n < 15; ++n) {
    const auto y = pts.decode(t.innings[n].first.index).second;
    EXPECT_TRUE(q::interval_at(unpair(n).first).contains(q::rational_at(y))) << n;
  }
}

TEST(Unions, TwoPiecesOfADiscreteSpace) {
  const auto s = discrete(2);
  const auto a = finite_subspace(s, 0b01), b = finite_subspace(s, 0b10);
  const auto k = GameKind::splus();
  const auto st = union_strategy({{a, solver(a, k, Player::II)}, {b, solver(b, k, Player::II)}});
  EXPECT_TRUE(verify_strategy(FinGame(s, k), st, Player::II).ok);
}

TEST(Unions, FinitePicksOnAChainUnion) {
  const auto s = chain(3);
  const auto a = finite_subspace(s, 0b011), b = finite_subspace(s, 0b100);
  const auto k = GameKind::splus_fin();
  const auto st = union_fin_strategy({{a, solver(a, k, Player::II)}, {b, solver(b, k, Player::II)}});
  EXPECT_TRUE(verify_strategy(FinGame(s, k), st, Player::II).ok);
}

TEST(Unions, Relativizers) {
  // in the two-point chain, {0} is nowhere dense and {1} is open and dense
  EXPECT_EQ(relativizers(chain(2), {0b01, 0b10}), (std::vector<Mask>{0b10}));
  EXPECT_EQ(relativizers(discrete(2), {0b01, 0b10}), (std::vector<Mask>{0b01, 0b10}));
}

TEST(Unions, SelectionsAreDealtRoundRobin) {
  const auto s = discrete(2);
  const auto a = finite_subspace(s, 0b01), b = finite_subspace(s, 0b10);
  const auto k = GameKind::splus();
  const auto sel = union_selection({a, b}, {strategy_selector(solver(a, k, Player::II)),
                                           strategy_selector(solver(b, k, Player::II))});
  const auto whole = OpenSet({0, 1});
  EXPECT_EQ(sel(s, {whole, whole, whole, whole}), (std::vector<Point>{0, 1, 0, 1}));
}

TEST(Restriction, OpenSubspaceStrategyWins) {
  for (const auto& s : small_spaces(3)) {
    const auto t = FinTopology::of(s);
    for (Base b = 0; b < s.nbases(); ++b) {
      const OpenSet u = OpenSet::basic(b);
      const auto sub = open_subspace(s, u);
      const auto k = GameKind::splus();
      const auto tau = solver(s, k, Player::II);
      const auto ic = s.open_of_mask(interior(t, t.all() & ~s.open_mask(u)));
      const auto st = restrict_splus_strategy(s, tau, sub, ic);
      EXPECT_TRUE(verify_strategy(FinGame(sub, k), st, Player::II).ok) << s.label() << " " << b;
    }
  }
}

TEST(Restriction, LiftFromADenseSubspace) {
  const auto s = chain(3);
  const auto d = finite_subspace(s, 0b100);
  const auto k = GameKind::splus();
  const auto st = lift_dense_strategy(d, solver(d, k, Player::II));
  EXPECT_TRUE(verify_strategy(FinGame(s, k), st, Player::II).ok);
  const auto t = play(k, s, random_dense_open_adversary(s, 1, 8), st, 3);
  for (const auto& [mi, mii] : t.innings) EXPECT_EQ(mii.index, 2u);
}
