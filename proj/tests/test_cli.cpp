#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "topogame/cli.hpp"

using namespace topogame;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(SpaceGrammar, Builtins) {
  EXPECT_EQ(cli::parse_space("rationals").label(), "rationals");
  EXPECT_EQ(cli::parse_space("chain:4").n(), 4u);
  EXPECT_EQ(open_lattice(cli::parse_space("sierpinski")), (std::vector<Mask>{0, 2, 3}));
  EXPECT_EQ(open_lattice(cli::parse_space("indiscrete:3")).size(), 2u);
  EXPECT_EQ(open_lattice(cli::parse_space("discrete:3")).size(), 8u);
  const auto p = cli::parse_space("preorder:3[0<=1,1<=2,0<=2]");
  EXPECT_EQ(open_lattice(p), open_lattice(chain(3)));

}

TEST(SpaceGrammar, Constructions) {
  EXPECT_EQ(cli::parse_space("product:chain:2,sierpinski").n(), 4u);
  EXPECT_EQ(cli::parse_space("double:discrete:2").n(), 4u);
  EXPECT_EQ(cli::parse_space("pr:chain:2").n(), 4u);
  EXPECT_FALSE(cli::parse_space("product:rationals,rationals").finite());
  const auto o = cli::parse_space("opensub:chain:3,[1]");
  EXPECT_EQ(o.n(), 2u);
  // labels of open subspaces parse back to the same space
  EXPECT_EQ(open_lattice(cli::parse_space(o.label())), open_lattice(o));
  const auto nested = cli::parse_space("product:double:sierpinski,chain:2");
  EXPECT_EQ(nested.n(), 8u);
}

TEST(SpaceGrammar, Errors) {
  EXPECT_THROW(cli::parse_space("chain:0"), InvalidArgument);
  EXPECT_THROW(cli::parse_space("chain:3x"), InvalidArgument);
  EXPECT_THROW(cli::parse_space("preorder:3[0<=5]"), InvalidArgument);
  EXPECT_THROW(cli::parse_space("preorder:3[0<=1,1<=2]"), InvalidArgument);
  EXPECT_THROW(cli::parse_space("preorder:3[0<1]"), InvalidArgument);
  EXPECT_THROW(cli::parse_space("klein-bottle"), InvalidArgument);
  EXPECT_THROW(cli::parse_space("product:chain:2"), InvalidArgument);
}

TEST(SpaceGrammar, Files) {
  const auto good = write_temp("topogame_good_space.json", R"({"points":3,"order":[[0,1],[1,2],[0,2]]})");
  const auto s = cli::parse_space(good);
  EXPECT_EQ(s.label(), good);
  EXPECT_EQ(open_lattice(s), open_lattice(chain(3)));
  const auto bad = write_temp("topogame_bad_space.json", R"({"points":3,"order":[[0,7]]})");
  EXPECT_THROW(cli::parse_space(bad), InvalidArgument);
  const auto junk = write_temp("topogame_junk_space.json", "{not json");
  EXPECT_THROW(cli::parse_space(junk), InvalidArgument);
}

TEST(Validation, FiniteAndBuiltinSpacesPass) {
  for (const auto& s : small_spaces(3)) EXPECT_EQ(cli::validate_space(s).ok, Tri::True) << s.label();
  EXPECT_EQ(cli::validate_space(rationals()).ok, Tri::True);
  EXPECT_EQ(cli::validate_space(cli::parse_space("double:chain:3")).ok, Tri::True);
}

TEST(Validation, BrokenBasesAreReported) {
  // base {0,1}, {1,2}: the intersection {1} is not a union of base elements
  SpaceImpl impl;
  impl.label = "broken";
  impl.points = 3;
  impl.bases = 2;
  impl.member = [](Point p, Base b) { return b == 0 ? p <= 1 : p >= 1; };
  impl.witness = [](Base b) { return b == 0 ? Point{0} : Point{2}; };
  const auto v = cli::validate_space(Space::make(impl));
  EXPECT_EQ(v.ok, Tri::False);
  ASSERT_FALSE(v.problems.empty());
  EXPECT_NE(v.problems.front().find("not a union"), std::string::npos);

  SpaceImpl wit = impl;
  wit.witness = [](Base) { return Point{2}; };
  wit.member = [](Point p, Base b) { return b == 0 || p == 2; };
  EXPECT_EQ(cli::validate_space(Space::make(wit)).ok, Tri::True);
  wit.witness = [](Base b) { return b == 0 ? Point{0} : Point{1}; };
  EXPECT_EQ(cli::validate_space(Space::make(wit)).ok, Tri::False);
}

TEST(Describe, FiniteAndInfinite) {
  const auto j = cli::describe_space(chain(3));
  EXPECT_EQ(j["points"], 3);
  EXPECT_EQ(j["open_sets"], 4);
  EXPECT_EQ(j["base_elements"][1], Json::array({1, 2}));
  const auto r = cli::describe_space(rationals(), 4);
  EXPECT_EQ(r["points"], "infinite");
  EXPECT_EQ(r["base_prefix"].size(), 4u);
}

TEST(Descriptors, Forms) {
  EXPECT_EQ(cli::parse_descriptor("witness-pointing"), "witness-pointing");
  const auto p = cli::parse_descriptor("dual-forward[op-dd](pibase)");
  EXPECT_EQ(p["op"], "dual-forward");
  EXPECT_EQ(p["pair"], "op-dd");
  EXPECT_EQ(p["strategy"], "pibase");
  const auto nested = cli::parse_descriptor("dual-forward[po-od](dual-backward[po-od](solver))");
  EXPECT_EQ(nested["strategy"]["op"], "dual-backward");
  EXPECT_EQ(cli::parse_descriptor(R"({"op":"lift","points":[2],"strategy":"solver"})")["points"][0], 2);
}

TEST(Descriptors, ResolveBuiltinsAndTransformers) {
  const auto s = rationals();
  const cli::StrategyContext one{GameKind::open_picking(), s, Player::I, 0};
  EXPECT_EQ(cli::resolve_strategy("witness-pointing", one).name, witness_pointing_strategy(s).name);
  EXPECT_THROW(cli::resolve_strategy("telepathy", one), InvalidArgument);
  const cli::StrategyContext two{GameKind::sel_cover(), s, Player::II, 0};
  const auto st = cli::resolve_strategy(cli::parse_descriptor("dual-forward[po-od](witness-pointing)"), two);
  const auto t = play(GameKind::sel_cover(), s, random_cover_adversary(s, 1), st, 6);
  EXPECT_TRUE(evaluate(GameKind::sel_cover(), s, t, 6).met());
}

TEST(Descriptors, FiniteTransformersWin) {
  const auto s = chain(3);
  const auto k = GameKind::splus();
  const cli::StrategyContext ctx{k, s, Player::II, 0};
  const auto lift = cli::resolve_strategy(Json::parse(R"({"op":"lift","points":[2],"strategy":"solver"})"), ctx);
  EXPECT_TRUE(verify_strategy(FinGame(s, k), lift, Player::II).ok);
  const auto d = discrete(3);
  const auto uni = cli::resolve_strategy(
      Json::parse(R"({"op":"union","pieces":[{"points":[0,1],"strategy":"solver"},{"points":[2],"strategy":"solver"}]})"),
      {k, d, Player::II, 0});
  EXPECT_TRUE(verify_strategy(FinGame(d, k), uni, Player::II).ok);
  const auto back = cli::resolve_strategy(cli::parse_descriptor("dual-backward[po-od](solver)"),
                                          {GameKind::open_picking(), s, Player::I, 0});
  EXPECT_TRUE(verify_strategy(FinGame(s, GameKind::open_picking()), back, Player::I).ok);
}

TEST(Tables, EmittedStrategiesReplay) {
  for (const auto& s : small_spaces(2))
    for (const auto& k : {GameKind::splus(), GameKind::open_picking(), GameKind::sel_cover()}) {
      const auto r = solve_game(s, k);
      const auto table = cli::emit_table(FinGame(s, k), r);
      EXPECT_EQ(table["table"]["player"], to_string(r.winner));
      const auto st = cli::table_from_json(Json::parse(table.dump()));
      EXPECT_TRUE(verify_strategy(FinGame(s, k), st, r.winner).ok) << s.label() << " " << k.name();
    }
}

TEST(Suites, Registry) {
  const auto all = all_suites();
  EXPECT_EQ(all.size(), 12u);
  EXPECT_EQ(find_suite("duality").name, "duality");
  EXPECT_THROW(find_suite("nope"), InvalidArgument);
}

TEST(Suites, ReportsAreReproducible) {
  const auto a = run_suite("pr_open_subspace", 5, 1);
  const auto b = run_suite("pr_open_subspace", 5, 2);
  EXPECT_EQ(a.overall(), Status::Pass);
  EXPECT_EQ(a.exit_code(), 0);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  EXPECT_FALSE(to_json(a)["checks"][0].contains("seconds"));
  EXPECT_TRUE(to_json(a, true)["checks"][0].contains("seconds"));
}

TEST(Suites, FailingChecksAreCaught) {
  const Check boom{"boom", "throws", []() -> CheckOutcome { throw SearchBoundExceeded("out of room"); }};
  const auto rec = run_check(boom);
  EXPECT_EQ(rec.status, Status::Fail);
  EXPECT_NE(rec.detail.find("out of room"), std::string::npos);
}
