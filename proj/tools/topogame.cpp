// topogame: inspect spaces, play and replay games, transform strategies,
// solve finite games and run the verification suites.
//
// Exit codes: 0 success, 1 failure or error, 2 indeterminate.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "topogame/cli.hpp"

using namespace topogame;

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("TOPOGAME_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed TOPOGAME_SEED '" << env << "'\n";
    }
  }
  return 0;
}

int code(Tri t) { return t == Tri::True ? 0 : t == Tri::False ? 1 : 2; }

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// Interactive play

// Shorthand input: a number or an array, read as the move type the position expects.
Move read_shorthand(const GameKind& kind, Player side, const Json& j) {
  if (j.is_object()) return move_from_json(j);
  if (side == Player::I) {
    switch (kind.tag) {
      case Kind::SelCover:
      case Kind::SelCoverFin: {
        std::vector<OpenSet> fam;
        for (const auto& u : j) fam.push_back(open_from_json(u));
        return Move::of_family(CoverFamily::of("human", std::move(fam)));
      }
      case Kind::SPlus:
      case Kind::SPlusFin:
      case Kind::PointOpen:
        return Move::of_open(open_from_json(j));
      case Kind::DGame:
        return Move::of_dense(PointSet::of("human", j.get<std::vector<Point>>()));
      case Kind::OpenPicking:
        return Move::point(j.get<Point>());
    }
  }
  switch (kind.tag) {
    case Kind::SelCover:
      return Move::pick(j.get<std::uint64_t>());
    case Kind::SelCoverFin:
      return Move::pick_many(j.get<std::vector<std::uint64_t>>());
    case Kind::SPlusFin:
      return Move::pick_many(j.get<std::vector<Point>>());
    case Kind::OpenPicking:
      return Move::of_open(open_from_json(j));
    default:
      return Move::point(j.get<Point>());
  }
}

const char* shorthand_hint(const GameKind& kind, Player side) {
  if (side == Player::I) {
    switch (kind.tag) {
      case Kind::SelCover:
      case Kind::SelCoverFin:
        return "a family of open sets, e.g. [[0],[1,2]]";
      case Kind::SPlus:
      case Kind::SPlusFin:
      case Kind::PointOpen:
        return "an open set as base indices, e.g. [0,2]";
      case Kind::DGame:
        return "a point set, e.g. [0,1]";
      case Kind::OpenPicking:
        return "a point, e.g. 0";
    }
  }
  switch (kind.tag) {
    case Kind::SelCover:
      return "a member index, e.g. 0";
    case Kind::SelCoverFin:
      return "member indices, e.g. [0,1]";
    case Kind::SPlusFin:
      return "points, e.g. [0,1]";
    case Kind::OpenPicking:
      return "an open set as base indices, e.g. [0]";
    default:
      return "a point, e.g. 0";
  }
}

Strategy human(const GameKind& kind, const Space& s, Player side, const Rules& rules) {
  std::shared_ptr<const FinGame> g;
  if (s.has_masks() && s.n() <= 16) g = std::make_shared<const FinGame>(s, kind);
  return {"human", [=](const History& h) -> Move {
            std::cerr << "\ninning " << inning_of(h) << ", player " << to_string(side) << "\n";
            if (!h.empty()) std::cerr << "  opponent played " << to_json(h.back()).dump() << "\n";
            std::vector<Move> options;
            if (g) {
              if (side == Player::I) {
                for (const auto& f : g->i_moves(false)) options.push_back(g->to_move(f));
              } else {
                for (auto& r : g->responses(h.back(), true)) options.push_back(r.move);
              }
              for (std::size_t i = 0; i < options.size(); ++i)
                std::cerr << "  [" << i << "] " << to_json(options[i]).dump() << "\n";
              std::cerr << "choose #index, or enter " << shorthand_hint(kind, side) << "\n";
            } else {
              std::cerr << "enter " << shorthand_hint(kind, side) << "\n";
            }
            while (true) {
              std::cerr << "> " << std::flush;
              std::string line;
              if (!std::getline(std::cin, line)) throw InvalidArgument("input closed");
              if (line.empty()) continue;
              Move mv;
              try {
                if (line.front() == '#') {
                  const auto k = std::stoull(line.substr(1));
                  if (k >= options.size()) throw InvalidArgument("no such option");
                  mv = options[k];
                } else {
                  mv = read_shorthand(kind, side, Json::parse(line));
                }
              } catch (const std::exception& e) {
                std::cerr << "could not read move: " << e.what() << "\n";
                continue;
              }
              if (auto why = illegal_reason(kind, s, h, mv, rules)) {
                std::cerr << "illegal: " << *why << "\n";
                continue;
              }
              return mv;
            }
          },
          {}};
}

// ---------------------------------------------------------------------------
// Commands

int cmd_space(const std::string& action, const std::string& text) {
  if (action == "list") {
    for (const auto& f : cli::builtin_space_forms()) std::cout << f << "\n";
    return 0;
  }
  if (text.empty()) throw InvalidArgument("space " + action + " needs a space");
  if (action == "show") {
    std::cout << cli::describe_space(cli::parse_space(text)).dump(2) << "\n";
    return 0;
  }
  if (action == "validate") {
    const auto v = cli::validate_space(cli::parse_space(text));
    std::cout << Json{{"space", text}, {"valid", to_string(v.ok)}, {"problems", v.problems}}.dump(2) << "\n";
    return code(v.ok);
  }
  throw InvalidArgument("unknown space action '" + action + "'");
}

struct PlayOptions {
  std::string game = "SelCover";
  std::string space;
  std::string one, two;
  std::uint64_t innings = 16;
  std::uint64_t horizon = 16;
  std::string interactive;
  std::string replay;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 0;
};

int cmd_play(const PlayOptions& o) {
  Transcript t;
  Space s;
  if (!o.replay.empty()) {
    t = transcript_from_json(cli::read_json_file(o.replay));
    s = cli::parse_space(t.space);
  } else {
    if (o.space.empty()) throw InvalidArgument("play needs --space");
    const auto kind = GameKind::parse(o.game);
    s = cli::parse_space(o.space);
    const Rules rules;
    auto make = [&](const std::string& text, Player side) {
      if (text == "human" || o.interactive == to_string(side)) return human(kind, s, side, rules);
      if (text.empty()) throw InvalidArgument(std::string("missing --strategy-") + to_string(side));
      return cli::resolve_strategy(cli::parse_descriptor(text), {kind, s, side, o.seed});
    };
    const auto one = make(o.one, Player::I);
    const auto two = make(o.two, Player::II);
    try {
      t = play(kind, s, one, two, o.innings, rules, o.seed);
    } catch (const IllegalMove& e) {
      std::cout << Json{{"error", e.what()}, {"player", to_string(e.player)}, {"inning", e.inning}}.dump(2) << "\n";
      return 1;
    } catch (const StrategyFailure& e) {
      std::cout << Json{{"error", e.what()}, {"player", to_string(e.player)}, {"inning", e.inning}}.dump(2) << "\n";
      return 1;
    }
  }
  const auto v = evaluate(t.kind, s, t, o.horizon);
  if (!o.out.empty()) write_file(o.out, to_json(t));
  if (o.format == "text") {
    std::cout << t.kind.name() << " on " << t.space << ", " << t.innings.size() << " innings: " << v.str()
              << " at horizon " << v.horizon << "\n";
  } else {
    std::cout << Json{{"transcript", to_json(t)}, {"verdict", to_json(v)}}.dump(2) << "\n";
  }
  return v.outcome == Verdict::Outcome::Indeterminate ? 2 : 0;
}

int cmd_verify(const std::string& name, std::uint64_t seed, unsigned jobs, const std::string& format, bool timings,
               const std::string& artifacts) {
  if (name.empty()) {
    for (const auto& s : all_suites()) std::cout << s.name << "  " << s.description << "\n";
    return 0;
  }
  auto report = run_suite(name, seed, jobs);
  if (!artifacts.empty()) {
    std::filesystem::create_directories(artifacts);
    for (auto& c : report.checks) {
      if (c.artifact.is_null()) continue;
      const auto path = (std::filesystem::path(artifacts) / (name + "." + c.id + ".json")).string();
      write_file(path, c.artifact);
      c.artifact = {{"path", path}};
    }
  }
  if (format == "text") {
    for (const auto& c : report.checks) {
      std::cout << to_string(c.status) << "  " << name << "." << c.id << "  " << c.detail;
      if (timings) std::cout << "  (" << c.seconds << " s)";
      std::cout << "\n";
    }
  } else {
    std::cout << to_json(report, timings).dump(2) << "\n";
  }
  return report.exit_code();
}

struct TransformOptions {
  std::string op;
  std::string pair = "po-od";
  std::string strategy;
  std::string space;
  std::vector<std::uint64_t> open;
  std::vector<std::uint64_t> points;
  std::string game = "SPlus";
  std::uint64_t seed = 0;
};

int cmd_transform(const TransformOptions& o) {
  Json d = {{"op", o.op}, {"pair", o.pair}, {"space", o.space}, {"strategy", cli::parse_descriptor(o.strategy)}};
  if (o.op == "restrict") d["open"] = o.open;
  if (o.op == "lift") d["points"] = o.points;
  // resolving checks the pipeline before it is emitted
  const Space s = cli::parse_space(o.space);
  GameKind kind = GameKind::parse(o.game);
  if (o.op.rfind("dual-forward", 0) == 0) kind = selection_game(parse_pair(o.pair));
  if (o.op.rfind("dual-backward", 0) == 0) kind = pointing_game(parse_pair(o.pair));
  const auto st = cli::resolve_strategy(d, {kind, s, Player::II, o.seed});
  d["name"] = st.name;
  std::cout << d.dump(2) << "\n";
  return 0;
}

int cmd_solve(const std::string& text, const std::string& game, const std::string& emit) {
  const Space s = cli::parse_space(text);
  const auto kind = GameKind::parse(game);
  const auto r = solve_game(s, kind);
  Json j = {{"space", s.label()}, {"game", kind.name()},    {"winner", to_string(r.winner)},
            {"bound", r.bound ? Json(*r.bound) : Json(nullptr)}, {"certified", r.certified}, {"i_moves", r.i_moves}};
  if (!emit.empty()) {
    write_file(emit, cli::emit_table(FinGame(s, kind), r));
    j["strategy"] = emit;
  }
  std::cout << j.dump(2) << "\n";
  return r.certified ? 0 : 1;
}

int cmd_baire(const std::string& check, const std::string& file) {
  const auto fam = vector_family_from_json(cli::read_json_file(file));
  const auto bound = sentinel_bound({&fam});
  if (check == "P") {
    const bool p = has_property_P(fam, bound);
    std::cout << Json{{"family", file}, {"property_P", p}}.dump(2) << "\n";
    return p ? 0 : 1;
  }
  if (check == "cover") {
    const bool c = covering_selection_exists(discrete_cover_family(fam), fam.vectors.size(), bound);
    std::cout << Json{{"family", file}, {"covering_selection", c}}.dump(2) << "\n";
    return c ? 0 : 1;
  }
  throw InvalidArgument("unknown check '" + check + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"topological selection games: spaces, referees, strategy transformers and verification suites"};
  app.require_subcommand(1);
  const std::uint64_t env_seed = default_seed();

  std::string space_action, space_text;
  auto* space = app.add_subcommand("space", "list, show or validate spaces");
  space->add_option("action", space_action, "list | show | validate")->required();
  space->add_option("space", space_text, "space expression or JSON file");

  PlayOptions po;
  po.seed = env_seed;
  auto* playc = app.add_subcommand("play", "play or replay a game and print the transcript and verdict");
  playc->add_option("--game", po.game, "game kind, e.g. SelCover(Cover,DenseUnion), SPlus, DGame, OpenPicking");
  playc->add_option("--space", po.space, "space expression");
  playc->add_option("--strategy-I", po.one, "strategy name, pipeline or descriptor file for player I");
  playc->add_option("--strategy-II", po.two, "strategy name, pipeline or descriptor file for player II");
  playc->add_option("--innings", po.innings, "number of innings");
  playc->add_option("--horizon", po.horizon, "verdict horizon m");
  playc->add_option("--interactive", po.interactive, "prompt for this side's moves")->check(CLI::IsMember({"I", "II"}));
  playc->add_option("--replay", po.replay, "re-evaluate a saved transcript");
  playc->add_option("--out", po.out, "write the transcript to this file");
  playc->add_option("--format", po.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  playc->add_option("--seed", po.seed, "seed for randomized strategies (default TOPOGAME_SEED or 0)");

  std::string suite, vformat = "json", artifacts;
  std::uint64_t vseed = env_seed;
  unsigned jobs = 1;
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite; without a name, list the suites");
  verify->add_option("suite", suite, "suite name");
  verify->add_option("--seed", vseed, "seed (default TOPOGAME_SEED or 0)");
  verify->add_option("--jobs", jobs, "checks run in parallel")->check(CLI::PositiveNumber);
  verify->add_option("--format", vformat, "json | text")->check(CLI::IsMember({"json", "text"}));
  verify->add_flag("--timings", timings, "include per-check timings");
  verify->add_option("--artifacts", artifacts, "write failing checks' artifacts into this directory");

  TransformOptions to;
  to.seed = env_seed;
  auto* transform = app.add_subcommand("transform", "emit a strategy descriptor built by a transformer");
  transform->add_option("--op", to.op, "dual-forward | dual-backward | dual-forward-II | dual-backward-II | restrict | lift")
      ->required();
  transform->add_option("--pair", to.pair, "po-od | op-dd");
  transform->add_option("--strategy", to.strategy, "input strategy (name, pipeline or file)")->required();
  transform->add_option("--space", to.space, "space the input strategy plays on")->required();
  transform->add_option("--open", to.open, "restrict: base indices of the open subspace");
  transform->add_option("--points", to.points, "lift: points of the dense subspace");
  transform->add_option("--game", to.game, "restrict/lift: game kind");

  std::string solve_space, solve_game_name, emit;
  auto* solve = app.add_subcommand("solve", "solve a game on a finite space");
  solve->add_option("--space", solve_space, "finite space")->required();
  solve->add_option("--game", solve_game_name, "game kind")->required();
  solve->add_option("--emit-strategy", emit, "write the winner's strategy table to this file");

  std::string check = "P", family;
  auto* baire = app.add_subcommand("baire", "check property (P) or covering selections of a vector family");
  baire->add_option("--check", check, "P | cover")->check(CLI::IsMember({"P", "cover"}));
  baire->add_option("--family", family, "JSON matrix or {\"vectors\": ...}")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*space) return cmd_space(space_action, space_text);
    if (*playc) return cmd_play(po);
    if (*verify) return cmd_verify(suite, vseed, jobs, vformat, timings, artifacts);
    if (*transform) return cmd_transform(to);
    if (*solve) return cmd_solve(solve_space, solve_game_name, emit);
    if (*baire) return cmd_baire(check, family);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
