#pragma once

// Space expressions, strategy descriptors and solver strategy tables as
// used by the command-line tool.
//
// Space grammar:
//   rationals | sierpinski | discrete:N | chain:N | indiscrete:N
//   | preorder:N[i<=j,...] | double:S | product:S,S | pr:S | opensub:S,[b,...]
//   | path to a JSON file {"points": N, "order": [[i, j], ...]}
//
// Strategy descriptors are a built-in name, a pipeline `op[pair](inner)`, or
// JSON: {"op": ..., "strategy": ...} for transformers, {"table": ...} for
// solver output.

#include <filesystem>
#include <fstream>
#include <sstream>

#include "suites.hpp"

namespace topogame::cli {

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("invalid JSON in '" + path + "': " + e.what());
  }
}

namespace detail {

class SpaceParser {
 public:
  explicit SpaceParser(std::string text) : s_(std::move(text)) {}

  Space parse_all() {
    Space out = parse();
    if (i_ != s_.size()) fail("trailing characters");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidArgument("space '" + s_ + "': " + why + " at offset " + std::to_string(i_));
  }

  bool eat(const std::string& word) {
    if (s_.compare(i_, word.size(), word) != 0) return false;
    i_ += word.size();
    return true;
  }

  void expect(char c) {
    if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  std::uint64_t number() {
    const auto start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected a number");
    return std::stoull(s_.substr(start, i_ - start));
  }

  std::vector<std::uint64_t> list() {
    expect('[');
    std::vector<std::uint64_t> out;
    if (i_ < s_.size() && s_[i_] == ']') {
      ++i_;
      return out;
    }
    while (true) {
      out.push_back(number());
      if (i_ < s_.size() && s_[i_] == ',') {
        ++i_;
        continue;
      }
      expect(']');
      return out;
    }
  }

  std::uint64_t small(std::uint64_t limit) {
    const auto n = number();
    if (n == 0 || n > limit) fail("point count must be in 1.." + std::to_string(limit));
    return n;
  }

  Space parse() {
    if (eat("rationals")) return rationals();
    if (eat("sierpinski")) return sierpinski();
    if (eat("discrete:")) return discrete(small(64));
    if (eat("chain:")) return chain(small(64));
    if (eat("indiscrete:")) return indiscrete(small(64));
    if (eat("preorder:")) {
      Preorder o{small(64), {}};
      expect('[');
      while (i_ < s_.size() && s_[i_] != ']') {
        const auto a = number();
        if (!eat("<=")) fail("expected '<='");
        o.pairs.push_back({a, number()});
        if (i_ < s_.size() && s_[i_] == ',') ++i_;
      }
      expect(']');
      return finite_space(o, preorder_label(o));
    }
    if (eat("double:")) return alexandroff_double(parse());
    if (eat("pr:")) return pixley_roy(parse()).space;
    if (eat("product:")) {
      Space a = parse();
      expect(',');
      return product(a, parse());
    }
    if (eat("opensub:")) {
      Space a = parse();
      expect(',');
      return open_subspace(a, OpenSet(list()));
    }
    return file();
  }

  Space file() {
    const auto path = s_.substr(i_);
    if (path.empty() || !std::filesystem::exists(path)) fail("unknown space");
    i_ = s_.size();
    auto j = read_json_file(path);
    if (!j.contains("label")) j["label"] = path;
    try {
      return space_from_json(j);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidArgument("invalid space file '" + path + "': " + e.what());
    }
  }

  std::string s_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline Space parse_space(const std::string& text) { return detail::SpaceParser(text).parse_all(); }

inline std::vector<std::string> builtin_space_forms() {
  return {"rationals",   "sierpinski",      "discrete:<n>", "chain:<n>",      "indiscrete:<n>",
          "preorder:<n>[i<=j,...]",       "double:<space>", "product:<space>,<space>", "pr:<space>",
          "opensub:<space>,[b,...]",  "<file.json>"};
}

// ---------------------------------------------------------------------------
// Space inspection

inline Json describe_space(const Space& s, std::uint64_t limit = 16) {
  Json j = {{"label", s.label()}};
  j["points"] = s.point_count() ? Json(*s.point_count()) : Json("infinite");
  j["bases"] = s.base_count() ? Json(*s.base_count()) : Json("infinite");
  if (s.has_masks()) {
    Json bases = Json::array();
    for (Base b = 0; b < s.nbases() && b < 64; ++b) bases.push_back(mask_elements(s.base_mask(b)));
    j["base_elements"] = bases;
    if (s.n() <= 16) j["open_sets"] = open_lattice(s).size();
    if (s.n() <= 16) j["order"] = space_to_json(s)["order"];
  } else {
    Json bases = Json::array();
    for (Base b = 0; b < limit; ++b) bases.push_back({{"base", b}, {"witness", s.witness(b)}});
    j["base_prefix"] = bases;
  }
  return j;
}

struct Validation {
  Tri ok = Tri::True;
  std::vector<std::string> problems;
};

/// Base axioms: nonempty members with their witnesses inside, a cover of the
/// space, and every intersection of two members a union of members. Exact on
/// finite spaces, horizon-bounded elsewhere.
inline Validation validate_space(const Space& s, std::uint64_t horizon = 12) {
  Validation v;
  auto bad = [&](std::string why) {
    v.ok = Tri::False;
    v.problems.push_back(std::move(why));
  };
  if (s.has_masks()) {
    Mask covered = 0;
    for (Base b = 0; b < s.nbases(); ++b) {
      const Mask m = s.base_mask(b);
      covered |= m;
      if (!m) bad("base element " + std::to_string(b) + " is empty");
      else if (!(m >> s.witness(b) & 1)) bad("witness of base element " + std::to_string(b) + " lies outside it");
    }
    if (covered != s.all_mask()) bad("base elements do not cover the space");
    for (Base a = 0; a < s.nbases(); ++a)
      for (Base b = 0; b < s.nbases(); ++b) {
        const Mask both = s.base_mask(a) & s.base_mask(b);
        Mask u = 0;
        for (Base c = 0; c < s.nbases(); ++c)
          if (subset_of(s.base_mask(c), both)) u |= s.base_mask(c);
        if (u != both)
          bad("intersection of base elements " + std::to_string(a) + " and " + std::to_string(b) +
              " is not a union of base elements");
      }
    return v;
  }
  for (Base b = 0; b < horizon; ++b)
    if (!s.member(s.witness(b), b)) bad("witness of base element " + std::to_string(b) + " lies outside it");
  for (Point p = 0; p < horizon; ++p) {
    try {
      const auto b = s.neighborhood(p, 0);
      if (!s.member(p, b)) bad("neighbourhood of point " + std::to_string(p) + " misses it");
    } catch (const SearchBoundExceeded&) {
      if (v.ok == Tri::True) v.ok = Tri::Indeterminate;
      v.problems.push_back("no neighbourhood found for point " + std::to_string(p));
    }
  }
  // a base element around a common point inside both, among 32 sampled neighbourhoods
  for (Base a = 0; a < horizon; ++a)
    for (Base b = 0; b < horizon; ++b) {
      const auto w = s.meet_witness(a, b);
      if (!w) continue;
      bool found = false;
      for (std::uint64_t k = 0; k < 32 && !found; ++k) {
        const Base c = s.neighborhood(*w, mix(a, b) + k);
        found = s.within(c, OpenSet::basic(a)) == Tri::True && s.within(c, OpenSet::basic(b)) == Tri::True;
      }
      if (!found) {
        if (v.ok == Tri::True) v.ok = Tri::Indeterminate;
        v.problems.push_back("no base element found inside the meet of " + std::to_string(a) + " and " +
                             std::to_string(b));
      }
    }
  return v;
}

// ---------------------------------------------------------------------------
// Solver strategy tables

/// The solved winner's rank-greedy strategy as a state -> move table: one
/// entry per non-target state for I, per (state, I move) for II.
inline Json emit_table(const FinGame& g, const SolveResult& r) {
  const Player p = r.winner;
  Json entries = Json::array();
  std::vector<Move> universe;
  for (auto& f : g.i_moves(p == Player::I)) universe.push_back(g.to_move(f));
  for (Mask acc = 0; acc < bit(g.topology().n); ++acc) {
    if (p == Player::I) {
      const auto& mv = universe[rank_choice(g, r.rank, p, acc, nullptr, universe)];
      entries.push_back({{"state", mask_elements(acc)}, {"move", to_json(mv, 64)}});
      continue;
    }
    for (const auto& mi : universe) {
      const auto rs = g.responses(mi, false);
      entries.push_back({{"state", mask_elements(acc)},
                         {"I", to_json(mi, 64)},
                         {"II", to_json(rs[rank_choice(g, r.rank, p, acc, &mi)].move)}});
    }
  }
  return {{"table",
           {{"kind", g.kind().name()}, {"space", g.space().label()}, {"player", to_string(p)}, {"entries", entries}}}};
}

/// Strategy replaying an emitted table on the table's own game.
inline Strategy table_from_json(const Json& j) {
  const auto& t = j.at("table");
  auto g = std::make_shared<const FinGame>(parse_space(t.at("space").get<std::string>()),
                                           GameKind::parse(t.at("kind").get<std::string>()));
  const bool one = t.at("player").get<std::string>() == "I";
  auto moves = std::make_shared<std::map<std::pair<Mask, FinMove>, Move>>();
  for (const auto& e : t.at("entries")) {
    const Mask acc = elements_mask(e.at("state").get<std::vector<std::uint64_t>>());
    if (one) (*moves)[{acc, FinMove{}}] = move_from_json(e.at("move"));
    else (*moves)[{acc, g->canonical(move_from_json(e.at("I")))}] = move_from_json(e.at("II"));
  }
  return {std::string("table(") + (one ? "I" : "II") + ")",
          [g, moves, one](const History& h) {
            const History before = one ? h : History(h.begin(), h.end() - 1);
            const Mask acc = g->accumulate(before);
            auto it = moves->find({acc, one ? FinMove{} : g->canonical(h.back())});
            if (it == moves->end()) throw InvalidArgument("position missing from the strategy table");
            return it->second;
          },
          [](const History&) { return std::vector<std::uint64_t>{}; }};
}

// ---------------------------------------------------------------------------
// Strategy descriptors

struct StrategyContext {
  GameKind kind;
  Space space;
  Player side = Player::I;
  std::uint64_t seed = 0;
};

inline std::vector<std::string> builtin_strategy_names() {
  return {"witness-pointing", "random-cover",         "random-dense-set", "random-dense-open", "random-point",
          "random-open",      "first-member",         "enumerate",        "pibase",            "pibase-splus",
          "random-neighbourhood", "random-pick",      "random-point-in",  "solver",            "human"};
}

/// A descriptor from command-line text: a JSON file, inline JSON, a pipeline
/// `op[pair](inner)`, or a built-in name.
inline Json parse_descriptor(const std::string& text) {
  if (!text.empty() && text.front() == '{') return Json::parse(text);
  if (text.size() > 5 && text.substr(text.size() - 5) == ".json") return read_json_file(text);
  const auto open = text.find('(');
  if (open != std::string::npos && text.back() == ')') {
    std::string op = text.substr(0, open);
    Json j = {{"op", op}};
    if (const auto lb = op.find('['); lb != std::string::npos && op.back() == ']') {
      j["op"] = op.substr(0, lb);
      j["pair"] = op.substr(lb + 1, op.size() - lb - 2);
    }
    j["strategy"] = parse_descriptor(text.substr(open + 1, text.size() - open - 2));
    return j;
  }
  return text;
}

namespace detail {

inline Strategy builtin(const std::string& name, const StrategyContext& c) {
  const Space& s = c.space;
  const auto seed = mix(c.seed, c.side == Player::I ? 1 : 2);
  if (name == "witness-pointing") return witness_pointing_strategy(s);
  if (name == "random-cover") return random_cover_adversary(s, seed);
  if (name == "random-dense-set") return random_dense_set_adversary(s, seed);
  if (name == "random-dense-open") return random_dense_open_adversary(s, seed, 16);
  if (name == "random-point") return random_point_adversary(s, seed);
  if (name == "random-open") return random_open_adversary(s, seed);
  if (name == "first-member") return first_member_strategy();
  if (name == "enumerate") return enumeration_cover_strategy(s, all_points(s));
  if (name == "pibase") return pibase_strategy_DGame(s, base_enumeration(s));
  if (name == "pibase-splus") return pibase_strategy_SPlus(s, base_enumeration(s));
  if (name == "random-neighbourhood") return random_neighborhood_responder(s, seed);
  if (name == "random-pick") return random_pick_responder(seed);
  if (name == "random-point-in") return random_point_responder(s, seed);
  if (name == "solver") {
    auto g = std::make_shared<const FinGame>(s, c.kind);
    const auto r = solve_game(s, c.kind, false);
    return rank_strategy(g, r.rank, c.side);
  }
  std::string known;
  for (const auto& n : builtin_strategy_names()) known += (known.empty() ? "" : ", ") + n;
  throw InvalidArgument("unknown strategy '" + name + "' (known: " + known + ")");
}

}  // namespace detail

/// Builds the strategy a descriptor names. Transformers read their input
/// strategy in the context of the game they transform from.
inline Strategy resolve_strategy(const Json& d, const StrategyContext& c) {
  if (d.is_string()) return detail::builtin(d.get<std::string>(), c);
  if (d.contains("table")) return table_from_json(d);
  const auto op = d.at("op").get<std::string>();
  const Space s = d.contains("space") ? parse_space(d["space"].get<std::string>()) : c.space;
  const auto pair = parse_pair(d.value("pair", std::string("po-od")));
  auto inner = [&](GameKind kind, Player side, const Space& on) {
    return resolve_strategy(d.at("strategy"), {kind, on, side, c.seed});
  };
  if (op == "dual-forward") return dual_forward(pair, s, inner(pointing_game(pair), Player::I, s));
  if (op == "dual-backward") return dual_backward_strategy(pair, s, inner(selection_game(pair), Player::II, s));
  if (op == "dual-forward-II") return dual_forward_II(pair, s, inner(pointing_game(pair), Player::II, s));
  if (op == "dual-backward-II") return dual_backward_II(pair, s, inner(selection_game(pair), Player::I, s));
  if (op == "lift") {
    const Space dsub = finite_subspace(s, elements_mask(d.at("points").get<std::vector<Point>>()));
    return lift_dense_strategy(dsub, inner(c.kind, Player::II, dsub));
  }
  if (op == "restrict") {
    const OpenSet u(d.at("open").get<std::vector<Base>>());
    const Space sub = open_subspace(s, u);
    const auto t = FinTopology::of(s);
    return restrict_splus_strategy(s, inner(c.kind, Player::II, s), sub,
                                   s.open_of_mask(interior(t, t.all() & ~s.open_mask(u))));
  }
  if (op == "union") {
    std::vector<Piece> pieces;
    for (const auto& pc : d.at("pieces")) {
      const Space sub = finite_subspace(s, elements_mask(pc.at("points").get<std::vector<Point>>()));
      pieces.push_back({sub, resolve_strategy(pc.at("strategy"), {c.kind, sub, Player::II, c.seed})});
    }
    return union_strategy(std::move(pieces));
  }
  if (op == "product") {
    const Space sx = parse_space(d.at("x").get<std::string>());
    const Space sy = parse_space(d.at("y").get<std::string>());
    return product_pointing_strategy(sx, sy, inner(GameKind::open_picking(), Player::I, sx), witness_points(sy));
  }
  throw InvalidArgument("unknown transformer '" + op + "'");
}

}  // namespace topogame::cli
