#pragma once

// Exact topology and exact game solving on finite spaces.
//
// The games only depend on the set II has accumulated so far (the union of
// picked opens, or the set of picked points): the target predicates are
// monotone in it and the legal moves do not depend on the past. Positions are
// therefore accumulated sets, and solving is a reachability (attractor)
// computation over the 2^n subsets.

#include <limits>
#include <map>
#include <set>

#include "games.hpp"

namespace topogame {

struct FinTopology {
  std::uint64_t n = 0;
  std::vector<Mask> opens;  // ascending, includes 0 and all()

  Mask all() const { return full_mask(n); }

  static FinTopology of(const Space& s) {
    if (!s.has_masks()) throw InvalidArgument(s.label() + " is not a finite space");
    return {s.n(), open_lattice(s)};
  }

  /// Validates closure under unions and intersections.
  static FinTopology from_opens(std::uint64_t n, std::vector<Mask> opens) {
    if (n > 16) throw DimensionError("finite topologies are limited to 16 points");
    opens.push_back(0);
    opens.push_back(full_mask(n));
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    for (auto a : opens) {
      if (!subset_of(a, full_mask(n))) throw InvalidArgument("open set outside the point universe");
      for (auto b : opens)
        if (!std::binary_search(opens.begin(), opens.end(), a | b) ||
            !std::binary_search(opens.begin(), opens.end(), a & b))
          throw InvalidArgument("family is not closed under unions and intersections");
    }
    return {n, std::move(opens)};
  }
};

inline Mask interior(const FinTopology& t, Mask a) {
  Mask out = 0;
  for (auto u : t.opens)
    if (subset_of(u, a)) out |= u;
  return out;
}

inline Mask closure(const FinTopology& t, Mask a) { return t.all() & ~interior(t, t.all() & ~a); }

inline Mask int_closure(const FinTopology& t, Mask a) { return interior(t, closure(t, a)); }

inline bool is_dense(const FinTopology& t, Mask a) { return closure(t, a) == t.all(); }

/// Specialization preorder of a finite topology: i <= j iff every open set
/// containing i contains j.
inline Preorder specialization(const FinTopology& t) {
  Preorder o{t.n, {}};
  for (Point i = 0; i < t.n; ++i)
    for (Point j = 0; j < t.n; ++j) {
      if (i == j) continue;
      bool le = true;
      for (auto u : t.opens)
        if ((u >> i & 1) && !(u >> j & 1)) le = false;
      if (le) o.pairs.push_back({i, j});
    }
  return o;
}

/// Canonical I move on a finite space: a family as the ascending list of its
/// members' masks, an open or point set as a mask, or a point.
struct FinMove {
  std::vector<Mask> members;
  Mask set = 0;
  Point point = 0;
  friend auto operator<=>(const FinMove&, const FinMove&) = default;
};

struct Response {
  Mask gain = 0;
  Move move;
};


/// A game kind played on a finite space.
class FinGame {
 public:
  FinGame(Space s, GameKind kind) : s_(std::move(s)), kind_(kind), t_(FinTopology::of(s_)) {
    if (t_.n > 16) throw DimensionError("finite games are limited to 16 points");
    for (auto u : t_.opens)
      if (u) nonempty_opens_.push_back(u);
  }

  const Space& space() const { return s_; }
  const GameKind& kind() const { return kind_; }
  const FinTopology& topology() const { return t_; }
  const std::vector<Mask>& nonempty_opens() const { return nonempty_opens_; }

  bool win(Mask acc) const {
    return kind_.target_class() == FamilyClass::Cover ? acc == t_.all() : is_dense(t_, acc);
  }

  Rules exact_rules() const {
    return {std::max<std::uint64_t>(s_.nbases(), s_.n()) + 1, kDefaultSearchBound};
  }

  /// Every legal I move (quotiented by membership), or only the inclusion-
  /// minimal ones, which suffice for solving because shrinking I's move only
  /// shrinks II's options.
  std::vector<FinMove> i_moves(bool minimal) const {
    std::vector<FinMove> out;
    switch (kind_.tag) {
      case Kind::SelCover:
      case Kind::SelCoverFin: {
        for (auto& fam : families(kind_.a, minimal)) out.push_back({fam, 0, 0});
        break;
      }
      case Kind::SPlus:
      case Kind::SPlusFin:
        for (auto m : minimal_filter(detail::dense_masks(s_, true), minimal)) out.push_back({{}, m, 0});
        break;
      case Kind::DGame:
        for (auto m : minimal_filter(detail::dense_masks(s_, false), minimal)) out.push_back({{}, m, 0});
        break;
      case Kind::PointOpen:
        for (auto m : minimal_filter(nonempty_opens_, minimal)) out.push_back({{}, m, 0});
        break;
      case Kind::OpenPicking:
        for (Point p = 0; p < t_.n; ++p) out.push_back({{}, 0, p});
        break;
    }
    return out;
  }

  /// Families of nonempty open sets passing the class predicate.
  std::vector<std::vector<Mask>> families(FamilyClass cls, bool minimal) const {
    const auto L = nonempty_opens_.size();
    if (L > 20) throw CapExceeded("too many open sets to enumerate families", L);
    auto ok = [&](std::uint64_t sel) {
      Mask u = 0;
      for (auto i : mask_elements(sel)) u |= nonempty_opens_[i];
      return cls == FamilyClass::Cover ? u == t_.all() : is_dense(t_, u);
    };
    std::vector<std::vector<Mask>> out;
    for (std::uint64_t sel = 1; sel < bit(L); ++sel) {
      if (!ok(sel)) continue;
      if (minimal) {
        bool reducible = false;
        for (auto i : mask_elements(sel))
          if (ok(sel & ~bit(i))) reducible = true;
        if (reducible) continue;
      }
      std::vector<Mask> fam;
      for (auto i : mask_elements(sel)) fam.push_back(nonempty_opens_[i]);
      out.push_back(std::move(fam));
    }
    return out;
  }

  Move to_move(const FinMove& f) const {
    switch (kind_.tag) {
      case Kind::SelCover:
      case Kind::SelCoverFin: {
        std::vector<OpenSet> members;
        for (auto m : f.members) members.push_back(s_.open_of_mask(m));
        return Move::of_family(CoverFamily::of("family", std::move(members)));
      }
      case Kind::DGame:
        return Move::of_dense(PointSet::of_mask("set", f.set));
      case Kind::OpenPicking:
        return Move::point(f.point);
      default:
        return Move::of_open(s_.open_of_mask(f.set));
    }
  }

  /// Canonical form of a concrete I move.
  FinMove canonical(const Move& mi) const {
    FinMove f;
    switch (mi.type) {
      case Move::Type::Family: {
        for (auto& u : mi.family.prefix(kDefaultSearchBound)) f.members.push_back(s_.open_mask(u));
        std::sort(f.members.begin(), f.members.end());
        f.members.erase(std::unique(f.members.begin(), f.members.end()), f.members.end());
        break;
      }
      case Move::Type::Dense:
        for (Point p = 0; p < t_.n; ++p)
          if (mi.dense.contains(p)) f.set |= bit(p);
        break;
      case Move::Type::Open:
        f.set = s_.open_mask(mi.open);
        break;
      case Move::Type::Point:
        f.point = mi.index;
        break;
      default:
        throw InvalidArgument("not an I move");
    }
    return f;
  }

  /// II's answers to a concrete I move. With `all` false, G_fin answers are
  /// collapsed to the single dominating "take everything" answer.
  std::vector<Response> responses(const Move& mi, bool all) const {
    std::vector<Response> out;
    switch (kind_.tag) {
      case Kind::SelCover: {
        const auto members = mi.family.prefix(kDefaultSearchBound);
        for (std::uint64_t k = 0; k < members.size(); ++k) out.push_back({s_.open_mask(members[k]), Move::pick(k)});
        break;
      }
      case Kind::SelCoverFin: {
        const auto members = mi.family.prefix(kDefaultSearchBound);
        if (!all) {
          std::vector<std::uint64_t> idx;
          Mask g = 0;
          for (std::uint64_t k = 0; k < members.size(); ++k) {
            idx.push_back(k);
            g |= s_.open_mask(members[k]);
          }
          out.push_back({g, Move::pick_many(idx)});
          break;
        }
        if (members.size() > 12) throw CapExceeded("too many finite selections", bit(members.size()));
        for (std::uint64_t sel = 0; sel < bit(members.size()); ++sel) {
          Mask g = 0;
          for (auto k : mask_elements(sel)) g |= s_.open_mask(members[k]);
          out.push_back({g, Move::pick_many(mask_elements(sel))});
        }
        break;
      }
      case Kind::SPlus:
      case Kind::PointOpen: {
        const Mask o = s_.open_mask(mi.open);
        for (auto p : mask_elements(o)) out.push_back({bit(p), Move::point(p)});
        break;
      }
      case Kind::DGame:
        for (Point p = 0; p < t_.n; ++p)
          if (mi.dense.contains(p)) out.push_back({bit(p), Move::point(p)});
        break;
      case Kind::SPlusFin: {
        const Mask o = s_.open_mask(mi.open);
        if (!all) {
          out.push_back({o, Move::pick_many(mask_elements(o))});
          break;
        }
        for (Mask sel = o;; sel = (sel - 1) & o) {
          out.push_back({sel, Move::pick_many(mask_elements(sel))});
          if (sel == 0) break;
        }
        std::reverse(out.begin(), out.end());
        break;
      }
      case Kind::OpenPicking:
        for (auto u : nonempty_opens_)
          if (u >> mi.index & 1) out.push_back({u, Move::of_open(s_.open_of_mask(u))});
        break;
    }
    return out;
  }

  Mask gain(const Move& mi, const Move& mii) const {
    const auto c = contribution(kind_, mi, mii);
    Mask g = 0;
    for (const auto& u : c.opens) g |= s_.open_mask(u);
    for (auto p : c.points) g |= bit(p);
    return g;
  }

  Mask accumulate(const History& h) const {
    Mask acc = 0;
    for (std::size_t i = 0; i + 1 < h.size(); i += 2) acc |= gain(h[i], h[i + 1]);
    return acc;
  }

 private:
  std::vector<Mask> minimal_filter(std::vector<Mask> sets, bool minimal) const {
    if (!minimal) return sets;
    std::vector<Mask> out;
    for (auto a : sets) {
      bool has_smaller = false;
      for (auto b : sets)
        if (b != a && subset_of(b, a)) has_smaller = true;
      if (!has_smaller) out.push_back(a);
    }
    return out;
  }

  Space s_;
  GameKind kind_;
  FinTopology t_;
  std::vector<Mask> nonempty_opens_;
};

// ---------------------------------------------------------------------------
// Verification

struct VerifyResult {
  bool ok = true;
  std::optional<Transcript> counterexample;
  std::string reason;
  std::uint64_t states = 0;
};

namespace detail {

class Verifier {
 public:
  Verifier(const FinGame& g, const Strategy& st, Player p, std::uint64_t depth_limit)
      : g_(g), st_(st), player_(p), target_(p == g.kind().target()), limit_(depth_limit), rules_(g.exact_rules()) {
    for (auto& f : g_.i_moves(false)) universe_.push_back(g_.to_move(f));
  }

  VerifyResult run() {
    History h;
    VerifyResult r;
    r.ok = explore(h, 0, 0);
    r.states = memo_.size();
    if (!r.ok) {
      Transcript t{g_.kind(), g_.space().label(), std::nullopt, {}};
      for (std::size_t i = 0; i + 1 < counter_.size(); i += 2) t.innings.emplace_back(counter_[i], counter_[i + 1]);
      r.counterexample = std::move(t);
      r.reason = reason_;
    }
    return r;
  }

 private:
  bool fail(const History& h, std::string why) {
    counter_ = h;
    reason_ = std::move(why);
    return false;
  }

  std::optional<Move> ask(History& h) {
    try {
      auto mv = st_.next(h);
      if (auto why = illegal_reason(g_.kind(), g_.space(), h, mv, rules_)) {
        reason_ = "illegal move: " + *why;
        return std::nullopt;
      }
      return mv;
    } catch (const Error& e) {
      reason_ = std::string("strategy failed: ") + e.what();
      return std::nullopt;
    }
  }

  bool explore(History& h, Mask acc, std::uint64_t depth) {
    if (g_.win(acc)) return target_ ? true : fail(h, "target reached");
    if (depth >= limit_) return target_ ? fail(h, "target not reached within the inning bound") : true;
    std::optional<std::pair<Mask, std::vector<std::uint64_t>>> state;
    if (st_.key) {
      state.emplace(acc, st_.key(h));
      if (memo_.count(*state)) return true;
      if (path_.count(*state)) return target_ ? fail(h, "opponent can repeat a position forever") : true;
      path_.insert(*state);
    }
    bool ok = true;
    if (player_ == Player::I) {
      auto mi = ask(h);
      if (!mi) {
        ok = false;
        counter_ = h;
      } else {
        h.push_back(*mi);
        for (auto& r : g_.responses(*mi, true)) {
          h.push_back(r.move);
          ok = explore(h, acc | r.gain, depth + 1);
          h.pop_back();
          if (!ok) break;
        }
        h.pop_back();
      }
    } else {
      for (const auto& mi : universe_) {
        h.push_back(mi);
        auto mii = ask(h);
        if (!mii) {
          counter_ = h;
          ok = false;
        } else {
          const Mask g = g_.gain(mi, *mii);
          h.push_back(*mii);
          ok = explore(h, acc | g, depth + 1);
          h.pop_back();
        }
        h.pop_back();
        if (!ok) break;
      }
    }
    if (state) {
      path_.erase(*state);
      if (ok) memo_.insert(*state);
    }
    return ok;
  }

  const FinGame& g_;
  const Strategy& st_;
  Player player_;
  bool target_;
  std::uint64_t limit_;
  Rules rules_;
  std::vector<Move> universe_;
  std::set<std::pair<Mask, std::vector<std::uint64_t>>> memo_, path_;
  History counter_;
  std::string reason_;
};

}  // namespace detail

/// Exhaustive check that `strat` achieves `player`'s goal against every
/// opposing move: reaching the target within `depth_limit` innings for the
/// target player, never reaching it (up to the bound) for the other.
inline VerifyResult verify_strategy(const FinGame& g, const Strategy& strat, Player player,
                                    std::uint64_t depth_limit = 0) {
  if (depth_limit == 0) depth_limit = 2 * (g.topology().n + 1) + bit(g.topology().n);
  return detail::Verifier(g, strat, player, depth_limit).run();
}

// ---------------------------------------------------------------------------
// Solving

inline constexpr std::uint64_t kUnranked = std::numeric_limits<std::uint64_t>::max();

struct SolveResult {
  Player winner = Player::II;
  /// Innings the target player needs from the start, when the target player wins.
  std::optional<std::uint64_t> bound;
  std::vector<std::uint64_t> rank;  // per accumulated set; kUnranked outside the attractor
  Strategy strategy;                // the winner's certified strategy
  bool certified = false;
  std::uint64_t i_moves = 0;
};

namespace detail {

inline std::uint64_t worst_rank(const FinGame& g, const std::vector<std::uint64_t>& rank, Mask acc, const Move& mi) {
  std::uint64_t w = 0;
  for (auto& r : g.responses(mi, false)) w = std::max(w, rank[acc | r.gain]);
  return w;
}

inline std::uint64_t best_rank(const FinGame& g, const std::vector<std::uint64_t>& rank, Mask acc, const Move& mi) {
  std::uint64_t b = kUnranked;
  for (auto& r : g.responses(mi, false)) b = std::min(b, rank[acc | r.gain]);
  return b;
}

}  // namespace detail

/// Index of the rank-greedy choice at `acc`: among II's responses to `mi`,
/// or among `universe` for I. The target player minimises rank, the other
/// player maximises it.
inline std::size_t rank_choice(const FinGame& g, const std::vector<std::uint64_t>& rank, Player p, Mask acc,
                               const Move* mi, const std::vector<Move>& universe = {}) {
  const bool target = p == g.kind().target();
  std::size_t best = 0;
  if (p == Player::II) {
    const auto rs = g.responses(*mi, false);
    if (rs.empty()) throw InvalidArgument("no legal answer");
    for (std::size_t i = 1; i < rs.size(); ++i) {
      const auto a = rank[acc | rs[i].gain], b = rank[acc | rs[best].gain];
      if (target ? a < b : a > b) best = i;
    }
    return best;
  }
  std::uint64_t best_v = 0;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    const auto v = target ? detail::worst_rank(g, rank, acc, universe[i]) : detail::best_rank(g, rank, acc, universe[i]);
    if (i == 0 || (target ? v < best_v : v > best_v)) {
      best_v = v;
      best = i;
    }
  }
  return best;
}

/// Strategy choosing by attractor rank (see rank_choice).
inline Strategy rank_strategy(std::shared_ptr<const FinGame> g, std::vector<std::uint64_t> rank, Player p) {
  auto ranks = std::make_shared<const std::vector<std::uint64_t>>(std::move(rank));
  const bool target = p == g->kind().target();
  const std::string name = std::string("solver-") + (target ? "attract" : "avoid");
  if (p == Player::II) {
    return {name,
            [g, ranks](const History& h) {
              const Mask acc = g->accumulate(History(h.begin(), h.end() - 1));
              return g->responses(h.back(), false)[rank_choice(*g, *ranks, Player::II, acc, &h.back())].move;
            },
            [](const History&) { return std::vector<std::uint64_t>{}; }};
  }
  std::vector<Move> universe;
  for (auto& f : g->i_moves(true)) universe.push_back(g->to_move(f));
  std::vector<std::size_t> table(ranks->size(), 0);
  for (Mask acc = 0; acc < ranks->size(); ++acc) table[acc] = rank_choice(*g, *ranks, Player::I, acc, nullptr, universe);
  auto moves = std::make_shared<const std::vector<Move>>(std::move(universe));
  auto tab = std::make_shared<const std::vector<std::size_t>>(std::move(table));
  return {name, [g, moves, tab](const History& h) { return (*moves)[(*tab)[g->accumulate(h)]]; },
          [](const History&) { return std::vector<std::uint64_t>{}; }};
}

inline SolveResult solve_game(const Space& s, const GameKind& kind, bool certify = true) {
  auto g = std::make_shared<const FinGame>(s, kind);
  const auto n = g->topology().n;
  std::vector<Move> universe;
  for (auto& f : g->i_moves(true)) universe.push_back(g->to_move(f));
  std::vector<std::vector<Mask>> gains(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i)
    for (auto& r : g->responses(universe[i], false)) gains[i].push_back(r.gain);

  std::vector<std::uint64_t> rank(bit(n), kUnranked);
  for (Mask acc = 0; acc < bit(n); ++acc)
    if (g->win(acc)) rank[acc] = 0;
  const bool target_ii = kind.target() == Player::II;
  for (std::uint64_t k = 1;; ++k) {
    std::vector<Mask> layer;
    for (Mask acc = 0; acc < bit(n); ++acc) {
      if (rank[acc] != kUnranked) continue;
      auto reached = [&](std::size_t i, bool all_responses) {
        bool any = false, every = true;
        for (auto& gr : gains[i]) {
          const bool r = rank[acc | gr] < k;
          any = any || r;
          every = every && r;
        }
        return all_responses ? (every && !gains[i].empty()) : any;
      };
      bool ok;
      if (target_ii) {
        ok = true;
        for (std::size_t i = 0; i < universe.size() && ok; ++i) ok = reached(i, false);
      } else {
        ok = false;
        for (std::size_t i = 0; i < universe.size() && !ok; ++i) ok = reached(i, true);
      }
      if (ok) layer.push_back(acc);
    }
    if (layer.empty()) break;
    for (auto acc : layer) rank[acc] = k;
  }

  SolveResult res;
  res.i_moves = universe.size();
  const bool target_wins = rank[0] != kUnranked;
  res.winner = target_wins ? kind.target() : other(kind.target());
  if (target_wins) res.bound = rank[0];
  res.rank = rank;
  res.strategy = rank_strategy(g, rank, res.winner);
  if (certify) {
    const std::uint64_t depth = target_wins ? *res.bound : bit(n) + 2;
    res.certified = verify_strategy(*g, res.strategy, res.winner, depth).ok;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Exhaustive universes

inline std::vector<std::vector<Mask>> enumerate_covers(const Space& s, FamilyClass cls) {
  return FinGame(s, GameKind::sel_cover(cls, cls)).families(cls, false);
}

/// Memoryless I strategy given as a table from accumulated set to move.
struct MemorylessTable {
  std::vector<Mask> states;
  std::vector<FinMove> moves;
};

inline Strategy table_strategy(std::shared_ptr<const FinGame> g, const MemorylessTable& table, std::string name) {
  auto moves = std::make_shared<std::map<Mask, Move>>();
  for (std::size_t i = 0; i < table.states.size(); ++i) (*moves)[table.states[i]] = g->to_move(table.moves[i]);
  auto fallback = std::make_shared<const Move>(g->to_move(table.moves.empty() ? g->i_moves(false).front() : table.moves.front()));
  return {std::move(name),
          [g, moves, fallback](const History& h) {
            auto it = moves->find(g->accumulate(h));
            return it == moves->end() ? *fallback : it->second;
          },
          [](const History&) { return std::vector<std::uint64_t>{}; }};
}

/// All memoryless strategies for I: functions from the non-target accumulated
/// sets to legal I moves. Throws CapExceeded with the exact count above cap.
inline std::vector<MemorylessTable> enumerate_memoryless_tables(const FinGame& g, Player player,
                                                                std::uint64_t cap = 100000) {
  if (player != Player::I)
    throw CapExceeded("II strategy tables range over (state, I move) pairs; not enumerated", 0);
  std::vector<Mask> states;
  for (Mask acc = 0; acc < bit(g.topology().n); ++acc)
    if (!g.win(acc)) states.push_back(acc);
  const auto universe = g.i_moves(false);
  long double count = 1;
  for (std::size_t i = 0; i < states.size(); ++i) count *= static_cast<long double>(universe.size());
  if (count > cap) {
    const auto exact = count > 1.8e19L ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(count);
    throw CapExceeded("memoryless strategy count exceeds cap " + std::to_string(cap), exact);
  }
  std::vector<MemorylessTable> out;
  std::vector<std::size_t> digits(states.size(), 0);
  while (true) {
    MemorylessTable t{states, {}};
    for (auto d : digits) t.moves.push_back(universe[d]);
    out.push_back(std::move(t));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == universe.size()) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

inline std::vector<Strategy> enumerate_memoryless_strategies(std::shared_ptr<const FinGame> g, Player player,
                                                             std::uint64_t cap = 100000) {
  std::vector<Strategy> out;
  std::uint64_t k = 0;
  for (auto& t : enumerate_memoryless_tables(*g, player, cap))
    out.push_back(table_strategy(g, t, "memoryless#" + std::to_string(k++)));
  return out;
}

}  // namespace topogame
