#pragma once

// Referees, strategies, transcripts and horizon-bounded verdicts for the
// selection games and their pointing duals.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pixleyroy.hpp"

namespace topogame {

enum class Player { I, II };

inline const char* to_string(Player p) { return p == Player::I ? "I" : "II"; }
inline Player other(Player p) { return p == Player::I ? Player::II : Player::I; }

enum class Kind { SelCover, SelCoverFin, SPlus, SPlusFin, DGame, PointOpen, OpenPicking };
enum class FamilyClass { Cover, DenseUnion };

inline const char* to_string(FamilyClass c) { return c == FamilyClass::Cover ? "Cover" : "DenseUnion"; }

struct GameKind {
  Kind tag = Kind::SelCover;
  FamilyClass a = FamilyClass::Cover;
  FamilyClass b = FamilyClass::DenseUnion;

  static GameKind sel_cover(FamilyClass a = FamilyClass::Cover, FamilyClass b = FamilyClass::DenseUnion) {
    return {Kind::SelCover, a, b};
  }
  static GameKind sel_cover_fin(FamilyClass a = FamilyClass::Cover, FamilyClass b = FamilyClass::DenseUnion) {
    return {Kind::SelCoverFin, a, b};
  }
  static GameKind splus() { return {Kind::SPlus}; }
  static GameKind splus_fin() { return {Kind::SPlusFin}; }
  static GameKind dgame() { return {Kind::DGame}; }
  static GameKind point_open() { return {Kind::PointOpen}; }
  static GameKind open_picking() { return {Kind::OpenPicking}; }

  bool family_game() const { return tag == Kind::SelCover || tag == Kind::SelCoverFin; }
  bool fin() const { return tag == Kind::SelCoverFin || tag == Kind::SPlusFin; }
  /// II's contributions are open sets (rather than points).
  bool opens_accumulate() const { return family_game() || tag == Kind::OpenPicking; }
  /// The player whose goal is the target predicate.
  Player target() const {
    return (tag == Kind::PointOpen || tag == Kind::OpenPicking) ? Player::I : Player::II;
  }
  /// Target predicate on the accumulated set: dense, or a cover.
  FamilyClass target_class() const { return family_game() ? b : FamilyClass::DenseUnion; }

  std::string name() const {
    switch (tag) {
      case Kind::SelCover:
        return std::string("SelCover(") + to_string(a) + "," + to_string(b) + ")";
      case Kind::SelCoverFin:
        return std::string("SelCoverFin(") + to_string(a) + "," + to_string(b) + ")";
      case Kind::SPlus:
        return "SPlus";
      case Kind::SPlusFin:
        return "SPlusFin";
      case Kind::DGame:
        return "DGame";
      case Kind::PointOpen:
        return "PointOpen";
      case Kind::OpenPicking:
        return "OpenPicking";
    }
    return "?";
  }

  static GameKind parse(const std::string& text) {
    for (auto t : {Kind::SPlus, Kind::SPlusFin, Kind::DGame, Kind::PointOpen, Kind::OpenPicking})
      if (GameKind{t}.name() == text) return {t};
    for (auto t : {Kind::SelCover, Kind::SelCoverFin})
      for (auto a : {FamilyClass::Cover, FamilyClass::DenseUnion})
        for (auto b : {FamilyClass::Cover, FamilyClass::DenseUnion})
          if (GameKind{t, a, b}.name() == text) return {t, a, b};
    if (text == "SelCover") return sel_cover();
    if (text == "SelCoverFin") return sel_cover_fin();
    throw InvalidArgument("unknown game kind '" + text + "'");
  }

  friend bool operator==(const GameKind&, const GameKind&) = default;
};

struct IllegalMove : Error {
  Player player;
  std::uint64_t inning;
  IllegalMove(Player p, std::uint64_t n, const std::string& why)
      : Error(std::string("illegal move by ") + to_string(p) + " at inning " + std::to_string(n) + ": " + why),
        player(p),
        inning(n) {}
};

struct StrategyFailure : Error {
  Player player;
  std::uint64_t inning;
  StrategyFailure(Player p, std::uint64_t n, const std::string& why)
      : Error(std::string("strategy of ") + to_string(p) + " failed at inning " + std::to_string(n) + ": " + why),
        player(p),
        inning(n) {}
};

struct Move {
  enum class Type { Family, Dense, Pick, PickMany, Point, Open };
  Type type = Type::Pick;
  CoverFamily family;
  PointSet dense;
  std::uint64_t index = 0;  // Pick index or point index
  std::vector<std::uint64_t> indices;
  OpenSet open;
  std::string note;

  static Move of_family(CoverFamily f) {
    Move m;
    m.type = Type::Family;
    m.family = std::move(f);
    return m;
  }
  static Move of_dense(PointSet d) {
    Move m;
    m.type = Type::Dense;
    m.dense = std::move(d);
    return m;
  }
  static Move pick(std::uint64_t k) {
    Move m;
    m.type = Type::Pick;
    m.index = k;
    return m;
  }
  static Move pick_many(std::vector<std::uint64_t> ks) {
    Move m;
    m.type = Type::PickMany;
    m.indices = std::move(ks);
    return m;
  }
  static Move point(Point p) {
    Move m;
    m.type = Type::Point;
    m.index = p;
    return m;
  }
  static Move of_open(OpenSet u) {
    Move m;
    m.type = Type::Open;
    m.open = std::move(u);
    return m;
  }
};

using History = std::vector<Move>;

inline std::uint64_t inning_of(const History& h) { return h.size() / 2; }
inline Player mover(const History& h) { return h.size() % 2 == 0 ? Player::I : Player::II; }

/// Deterministic move oracle. `key`, when present, summarises everything about
/// the history the strategy depends on besides the accumulated target set;
/// verification memoises on it.
struct Strategy {
  std::string name;
  std::function<Move(const History&)> next;
  std::function<std::vector<std::uint64_t>(const History&)> key;
};

struct Rules {
  std::uint64_t legality_horizon = 8;
  std::uint64_t search_bound = kDefaultSearchBound;
};

/// Open sets or points II adds to the accumulated target in one inning.
struct Contribution {
  std::vector<OpenSet> opens;
  std::vector<Point> points;
};

inline Contribution contribution(const GameKind& kind, const Move& mi, const Move& mii) {
  Contribution c;
  switch (kind.tag) {
    case Kind::SelCover:
      c.opens.push_back(mi.family.at(mii.index));
      break;
    case Kind::SelCoverFin:
      for (auto k : mii.indices) c.opens.push_back(mi.family.at(k));
      break;
    case Kind::OpenPicking:
      c.opens.push_back(mii.open);
      break;
    case Kind::SPlusFin:
      c.points = mii.indices;
      break;
    default:
      c.points.push_back(mii.index);
  }
  return c;
}

namespace detail {

inline bool point_in_space(const Space& s, Point p) { return !s.point_count() || p < *s.point_count(); }

inline bool bases_valid(const Space& s, const OpenSet& u) {
  if (!s.base_count()) return true;
  for (auto b : u.parts())
    if (b >= *s.base_count()) return false;
  return true;
}

inline std::uint64_t clamp_bases(const Space& s, std::uint64_t m) {
  return s.base_count() ? std::min(m, *s.base_count()) : m;
}

}  // namespace detail

/// Reason a move is illegal at this position, or nullopt when it is legal.
/// Promised classes (dense, cover) are checked at the legality horizon only.
inline std::optional<std::string> illegal_reason(const GameKind& kind, const Space& s, const History& h,
                                                 const Move& mv, const Rules& rules = {}) {
  const auto who = mover(h);
  const auto hz = rules.legality_horizon;
  using T = Move::Type;
  auto expect = [&](T t, const char* what) -> std::optional<std::string> {
    if (mv.type != t) return std::string("expected ") + what;
    return std::nullopt;
  };
  if (who == Player::I) {
    switch (kind.tag) {
      case Kind::SelCover:
      case Kind::SelCoverFin: {
        if (auto e = expect(T::Family, "a family of open sets")) return e;
        const auto first = mv.family.prefix(std::max<std::uint64_t>(hz, 1));
        if (first.empty()) return "empty family";
        for (const auto& u : first) {
          if (u.empty()) return "family contains the empty set";
          if (!detail::bases_valid(s, u)) return "family member uses an unknown base element";
        }
        const Tri t = kind.a == FamilyClass::Cover ? is_cover_at_horizon(s, mv.family, hz, rules.search_bound)
                                                   : family_dense_at_horizon(s, mv.family, detail::clamp_bases(s, hz),
                                                                             rules.search_bound);
        if (t == Tri::False)
          return kind.a == FamilyClass::Cover ? "family is not a cover" : "family union is not dense";
        return std::nullopt;
      }
      case Kind::SPlus:
      case Kind::SPlusFin: {
        if (auto e = expect(T::Open, "a dense open set")) return e;
        if (mv.open.empty() || !detail::bases_valid(s, mv.open)) return "not a nonempty open set";
        if (open_dense_at_horizon(s, mv.open, detail::clamp_bases(s, hz), rules.search_bound) == Tri::False)
          return "open set is not dense";
        return std::nullopt;
      }
      case Kind::DGame: {
        if (auto e = expect(T::Dense, "a dense point set")) return e;
        if (dense_at_horizon(s, mv.dense, detail::clamp_bases(s, hz), rules.search_bound) == Tri::False)
          return "point set is not dense";
        return std::nullopt;
      }
      case Kind::PointOpen: {
        if (auto e = expect(T::Open, "a nonempty open set")) return e;
        if (mv.open.empty() || !detail::bases_valid(s, mv.open)) return "not a nonempty open set";
        return std::nullopt;
      }
      case Kind::OpenPicking: {
        if (auto e = expect(T::Point, "a point")) return e;
        if (!detail::point_in_space(s, mv.index)) return "no such point";
        return std::nullopt;
      }
    }
    return "unknown game";
  }
  if (h.empty()) return "II cannot move first";
  const Move& mi = h.back();
  switch (kind.tag) {
    case Kind::SelCover: {
      if (auto e = expect(T::Pick, "a pick")) return e;
      if (!mi.family.get(mv.index)) return "pick index outside the family";
      return std::nullopt;
    }
    case Kind::SelCoverFin: {
      if (auto e = expect(T::PickMany, "a finite pick")) return e;
      for (auto k : mv.indices)
        if (!mi.family.get(k)) return "pick index outside the family";
      return std::nullopt;
    }
    case Kind::SPlus:
    case Kind::PointOpen: {
      if (auto e = expect(T::Point, "a point")) return e;
      if (!detail::point_in_space(s, mv.index) || !s.contains(mi.open, mv.index)) return "point outside I's open set";
      return std::nullopt;
    }
    case Kind::SPlusFin: {
      if (auto e = expect(T::PickMany, "a finite set of points")) return e;
      for (auto p : mv.indices)
        if (!detail::point_in_space(s, p) || !s.contains(mi.open, p)) return "point outside I's open set";
      return std::nullopt;
    }
    case Kind::DGame: {
      if (auto e = expect(T::Point, "a point")) return e;
      if (!detail::point_in_space(s, mv.index) || !mi.dense.contains(mv.index)) return "point outside I's set";
      return std::nullopt;
    }
    case Kind::OpenPicking: {
      if (auto e = expect(T::Open, "an open set")) return e;
      if (!detail::bases_valid(s, mv.open) || !s.contains(mv.open, mi.index)) return "open set misses I's point";
      return std::nullopt;
    }
  }
  return "unknown game";
}

inline bool legal(const GameKind& kind, const Space& s, const History& h, const Move& mv, const Rules& rules = {}) {
  return !illegal_reason(kind, s, h, mv, rules);
}

struct Transcript {
  GameKind kind;
  std::string space;
  std::optional<std::uint64_t> seed;
  std::vector<std::pair<Move, Move>> innings;

  History history() const {
    History h;
    for (const auto& [a, b] : innings) {
      h.push_back(a);
      h.push_back(b);
    }
    return h;
  }
};

inline Transcript play(const GameKind& kind, const Space& s, const Strategy& one, const Strategy& two,
                       std::uint64_t innings, const Rules& rules = {}, std::optional<std::uint64_t> seed = {}) {
  Transcript t{kind, s.label(), seed, {}};
  History h;
  auto ask = [&](const Strategy& st, Player p, std::uint64_t n) {
    Move mv;
    try {
      mv = st.next(h);
    } catch (const StrategyFailure&) {
      throw;
    } catch (const Error& e) {
      throw StrategyFailure(p, n, e.what());
    }
    if (auto why = illegal_reason(kind, s, h, mv, rules)) throw IllegalMove(p, n, *why);
    h.push_back(mv);
    return mv;
  };
  for (std::uint64_t n = 0; n < innings; ++n) {
    auto a = ask(one, Player::I, n);
    auto b = ask(two, Player::II, n);
    t.innings.emplace_back(std::move(a), std::move(b));
  }
  return t;
}

struct Verdict {
  enum class Outcome { TargetMet, NotYet, Indeterminate };
  std::uint64_t horizon = 0;
  Outcome outcome = Outcome::NotYet;
  std::uint64_t inning = 0;  // N
  Player beneficiary = Player::II;

  bool met() const { return outcome == Outcome::TargetMet; }
  std::string str() const {
    switch (outcome) {
      case Outcome::TargetMet:
        return std::string("Win") + to_string(beneficiary) + "(" + std::to_string(inning) + ")";
      case Outcome::NotYet:
        return "NotYetByInning(" + std::to_string(inning) + ")";
      case Outcome::Indeterminate:
        return "Indeterminate";
    }
    return "?";
  }
};

/// Earliest inning count after which the accumulated target passes the kind's
/// predicate at horizon m.
inline Verdict evaluate(const GameKind& kind, const Space& s, const Transcript& t, std::uint64_t m,
                        std::uint64_t search_bound = kDefaultSearchBound) {
  std::vector<Contribution> cs;
  for (const auto& [a, b] : t.innings) cs.push_back(contribution(kind, a, b));
  Verdict v;
  v.beneficiary = kind.target();
  const bool cover = kind.target_class() == FamilyClass::Cover;
  const std::uint64_t limit = cover ? (s.point_count() ? std::min(m, *s.point_count()) : m)
                                    : detail::clamp_bases(s, m);
  v.horizon = limit;
  std::uint64_t worst = 0;
  bool unknown = false, missing = false;
  for (std::uint64_t x = 0; x < limit; ++x) {
    std::optional<std::uint64_t> first;
    bool undecided = false;
    for (std::uint64_t i = 0; i < cs.size() && !first; ++i) {
      for (const auto& u : cs[i].opens) {
        Tri hit = cover ? tri(s.contains(u, x)) : s.meets(x, u, search_bound);
        if (hit == Tri::True) {
          first = i;
          break;
        }
        if (hit == Tri::Indeterminate) undecided = true;
      }
      for (auto p : cs[i].points)
        if (!first && s.member(p, x)) first = i;
    }
    if (first) {
      worst = std::max(worst, *first + 1);
    } else if (undecided) {
      unknown = true;
    } else {
      missing = true;
    }
  }
  if (!missing && !unknown) {
    v.outcome = Verdict::Outcome::TargetMet;
    v.inning = worst;
  } else if (unknown) {
    v.outcome = Verdict::Outcome::Indeterminate;
    v.inning = cs.size();
  } else {
    v.outcome = Verdict::Outcome::NotYet;
    v.inning = cs.size();
  }
  return v;
}

// ---------------------------------------------------------------------------
// Adversaries

/// Produces a move from the history and a random word.
using MoveSource = std::function<Move(const History&, std::uint64_t)>;
/// Candidate moves at a position.
using MovePool = std::function<std::vector<Move>(const History&)>;

/// Seeded adversary: the random word at each turn is mix(seed, turn).
inline Strategy random_adversary(std::string name, std::uint64_t seed, MoveSource source) {
  return {std::move(name), [seed, source](const History& h) { return source(h, mix(seed, h.size())); }, {}};
}

inline Strategy random_adversary(std::uint64_t seed, MovePool pool) {
  return random_adversary("pool", seed, [pool](const History& h, std::uint64_t r) {
    auto moves = pool(h);
    if (moves.empty()) throw InvalidArgument("empty move pool");
    return moves[r % moves.size()];
  });
}

/// I in SelCover: member k is a random basic neighbourhood of point k.
inline Strategy random_cover_adversary(const Space& s, std::uint64_t seed) {
  return random_adversary("random-basic-cover", seed, [s](const History&, std::uint64_t r) {
    return Move::of_family({"basic-cover", s.point_count(), [s, r](std::uint64_t k) {
                              return OpenSet::basic(s.neighborhood(k, mix(r, k)));
                            }});
  });
}

namespace detail {

inline std::vector<Mask> dense_masks(const Space& s, bool open_only) {
  std::vector<Mask> out;
  const auto n = s.n();
  for (Mask m = 1; m <= full_mask(n); ++m) {
    bool dense = true;
    for (Base b = 0; b < s.nbases() && dense; ++b) dense = (s.base_mask(b) & m) != 0;
    if (!dense) continue;
    if (open_only) {
      Mask u = 0;
      for (Base b = 0; b < s.nbases(); ++b)
        if (subset_of(s.base_mask(b), m)) u |= s.base_mask(b);
      if (u != m) continue;
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace detail

/// I in DGame. On the rationals: the dyadics translated by a random rational in [0, 1).
inline Strategy random_dense_set_adversary(const Space& s, std::uint64_t seed) {
  if (s.has_masks()) {
    const auto masks = detail::dense_masks(s, false);
    return random_adversary("random-dense-set", seed, [masks](const History&, std::uint64_t r) {
      return Move::of_dense(PointSet::of_mask("dense", masks[r % masks.size()]));
    });
  }
  if (s.label() != "rationals") throw InvalidArgument("no dense-set generator for " + s.label());
  return random_adversary("random-dense-set", seed, [](const History&, std::uint64_t r) {
    const auto x = q::rational_at(r % 4096);
    const auto c = x - q::floor(x);
    return Move::of_dense({"dyadics+" + std::to_string(r % 4096),
                           [c](Point p) { return q::is_dyadic(q::rational_at(p) - c); },
                           [c](std::uint64_t k) -> std::optional<Point> { return q::rational_index(q::dyadic_at(k) + c); }});
  });
}

/// I in SPlus: finite spaces draw from the dense open sets; elsewhere a union
/// of random base elements inside the first `horizon` base elements.
inline Strategy random_dense_open_adversary(const Space& s, std::uint64_t seed, std::uint64_t horizon) {
  if (s.has_masks()) {
    const auto masks = detail::dense_masks(s, true);
    return random_adversary("random-dense-open", seed, [s, masks](const History&, std::uint64_t r) {
      return Move::of_open(s.open_of_mask(masks[r % masks.size()]));
    });
  }
  return random_adversary("random-dense-open", seed, [s, horizon](const History&, std::uint64_t r) {
    std::vector<Base> parts;
    for (Base b = 0; b < horizon; ++b) {
      const auto w = s.witness(b);
      Base pick = b;
      for (std::uint64_t tries = 0; tries < 64; ++tries) {
        const auto c = s.neighborhood(w, mix(r, b * 64 + tries));
        if (s.within(c, OpenSet::basic(b)) == Tri::True) {
          pick = c;
          break;
        }
      }
      parts.push_back(pick);
    }
    return Move::of_open(OpenSet(std::move(parts)));
  });
}

/// I in OpenPicking: a random point below `range` (or of the space).
inline Strategy random_point_adversary(const Space& s, std::uint64_t seed, std::uint64_t range = 64) {
  if (s.point_count()) range = *s.point_count();
  return random_adversary("random-point", seed, [range](const History&, std::uint64_t r) { return Move::point(r % range); });
}

/// I in PointOpen: a random base element below `range`.
inline Strategy random_open_adversary(const Space& s, std::uint64_t seed, std::uint64_t range = 64) {
  if (s.base_count()) range = *s.base_count();
  return random_adversary("random-open", seed,
                          [range](const History&, std::uint64_t r) { return Move::of_open(OpenSet::basic(r % range)); });
}

/// II in OpenPicking: a random basic neighbourhood of I's point.
inline Strategy random_neighborhood_responder(const Space& s, std::uint64_t seed) {
  return random_adversary("random-neighbourhood", seed, [s](const History& h, std::uint64_t r) {
    return Move::of_open(OpenSet::basic(s.neighborhood(h.back().index, r)));
  });
}

/// II in SelCover: a random index among the first `range` members.
inline Strategy random_pick_responder(std::uint64_t seed, std::uint64_t range = 8) {
  return random_adversary("random-pick", seed, [range](const History& h, std::uint64_t r) {
    const auto& fam = h.back().family;
    const std::uint64_t lim = fam.size ? std::min(*fam.size, range) : range;
    return Move::pick(r % lim);
  });
}

/// II in SPlus, PointOpen or DGame: a random point of I's set among the first
/// `range` candidates.
inline Strategy random_point_responder(const Space& s, std::uint64_t seed, std::uint64_t range = 8,
                                       std::uint64_t search_bound = kDefaultSearchBound) {
  return random_adversary("random-point-in", seed, [s, range, search_bound](const History& h, std::uint64_t r) {
    const Move& mi = h.back();
    std::vector<Point> found;
    for (std::uint64_t k = 0; k < search_bound && found.size() < range; ++k) {
      if (mi.type == Move::Type::Dense) {
        auto p = mi.dense.enumerate(k);
        if (!p) break;
        found.push_back(*p);
      } else {
        if (s.point_count() && k >= *s.point_count()) break;
        if (s.contains(mi.open, k)) found.push_back(k);
      }
    }
    if (found.empty()) throw SearchBoundExceeded("no point found in I's move");
    return Move::point(found[r % found.size()]);
  });
}

// ---------------------------------------------------------------------------
// Constructive strategies

/// II in DGame: at inning n, the first enumerated point of I's dense set
/// lying in pibase(n).
inline Strategy pibase_strategy_DGame(const Space& s, Enumeration<OpenSet> pibase,
                                      std::uint64_t search_bound = kDefaultSearchBound) {
  return {"pibase(" + pibase.label + ")",
          [s, pibase, search_bound](const History& h) {
            const auto n = inning_of(h);
            const auto target = pibase.get(pibase.size ? n % *pibase.size : n);
            if (!target || target->empty()) throw InvalidArgument("pi-base member is empty");
            const auto& d = h.back().dense;
            for (std::uint64_t k = 0; k < search_bound; ++k) {
              auto p = d.enumerate(k);
              if (!p) break;
              if (s.contains(*target, *p)) return Move::point(*p);
            }
            throw SearchBoundExceeded("dense set misses pi-base member " + std::to_string(n));
          },
          [pibase](const History& h) { return std::vector<std::uint64_t>{pibase.size ? inning_of(h) % *pibase.size : inning_of(h)}; }};
}

/// II in SPlus: at inning n, the first point of I's open set lying in pibase(n).
inline Strategy pibase_strategy_SPlus(const Space& s, Enumeration<OpenSet> pibase,
                                      std::uint64_t search_bound = kDefaultSearchBound) {
  return {"pibase-splus(" + pibase.label + ")",
          [s, pibase, search_bound](const History& h) {
            const auto n = inning_of(h);
            const auto target = pibase.at(pibase.size ? n % *pibase.size : n);
            const auto& o = h.back().open;
            const std::uint64_t lim = s.point_count() ? std::min(*s.point_count(), search_bound) : search_bound;
            for (Point p = 0; p < lim; ++p)
              if (s.contains(target, p) && s.contains(o, p)) return Move::point(p);
            throw SearchBoundExceeded("open set misses pi-base member " + std::to_string(n));
          },
          [pibase](const History& h) { return std::vector<std::uint64_t>{pibase.size ? inning_of(h) % *pibase.size : inning_of(h)}; }};
}

/// The base itself as a pi-base enumeration.
inline Enumeration<OpenSet> base_enumeration(const Space& s) {
  return {"base", s.base_count(), [](std::uint64_t n) { return OpenSet::basic(n); }};
}

/// II in SelCover(Cover, .): at inning n, the first member of I's family
/// containing targets.enumerate(n).
inline Strategy enumeration_cover_strategy(const Space& s, PointSet targets,
                                           std::uint64_t search_bound = kDefaultSearchBound) {
  return {"enumerate(" + targets.label + ")",
          [s, targets, search_bound](const History& h) {
            const auto n = inning_of(h);
            auto x = targets.enumerate(n);
            if (!x) x = targets.enumerate(0);
            const auto& fam = h.back().family;
            for (std::uint64_t k = 0; k < search_bound; ++k) {
              auto u = fam.get(k);
              if (!u) break;
              if (s.contains(*u, *x)) return Move::pick(k);
            }
            throw SearchBoundExceeded("family does not cover target " + std::to_string(*x));
          },
          [](const History& h) { return std::vector<std::uint64_t>{inning_of(h)}; }};
}

/// I in OpenPicking: the witness of base element n at inning n (cyclic on
/// finite bases).
inline Strategy witness_pointing_strategy(const Space& s) {
  return {"base-witness",
          [s](const History& h) {
            auto n = inning_of(h);
            if (s.base_count()) n %= *s.base_count();
            return Move::point(s.witness(n));
          },
          [s](const History& h) {
            auto n = inning_of(h);
            if (s.base_count()) n %= *s.base_count();
            return std::vector<std::uint64_t>{n};
          }};
}

/// Fixed moves, one per inning, repeating the last one.
inline Strategy scripted(std::string name, std::vector<Move> moves) {
  return {std::move(name), [moves](const History& h) {
            const auto n = std::min<std::uint64_t>(inning_of(h), moves.size() - 1);
            return moves[n];
          },
          {}};
}

/// II in SelCover: always the first member.
inline Strategy first_member_strategy() {
  return {"first-member", [](const History&) { return Move::pick(0); },
          [](const History&) { return std::vector<std::uint64_t>{}; }};
}

}  // namespace topogame
