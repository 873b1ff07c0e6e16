#pragma once

// Strategy transformers: duality between the pointing games and the selection
// games, the product pointing strategy, and the union / restriction / lifting
// combinators for the dense-open selection game.

#include "finsolve.hpp"

namespace topogame {

struct ClaimViolation : Error {
  using Error::Error;
};

/// The two dual pairings: OpenPicking with SelCover(Cover, DenseUnion), and
/// PointOpen with DGame.
enum class DualPair { PoOd, OpDd };

inline GameKind pointing_game(DualPair p) {
  return p == DualPair::PoOd ? GameKind::open_picking() : GameKind::point_open();
}
inline GameKind selection_game(DualPair p) {
  return p == DualPair::PoOd ? GameKind::sel_cover() : GameKind::dgame();
}
inline const char* to_string(DualPair p) { return p == DualPair::PoOd ? "po-od" : "op-dd"; }
inline DualPair parse_pair(const std::string& s) {
  if (s == "po-od") return DualPair::PoOd;
  if (s == "op-dd") return DualPair::OpDd;
  throw InvalidArgument("unknown dual pair '" + s + "'");
}

namespace detail {

inline std::optional<std::uint64_t> first_member_containing(const Space& s, const CoverFamily& fam, Point x,
                                                            std::uint64_t bound) {
  for (std::uint64_t k = 0; k < bound; ++k) {
    auto u = fam.get(k);
    if (!u) break;
    if (s.contains(*u, x)) return k;
  }
  return std::nullopt;
}

inline std::optional<Point> first_point_in(const Space& s, const PointSet& d, const OpenSet& o, std::uint64_t bound) {
  for (std::uint64_t k = 0; k < bound; ++k) {
    auto p = d.enumerate(k);
    if (!p) break;
    if (s.contains(o, *p)) return p;
  }
  return std::nullopt;
}

inline std::optional<Point> first_point_of_open(const Space& s, const OpenSet& o, std::uint64_t bound) {
  const std::uint64_t lim = s.point_count() ? std::min(*s.point_count(), bound) : bound;
  for (Point p = 0; p < lim; ++p)
    if (s.contains(o, p)) return p;
  return std::nullopt;
}

inline Mask points_mask(const std::vector<Point>& pts) {
  Mask m = 0;
  for (auto p : pts)
    if (p < 64) m |= bit(p);
  return m;
}

inline std::vector<std::uint64_t> key_of(const Strategy& st, const History& h) {
  if (st.key) return st.key(h);
  return {h.size()};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Duality, forward direction (winning I in the pointing game -> winning II in
// the selection game).

/// Replays the pointing game alongside a selection game: I's point is tau's
/// next point and II's answer the selected member (or point).
inline Strategy dual_forward(DualPair pair, const Space& s, Strategy tau,
                             std::uint64_t search_bound = kDefaultSearchBound) {
  struct Replay {
    static History pointing(DualPair pair, const Strategy& tau, const History& h) {
      History ph;
      for (std::size_t i = 0; i + 1 < h.size(); i += 2) {
        ph.push_back(tau.next(ph));
        if (pair == DualPair::PoOd)
          ph.push_back(Move::of_open(h[i].family.at(h[i + 1].index)));
        else
          ph.push_back(Move::point(h[i + 1].index));
      }
      return ph;
    }
  };
  return {"dual-forward[" + std::string(to_string(pair)) + "](" + tau.name + ")",
          [pair, s, tau, search_bound](const History& h) {
            const History ph = Replay::pointing(pair, tau, History(h.begin(), h.end() - 1));
            const Move aim = tau.next(ph);
            if (pair == DualPair::PoOd) {
              auto k = detail::first_member_containing(s, h.back().family, aim.index, search_bound);
              if (!k) throw SearchBoundExceeded("family omits the pointing strategy's point " + std::to_string(aim.index));
              return Move::pick(*k);
            }
            auto p = detail::first_point_in(s, h.back().dense, aim.open, search_bound);
            if (!p) throw SearchBoundExceeded("point set misses the pointing strategy's open set");
            return Move::point(*p);
          },
          [pair, tau](const History& h) { return detail::key_of(tau, Replay::pointing(pair, tau, h)); }};
}

// ---------------------------------------------------------------------------
// Duality, converse (finite spaces): the Claim point.

struct ClaimResult {
  Move move;                    // a point (po-od) or a basic open set (op-dd)
  std::vector<Mask> responses;  // sigma's answers over all of I's legal moves
  Mask avoided = 0;             // union of the never-answered opens / set of never-picked points
};

/// Exhaustively collects sigma's answers to every legal I move after
/// `history`; returns a point all of whose neighbourhoods are answers (po-od),
/// or a basic open set all of whose points are answers (op-dd).
inline ClaimResult claim(DualPair pair, const Strategy& sigma, const Space& s, const History& history) {
  const FinGame g(s, selection_game(pair));
  const auto universe = g.i_moves(false);
  ClaimResult out;
  std::set<Mask> answered;
  History h = history;
  for (const auto& f : universe) {
    h.push_back(g.to_move(f));
    const Move ans = sigma.next(h);
    h.pop_back();
    if (pair == DualPair::PoOd) {
      if (ans.type != Move::Type::Pick || ans.index >= f.members.size())
        throw ClaimViolation("sigma answered outside the cover");
      answered.insert(f.members[ans.index]);
    } else {
      if (ans.type != Move::Type::Point || !(f.set >> ans.index & 1))
        throw ClaimViolation("sigma answered outside the dense set");
      answered.insert(bit(ans.index));
    }
  }
  out.responses.assign(answered.begin(), answered.end());
  const auto& t = g.topology();
  if (pair == DualPair::PoOd) {
    for (auto v : t.opens)
      if (!answered.count(v)) out.avoided |= v;
    if (out.avoided == t.all()) throw ClaimViolation("never-chosen open sets cover the space");
    out.move = Move::point(static_cast<Point>(std::countr_zero(~out.avoided & t.all())));
    return out;
  }
  Mask picked = 0;
  for (auto m : answered) picked |= m;
  out.avoided = t.all() & ~picked;
  for (Base b = 0; b < s.nbases(); ++b)
    if ((s.base_mask(b) & out.avoided) == 0) {
      out.move = Move::of_open(OpenSet::basic(b));
      return out;
    }
  throw ClaimViolation("never-picked points are dense");
}

inline Move dual_backward_finite(DualPair pair, const Strategy& sigma, const Space& s, const History& history) {
  return claim(pair, sigma, s, history).move;
}

/// I in the pointing game built from sigma by repeated use of the Claim: past
/// answers are matched to I moves of the selection game that provoke them.
inline Strategy dual_backward_strategy(DualPair pair, const Space& s, Strategy sigma) {
  auto g = std::make_shared<const FinGame>(s, selection_game(pair));
  auto universe = std::make_shared<std::vector<Move>>();
  for (auto& f : g->i_moves(false)) universe->push_back(g->to_move(f));
  auto replay = [pair, g, universe, sigma](const History& ph) {
    History sh;
    for (std::size_t i = 0; i + 1 < ph.size(); i += 2) {
      bool matched = false;
      for (const auto& mi : *universe) {
        sh.push_back(mi);
        const Move ans = sigma.next(sh);
        const bool same = pair == DualPair::PoOd
                              ? g->space().open_mask(mi.family.at(ans.index)) == g->space().open_mask(ph[i + 1].open)
                              : ans.index == ph[i + 1].index;
        if (same) {
          sh.push_back(ans);
          matched = true;
          break;
        }
        sh.pop_back();
      }
      if (!matched) throw ClaimViolation("opponent's answer is not a response of sigma");
    }
    return sh;
  };
  return {"dual-backward[" + std::string(to_string(pair)) + "](" + sigma.name + ")",
          [pair, s, sigma, replay](const History& ph) { return dual_backward_finite(pair, sigma, s, replay(ph)); },
          [sigma, replay](const History& ph) { return detail::key_of(sigma, replay(ph)); }};
}

// ---------------------------------------------------------------------------
// Duality for player II in the pointing game / player I in the selection game.

/// I in the selection game: the family { tau(history, x) : x a point } (po-od),
/// or the point set { tau(history, B) : B a base element } (op-dd).
inline Strategy dual_forward_II(DualPair pair, const Space& s, Strategy tau,
                                std::uint64_t search_bound = kDefaultSearchBound) {
  auto respond = [pair, s, tau](const History& ph, std::uint64_t x) {
    History q = ph;
    q.push_back(pair == DualPair::PoOd ? Move::point(x) : Move::of_open(OpenSet::basic(x)));
    return tau.next(q);
  };
  auto replay = [pair, s, respond, search_bound](const History& h) {
    History ph;
    for (std::size_t i = 0; i + 1 < h.size(); i += 2) {
      if (pair == DualPair::PoOd) {
        const auto x = h[i + 1].index;
        Move r = respond(ph, x);
        ph.push_back(Move::point(x));
        ph.push_back(std::move(r));
      } else {
        const auto p = h[i + 1].index;
        std::optional<Base> src;
        const std::uint64_t lim = s.base_count() ? std::min(*s.base_count(), search_bound) : search_bound;
        for (Base b = 0; b < lim && !src; ++b)
          if (respond(ph, b).index == p) src = b;
        if (!src) throw SearchBoundExceeded("picked point has no generating base element");
        ph.push_back(Move::of_open(OpenSet::basic(*src)));
        ph.push_back(Move::point(p));
      }
    }
    return ph;
  };
  return {"dual-forward-II[" + std::string(to_string(pair)) + "](" + tau.name + ")",
          [pair, s, respond, replay, search_bound](const History& h) {
            const History ph = replay(h);
            if (pair == DualPair::PoOd) {
              return Move::of_family({"tau-answers", s.point_count(),
                                      [ph, respond](std::uint64_t x) { return respond(ph, x).open; }});
            }
            const auto nb = s.base_count();
            return Move::of_dense({"tau-points",
                                   [ph, respond, nb, search_bound](Point p) {
                                     const std::uint64_t lim = nb ? std::min(*nb, search_bound) : search_bound;
                                     for (Base b = 0; b < lim; ++b)
                                       if (respond(ph, b).index == p) return true;
                                     return false;
                                   },
                                   [ph, respond, nb](std::uint64_t k) -> std::optional<Point> {
                                     if (nb && k >= *nb) return std::nullopt;
                                     return respond(ph, k).index;
                                   }});
          },
          [tau, replay](const History& h) { return detail::key_of(tau, replay(h)); }};
}

/// II in the pointing game: answer with the first member of sigma's current
/// family containing I's point (po-od), or the first point of sigma's current
/// set inside I's open set (op-dd).
inline Strategy dual_backward_II(DualPair pair, const Space& s, Strategy sigma,
                                 std::uint64_t search_bound = kDefaultSearchBound) {
  auto answer = [pair, s, search_bound](const Move& sel, const Move& asked) -> Move {
    if (pair == DualPair::PoOd) {
      auto k = detail::first_member_containing(s, sel.family, asked.index, search_bound);
      if (!k) throw SearchBoundExceeded("sigma's family omits the asked point");
      return Move::pick(*k);
    }
    auto p = detail::first_point_in(s, sel.dense, asked.open, search_bound);
    if (!p) throw SearchBoundExceeded("sigma's set misses the asked open set");
    return Move::point(*p);
  };
  auto replay = [sigma, answer](const History& ph) {
    History sh;
    for (std::size_t i = 0; i + 1 < ph.size(); i += 2) {
      const Move sel = sigma.next(sh);
      sh.push_back(sel);
      sh.push_back(answer(sel, ph[i]));
    }
    return sh;
  };
  return {"dual-backward-II[" + std::string(to_string(pair)) + "](" + sigma.name + ")",
          [pair, sigma, answer, replay](const History& ph) {
            const History sh = replay(History(ph.begin(), ph.end() - 1));
            const Move sel = sigma.next(sh);
            const Move a = answer(sel, ph.back());
            if (pair == DualPair::PoOd) return Move::of_open(sel.family.at(a.index));
            return a;
          },
          [sigma, replay](const History& ph) { return detail::key_of(sigma, replay(ph)); }};
}

// ---------------------------------------------------------------------------
// Products

/// I in OpenPicking on X x Y. Inning diag(k, j) plays (x, d_k) where x is
/// sigmaX's answer to the X-projections of the rectangle answers along row k.
inline Strategy product_pointing_strategy(const Space& sx, const Space& sy, Strategy sigmaX, PointSet denseY) {
  const auto pts = product_points(sx, sy);
  const auto bas = product_bases(sx, sy);
  const Space sp = product(sx, sy);
  return {"product(" + sigmaX.name + "," + denseY.label + ")",
          [=](const History& h) {
            const auto n = inning_of(h);
            const auto [k, j] = unpair(n);
            History xh;
            for (std::uint64_t i = 0; i < n; ++i) {
              if (unpair(i).first != k) continue;
              const Point p = h[2 * i].index;
              const auto& ans = h[2 * i + 1].open;
              std::optional<Base> rect;
              for (auto b : ans.parts())
                if (sp.member(p, b)) {
                  rect = b;
                  break;
                }
              if (!rect) throw InvalidArgument("answer does not contain I's point");
              xh.push_back(Move::point(pts.decode(p).first));
              xh.push_back(Move::of_open(OpenSet::basic(bas.decode(*rect).first)));
            }
            const Move mx = sigmaX.next(xh);
            const auto y = denseY.enumerate(k);
            if (!y) throw InvalidArgument("dense set of Y is exhausted");
            return Move::point(pts.encode(mx.index, *y));
          },
          {}};
}

// ---------------------------------------------------------------------------
// Finite unions, open restriction, dense lifting (dense-open selection game)

/// A component of a union: a subspace of X with II's strategy on it.
struct Piece {
  Space sub;
  Strategy sigma;
};

namespace detail {

inline Mask sub_points_mask(const Move& mv) {
  if (mv.type == Move::Type::PickMany) return points_mask(mv.indices);
  return mv.index < 64 ? bit(mv.index) : 0;
}

inline Move map_points(const Move& mv, const std::function<Point(Point)>& f) {
  if (mv.type == Move::Type::PickMany) {
    std::vector<std::uint64_t> out;
    for (auto p : mv.indices) out.push_back(f(p));
    return Move::pick_many(std::move(out));
  }
  Move m = Move::point(f(mv.index));
  m.note = mv.note;
  return m;
}

inline Move pull_points(const Space& sub, const Move& mv) {
  const auto* e = sub.embedding();
  return map_points(mv, [e](Point p) {
    auto q = e->from_parent_point(p);
    if (!q) throw InvalidArgument("picked point lies outside the piece");
    return *q;
  });
}

}  // namespace detail

/// II on X = union of the pieces: inning n consults piece n mod p on the
/// traces of I's open sets. Works for SPlus (points) and SPlusFin (finite
/// sets of points).
inline Strategy union_strategy(std::vector<Piece> pieces) {
  if (pieces.empty()) throw InvalidArgument("union needs at least one piece");
  auto sub_history = [pieces](std::size_t i, const History& h) {
    const auto& sub = pieces[i].sub;
    History sh;
    for (std::size_t m = i; 2 * m < h.size(); m += pieces.size()) {
      sh.push_back(Move::of_open(sub.trace(h[2 * m].open)));
      if (2 * m + 1 < h.size()) sh.push_back(detail::pull_points(sub, h[2 * m + 1]));
    }
    return sh;
  };
  std::string name = "union(";
  for (std::size_t i = 0; i < pieces.size(); ++i) name += (i ? "," : "") + pieces[i].sigma.name;
  name += ")";
  return {name,
          [pieces, sub_history](const History& h) {
            const auto i = inning_of(h) % pieces.size();
            const auto& pc = pieces[i];
            const Move mv = pc.sigma.next(sub_history(i, h));
            return detail::map_points(mv, [&pc](Point p) { return pc.sub.embedding()->to_parent_point(p); });
          },
          [pieces, sub_history](const History& h) {
            std::vector<std::uint64_t> key{inning_of(h) % pieces.size()};
            for (std::size_t i = 0; i < pieces.size(); ++i) {
              const auto sh = sub_history(i, h);
              Mask acc = 0;
              for (std::size_t m = 1; m < sh.size(); m += 2) acc |= detail::sub_points_mask(sh[m]);
              key.push_back(acc);
              for (auto v : detail::key_of(pieces[i].sigma, sh)) key.push_back(v);
            }
            return key;
          }};
}

inline Strategy union_splus_strategy(Piece a, Piece b) { return union_strategy({std::move(a), std::move(b)}); }

inline Strategy union_fin_strategy(std::vector<Piece> pieces) { return union_strategy(std::move(pieces)); }

/// Relativizers Int(cl(A)) n A of a finite decomposition; empty ones dropped.
inline std::vector<Mask> relativizers(const Space& x, const std::vector<Mask>& parts) {
  const auto t = FinTopology::of(x);
  std::vector<Mask> out;
  for (auto a : parts) {
    const Mask r = int_closure(t, a) & a;
    if (r) out.push_back(r);
  }
  return out;
}

/// A selection principle witness: from a sequence of dense open sets, one
/// point of each.
using Selector = std::function<std::vector<Point>(const Space&, const std::vector<OpenSet>&)>;

/// Selector running a II strategy of the dense-open game along the sequence.
inline Selector strategy_selector(Strategy sigma) {
  return [sigma](const Space&, const std::vector<OpenSet>& seq) {
    History h;
    std::vector<Point> out;
    for (const auto& o : seq) {
      h.push_back(Move::of_open(o));
      const Move mv = sigma.next(h);
      h.push_back(mv);
      out.push_back(mv.index);
    }
    return out;
  };
}

/// Selector on X from selectors on the pieces: the sequence is dealt to the
/// pieces round-robin, traced, selected, and mapped back in order.
inline Selector union_selection(std::vector<Space> subs, std::vector<Selector> sels) {
  if (subs.empty() || subs.size() != sels.size()) throw InvalidArgument("union_selection needs matching pieces");
  return [subs, sels](const Space&, const std::vector<OpenSet>& seq) {
    std::vector<Point> out(seq.size());
    for (std::size_t i = 0; i < subs.size(); ++i) {
      std::vector<OpenSet> part;
      for (std::size_t m = i; m < seq.size(); m += subs.size()) part.push_back(subs[i].trace(seq[m]));
      const auto picks = sels[i](subs[i], part);
      for (std::size_t r = 0; r < picks.size(); ++r)
        out[i + r * subs.size()] = subs[i].embedding()->to_parent_point(picks[r]);
    }
    return out;
  };
}

/// II on the open subspace `sub` of X: tau's answer to O u intCompl when it
/// lands in O, otherwise the first point of O (flagged in the move's note).
inline Strategy restrict_splus_strategy(const Space& x, Strategy tau, const Space& sub, OpenSet int_compl,
                                        std::uint64_t search_bound = kDefaultSearchBound) {
  auto lift_open = [sub, int_compl](const OpenSet& o) { return sub.embedding()->to_parent_open(o).united(int_compl); };
  auto replay = [tau, lift_open](const History& h) {
    History th;
    for (std::size_t i = 0; i + 1 < h.size(); i += 2) {
      th.push_back(Move::of_open(lift_open(h[i].open)));
      th.push_back(tau.next(th));
    }
    return th;
  };
  return {"restrict(" + tau.name + ")",
          [x, tau, sub, lift_open, replay, search_bound](const History& h) {
            History th = replay(History(h.begin(), h.end() - 1));
            const auto& o = h.back().open;
            th.push_back(Move::of_open(lift_open(o)));
            const Move t = tau.next(th);
            if (auto p = sub.embedding()->from_parent_point(t.index); p && sub.contains(o, *p)) return Move::point(*p);
            auto p = detail::first_point_of_open(sub, o, search_bound);
            if (!p) throw SearchBoundExceeded("empty open set");
            Move m = Move::point(*p);
            m.note = "fallback";
            return m;
          },
          [tau, replay](const History& h) {
            const auto th = replay(h);
            std::vector<Point> picks;
            for (std::size_t i = 1; i < th.size(); i += 2) picks.push_back(th[i].index);
            auto key = detail::key_of(tau, th);
            key.push_back(detail::points_mask(picks));
            return key;
          }};
}

/// II on X from II on a dense subspace D: answer O with tau's answer to O n D.
inline Strategy lift_dense_strategy(const Space& dsub, Strategy tau) {
  auto replay = [dsub](const History& h) {
    History th;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (i % 2 == 0) {
        th.push_back(Move::of_open(dsub.trace(h[i].open)));
      } else {
        auto p = dsub.embedding()->from_parent_point(h[i].index);
        if (!p) throw InvalidArgument("pick outside the dense subspace");
        th.push_back(Move::point(*p));
      }
    }
    return th;
  };
  return {"lift(" + tau.name + ")",
          [dsub, tau, replay](const History& h) {
            const Move t = tau.next(replay(h));
            return Move::point(dsub.embedding()->to_parent_point(t.index));
          },
          [tau, replay](const History& h) { return detail::key_of(tau, replay(h)); }};
}

}  // namespace topogame
