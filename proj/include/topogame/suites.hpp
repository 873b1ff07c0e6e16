#pragma once

// Verification suites shared by the command-line tool and the acceptance
// runner. Each suite is a list of independent checks; a check owns every
// space, game and strategy it touches, so checks can run on separate threads.

#include <atomic>
#include <chrono>
#include <set>
#include <thread>

#include "pixleyroy.hpp"
#include "serialize.hpp"
#include "transform.hpp"

namespace topogame {

enum class Status { Pass, Fail, Indeterminate };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Indeterminate:
      return "indeterminate";
  }
  return "?";
}

struct CheckOutcome {
  Status status = Status::Pass;
  std::string detail;
  Json artifact;  // replayable transcript or instance; null when passing
};

struct CheckRecord {
  std::string id;
  std::string property;
  Status status = Status::Pass;
  std::string detail;
  Json artifact;
  double seconds = 0;
};

struct RunReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;

  Status overall() const {
    Status s = Status::Pass;
    for (const auto& c : checks) {
      if (c.status == Status::Fail) return Status::Fail;
      if (c.status == Status::Indeterminate) s = Status::Indeterminate;
    }
    return s;
  }

  int exit_code() const {
    switch (overall()) {
      case Status::Pass:
        return 0;
      case Status::Fail:
        return 1;
      case Status::Indeterminate:
        return 2;
    }
    return 1;
  }

  double seconds(const std::string& id_prefix = "") const {
    double t = 0;
    for (const auto& c : checks)
      if (c.id.rfind(id_prefix, 0) == 0) t += c.seconds;
    return t;
  }

  const CheckRecord* find(const std::string& id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
};

/// Timings are reported only on request; everything else is a function of the seed.
inline Json to_json(const RunReport& r, bool timings = false) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j = {{"id", c.id}, {"property", c.property}, {"status", to_string(c.status)}, {"detail", c.detail}};
    if (!c.artifact.is_null()) j["artifact"] = c.artifact;
    if (timings) j["seconds"] = c.seconds;
    checks.push_back(std::move(j));
  }
  return {{"suite", r.suite}, {"seed", r.seed}, {"status", to_string(r.overall())}, {"checks", checks}};
}

struct Check {
  std::string id;
  std::string property;
  std::function<CheckOutcome()> run;
};

struct Suite {
  std::string name;
  std::string description;
  std::function<std::vector<Check>(std::uint64_t seed)> checks;
};

namespace detail {

inline CheckOutcome tally(std::uint64_t cases, std::uint64_t failures, std::uint64_t unknown, const std::string& what,
                          Json artifact = nullptr) {
  CheckOutcome o;
  o.detail = std::to_string(cases) + " " + what + ", " + std::to_string(failures) + " failures";
  if (unknown) o.detail += ", " + std::to_string(unknown) + " indeterminate";
  o.status = failures ? Status::Fail : unknown ? Status::Indeterminate : Status::Pass;
  if (o.status != Status::Pass) o.artifact = std::move(artifact);
  return o;
}

inline Json instance(const Space& s, Json extra = Json::object()) {
  Json j = {{"space", space_to_json(s)}, {"label", s.label()}};
  for (auto& [k, v] : extra.items()) j[k] = v;
  return j;
}

// Every open mask of a finite space containing x.
inline std::vector<Mask> open_neighbourhoods(const FinTopology& t, Point x) {
  std::vector<Mask> out;
  for (auto u : t.opens)
    if (u >> x & 1) out.push_back(u);
  return out;
}

// Plays `runs` seeded games and requires the target verdict in each.
inline CheckOutcome seeded_runs(const GameKind& kind, const Space& s, std::uint64_t runs, std::uint64_t innings,
                                std::uint64_t horizon, std::uint64_t seed,
                                const std::function<std::pair<Strategy, Strategy>(std::uint64_t)>& make) {
  std::uint64_t failures = 0, unknown = 0, worst = 0;
  Json artifact = nullptr;
  for (std::uint64_t r = 0; r < runs; ++r) {
    const auto run_seed = mix(seed, r);
    auto [one, two] = make(run_seed);
    Transcript t;
    Verdict v;
    try {
      t = play(kind, s, one, two, innings, {}, run_seed);
      v = evaluate(kind, s, t, horizon);
    } catch (const Error& e) {
      ++failures;
      if (artifact.is_null()) artifact = {{"seed", run_seed}, {"error", e.what()}};
      continue;
    }
    if (v.met() && v.inning <= innings) {
      worst = std::max(worst, v.inning);
      continue;
    }
    if (v.outcome == Verdict::Outcome::Indeterminate) ++unknown;
    else ++failures;
    if (artifact.is_null()) artifact = {{"transcript", to_json(t)}, {"verdict", to_json(v)}};
  }
  auto o = tally(runs, failures, unknown, "seeded runs", artifact);
  o.detail += ", latest target inning " + std::to_string(worst);
  return o;
}

inline Json counterexample(const Space& s, const VerifyResult& r, const std::string& strategy) {
  Json j = instance(s, {{"strategy", strategy}, {"reason", r.reason}});
  if (r.counterexample) j["transcript"] = to_json(*r.counterexample);
  return j;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Pixley-Roy suites

namespace suites {

/// Dense union in PR(X) versus omega-double covers, both translations, on
/// every T0 space of at most 3 points and every basic family of size <= 3.
inline std::vector<Check> pr_density(std::uint64_t) {
  auto scan = [](bool from_family) {
    std::uint64_t cases = 0, failures = 0, unknown = 0;
    Json artifact = nullptr;
    for (const auto& x : small_spaces(3, true)) {
      const auto pr = pixley_roy(x);
      const Space& h = pr.space;
      const auto nb = h.nbases();
      // pairs (F, W) listed independently of the hyperspace's own base order
      std::vector<std::pair<Mask, Mask>> pairs;
      for (auto w : open_lattice(x))
        for (Mask f = 0; f <= w; ++f)
          if (subset_of(f, w)) pairs.push_back({f, w});
      const std::uint64_t universe = from_family ? nb : pairs.size();
      auto dense = [&](const std::vector<Base>& members) {
        Mask u = 0;
        for (auto b : members) u |= h.base_mask(b);
        for (Base b = 0; b < nb; ++b)
          if (!(h.base_mask(b) & u)) return false;
        return true;
      };
      std::vector<std::uint64_t> pick;
      std::function<void(std::uint64_t)> rec = [&](std::uint64_t start) {
        if (!pick.empty()) {
          ++cases;
          bool lhs, rhs;
          Tri t;
          if (from_family) {
            std::vector<OpenSet> fam;
            for (auto b : pick) fam.push_back(OpenSet::basic(b));
            lhs = dense(pick);
            t = is_double_cover_at_horizon(x, hyperspace_family_to_doublecover(pr, CoverFamily::of("f", fam)), 64,
                                           kDefaultSearchBound);
          } else {
            std::vector<DoublePair> dps;
            for (auto i : pick) dps.push_back({FiniteSet::from_mask(pairs[i].first), x.open_of_mask(pairs[i].second)});
            const auto dc = DoubleCover::of("pairs", dps);
            const auto fam = doublecover_to_hyperspace_family(pr, dc);
            std::vector<Base> bs;
            for (std::uint64_t k = 0; k < dps.size(); ++k) bs.push_back(fam.at(k).parts().front());
            lhs = dense(bs);
            t = is_double_cover_at_horizon(x, dc, 64, kDefaultSearchBound);
          }
          if (t == Tri::Indeterminate) {
            ++unknown;
          } else {
            rhs = t == Tri::True;
            if (lhs != rhs) {
              ++failures;
              if (artifact.is_null()) artifact = detail::instance(x, {{"members", pick}, {"dense_union", lhs}});
            }
          }
        }
        if (pick.size() == 3) return;
        for (std::uint64_t k = start; k < universe; ++k) {
          pick.push_back(k);
          rec(k + 1);
          pick.pop_back();
        }
      };
      rec(0);
    }
    return detail::tally(cases, failures, unknown, "families", artifact);
  };
  return {
      {"family_to_pairs", "a basic family of PR(X) has dense union iff its pairs form an omega-double cover",
       [scan] { return scan(true); }},
      {"pairs_to_family", "pairs form an omega-double cover iff the matching basic family of PR(X) has dense union",
       [scan] { return scan(false); }},
  };
}

/// Omega-covers embed as omega-double covers via U -> (empty, U).
inline std::vector<Check> omega_embed(std::uint64_t) {
  return {
      {"finite_exhaustive", "embedding an omega-cover gives an omega-double cover (all families, <= 3 points)",
       [] {
         std::uint64_t cases = 0, failures = 0, unknown = 0;
         Json artifact = nullptr;
         for (const auto& x : small_spaces(3)) {
           std::vector<Mask> opens;
           for (auto u : open_lattice(x))
             if (u) opens.push_back(u);
           for (Mask sel = 1; sel < bit(opens.size()); ++sel) {
             std::vector<OpenSet> fam;
             for (auto i : mask_elements(sel)) fam.push_back(x.open_of_mask(opens[i]));
             const auto oc = CoverFamily::of("family", fam);
             bool omega = true;
             for (Mask g = 0; g <= x.all_mask() && omega; ++g) {
               bool inside = false;
               for (auto i : mask_elements(sel)) inside = inside || subset_of(g, opens[i]);
               omega = inside;
             }
             if (!omega) continue;
             ++cases;
             const auto t = is_double_cover_at_horizon(x, embed_omega_cover(oc), 64, kDefaultSearchBound);
             if (t == Tri::Indeterminate) ++unknown;
             if (t == Tri::False) {
               ++failures;
               if (artifact.is_null()) artifact = detail::instance(x, {{"family", mask_elements(sel)}});
             }
           }
         }
         return detail::tally(cases, failures, unknown, "omega-covers", artifact);
       }},
      {"rationals_horizon", "the union-closed base of the rationals embeds as an omega-double cover at horizon 6",
       [] {
         const Space q = rationals();
         const CoverFamily oc{"union-base", infinite, [](std::uint64_t k) { return union_base(k); }};
         const auto t = is_double_cover_at_horizon(q, embed_omega_cover(oc), 6, kDefaultSearchBound);
         CheckOutcome o;
         o.status = t == Tri::True ? Status::Pass : t == Tri::False ? Status::Fail : Status::Indeterminate;
         o.detail = std::string("double-cover check at horizon 6: ") + to_string(t);
         if (o.status != Status::Pass) o.artifact = {{"space", "rationals"}, {"family", "union-base"}, {"horizon", 6}};
         return o;
       }},
  };
}

/// PR of an open subspace U equals the open subspace [empty, U] of PR(X).
inline std::vector<Check> pr_open_subspace(std::uint64_t) {
  return {{"membership_tables",
           "PR(U) and the subspace [empty, U] of PR(X) have the same base sets under the canonical re-indexing",
           [] {
             std::uint64_t cases = 0, failures = 0;
             Json artifact = nullptr;
             for (const auto& x : small_spaces(3)) {
               const auto prx = pixley_roy(x);
               for (auto w : open_lattice(x)) {
                 if (!w) continue;
                 ++cases;
                 const auto u = x.open_of_mask(w);
                 const Space sub = open_subspace(x, u);
                 const Space a = pixley_roy(sub).space;
                 const Space b = open_subspace(prx.space, OpenSet::basic(prx.encode(FiniteSet{}, u)));
                 // point G of PR(U) -> the X-mask of G -> its index among the points of [empty, U]
                 auto reindex = [&](Mask m) {
                   Mask out = 0;
                   for (auto g : mask_elements(m)) {
                     Mask xm = 0;
                     for (auto p : mask_elements(g)) xm |= bit(sub.embedding()->to_parent_point(p));
                     out |= bit(*b.embedding()->from_parent_point(xm));
                   }
                   return out;
                 };
                 std::set<Mask> sa, sb;
                 for (Base k = 0; k < a.nbases(); ++k) sa.insert(reindex(a.base_mask(k)));
                 for (Base k = 0; k < b.nbases(); ++k) sb.insert(b.base_mask(k));
                 if (a.n() != b.n() || sa != sb) {
                   ++failures;
                   if (artifact.is_null()) artifact = detail::instance(x, {{"open", mask_elements(w)}});
                 }
               }
             }
             return detail::tally(cases, failures, 0, "open subspaces", artifact);
           }}};
}

/// 64 omega-double covers of the rationals (tails of the all-pairs family).
inline DoubleCoverSequence rational_double_covers() {
  const Space q = rationals();
  const auto all = all_pairs_double_cover(q);
  return [all](std::uint64_t n) {
    const std::uint64_t offset = 3 * (n % 64);
    return DoubleCover{"all-pairs+" + std::to_string(offset), infinite,
                       [all, offset](std::uint64_t t) { return all.at(t + offset); }};
  };
}

inline std::vector<Check> double_selector(std::uint64_t) {
  return {{"rationals_horizon",
           "the double selection from 64 omega-double covers of the rationals is an omega-double cover at horizon 6",
           [] {
             const Space q = rationals();
             const auto out = second_countable_double_selector(q, rational_double_covers());
             CheckOutcome o;
             Tri t;
             try {
               t = is_double_cover_at_horizon(q, out, 6, 10000);
             } catch (const SearchBoundExceeded& e) {
               o.status = Status::Indeterminate;
               o.detail = e.what();
               o.artifact = {{"space", "rationals"}, {"covers", 64}, {"horizon", 6}};
               return o;
             }
             o.status = t == Tri::True ? Status::Pass : t == Tri::False ? Status::Fail : Status::Indeterminate;
             o.detail = std::string("double-cover check at horizon 6, bound 10000: ") + to_string(t);
             Json prefix = Json::array();
             for (const auto& [f, u] : out.prefix(8)) prefix.push_back({{"F", to_json(f)}, {"U", to_json(u)}});
             o.artifact = {{"space", "rationals"}, {"covers", 64}, {"selection_prefix", prefix}};
             if (o.status == Status::Pass) o.artifact = nullptr;
             return o;
           }}};
}

// ---------------------------------------------------------------------------
// Baire category suites

inline std::vector<Check> baire_diagonal(std::uint64_t seed) {
  struct Setup {
    Space q = rationals();
    CoverTable table = dyadic_cover_table(16);
    std::vector<OpenSet> pibase;
    SeqPrefix f;
    Setup() {
      for (Base a = 0; a < 16; ++a) pibase.push_back(OpenSet::basic(a));
      f = diagonal_selector(q, pibase, table);
    }
  };
  return {
      {"selection_meets_pibase", "the diagonal selection over the dyadic table meets the first 16 base elements",
       [] {
         Setup st;
         OpenSet sel;
         for (const auto& u : selection(st.table, st.f)) sel = sel.united(u);
         std::uint64_t failures = 0, unknown = 0;
         for (const auto& b : st.pibase) {
           const auto t = st.q.meets(b.parts().front(), sel);
           failures += t == Tri::False;
           unknown += t == Tri::Indeterminate;
         }
         auto o = detail::tally(16, failures, unknown, "base elements", Json{{"f", st.f}});
         o.detail += ", f = " + Json(st.f).dump();
         return o;
       }},
      {"witness_permanence", "no extension of a nowhere-dense witness lies in N_alpha (1000 random extensions each)",
       [seed] {
         Setup st;
         std::uint64_t cases = 0, failures = 0, unknown = 0;
         Json artifact = nullptr;
         for (std::uint64_t a = 0; a < 16; ++a) {
           const SeqPrefix sigma(st.f.begin(), st.f.begin() + static_cast<std::ptrdiff_t>(a + 1));
           for (std::uint64_t r = 0; r < 1000; ++r) {
             ++cases;
             auto ext = sigma;
             for (std::uint64_t n = a + 1; n < 16; ++n) ext.push_back(mix(mix(seed, a), r * 16 + n) % 256);
             const auto t = in_N_alpha(st.q, st.pibase[a], st.table, ext);
             if (t == Tri::Indeterminate) ++unknown;
             if (t == Tri::True) {
               ++failures;
               if (artifact.is_null()) artifact = {{"alpha", a}, {"extension", ext}};
             }
           }
         }
         return detail::tally(cases, failures, unknown, "extensions", artifact);
       }},
  };
}

inline std::vector<Check> property_p(std::uint64_t seed) {
  return {
      {"covering_equivalence", "(P) holds iff no selection covers S (|S| <= 3, length <= 3, values < 3)",
       [] {
         std::uint64_t cases = 0, failures = 0;
         Json artifact = nullptr;
         for (std::uint64_t len = 1; len <= 3; ++len) {
           std::vector<std::vector<std::uint64_t>> vecs;
           detail::for_each_below(std::vector<std::uint64_t>(len, 3), [&](const std::vector<std::uint64_t>& v) {
             vecs.push_back(v);
             return true;
           });
           const std::vector<std::uint64_t> g_bound(len, 4);
           std::vector<std::size_t> pick;
           std::function<void(std::size_t)> rec = [&](std::size_t start) {
             VectorFamily fam{{}, std::vector<std::uint64_t>(len, 3)};
             for (auto i : pick) fam.vectors.push_back(vecs[i]);
             ++cases;
             const bool p = has_property_P(fam, g_bound);
             const bool cover = covering_selection_exists(discrete_cover_family(fam), fam.vectors.size(), g_bound);
             if (p == cover) {
               ++failures;
               if (artifact.is_null()) artifact = to_json(fam);
             }
             if (pick.size() == 3) return;
             for (std::size_t k = start; k < vecs.size(); ++k) {
               pick.push_back(k);
               rec(k + 1);
               pick.pop_back();
             }
           };
           rec(0);
         }
         return detail::tally(cases, failures, 0, "families", artifact);
       }},
      {"padding_preserves_P", "padding below the cut preserves (P) when min b below the cut exceeds the cut",
       [seed] {
         std::uint64_t cases = 0, failures = 0, draws = 0;
         Json artifact = nullptr;
         while (cases < 100) {
           const auto r = [&](std::uint64_t k) { return mix(mix(seed, draws), k); };
           ++draws;
           const std::uint64_t len = 2 + r(0) % 3;
           const std::uint64_t members = 1 + r(1) % 3;
           std::vector<std::uint64_t> b(len);
           std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>> h_list;
           VectorFamily base{{}, {}};
           for (std::uint64_t i = 0; i < members; ++i) {
             std::vector<std::uint64_t> h(len);
             for (std::uint64_t n = 0; n < len; ++n) h[n] = r(10 + i * 8 + n) % 3;
             h_list.push_back({h, r(40 + i) % len});
             base.vectors.push_back(h);
           }
           std::uint64_t max_cut = 0;
           for (const auto& [h, cut] : h_list) max_cut = std::max(max_cut, cut);
           for (std::uint64_t n = 0; n < len; ++n) b[n] = std::max<std::uint64_t>(3, max_cut + 1) + r(60 + n) % 2;
           if (!has_property_P(base, sentinel_bound({&base}))) continue;
           ++cases;
           const auto padded = pad_family(h_list, b);
           VectorFamily pv{padded.vectors, {}};
           if (!has_property_P(padded, sentinel_bound({&pv}))) {
             ++failures;
             if (artifact.is_null()) {
               Json hs = Json::array();
               for (const auto& [h, cut] : h_list) hs.push_back({{"h", h}, {"cut", cut}});
               artifact = {{"h_list", hs}, {"b", b}};
             }
           }
         }
         auto o = detail::tally(cases, failures, 0, "seeded instances with (P)", artifact);
         o.detail += " (" + std::to_string(draws) + " draws)";
         return o;
       }},
  };
}

// ---------------------------------------------------------------------------
// Game suites

inline std::vector<Check> duality(std::uint64_t seed) {
  return {
      {"forward_rationals",
       "dual_forward of the base-witness pointing strategy wins the cover game on the rationals (50 seeded runs)",
       [seed] {
         const Space q = rationals();
         const auto kind = selection_game(DualPair::PoOd);
         const auto two = dual_forward(DualPair::PoOd, q, witness_pointing_strategy(q));
         return detail::seeded_runs(kind, q, 50, 16, 16, seed, [q, two](std::uint64_t s) {
           return std::pair{random_cover_adversary(q, s), two};
         });
       }},
      {"forward_finite",
       "dual_forward of every memoryless winning I strategy in the open-picking game verifies (<= 3 points)",
       [] {
         std::uint64_t cases = 0, failures = 0, tables = 0;
         Json artifact = nullptr;
         for (const auto& x : small_spaces(3)) {
           auto op = std::make_shared<const FinGame>(x, pointing_game(DualPair::PoOd));
           const FinGame sel(x, selection_game(DualPair::PoOd));
           for (const auto& tau : enumerate_memoryless_strategies(op, Player::I)) {
             ++tables;
             if (!verify_strategy(*op, tau, Player::I).ok) continue;
             ++cases;
             const auto sigma = dual_forward(DualPair::PoOd, x, tau);
             const auto r = verify_strategy(sel, sigma, Player::II);
             if (!r.ok) {
               ++failures;
               if (artifact.is_null()) artifact = detail::counterexample(x, r, sigma.name);
             }
           }
         }
         auto o = detail::tally(cases, failures, 0, "winning pointing strategies", artifact);
         o.detail += " (" + std::to_string(tables) + " memoryless tables)";
         return o;
       }},
      {"claim_finite", "every winning II strategy in the cover game has a Claim point at every reachable position",
       [] {
         std::uint64_t cases = 0, failures = 0;
         Json artifact = nullptr;
         for (const auto& x : small_spaces(3)) {
           const auto t = FinTopology::of(x);
           auto sel = std::make_shared<const FinGame>(x, selection_game(DualPair::PoOd));
           const auto covers = enumerate_covers(x, FamilyClass::Cover);
           std::vector<Strategy> sigmas{solve_game(x, sel->kind()).strategy};
           auto op = std::make_shared<const FinGame>(x, pointing_game(DualPair::PoOd));
           for (const auto& tau : enumerate_memoryless_strategies(op, Player::I)) {
             if (sigmas.size() >= 8) break;
             if (verify_strategy(*op, tau, Player::I).ok) sigmas.push_back(dual_forward(DualPair::PoOd, x, tau));
           }
           for (const auto& sigma : sigmas) {
             // the empty history and every one-inning history along sigma
             std::vector<History> positions{History{}};
             for (const auto& c : covers) {
               History h{sel->to_move(FinMove{c, 0, 0})};
               h.push_back(sigma.next(h));
               positions.push_back(std::move(h));
             }
             for (const auto& h : positions) {
               ++cases;
               bool ok;
               Point x0 = 0;
               try {
                 x0 = dual_backward_finite(DualPair::PoOd, sigma, x, h).index;
                 std::set<Mask> answered;
                 History q = h;
                 for (const auto& c : covers) {
                   q.push_back(sel->to_move(FinMove{c, 0, 0}));
                   answered.insert(c.at(sigma.next(q).index));
                   q.pop_back();
                 }
                 ok = true;
                 for (auto v : detail::open_neighbourhoods(t, x0)) ok = ok && answered.count(v);
               } catch (const ClaimViolation&) {
                 ok = false;
               }
               if (!ok) {
                 ++failures;
                 if (artifact.is_null()) {
                   Transcript tr{sel->kind(), x.label(), std::nullopt, {}};
                   for (std::size_t i = 0; i + 1 < h.size(); i += 2) tr.innings.emplace_back(h[i], h[i + 1]);
                   artifact = detail::instance(x, {{"strategy", sigma.name}, {"history", to_json(tr)}, {"point", x0}});
                 }
               }
             }
           }
         }
         return detail::tally(cases, failures, 0, "positions", artifact);
       }},
  };
}

inline std::vector<Check> product(std::uint64_t seed) {
  return {{"rectangles_rationals",
           "the product pointing strategy on Q x Q makes II's rectangles meet all 8 x 8 base rectangles in 120 innings",
           [seed] {
             const Space q = rationals();
             const Space qq = topogame::product(q, q);
             const auto bases = product_bases(q, q);
             const auto one = product_pointing_strategy(q, q, witness_pointing_strategy(q), witness_points(q));
             std::uint64_t failures = 0, unknown = 0;
             Json artifact = nullptr;
             for (std::uint64_t r = 0; r < 20; ++r) {
               const auto run_seed = mix(seed, r);
               const auto t = play(GameKind::open_picking(), qq, one, random_neighborhood_responder(qq, run_seed), 120,
                                   {}, run_seed);
               OpenSet uni;
               for (const auto& [a, b] : t.innings) uni = uni.united(b.open);
               bool missing = false, undecided = false;
               for (std::uint64_t a = 0; a < 8; ++a)
                 for (std::uint64_t b = 0; b < 8; ++b) {
                   const auto hit = qq.meets(bases.encode(a, b), uni);
                   missing = missing || hit == Tri::False;
                   undecided = undecided || hit == Tri::Indeterminate;
                 }
               if (missing) ++failures;
               else if (undecided) ++unknown;
               if ((missing || undecided) && artifact.is_null()) artifact = {{"transcript", to_json(t)}};
             }
             return detail::tally(20, failures, unknown, "seeded runs", artifact);
           }}};
}

}  // namespace suites

namespace detail {

// Certified II strategy for SPlus-type games on a finite space.
inline Strategy solved_ii(const Space& s, const GameKind& kind) {
  auto r = solve_game(s, kind);
  if (r.winner != Player::II || !r.certified) throw Error("II has no certified strategy on " + s.label());
  return r.strategy;
}

// Covers of the point set by `parts` nonempty masks, listed as ascending tuples.
inline std::vector<std::vector<Mask>> decompositions(Mask all, std::size_t parts) {
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> cur;
  std::function<void(Mask)> rec = [&](Mask start) {
    if (cur.size() == parts) {
      Mask u = 0;
      for (auto m : cur) u |= m;
      if (u == all) out.push_back(cur);
      return;
    }
    for (Mask m = start; m <= all; ++m) {
      if (!m || !subset_of(m, all)) continue;
      cur.push_back(m);
      rec(m + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

inline CheckOutcome union_check(const GameKind& kind, std::size_t parts) {
  std::uint64_t cases = 0, failures = 0;
  Json artifact = nullptr;
  for (const auto& x : small_spaces(3)) {
    const FinGame g(x, kind);
    for (const auto& dec : decompositions(x.all_mask(), parts)) {
      std::vector<Piece> pieces;
      for (auto r : relativizers(x, dec)) {
        const Space sub = finite_subspace(x, r);
        pieces.push_back({sub, solved_ii(sub, kind)});
      }
      ++cases;
      const auto st = union_strategy(pieces);
      const auto res = verify_strategy(g, st, Player::II);
      if (!res.ok) {
        ++failures;
        if (artifact.is_null()) artifact = counterexample(x, res, st.name);
      }
    }
  }
  return tally(cases, failures, 0, "decompositions", artifact);
}

}  // namespace detail

namespace suites {

inline std::vector<Check> finite_unions(std::uint64_t) {
  return {
      {"splus_two_pieces", "II's S+ strategies on the relativized pieces of A u B combine into a winning strategy on X",
       [] { return detail::union_check(GameKind::splus(), 2); }},
      {"splus_fin_three_pieces", "the same for the finite-selection game and three pieces",
       [] { return detail::union_check(GameKind::splus_fin(), 3); }},
      {"selection_union", "round-robin selections on the pieces give a dense selection on X",
       [] {
         std::uint64_t cases = 0, failures = 0;
         Json artifact = nullptr;
         for (const auto& x : small_spaces(3)) {
           const auto t = FinTopology::of(x);
           const FinGame g(x, GameKind::splus());
           const auto dense_opens = g.i_moves(false);
           for (const auto& dec : detail::decompositions(x.all_mask(), 2)) {
             std::vector<Space> subs;
             std::vector<Selector> sels;
             for (auto r : relativizers(x, dec)) {
               subs.push_back(finite_subspace(x, r));
               sels.push_back(strategy_selector(detail::solved_ii(subs.back(), GameKind::splus())));
             }
             const auto select = union_selection(subs, sels);
             // every constant sequence of length 2 * (n + 1) over the dense opens
             for (const auto& o : dense_opens) {
               ++cases;
               const std::vector<OpenSet> seq(2 * (x.n() + 1), x.open_of_mask(o.set));
               Mask picked = 0;
               for (auto p : select(x, seq)) picked |= bit(p);
               if (!is_dense(t, picked)) {
                 ++failures;
                 if (artifact.is_null()) artifact = detail::instance(x, {{"parts", dec}, {"open", mask_elements(o.set)}});
               }
             }
           }
         }
         return detail::tally(cases, failures, 0, "sequences", artifact);
       }},
  };
}

inline std::vector<Check> open_restriction(std::uint64_t) {
  return {
      {"restrict_open", "II's S+ strategy on X restricts to every nonempty open subspace",
       [] {
         std::uint64_t cases = 0, failures = 0, fallbacks = 0;
         Json artifact = nullptr;
         for (const auto& x : small_spaces(3)) {
           const auto t = FinTopology::of(x);
           const auto tau = detail::solved_ii(x, GameKind::splus());
           for (auto w : open_lattice(x)) {
             if (!w) continue;
             ++cases;
             const Space sub = open_subspace(x, x.open_of_mask(w));
             const auto st = restrict_splus_strategy(x, tau, sub, x.open_of_mask(interior(t, t.all() & ~w)));
             const FinGame g(sub, GameKind::splus());
             const auto res = verify_strategy(g, st, Player::II);
             for (const auto& f : g.i_moves(false)) {
               History h{g.to_move(f)};
               fallbacks += st.next(h).note == "fallback";
             }
             if (!res.ok) {
               ++failures;
               if (artifact.is_null()) artifact = detail::counterexample(x, res, st.name);
             }
           }
         }
         auto o = detail::tally(cases, failures, 0, "open subspaces", artifact);
         o.detail += ", " + std::to_string(fallbacks) + " first-inning fallbacks";
         return o;
       }},
      {"lift_dense", "II's S+ strategy on a dense subspace lifts to X",
       [] {
         std::uint64_t cases = 0, failures = 0;
         Json artifact = nullptr;
         for (const auto& x : small_spaces(3)) {
           const auto t = FinTopology::of(x);
           const FinGame g(x, GameKind::splus());
           for (Mask d = 1; d <= x.all_mask(); ++d) {
             if (!is_dense(t, d)) continue;
             ++cases;
             const Space dsub = finite_subspace(x, d);
             const auto st = lift_dense_strategy(dsub, detail::solved_ii(dsub, GameKind::splus()));
             const auto res = verify_strategy(g, st, Player::II);
             if (!res.ok) {
               ++failures;
               if (artifact.is_null()) artifact = detail::counterexample(x, res, st.name);
             }
           }
         }
         return detail::tally(cases, failures, 0, "dense subspaces", artifact);
       }},
  };
}

inline std::vector<Check> pibase_dgame(std::uint64_t seed) {
  return {
      {"rationals_seeded", "the pi-base strategy wins the dense-set game on the rationals at horizon 16 (20 seeded runs)",
       [seed] {
         const Space q = rationals();
         const auto two = pibase_strategy_DGame(q, base_enumeration(q));
         return detail::seeded_runs(GameKind::dgame(), q, 20, 16, 16, seed, [q, two](std::uint64_t s) {
           return std::pair{random_dense_set_adversary(q, s), two};
         });
       }},
      {"finite_exhaustive", "the pi-base strategy verifies in the dense-set game on every space of <= 3 points",
       [] {
         std::uint64_t cases = 0, failures = 0;
         Json artifact = nullptr;
         for (const auto& x : small_spaces(3)) {
           ++cases;
           const FinGame g(x, GameKind::dgame());
           const auto st = pibase_strategy_DGame(x, base_enumeration(x));
           const auto res = verify_strategy(g, st, Player::II);
           if (!res.ok) {
             ++failures;
             if (artifact.is_null()) artifact = detail::counterexample(x, res, st.name);
           }
         }
         return detail::tally(cases, failures, 0, "spaces", artifact);
       }},
  };
}

inline std::vector<Check> finite_triviality(std::uint64_t) {
  auto solve_all = [](GameKind kind) {
    return [kind] {
      std::uint64_t cases = 0, failures = 0;
      Json artifact = nullptr;
      for (const auto& x : small_spaces(4)) {
        ++cases;
        const auto r = solve_game(x, kind);
        if (r.winner != Player::II || !r.certified) {
          ++failures;
          if (artifact.is_null())
            artifact = detail::instance(x, {{"game", kind.name()}, {"winner", to_string(r.winner)}, {"certified", r.certified}});
        }
      }
      return detail::tally(cases, failures, 0, "spaces", artifact);
    };
  };
  return {
      {"selcover", "II wins the cover-to-dense selection game on every space of <= 4 points",
       solve_all(GameKind::sel_cover())},
      {"splus", "II wins the dense-open game on every space of <= 4 points", solve_all(GameKind::splus())},
      {"dgame", "II wins the dense-set game on every space of <= 4 points", solve_all(GameKind::dgame())},
  };
}

}  // namespace suites

inline const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> list = {
      {"pr_density", "dense unions in Pixley-Roy hyperspaces and omega-double covers", suites::pr_density},
      {"double_selector", "double selection on a second countable space", suites::double_selector},
      {"baire_diagonal", "diagonal selection through nowhere-dense sets of the Baire space", suites::baire_diagonal},
      {"property_p", "property (P), covering selections and padding", suites::property_p},
      {"omega_embed", "omega-covers as omega-double covers", suites::omega_embed},
      {"pr_open_subspace", "Pixley-Roy of an open subspace", suites::pr_open_subspace},
      {"duality", "duality between the open-picking and cover-selection games", suites::duality},
      {"product", "pointing strategies on products", suites::product},
      {"finite_unions", "S+ strategies on finite unions", suites::finite_unions},
      {"open_restriction", "S+ on open and dense subspaces", suites::open_restriction},
      {"pibase_dgame", "pi-base strategy in the dense-set game", suites::pibase_dgame},
      {"finite_triviality", "II wins the selection games on small finite spaces", suites::finite_triviality},
  };
  return list;
}

inline const Suite& find_suite(const std::string& name) {
  for (const auto& s : all_suites())
    if (s.name == name) return s;
  throw InvalidArgument("unknown suite '" + name + "'");
}

inline CheckRecord run_check(const Check& c) {
  CheckRecord rec{c.id, c.property, Status::Pass, "", nullptr, 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    auto o = c.run();
    rec.status = o.status;
    rec.detail = std::move(o.detail);
    rec.artifact = std::move(o.artifact);
  } catch (const std::exception& e) {
    rec.status = Status::Fail;
    rec.detail = std::string("error: ") + e.what();
    rec.artifact = {{"error", e.what()}};
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

/// Checks run on up to `jobs` threads; records keep the suite's check order.
inline RunReport run_suite(const std::string& name, std::uint64_t seed, unsigned jobs = 1) {
  const auto& suite = find_suite(name);
  const auto checks = suite.checks(seed);
  RunReport report{name, seed, std::vector<CheckRecord>(checks.size())};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) report.checks[i] = run_check(checks[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < std::max(1u, jobs) && j < checks.size(); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

}  // namespace topogame
