#pragma once

// Pixley-Roy hyperspaces and the omega-cover / omega-double-cover calculus.

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "spaces.hpp"

namespace topogame {

using DoublePair = std::pair<FiniteSet, OpenSet>;
using DoubleCover = Enumeration<DoublePair>;
using OmegaCover = CoverFamily;

/// PR(X) together with the codec between its base indices and pairs [F, U].
struct PixleyRoy {
  Space space;
  Space ground;
  std::function<DoublePair(Base)> decode;
  std::function<Base(const FiniteSet&, const OpenSet&)> encode;
};

/// Points of PR(X) are finite sets of X (canonical index); base elements are
/// [F, U] = { G : F <= G <= U } with F <= U.
inline PixleyRoy pixley_roy(const Space& s) {
  SpaceImpl impl;
  impl.label = "pr:" + s.label();
  PixleyRoy out;
  out.ground = s;
  if (s.has_masks()) {
    if (s.n() > 6) throw DimensionError("finite Pixley-Roy hyperspace limited to 6 ground points");
    auto table = std::make_shared<std::vector<std::pair<Mask, Mask>>>();
    auto index = std::make_shared<std::map<std::pair<Mask, Mask>, Base>>();
    for (auto w : open_lattice(s)) {
      // submasks of w in ascending order
      std::vector<Mask> subs;
      for (Mask f = w;; f = (f - 1) & w) {
        subs.push_back(f);
        if (f == 0) break;
      }
      std::sort(subs.begin(), subs.end());
      for (auto f : subs) {
        (*index)[{f, w}] = table->size();
        table->push_back({f, w});
      }
    }
    impl.points = bit(s.n());
    impl.bases = table->size();
    impl.member = [table](Point g, Base k) {
      const auto [f, w] = (*table)[k];
      return subset_of(f, g) && subset_of(g, w);
    };
    impl.witness = [table](Base k) { return (*table)[k].first; };
    out.decode = [s, table](Base k) {
      const auto [f, w] = table->at(k);
      return DoublePair{FiniteSet::from_mask(f), s.open_of_mask(w)};
    };
    out.encode = [s, index](const FiniteSet& f, const OpenSet& u) {
      const Mask w = s.open_mask(u);
      auto it = index->find({f.mask(), w});
      if (it == index->end()) throw InvalidArgument("[F,U] needs F inside U");
      return it->second;
    };
  } else {
    auto decode = [s](Base k) {
      const auto [a, c] = unpair(k);
      auto f = FiniteSet::from_index(a);
      auto u = OpenSet::from_index(c);
      if (!s.contains(u, f)) f = FiniteSet{};
      return DoublePair{std::move(f), std::move(u)};
    };
    impl.points = infinite;
    impl.bases = infinite;
    impl.member = [s, decode](Point g, Base k) {
      const auto [f, u] = decode(k);
      const auto gs = FiniteSet::from_index(g);
      return f.subset_of(gs) && s.contains(u, gs);
    };
    impl.witness = [decode](Base k) { return decode(k).first.index(); };
    out.decode = decode;
    out.encode = [s](const FiniteSet& f, const OpenSet& u) {
      if (!s.contains(u, f)) throw InvalidArgument("[F,U] needs F inside U");
      return diag(f.index(), elements_mask(u.parts()));
    };
  }
  out.space = Space::make(std::move(impl));
  return out;
}

/// Reads pair n of a double cover, enforcing F <= U.
inline std::optional<DoublePair> double_pair(const Space& s, const DoubleCover& dc, std::uint64_t n) {
  auto p = dc.get(n);
  if (p && !s.contains(p->second, p->first))
    throw InvalidArgument("double cover pair " + std::to_string(n) + " has F outside U");
  return p;
}

/// Every pair (G, V) with G <= V, G among the first m finite sets and V a union
/// of base elements below m, has a witness (F, U) with F <= V and G <= U among
/// the first search_bound pairs.
inline Tri is_double_cover_at_horizon(const Space& s, const DoubleCover& dc, std::uint64_t m,
                                      std::uint64_t search_bound) {
  std::uint64_t gmax = m;
  if (s.finite() && s.n() < 64) gmax = std::min<std::uint64_t>(gmax, bit(s.n()));
  std::uint64_t vb = m;
  if (s.base_count()) vb = std::min(vb, *s.base_count());
  if (vb > 20) throw DimensionError("double-cover horizon too large");

  std::vector<OpenSet> vs;
  if (s.has_masks()) {
    std::vector<Mask> seen;
    for (std::uint64_t v = 0; v < bit(vb); ++v) {
      auto o = OpenSet::from_index(v);
      const Mask mk = s.open_mask(o);
      if (std::find(seen.begin(), seen.end(), mk) != seen.end()) continue;
      seen.push_back(mk);
      vs.push_back(std::move(o));
    }
  } else {
    for (std::uint64_t v = 0; v < bit(vb); ++v) vs.push_back(OpenSet::from_index(v));
  }

  std::vector<DoublePair> cache;
  bool exhausted = false;
  auto pair_at = [&](std::uint64_t t) -> const DoublePair* {
    while (cache.size() <= t && !exhausted) {
      auto p = double_pair(s, dc, cache.size());
      if (!p) exhausted = true;
      else cache.push_back(std::move(*p));
    }
    return t < cache.size() ? &cache[t] : nullptr;
  };

  Tri out = Tri::True;
  for (std::uint64_t g = 0; g < gmax; ++g) {
    const auto gs = FiniteSet::from_index(g);
    for (const auto& v : vs) {
      if (!s.contains(v, gs)) continue;
      bool found = false;
      std::uint64_t t = 0;
      for (; t < search_bound; ++t) {
        const auto* p = pair_at(t);
        if (!p) break;
        if (s.contains(v, p->first) && s.contains(p->second, gs)) {
          found = true;
          break;
        }
      }
      if (!found) {
        if (t < search_bound) return Tri::False;
        out = Tri::Indeterminate;
      }
    }
  }
  return out;
}

/// Omega-cover to omega-double cover: n -> (empty, oc(n)).
inline DoubleCover embed_omega_cover(const OmegaCover& oc) {
  return {"embed(" + oc.label + ")", oc.size, [oc](std::uint64_t n) { return DoublePair{FiniteSet{}, oc.at(n)}; }};
}

/// Member n is the basic open [F, U] of PR(X) for pair n.
inline CoverFamily doublecover_to_hyperspace_family(const PixleyRoy& pr, const DoubleCover& dc) {
  return {"hyper(" + dc.label + ")", dc.size, [pr, dc](std::uint64_t n) {
            const auto p = dc.at(n);
            return OpenSet::basic(pr.encode(p.first, p.second));
          }};
}

/// Pair n is (F, U) for the basic member n = [F, U]; rejects non-basic members.
inline DoubleCover hyperspace_family_to_doublecover(const PixleyRoy& pr, const CoverFamily& fam) {
  return {"pairs(" + fam.label + ")", fam.size, [pr, fam](std::uint64_t n) {
            const auto u = fam.at(n);
            if (u.parts().size() != 1)
              throw InvalidArgument("hyperspace family member " + std::to_string(n) + " is not basic");
            return pr.decode(u.parts().front());
          }};
}

/// All valid pairs (F, U) with F <= U, enumerated diagonally; invalid index
/// combinations fall back to (empty, U).
inline DoubleCover all_pairs_double_cover(const Space& s) {
  if (s.has_masks()) {
    const auto n = s.n(), nb = s.nbases();
    if (n + nb > 40) throw DimensionError("pair family too large");
    return {"all-pairs", bit(n) * bit(nb), [s, n](std::uint64_t t) {
              auto f = FiniteSet::from_index(t & full_mask(n));
              auto u = OpenSet::from_index(t >> n);
              if (!s.contains(u, f)) f = FiniteSet{};
              return DoublePair{std::move(f), std::move(u)};
            }};
  }
  return {"all-pairs", infinite, [s](std::uint64_t t) {
            const auto [a, c] = unpair(t);
            auto f = FiniteSet::from_index(a);
            auto u = OpenSet::from_index(c);
            if (!s.contains(u, f)) f = FiniteSet{};
            return DoublePair{std::move(f), std::move(u)};
          }};
}

using CoverSequence = std::function<OmegaCover(std::uint64_t)>;
using DoubleCoverSequence = std::function<DoubleCover(std::uint64_t)>;

/// Selection n is the first member of covers(n) containing the n-th canonical
/// finite set (taken modulo 2^|X| on finite spaces).
inline Enumeration<OpenSet> omega_selector_countable(const Space& s, CoverSequence covers,
                                                     std::uint64_t search_bound = kDefaultSearchBound) {
  return {"omega-selection", infinite, [s, covers, search_bound](std::uint64_t n) {
            std::uint64_t idx = n;
            if (s.finite() && s.n() < 64) idx = n % bit(s.n());
            const auto f = FiniteSet::from_index(idx);
            const auto oc = covers(n);
            for (std::uint64_t k = 0; k < search_bound; ++k) {
              auto u = oc.get(k);
              if (!u) break;
              if (s.contains(*u, f)) return *u;
            }
            throw SearchBoundExceeded("cover " + std::to_string(n) + " has no member containing finite set " +
                                      std::to_string(idx));
          }};
}

/// B_k of the union-closed base: the (k+1)-th canonical open set.
inline OpenSet union_base(std::uint64_t k) { return OpenSet::from_index(k + 1); }

/// Owner of inning n in the diagonal partition I_k = { diag(k, j) }.
inline std::uint64_t partition_owner(std::uint64_t n) { return unpair(n).first; }

namespace detail {

// j-th finite subset of the points of B (bits of j over B's points in order).
inline FiniteSet finite_subset_of_open(const Space& s, const OpenSet& b, std::uint64_t j,
                                       std::uint64_t search_bound) {
  std::vector<Point> members;
  if (s.has_masks()) {
    auto pts = mask_elements(s.open_mask(b));
    if (pts.size() < 64) j %= bit(pts.size());
    for (auto i : mask_elements(j)) members.push_back(pts[i]);
    return FiniteSet(std::move(members));
  }
  const auto want = mask_elements(j);
  std::uint64_t rank = 0, wi = 0;
  for (Point p = 0; p < search_bound && wi < want.size(); ++p) {
    if (!s.contains(b, p)) continue;
    if (rank == want[wi]) {
      members.push_back(p);
      ++wi;
    }
    ++rank;
  }
  if (wi < want.size()) throw SearchBoundExceeded("not enough points inside B_k");
  return FiniteSet(std::move(members));
}

}  // namespace detail

/// For n in I_k: the first pair (F, U) of dcs(n) with U <= B_k and containing
/// the n's share of finite subsets of B_k.
inline DoubleCover second_countable_double_selector(const Space& s, DoubleCoverSequence dcs,
                                                    std::uint64_t search_bound = kDefaultSearchBound) {
  return {"double-selection", infinite, [s, dcs, search_bound](std::uint64_t n) {
            const auto [k, j] = unpair(n);
            const auto bk = union_base(k);
            const auto g = detail::finite_subset_of_open(s, bk, j, search_bound);
            const auto dc = dcs(n);
            for (std::uint64_t t = 0; t < search_bound; ++t) {
              auto p = double_pair(s, dc, t);
              if (!p) break;
              if (s.subset(p->second, bk) == Tri::True && s.contains(p->second, g)) return *p;
            }
            throw SearchBoundExceeded("double cover " + std::to_string(n) + " is not an omega-cover of B_" +
                                      std::to_string(k));
          }};
}

}  // namespace topogame
