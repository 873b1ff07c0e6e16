#pragma once

// Built-in spaces and the constructions on spaces.

#include <algorithm>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "space.hpp"

namespace topogame {

// ---------------------------------------------------------------------------
// Finite spaces from preorders. Convention: open sets are the up-sets, so the
// minimal neighbourhood of x is { y : x <= y }.

struct Preorder {
  std::uint64_t n = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;  // (i, j) means i <= j

  /// Reflexive closure as a matrix; does not add transitive pairs.
  std::vector<Mask> up_sets() const {
    if (n > 64) throw DimensionError("finite spaces are limited to 64 points");
    std::vector<Mask> up(n);
    for (std::uint64_t i = 0; i < n; ++i) up[i] = bit(i);
    for (auto [i, j] : pairs) {
      if (i >= n || j >= n) throw InvalidArgument("order pair out of range");
      up[i] |= bit(j);
    }
    return up;
  }

  bool transitive() const {
    const auto up = up_sets();
    for (std::uint64_t i = 0; i < n; ++i)
      for (auto j : mask_elements(up[i]))
        if (!subset_of(up[j], up[i])) return false;
    return true;
  }

  bool t0() const {
    const auto up = up_sets();
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = i + 1; j < n; ++j)
        if ((up[i] >> j & 1) && (up[j] >> i & 1)) return false;
    return true;
  }
};

inline Space finite_space(const Preorder& order, std::string label = "") {
  if (!order.transitive()) throw InvalidArgument("relation is not a preorder (not transitive)");
  if (order.n == 0) throw InvalidArgument("finite space needs at least one point");
  auto up = std::make_shared<const std::vector<Mask>>(order.up_sets());
  if (label.empty()) label = "finite:" + std::to_string(order.n);
  SpaceImpl impl;
  impl.label = std::move(label);
  impl.points = order.n;
  impl.bases = order.n;
  impl.member = [up](Point p, Base b) { return ((*up)[b] >> p) & 1; };
  impl.witness = [](Base b) { return b; };
  return Space::make(std::move(impl));
}

inline Space discrete(std::uint64_t n) { return finite_space({n, {}}, "discrete:" + std::to_string(n)); }

inline Space indiscrete(std::uint64_t n) {
  Preorder o{n, {}};
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j) o.pairs.push_back({i, j});
  return finite_space(o, "indiscrete:" + std::to_string(n));
}

inline Space chain(std::uint64_t n) {
  Preorder o{n, {}};
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = i + 1; j < n; ++j) o.pairs.push_back({i, j});
  return finite_space(o, "chain:" + std::to_string(n));
}

/// Points {0, 1}, open sets {}, {1}, {0, 1}.
inline Space sierpinski() { return finite_space({2, {{0, 1}}}, "sierpinski"); }

/// Every preorder on n points, in a fixed order (by off-diagonal relation bits).
inline std::vector<Preorder> all_preorders(std::uint64_t n, bool t0_only = false) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> slots;
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j)
      if (i != j) slots.push_back({i, j});
  std::vector<Preorder> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
    Preorder o{n, {}};
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (m >> k & 1) o.pairs.push_back(slots[k]);
    if (o.transitive() && (!t0_only || o.t0())) out.push_back(std::move(o));
  }
  return out;
}

inline std::string preorder_label(const Preorder& o) {
  std::string s = "preorder:" + std::to_string(o.n) + "[";
  for (std::size_t i = 0; i < o.pairs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(o.pairs[i].first) + "<=" + std::to_string(o.pairs[i].second);
  }
  return s + "]";
}

/// All spaces from preorders on 1..max_points points.
inline std::vector<Space> small_spaces(std::uint64_t max_points, bool t0_only = false) {
  std::vector<Space> out;
  for (std::uint64_t n = 1; n <= max_points; ++n)
    for (const auto& o : all_preorders(n, t0_only)) out.push_back(finite_space(o, preorder_label(o)));
  return out;
}

// ---------------------------------------------------------------------------
// Rationals

inline Space rationals() {
  SpaceImpl impl;
  impl.label = "rationals";
  impl.points = infinite;
  impl.bases = infinite;
  impl.member = [](Point p, Base b) { return q::interval_at(b).contains(q::rational_at(p)); };
  impl.witness = [](Base b) { return q::rational_index(q::interval_at(b).midpoint()); };
  impl.meet_witness = [](Base a, Base b) -> std::optional<Point> {
    const auto x = q::interval_at(a), y = q::interval_at(b);
    if (!q::overlap(x, y)) return std::nullopt;
    const q::Interval both{std::max(x.lo, y.lo), std::min(x.hi, y.hi)};
    return q::rational_index(both.midpoint());
  };
  impl.within = [](Base b, const OpenSet& u) {
    std::vector<q::Interval> parts;
    for (auto c : u.parts()) parts.push_back(q::interval_at(c));
    return tri(q::interval_within(q::interval_at(b), std::move(parts)));
  };
  impl.neighborhood = [](Point p, std::uint64_t seed) {
    const auto x = q::rational_at(p);
    const auto h = splitmix64(seed);
    const std::uint64_t e = h % 5;
    const auto scale = q::Rational(std::int64_t{1} << e);
    const auto r = static_cast<std::int64_t>((h >> 8) % 3);
    const auto t = static_cast<std::int64_t>((h >> 16) % 3);
    const auto lo = (q::ceil(x * scale) - 1 - r) / scale;
    const auto hi = (q::floor(x * scale) + 1 + t) / scale;
    return q::interval_index(lo, hi);
  };
  return Space::make(std::move(impl));
}

// ---------------------------------------------------------------------------
// Pair encodings shared by products.

struct PairCodec {
  Count nx, ny;

  std::uint64_t encode(std::uint64_t i, std::uint64_t j) const {
    if (nx && ny) return i * *ny + j;
    if (nx) return j * *nx + i;
    if (ny) return i * *ny + j;
    return diag(i, j);
  }
  std::pair<std::uint64_t, std::uint64_t> decode(std::uint64_t n) const {
    if (nx && ny) return {n / *ny, n % *ny};
    if (nx) return {n % *nx, n / *nx};
    if (ny) return {n / *ny, n % *ny};
    return unpair(n);
  }
  Count total() const {
    if (nx && ny) return *nx * *ny;
    return infinite;
  }
};

/// Rectangle base over the factors' bases.
inline Space product(const Space& sx, const Space& sy) {
  const PairCodec pts{sx.point_count(), sy.point_count()};
  const PairCodec bas{sx.base_count(), sy.base_count()};
  SpaceImpl impl;
  impl.label = "product:" + sx.label() + "," + sy.label();
  impl.points = pts.total();
  impl.bases = bas.total();
  impl.member = [=](Point p, Base b) {
    const auto [x, y] = pts.decode(p);
    const auto [a, c] = bas.decode(b);
    return sx.member(x, a) && sy.member(y, c);
  };
  impl.witness = [=](Base b) {
    const auto [a, c] = bas.decode(b);
    return pts.encode(sx.witness(a), sy.witness(c));
  };
  if (!(sx.has_masks() && sy.has_masks())) {
    impl.meet_witness = [=](Base b1, Base b2) -> std::optional<Point> {
      const auto [a1, c1] = bas.decode(b1);
      const auto [a2, c2] = bas.decode(b2);
      auto x = sx.meet_witness(a1, a2);
      if (!x) return std::nullopt;
      auto y = sy.meet_witness(c1, c2);
      if (!y) return std::nullopt;
      return pts.encode(*x, *y);
    };
    impl.within = [=](Base b, const OpenSet& u) {
      const auto [a, c] = bas.decode(b);
      for (auto r : u.parts()) {
        const auto [a2, c2] = bas.decode(r);
        if (sx.within(a, OpenSet::basic(a2)) == Tri::True && sy.within(c, OpenSet::basic(c2)) == Tri::True)
          return Tri::True;
      }
      return Tri::Indeterminate;
    };
    impl.neighborhood = [=](Point p, std::uint64_t seed) {
      const auto [x, y] = pts.decode(p);
      return bas.encode(sx.neighborhood(x, seed), sy.neighborhood(y, mix(seed, 1)));
    };
  }
  return Space::make(std::move(impl));
}

/// Index codec for product spaces, exposed so callers can address rectangles.
inline PairCodec product_points(const Space& sx, const Space& sy) { return {sx.point_count(), sy.point_count()}; }
inline PairCodec product_bases(const Space& sx, const Space& sy) { return {sx.base_count(), sy.base_count()}; }

// ---------------------------------------------------------------------------
// Alexandroff double: points (x, c) with index 2x + c. The copy c = 1 is
// isolated; a basic neighbourhood of (x, 0) is B x {0} u (B x {1} \ F).

struct DoubleBase {
  bool singleton;
  Point x;        // singleton {(x,1)}
  Base b;         // otherwise base element of the factor
  FiniteSet f;    // removed from the isolated copy
};

class DoubleCodec {
 public:
  DoubleCodec(Count n, Count nb) : n_(n), nb_(nb) {
    if (n && *n >= 64) throw DimensionError("finite double limited to 63 points");
  }
  Count count() const {
    if (n_ && nb_) return *n_ + *nb_ * bit(*n_);
    return infinite;
  }
  DoubleBase decode(Base k) const {
    if (n_ && nb_) {
      if (k < *n_) return {true, k, 0, {}};
      const auto r = k - *n_;
      return {false, 0, r >> *n_, FiniteSet::from_index(r & full_mask(*n_))};
    }
    if (k % 2 == 0) return {true, k / 2, 0, {}};
    const auto [b, f] = unpair(k / 2);
    return {false, 0, b, FiniteSet::from_index(f)};
  }
  Base encode(const DoubleBase& d) const {
    if (n_ && nb_) return d.singleton ? d.x : *n_ + (d.b << *n_) + d.f.index();
    return d.singleton ? 2 * d.x : 2 * diag(d.b, d.f.index()) + 1;
  }

 private:
  Count n_, nb_;
};

inline Space alexandroff_double(const Space& s) {
  const DoubleCodec codec(s.point_count(), s.base_count());
  SpaceImpl impl;
  impl.label = "double:" + s.label();
  impl.points = s.point_count() ? Count(2 * *s.point_count()) : infinite;
  impl.bases = codec.count();
  impl.member = [=](Point p, Base k) {
    const auto x = p / 2;
    const bool top = p % 2 == 1;
    const auto d = codec.decode(k);
    if (d.singleton) return top && x == d.x;
    if (!s.member(x, d.b)) return false;
    return !top || !std::binary_search(d.f.elements().begin(), d.f.elements().end(), x);
  };
  impl.witness = [=](Base k) {
    const auto d = codec.decode(k);
    return d.singleton ? 2 * d.x + 1 : 2 * s.witness(d.b);
  };
  if (!s.has_masks()) {
    impl.meet_witness = [=](Base k1, Base k2) -> std::optional<Point> {
      const auto a = codec.decode(k1), b = codec.decode(k2);
      auto in_f = [](const FiniteSet& f, Point x) {
        return std::binary_search(f.elements().begin(), f.elements().end(), x);
      };
      if (a.singleton && b.singleton) return a.x == b.x ? std::optional<Point>(2 * a.x + 1) : std::nullopt;
      if (a.singleton || b.singleton) {
        const auto& one = a.singleton ? a : b;
        const auto& two = a.singleton ? b : a;
        if (s.member(one.x, two.b) && !in_f(two.f, one.x)) return 2 * one.x + 1;
        return std::nullopt;
      }
      auto w = s.meet_witness(a.b, b.b);
      if (!w) return std::nullopt;
      return 2 * *w;
    };
    impl.neighborhood = [=](Point p, std::uint64_t seed) {
      if (p % 2 == 1) return codec.encode({true, p / 2, 0, {}});
      const auto removed = FiniteSet::from_index(splitmix64(seed) % 8);
      return codec.encode({false, 0, s.neighborhood(p / 2, seed), removed});
    };
  }
  return Space::make(std::move(impl));
}

inline Base double_singleton(const Space& s, Point x) {
  return DoubleCodec(s.point_count(), s.base_count()).encode({true, x, 0, {}});
}
inline Base double_basic(const Space& s, Base b, const FiniteSet& removed) {
  return DoubleCodec(s.point_count(), s.base_count()).encode({false, 0, b, removed});
}

// ---------------------------------------------------------------------------
// Subspaces

namespace detail {

/// Lazily grown ascending list of naturals satisfying a predicate.
class LazyFilter {
 public:
  explicit LazyFilter(std::function<bool(std::uint64_t)> pred, std::uint64_t scan_limit = 50'000'000)
      : pred_(std::move(pred)), limit_(scan_limit) {}

  std::uint64_t at(std::uint64_t i) {
    std::lock_guard lock(mu_);
    while (found_.size() <= i) step();
    return found_[i];
  }

  std::optional<std::uint64_t> rank(std::uint64_t x) {
    if (!pred_(x)) return std::nullopt;
    std::lock_guard lock(mu_);
    while (scanned_ <= x) step();
    auto it = std::lower_bound(found_.begin(), found_.end(), x);
    return static_cast<std::uint64_t>(it - found_.begin());
  }

 private:
  void step() {
    if (scanned_ >= limit_) throw SearchBoundExceeded("subspace enumeration scan limit reached");
    if (pred_(scanned_)) found_.push_back(scanned_);
    ++scanned_;
  }

  std::function<bool(std::uint64_t)> pred_;
  std::uint64_t limit_;
  std::mutex mu_;
  std::vector<std::uint64_t> found_;
  std::uint64_t scanned_ = 0;
};

}  // namespace detail

/// Subspace of a finite space on the points of `pts`; base = nonempty traces.
inline Space finite_subspace(const Space& s, Mask pts, std::string label = "") {
  if (!s.has_masks()) throw InvalidArgument("finite_subspace needs a finite space");
  if (pts == 0) throw InvalidArgument("empty subspace");
  auto points = std::make_shared<const std::vector<Point>>(mask_elements(pts));
  std::vector<Base> bases;
  for (Base b = 0; b < s.nbases(); ++b)
    if (s.base_mask(b) & pts) bases.push_back(b);
  auto bases_p = std::make_shared<const std::vector<Base>>(std::move(bases));
  const bool open = [&] {
    Mask u = 0;
    for (auto b : *bases_p)
      if (subset_of(s.base_mask(b), pts)) u |= s.base_mask(b);
    return u == pts;
  }();

  auto emb = std::make_shared<Embedding>();
  emb->parent = s.impl();
  emb->to_parent_point = [points](Point p) { return (*points)[p]; };
  emb->from_parent_point = [points](Point p) -> std::optional<Point> {
    auto it = std::lower_bound(points->begin(), points->end(), p);
    if (it == points->end() || *it != p) return std::nullopt;
    return static_cast<Point>(it - points->begin());
  };
  emb->to_parent_base = [bases_p](Base b) { return (*bases_p)[b]; };
  emb->from_parent_base = [bases_p](Base b) -> std::optional<Base> {
    auto it = std::lower_bound(bases_p->begin(), bases_p->end(), b);
    if (it == bases_p->end() || *it != b) return std::nullopt;
    return static_cast<Base>(it - bases_p->begin());
  };
  emb->to_parent_open = [s, points, bases_p, pts, open](const OpenSet& o) {
    if (!open) throw InvalidArgument("subspace is not open in its parent");
    Mask m = 0;
    for (auto b : o.parts()) m |= s.base_mask((*bases_p)[b]) & pts;
    return s.open_of_mask(m);
  };

  SpaceImpl impl;
  impl.label = label.empty() ? "sub:" + s.label() + "{" + std::to_string(pts) + "}" : std::move(label);
  impl.points = points->size();
  impl.bases = bases_p->size();
  impl.member = [s, points, bases_p](Point p, Base b) { return s.member((*points)[p], (*bases_p)[b]); };
  impl.witness = [s, points, bases_p, pts](Base b) {
    const Mask m = s.base_mask((*bases_p)[b]) & pts;
    const auto x = static_cast<Point>(std::countr_zero(m));
    return static_cast<Point>(std::lower_bound(points->begin(), points->end(), x) - points->begin());
  };
  impl.embedding = std::move(emb);
  return Space::make(std::move(impl));
}

/// Open subspace on u, points and base traces re-enumerated in parent order.
inline Space open_subspace(const Space& s, const OpenSet& u) {
  if (u.empty()) throw InvalidArgument("open_subspace needs a nonempty open set");
  std::string label = "opensub:" + s.label() + ",[";
  for (std::size_t i = 0; i < u.parts().size(); ++i) label += (i ? "," : "") + std::to_string(u.parts()[i]);
  label += "]";
  if (s.has_masks()) {
    Mask m = s.open_mask(u);
    return finite_subspace(s, m, label);
  }
  auto points = std::make_shared<detail::LazyFilter>([s, u](std::uint64_t p) { return s.contains(u, p); });
  auto bases = std::make_shared<detail::LazyFilter>([s, u](std::uint64_t b) { return s.meets(b, u) == Tri::True; });

  auto emb = std::make_shared<Embedding>();
  emb->parent = s.impl();
  emb->to_parent_point = [points](Point p) { return points->at(p); };
  emb->from_parent_point = [points](Point p) { return points->rank(p); };
  emb->to_parent_base = [bases](Base b) { return bases->at(b); };
  emb->from_parent_base = [bases](Base b) { return bases->rank(b); };
  emb->to_parent_open = [bases](const OpenSet& o) {
    std::vector<Base> parts;
    for (auto b : o.parts()) parts.push_back(bases->at(b));
    return OpenSet(std::move(parts));
  };

  SpaceImpl impl;
  impl.label = label;
  impl.points = infinite;
  impl.bases = infinite;
  impl.member = [s, points, bases](Point p, Base b) { return s.member(points->at(p), bases->at(b)); };
  impl.witness = [s, u, points, bases](Base k) {
    const auto b = bases->at(k);
    for (auto c : u.parts()) {
      auto w = s.meet_witness(b, c);
      if (w && s.member(*w, b) && s.contains(u, *w)) return *points->rank(*w);
    }
    throw SearchBoundExceeded("no witness for subspace base element");
  };
  impl.embedding = std::move(emb);
  return Space::make(std::move(impl));
}

/// Subspace on a dense point set of an infinite space. Every base element has
/// a nonempty trace, so base indices are shared with the parent.
inline Space dense_subspace(const Space& s, const PointSet& d, std::uint64_t search_bound = kDefaultSearchBound) {
  if (s.has_masks()) {
    Mask m = 0;
    for (Point p = 0; p < s.n(); ++p)
      if (d.contains(p)) m |= bit(p);
    return finite_subspace(s, m, "densesub:" + s.label());
  }
  auto points = std::make_shared<detail::LazyFilter>([d](std::uint64_t p) { return d.contains(p); });
  auto emb = std::make_shared<Embedding>();
  emb->parent = s.impl();
  emb->to_parent_point = [points](Point p) { return points->at(p); };
  emb->from_parent_point = [points](Point p) { return points->rank(p); };
  emb->to_parent_base = [](Base b) { return b; };
  emb->from_parent_base = [](Base b) -> std::optional<Base> { return b; };
  emb->to_parent_open = [](const OpenSet&) -> OpenSet {
    throw InvalidArgument("dense subspace is not open in its parent");
  };
  SpaceImpl impl;
  impl.label = "densesub:" + s.label() + "/" + d.label;
  impl.points = infinite;
  impl.bases = s.base_count();
  impl.member = [s, points](Point p, Base b) { return s.member(points->at(p), b); };
  impl.witness = [s, d, points, search_bound](Base b) {
    for (std::uint64_t k = 0; k < search_bound; ++k) {
      auto p = d.enumerate(k);
      if (!p) break;
      if (s.member(*p, b)) return *points->rank(*p);
    }
    throw SearchBoundExceeded("dense set misses a base element within the search bound");
  };
  impl.embedding = std::move(emb);
  return Space::make(std::move(impl));
}

/// Dyadic rationals as a point set of the rationals.
inline PointSet dyadic_points() {
  return {"dyadics", [](Point p) { return q::is_dyadic(q::rational_at(p)); },
          [](std::uint64_t k) -> std::optional<Point> { return q::rational_index(q::dyadic_at(k)); }};
}

/// Base witnesses: the k-th member lies in base element k.
inline PointSet witness_points(const Space& s) {
  return {"base-witnesses",
          [s](Point p) {
            if (s.label() == "rationals") return q::is_dyadic(q::rational_at(p));
            if (s.has_masks()) {
              for (Base b = 0; b < s.nbases(); ++b)
                if (s.witness(b) == p) return true;
              return false;
            }
            throw InvalidArgument("witness membership undecidable for " + s.label());
          },
          [s](std::uint64_t k) -> std::optional<Point> {
            if (s.base_count() && k >= *s.base_count()) return std::nullopt;
            return s.witness(k);
          }};
}

}  // namespace topogame

namespace topogame {

/// All open sets of a finite space as masks, ascending.
inline std::vector<Mask> open_lattice(const Space& s) {
  std::vector<Mask> opens{0};
  std::vector<Mask> frontier{0};
  std::vector<Mask> bases;
  for (Base b = 0; b < s.nbases(); ++b) bases.push_back(s.base_mask(b));
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  std::vector<Mask> seen{0};
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (auto m : frontier)
      for (auto b : bases) {
        const Mask u = m | b;
        auto it = std::lower_bound(seen.begin(), seen.end(), u);
        if (it != seen.end() && *it == u) continue;
        seen.insert(it, u);
        next.push_back(u);
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace topogame
