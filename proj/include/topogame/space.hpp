#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace topogame {

/// Finite union of base elements, kept as an ascending duplicate-free list of
/// base indices. The empty list is the empty set.
class OpenSet {
 public:
  OpenSet() = default;
  explicit OpenSet(std::vector<Base> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end());
    parts_.erase(std::unique(parts_.begin(), parts_.end()), parts_.end());
  }
  static OpenSet basic(Base b) { return OpenSet(std::vector<Base>{b}); }

  /// Canonical enumeration of open sets: the parts are the set bits of `index`.
  static OpenSet from_index(std::uint64_t index) { return OpenSet(mask_elements(index)); }

  const std::vector<Base>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  OpenSet united(const OpenSet& other) const {
    auto all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return OpenSet(std::move(all));
  }

  friend auto operator<=>(const OpenSet&, const OpenSet&) = default;

 private:
  std::vector<Base> parts_;
};

/// Finite set of points. The canonical index of a finite set is the bit mask
/// of its elements: ordered by largest element, then colexicographically.
class FiniteSet {
 public:
  FiniteSet() = default;
  explicit FiniteSet(std::vector<Point> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  }
  static FiniteSet from_index(std::uint64_t index) { return FiniteSet(mask_elements(index)); }
  static FiniteSet from_mask(Mask m) { return from_index(m); }

  std::uint64_t index() const { return elements_mask(elems_); }
  Mask mask() const { return index(); }
  const std::vector<Point>& elements() const { return elems_; }
  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }

  bool subset_of(const FiniteSet& o) const {
    return std::includes(o.elems_.begin(), o.elems_.end(), elems_.begin(), elems_.end());
  }

  friend auto operator<=>(const FiniteSet&, const FiniteSet&) = default;

 private:
  std::vector<Point> elems_;
};

/// Lazily enumerated family. Finite families carry their size; indices at or
/// beyond the size are absent.
template <class T>
struct Enumeration {
  std::string label;
  Count size;
  std::function<T(std::uint64_t)> at;

  std::optional<T> get(std::uint64_t n) const {
    if (size && n >= *size) return std::nullopt;
    return at(n);
  }
  bool finite() const { return size.has_value(); }

  static Enumeration of(std::string label, std::vector<T> items) {
    auto shared = std::make_shared<const std::vector<T>>(std::move(items));
    return {std::move(label), shared->size(), [shared](std::uint64_t n) { return (*shared)[n]; }};
  }

  std::vector<T> prefix(std::uint64_t n) const {
    std::vector<T> out;
    for (std::uint64_t i = 0; i < n; ++i) {
      auto v = get(i);
      if (!v) break;
      out.push_back(std::move(*v));
    }
    return out;
  }
};

using CoverFamily = Enumeration<OpenSet>;

/// A set of points with decidable membership and an enumeration of members.
struct PointSet {
  std::string label;
  std::function<bool(Point)> contains;
  std::function<std::optional<Point>(std::uint64_t)> enumerate;

  static PointSet of(std::string label, std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto shared = std::make_shared<const std::vector<Point>>(std::move(pts));
    return {std::move(label),
            [shared](Point p) { return std::binary_search(shared->begin(), shared->end(), p); },
            [shared](std::uint64_t n) -> std::optional<Point> {
              if (n >= shared->size()) return std::nullopt;
              return (*shared)[n];
            }};
  }
  static PointSet of_mask(std::string label, Mask m) { return of(std::move(label), mask_elements(m)); }
};

class Space;

/// How a subspace sits inside its parent.
struct Embedding {
  std::shared_ptr<const struct SpaceImpl> parent;
  std::function<Point(Point)> to_parent_point;
  std::function<std::optional<Point>(Point)> from_parent_point;
  std::function<Base(Base)> to_parent_base;
  /// Subspace index of the trace of a parent base element; nullopt if the trace is empty.
  std::function<std::optional<Base>(Base)> from_parent_base;
  /// Parent open set whose trace is the given subspace open set (exact for finite spaces).
  std::function<OpenSet(const OpenSet&)> to_parent_open;
};

struct SpaceImpl {
  std::string label;
  Count points;
  Count bases;
  std::function<bool(Point, Base)> member;
  std::function<Point(Base)> witness;
  // Optional exact decisions; generic searches are used when absent.
  std::function<std::optional<Point>(Base, Base)> meet_witness;
  std::function<Tri(Base, const OpenSet&)> within;
  std::function<Base(Point, std::uint64_t)> neighborhood;
  std::shared_ptr<const Embedding> embedding;
  // Filled for finite spaces of at most 64 points.
  std::vector<Mask> masks;
};

inline constexpr std::uint64_t kDefaultSearchBound = 10000;

/// Immutable, cheaply copyable handle to a countably presented space.
class Space {
 public:
  Space() = default;
  explicit Space(std::shared_ptr<const SpaceImpl> impl) : impl_(std::move(impl)) {}

  static Space make(SpaceImpl impl) {
    if (impl.points && impl.bases && *impl.points <= 64 && impl.masks.empty()) {
      impl.masks.resize(*impl.bases);
      for (Base b = 0; b < *impl.bases; ++b)
        for (Point p = 0; p < *impl.points; ++p)
          if (impl.member(p, b)) impl.masks[b] |= bit(p);
    }
    return Space(std::make_shared<const SpaceImpl>(std::move(impl)));
  }

  const std::shared_ptr<const SpaceImpl>& impl() const { return impl_; }
  const std::string& label() const { return impl_->label; }
  Count point_count() const { return impl_->points; }
  Count base_count() const { return impl_->bases; }
  bool finite() const { return impl_->points.has_value(); }
  bool has_masks() const { return !impl_->masks.empty() || (impl_->bases && *impl_->bases == 0); }
  std::uint64_t n() const {
    if (!impl_->points) throw InvalidArgument(label() + " is not finite");
    return *impl_->points;
  }
  std::uint64_t nbases() const {
    if (!impl_->bases) throw InvalidArgument(label() + " has an infinite base");
    return *impl_->bases;
  }
  Mask all_mask() const { return full_mask(n()); }

  bool member(Point p, Base b) const {
    if (has_masks()) return (impl_->masks[b] >> p) & 1;
    return impl_->member(p, b);
  }
  Point witness(Base b) const { return impl_->witness(b); }
  Mask base_mask(Base b) const { return impl_->masks.at(b); }

  bool contains(const OpenSet& u, Point p) const {
    for (auto b : u.parts())
      if (member(p, b)) return true;
    return false;
  }
  bool contains(const OpenSet& u, const FiniteSet& f) const {
    for (auto p : f.elements())
      if (!contains(u, p)) return false;
    return true;
  }

  Mask open_mask(const OpenSet& u) const {
    Mask m = 0;
    for (auto b : u.parts()) m |= base_mask(b);
    return m;
  }

  /// Canonical open set for an open mask of a finite space: every base element inside it.
  OpenSet open_of_mask(Mask m) const {
    std::vector<Base> parts;
    for (Base b = 0; b < nbases(); ++b)
      if (subset_of(base_mask(b), m)) parts.push_back(b);
    OpenSet u(std::move(parts));
    if (open_mask(u) != m) throw InvalidArgument("mask is not open in " + label());
    return u;
  }

  std::optional<Point> meet_witness(Base a, Base b, std::uint64_t bound = kDefaultSearchBound) const {
    if (has_masks()) {
      const Mask m = base_mask(a) & base_mask(b);
      if (!m) return std::nullopt;
      return static_cast<Point>(std::countr_zero(m));
    }
    if (impl_->meet_witness) return impl_->meet_witness(a, b);
    const std::uint64_t lim = impl_->points ? std::min(*impl_->points, bound) : bound;
    for (Point p = 0; p < lim; ++p)
      if (member(p, a) && member(p, b)) return p;
    return std::nullopt;
  }

  Tri meets(Base a, Base b, std::uint64_t bound = kDefaultSearchBound) const {
    if (meet_witness(a, b, bound)) return Tri::True;
    if (has_masks() || impl_->meet_witness || (impl_->points && *impl_->points <= bound)) return Tri::False;
    return Tri::Indeterminate;
  }

  Tri meets(Base a, const OpenSet& u, std::uint64_t bound = kDefaultSearchBound) const {
    Tri out = Tri::False;
    for (auto b : u.parts()) {
      const auto t = meets(a, b, bound);
      if (t == Tri::True) return Tri::True;
      if (t == Tri::Indeterminate) out = Tri::Indeterminate;
    }
    return out;
  }

  /// Base element b lies inside u.
  Tri within(Base b, const OpenSet& u) const {
    if (has_masks()) return tri(subset_of(base_mask(b), open_mask(u)));
    if (std::binary_search(u.parts().begin(), u.parts().end(), b)) return Tri::True;
    if (impl_->within) return impl_->within(b, u);
    return Tri::Indeterminate;
  }

  Tri subset(const OpenSet& u, const OpenSet& v) const {
    if (has_masks()) return tri(subset_of(open_mask(u), open_mask(v)));
    Tri out = Tri::True;
    for (auto b : u.parts()) {
      const auto t = within(b, v);
      if (t == Tri::False) return Tri::False;
      if (t == Tri::Indeterminate) out = Tri::Indeterminate;
    }
    return out;
  }

  /// A base element containing p, varied by seed.
  Base neighborhood(Point p, std::uint64_t seed) const {
    if (impl_->neighborhood) return impl_->neighborhood(p, seed);
    std::vector<Base> candidates;
    const std::uint64_t lim = impl_->bases ? std::min<std::uint64_t>(*impl_->bases, 4096) : 4096;
    for (Base b = 0; b < lim; ++b)
      if (member(p, b)) candidates.push_back(b);
    if (candidates.empty()) throw SearchBoundExceeded("no neighbourhood found for point " + std::to_string(p));
    return candidates[splitmix64(seed) % candidates.size()];
  }

  const Embedding* embedding() const { return impl_->embedding.get(); }
  Space parent() const {
    if (!embedding()) throw InvalidArgument(label() + " is not a subspace");
    return Space(embedding()->parent);
  }

  /// Trace on this subspace of an open set of the parent.
  OpenSet trace(const OpenSet& parent_open) const {
    const auto* e = embedding();
    if (!e) throw InvalidArgument(label() + " is not a subspace");
    std::vector<Base> parts;
    for (auto b : parent_open.parts())
      if (auto s = e->from_parent_base(b)) parts.push_back(*s);
    return OpenSet(std::move(parts));
  }

  friend bool operator==(const Space& a, const Space& b) { return a.impl_ == b.impl_; }

 private:
  std::shared_ptr<const SpaceImpl> impl_;
};

// ---------------------------------------------------------------------------
// Horizon-bounded predicates

/// d meets each of the first m base elements, looking at most search_bound
/// enumerated members per base element. Exact on finite spaces.
inline Tri dense_at_horizon(const Space& s, const PointSet& d, std::uint64_t m, std::uint64_t search_bound) {
  if (search_bound == 0) throw InvalidArgument("search_bound must be positive");
  if (s.base_count() && m > *s.base_count()) throw InvalidArgument("horizon exceeds base count");
  Tri out = Tri::True;
  for (Base b = 0; b < m; ++b) {
    bool found = false;
    if (s.finite()) {
      for (Point p = 0; p < s.n() && !found; ++p) found = d.contains(p) && s.member(p, b);
      if (!found) return Tri::False;
      continue;
    }
    bool exhausted = false;
    for (std::uint64_t k = 0; k < search_bound && !found; ++k) {
      auto p = d.enumerate(k);
      if (!p) {
        exhausted = true;
        break;
      }
      found = s.member(*p, b);
    }
    if (!found) {
      if (exhausted) return Tri::False;
      out = Tri::Indeterminate;
    }
  }
  return out;
}

/// Every point index below m lies in a member among the first search_bound members.
inline Tri is_cover_at_horizon(const Space& s, const CoverFamily& fam, std::uint64_t m, std::uint64_t search_bound) {
  if (search_bound == 0) throw InvalidArgument("search_bound must be positive");
  if (s.point_count()) m = std::min(m, *s.point_count());
  Tri out = Tri::True;
  for (Point p = 0; p < m; ++p) {
    bool found = false, exhausted = false;
    for (std::uint64_t k = 0; k < search_bound && !found; ++k) {
      auto u = fam.get(k);
      if (!u) {
        exhausted = true;
        break;
      }
      found = s.contains(*u, p);
    }
    if (!found) {
      if (exhausted) return Tri::False;
      out = Tri::Indeterminate;
    }
  }
  return out;
}

/// Every base element below m meets the union of the open sets.
inline Tri union_dense_at_horizon(const Space& s, const std::vector<OpenSet>& opens, std::uint64_t m,
                                  std::uint64_t search_bound = kDefaultSearchBound) {
  if (s.base_count()) m = std::min(m, *s.base_count());
  Tri out = Tri::True;
  for (Base b = 0; b < m; ++b) {
    Tri hit = Tri::False;
    for (const auto& u : opens) {
      const auto t = s.meets(b, u, search_bound);
      if (t == Tri::True) {
        hit = Tri::True;
        break;
      }
      if (t == Tri::Indeterminate) hit = Tri::Indeterminate;
    }
    if (hit == Tri::False) return Tri::False;
    if (hit == Tri::Indeterminate) out = Tri::Indeterminate;
  }
  return out;
}

/// Union of the family members among the first search_bound meets each base element below m.
inline Tri family_dense_at_horizon(const Space& s, const CoverFamily& fam, std::uint64_t m,
                                   std::uint64_t search_bound) {
  auto members = fam.prefix(search_bound);
  const auto t = union_dense_at_horizon(s, members, m, search_bound);
  if (t == Tri::False && !(fam.size && *fam.size <= search_bound)) return Tri::Indeterminate;
  return t;
}

/// Open set meets each of the first m base elements (dense-open test).
inline Tri open_dense_at_horizon(const Space& s, const OpenSet& u, std::uint64_t m,
                                 std::uint64_t search_bound = kDefaultSearchBound) {
  return union_dense_at_horizon(s, {u}, m, search_bound);
}

/// Points listed are dense at horizon m (exact membership; no search involved).
inline bool points_dense_at_horizon(const Space& s, const std::vector<Point>& pts, std::uint64_t m) {
  if (s.base_count()) m = std::min(m, *s.base_count());
  for (Base b = 0; b < m; ++b) {
    bool hit = false;
    for (auto p : pts)
      if (s.member(p, b)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

/// The first m canonical finite sets (restricted to the point universe) each sit inside some member.
inline Tri is_omega_cover_at_horizon(const Space& s, const CoverFamily& fam, std::uint64_t m,
                                     std::uint64_t search_bound) {
  if (s.finite() && s.n() < 64) m = std::min<std::uint64_t>(m, bit(s.n()));
  Tri out = Tri::True;
  for (std::uint64_t idx = 0; idx < m; ++idx) {
    const auto f = FiniteSet::from_index(idx);
    bool found = false, exhausted = false;
    for (std::uint64_t k = 0; k < search_bound && !found; ++k) {
      auto u = fam.get(k);
      if (!u) {
        exhausted = true;
        break;
      }
      found = s.contains(*u, f);
    }
    if (!found) {
      if (exhausted) return Tri::False;
      out = Tri::Indeterminate;
    }
  }
  return out;
}

inline PointSet all_points(const Space& s) {
  const auto count = s.point_count();
  return {"all-points", [count](Point p) { return !count || p < *count; },
          [count](std::uint64_t n) -> std::optional<Point> {
            if (count && n >= *count) return std::nullopt;
            return n;
          }};
}

inline CoverFamily whole_space_family(const Space& s) {
  std::vector<Base> parts;
  if (s.finite()) {
    for (Base b = 0; b < s.nbases(); ++b) parts.push_back(b);
  } else {
    throw InvalidArgument("whole-space open set needs a finite base");
  }
  return CoverFamily::of("whole-space", {OpenSet(std::move(parts))});
}

/// The open set "all of X" for finite spaces.
inline OpenSet whole_open(const Space& s) {
  std::vector<Base> parts;
  for (Base b = 0; b < s.nbases(); ++b) parts.push_back(b);
  return OpenSet(std::move(parts));
}

}  // namespace topogame
