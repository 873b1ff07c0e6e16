#pragma once

// Finite-prefix combinatorics on the Baire space: the sets N_alpha of
// sequences whose selections miss a pi-base element, nowhere-dense witnesses,
// diagonal selection, property (P) and its padding, and the cover family
// induced by a vector family on a discrete index set.

#include <functional>
#include <vector>

#include "spaces.hpp"

namespace topogame {

/// Finite partial function on an initial segment of omega.
using SeqPrefix = std::vector<std::uint64_t>;

inline bool extends(const SeqPrefix& f, const SeqPrefix& sigma) {
  return f.size() >= sigma.size() && std::equal(sigma.begin(), sigma.end(), f.begin());
}

/// Rows of countable subfamilies U^n_k whose unions are dense (promised).
struct CoverTable {
  std::string label;
  std::uint64_t rows = 0;
  std::function<Count(std::uint64_t)> width;  // members in row n; nullopt = infinite
  std::function<OpenSet(std::uint64_t, std::uint64_t)> at;
  // Optional guess for a member of row n meeting an open set; checked before use.
  std::function<std::optional<std::uint64_t>(std::uint64_t, const OpenSet&)> locate;
};

struct VectorFamily {
  std::vector<std::vector<std::uint64_t>> vectors;
  std::vector<std::uint64_t> bound;  // empty when unbounded

  std::size_t length() const { return vectors.empty() ? bound.size() : vectors.front().size(); }
};

namespace detail {

inline Tri opens_meet(const Space& s, const OpenSet& a, const OpenSet& b, std::uint64_t search_bound) {
  Tri out = Tri::False;
  for (auto p : a.parts()) {
    const auto t = s.meets(p, b, search_bound);
    if (t == Tri::True) return Tri::True;
    if (t == Tri::Indeterminate) out = Tri::Indeterminate;
  }
  return out;
}

}  // namespace detail

/// f is in N_alpha (restricted to the modeled rows): B misses U^n_{f(n)} for every n.
inline Tri in_N_alpha(const Space& s, const OpenSet& b, const CoverTable& table, const SeqPrefix& f,
                      std::uint64_t search_bound = kDefaultSearchBound) {
  if (f.size() < table.rows) throw DimensionError("prefix shorter than the number of rows");
  Tri out = Tri::True;
  for (std::uint64_t n = 0; n < table.rows; ++n) {
    const auto t = detail::opens_meet(s, b, table.at(n, f[n]), search_bound);
    if (t == Tri::True) return Tri::False;
    if (t == Tri::Indeterminate) out = Tri::Indeterminate;
  }
  return out;
}

/// sigma extended by some j with B meeting U^k_j, k = |sigma|: the table's
/// located member when it checks out, otherwise the first such j. No extension
/// of the result lies in N_alpha.
inline SeqPrefix nowhere_dense_witness(const Space& s, const OpenSet& b, const CoverTable& table,
                                       const SeqPrefix& sigma, std::uint64_t search_bound = kDefaultSearchBound) {
  const auto k = sigma.size();
  if (k >= table.rows) throw DimensionError("prefix already covers every row");
  if (table.locate)
    if (auto j = table.locate(k, b); j && detail::opens_meet(s, b, table.at(k, *j), search_bound) == Tri::True) {
      auto tau = sigma;
      tau.push_back(*j);
      return tau;
    }
  const auto w = table.width(k);
  const std::uint64_t lim = w ? std::min(*w, search_bound) : search_bound;
  for (std::uint64_t j = 0; j < lim; ++j)
    if (detail::opens_meet(s, b, table.at(k, j), search_bound) == Tri::True) {
      auto tau = sigma;
      tau.push_back(j);
      return tau;
    }
  throw SearchBoundExceeded("row " + std::to_string(k) + " does not meet the pi-base element");
}

/// Serves pi-base element alpha at coordinate alpha, then pads with zeros.
inline SeqPrefix diagonal_selector(const Space& s, const std::vector<OpenSet>& pibase, const CoverTable& table,
                                   std::uint64_t search_bound = kDefaultSearchBound) {
  if (table.rows < pibase.size()) throw DimensionError("need at least as many rows as pi-base elements");
  SeqPrefix f;
  for (const auto& b : pibase) f = nowhere_dense_witness(s, b, table, f, search_bound);
  f.resize(table.rows, 0);
  return f;
}

/// The selection { U^n_{f(n)} : n < rows }.
inline std::vector<OpenSet> selection(const CoverTable& table, const SeqPrefix& f) {
  std::vector<OpenSet> out;
  for (std::uint64_t n = 0; n < table.rows; ++n) out.push_back(table.at(n, f[n]));
  return out;
}

/// Row n: the intervals (a/2^n, (a+1)/2^n) of the rationals, a = zigzag(k).
/// Locates the cell holding the midpoint of a base interval.
inline CoverTable dyadic_cover_table(std::uint64_t rows) {
  return {"dyadic", rows, [](std::uint64_t) { return infinite; }, [](std::uint64_t n, std::uint64_t k) {
            const q::Rational a(zigzag(k));
            const q::Rational scale(q::detail::pow2(n));
            return OpenSet::basic(q::interval_index(a / scale, (a + 1) / scale));
          },
          [](std::uint64_t n, const OpenSet& b) -> std::optional<std::uint64_t> {
            if (b.empty()) return std::nullopt;
            const auto mid = q::interval_at(b.parts().front()).midpoint();
            const auto a = q::floor(mid * q::Rational(q::detail::pow2(n))).numerator();
            return unzigzag(a);
          }};
}

namespace detail {

inline void check_lengths(const VectorFamily& fam, const std::vector<std::uint64_t>& bound) {
  for (const auto& v : fam.vectors)
    if (v.size() != bound.size()) throw DimensionError("vector length differs from the bound length");
}

// Calls visit(g) for every g below bound in lexicographic order; stops when visit returns false.
template <class Visit>
bool for_each_below(const std::vector<std::uint64_t>& bound, Visit visit) {
  for (auto b : bound)
    if (b == 0) return true;
  std::vector<std::uint64_t> g(bound.size(), 0);
  while (true) {
    if (!visit(g)) return false;
    std::size_t i = 0;
    while (i < g.size() && ++g[i] == bound[i]) g[i++] = 0;
    if (i == g.size()) return true;
  }
}

}  // namespace detail

/// Every g below g_bound has a member differing from it at every coordinate.
/// g_bound(n) must exceed every member's value at n, so one sentinel value
/// stands for all larger ones.
inline bool has_property_P(const VectorFamily& fam, const std::vector<std::uint64_t>& g_bound) {
  detail::check_lengths(fam, g_bound);
  for (const auto& v : fam.vectors)
    for (std::size_t n = 0; n < v.size(); ++n)
      if (v[n] >= g_bound[n]) throw InvalidArgument("g bound must exceed every member value");
  return detail::for_each_below(g_bound, [&](const std::vector<std::uint64_t>& g) {
    for (const auto& v : fam.vectors) {
      bool differs = true;
      for (std::size_t n = 0; n < v.size() && differs; ++n) differs = v[n] != g[n];
      if (differs) return true;
    }
    return false;
  });
}

/// Smallest per-coordinate bound exceeding every value of the given families.
inline std::vector<std::uint64_t> sentinel_bound(std::initializer_list<const VectorFamily*> fams) {
  std::vector<std::uint64_t> out;
  for (auto* f : fams)
    for (const auto& v : f->vectors) {
      if (out.size() < v.size()) out.resize(v.size(), 1);
      for (std::size_t n = 0; n < v.size(); ++n) out[n] = std::max(out[n], v[n] + 1);
    }
  return out;
}

/// h^i_alpha(n) = i below the cut, h_alpha(n) from the cut on, for every
/// i < min_{n < cut} b(n).
inline VectorFamily pad_family(const std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>>& h_list,
                               const std::vector<std::uint64_t>& b) {
  VectorFamily out{{}, b};
  for (const auto& [h, cut] : h_list) {
    if (h.size() != b.size()) throw DimensionError("vector length differs from the bound length");
    if (cut > h.size()) throw DimensionError("cut beyond the vector length");
    for (std::size_t n = cut; n < h.size(); ++n)
      if (h[n] >= b[n]) throw InvalidArgument("h exceeds b at or after the cut");
    if (cut == 0) {
      out.vectors.push_back(h);
      continue;
    }
    const auto range = *std::min_element(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(cut));
    for (std::uint64_t i = 0; i < range; ++i) {
      auto v = h;
      std::fill(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(cut), i);
      out.vectors.push_back(std::move(v));
    }
  }
  return out;
}

/// Discrete space on S = family members; U^n_k = { xi : f_xi(n) = k }.
inline CoverTable discrete_cover_family(const VectorFamily& fam) {
  auto vecs = std::make_shared<const std::vector<std::vector<std::uint64_t>>>(fam.vectors);
  auto bound = fam.bound;
  if (bound.empty()) {
    VectorFamily copy{fam.vectors, {}};
    bound = sentinel_bound({&copy});
  }
  return {"discrete-cover", fam.length(),
          [bound](std::uint64_t n) -> Count { return n < bound.size() ? bound[n] : 0; },
          [vecs](std::uint64_t n, std::uint64_t k) {
            std::vector<Base> parts;
            for (std::uint64_t xi = 0; xi < vecs->size(); ++xi)
              if ((*vecs)[xi][n] == k) parts.push_back(xi);
            return OpenSet(std::move(parts));
          },
          {}};
}

/// Some g below g_bound selects a cover of S: every xi lies in some U^n_{g(n)}.
inline bool covering_selection_exists(const CoverTable& table, std::uint64_t s_size,
                                      const std::vector<std::uint64_t>& g_bound) {
  if (s_size == 0) return true;
  const Space d = discrete(s_size);
  bool found = false;
  detail::for_each_below(g_bound, [&](const std::vector<std::uint64_t>& g) {
    Mask covered = 0;
    for (std::uint64_t n = 0; n < table.rows; ++n) covered |= d.open_mask(table.at(n, g[n]));
    if (covered == full_mask(s_size)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace topogame
