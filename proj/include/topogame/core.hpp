#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace topogame {

using Point = std::uint64_t;
using Base = std::uint64_t;
using Mask = std::uint64_t;

/// Cardinality of a point universe or base enumeration; nullopt means countably infinite.
using Count = std::optional<std::uint64_t>;

inline constexpr Count infinite = std::nullopt;

enum class Tri { False, True, Indeterminate };

inline Tri tri(bool b) { return b ? Tri::True : Tri::False; }

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    default: return "indeterminate";
  }
}

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A lazy search ran past its bound; usually a broken promise upstream.
struct SearchBoundExceeded : Error {
  using Error::Error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  CapExceeded(const std::string& what, std::uint64_t count)
      : Error(what + " (count " + std::to_string(count) + ")"), count(count) {}
  std::uint64_t count;
};

// ---------------------------------------------------------------------------
// Pairing

/// diag(k, j) = (k+j)(k+j+1)/2 + k. Row k of the diagonal partition is
/// I_k = { diag(k, j) : j < omega }.
constexpr std::uint64_t diag(std::uint64_t k, std::uint64_t j) {
  const std::uint64_t s = k + j;
  return s * (s + 1) / 2 + k;
}

/// Inverse of diag: returns (k, j).
inline std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t n) {
  auto s = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0);
  while (s * (s + 1) / 2 > n) --s;
  while ((s + 1) * (s + 2) / 2 <= n) ++s;
  const std::uint64_t k = n - s * (s + 1) / 2;
  return {k, s - k};
}

/// 0, -1, 1, -2, 2, ...
constexpr std::int64_t zigzag(std::uint64_t n) {
  return (n & 1) ? -static_cast<std::int64_t>((n + 1) / 2) : static_cast<std::int64_t>(n / 2);
}

constexpr std::uint64_t unzigzag(std::int64_t z) {
  return z < 0 ? static_cast<std::uint64_t>(-z) * 2 - 1 : static_cast<std::uint64_t>(z) * 2;
}

/// Stateless mixer used to derive per-position seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ splitmix64(b + 0x632be59bd9b4e019ULL));
}

// ---------------------------------------------------------------------------
// Bit masks (finite point sets with at most 64 points)

constexpr Mask bit(std::uint64_t i) { return Mask{1} << i; }
constexpr Mask full_mask(std::uint64_t n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }
constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
inline int popcount(Mask m) { return std::popcount(m); }

inline std::vector<std::uint64_t> mask_elements(Mask m) {
  std::vector<std::uint64_t> out;
  while (m) {
    out.push_back(static_cast<std::uint64_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

inline Mask elements_mask(const std::vector<std::uint64_t>& xs) {
  Mask m = 0;
  for (auto x : xs) {
    if (x >= 64) throw DimensionError("element index exceeds mask width: " + std::to_string(x));
    m |= bit(x);
  }
  return m;
}

}  // namespace topogame
