#pragma once

// JSON encodings for spaces, moves, transcripts, verdicts, double covers,
// vector families and cover tables.

#include <json.hpp>

#include "bairecat.hpp"
#include "finsolve.hpp"

namespace topogame {

using Json = nlohmann::ordered_json;

inline Json to_json(const OpenSet& u) { return u.parts(); }
inline Json to_json(const FiniteSet& f) { return f.elements(); }

inline OpenSet open_from_json(const Json& j) { return OpenSet(j.get<std::vector<Base>>()); }
inline FiniteSet finite_from_json(const Json& j) { return FiniteSet(j.get<std::vector<Point>>()); }

inline Json to_json(const Verdict& v) {
  return {{"horizon", v.horizon}, {"outcome", v.str()}};
}

/// `shown` members of an enumerated family are written out.
inline Json to_json(const Move& m, std::uint64_t shown = 8) {
  Json j;
  switch (m.type) {
    case Move::Type::Family: {
      j["type"] = "family";
      j["label"] = m.family.label;
      j["size"] = m.family.size ? Json(*m.family.size) : Json(nullptr);
      Json members = Json::array();
      for (const auto& u : m.family.prefix(shown)) members.push_back(to_json(u));
      j["members"] = members;
      break;
    }
    case Move::Type::Dense: {
      j["type"] = "dense";
      j["label"] = m.dense.label;
      Json members = Json::array();
      for (std::uint64_t k = 0; k < shown; ++k) {
        auto p = m.dense.enumerate(k);
        if (!p) break;
        members.push_back(*p);
      }
      j["members"] = members;
      break;
    }
    case Move::Type::Pick:
      j["type"] = "pick";
      j["index"] = m.index;
      break;
    case Move::Type::PickMany:
      j["type"] = "pick_many";
      j["indices"] = m.indices;
      break;
    case Move::Type::Point:
      j["type"] = "point";
      j["point"] = m.index;
      break;
    case Move::Type::Open:
      j["type"] = "open";
      j["open"] = to_json(m.open);
      break;
  }
  if (!m.note.empty()) j["note"] = m.note;
  return j;
}

/// Families and point sets come back as their written prefixes.
inline Move move_from_json(const Json& j) {
  const auto type = j.at("type").get<std::string>();
  Move m;
  if (type == "family") {
    std::vector<OpenSet> members;
    for (const auto& u : j.at("members")) members.push_back(open_from_json(u));
    m = Move::of_family(CoverFamily::of(j.value("label", "family"), std::move(members)));
  } else if (type == "dense") {
    // keeps the written enumeration order
    auto listed = std::make_shared<const std::vector<Point>>(j.at("members").get<std::vector<Point>>());
    auto sorted = std::make_shared<std::vector<Point>>(*listed);
    std::sort(sorted->begin(), sorted->end());
    m = Move::of_dense({j.value("label", "set"),
                        [sorted](Point p) { return std::binary_search(sorted->begin(), sorted->end(), p); },
                        [listed](std::uint64_t n) -> std::optional<Point> {
                          if (n >= listed->size()) return std::nullopt;
                          return (*listed)[n];
                        }});
  } else if (type == "pick") {
    m = Move::pick(j.at("index").get<std::uint64_t>());
  } else if (type == "pick_many") {
    m = Move::pick_many(j.at("indices").get<std::vector<std::uint64_t>>());
  } else if (type == "point") {
    m = Move::point(j.at("point").get<Point>());
  } else if (type == "open") {
    m = Move::of_open(open_from_json(j.at("open")));
  } else {
    throw InvalidArgument("unknown move type '" + type + "'");
  }
  m.note = j.value("note", "");
  return m;
}

inline Json to_json(const Transcript& t) {
  Json innings = Json::array();
  for (const auto& [a, b] : t.innings) {
    std::uint64_t shown = 8;
    if (b.type == Move::Type::Pick) shown = std::max(shown, b.index + 1);
    for (auto k : b.indices) shown = std::max(shown, k + 1);
    innings.push_back({{"I", to_json(a, shown)}, {"II", to_json(b)}});
  }
  return {{"kind", t.kind.name()},
          {"space", t.space},
          {"seed", t.seed ? Json(*t.seed) : Json(nullptr)},
          {"innings", innings}};
}

inline Transcript transcript_from_json(const Json& j) {
  Transcript t;
  t.kind = GameKind::parse(j.at("kind").get<std::string>());
  t.space = j.value("space", "");
  if (j.contains("seed") && !j["seed"].is_null()) t.seed = j["seed"].get<std::uint64_t>();
  for (const auto& in : j.at("innings")) t.innings.emplace_back(move_from_json(in.at("I")), move_from_json(in.at("II")));
  return t;
}

inline Json to_json(const DoubleCover& dc, std::uint64_t limit = 64) {
  Json out = Json::array();
  for (const auto& [f, u] : dc.prefix(limit)) out.push_back({{"F", to_json(f)}, {"U", to_json(u)}});
  return out;
}

inline DoubleCover double_cover_from_json(const Json& j) {
  std::vector<DoublePair> pairs;
  for (const auto& e : j) pairs.emplace_back(finite_from_json(e.at("F")), open_from_json(e.at("U")));
  return DoubleCover::of("file", std::move(pairs));
}

inline Json to_json(const VectorFamily& f) { return {{"vectors", f.vectors}, {"bound", f.bound}}; }

/// Accepts either {"vectors": [...], "bound": [...]} or a bare matrix.
inline VectorFamily vector_family_from_json(const Json& j) {
  VectorFamily f;
  if (j.is_array()) {
    f.vectors = j.get<std::vector<std::vector<std::uint64_t>>>();
  } else {
    f.vectors = j.at("vectors").get<std::vector<std::vector<std::uint64_t>>>();
    if (j.contains("bound")) f.bound = j["bound"].get<std::vector<std::uint64_t>>();
  }
  for (const auto& v : f.vectors)
    if (v.size() != f.vectors.front().size()) throw DimensionError("vectors of different lengths");
  return f;
}

/// Rows of a finite-width table as a matrix of open sets.
inline Json to_json(const CoverTable& t, std::uint64_t max_width = 16) {
  Json rows = Json::array();
  for (std::uint64_t n = 0; n < t.rows; ++n) {
    Json row = Json::array();
    const auto w = t.width(n);
    const std::uint64_t lim = w ? std::min(*w, max_width) : max_width;
    for (std::uint64_t k = 0; k < lim; ++k) row.push_back(to_json(t.at(n, k)));
    rows.push_back(row);
  }
  return rows;
}

/// Finite spaces as their specialization preorder.
inline Json space_to_json(const Space& s) {
  if (!s.has_masks()) return {{"builtin", s.label()}};
  const auto order = specialization(FinTopology::of(s));
  Json pairs = Json::array();
  for (const auto& [i, j] : order.pairs) pairs.push_back({i, j});
  return {{"points", s.n()}, {"order", pairs}};
}

inline Space space_from_json(const Json& j) {
  Preorder o;
  o.n = j.at("points").get<std::uint64_t>();
  for (const auto& p : j.value("order", Json::array())) o.pairs.push_back({p.at(0).get<Point>(), p.at(1).get<Point>()});
  return finite_space(o, j.value("label", ""));
}

}  // namespace topogame
