#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

#include "ccsub/graph.hpp"

namespace ccsub {

// The fifteen 3-/4-vertex patterns plus the gem. kStar and kClique tag
// witnesses of the parametric K_{1,k} / K_k searches and have no catalog entry.
enum class Pattern : std::uint8_t {
  kEmpty3,
  kCoP3,
  kP3,
  kK3,
  kEmpty4,
  kCoDiamond,
  kCoPaw,
  kCoSquare,
  kP4,
  kClaw,
  kCoClaw,
  kPaw,
  kSquare,
  kDiamond,
  kK4,
  kGem,
  kStar,
  kClique,
};

inline constexpr std::size_t kCatalogSize = 16;
inline constexpr std::size_t kMaxPatternOrder = 5;

struct PatternInfo {
  Pattern id;
  std::string_view name;
  int order;
  std::array<std::array<std::uint8_t, 2>, 7> edge_list;
  int num_edges;
  int i2;
  int nu;
  // Optimal anchor set: every vertex outside it has two nonadjacent
  // neighbors inside it. Bit i set means pattern vertex i is an anchor.
  std::uint8_t anchor_mask;

  std::span<const std::array<std::uint8_t, 2>> edges() const {
    return {edge_list.data(), static_cast<std::size_t>(num_edges)};
  }
  bool has_edge(int a, int b) const;
};

std::span<const PatternInfo> catalog();
const PatternInfo& pattern_info(Pattern p);  // InputError for kStar/kClique
std::string_view pattern_name(Pattern p);

// Accepts catalog names case-insensitively, ignoring '-' and '_', plus
// aliases such as "triangle", "c4", "k13".
Pattern parse_pattern(std::string_view name);

std::span<const Pattern> three_vertex_patterns();
std::span<const Pattern> four_vertex_patterns();

// Small fixed-capacity vertex tuple used for witnesses and occurrences.
class VertexTuple {
 public:
  static constexpr std::size_t kCapacity = 8;

  VertexTuple() = default;
  VertexTuple(std::initializer_list<Vertex> vs);
  explicit VertexTuple(std::span<const Vertex> vs);

  std::size_t size() const noexcept { return size_; }
  Vertex operator[](std::size_t i) const noexcept { return data_[i]; }
  std::span<const Vertex> span() const noexcept { return {data_.data(), size_}; }
  const Vertex* begin() const noexcept { return data_.data(); }
  const Vertex* end() const noexcept { return data_.data() + size_; }

  void push_back(Vertex v);
  void sort() noexcept;

  friend bool operator==(const VertexTuple& a, const VertexTuple& b) noexcept;
  friend std::strong_ordering operator<=>(const VertexTuple& a,
                                          const VertexTuple& b) noexcept;

 private:
  std::array<Vertex, kCapacity> data_{};
  std::size_t size_ = 0;
};

// A pattern occurrence keyed by its ascending vertex tuple. The roles of the
// vertices inside the pattern are recoverable from the host graph.
struct Occurrence {
  Pattern pattern;
  VertexTuple vertices;

  static Occurrence of(Pattern p, std::span<const Vertex> vs);
  static Occurrence of(Pattern p, std::initializer_list<Vertex> vs) {
    return of(p, std::span<const Vertex>(vs.begin(), vs.size()));
  }

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

std::string format_tuple(const VertexTuple& t);  // "0 1 2"

// Visitors return kStop to abort an enumeration early.
enum class Visit { kContinue, kStop };

// Isomorphism class of G[vertices] for 3 or 4 distinct vertices.
Pattern induced_pattern(const Graph& g, std::span<const Vertex> vertices);

// Whether G[vertices] is isomorphic to `p`. Handles the gem and the
// parametric star/clique tags as well as the 3-/4-vertex catalog.
bool induces(const Graph& g, std::span<const Vertex> vertices, Pattern p);

// Maximum matching size of a small edge set on `order` vertices, by brute force.
int max_matching_size(const PatternInfo& h);

}  // namespace ccsub
