#include "ccsub/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ccsub {
namespace {

using E = std::array<std::uint8_t, 2>;

// Canonical edge sets; i2, nu and anchor masks are checked against
// exhaustive recomputation in the tests.
constexpr std::array<PatternInfo, kCatalogSize> kCatalog = {{
    {Pattern::kEmpty3, "empty3", 3, {}, 0, 3, 0, 0b111},
    {Pattern::kCoP3, "coP3", 3, {E{0, 1}}, 1, 3, 1, 0b111},
    {Pattern::kP3, "P3", 3, {E{0, 1}, E{1, 2}}, 2, 2, 1, 0b101},
    {Pattern::kK3, "K3", 3, {E{0, 1}, E{0, 2}, E{1, 2}}, 3, 3, 1, 0b111},
    {Pattern::kEmpty4, "empty4", 4, {}, 0, 4, 0, 0b1111},
    {Pattern::kCoDiamond, "coDiamond", 4, {E{0, 1}}, 1, 4, 1, 0b1111},
    {Pattern::kCoPaw, "coPaw", 4, {E{0, 1}, E{1, 2}}, 2, 3, 1, 0b1101},
    {Pattern::kCoSquare, "coSquare", 4, {E{0, 1}, E{2, 3}}, 2, 4, 2, 0b1111},
    {Pattern::kP4, "P4", 4, {E{0, 1}, E{1, 2}, E{2, 3}}, 3, 3, 2, 0b1011},
    {Pattern::kClaw, "claw", 4, {E{0, 1}, E{0, 2}, E{0, 3}}, 3, 3, 1, 0b1110},
    {Pattern::kCoClaw, "coClaw", 4, {E{0, 1}, E{0, 2}, E{1, 2}}, 3, 4, 1,
     0b1111},
    {Pattern::kPaw, "paw", 4, {E{0, 1}, E{0, 2}, E{0, 3}, E{1, 2}}, 4, 3, 2,
     0b1110},
    {Pattern::kSquare, "square", 4, {E{0, 1}, E{1, 2}, E{2, 3}, E{0, 3}}, 4, 2,
     2, 0b0101},
    {Pattern::kDiamond, "diamond", 4,
     {E{0, 1}, E{0, 2}, E{0, 3}, E{1, 2}, E{1, 3}}, 5, 2, 2, 0b1100},
    {Pattern::kK4, "K4", 4,
     {E{0, 1}, E{0, 2}, E{0, 3}, E{1, 2}, E{1, 3}, E{2, 3}}, 6, 4, 2, 0b1111},
    {Pattern::kGem, "gem", 5,
     {E{0, 1}, E{1, 2}, E{2, 3}, E{0, 4}, E{1, 4}, E{2, 4}, E{3, 4}}, 7, 3, 2,
     0b01011},
}};

constexpr std::array<Pattern, 4> kThree = {Pattern::kEmpty3, Pattern::kCoP3,
                                           Pattern::kP3, Pattern::kK3};
constexpr std::array<Pattern, 11> kFour = {
    Pattern::kEmpty4, Pattern::kCoDiamond, Pattern::kCoPaw, Pattern::kCoSquare,
    Pattern::kP4,     Pattern::kClaw,      Pattern::kCoClaw, Pattern::kPaw,
    Pattern::kSquare, Pattern::kDiamond,   Pattern::kK4};

std::string normalize(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (ch == '-' || ch == '_' || ch == ' ') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  return out;
}

}  // namespace

bool PatternInfo::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (const auto& e : edges()) {
    if (e[0] == a && e[1] == b) return true;
  }
  return false;
}

std::span<const PatternInfo> catalog() { return kCatalog; }

const PatternInfo& pattern_info(Pattern p) {
  auto idx = static_cast<std::size_t>(p);
  if (idx >= kCatalogSize) {
    throw InputError("pattern '" + std::string(pattern_name(p)) +
                     "' has no catalog entry");
  }
  return kCatalog[idx];
}

std::string_view pattern_name(Pattern p) {
  switch (p) {
    case Pattern::kStar:
      return "star";
    case Pattern::kClique:
      return "clique";
    default:
      return kCatalog[static_cast<std::size_t>(p)].name;
  }
}

Pattern parse_pattern(std::string_view name) {
  const std::string key = normalize(name);
  for (const auto& info : kCatalog) {
    if (normalize(info.name) == key) return info.id;
  }
  struct Alias {
    std::string_view name;
    Pattern p;
  };
  static constexpr Alias kAliases[] = {
      {"triangle", Pattern::kK3},        {"independentset3", Pattern::kEmpty3},
      {"is3", Pattern::kEmpty3},         {"is4", Pattern::kEmpty4},
      {"independentset4", Pattern::kEmpty4},
      {"c4", Pattern::kSquare},          {"k13", Pattern::kClaw},
      {"2k2", Pattern::kCoSquare},       {"star", Pattern::kStar},
      {"clique", Pattern::kClique},
  };
  for (const auto& a : kAliases) {
    if (a.name == key) return a.p;
  }
  throw InputError("unknown pattern '" + std::string(name) + "'");
}

std::span<const Pattern> three_vertex_patterns() { return kThree; }
std::span<const Pattern> four_vertex_patterns() { return kFour; }

VertexTuple::VertexTuple(std::initializer_list<Vertex> vs) {
  for (Vertex v : vs) push_back(v);
}

VertexTuple::VertexTuple(std::span<const Vertex> vs) {
  for (Vertex v : vs) push_back(v);
}

void VertexTuple::push_back(Vertex v) {
  if (size_ == kCapacity) throw InputError("vertex tuple capacity exceeded");
  data_[size_++] = v;
}

void VertexTuple::sort() noexcept {
  std::sort(data_.begin(), data_.begin() + size_);
}

bool operator==(const VertexTuple& a, const VertexTuple& b) noexcept {
  return std::ranges::equal(a.span(), b.span());
}

std::strong_ordering operator<=>(const VertexTuple& a,
                                 const VertexTuple& b) noexcept {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                b.end());
}

Occurrence Occurrence::of(Pattern p, std::span<const Vertex> vs) {
  Occurrence o{p, VertexTuple(vs)};
  o.vertices.sort();
  return o;
}

std::string format_tuple(const VertexTuple& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ' ';
    os << t[i];
  }
  return os.str();
}

Pattern induced_pattern(const Graph& g, std::span<const Vertex> vs) {
  const std::size_t k = vs.size();
  if (k != 3 && k != 4) {
    throw InputError("induced_pattern expects 3 or 4 vertices, got " +
                     std::to_string(k));
  }
  std::array<int, 4> deg{};
  int m = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (vs[i] >= g.num_vertices()) throw InputError("vertex out of range");
    for (std::size_t j = i + 1; j < k; ++j) {
      if (vs[i] == vs[j]) throw InputError("vertices must be distinct");
      if (g.adjacent(vs[i], vs[j])) {
        ++m;
        ++deg[i];
        ++deg[j];
      }
    }
  }
  if (k == 3) {
    static constexpr Pattern kByEdges[] = {Pattern::kEmpty3, Pattern::kCoP3,
                                           Pattern::kP3, Pattern::kK3};
    return kByEdges[m];
  }
  const int max_deg = *std::max_element(deg.begin(), deg.end());
  const int min_deg = *std::min_element(deg.begin(), deg.end());
  switch (m) {
    case 0:
      return Pattern::kEmpty4;
    case 1:
      return Pattern::kCoDiamond;
    case 2:
      // Two edges sharing a vertex leave one vertex isolated.
      return min_deg == 0 ? Pattern::kCoPaw : Pattern::kCoSquare;
    case 3:
      if (max_deg == 3) return Pattern::kClaw;
      return min_deg == 0 ? Pattern::kCoClaw : Pattern::kP4;
    case 4:
      return max_deg == 3 ? Pattern::kPaw : Pattern::kSquare;
    case 5:
      return Pattern::kDiamond;
    default:
      return Pattern::kK4;
  }
}

bool induces(const Graph& g, std::span<const Vertex> vs, Pattern p) {
  const std::size_t k = vs.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (vs[i] >= g.num_vertices()) return false;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (vs[i] == vs[j]) return false;
    }
  }
  if (p == Pattern::kClique) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (!g.adjacent(vs[i], vs[j])) return false;
      }
    }
    return k >= 1;
  }
  if (p == Pattern::kStar) {
    if (k < 3) return false;
    // Exactly one vertex adjacent to all others, the rest independent.
    std::vector<int> deg(k, 0);
    std::size_t edges = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (g.adjacent(vs[i], vs[j])) {
          ++deg[i];
          ++deg[j];
          ++edges;
        }
      }
    }
    auto hubs = std::count(deg.begin(), deg.end(), static_cast<int>(k - 1));
    return edges == k - 1 && hubs >= 1;
  }
  const PatternInfo& info = pattern_info(p);
  if (static_cast<std::size_t>(info.order) != k) return false;
  if (k == 3 || k == 4) return induced_pattern(g, vs) == p;

  // Order 5 (gem): seven edges, a hub joined to the other four, and the
  // other four of degrees {1, 1, 2, 2} among themselves, i.e. a P4.
  std::array<int, kMaxPatternOrder> deg{};
  int edges = 0;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (g.adjacent(vs[a], vs[b])) {
        ++deg[a];
        ++deg[b];
        ++edges;
      }
    }
  }
  if (edges != 7) return false;
  std::array<int, kMaxPatternOrder> rest{};
  std::size_t hub = k;
  for (std::size_t a = 0; a < k; ++a) {
    if (deg[a] == 4) hub = a;
  }
  if (hub == k) return false;
  for (std::size_t a = 0; a < k; ++a) rest[a] = deg[a] - 1;
  std::sort(rest.begin(), rest.begin() + k);
  // Sorted: the four path degrees, then the hub's 3.
  return rest[0] == 1 && rest[1] == 1 && rest[2] == 2 && rest[3] == 2 && rest[4] == 3;
}

int max_matching_size(const PatternInfo& h) {
  int best = 0;
  auto es = h.edges();
  const int ne = static_cast<int>(es.size());
  for (int mask = 1; mask < (1 << ne); ++mask) {
    int used = 0;
    int size = 0;
    bool ok = true;
    for (int i = 0; i < ne && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      int bits = (1 << es[i][0]) | (1 << es[i][1]);
      ok = (used & bits) == 0;
      used |= bits;
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

}  // namespace ccsub
