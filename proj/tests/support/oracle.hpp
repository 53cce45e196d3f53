#pragma once

// Reference implementations for differential tests. Nothing here calls into
// the library's algorithms: graphs are read once through Graph::edges() into
// an adjacency matrix, and patterns are restated from their definitions.

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "ccsub/graph.hpp"
#include "ccsub/pattern.hpp"

namespace ccsub::testing {

using Tuple = std::vector<Vertex>;
using TupleSet = std::set<Tuple>;

class Matrix {
 public:
  explicit Matrix(const Graph& g);
  std::size_t size() const { return n_; }
  bool operator()(Vertex a, Vertex b) const { return bits_[a * n_ + b] != 0; }
  std::size_t degree(Vertex v) const;

 private:
  std::size_t n_;
  std::vector<char> bits_;
};

struct RefPattern {
  Pattern id;
  int order;
  std::vector<std::pair<int, int>> edges;
};

// The sixteen named patterns, restated from their textbook definitions.
const std::vector<RefPattern>& reference_patterns();
const RefPattern& reference(Pattern p);

// Whether the tuple induces p, by trying every bijection.
bool isomorphic(const Matrix& m, std::span<const Vertex> vs, const RefPattern& p);

// All occurrences of every 3- and 4-vertex pattern (and the gem when asked),
// classifying each subset once.
std::map<Pattern, TupleSet> census(const Graph& g, bool with_gem = false);

int reference_i2(const RefPattern& p);
int reference_nu(const RefPattern& p);

// 1 + max common neighbors over nonadjacent pairs, from the matrix.
std::size_t reference_closure(const Graph& g);

// Bron-Kerbosch with pivoting; each clique ascending.
std::vector<Tuple> maximal_cliques(const Graph& g);

std::size_t choose(std::size_t n, std::size_t k);

// Collects streamed occurrences; records duplicates and wrong-pattern tags.
struct Collector {
  Pattern expected;
  TupleSet seen;
  std::size_t duplicates = 0;
  std::size_t mislabeled = 0;

  explicit Collector(Pattern p) : expected(p) {}
  Visit operator()(const Occurrence& o);
};

}  // namespace ccsub::testing
