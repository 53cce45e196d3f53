#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "ccsub/graph.hpp"

namespace ccsub {

// Edge-list text format:
//   # optional comment lines
//   <n>
//   <u> <v>        one per line, 0 <= u, v < n
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

Graph parse_edge_list(std::string_view text);

// Canonical form: vertex count, then edges (u < v) in lexicographic order.
std::string serialize_graph(const Graph& g);

Graph read_edge_list_file(const std::filesystem::path& path);
void write_edge_list_file(const std::filesystem::path& path, const Graph& g);

}  // namespace ccsub
