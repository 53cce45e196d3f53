#include "ccsub/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

namespace ccsub {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits on spaces/tabs and parses every token as an unsigned integer.
bool parse_numbers(std::string_view line, std::vector<std::uint64_t>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j) return false;
    out.push_back(value);
    i = j;
  }
  return true;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::vector<std::uint64_t> nums;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (line.empty() || line.front() == '#') continue;
    if (!parse_numbers(line, nums)) {
      throw ParseError(line_no, "expected non-negative integers, got '" +
                                    std::string(line) + "'");
    }
    if (!n) {
      if (nums.size() != 1) {
        throw ParseError(line_no, "expected vertex count on first line");
      }
      if (nums[0] > std::numeric_limits<Vertex>::max()) {
        throw ParseError(line_no, "vertex count too large");
      }
      n = nums[0];
      continue;
    }
    if (nums.size() != 2) {
      throw ParseError(line_no, "expected 'u v'");
    }
    if (nums[0] >= *n || nums[1] >= *n) {
      throw ParseError(line_no, "endpoint out of range [0, " +
                                    std::to_string(*n) + ")");
    }
    if (nums[0] == nums[1]) throw ParseError(line_no, "self-loop");
    edges.emplace_back(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
  }
  if (!n) throw ParseError(line_no, "missing vertex count");
  return Graph(*n, edges);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << g.num_vertices() << '\n';
  g.for_each_edge([&](Vertex u, Vertex v) { os << u << ' ' << v << '\n'; });
  return os.str();
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_edge_list_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << serialize_graph(g);
}

}  // namespace ccsub
