#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "connenum/core.hpp"
#include "connenum/mixed_graph.hpp"

namespace connenum {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Attributed mixed graph read from text:
//   v <id> [item[,item...]]   vertex with optional items
//   e <u> <v>                 undirected edge
//   a <u> <v>                 arc u -> v
// '#' starts a comment. Vertices are indexed in declaration order and edges
// in file order.
struct GraphFile {
  MixedGraph graph;
  std::vector<std::int64_t> vertex_ids;         // dense index -> declared id
  std::vector<std::vector<std::size_t>> items;  // per dense index, ascending
  std::size_t max_item = 0;
};

GraphFile parse_graph(std::istream& in);
GraphFile parse_graph(const std::string& text);
GraphFile read_graph_file(const std::string& path);

}  // namespace connenum
