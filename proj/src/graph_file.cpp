#include "connenum/graph_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <boost/algorithm/string.hpp>

namespace connenum {
namespace {

template <class T>
T parse_number(std::string_view tok, std::size_t line, const char* what) {
  T value{};
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || end != tok.data() + tok.size())
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
  return value;
}

}  // namespace

GraphFile parse_graph(std::istream& in) {
  GraphFile out;
  std::unordered_map<std::int64_t, std::size_t> index;
  struct PendingEdge {
    std::size_t u, v;
    bool directed;
  };
  std::vector<PendingEdge> edges;

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    boost::algorithm::trim(raw);
    if (raw.empty()) continue;
    std::vector<std::string> tok;
    boost::algorithm::split(tok, raw, boost::algorithm::is_space(), boost::algorithm::token_compress_on);

    if (tok[0] == "v") {
      if (tok.size() < 2 || tok.size() > 3) throw ParseError(line, "expected 'v <id> [items]'");
      auto id = parse_number<std::int64_t>(tok[1], line, "vertex id");
      if (id < 0) throw ParseError(line, "vertex id must be non-negative");
      if (index.count(id)) throw ParseError(line, "vertex " + tok[1] + " declared twice");
      std::vector<std::size_t> items;
      if (tok.size() == 3) {
        std::vector<std::string> parts;
        boost::algorithm::split(parts, tok[2], boost::algorithm::is_any_of(","));
        for (const auto& p : parts) {
          auto it = parse_number<std::int64_t>(p, line, "item");
          if (it <= 0) throw ParseError(line, "items must be positive integers");
          items.push_back(static_cast<std::size_t>(it));
        }
        std::sort(items.begin(), items.end());
        items.erase(std::unique(items.begin(), items.end()), items.end());
        out.max_item = std::max(out.max_item, items.back());
      }
      index.emplace(id, out.vertex_ids.size());
      out.vertex_ids.push_back(id);
      out.items.push_back(std::move(items));
    } else if (tok[0] == "e" || tok[0] == "a") {
      if (tok.size() != 3) throw ParseError(line, "expected '" + tok[0] + " <u> <v>'");
      auto lookup = [&](const std::string& t) {
        auto id = parse_number<std::int64_t>(t, line, "vertex id");
        auto it = index.find(id);
        if (it == index.end()) throw ParseError(line, "vertex " + t + " used before declaration");
        return it->second;
      };
      auto u = lookup(tok[1]);
      auto v = lookup(tok[2]);
      if (u == v) throw ParseError(line, "self-loop at vertex " + tok[1]);
      edges.push_back(PendingEdge{u, v, tok[0] == "a"});
    } else {
      throw ParseError(line, "unknown record '" + tok[0] + "'");
    }
  }

  out.graph = MixedGraph(out.vertex_ids.size());
  for (const auto& e : edges) {
    if (e.directed) {
      out.graph.add_arc(e.u, e.v);
    } else {
      out.graph.add_edge(e.u, e.v);
    }
  }
  return out;
}

GraphFile parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_graph(in);
}

}  // namespace connenum
