#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "connenum/cli.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace connenum;

namespace {

const std::string kData = CONNENUM_TEST_DATA;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("graph file parsing") {
  auto f = parse_graph("# demo\nv 7 3,1,3\nv 2\na 7 2  # arc\n\ne 2 7\n");
  CHECK(f.graph.num_vertices() == 2);
  CHECK(f.graph.num_edges() == 2);
  CHECK(f.graph.edge(0).directed);
  CHECK(f.vertex_ids == std::vector<std::int64_t>{7, 2});
  CHECK(f.items[0] == std::vector<std::size_t>{1, 3});
  CHECK(f.items[1].empty());
  CHECK(f.max_item == 3);

  auto line_of = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("v 1\ne 1 2\n") == 2);
  CHECK(line_of("v 1\nv 1\n") == 2);
  CHECK(line_of("v 1\ne 1 1\n") == 2);
  CHECK(line_of("v 1 0\n") == 1);
  CHECK(line_of("v 1 1,x\n") == 1);
  CHECK(line_of("x 1\n") == 1);
  CHECK(line_of("v -3\n") == 1);
}

TEST_CASE("connectors golden output on the worked example") {
  auto r = run({"connectors", "--mode", "connected", kData + "/gadget.txt"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(kData + "/gadget_connected.golden"));
  CHECK(run({"connectors", "--mode", "connected", kData + "/gadget.txt"}).out == r.out);
}

TEST_CASE("connectors with a size filter and with 2-edge-connectivity") {
  auto r = run({"connectors", "--mode", "connected", "--min-size", "3", kData + "/gadget.txt"});
  CHECK(lines(r.out) == std::vector<std::string>{"1 2 3 4\t-", "1 2 3\t1"});
  auto e = run({"connectors", "--mode", "global-k-edge", "--k", "2", kData + "/gadget.txt"});
  auto got = lines(e.out);
  CHECK(std::set<std::string>(got.begin(), got.end()) ==
        std::set<std::string>{"1\t1,2,3", "1 2\t1,3", "1 3\t1,2", "1 2 3\t1", "4\t3"});
  CHECK(got.size() == 5);
}

TEST_CASE("components commands") {
  CHECK(lines(run({"components", "--mode", "connected", kData + "/p3.txt"}).out).size() == 6);
  auto c4 = run({"components", "--mode", "edge-induced-k-edge", "--k", "2", "--spanning", kData + "/c4.txt"});
  CHECK(c4.code == 0);
  CHECK(lines(c4.out) == std::vector<std::string>{"0 1 2 3"});

  auto k4 = run({"components", "--mode", "induced-k-edge", "--k", "2", kData + "/k4.txt"});
  auto file = read_graph_file(kData + "/k4.txt");
  std::set<std::string> want;
  for (const auto& c : brute::components(4, brute::predicate(file.graph, SystemMode::induced_k_edge, 2))) {
    std::string s;
    c.for_each([&](std::size_t i) { s += (s.empty() ? "" : " ") + std::to_string(file.vertex_ids[i]); });
    want.insert(s);
  }
  auto got = lines(k4.out);
  CHECK(std::set<std::string>(got.begin(), got.end()) == want);
  CHECK(got.size() == want.size());
}

TEST_CASE("stats report is JSON on stderr") {
  auto r = run({"connectors", "--mode", "connected", "--stats", kData + "/gadget.txt"});
  CHECK(r.err.find("\"solutions\":6") != std::string::npos);
  CHECK(r.err.find("\"max_descendants_gap\"") != std::string::npos);
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(run({"connectors", "--mode", "connected", kData + "/malformed.txt"}).code == 2);
  CHECK(run({"connectors", "--mode", "connected", kData + "/malformed.txt"}).err.find("line 3") != std::string::npos);
  CHECK(run({"connectors", "--mode", "nope", kData + "/gadget.txt"}).code == 2);
  CHECK(run({"connectors", "--mode", "connected", "--spanning", kData + "/gadget.txt"}).code == 2);
  CHECK(run({"connectors", "--mode", "connected", kData + "/p3.txt"}).code == 2);  // no items
  CHECK(run({"connectors", "--mode", "connected", kData + "/missing.txt"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"selftest", kData + "/malformed.txt"}).code == 2);
  CHECK(run({"components", "--mode", "induced-k-vertex", "--k", "5", kData + "/k4.txt"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("selftest passes") {
  auto a = run({"selftest", "--seed", "1", "--trials", "50", "--mode", "connected"});
  CHECK(a.code == 0);
  CHECK(a.out.find("FAIL") == std::string::npos);
  auto b = run({"selftest", "--seed", "1", "--trials", "20", "--mode", "induced-k-edge", "--k", "2"});
  CHECK(b.code == 0);
  auto c = run({"selftest", "--trials", "0", "--mode", "induced-k-edge", "--k", "2", kData + "/gadget.txt"});
  CHECK(c.code == 0);
}
