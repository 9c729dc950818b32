#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "connenum/enumerator.hpp"
#include "connenum/graph_file.hpp"
#include "connenum/graph_systems.hpp"

namespace py = pybind11;
using namespace connenum;

namespace {

using Ids = std::vector<std::int64_t>;

struct Query {
  GraphFile file;
  SystemMode mode;
  SystemOptions opt;
  std::shared_ptr<const VolumeFunction> volume;
  bool edge_ground;
};

Query make_query(const std::string& text, const std::string& mode, std::size_t k, std::size_t min_size,
                 bool spanning) {
  Query q{parse_graph(text), parse_mode(mode), {}, nullptr, false};
  q.edge_ground = is_edge_ground(q.mode);
  q.opt.k = k;
  std::vector<std::shared_ptr<const VolumeFunction>> parts;
  if (spanning) {
    if (!q.edge_ground) throw py::value_error("spanning needs an edge-induced mode");
    parts.push_back(std::make_shared<SpanningVolume>(q.file.graph));
  }
  if (min_size > 1) parts.push_back(std::make_shared<SizeThreshold>(static_cast<long>(min_size) - 1));
  if (parts.size() == 1) q.volume = parts.front();
  if (parts.size() > 1) q.volume = std::make_shared<AllOf>(std::move(parts));
  return q;
}

// Declared vertex ids, or edge indices for the edge-ground modes.
Ids ids_of(const Query& q, const ElementSet& x) {
  Ids out;
  x.for_each([&](std::size_t i) {
    out.push_back(q.edge_ground ? static_cast<std::int64_t>(i) : q.file.vertex_ids[i]);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::tuple<Ids, std::vector<std::size_t>>> connectors(const std::string& text, const std::string& mode,
                                                                  std::size_t k, std::size_t min_size) {
  auto q = make_query(text, mode, k, min_size, false);
  if (q.file.max_item == 0) throw py::value_error("graph has no items");
  auto inst = connector_instance(q.file.graph, q.file.items, q.file.max_item, q.mode, q.opt, q.volume);
  std::vector<std::tuple<Ids, std::vector<std::size_t>>> out;
  {
    py::gil_scoped_release release;
    for (const auto& s : collect_solutions(inst)) out.emplace_back(ids_of(q, s.elements), s.items.members());
  }
  return out;
}

std::vector<Ids> components(const std::string& text, const std::string& mode, std::size_t k, std::size_t min_size,
                            bool spanning) {
  auto q = make_query(text, mode, k, min_size, spanning);
  if (q.file.graph.num_vertices() == 0) throw py::value_error("graph has no vertices");
  std::vector<Ids> out;
  {
    py::gil_scoped_release release;
    for (const auto& c : collect_components(make_oracle(q.file.graph, q.mode, q.opt), q.volume))
      out.push_back(ids_of(q, c));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_connenum, m) {
  m.doc() = "Connectors and components of connectivity systems on mixed graphs";
  // Later registrations are tried first, so the subclass comes second.
  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  m.def("modes", [] {
    std::vector<std::string> names;
    for (auto mode : all_modes()) names.push_back(mode_name(mode));
    return names;
  });
  m.def("connectors", &connectors, py::arg("text"), py::arg("mode") = "connected", py::arg("k") = 1,
        py::arg("min_size") = 1,
        "Maximal common-item components as (ids, items) pairs, in output order.");
  m.def("components", &components, py::arg("text"), py::arg("mode") = "connected", py::arg("k") = 1,
        py::arg("min_size") = 1, py::arg("spanning") = false, "Every component, in output order.");
}
