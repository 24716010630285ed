#include "firecut/vertex.hpp"

#include <algorithm>

#include "firecut/errors.hpp"

namespace firecut {

std::string to_string(const Vertex& v) {
  if (v.is_grid()) {
    const auto& g = v.as_grid();
    return "(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
  }
  if (v.is_poly()) {
    const auto& p = v.as_poly();
    return "(" + std::to_string(p.cell_i) + "," + std::to_string(p.cell_j) + ";" +
           std::to_string(p.tile) + ")";
  }
  return v.as_named().id;
}

Edge::Edge(Vertex a, Vertex b) {
  if (a == b) throw SpecError("self-loop at " + to_string(a));
  if (b < a) std::swap(a, b);
  first_ = std::move(a);
  second_ = std::move(b);
}

std::string to_string(const Edge& e) {
  return "{" + to_string(e.first()) + " " + to_string(e.second()) + "}";
}

std::vector<Vertex> sorted(const VertexSet& s) {
  std::vector<Vertex> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> sorted(const EdgeSet& s) {
  std::vector<Edge> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace firecut
