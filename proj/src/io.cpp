#include "firecut/io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "firecut/errors.hpp"

namespace firecut {

using nlohmann::json;

namespace {

void require_object(const json& j, const char* what) {
  if (!j.is_object()) throw SpecError(std::string(what) + ": expected a JSON object");
}

void reject_unknown(const json& j, const char* what, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw SpecError(std::string(what) + ": unknown field '" + key + "'");
  }
}

const json& field(const json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) throw SpecError(std::string(what) + ": missing field '" + key + "'");
  return *it;
}

std::int64_t as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw SpecError(std::string(what) + ": expected an integer");
  return j.get<std::int64_t>();
}

std::uint64_t as_uint(const json& j, const char* what) {
  std::int64_t v = as_int(j, what);
  if (v < 0) throw SpecError(std::string(what) + ": expected a non-negative integer");
  return static_cast<std::uint64_t>(v);
}

bool as_bool(const json& j, const char* what) {
  if (!j.is_boolean()) throw SpecError(std::string(what) + ": expected a boolean");
  return j.get<bool>();
}

const json& as_array(const json& j, const char* what) {
  if (!j.is_array()) throw SpecError(std::string(what) + ": expected an array");
  return j;
}

Cell cell_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw SpecError(std::string(what) + ": expected [i, j]");
  return Cell{as_int(j[0], what), as_int(j[1], what)};
}

std::vector<Vertex> vertices_from_json(const json& j, const char* what) {
  std::vector<Vertex> out;
  for (const auto& v : as_array(j, what)) out.push_back(vertex_from_json(v));
  return out;
}

std::vector<Edge> edges_from_json(const json& j, const char* what) {
  std::vector<Edge> out;
  for (const auto& e : as_array(j, what)) {
    if (!e.is_array() || e.size() != 2)
      throw SpecError(std::string(what) + ": an edge is a pair of vertices");
    out.emplace_back(vertex_from_json(e[0]), vertex_from_json(e[1]));
  }
  return out;
}

json edges_to_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges)
    out.push_back(json::array({vertex_to_json(e.first()), vertex_to_json(e.second())}));
  return out;
}

json vertices_to_json(const std::vector<Vertex>& vs) {
  json out = json::array();
  for (const Vertex& v : vs) out.push_back(vertex_to_json(v));
  return out;
}

template <typename F>
auto translating_json_errors(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw SpecError(std::string("json: ") + e.what());
  }
}

}  // namespace

json vertex_to_json(const Vertex& v) {
  if (v.is_grid()) return json::array({v.as_grid().i, v.as_grid().j});
  if (v.is_poly()) {
    const auto& p = v.as_poly();
    return json::array({p.cell_i, p.cell_j, p.tile});
  }
  return v.as_named().id;
}

Vertex vertex_from_json(const json& j) {
  if (j.is_string()) return Vertex::named(j.get<std::string>());
  if (j.is_array() && j.size() == 2)
    return Vertex::grid(as_int(j[0], "vertex"), as_int(j[1], "vertex"));
  if (j.is_array() && j.size() == 3) {
    std::uint64_t t = as_uint(j[2], "vertex tile index");
    if (t > UINT32_MAX) throw SpecError("vertex: tile index too large");
    return Vertex::poly(as_int(j[0], "vertex"), as_int(j[1], "vertex"),
                        static_cast<std::uint32_t>(t));
  }
  throw SpecError("vertex: expected [i, j], [ci, cj, t] or a string, got " + j.dump());
}

json spec_to_json(const GraphSpec& spec) {
  json out;
  out["family"] = spec.family_name();
  const auto& fam = spec.family();
  if (const auto* d = std::get_if<DiagonalGrid>(&fam)) {
    out["main"] = d->main;
    out["anti"] = d->anti;
  } else if (const auto* p = std::get_if<PolyominoGrid>(&fam)) {
    const auto& t = p->tiling;
    out["periods"] = json::array({json::array({t.period_a().i, t.period_a().j}),
                                  json::array({t.period_b().i, t.period_b().j})});
    json tiles = json::array();
    for (const auto& tile : t.tiles()) {
      json cells = json::array();
      for (Cell c : tile) cells.push_back(json::array({c.i, c.j}));
      tiles.push_back(cells);
    }
    out["tiles"] = tiles;
    out["max_tile_size"] = t.max_tile_size();
  } else if (const auto* x = std::get_if<ExtraEdges>(&fam)) {
    out["base"] = spec_to_json(*x->base);
    out["max_span"] = x->max_span;
    out["edges"] = edges_to_json(x->extras);
  } else if (const auto* h = std::get_if<HubGraph>(&fam)) {
    out["vertices"] = vertices_to_json(h->vertices);
    out["edges"] = edges_to_json(h->edges);
    out["hubs"] = vertices_to_json(sorted(h->hubs));
  } else if (const auto* s = std::get_if<StarOfSubsets>(&fam)) {
    out["n_vars"] = s->f.n_vars;
    out["clauses"] = s->f.clauses;
    out["extra_ray"] = s->extra_ray;
  }
  return out;
}

GraphSpec parse_spec(const json& doc) {
  return translating_json_errors([&]() -> GraphSpec {
    require_object(doc, "graph");
    const json& fam = field(doc, "family", "graph");
    if (!fam.is_string()) throw SpecError("graph: family must be a string");
    const std::string name = fam.get<std::string>();
    if (name == "grid") {
      reject_unknown(doc, "grid", {"family"});
      return GraphSpec::infinite_grid();
    }
    if (name == "diagonal_grid") {
      reject_unknown(doc, "diagonal_grid", {"family", "main", "anti"});
      bool main = doc.contains("main") && as_bool(doc["main"], "diagonal_grid.main");
      bool anti = doc.contains("anti") && as_bool(doc["anti"], "diagonal_grid.anti");
      return GraphSpec::diagonal_grid(main, anti);
    }
    if (name == "polyomino_grid") {
      reject_unknown(doc, "polyomino_grid", {"family", "periods", "tiles", "max_tile_size"});
      const json& periods = as_array(field(doc, "periods", "polyomino_grid"), "periods");
      if (periods.size() != 2) throw SpecError("polyomino_grid: need exactly two periods");
      std::vector<std::vector<Cell>> tiles;
      for (const auto& tile : as_array(field(doc, "tiles", "polyomino_grid"), "tiles")) {
        std::vector<Cell> cells;
        for (const auto& c : as_array(tile, "tile")) cells.push_back(cell_from_json(c, "tile"));
        tiles.push_back(std::move(cells));
      }
      std::uint64_t s = as_uint(field(doc, "max_tile_size", "polyomino_grid"), "max_tile_size");
      if (s > UINT32_MAX) throw SpecError("polyomino_grid: max_tile_size too large");
      return GraphSpec::polyomino_grid(PeriodicTiling::create(
          cell_from_json(periods[0], "period"), cell_from_json(periods[1], "period"),
          std::move(tiles), static_cast<std::uint32_t>(s)));
    }
    if (name == "extra_edges") {
      reject_unknown(doc, "extra_edges", {"family", "base", "max_span", "edges"});
      std::uint64_t span = as_uint(field(doc, "max_span", "extra_edges"), "max_span");
      if (span > UINT32_MAX) throw SpecError("extra_edges: max_span too large");
      return GraphSpec::extra_edges(parse_spec(field(doc, "base", "extra_edges")),
                                    edges_from_json(field(doc, "edges", "extra_edges"), "edges"),
                                    static_cast<std::uint32_t>(span));
    }
    if (name == "hub_graph") {
      reject_unknown(doc, "hub_graph", {"family", "vertices", "edges", "hubs"});
      return GraphSpec::hub_graph(
          vertices_from_json(field(doc, "vertices", "hub_graph"), "vertices"),
          edges_from_json(field(doc, "edges", "hub_graph"), "edges"),
          vertices_from_json(field(doc, "hubs", "hub_graph"), "hubs"));
    }
    if (name == "star_of_subsets") {
      reject_unknown(doc, "star_of_subsets", {"family", "n_vars", "clauses", "extra_ray"});
      Cnf f;
      std::uint64_t n = as_uint(field(doc, "n_vars", "star_of_subsets"), "n_vars");
      if (n > 62) throw SpecError("star_of_subsets: n_vars must be at most 62");
      f.n_vars = static_cast<std::uint32_t>(n);
      for (const auto& clause : as_array(field(doc, "clauses", "star_of_subsets"), "clauses")) {
        std::vector<std::int32_t> lits;
        for (const auto& lit : as_array(clause, "clause")) {
          std::int64_t v = as_int(lit, "literal");
          if (v < INT32_MIN || v > INT32_MAX) throw SpecError("literal out of range");
          lits.push_back(static_cast<std::int32_t>(v));
        }
        f.clauses.push_back(std::move(lits));
      }
      bool extra = !doc.contains("extra_ray") || as_bool(doc["extra_ray"], "extra_ray");
      return GraphSpec::star_of_subsets(std::move(f), extra);
    }
    throw SpecError("graph: unknown family '" + name + "'");
  });
}

json instance_to_json(const Instance& instance) {
  json out;
  out["version"] = kFormatVersion;
  out["graph"] = spec_to_json(*instance.graph);
  out["removed"] = vertices_to_json(instance.removed);
  out["ignitions"] = vertices_to_json(instance.ignitions);
  out["budget"] = instance.budget;
  return out;
}

Instance parse_instance(const json& doc) {
  return translating_json_errors([&] {
    require_object(doc, "instance");
    reject_unknown(doc, "instance", {"version", "graph", "removed", "ignitions", "budget"});
    std::int64_t version = as_int(field(doc, "version", "instance"), "version");
    if (version != kFormatVersion)
      throw SpecError("instance: unsupported version " + std::to_string(version));
    Instance inst;
    inst.graph = std::make_shared<const GraphSpec>(parse_spec(field(doc, "graph", "instance")));
    inst.removed = vertices_from_json(field(doc, "removed", "instance"), "removed");
    inst.ignitions = vertices_from_json(field(doc, "ignitions", "instance"), "ignitions");
    inst.budget = as_uint(field(doc, "budget", "instance"), "budget");
    inst.normalize();
    inst.validate();
    return inst;
  });
}

Instance parse_instance_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw SpecError(std::string("instance: invalid JSON: ") + e.what());
  }
  return parse_instance(doc);
}

namespace {
std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

Instance load_instance(const std::string& path) { return parse_instance_text(read_file(path)); }

json cut_to_json(const CutSystem& cut) {
  json out;
  out["version"] = kFormatVersion;
  out["edges"] = edges_to_json(cut.edges);
  return out;
}

CutSystem parse_cut(const json& doc) {
  return translating_json_errors([&] {
    require_object(doc, "cut");
    reject_unknown(doc, "cut", {"version", "edges"});
    std::int64_t version = as_int(field(doc, "version", "cut"), "version");
    if (version != kFormatVersion)
      throw SpecError("cut: unsupported version " + std::to_string(version));
    return CutSystem::from(edges_from_json(field(doc, "edges", "cut"), "edges"));
  });
}

CutSystem load_cut(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw SpecError(std::string("cut: invalid JSON: ") + e.what());
  }
  return parse_cut(doc);
}

}  // namespace firecut
