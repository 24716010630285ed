#include "firecut/graph_oracle.hpp"

#include <algorithm>

#include "firecut/errors.hpp"

namespace firecut {
namespace {

class SpecOracle final : public GraphOracle {
 public:
  explicit SpecOracle(std::shared_ptr<const GraphSpec> spec) : spec_(std::move(spec)) {}

  bool contains(const Vertex& v) const override { return spec_->contains(v); }
  bool is_hub(const Vertex& v) const override { return spec_->is_hub(v); }
  void neighbors(const Vertex& v, std::vector<Vertex>& out) const override {
    spec_->neighbors(v, out);
  }
  void neighbors_of_any(const Vertex& v, std::vector<Vertex>& out) const override {
    spec_->neighbors(v, out);
  }
  const GraphSpec& spec() const override { return *spec_; }

 private:
  std::shared_ptr<const GraphSpec> spec_;
};

class RestrictedOracle final : public GraphOracle {
 public:
  RestrictedOracle(OraclePtr base, std::shared_ptr<const VertexSet> removed)
      : base_(std::move(base)), removed_(std::move(removed)) {}

  bool contains(const Vertex& v) const override {
    return !removed_->contains(v) && base_->contains(v);
  }
  bool is_hub(const Vertex& v) const override { return contains(v) && base_->is_hub(v); }
  void neighbors(const Vertex& v, std::vector<Vertex>& out) const override {
    if (removed_->contains(v)) throw GraphError("vertex " + to_string(v) + " was removed");
    base_->neighbors(v, out);
    drop_removed(out);
  }
  void neighbors_of_any(const Vertex& v, std::vector<Vertex>& out) const override {
    base_->neighbors_of_any(v, out);
    drop_removed(out);
  }
  const GraphSpec& spec() const override { return base_->spec(); }

 private:
  void drop_removed(std::vector<Vertex>& out) const {
    std::erase_if(out, [&](const Vertex& w) { return removed_->contains(w); });
  }
  OraclePtr base_;
  std::shared_ptr<const VertexSet> removed_;
};

class CutOracle final : public GraphOracle {
 public:
  CutOracle(OraclePtr base, EdgeSet cut) : base_(std::move(base)), cut_(std::move(cut)) {}

  bool contains(const Vertex& v) const override { return base_->contains(v); }
  bool is_hub(const Vertex& v) const override { return base_->is_hub(v); }
  void neighbors(const Vertex& v, std::vector<Vertex>& out) const override {
    base_->neighbors(v, out);
    drop_cut(v, out);
  }
  void neighbors_of_any(const Vertex& v, std::vector<Vertex>& out) const override {
    base_->neighbors_of_any(v, out);
    drop_cut(v, out);
  }
  const GraphSpec& spec() const override { return base_->spec(); }

 private:
  void drop_cut(const Vertex& v, std::vector<Vertex>& out) const {
    if (cut_.empty()) return;
    std::erase_if(out, [&](const Vertex& w) { return w != v && cut_.contains(Edge(v, w)); });
  }
  OraclePtr base_;
  EdgeSet cut_;
};

}  // namespace

CutSystem CutSystem::from(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return CutSystem{std::move(edges)};
}

std::vector<Vertex> GraphOracle::neighbors(const Vertex& v) const {
  std::vector<Vertex> out;
  neighbors(v, out);
  return out;
}

OraclePtr make_oracle(std::shared_ptr<const GraphSpec> spec) {
  return std::make_shared<SpecOracle>(std::move(spec));
}

OraclePtr restrict(std::shared_ptr<const GraphSpec> spec, const VertexSet& removed) {
  auto base = make_oracle(std::move(spec));
  if (removed.empty()) return base;
  return restrict(std::move(base), std::make_shared<const VertexSet>(removed));
}

OraclePtr restrict(OraclePtr base, std::shared_ptr<const VertexSet> removed) {
  return std::make_shared<RestrictedOracle>(std::move(base), std::move(removed));
}

OraclePtr apply_cut(OraclePtr base, const CutSystem& cut) {
  EdgeSet edges;
  std::vector<Vertex> buf;
  for (const Edge& e : cut.edges) {
    for (const Vertex* v : {&e.first(), &e.second()})
      if (!base->contains(*v))
        throw GraphError("cut edge " + to_string(e) + ": " + to_string(*v) + " not in graph");
    // A hub cannot enumerate its neighbors; check from the other side.
    const Vertex& probe = base->is_hub(e.first()) ? e.second() : e.first();
    if (base->is_hub(probe))
      buf = base->spec().hub_explicit_neighbors(probe);
    else
      base->neighbors(probe, buf);
    if (!std::binary_search(buf.begin(), buf.end(), e.other(probe)))
      throw GraphError("cut edge " + to_string(e) + " is not an edge of the graph");
    edges.insert(e);
  }
  if (edges.empty()) return base;
  return std::make_shared<CutOracle>(std::move(base), std::move(edges));
}

}  // namespace firecut
