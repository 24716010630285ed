#pragma once

#include <vector>

#include "firecut/instance.hpp"
#include "firecut/verdict.hpp"

namespace firecut {

struct Preprocessed {
  Instance instance;                   // removed set grown by the absorbed vertices
  std::vector<Vertex> absorbed;        // vertices of finite components of G - removed
  std::vector<Vertex> pre_contained;   // ignitions among them
};

/// Moves every finite component of the graph minus the removed set into the
/// removed set. Lattice families only.
Preprocessed preprocess(const Instance& instance, const SolverOptions& options = {});

/// Builds the min-cut network for a preprocessed lattice instance with a
/// nonempty ignition set. Throws LimitError past `options.node_cap`.
ReductionTrace build_network(const Instance& instance, const SolverOptions& options = {});

/// Decides a lattice-family instance through the min-cut reduction.
Verdict solve_lattice(const Instance& instance, const SolverOptions& options = {});

/// Decides any instance, routing by family: lattice families use the
/// min-cut reduction, hub graphs the ray-free algorithm, subset stars the
/// gadget procedure.
Verdict solve(const Instance& instance, const SolverOptions& options = {});

/// True iff the cut has at most `budget` edges and leaves every ignition in
/// a finite component. Throws GraphError when a cut edge is not an edge of
/// the graph minus the removed vertices.
bool verify_cut(const Instance& instance, const CutSystem& cut);

}  // namespace firecut
