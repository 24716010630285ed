#pragma once

#include <cstdint>
#include <vector>

#include "firecut/cnf.hpp"
#include "firecut/instance.hpp"
#include "firecut/verdict.hpp"

namespace firecut {

/// Star instance given by its tail predicate. Ignition set is the center.
struct SInstance {
  std::uint32_t n_vars = 0;
  Cnf f;
  bool extra_ray = true;
  std::uint64_t budget = 0;
};

inline constexpr std::uint64_t kDefaultSearchCap = std::uint64_t{1} << 24;

/// Pads `cnf` with one fresh variable per clause and one clause over all of
/// them, then sets an extra ray and budget 1. Throws SpecError on a formula
/// without clauses or one that would exceed the supported variable count.
SInstance build_sat_gadget(const Cnf& cnf);

/// Satisfying assignments of `f`, at most `limit` of them (search order).
/// Throws LimitError once the search visits more than `search_cap` nodes.
std::vector<std::uint64_t> satisfying_assignments(const Cnf& f, std::uint64_t limit,
                                                  std::uint64_t search_cap = kDefaultSearchCap);

/// Counts infinite rays at the center up to budget + 1. Contained iff they
/// number at most the budget; the cut then takes the center edge of each.
Verdict solve_s_instance(const SInstance& si, std::uint64_t search_cap = kDefaultSearchCap);

/// Checks a no-certificate: distinct satisfying assignments that together
/// with the extra ray give more rays than the budget.
bool check_no_certificate(const SInstance& si, const std::vector<std::uint64_t>& assignments);

/// True iff the gadget is not contained exactly when the formula is
/// satisfiable (decided by exhaustive search, at most 20 variables).
bool cross_check_gadget(const Cnf& cnf);

/// The instance on the star graph: ignition {o}, nothing removed.
Instance to_instance(const SInstance& si);
/// Inverse of to_instance. Throws SpecError unless the instance is a star
/// with ignitions within {o} and no removed vertices.
SInstance from_instance(const Instance& instance);

/// Cut edges must be star edges; every infinite ray must lose an edge.
bool verify_s_cut(const SInstance& si, const CutSystem& cut,
                  std::uint64_t search_cap = kDefaultSearchCap);

}  // namespace firecut
