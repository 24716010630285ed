#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "firecut/instance.hpp"
#include "firecut/verdict.hpp"

namespace firecut {

/// ASCII picture of a grid-family verdict, rows from high j to low j:
///   F ignition, # burned, X removed, . untouched,
///   | and - cut edges between cells (diagonal cut edges are only counted).
/// Returns nullopt for other families or when the picture would be wider
/// than `max_width` columns.
std::optional<std::string> render_grid(const Instance& instance, const Verdict& verdict,
                                       std::size_t max_width = 120);

}  // namespace firecut
