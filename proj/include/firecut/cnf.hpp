#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace firecut {

/// Boolean formula in conjunctive normal form with DIMACS literal
/// conventions: variable k (1-based) appears as k or -k.
struct Cnf {
  std::uint32_t n_vars = 0;
  std::vector<std::vector<std::int32_t>> clauses;

  /// Throws SpecError on a zero literal or a variable above n_vars.
  void validate() const;

  /// Bit k-1 of `assignment` is the value of variable k.
  bool satisfied_by(std::uint64_t assignment) const;
};

/// Reads "p cnf <vars> <clauses>" DIMACS text; comment lines start with 'c'.
Cnf parse_dimacs(std::istream& in);
Cnf parse_dimacs_string(const std::string& text);
std::string to_dimacs(const Cnf& cnf);

}  // namespace firecut
