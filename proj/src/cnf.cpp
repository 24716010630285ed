#include "firecut/cnf.hpp"

#include <cstdlib>
#include <sstream>

#include "firecut/errors.hpp"

namespace firecut {

void Cnf::validate() const {
  for (const auto& clause : clauses) {
    for (std::int32_t lit : clause) {
      if (lit == 0) throw SpecError("cnf: zero literal inside a clause");
      if (static_cast<std::uint32_t>(std::abs(lit)) > n_vars)
        throw SpecError("cnf: literal " + std::to_string(lit) + " exceeds variable count " +
                        std::to_string(n_vars));
    }
  }
}

bool Cnf::satisfied_by(std::uint64_t assignment) const {
  for (const auto& clause : clauses) {
    bool sat = false;
    for (std::int32_t lit : clause) {
      bool value = (assignment >> (std::abs(lit) - 1)) & 1U;
      if ((lit > 0) == value) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

Cnf parse_dimacs(std::istream& in) {
  Cnf cnf;
  bool have_header = false;
  long declared_clauses = 0;
  std::vector<std::int32_t> current;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c" || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string fmt;
      long vars = -1;
      if (!(ls >> fmt >> vars >> declared_clauses) || fmt != "cnf" || vars < 0 ||
          declared_clauses < 0)
        throw SpecError("dimacs: malformed problem line: " + line);
      if (have_header) throw SpecError("dimacs: duplicate problem line");
      have_header = true;
      cnf.n_vars = static_cast<std::uint32_t>(vars);
      continue;
    }
    if (!have_header) throw SpecError("dimacs: clause before problem line");
    std::istringstream tokens(line);
    long lit = 0;
    while (tokens >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(static_cast<std::int32_t>(lit));
      }
    }
    if (!tokens.eof()) throw SpecError("dimacs: non-integer token in line: " + line);
  }
  if (!have_header) throw SpecError("dimacs: missing problem line");
  if (!current.empty()) cnf.clauses.push_back(std::move(current));
  if (static_cast<long>(cnf.clauses.size()) != declared_clauses)
    throw SpecError("dimacs: header declares " + std::to_string(declared_clauses) +
                    " clauses, found " + std::to_string(cnf.clauses.size()));
  cnf.validate();
  return cnf;
}

Cnf parse_dimacs_string(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

std::string to_dimacs(const Cnf& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.n_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (std::int32_t lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace firecut
