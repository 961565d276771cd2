#pragma once

#include <string>
#include <vector>

#include "tubefold/chaincode.hpp"
#include "tubefold/lattice.hpp"
#include "tubefold/surface.hpp"

namespace tubefold {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  /// Required checks make up `overall`; the rest are informational.
  bool required = true;
};

struct Report {
  std::vector<Check> checks;
  bool overall = false;

  const Check* find(std::string_view name) const;
  bool passed(std::string_view name) const {
    const Check* c = find(name);
    return c != nullptr && c->pass;
  }
};

/// Checks, in order: LENGTH, WALK, HAMILTONIAN, NONOVERLAP (required) and
/// PREFIX_QTURN (informational).
Report verify(const Orthotube& tube, const Cursor& start, const ChainCode& code);
Report verify(const Surface& surface, const Cursor& start, const ChainCode& code);

/// "CHECK <NAME> PASS|FAIL <detail>" per check, then "OVERALL PASS|FAIL".
std::string format_report_text(const Report& report, bool color = false);
std::string format_report_json(const Report& report);

}  // namespace tubefold
