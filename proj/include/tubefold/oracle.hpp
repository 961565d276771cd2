#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "tubefold/chaincode.hpp"
#include "tubefold/lattice.hpp"
#include "tubefold/surface.hpp"

namespace tubefold {

struct OracleLimits {
  std::size_t max_results = std::numeric_limits<std::size_t>::max();
  std::size_t max_nodes = std::numeric_limits<std::size_t>::max();
  /// Search only one start cursor per orbit of the tube's own symmetries.
  bool use_symmetry = false;
};

struct OracleResult {
  std::vector<std::pair<Cursor, ChainCode>> codes;
  std::size_t explored = 0;
  bool truncated = false;
};

/// Depth-first search over every start cursor and every L/R/S choice,
/// pruning face revisits and dual-point collisions. Results come in search
/// order: faces in surface order, headings in direction order, then L, R, S.
OracleResult enumerate_unfoldings(const Orthotube& tube, const OracleLimits& limits = {});

bool exists_unfolding(const Orthotube& tube);

/// The search's acceptance predicate applied to one (start, code) pair.
bool oracle_accepts(const Surface& surface, const Cursor& start, const ChainCode& code);
bool oracle_accepts(const Orthotube& tube, const Cursor& start, const ChainCode& code);

}  // namespace tubefold
