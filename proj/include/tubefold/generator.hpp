#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "tubefold/lattice.hpp"

namespace tubefold {

/// One of the 48 signed axis permutations: output axis k takes
/// sign[k] * input[perm[k]].
struct SymmetryOp {
  std::array<std::uint8_t, 3> perm{0, 1, 2};
  std::array<std::int8_t, 3> sign{1, 1, 1};

  Cell apply(const Cell& c) const;
  Direction apply(Direction d) const;
  /// Determinant of the signed permutation matrix; -1 for reflections.
  int determinant() const;

  static const std::array<SymmetryOp, 48>& all();
};

/// Cell sequence translated to a nonnegative min corner and minimal (in
/// lexicographic order) over the 48 symmetries and path reversal.
struct CanonicalForm {
  std::vector<Cell> cells;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonicalize(std::span<const Cell> cells);
inline CanonicalForm canonicalize(const Orthotube& tube) { return canonicalize(tube.cells()); }

class GenerationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reproducible self-avoiding tube of `n_boxes` cells starting at the
/// origin, grown by randomized backtracking.
Orthotube random_orthotube(std::size_t n_boxes, std::uint64_t seed);

/// Calls `visit` once per canonical class, for lengths 1..max_boxes in
/// increasing order and canonical order within a length.
void enumerate_orthotubes(std::size_t max_boxes, const std::function<void(const Orthotube&)>& visit);
std::vector<Orthotube> enumerate_orthotubes(std::size_t max_boxes);

/// Number of canonical tubes of each length 1..max_boxes (index 0 is length 1).
std::vector<std::size_t> count_orthotubes(std::size_t max_boxes);

}  // namespace tubefold
