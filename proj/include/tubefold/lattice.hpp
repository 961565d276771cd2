#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tubefold {

/// One of the six signed unit axes. The enumerator order is the fixed
/// direction order used wherever a deterministic choice is needed.
enum class Direction : std::uint8_t { PosX, NegX, PosY, NegY, PosZ, NegZ };

inline constexpr std::array<Direction, 6> kAllDirections = {
    Direction::PosX, Direction::NegX, Direction::PosY,
    Direction::NegY, Direction::PosZ, Direction::NegZ};

enum class Axis : std::uint8_t { X, Y, Z };

constexpr Axis axis_of(Direction d) { return static_cast<Axis>(static_cast<int>(d) / 2); }
constexpr int sign_of(Direction d) { return static_cast<int>(d) % 2 == 0 ? 1 : -1; }
constexpr Direction negate(Direction d) {
  return static_cast<Direction>(static_cast<int>(d) ^ 1);
}
constexpr Direction make_direction(Axis a, int sign) {
  return static_cast<Direction>(static_cast<int>(a) * 2 + (sign > 0 ? 0 : 1));
}
constexpr bool perpendicular(Direction a, Direction b) { return axis_of(a) != axis_of(b); }

/// Right-handed cross product of two perpendicular unit axes.
constexpr Direction cross(Direction a, Direction b) {
  const int ia = static_cast<int>(axis_of(a));
  const int ib = static_cast<int>(axis_of(b));
  const int ic = 3 - ia - ib;
  // (ia, ib, ic) is an even permutation of (0, 1, 2) iff ib == ia + 1 mod 3.
  const int parity = ((ia + 1) % 3 == ib) ? 1 : -1;
  return make_direction(static_cast<Axis>(ic), parity * sign_of(a) * sign_of(b));
}

std::string_view to_string(Direction d);
std::optional<Direction> parse_direction(std::string_view text);

std::ostream& operator<<(std::ostream& os, Direction d);

class LatticeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// `heading` is not perpendicular to `normal`.
class NotTangent : public LatticeError {
 public:
  NotTangent(Direction normal, Direction heading);
};

/// The intrinsic left of `heading` on a face with outward `normal`:
/// normal x heading.
Direction left_of(Direction normal, Direction heading);
inline Direction right_of(Direction normal, Direction heading) {
  return negate(left_of(normal, heading));
}

/// Largest admissible |coordinate|; keeps packed 64-bit keys collision free.
inline constexpr std::int32_t kCoordinateLimit = 1 << 20;

struct Cell {
  std::int32_t x = 0;
  std::int32_t y = 0;
  std::int32_t z = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;

  std::int32_t operator[](Axis a) const {
    return a == Axis::X ? x : (a == Axis::Y ? y : z);
  }
  Cell moved(Direction d, std::int32_t steps = 1) const;
  bool in_bounds(std::int32_t limit = kCoordinateLimit) const;
  /// Injective packing for |coord| <= kCoordinateLimit + 1 (lattice points
  /// of bounded cells included).
  std::uint64_t key() const;
};

std::ostream& operator<<(std::ostream& os, const Cell& c);

/// The unit direction from `a` to a face-adjacent `b`, if they are adjacent.
std::optional<Direction> direction_between(const Cell& a, const Cell& b);

/// A unit square of a cell boundary, named by the owning cell and its
/// outward normal. (c, n) and (c + n, -n) are the same geometric square.
struct FaceId {
  Cell cell;
  Direction normal = Direction::PosX;

  friend auto operator<=>(const FaceId&, const FaceId&) = default;

  FaceId other_side() const { return {cell.moved(normal), negate(normal)}; }
  bool same_square(const FaceId& o) const { return *this == o || *this == o.other_side(); }
  std::uint64_t hash() const;
};

std::ostream& operator<<(std::ostream& os, const FaceId& f);

/// Unit lattice segment from `base` (its lexicographically smaller
/// endpoint) along `axis`.
struct EdgeId {
  Cell base;
  Axis axis = Axis::X;

  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
  std::uint64_t hash() const;
};

/// The boundary edge of `face` on its `side` (side must be tangent).
EdgeId edge_of(const FaceId& face, Direction side);

std::uint64_t mix64(std::uint64_t x);

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept { return mix64(c.key()); }
};
struct FaceHash {
  std::size_t operator()(const FaceId& f) const noexcept { return f.hash(); }
};
struct EdgeHash {
  std::size_t operator()(const EdgeId& e) const noexcept { return e.hash(); }
};

class TubeError : public LatticeError {
 public:
  enum class Kind { Empty, OutOfBounds, DuplicateCell, NotAdjacent, IllegalContact };
  TubeError(Kind kind, std::size_t first, std::size_t second, const std::string& what);

  Kind kind() const { return kind_; }
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  Kind kind_;
  std::size_t first_;
  std::size_t second_;
};

/// A validated path of unit cubes B_0..B_n: distinct cells, consecutive
/// cells face-adjacent, no other face contacts. Immutable once built.
class Orthotube {
 public:
  /// Throws TubeError naming the first offending index (pair).
  static Orthotube validate(std::vector<Cell> cells);

  std::span<const Cell> cells() const { return cells_; }
  const Cell& operator[](std::size_t i) const { return cells_[i]; }
  std::size_t size() const { return cells_.size(); }
  /// Index of the last box (the tube has n + 1 boxes).
  std::size_t n() const { return cells_.size() - 1; }

  std::optional<std::size_t> index_of(const Cell& c) const;
  bool contains(const Cell& c) const { return index_.count(c) != 0; }

  /// Axis from B_i to B_{i+1}, for i < n.
  Direction axis(std::size_t i) const;

  friend bool operator==(const Orthotube& a, const Orthotube& b) { return a.cells_ == b.cells_; }

 private:
  explicit Orthotube(std::vector<Cell> cells);

  std::vector<Cell> cells_;
  std::unordered_map<Cell, std::size_t, CellHash> index_;
};

inline Orthotube validate_orthotube(std::vector<Cell> cells) {
  return Orthotube::validate(std::move(cells));
}

/// Shared face between B_i and B_{i+1}, owned by B_i.
FaceId hole_face(const Orthotube& tube, std::size_t i);

/// Line-oriented "x y z" cell lists; '#' comments and blank lines skipped.
/// Throws std::invalid_argument with a line number on malformed input.
std::vector<Cell> parse_cells(std::istream& in);
std::vector<Cell> parse_cells(std::string_view text);
std::string format_cells(std::span<const Cell> cells);

}  // namespace tubefold
