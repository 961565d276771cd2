#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tubefold/chaincode.hpp"
#include "tubefold/lattice.hpp"

namespace tubefold {

/// Position of a dual walk: a surface face plus a tangent heading.
struct Cursor {
  FaceId face;
  Direction heading = Direction::PosX;

  friend auto operator<=>(const Cursor&, const Cursor&) = default;
};

std::ostream& operator<<(std::ostream& os, const Cursor& c);

/// The boundary of an orthotube as a set of unit faces with the
/// edge-incidence that the L/R/S walk moves across.
///
/// Where two non-consecutive boxes touch along an edge only, four faces
/// meet at that edge; they are paired within each box (the convex fold),
/// so the surface stays a closed 2-manifold and every face side has
/// exactly one neighbour.
class Surface {
 public:
  explicit Surface(Orthotube tube);

  const Orthotube& tube() const { return tube_; }
  /// Faces ordered by owning box index, then by direction order.
  const std::vector<FaceId>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }

  std::optional<std::uint32_t> index_of(const FaceId& f) const;
  bool contains(const FaceId& f) const { return index_of(f).has_value(); }
  bool contains(const Cursor& c) const {
    return perpendicular(c.face.normal, c.heading) && contains(c.face);
  }

  /// Neighbour across `side` of face `face_index`: the adjacent face and
  /// the heading on it that points away from the shared edge.
  struct Crossing {
    std::uint32_t face = 0;
    Direction heading = Direction::PosX;
  };
  Crossing across(std::uint32_t face_index, Direction side) const {
    return neighbours_[face_index * 6 + static_cast<std::size_t>(side)];
  }

  /// EdgeId -> incident face pairs; one pair per manifold edge, two where
  /// boxes touch along an edge.
  const std::unordered_map<EdgeId, std::vector<std::pair<FaceId, FaceId>>, EdgeHash>& edge_map() const {
    return edge_map_;
  }

 private:
  Orthotube tube_;
  std::vector<FaceId> faces_;
  std::unordered_map<FaceId, std::uint32_t, FaceHash> face_index_;
  std::vector<Crossing> neighbours_;
  std::unordered_map<EdgeId, std::vector<std::pair<FaceId, FaceId>>, EdgeHash> edge_map_;
};

Surface build_surface(const Orthotube& tube);

/// Exit side of a turn symbol for a walker on `normal` heading `heading`.
Direction exit_side(Direction normal, Direction heading, Turn t);

/// One move of the dual walk. Throws std::invalid_argument if the cursor
/// is not on the surface.
Cursor step(const Surface& surface, const Cursor& cursor, Turn symbol);

/// The unlabelled first move f_0 -> f_1 across the initial heading.
Cursor first_move(const Surface& surface, const Cursor& start);

/// Faces f_0 .. f_{|code|+1}; repeats are not rejected.
std::vector<FaceId> walk(const Surface& surface, const Cursor& start, const ChainCode& code);

}  // namespace tubefold
