#include "tubefold/surface.hpp"

#include <stdexcept>

namespace tubefold {

namespace {

// Fold rule for leaving face (c, n) across side u, sweeping through the
// material of the tube around the edge:
//   c+u empty            -> convex fold onto (c, u)
//   c+u solid, c+u+n empty -> coplanar onto (c+u, n)
//   both solid           -> reflex fold onto (c+u+n, -u)
Cursor cross_edge(const Orthotube& tube, const FaceId& face, Direction side) {
  const Cell beside = face.cell.moved(side);
  if (!tube.contains(beside)) return {{face.cell, side}, negate(face.normal)};
  const Cell diagonal = beside.moved(face.normal);
  if (!tube.contains(diagonal)) return {{beside, face.normal}, side};
  return {{diagonal, negate(side)}, face.normal};
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Cursor& c) {
  return os << "Cursor(" << c.face << ',' << c.heading << ')';
}

Surface::Surface(Orthotube tube) : tube_(std::move(tube)) {
  for (const Cell& c : tube_.cells()) {
    for (Direction d : kAllDirections) {
      if (!tube_.contains(c.moved(d))) faces_.push_back({c, d});
    }
  }
  face_index_.reserve(faces_.size());
  for (std::uint32_t i = 0; i < faces_.size(); ++i) face_index_.emplace(faces_[i], i);

  neighbours_.assign(faces_.size() * 6, Crossing{});
  for (std::uint32_t i = 0; i < faces_.size(); ++i) {
    const FaceId& f = faces_[i];
    for (Direction side : kAllDirections) {
      if (!perpendicular(side, f.normal)) continue;
      const Cursor next = cross_edge(tube_, f, side);
      auto it = face_index_.find(next.face);
      if (it == face_index_.end()) throw std::logic_error("fold rule left the surface");
      neighbours_[i * 6 + static_cast<std::size_t>(side)] = {it->second, next.heading};
    }
  }

  // Pairing must be an involution: crossing back from the neighbour along
  // the reversed heading lands on the original face.
  for (std::uint32_t i = 0; i < faces_.size(); ++i) {
    const FaceId& f = faces_[i];
    for (Direction side : kAllDirections) {
      if (!perpendicular(side, f.normal)) continue;
      const Crossing c = neighbours_[i * 6 + static_cast<std::size_t>(side)];
      const Crossing back = neighbours_[c.face * 6 + static_cast<std::size_t>(negate(c.heading))];
      if (back.face != i || back.heading != negate(side)) {
        throw std::logic_error("surface edge pairing is not an involution");
      }
      const EdgeId e = edge_of(f, side);
      if (edge_of(faces_[c.face], negate(c.heading)) != e) {
        throw std::logic_error("paired faces do not share an edge");
      }
      if (i < c.face) edge_map_[e].emplace_back(f, faces_[c.face]);
    }
  }
}

std::optional<std::uint32_t> Surface::index_of(const FaceId& f) const {
  auto it = face_index_.find(f);
  if (it == face_index_.end()) return std::nullopt;
  return it->second;
}

Surface build_surface(const Orthotube& tube) { return Surface(tube); }

Direction exit_side(Direction normal, Direction heading, Turn t) {
  switch (t) {
    case Turn::L: return left_of(normal, heading);
    case Turn::R: return right_of(normal, heading);
    case Turn::S: break;
  }
  return heading;
}

Cursor step(const Surface& surface, const Cursor& cursor, Turn symbol) {
  const auto index = surface.index_of(cursor.face);
  if (!index || !perpendicular(cursor.face.normal, cursor.heading)) {
    throw std::invalid_argument("cursor is not on the surface");
  }
  const Surface::Crossing c = surface.across(*index, exit_side(cursor.face.normal, cursor.heading, symbol));
  return {surface.faces()[c.face], c.heading};
}

Cursor first_move(const Surface& surface, const Cursor& start) { return step(surface, start, Turn::S); }

std::vector<FaceId> walk(const Surface& surface, const Cursor& start, const ChainCode& code) {
  std::vector<FaceId> faces;
  faces.reserve(code.size() + 2);
  faces.push_back(start.face);
  Cursor cur = first_move(surface, start);
  faces.push_back(cur.face);
  for (Turn t : code) {
    cur = step(surface, cur, t);
    faces.push_back(cur.face);
  }
  return faces;
}

}  // namespace tubefold
