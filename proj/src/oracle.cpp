#include "tubefold/oracle.hpp"

#include <algorithm>

#include "tubefold/generator.hpp"

namespace tubefold {

namespace {

constexpr std::array<Turn, 3> kTurns = {Turn::L, Turn::R, Turn::S};

// Occupied dual points on a square window large enough for any path of
// the given length starting at the origin.
class DualGrid {
 public:
  explicit DualGrid(std::size_t points)
      : radius_(static_cast<std::int64_t>(points) + 1), width_(2 * radius_ + 1),
        cells_(static_cast<std::size_t>(width_ * width_), 0) {}

  bool test(const Point2& p) const { return cells_[index(p)] != 0; }
  void set(const Point2& p, bool on) { cells_[index(p)] = on ? 1 : 0; }

 private:
  std::size_t index(const Point2& p) const {
    return static_cast<std::size_t>((p.y + radius_) * width_ + (p.x + radius_));
  }
  std::int64_t radius_;
  std::int64_t width_;
  std::vector<std::uint8_t> cells_;
};

Point2 turned(Point2 dir, Turn t) {
  if (t == Turn::L) return {-dir.y, dir.x};
  if (t == Turn::R) return {dir.y, -dir.x};
  return dir;
}

class Search {
 public:
  Search(const Surface& surface, const OracleLimits& limits)
      : surface_(surface), limits_(limits), target_(4 * surface.tube().n() + 4),
        visited_(surface.size(), 0), grid_(target_ + 2) {}

  void run_from(const Cursor& start) {
    const auto f0 = *surface_.index_of(start.face);
    const auto first = surface_.across(f0, start.heading);
    if (first.face == f0) return;
    start_ = start;
    visited_[f0] = visited_[first.face] = 1;
    grid_.set({0, 0}, true);
    grid_.set({0, 1}, true);
    ++result.explored;
    dfs(first.face, first.heading, {0, 1}, {0, 1});
    visited_[f0] = visited_[first.face] = 0;
    grid_.set({0, 0}, false);
    grid_.set({0, 1}, false);
  }

  bool stopped() const { return result.truncated; }

  OracleResult result;

 private:
  void dfs(std::uint32_t face, Direction heading, Point2 pos, Point2 dir) {
    if (path_.size() == target_) {
      result.codes.emplace_back(start_, ChainCode(path_));
      if (result.codes.size() >= limits_.max_results) result.truncated = true;
      return;
    }
    const Direction normal = surface_.faces()[face].normal;
    for (Turn t : kTurns) {
      if (result.truncated) return;
      const auto next = surface_.across(face, exit_side(normal, heading, t));
      if (visited_[next.face]) continue;
      const Point2 ndir = turned(dir, t);
      const Point2 npos{pos.x + ndir.x, pos.y + ndir.y};
      if (grid_.test(npos)) continue;
      if (result.explored >= limits_.max_nodes) {
        result.truncated = true;
        return;
      }
      ++result.explored;
      visited_[next.face] = 1;
      grid_.set(npos, true);
      path_.push_back(t);
      dfs(next.face, next.heading, npos, ndir);
      path_.pop_back();
      grid_.set(npos, false);
      visited_[next.face] = 0;
    }
  }

  const Surface& surface_;
  const OracleLimits& limits_;
  std::size_t target_;
  std::vector<std::uint8_t> visited_;
  DualGrid grid_;
  std::vector<Turn> path_;
  Cursor start_;
};

// Symmetries of the tube's cell set (up to translation), as maps on cursors.
std::vector<std::pair<SymmetryOp, Cell>> self_symmetries(const Orthotube& tube) {
  std::vector<Cell> sorted(tube.cells().begin(), tube.cells().end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<SymmetryOp, Cell>> out;
  for (const SymmetryOp& op : SymmetryOp::all()) {
    std::vector<Cell> image;
    for (const Cell& c : sorted) image.push_back(op.apply(c));
    std::sort(image.begin(), image.end());
    const Cell shift{sorted[0].x - image[0].x, sorted[0].y - image[0].y, sorted[0].z - image[0].z};
    bool same = true;
    for (std::size_t i = 0; i < image.size() && same; ++i) {
      same = Cell{image[i].x + shift.x, image[i].y + shift.y, image[i].z + shift.z} == sorted[i];
    }
    if (same) out.emplace_back(op, shift);
  }
  return out;
}

}  // namespace

OracleResult enumerate_unfoldings(const Orthotube& tube, const OracleLimits& limits) {
  const Surface surface(tube);
  Search search(surface, limits);
  const auto symmetries = limits.use_symmetry ? self_symmetries(tube) : std::vector<std::pair<SymmetryOp, Cell>>{};

  for (const FaceId& face : surface.faces()) {
    for (Direction heading : kAllDirections) {
      if (!perpendicular(heading, face.normal)) continue;
      const Cursor start{face, heading};
      bool representative = true;
      for (const auto& [op, shift] : symmetries) {
        const Cell c = op.apply(face.cell);
        const Cursor image{{{c.x + shift.x, c.y + shift.y, c.z + shift.z}, op.apply(face.normal)},
                           op.apply(heading)};
        const auto a = std::pair{*surface.index_of(image.face), image.heading};
        const auto b = std::pair{*surface.index_of(face), heading};
        if (a < b) {
          representative = false;
          break;
        }
      }
      if (!representative) continue;
      search.run_from(start);
      if (search.stopped()) return search.result;
    }
  }
  return search.result;
}

bool exists_unfolding(const Orthotube& tube) {
  OracleLimits limits;
  limits.max_results = 1;
  return !enumerate_unfoldings(tube, limits).codes.empty();
}

bool oracle_accepts(const Surface& surface, const Cursor& start, const ChainCode& code) {
  if (code.size() != 4 * surface.tube().n() + 4 || !surface.contains(start)) return false;
  std::vector<std::uint8_t> visited(surface.size(), 0);
  DualGrid grid(code.size() + 2);
  auto face = *surface.index_of(start.face);
  visited[face] = 1;
  grid.set({0, 0}, true);
  const auto first = surface.across(face, start.heading);
  if (visited[first.face]) return false;
  face = first.face;
  Direction heading = first.heading;
  visited[face] = 1;
  Point2 pos{0, 1};
  Point2 dir{0, 1};
  grid.set(pos, true);
  for (Turn t : code) {
    const auto next = surface.across(face, exit_side(surface.faces()[face].normal, heading, t));
    dir = turned(dir, t);
    pos = {pos.x + dir.x, pos.y + dir.y};
    if (visited[next.face] || grid.test(pos)) return false;
    visited[next.face] = 1;
    grid.set(pos, true);
    face = next.face;
    heading = next.heading;
  }
  return true;
}

bool oracle_accepts(const Orthotube& tube, const Cursor& start, const ChainCode& code) {
  return oracle_accepts(Surface(tube), start, code);
}

}  // namespace tubefold
