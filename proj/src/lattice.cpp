#include "tubefold/lattice.hpp"

#include <charconv>
#include <sstream>

namespace tubefold {

namespace {

constexpr std::array<std::string_view, 6> kDirectionNames = {"+X", "-X", "+Y", "-Y", "+Z", "-Z"};

std::string describe(const Cell& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

}  // namespace

std::string_view to_string(Direction d) { return kDirectionNames[static_cast<int>(d)]; }

std::optional<Direction> parse_direction(std::string_view text) {
  if (text.size() != 2) return std::nullopt;
  int sign = 0;
  if (text[0] == '+') sign = 1;
  if (text[0] == '-') sign = -1;
  if (sign == 0) return std::nullopt;
  switch (text[1]) {
    case 'X': case 'x': return make_direction(Axis::X, sign);
    case 'Y': case 'y': return make_direction(Axis::Y, sign);
    case 'Z': case 'z': return make_direction(Axis::Z, sign);
    default: return std::nullopt;
  }
}

std::ostream& operator<<(std::ostream& os, Direction d) { return os << to_string(d); }

NotTangent::NotTangent(Direction normal, Direction heading)
    : LatticeError("heading " + std::string(to_string(heading)) + " is not tangent to normal " +
                   std::string(to_string(normal))) {}

Direction left_of(Direction normal, Direction heading) {
  if (!perpendicular(normal, heading)) throw NotTangent(normal, heading);
  return cross(normal, heading);
}

Cell Cell::moved(Direction d, std::int32_t steps) const {
  Cell c = *this;
  const std::int32_t delta = sign_of(d) * steps;
  switch (axis_of(d)) {
    case Axis::X: c.x += delta; break;
    case Axis::Y: c.y += delta; break;
    case Axis::Z: c.z += delta; break;
  }
  return c;
}

bool Cell::in_bounds(std::int32_t limit) const {
  auto ok = [limit](std::int32_t v) { return v >= -limit && v <= limit; };
  return ok(x) && ok(y) && ok(z);
}

std::uint64_t Cell::key() const {
  constexpr std::uint64_t radix = (std::uint64_t{1} << 21) + 3;
  constexpr std::int64_t offset = std::int64_t{kCoordinateLimit} + 1;
  const auto u = [](std::int32_t v) { return static_cast<std::uint64_t>(v + offset); };
  return (u(x) * radix + u(y)) * radix + u(z);
}

std::uint64_t mix64(std::uint64_t x) {
  // splitmix64 finalizer
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t FaceId::hash() const { return mix64(cell.key() ^ (static_cast<std::uint64_t>(normal) << 61)); }
std::uint64_t EdgeId::hash() const { return mix64(base.key() ^ (static_cast<std::uint64_t>(axis) << 62)); }

std::ostream& operator<<(std::ostream& os, const Cell& c) {
  return os << '(' << c.x << ',' << c.y << ',' << c.z << ')';
}

std::ostream& operator<<(std::ostream& os, const FaceId& f) {
  return os << "Face(" << f.cell << ',' << f.normal << ')';
}

std::optional<Direction> direction_between(const Cell& a, const Cell& b) {
  const std::int64_t dx = std::int64_t{b.x} - a.x;
  const std::int64_t dy = std::int64_t{b.y} - a.y;
  const std::int64_t dz = std::int64_t{b.z} - a.z;
  if (std::abs(dx) + std::abs(dy) + std::abs(dz) != 1) return std::nullopt;
  if (dx != 0) return make_direction(Axis::X, static_cast<int>(dx));
  if (dy != 0) return make_direction(Axis::Y, static_cast<int>(dy));
  return make_direction(Axis::Z, static_cast<int>(dz));
}

EdgeId edge_of(const FaceId& face, Direction side) {
  if (!perpendicular(face.normal, side)) throw NotTangent(face.normal, side);
  // Offsets of the min corner: +1 along the normal axis if the normal is
  // positive, +1 along the side axis if the side is positive.
  Cell base = face.cell;
  if (sign_of(face.normal) > 0) base = base.moved(face.normal);
  if (sign_of(side) > 0) base = base.moved(side);
  const int a = static_cast<int>(axis_of(face.normal));
  const int b = static_cast<int>(axis_of(side));
  return {base, static_cast<Axis>(3 - a - b)};
}

TubeError::TubeError(Kind kind, std::size_t first, std::size_t second, const std::string& what)
    : LatticeError(what), kind_(kind), first_(first), second_(second) {}

Orthotube::Orthotube(std::vector<Cell> cells) : cells_(std::move(cells)) {
  index_.reserve(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) index_.emplace(cells_[i], i);
}

Orthotube Orthotube::validate(std::vector<Cell> cells) {
  using Kind = TubeError::Kind;
  if (cells.empty()) throw TubeError(Kind::Empty, 0, 0, "orthotube needs at least one box");

  std::unordered_map<Cell, std::size_t, CellHash> seen;
  seen.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cells[i].in_bounds()) {
      throw TubeError(Kind::OutOfBounds, i, i,
                      "box " + std::to_string(i) + " " + describe(cells[i]) + " exceeds the coordinate limit");
    }
    auto [it, inserted] = seen.emplace(cells[i], i);
    if (!inserted) {
      throw TubeError(Kind::DuplicateCell, it->second, i,
                      "box " + std::to_string(i) + " duplicates box " + std::to_string(it->second));
    }
    if (i > 0 && !direction_between(cells[i - 1], cells[i])) {
      throw TubeError(Kind::NotAdjacent, i - 1, i,
                      "boxes " + std::to_string(i - 1) + " and " + std::to_string(i) + " are not face-adjacent");
    }
  }

  // First offending pair in (i, j) lexicographic order.
  std::optional<std::pair<std::size_t, std::size_t>> worst;
  for (std::size_t j = 0; j < cells.size(); ++j) {
    for (Direction d : kAllDirections) {
      auto it = seen.find(cells[j].moved(d));
      if (it == seen.end()) continue;
      const std::size_t i = it->second;
      if (i + 1 >= j) continue;
      if (!worst || std::pair{i, j} < *worst) worst = std::pair{i, j};
    }
  }
  if (worst) {
    throw TubeError(Kind::IllegalContact, worst->first, worst->second,
                    "non-consecutive boxes " + std::to_string(worst->first) + " and " +
                        std::to_string(worst->second) + " share a face");
  }
  return Orthotube(std::move(cells));
}

std::optional<std::size_t> Orthotube::index_of(const Cell& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Direction Orthotube::axis(std::size_t i) const {
  if (i + 1 >= cells_.size()) throw std::out_of_range("axis index " + std::to_string(i) + " out of range");
  return *direction_between(cells_[i], cells_[i + 1]);
}

FaceId hole_face(const Orthotube& tube, std::size_t i) {
  if (i >= tube.n()) throw std::out_of_range("hole index " + std::to_string(i) + " out of range");
  return {tube[i], tube.axis(i)};
}

std::vector<Cell> parse_cells(std::istream& in) {
  std::vector<Cell> cells;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string tok[4];
    std::int32_t v[3] = {0, 0, 0};
    int count = 0;
    while (count < 4 && fields >> tok[count]) ++count;
    bool ok = count == 3;
    for (int k = 0; ok && k < 3; ++k) {
      const char* b = tok[k].data();
      const char* e = b + tok[k].size();
      if (*b == '+') ++b;
      auto [p, ec] = std::from_chars(b, e, v[k]);
      ok = ec == std::errc() && p == e && b != e;
    }
    if (!ok) throw std::invalid_argument("line " + std::to_string(line_no) + ": expected \"x y z\"");
    cells.push_back({v[0], v[1], v[2]});
  }
  return cells;
}

std::vector<Cell> parse_cells(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_cells(in);
}

std::string format_cells(std::span<const Cell> cells) {
  std::string out;
  for (const Cell& c : cells) {
    out += std::to_string(c.x) + ' ' + std::to_string(c.y) + ' ' + std::to_string(c.z) + '\n';
  }
  return out;
}

}  // namespace tubefold
