#include "tubefold/generator.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

namespace tubefold {

Cell SymmetryOp::apply(const Cell& c) const {
  const std::array<std::int32_t, 3> v{c.x, c.y, c.z};
  return {sign[0] * v[perm[0]], sign[1] * v[perm[1]], sign[2] * v[perm[2]]};
}

Direction SymmetryOp::apply(Direction d) const {
  const int in = static_cast<int>(axis_of(d));
  for (int k = 0; k < 3; ++k) {
    if (perm[k] == in) return make_direction(static_cast<Axis>(k), sign[k] * sign_of(d));
  }
  return d;
}

int SymmetryOp::determinant() const {
  // Parity of the permutation times the product of signs.
  int inversions = 0;
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) inversions += perm[a] > perm[b] ? 1 : 0;
  }
  return (inversions % 2 == 0 ? 1 : -1) * sign[0] * sign[1] * sign[2];
}

const std::array<SymmetryOp, 48>& SymmetryOp::all() {
  static const std::array<SymmetryOp, 48> ops = [] {
    std::array<SymmetryOp, 48> out{};
    std::array<std::uint8_t, 3> p{0, 1, 2};
    std::size_t k = 0;
    do {
      for (int mask = 0; mask < 8; ++mask) {
        SymmetryOp op;
        op.perm = p;
        for (int b = 0; b < 3; ++b) op.sign[b] = (mask >> b) & 1 ? -1 : 1;
        out[k++] = op;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return ops;
}

CanonicalForm canonicalize(std::span<const Cell> cells) {
  CanonicalForm best;
  std::vector<Cell> scratch(cells.size());
  for (bool reversed : {false, true}) {
    for (const SymmetryOp& op : SymmetryOp::all()) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        scratch[i] = op.apply(cells[reversed ? cells.size() - 1 - i : i]);
      }
      Cell lo = scratch.empty() ? Cell{} : scratch[0];
      for (const Cell& c : scratch) {
        lo = {std::min(lo.x, c.x), std::min(lo.y, c.y), std::min(lo.z, c.z)};
      }
      for (Cell& c : scratch) c = {c.x - lo.x, c.y - lo.y, c.z - lo.z};
      if (best.cells.empty() || scratch < best.cells) best.cells = scratch;
    }
  }
  return best;
}

namespace {

// Cells `next` may join after `last` without touching any other cell by a face.
bool can_extend(const std::unordered_set<Cell, CellHash>& occupied, const Cell& last, const Cell& next) {
  if (occupied.count(next)) return false;
  for (Direction d : kAllDirections) {
    const Cell nb = next.moved(d);
    if (nb != last && occupied.count(nb)) return false;
  }
  return true;
}

}  // namespace

Orthotube random_orthotube(std::size_t n_boxes, std::uint64_t seed) {
  if (n_boxes == 0) throw std::invalid_argument("random_orthotube needs at least one box");
  std::mt19937_64 rng(seed);
  constexpr int kRestarts = 32;
  const std::size_t budget = 64 * n_boxes + 1024;

  for (int attempt = 0; attempt < kRestarts; ++attempt) {
    std::vector<Cell> cells{Cell{0, 0, 0}};
    std::unordered_set<Cell, CellHash> occupied{cells[0]};
    // Untried directions per depth, consumed from the back.
    std::vector<std::vector<Direction>> options;
    auto fresh_options = [&rng] {
      std::vector<Direction> dirs(kAllDirections.begin(), kAllDirections.end());
      for (std::size_t i = dirs.size(); i > 1; --i) std::swap(dirs[i - 1], dirs[rng() % i]);
      return dirs;
    };
    options.push_back(fresh_options());

    std::size_t steps = 0;
    while (cells.size() < n_boxes && steps++ < budget) {
      auto& untried = options.back();
      bool grew = false;
      while (!untried.empty()) {
        const Direction d = untried.back();
        untried.pop_back();
        const Cell next = cells.back().moved(d);
        if (!next.in_bounds() || !can_extend(occupied, cells.back(), next)) continue;
        cells.push_back(next);
        occupied.insert(next);
        options.push_back(fresh_options());
        grew = true;
        break;
      }
      if (!grew) {
        if (cells.size() == 1) break;
        occupied.erase(cells.back());
        cells.pop_back();
        options.pop_back();
      }
    }
    if (cells.size() == n_boxes) return Orthotube::validate(std::move(cells));
  }
  throw GenerationFailed("could not grow a tube of " + std::to_string(n_boxes) + " boxes");
}

void enumerate_orthotubes(std::size_t max_boxes, const std::function<void(const Orthotube&)>& visit) {
  if (max_boxes == 0) return;
  std::set<CanonicalForm> level{canonicalize(std::vector<Cell>{Cell{0, 0, 0}})};
  for (std::size_t length = 1;; ++length) {
    for (const CanonicalForm& f : level) visit(Orthotube::validate(f.cells));
    if (length == max_boxes) break;

    // Every tube of length L+1 loses an end cell to a tube of length L, so
    // growing both ends of each representative reaches every class.
    std::set<CanonicalForm> next;
    for (const CanonicalForm& f : level) {
      for (bool reversed : {false, true}) {
        std::vector<Cell> cells = f.cells;
        if (reversed) std::reverse(cells.begin(), cells.end());
        std::unordered_set<Cell, CellHash> occupied(cells.begin(), cells.end());
        for (Direction d : kAllDirections) {
          const Cell c = cells.back().moved(d);
          if (!can_extend(occupied, cells.back(), c)) continue;
          cells.push_back(c);
          next.insert(canonicalize(cells));
          cells.pop_back();
        }
      }
    }
    level = std::move(next);
  }
}

std::vector<Orthotube> enumerate_orthotubes(std::size_t max_boxes) {
  std::vector<Orthotube> out;
  enumerate_orthotubes(max_boxes, [&out](const Orthotube& t) { out.push_back(t); });
  return out;
}

std::vector<std::size_t> count_orthotubes(std::size_t max_boxes) {
  std::vector<std::size_t> counts(max_boxes, 0);
  enumerate_orthotubes(max_boxes, [&counts](const Orthotube& t) { ++counts[t.size() - 1]; });
  return counts;
}

}  // namespace tubefold
