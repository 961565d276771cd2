#include <sstream>

#include "doctest.h"
#include "tubefold/generator.hpp"
#include "tubefold/lattice.hpp"

using namespace tubefold;

namespace {

Orthotube tube_of(std::vector<Cell> cells) { return Orthotube::validate(std::move(cells)); }

TubeError::Kind failure_kind(std::vector<Cell> cells, std::size_t& i, std::size_t& j) {
  try {
    Orthotube::validate(std::move(cells));
  } catch (const TubeError& e) {
    i = e.first();
    j = e.second();
    return e.kind();
  }
  FAIL("expected TubeError");
  return TubeError::Kind::Empty;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("directions negate and cross like right-handed axes") {
    for (Direction d : kAllDirections) {
      CHECK(negate(negate(d)) == d);
      CHECK(negate(d) != d);
      CHECK(axis_of(negate(d)) == axis_of(d));
    }
    CHECK(cross(Direction::PosX, Direction::PosY) == Direction::PosZ);
    CHECK(cross(Direction::PosY, Direction::PosZ) == Direction::PosX);
    CHECK(cross(Direction::PosZ, Direction::PosX) == Direction::PosY);
    CHECK(cross(Direction::PosY, Direction::PosX) == Direction::NegZ);
    CHECK(cross(Direction::NegX, Direction::PosY) == Direction::NegZ);
  }

  TEST_CASE("left_of examples") {
    CHECK(left_of(Direction::PosZ, Direction::PosX) == Direction::PosY);
    CHECK(left_of(Direction::PosZ, Direction::PosY) == Direction::NegX);
    CHECK(left_of(Direction::PosX, Direction::PosZ) == Direction::NegY);
    CHECK_THROWS_AS(left_of(Direction::PosZ, Direction::NegZ), NotTangent);
    CHECK_THROWS_AS(left_of(Direction::PosX, Direction::PosX), NotTangent);
  }

  TEST_CASE("left_of has order four and stays tangent") {
    for (Direction n : kAllDirections) {
      for (Direction d : kAllDirections) {
        if (!perpendicular(n, d)) continue;
        const Direction l = left_of(n, d);
        CHECK(perpendicular(l, n));
        CHECK(perpendicular(l, d));
        CHECK(left_of(n, left_of(n, left_of(n, l))) == d);
        CHECK(right_of(n, l) == d);
      }
    }
  }

  TEST_CASE("validate_orthotube examples") {
    CHECK(tube_of({{0, 0, 0}}).size() == 1);
    CHECK(tube_of({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}}).n() == 2);

    std::size_t i = 0, j = 0;
    CHECK(failure_kind({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}, i, j) == TubeError::Kind::IllegalContact);
    CHECK(i == 0);
    CHECK(j == 3);
  }

  TEST_CASE("validate_orthotube error paths") {
    std::size_t i = 0, j = 0;
    CHECK_THROWS_AS(Orthotube::validate({}), TubeError);
    CHECK(failure_kind({{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}, i, j) == TubeError::Kind::DuplicateCell);
    CHECK(i == 0);
    CHECK(j == 2);
    CHECK(failure_kind({{0, 0, 0}, {1, 1, 0}}, i, j) == TubeError::Kind::NotAdjacent);
    CHECK(i == 0);
    CHECK(j == 1);
    CHECK(failure_kind({{0, 0, 0}, {2, 0, 0}}, i, j) == TubeError::Kind::NotAdjacent);
    CHECK(failure_kind({{kCoordinateLimit + 1, 0, 0}}, i, j) == TubeError::Kind::OutOfBounds);
    CHECK_NOTHROW(Orthotube::validate({{kCoordinateLimit, -kCoordinateLimit, 0}}));
  }

  TEST_CASE("a list is accepted iff its reverse is") {
    // Valid tubes from the enumerator plus invalid ones made by closing rings.
    std::vector<std::vector<Cell>> inputs;
    for (const Orthotube& t : enumerate_orthotubes(6)) inputs.emplace_back(t.cells().begin(), t.cells().end());
    inputs.push_back({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});
    inputs.push_back({{0, 0, 0}, {0, 0, 1}, {1, 0, 1}, {1, 0, 0}});
    inputs.push_back({{0, 0, 0}, {0, 1, 0}, {0, 1, 1}, {0, 0, 1}, {0, -1, 1}});
    for (auto cells : inputs) {
      auto ok = [](std::vector<Cell> c) {
        try {
          Orthotube::validate(std::move(c));
          return true;
        } catch (const TubeError&) {
          return false;
        }
      };
      const bool forward = ok(cells);
      std::reverse(cells.begin(), cells.end());
      CHECK(forward == ok(cells));
    }
  }

  TEST_CASE("hole_face examples") {
    CHECK(hole_face(tube_of({{0, 0, 0}, {1, 0, 0}}), 0) == FaceId{{0, 0, 0}, Direction::PosX});
    CHECK(hole_face(tube_of({{0, 0, 0}, {0, 0, 1}}), 0) == FaceId{{0, 0, 0}, Direction::PosZ});
    const Orthotube l = tube_of({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}});
    CHECK(hole_face(l, 1) == FaceId{{1, 0, 0}, Direction::PosY});
    CHECK_THROWS_AS(hole_face(l, 2), std::out_of_range);
  }

  TEST_CASE("hole seen from either box is the same square") {
    for (const Orthotube& t : enumerate_orthotubes(6)) {
      for (std::size_t i = 0; i < t.n(); ++i) {
        const FaceId from_next{t[i + 1], negate(t.axis(i))};
        CHECK(hole_face(t, i).same_square(from_next));
        CHECK(hole_face(t, i).other_side() == from_next);
      }
    }
  }

  TEST_CASE("edge ids are canonical") {
    const FaceId top{{0, 0, 0}, Direction::PosZ};
    CHECK(edge_of(top, Direction::PosX) == EdgeId{{1, 0, 1}, Axis::Y});
    CHECK(edge_of(top, Direction::NegY) == EdgeId{{0, 0, 1}, Axis::X});
    // The same segment named from the neighbouring face.
    CHECK(edge_of(FaceId{{0, 0, 0}, Direction::PosX}, Direction::PosZ) == EdgeId{{1, 0, 1}, Axis::Y});
    CHECK_THROWS_AS(edge_of(top, Direction::NegZ), NotTangent);
  }

  TEST_CASE("cell keys are injective near the coordinate limit") {
    const std::int32_t L = kCoordinateLimit;
    std::vector<Cell> cells{{L + 1, L + 1, L + 1}, {-L - 1, -L - 1, -L - 1}, {L + 1, -L - 1, 0}, {0, 0, 0},
                            {-L - 1, L + 1, 0},    {0, L + 1, -L - 1},     {1, 0, 0},           {0, 1, 0}};
    for (std::size_t a = 0; a < cells.size(); ++a) {
      for (std::size_t b = a + 1; b < cells.size(); ++b) CHECK(cells[a].key() != cells[b].key());
    }
  }

  TEST_CASE("tube text format") {
    const auto cells = parse_cells("# comment\n\n0 0 0\n  1 0 0\n+1 -1 0\n");
    REQUIRE(cells.size() == 3);
    CHECK(cells[2] == Cell{1, -1, 0});
    CHECK(format_cells(cells) == "0 0 0\n1 0 0\n1 -1 0\n");
    CHECK_THROWS_AS(parse_cells("0 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cells("0 0 0 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cells("0 x 0\n"), std::invalid_argument);
    CHECK(parse_direction("-z") == Direction::NegZ);
    CHECK_FALSE(parse_direction("Z").has_value());
  }
}
