#include <set>

#include "doctest.h"
#include "tubefold/generator.hpp"
#include "tubefold/oracle.hpp"
#include "tubefold/unfolder.hpp"
#include "tubefold/verifier.hpp"

using namespace tubefold;

TEST_SUITE("oracle") {
  TEST_CASE("single box") {
    const Orthotube one = Orthotube::validate({{0, 0, 0}});
    const OracleResult r = enumerate_unfoldings(one);
    CHECK_FALSE(r.truncated);
    REQUIRE_FALSE(r.codes.empty());
    const Cursor start = initial_state(one).start;
    bool has_lssr = false;
    for (const auto& [c, code] : r.codes) has_lssr |= (c == start && code.str() == "LSSR");
    CHECK(has_lssr);
    CHECK(exists_unfolding(one));
  }

  TEST_CASE("small tubes have unfoldings, all of them verifier-clean") {
    for (const Orthotube& t : enumerate_orthotubes(3)) {
      CHECK(exists_unfolding(t));
      const OracleResult r = enumerate_unfoldings(t);
      CHECK_FALSE(r.codes.empty());
      std::set<std::pair<Cursor, ChainCode>> distinct(r.codes.begin(), r.codes.end());
      CHECK(distinct.size() == r.codes.size());
      for (const auto& [c, code] : r.codes) {
        CHECK(verify(t, c, code).overall);
        CHECK(oracle_accepts(t, c, code));
      }
    }
  }

  TEST_CASE("four-box tubes and agreement with the unfolder") {
    for (const Orthotube& t : enumerate_orthotubes(4)) {
      OracleLimits lim;
      lim.max_results = 1;
      const OracleResult r = enumerate_unfoldings(t, lim);
      CHECK(r.codes.size() == 1);
      CHECK(verify(t, r.codes[0].first, r.codes[0].second).overall);
      const UnfoldResult u = unfold(t);
      CHECK(oracle_accepts(t, u.start, u.code));
    }
  }

  TEST_CASE("acceptance predicate rejects bad codes") {
    const Orthotube one = Orthotube::validate({{0, 0, 0}});
    const Cursor start = initial_state(one).start;
    CHECK_FALSE(oracle_accepts(one, start, parse_code("LLLL")));
    CHECK_FALSE(oracle_accepts(one, start, parse_code("LSS")));
    CHECK_FALSE(oracle_accepts(one, start, parse_code("LSSRS")));
    CHECK_FALSE(oracle_accepts(one, {{{3, 0, 0}, Direction::PosX}, Direction::PosY}, parse_code("LSSR")));
  }

  TEST_CASE("limits") {
    const Orthotube t = Orthotube::validate({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}});
    OracleLimits lim;
    lim.max_nodes = 10;
    const OracleResult r = enumerate_unfoldings(t, lim);
    CHECK(r.truncated);
    CHECK(r.explored <= 10);

    lim = {};
    lim.max_results = 2;
    const OracleResult two = enumerate_unfoldings(t, lim);
    CHECK(two.codes.size() == 2);
    CHECK(two.truncated);
  }

  TEST_CASE("symmetry quotient keeps only accepted codes and loses no tube") {
    for (const Orthotube& t : enumerate_orthotubes(3)) {
      OracleLimits lim;
      lim.use_symmetry = true;
      const OracleResult q = enumerate_unfoldings(t, lim);
      const OracleResult full = enumerate_unfoldings(t);
      CHECK_FALSE(q.codes.empty());
      CHECK(q.codes.size() <= full.codes.size());
      CHECK(q.explored <= full.explored);
      for (const auto& [c, code] : q.codes) CHECK(oracle_accepts(t, c, code));
    }
  }

  TEST_CASE("invalid tubes never reach the search") {
    CHECK_THROWS_AS(Orthotube::validate({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}), TubeError);
  }

  TEST_CASE("L/R/S reaches every neighbour, so dropping U-turns loses nothing") {
    for (const Orthotube& t : enumerate_orthotubes(4)) {
      const Surface s(t);
      for (const FaceId& f : s.faces()) {
        for (Direction h : kAllDirections) {
          if (!perpendicular(h, f.normal)) continue;
          std::set<FaceId> reach;
          for (Turn sym : {Turn::L, Turn::R, Turn::S}) reach.insert(step(s, {f, h}, sym).face);
          // The remaining neighbour lies behind: the face we came from.
          const FaceId behind = step(s, {f, negate(h)}, Turn::S).face;
          CHECK(reach.size() == 3);
          CHECK(reach.count(behind) == 0);
        }
      }
    }
  }
}
