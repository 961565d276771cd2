#include "tubefold/verifier.hpp"

#include "json.hpp"
#include <unordered_map>

namespace tubefold {

const Check* Report::find(std::string_view name) const {
  for (const Check& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Report verify(const Orthotube& tube, const Cursor& start, const ChainCode& code) {
  return verify(build_surface(tube), start, code);
}

Report verify(const Surface& surface, const Cursor& start, const ChainCode& code) {
  Report r;
  const std::size_t n = surface.tube().n();
  const std::size_t want_len = 4 * n + 4;

  r.checks.push_back({"LENGTH", code.size() == want_len,
                      "length " + std::to_string(code.size()) + ", expected " + std::to_string(want_len)});

  std::vector<FaceId> faces;
  const bool walkable = surface.contains(start);
  if (walkable) faces = walk(surface, start, code);
  r.checks.push_back({"WALK", walkable, walkable ? std::to_string(faces.size()) + " faces"
                                                 : "start cursor is not on the surface"});

  {
    Check ham{"HAMILTONIAN", false, ""};
    if (!walkable) {
      ham.detail = "walk undefined";
    } else {
      std::unordered_map<FaceId, std::size_t, FaceHash> first_visit;
      std::string problem;
      for (std::size_t i = 0; i < faces.size() && problem.empty(); ++i) {
        auto [it, fresh] = first_visit.emplace(faces[i], i);
        if (!fresh) {
          problem = "face " + std::to_string(i) + " revisits face " + std::to_string(it->second);
        }
      }
      if (problem.empty() && first_visit.size() != surface.size()) {
        problem = "visited " + std::to_string(first_visit.size()) + " of " + std::to_string(surface.size()) +
                  " faces";
      }
      ham.pass = problem.empty();
      ham.detail = ham.pass ? std::to_string(surface.size()) + " faces each visited once" : problem;
    }
    r.checks.push_back(ham);
  }

  const bool overlap = has_overlap(code);
  r.checks.push_back({"NONOVERLAP", !overlap, overlap ? "dual path revisits a point" : "dual points distinct"});

  const bool monotone = prefix_monotone(code);
  r.checks.push_back({"PREFIX_QTURN", monotone,
                      monotone ? "prefix qturn within [-1,1]" : "some prefix has |qturn| > 1", false});

  r.overall = true;
  for (const Check& c : r.checks) {
    if (c.required) r.overall = r.overall && c.pass;
  }
  return r;
}

std::string format_report_text(const Report& report, bool color) {
  auto verdict = [color](bool pass) -> std::string {
    if (!color) return pass ? "PASS" : "FAIL";
    return pass ? "\x1b[32mPASS\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
  };
  std::string out;
  for (const Check& c : report.checks) {
    out += "CHECK " + c.name + ' ' + verdict(c.pass) + ' ' + c.detail + '\n';
  }
  out += "OVERALL " + verdict(report.overall) + '\n';
  return out;
}

std::string format_report_json(const Report& report) {
  nlohmann::ordered_json j;
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : report.checks) {
    j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"required", c.required}});
  }
  j["overall"] = report.overall;
  return j.dump(2) + '\n';
}

}  // namespace tubefold
