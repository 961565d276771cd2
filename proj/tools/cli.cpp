#include "cli.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tubefold/generator.hpp"
#include "tubefold/oracle.hpp"
#include "tubefold/render.hpp"
#include "tubefold/unfolder.hpp"
#include "tubefold/verifier.hpp"

namespace tubefold::cli {

namespace {

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Orthotube read_tube(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open " + path);
  try {
    return Orthotube::validate(parse_cells(in));
  } catch (const std::invalid_argument& e) {
    throw BadInput(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw BadInput("cannot write " + path);
  out << content;
}

std::string format_cursor(const Cursor& c) {
  const Cell& p = c.face.cell;
  return std::to_string(p.x) + ',' + std::to_string(p.y) + ',' + std::to_string(p.z) + ',' +
         std::string(to_string(c.face.normal)) + ',' + std::string(to_string(c.heading));
}

Cursor parse_cursor(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 5) throw BadInput("--start expects x,y,z,normal,heading");
  Cell c;
  try {
    std::size_t used = 0;
    c.x = std::stoi(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("x");
    c.y = std::stoi(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("y");
    c.z = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("z");
  } catch (const std::exception&) {
    throw BadInput("--start: bad coordinate in '" + text + "'");
  }
  const auto normal = parse_direction(parts[3]);
  const auto heading = parse_direction(parts[4]);
  if (!normal || !heading) throw BadInput("--start: directions look like +X or -Z");
  if (!perpendicular(*normal, *heading)) throw BadInput("--start: heading must be tangent to the face");
  return {{c, *normal}, *heading};
}

ChainCode read_code(const std::string& text) {
  try {
    return parse_code(text);
  } catch (const BadSymbol& e) {
    throw BadInput(e.what());
  }
}

bool want_color(std::ostream& out) {
  if (std::getenv("NO_COLOR") != nullptr) return false;
  return &out == &std::cout && isatty(STDOUT_FILENO);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dual-Hamiltonian grid unfolding of orthotubes", "tubefold"};
  app.require_subcommand(1);

  std::string tube_path, svg_path, format = "text", code_text, start_text, out_path;
  bool with_checkpoints = false, count_only = false, all = false, show_dual = false, symmetry = false;
  std::size_t boxes = 0, max_boxes = 0;
  std::uint64_t seed = 0;
  std::size_t max_nodes = std::numeric_limits<std::size_t>::max();
  std::size_t max_results = std::numeric_limits<std::size_t>::max();
  int scale = 32, margin = 16;

  auto* unfold_cmd = app.add_subcommand("unfold", "Unfold a tube and print its chain code");
  unfold_cmd->add_option("tube", tube_path, "Tube file")->required();
  unfold_cmd->add_option("--svg", svg_path, "Write the net as SVG");
  unfold_cmd->add_flag("--checkpoints", with_checkpoints, "List checkpoints");
  unfold_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "Check a (start, code) pair against a tube");
  verify_cmd->add_option("tube", tube_path, "Tube file")->required();
  verify_cmd->add_option("--code", code_text)->required();
  verify_cmd->add_option("--start", start_text, "x,y,z,normal,heading")->required();
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* gen_cmd = app.add_subcommand("gen", "Random tube");
  gen_cmd->add_option("--boxes", boxes)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", seed)->required();
  gen_cmd->add_option("--out", out_path);

  auto* enum_cmd = app.add_subcommand("enum", "Canonical tubes up to a length");
  enum_cmd->add_option("--max-boxes", max_boxes)->required()->check(CLI::PositiveNumber);
  enum_cmd->add_flag("--count-only", count_only);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force unfoldings of a small tube");
  oracle_cmd->add_option("tube", tube_path, "Tube file")->required();
  oracle_cmd->add_flag("--all", all, "List every unfolding instead of the first");
  oracle_cmd->add_option("--max-nodes", max_nodes);
  oracle_cmd->add_option("--max-results", max_results);
  oracle_cmd->add_flag("--symmetry", symmetry, "One start cursor per symmetry orbit");

  auto* render_cmd = app.add_subcommand("render", "Net of a bare chain code");
  render_cmd->add_option("--code", code_text)->required();
  render_cmd->add_option("--svg", svg_path);
  render_cmd->add_option("--scale", scale)->check(CLI::PositiveNumber);
  render_cmd->add_option("--margin", margin)->check(CLI::NonNegativeNumber);
  render_cmd->add_flag("--show-dual", show_dual);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (unfold_cmd->parsed()) {
      const Orthotube tube = read_tube(tube_path);
      const UnfoldResult r = unfold(tube);
      if (r.attempt != 0) err << "note: default choices did not verify; used fallback attempt " << r.attempt << '\n';
      if (format == "json") {
        nlohmann::ordered_json j;
        j["code"] = r.code.str();
        j["start"] = format_cursor(r.start);
        j["length"] = r.code.size();
        j["terminal"] = std::string(to_string(r.terminal));
        if (with_checkpoints) {
          j["checkpoints"] = nlohmann::ordered_json::array();
          for (const auto& c : r.checkpoints) {
            j["checkpoints"].push_back({{"box", c.box}, {"offset", c.offset}, {"rule", c.rule}});
          }
        }
        out << j.dump(2) << '\n';
      } else {
        out << "code " << r.code.str() << '\n';
        out << "start " << format_cursor(r.start) << '\n';
        if (with_checkpoints) {
          for (const auto& c : r.checkpoints) {
            out << "checkpoint " << c.box << ' ' << c.offset << ' ' << c.rule << '\n';
          }
        }
      }
      if (!svg_path.empty()) write_file(svg_path, render_svg(r.code));
      return kOk;
    }

    if (verify_cmd->parsed()) {
      const Orthotube tube = read_tube(tube_path);
      const Report report = verify(tube, parse_cursor(start_text), read_code(code_text));
      out << (format == "json" ? format_report_json(report) : format_report_text(report, want_color(out)));
      return report.overall ? kOk : kVerifyFailed;
    }

    if (gen_cmd->parsed()) {
      const Orthotube tube = random_orthotube(boxes, seed);
      const std::string text = "# boxes " + std::to_string(boxes) + " seed " + std::to_string(seed) + '\n' +
                               format_cells(tube.cells());
      if (out_path.empty()) out << text;
      else write_file(out_path, text);
      return kOk;
    }

    if (enum_cmd->parsed()) {
      if (count_only) {
        const auto counts = count_orthotubes(max_boxes);
        for (std::size_t i = 0; i < counts.size(); ++i) out << (i ? " " : "") << i + 1 << ':' << counts[i];
        out << '\n';
      } else {
        bool first = true;
        enumerate_orthotubes(max_boxes, [&](const Orthotube& t) {
          if (!first) out << "---\n";
          first = false;
          out << format_cells(t.cells());
        });
      }
      return kOk;
    }

    if (oracle_cmd->parsed()) {
      const Orthotube tube = read_tube(tube_path);
      OracleLimits limits;
      limits.max_nodes = max_nodes;
      limits.max_results = all ? max_results : 1;
      limits.use_symmetry = symmetry;
      const OracleResult r = enumerate_unfoldings(tube, limits);
      if (!all) out << "exists " << (r.codes.empty() ? (r.truncated ? "unknown" : "no") : "yes") << '\n';
      for (const auto& [start, code] : r.codes) {
        out << "start " << format_cursor(start) << " code " << code.str() << '\n';
      }
      if (all) {
        out << "codes " << r.codes.size() << " explored " << r.explored << " truncated "
            << (r.truncated ? "yes" : "no") << '\n';
      }
      return r.codes.empty() ? kVerifyFailed : kOk;
    }

    if (render_cmd->parsed()) {
      RenderOptions options;
      options.scale = scale;
      options.margin = margin;
      options.show_dual = show_dual;
      const std::string svg = render_svg(read_code(code_text), options);
      if (svg_path.empty()) out << svg;
      else write_file(svg_path, svg);
      return kOk;
    }
  } catch (const BadInput& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kBadInput;
}

}  // namespace tubefold::cli
