#pragma once

#include <string>

#include "tubefold/chaincode.hpp"

namespace tubefold {

struct RenderOptions {
  int scale = 32;  ///< pixels per unit square
  bool show_dual = false;
  int margin = 16;
};

/// SVG 1.1 drawing of the net of `code`: one <rect> per square (the first
/// filled distinctly, coincident squares flagged), attachments as thick
/// segments, optionally the dual polyline. Output depends only on the
/// arguments.
std::string render_svg(const ChainCode& code, const RenderOptions& options = {});

}  // namespace tubefold
