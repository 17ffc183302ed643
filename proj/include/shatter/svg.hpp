#pragma once

#include <array>
#include <optional>
#include <string>

#include "shatter/hypergraph.hpp"

namespace shatter {

struct RenderSpec {
  Family family;
  std::vector<Witness> witnesses;
  std::optional<std::array<Rat, 4>> viewport;  // x0, y0, x1, y1; auto-fit when absent
  Rat stroke_width{1, 10};
};

/// Deterministic SVG 1.1: bodies as filled polygons / strokes / dots, witness
/// halfplanes as boundary lines with a shaded side, ids as labels. The y-axis
/// is flipped to match the usual mathematical orientation. Identical input
/// yields byte-identical output.
std::string render_svg(const RenderSpec& spec);

}  // namespace shatter
