#pragma once

#include "qpt/drawing.h"

#include <string>
#include <vector>

namespace qpt {

/// Static SVG picture of a drawing: edges as polylines, vertices as labelled
/// dots, proper crossings as small squares. Edges listed in `highlight` are
/// stroked in a distinct colour. Output depends only on the inputs.
std::string render_svg(const Drawing& d, const std::vector<std::string>& highlight = {});

}  // namespace qpt
