#pragma once

#include "balcone/scenario_io.hpp"

#include <string>

namespace balcone {

// Two-panel cone diagram: the Kaehler cone on the left, the balanced cone on
// the right with the image of the balanced map shaded inside it. Reads the
// "kahler_cone", "image_closure", "balanced_cone" and "labels" fields of a
// gap or demo report; throws DocumentError when any is missing. Output is
// byte-identical for identical input.
std::string render_svg(const ordered_json &report);

// Writes text to path; throws std::runtime_error when the file cannot be
// written.
void write_file(const std::string &path, const std::string &text);

} // namespace balcone
