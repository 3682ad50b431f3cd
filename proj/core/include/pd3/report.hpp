#pragma once

#include <string>

#include "pd3/checks.hpp"

namespace pd3 {

// One line per check plus a summary line.
std::string render_text(const Report& r);

// Follows data/report.schema.json.  With `deterministic` every wall time is
// left out so identical inputs give identical bytes.
std::string render_json(const Report& r, bool deterministic);

}  // namespace pd3
