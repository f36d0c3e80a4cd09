#pragma once

#include <string>

#include "chowcalc/char_classes.hpp"

namespace chowcalc {

// Reads and validates a scenario document. Errors carry the file name and
// the offending field, e.g. "quadric.json: $.degrees[0]: ...".
Scenario parse_scenario_file(const std::string& path);

// Same, from an in-memory JSON document; `origin` names the source in error
// messages.
Scenario parse_scenario_text(const std::string& text, const std::string& origin);

}  // namespace chowcalc
