#pragma once

#include <ostream>

#include "json.hpp"

namespace liouville::app {

using Report = nlohmann::ordered_json;

// Aligned key/value lines; arrays of objects become tables.
void render_text(const Report& report, std::ostream& out);

} // namespace liouville::app
