#pragma once

#include <string>

#include "liouville/torus/grid.hpp"

namespace liouville::app {

// Binary dump: ASCII header line "n M\n" followed by n*M*M native 64-bit
// doubles, component-major, each component row-major.
void write_field_dump(const std::string& path, const torus::FieldSet& u);
torus::FieldSet read_field_dump(const std::string& path);

// component,i,j,x,y,u
void write_field_csv(const std::string& path, const torus::FieldSet& u);

} // namespace liouville::app
