#pragma once

#include <iosfwd>
#include <string>

#include "entlab/state.hpp"

namespace entlab {

// Round-trip-exact decimal formatting ("%.17g", C locale).
std::string format_double(double v);

// Plain-text state format: header line "n=<int>", then one amplitude per
// line as "re im" in full double precision.
void write_state(std::ostream& out, const PureState& state);
void write_state_file(const std::string& path, const PureState& state);
PureState read_state(std::istream& in);
PureState read_state_file(const std::string& path);

}  // namespace entlab
