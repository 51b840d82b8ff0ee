#pragma once

#include <string>

namespace mink4r::io {

/// Shortest representation that parses back to the same double, '.' as the
/// decimal separator, independent of the global locale. -0 prints as "0".
std::string format_number(double v);

}  // namespace mink4r::io
