#include "mink4r/io/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace mink4r::io {

std::string format_number(double v) {
    if (v == 0.0) return "0";
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return {buf.data(), res.ptr};
}

}  // namespace mink4r::io
