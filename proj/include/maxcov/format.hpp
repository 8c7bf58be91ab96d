#pragma once

#include <charconv>
#include <string>

namespace maxcov {

// Shortest decimal form that round-trips to the same double. Used for every
// serialized number so that output files are byte-stable across platforms.
inline std::string double_to_string(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} // namespace maxcov
