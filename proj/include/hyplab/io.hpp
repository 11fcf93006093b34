#pragma once

#include <cstdio>
#include <string>

namespace hyplab {

// All floating-point output uses 17 significant digits so that files
// round-trip bit-exactly.
inline std::string format17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace hyplab
