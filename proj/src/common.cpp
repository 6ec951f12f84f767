#include "labelprop/common.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace labelprop {

std::string format_weight(double w) {
    if (std::nearbyint(w) == w && std::fabs(w) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.0f", w);
        return buf;
    }
    // Shortest representation that round-trips: try increasing precision.
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, w);
        double back = 0.0;
        auto [ptr, ec] = std::from_chars(buf, buf + std::char_traits<char>::length(buf), back);
        (void)ptr;
        if (ec == std::errc() && back == w) break;
    }
    return buf;
}

}  // namespace labelprop
