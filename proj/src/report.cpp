#include "ecc/report.hpp"

#include <cstdio>
#include <cstdlib>

namespace ecc {

std::string format_real(double x) {
    if (x == 0.0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

double round_real(double x) {
    return std::strtod(format_real(x).c_str(), nullptr);
}

}  // namespace ecc
