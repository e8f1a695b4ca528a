#include "tempsub/format.hpp"

#include <charconv>

namespace tempsub {

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_ext(ExtReal v) {
    if (v.is_plus_infinity()) return "inf";
    if (v.is_minus_infinity()) return "-inf";
    return format_double(v.value());
}

}  // namespace tempsub
