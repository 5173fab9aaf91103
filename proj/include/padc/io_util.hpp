#pragma once

#include <string>

namespace padc {

// Shortest decimal string that round-trips the exact double; locale-free.
std::string fmt_double(double v);

bool is_power_of_two(std::size_t n);

}  // namespace padc
