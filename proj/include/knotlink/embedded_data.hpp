#pragma once

#include <string_view>

namespace knotlink {

/// Data files compiled into the library.
std::string_view embedded_kb();
/// Expectation data for tables 1..8, or an empty view.
std::string_view embedded_table(int id);

}  // namespace knotlink
