#pragma once

#include <cmath>
#include <cstdint>

#include "json.hpp"

namespace bitga::cli {

// Integral values serialize as JSON integers so the output reads "4", not "4.0".
inline nlohmann::json json_number(double v) {
  if (std::nearbyint(v) == v && std::abs(v) < 9e15) {
    return static_cast<std::int64_t>(v);
  }
  return v;
}

}  // namespace bitga::cli
