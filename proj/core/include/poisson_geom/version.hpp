#pragma once

namespace poisson_geom {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace poisson_geom
