#pragma once

namespace geolie {

inline constexpr const char* kToolName = "geolie";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace geolie
