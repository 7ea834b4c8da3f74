#pragma once

namespace kedge {

inline constexpr const char* kToolVersion = "0.1.0";

}
