#pragma once

namespace carlitz {

// Embedded in cache entries and series payloads; bump on any change that can
// alter numerical output.
inline constexpr const char* kVersion = "0.1.0";

}  // namespace carlitz
