#pragma once

namespace nframe {

inline constexpr const char* kToolkitVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

// Name and revision of the random stream used by generators and reports.
// mt19937_64 raw words, doubles built as (word >> 11) * 2^-53 mapped to [-1,1).
inline constexpr const char* kPrngName = "mt19937_64/pm1-v1";

}  // namespace nframe
