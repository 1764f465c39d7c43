#ifndef DCC_COMMON_UNITS_H_
#define DCC_COMMON_UNITS_H_

#include <chrono>
#include <cstdint>
#include <limits>

namespace dcc {

// All virtual time in the simulator is integer microseconds. Timestamps are
// offsets from the start of the run, so both points and spans share a type.
using Duration = std::chrono::microseconds;
using Timestamp = std::chrono::microseconds;

using ByteCount = std::uint64_t;
using PacketNumber = std::uint64_t;
using FlowId = std::uint32_t;

inline constexpr Duration kInfiniteDuration = Duration::max();

constexpr Duration Micros(std::int64_t us) { return Duration(us); }
constexpr Duration Millis(std::int64_t ms) { return Duration(ms * 1000); }
constexpr Duration Seconds(std::int64_t s) { return Duration(s * 1000000); }

constexpr double ToSeconds(Duration d) {
  return static_cast<double>(d.count()) / 1e6;
}
constexpr double ToMillis(Duration d) {
  return static_cast<double>(d.count()) / 1e3;
}

// bits per second carried by `bytes` over `span`; 0 for an empty span.
constexpr double RateBps(ByteCount bytes, Duration span) {
  if (span.count() <= 0) return 0.0;
  return 8.0 * static_cast<double>(bytes) * 1e6 /
         static_cast<double>(span.count());
}

// Bytes in flight needed to sustain `rate_bps` over `span`.
constexpr double BytesForRate(double rate_bps, Duration span) {
  return rate_bps * static_cast<double>(span.count()) / 8e6;
}

}  // namespace dcc

#endif  // DCC_COMMON_UNITS_H_
