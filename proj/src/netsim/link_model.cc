#include "dcc/netsim/link_model.h"

#include <stdexcept>
#include <string>

namespace dcc::netsim {

void LinkModel::Validate(ByteCount max_packet_bytes) const {
  if (capacity_bps == 0) {
    throw std::invalid_argument("link capacity must be positive");
  }
  if (prop_fwd.count() < 0 || prop_bwd.count() < 0) {
    throw std::invalid_argument("propagation delays must be non-negative");
  }
  if (buffer_bytes < max_packet_bytes) {
    throw std::invalid_argument(
        "bottleneck buffer (" + std::to_string(buffer_bytes) +
        " B) smaller than one packet (" + std::to_string(max_packet_bytes) +
        " B)");
  }
}

Duration LinkModel::SerializationTime(ByteCount bytes) const {
  const std::uint64_t bit_micros = 8'000'000ULL * bytes;
  return Duration(static_cast<std::int64_t>(
      (bit_micros + capacity_bps - 1) / capacity_bps));
}

ByteCount LinkModel::BdpBytes() const {
  const auto rtt = static_cast<std::uint64_t>((prop_fwd + prop_bwd).count());
  return capacity_bps * rtt / 8'000'000ULL;
}

}  // namespace dcc::netsim
