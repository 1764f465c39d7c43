#ifndef DCC_NETSIM_LINK_MODEL_H_
#define DCC_NETSIM_LINK_MODEL_H_

#include <cstdint>

#include "dcc/common/units.h"

namespace dcc::netsim {

// The single bottleneck: a fixed-rate server in front of a tail-drop byte
// buffer, plus one-way propagation delays in each direction. The reverse
// path is a pure delay line (ACKs are never serialized or queued).
struct LinkModel {
  std::uint64_t capacity_bps = 10'000'000;
  Duration prop_fwd{25'000};
  Duration prop_bwd{25'000};
  ByteCount buffer_bytes = 125'000;

  // Throws std::invalid_argument unless capacity > 0, delays >= 0 and the
  // buffer holds at least one packet of `max_packet_bytes`.
  void Validate(ByteCount max_packet_bytes) const;

  // Exact serialization time 8*s/C in (fractional) microseconds.
  double SerializationMicros(ByteCount bytes) const {
    return 8e6 * static_cast<double>(bytes) /
           static_cast<double>(capacity_bps);
  }
  // Serialization time rounded up to the microsecond grid.
  Duration SerializationTime(ByteCount bytes) const;

  // Minimum RTT seen by a data packet of `packet_bytes`:
  //   prop_fwd + prop_bwd + one forward serialization (rounded up).
  // ACKs add nothing because the reverse path has no serializer.
  Duration RttMin(ByteCount packet_bytes) const {
    return prop_fwd + prop_bwd + SerializationTime(packet_bytes);
  }

  // Time needed to drain a full buffer, 8*B/C.
  Duration BufferDrainTime() const { return SerializationTime(buffer_bytes); }

  // Bandwidth-delay product over the round-trip propagation delay.
  ByteCount BdpBytes() const;
};

}  // namespace dcc::netsim

#endif  // DCC_NETSIM_LINK_MODEL_H_
