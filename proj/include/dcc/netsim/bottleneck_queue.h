#ifndef DCC_NETSIM_BOTTLENECK_QUEUE_H_
#define DCC_NETSIM_BOTTLENECK_QUEUE_H_

#include <deque>
#include <optional>

#include "dcc/common/units.h"
#include "dcc/transport/packet.h"

namespace dcc::netsim {

enum class Admission { kAccepted, kDropped };

// FIFO tail-drop buffer with byte-granular admission. Occupancy counts only
// waiting packets; the packet being serialized has already left the buffer.
class BottleneckQueue {
 public:
  struct Entry {
    transport::Packet packet;
    Timestamp arrived_at{0};
  };

  explicit BottleneckQueue(ByteCount buffer_bytes)
      : buffer_bytes_(buffer_bytes) {}

  // Admits iff occupancy + size <= buffer; otherwise leaves state unchanged.
  Admission Enqueue(const transport::Packet& packet, Timestamp now);
  std::optional<Entry> Dequeue();

  ByteCount occupancy_bytes() const { return occupancy_bytes_; }
  ByteCount buffer_bytes() const { return buffer_bytes_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::deque<Entry>& entries() const { return entries_; }

  std::uint64_t dropped_packets() const { return dropped_packets_; }
  ByteCount dropped_bytes() const { return dropped_bytes_; }

 private:
  ByteCount buffer_bytes_;
  ByteCount occupancy_bytes_ = 0;
  std::deque<Entry> entries_;
  std::uint64_t dropped_packets_ = 0;
  ByteCount dropped_bytes_ = 0;
};

}  // namespace dcc::netsim

#endif  // DCC_NETSIM_BOTTLENECK_QUEUE_H_
