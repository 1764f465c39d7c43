#include "dcc/netsim/bottleneck_queue.h"

#include <stdexcept>

namespace dcc::netsim {

Admission BottleneckQueue::Enqueue(const transport::Packet& packet,
                                   Timestamp now) {
  if (packet.size_bytes == 0) {
    throw std::invalid_argument("zero-sized packet offered to bottleneck");
  }
  if (occupancy_bytes_ + packet.size_bytes > buffer_bytes_) {
    ++dropped_packets_;
    dropped_bytes_ += packet.size_bytes;
    return Admission::kDropped;
  }
  occupancy_bytes_ += packet.size_bytes;
  entries_.push_back(Entry{packet, now});
  return Admission::kAccepted;
}

std::optional<BottleneckQueue::Entry> BottleneckQueue::Dequeue() {
  if (entries_.empty()) return std::nullopt;
  Entry e = std::move(entries_.front());
  entries_.pop_front();
  occupancy_bytes_ -= e.packet.size_bytes;
  return e;
}

}  // namespace dcc::netsim
