#include "dcc/netsim/simulator.h"

#include <stdexcept>
#include <string>

namespace dcc::netsim {

std::string_view EventKindName(EventKind kind) {
  switch (kind) {
    case EventKind::kPacketArrivalAtQueue:
      return "packet-arrival-at-queue";
    case EventKind::kDequeueComplete:
      return "dequeue-complete";
    case EventKind::kPacketArrivalAtReceiver:
      return "packet-arrival-at-receiver";
    case EventKind::kAckArrivalAtSender:
      return "ack-arrival-at-sender";
    case EventKind::kPacerTick:
      return "pacer-tick";
    case EventKind::kRtoExpiry:
      return "rto-expiry";
    case EventKind::kAckTimer:
      return "ack-timer";
    case EventKind::kFlowStart:
      return "flow-start";
    case EventKind::kSimEnd:
      return "sim-end";
  }
  return "unknown";
}

void Simulator::Schedule(Timestamp at, EventKind kind, Action action) {
  if (at < now_) {
    throw std::logic_error("event scheduled in the past: at=" +
                           std::to_string(at.count()) +
                           "us now=" + std::to_string(now_.count()) + "us");
  }
  queue_.push(Entry{at, next_seq_++, kind, std::move(action)});
}

void Simulator::Mix(std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    trace_hash_ ^= (v >> (8 * i)) & 0xffu;
    trace_hash_ *= 1099511628211ULL;
  }
}

SimSummary Simulator::Run(Timestamp until) {
  stopped_ = false;
  while (!stopped_ && !queue_.empty() && queue_.top().at <= until) {
    // priority_queue::top is const; the entry is moved out before pop.
    Entry entry = std::move(const_cast<Entry&>(queue_.top()));
    queue_.pop();
    now_ = entry.at;
    Mix(static_cast<std::uint64_t>(entry.at.count()));
    Mix(entry.seq);
    Mix(static_cast<std::uint64_t>(entry.kind));
    ++events_processed_;
    if (entry.action) entry.action();
    if (post_hook_) post_hook_(now_, entry.kind);
  }
  return SimSummary{events_processed_, now_, trace_hash_};
}

}  // namespace dcc::netsim
