#ifndef DCC_NETSIM_SIMULATOR_H_
#define DCC_NETSIM_SIMULATOR_H_

#include <cstdint>
#include <functional>
#include <queue>
#include <string_view>
#include <vector>

#include "dcc/common/units.h"

namespace dcc::netsim {

enum class EventKind : std::uint8_t {
  kPacketArrivalAtQueue,
  kDequeueComplete,
  kPacketArrivalAtReceiver,
  kAckArrivalAtSender,
  kPacerTick,
  kRtoExpiry,
  kAckTimer,
  kFlowStart,
  kSimEnd,
};

std::string_view EventKindName(EventKind kind);

struct SimSummary {
  std::uint64_t events_processed = 0;
  Timestamp end_time{0};
  std::uint64_t trace_hash = 0;
};

// Single-threaded discrete-event loop. Events fire in timestamp order; ties
// fire in the order they were scheduled.
class Simulator {
 public:
  using Action = std::function<void()>;
  using EventHook = std::function<void(Timestamp, EventKind)>;

  Simulator() = default;
  Simulator(const Simulator&) = delete;
  Simulator& operator=(const Simulator&) = delete;

  Timestamp now() const { return now_; }

  // Throws std::logic_error when `at` lies in the past.
  void Schedule(Timestamp at, EventKind kind, Action action);
  void ScheduleIn(Duration delay, EventKind kind, Action action) {
    Schedule(now_ + delay, kind, std::move(action));
  }

  // Processes every event with fire time <= until. The clock is left at
  // the last fired event.
  SimSummary Run(Timestamp until);
  void Stop() { stopped_ = true; }

  bool empty() const { return queue_.empty(); }
  std::size_t pending() const { return queue_.size(); }
  std::uint64_t events_processed() const { return events_processed_; }
  // FNV-1a over (time, sequence, kind) of every fired event.
  std::uint64_t trace_hash() const { return trace_hash_; }

  // Invoked after each event's action completes.
  void set_post_event_hook(EventHook hook) { post_hook_ = std::move(hook); }

 private:
  struct Entry {
    Timestamp at;
    std::uint64_t seq;
    EventKind kind;
    Action action;
  };
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.at != b.at) return a.at > b.at;
      return a.seq > b.seq;
    }
  };

  void Mix(std::uint64_t v);

  std::priority_queue<Entry, std::vector<Entry>, Later> queue_;
  Timestamp now_{0};
  std::uint64_t next_seq_ = 0;
  std::uint64_t events_processed_ = 0;
  std::uint64_t trace_hash_ = 14695981039346656037ULL;
  bool stopped_ = false;
  EventHook post_hook_;
};

}  // namespace dcc::netsim

#endif  // DCC_NETSIM_SIMULATOR_H_
