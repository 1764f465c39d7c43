#ifndef DCC_CC_OWQD_ESTIMATOR_H_
#define DCC_CC_OWQD_ESTIMATOR_H_

#include <cstdint>
#include <optional>

#include "dcc/common/units.h"

namespace dcc::cc {

// One-way delay variation between consecutive packets:
//   (tr_i - tr_prev) - (ts_i - ts_prev).
// A constant receiver clock offset cancels. Returns nullopt unless both
// timestamp series strictly increase.
std::optional<Duration> OwdVariation(Timestamp ts_i, Timestamp tr_i,
                                     Timestamp ts_prev, Timestamp tr_prev);

// Running sum of delay variations, floored at zero.
constexpr Duration AccumulateOwqd(Duration owqd, Duration owdv) {
  const Duration next = owqd + owdv;
  return next.count() < 0 ? Duration(0) : next;
}

// Forward-path queueing delay estimate built from per-packet
// (send, receive) timestamps. The first packet sets the baseline, so the
// estimate is relative to the queue seen by that packet; the zero floor
// re-anchors it every time the queue drains below the baseline.
class OwqdEstimator {
 public:
  explicit OwqdEstimator(Duration threshold = kInfiniteDuration)
      : threshold_(threshold) {}

  // Returns false (and leaves state untouched) for a non-monotone sample.
  bool Update(Timestamp sent_at, Timestamp received_at);

  Duration owqd() const { return owqd_; }
  Duration threshold() const { return threshold_; }
  void set_threshold(Duration threshold) { threshold_ = threshold; }
  bool AboveThreshold() const { return owqd_ > threshold_; }

  std::uint64_t samples() const { return samples_; }
  std::uint64_t rejected_samples() const { return rejected_; }
  // Number of updates where the zero floor was applied.
  std::uint64_t clamp_count() const { return clamps_; }
  bool clamped_last_update() const { return clamped_last_; }

 private:
  Duration threshold_;
  Duration owqd_{0};
  std::optional<Timestamp> last_sent_;
  std::optional<Timestamp> last_received_;
  std::uint64_t samples_ = 0;
  std::uint64_t rejected_ = 0;
  std::uint64_t clamps_ = 0;
  bool clamped_last_ = false;
};

// Delay congestion event: the estimate exceeds the threshold and at least
// one smoothed RTT has passed since the last reaction of any kind.
bool CheckDelayEvent(const OwqdEstimator& estimator, Timestamp now,
                     std::optional<Timestamp> last_reaction,
                     Duration smoothed_rtt);

}  // namespace dcc::cc

#endif  // DCC_CC_OWQD_ESTIMATOR_H_
