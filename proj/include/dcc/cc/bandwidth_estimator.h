#ifndef DCC_CC_BANDWIDTH_ESTIMATOR_H_
#define DCC_CC_BANDWIDTH_ESTIMATOR_H_

#include <optional>

#include "dcc/common/units.h"

namespace dcc::cc {

struct FilterGains {
  double previous = 0.2;
  double sample = 0.8;
};

// One step of the first-order low-pass filter.
constexpr double FilterStep(double previous_bps, double sample_bps,
                            FilterGains gains) {
  return gains.previous * previous_bps + gains.sample * sample_bps;
}

// Westwood+ bandwidth estimator: acknowledged bytes are counted over
// intervals of max(srtt, min_interval); each closed interval yields one rate
// sample that is fed through the filter. The first sample seeds the filter.
class BandwidthEstimator {
 public:
  explicit BandwidthEstimator(FilterGains gains = {},
                              Duration min_interval = Millis(50))
      : gains_(gains), min_interval_(min_interval) {}

  // Returns true when this call closed an interval and updated the estimate.
  bool OnAck(ByteCount acked_bytes, Timestamp now, Duration smoothed_rtt);

  // Feeds a rate sample straight into the filter.
  double AddSample(double sample_bps);

  double bwe_bps() const { return bwe_bps_; }
  bool has_estimate() const { return has_estimate_; }
  std::uint64_t samples() const { return samples_; }
  FilterGains gains() const { return gains_; }

 private:
  FilterGains gains_;
  Duration min_interval_;
  double bwe_bps_ = 0.0;
  bool has_estimate_ = false;
  std::uint64_t samples_ = 0;
  std::optional<Timestamp> interval_start_;
  ByteCount acked_in_interval_ = 0;
};

}  // namespace dcc::cc

#endif  // DCC_CC_BANDWIDTH_ESTIMATOR_H_
