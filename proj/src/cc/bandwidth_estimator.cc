#include "dcc/cc/bandwidth_estimator.h"

#include <algorithm>

namespace dcc::cc {

double BandwidthEstimator::AddSample(double sample_bps) {
  bwe_bps_ = has_estimate_ ? FilterStep(bwe_bps_, sample_bps, gains_)
                           : sample_bps;
  has_estimate_ = true;
  ++samples_;
  return bwe_bps_;
}

bool BandwidthEstimator::OnAck(ByteCount acked_bytes, Timestamp now,
                               Duration smoothed_rtt) {
  if (!interval_start_) {
    // The first ACK opens the first interval; its bytes belong to the
    // time before it and are not counted.
    interval_start_ = now;
    return false;
  }
  acked_in_interval_ += acked_bytes;
  const Duration elapsed = now - *interval_start_;
  const Duration interval = std::max(smoothed_rtt, min_interval_);
  if (elapsed < interval) return false;
  if (elapsed.count() <= 0) return false;
  AddSample(RateBps(acked_in_interval_, elapsed));
  interval_start_ = now;
  acked_in_interval_ = 0;
  return true;
}

}  // namespace dcc::cc
