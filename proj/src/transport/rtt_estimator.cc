#include "dcc/transport/rtt_estimator.h"

#include <algorithm>

namespace dcc::transport {

void RttEstimator::OnSample(Duration rtt) {
  latest_ = rtt;
  if (!has_sample_) {
    has_sample_ = true;
    srtt_ = rtt;
    rttvar_ = rtt / 2;
    min_rtt_ = rtt;
    return;
  }
  min_rtt_ = std::min(min_rtt_, rtt);
  const Duration err = srtt_ > rtt ? srtt_ - rtt : rtt - srtt_;
  rttvar_ = (3 * rttvar_ + err) / 4;
  srtt_ = (7 * srtt_ + rtt) / 8;
}

Duration RttEstimator::BaseRto() const {
  if (!has_sample_) return initial_rto_;
  return std::max(srtt_ + 4 * rttvar_, min_rto_);
}

Duration RttEstimator::rto() const {
  Duration rto = BaseRto();
  for (int i = 0; i < backoff_exponent_ && rto < max_rto_; ++i) rto *= 2;
  return std::min(rto, max_rto_);
}

}  // namespace dcc::transport
