#ifndef DCC_TRANSPORT_RTT_ESTIMATOR_H_
#define DCC_TRANSPORT_RTT_ESTIMATOR_H_

#include <cstdint>

#include "dcc/common/units.h"

namespace dcc::transport {

// Smoothed RTT (gain 1/8), RTT variation (gain 1/4) and the retransmission
// timeout derived from them, with exponential backoff.
class RttEstimator {
 public:
  explicit RttEstimator(Duration initial_rto = Millis(333),
                        Duration min_rto = Millis(200),
                        Duration max_rto = Seconds(60))
      : initial_rto_(initial_rto), min_rto_(min_rto), max_rto_(max_rto) {}

  void OnSample(Duration rtt);

  bool has_sample() const { return has_sample_; }
  Duration smoothed_rtt() const { return srtt_; }
  Duration rtt_var() const { return rttvar_; }
  Duration latest_rtt() const { return latest_; }
  Duration min_rtt() const { return min_rtt_; }

  // Base timeout times the current backoff factor, at most max_rto.
  Duration rto() const;
  void Backoff() { ++backoff_exponent_; }
  void ResetBackoff() { backoff_exponent_ = 0; }
  int backoff_exponent() const { return backoff_exponent_; }

 private:
  Duration BaseRto() const;

  Duration initial_rto_;
  Duration min_rto_;
  Duration max_rto_;
  bool has_sample_ = false;
  Duration srtt_{0};
  Duration rttvar_{0};
  Duration latest_{0};
  Duration min_rtt_{0};
  int backoff_exponent_ = 0;
};

}  // namespace dcc::transport

#endif  // DCC_TRANSPORT_RTT_ESTIMATOR_H_
