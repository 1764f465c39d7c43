#include "dcc/cc/owqd_estimator.h"

namespace dcc::cc {

std::optional<Duration> OwdVariation(Timestamp ts_i, Timestamp tr_i,
                                     Timestamp ts_prev, Timestamp tr_prev) {
  if (ts_i <= ts_prev || tr_i <= tr_prev) return std::nullopt;
  return (tr_i - tr_prev) - (ts_i - ts_prev);
}

bool OwqdEstimator::Update(Timestamp sent_at, Timestamp received_at) {
  if (!last_sent_) {
    last_sent_ = sent_at;
    last_received_ = received_at;
    ++samples_;
    clamped_last_ = false;
    return true;
  }
  const auto owdv =
      OwdVariation(sent_at, received_at, *last_sent_, *last_received_);
  if (!owdv) {
    ++rejected_;
    return false;
  }
  clamped_last_ = (owqd_ + *owdv).count() < 0;
  if (clamped_last_) ++clamps_;
  owqd_ = AccumulateOwqd(owqd_, *owdv);
  last_sent_ = sent_at;
  last_received_ = received_at;
  ++samples_;
  return true;
}

bool CheckDelayEvent(const OwqdEstimator& estimator, Timestamp now,
                     std::optional<Timestamp> last_reaction,
                     Duration smoothed_rtt) {
  if (!estimator.AboveThreshold()) return false;
  if (!last_reaction) return true;
  return now - *last_reaction >= smoothed_rtt;
}

}  // namespace dcc::cc
