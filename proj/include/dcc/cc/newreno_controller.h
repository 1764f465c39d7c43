#ifndef DCC_CC_NEWRENO_CONTROLLER_H_
#define DCC_CC_NEWRENO_CONTROLLER_H_

#include "dcc/cc/congestion_controller.h"

namespace dcc::cc {

// Slow start, one packet per RTT of additive increase, halving on loss and
// a one-packet window after a timeout.
class NewRenoController : public CongestionController {
 public:
  explicit NewRenoController(const ControllerConfig& config)
      : CongestionController(config) {}

  std::string_view name() const override { return "newreno"; }

  void OnAck(const AckEvent& ack) override;
  void OnLossDetected(const LossEvent& loss) override;
  void OnRto(Timestamp now) override;
};

}  // namespace dcc::cc

#endif  // DCC_CC_NEWRENO_CONTROLLER_H_
