#ifndef DCC_CC_CUBIC_CONTROLLER_H_
#define DCC_CC_CUBIC_CONTROLLER_H_

#include <optional>

#include "dcc/cc/congestion_controller.h"

namespace dcc::cc {

struct CubicParams {
  double c = 0.4;     // segments / s^3
  double beta = 0.7;  // multiplicative decrease
  bool tcp_friendly = true;
  // Release bandwidth faster when a loss arrives below the previous w_max.
  bool fast_convergence = true;
};

// Window state is kept in segments (MSS units), as in the CUBIC formulas.
struct CubicState {
  double w_max = 0.0;
  double k_seconds = 0.0;
  std::optional<Timestamp> epoch_start;
  // Reno-tracking estimate for the TCP-friendly region.
  double tcp_friendly_w = 0.0;
};

// K = cbrt(w_max * (1 - beta) / C), the time for W(t) to climb back to w_max.
double CubicK(double w_max_segments, const CubicParams& params);

// W(t) = C * (t - K)^3 + w_max, in segments.
double CubicW(double t_seconds, const CubicState& state,
              const CubicParams& params);

// max(W(t), tcp_friendly_w) in bytes (the friendly term only when enabled).
ByteCount CubicWindow(double t_since_epoch_seconds, const CubicState& state,
                      const CubicParams& params, ByteCount mss);

// CUBIC without HyStart.
class CubicController : public CongestionController {
 public:
  explicit CubicController(const ControllerConfig& config,
                           CubicParams params = {});

  std::string_view name() const override { return "cubic"; }

  void OnAck(const AckEvent& ack) override;
  void OnLossDetected(const LossEvent& loss) override;
  void OnRto(Timestamp now) override;

  const CubicState& state() const { return state_; }
  const CubicParams& params() const { return params_; }

 private:
  void StartEpoch(Timestamp now);
  void SetWmax();
  ByteCount ReducedWindow() const;
  double Segments(ByteCount bytes) const {
    return static_cast<double>(bytes) / static_cast<double>(config_.mss);
  }

  CubicParams params_;
  CubicState state_;
};

}  // namespace dcc::cc

#endif  // DCC_CC_CUBIC_CONTROLLER_H_
