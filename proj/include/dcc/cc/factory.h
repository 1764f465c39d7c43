#ifndef DCC_CC_FACTORY_H_
#define DCC_CC_FACTORY_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcc/cc/bandwidth_estimator.h"
#include "dcc/cc/congestion_controller.h"
#include "dcc/cc/cubic_controller.h"

namespace dcc::cc {

struct ControllerOptions {
  ControllerConfig base;
  // Required for "dc"; rejected for every other controller.
  std::optional<Duration> owqd_threshold;
  FilterGains gains;
  CubicParams cubic;
};

// Names accepted by MakeController: dc, westwood+, newreno, cubic.
const std::vector<std::string>& ControllerNames();
bool IsKnownController(std::string_view name);
bool IsWestwoodFamily(std::string_view name);

// Throws std::invalid_argument on an unknown name or a threshold given to a
// controller without delay control.
std::unique_ptr<CongestionController> MakeController(
    std::string_view name, const ControllerOptions& options);

}  // namespace dcc::cc

#endif  // DCC_CC_FACTORY_H_
