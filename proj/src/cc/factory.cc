#include "dcc/cc/factory.h"

#include <stdexcept>

#include "dcc/cc/newreno_controller.h"
#include "dcc/cc/westwood_controller.h"

namespace dcc::cc {

const std::vector<std::string>& ControllerNames() {
  static const std::vector<std::string> kNames = {"dc", "westwood+",
                                                  "newreno", "cubic"};
  return kNames;
}

bool IsKnownController(std::string_view name) {
  for (const auto& n : ControllerNames()) {
    if (n == name) return true;
  }
  return false;
}

bool IsWestwoodFamily(std::string_view name) {
  return name == "dc" || name == "westwood+";
}

std::unique_ptr<CongestionController> MakeController(
    std::string_view name, const ControllerOptions& options) {
  if (!IsKnownController(name)) {
    throw std::invalid_argument("unknown congestion controller '" +
                                std::string(name) + "'");
  }
  if (name != "dc" && options.owqd_threshold) {
    throw std::invalid_argument("a delay threshold only applies to 'dc', not '" +
                                std::string(name) + "'");
  }
  if (name == "dc" || name == "westwood+") {
    WestwoodConfig config;
    config.base = options.base;
    config.gains = options.gains;
    if (name == "dc") {
      if (!options.owqd_threshold) {
        throw std::invalid_argument("'dc' requires a delay threshold");
      }
      config.delay = {true, *options.owqd_threshold};
    } else {
      config.delay = {false, kInfiniteDuration};
    }
    return std::make_unique<WestwoodController>(config);
  }
  if (name == "newreno") {
    return std::make_unique<NewRenoController>(options.base);
  }
  return std::make_unique<CubicController>(options.base, options.cubic);
}

}  // namespace dcc::cc
