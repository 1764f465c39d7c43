#ifndef DCC_NETSIM_CLOCK_MODEL_H_
#define DCC_NETSIM_CLOCK_MODEL_H_

#include <cmath>
#include <cstdint>

#include "dcc/common/units.h"

namespace dcc::netsim {

// Receiver clock relative to the sender clock. A reading of true time t is
// t + offset + skew_ppm * 1e-6 * t.
struct ClockModel {
  Duration offset{0};
  double skew_ppm = 0.0;

  Timestamp Read(Timestamp true_time) const {
    if (skew_ppm == 0.0) return true_time + offset;
    const double drift =
        skew_ppm * 1e-6 * static_cast<double>(true_time.count());
    return true_time + offset +
           Duration(static_cast<std::int64_t>(std::llround(drift)));
  }
};

}  // namespace dcc::netsim

#endif  // DCC_NETSIM_CLOCK_MODEL_H_
