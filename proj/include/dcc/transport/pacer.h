#ifndef DCC_TRANSPORT_PACER_H_
#define DCC_TRANSPORT_PACER_H_

#include "dcc/common/units.h"

namespace dcc::transport {

// Releases at most one datagram per interval.
class Pacer {
 public:
  explicit Pacer(Duration interval = Micros(200), bool enabled = true)
      : interval_(interval), enabled_(enabled && interval.count() > 0) {}

  bool CanRelease(Timestamp now) const {
    return !enabled_ || now >= next_release_;
  }
  void OnRelease(Timestamp now) {
    if (enabled_) next_release_ = now + interval_;
  }

  bool enabled() const { return enabled_; }
  Duration interval() const { return interval_; }
  Timestamp next_release() const { return next_release_; }

 private:
  Duration interval_;
  bool enabled_;
  Timestamp next_release_{0};
};

}  // namespace dcc::transport

#endif  // DCC_TRANSPORT_PACER_H_
