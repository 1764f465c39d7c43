#ifndef DCC_RUNNER_SCENARIO_H_
#define DCC_RUNNER_SCENARIO_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcc/common/units.h"
#include "dcc/netsim/link_model.h"

namespace dcc::runner {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A declarative experiment: one bottleneck, one or more flows, and how many
// seeded repetitions to average.
struct Scenario {
  std::string name;
  std::string description;

  double capacity_mbps = 10.0;
  // Round-trip propagation delay, split evenly between the two directions.
  double rtt_min_ms = 50.0;
  // Exactly one of the two buffer settings is used; buffer_bytes wins.
  double buffer_bdp = 2.0;
  std::optional<ByteCount> buffer_bytes;

  // A single entry applies to every flow; otherwise one entry per flow.
  std::vector<std::string> cca = {"dc"};
  // Delay threshold for "dc" flows: a fraction of the buffer drain time
  // 8*B/C, or an absolute value. Rejected when no flow runs "dc".
  std::optional<double> owqd_th_frac;
  std::optional<std::int64_t> owqd_th_us;

  std::uint32_t flows = 1;
  // Empty means all flows start at 0; otherwise one strictly increasing
  // entry per flow.
  std::vector<double> flow_start_offsets_ms;

  // Fixed-size transfer per flow, or a fixed duration measured from the
  // last flow start. Exactly one must be set.
  std::optional<ByteCount> transfer_bytes = 100'000'000;
  std::optional<double> duration_s;

  std::uint64_t seed = 1;
  std::uint32_t repetitions = 3;

  ByteCount packet_bytes = 1252;
  bool pacing = true;
  std::int64_t pacing_interval_us = 200;
  std::uint32_t ack_ratio = 1;
  // Start of each flow is shifted by a seeded uniform draw in
  // [0, start_jitter_us].
  std::int64_t start_jitter_us = 1000;
  // Excluded from the front of the measurement window.
  double warmup_s = 0.0;
  std::int64_t receiver_offset_us = 0;
  double receiver_skew_ppm = 0.0;
  // Hard stop for transfer-based runs.
  double max_sim_s = 1200.0;

  friend bool operator==(const Scenario&, const Scenario&) = default;

  // Throws ConfigError describing the first problem found.
  void Validate() const;

  std::uint64_t capacity_bps() const;
  ByteCount BdpBytes() const;
  ByteCount BufferBytes() const;
  netsim::LinkModel Link() const;
  const std::string& CcaFor(std::uint32_t flow) const;
  Duration StartOffset(std::uint32_t flow) const;
  bool HasDelayControlFlow() const;
  // Threshold handed to "dc" flows; nullopt when none is configured.
  std::optional<Duration> OwqdThreshold() const;
};

}  // namespace dcc::runner

#endif  // DCC_RUNNER_SCENARIO_H_
