#ifndef DCC_RUNNER_SCENARIO_IO_H_
#define DCC_RUNNER_SCENARIO_IO_H_

#include <string>
#include <string_view>

#include "dcc/runner/scenario.h"

namespace dcc::runner {

// Scenario files are flat `key = value` lines. Values are numbers, booleans
// (true/false), double-quoted strings, or bracketed lists of those. `#`
// starts a comment outside a string. Unknown keys are errors.
//
// Keys: name, description, capacity_mbps, rtt_min_ms, buffer_bdp,
// buffer_bytes, cca (list or single string), owqd_th_frac, owqd_th_us,
// flows, flow_start_offsets_ms (list), transfer_bytes, duration_s, seed,
// repetitions, packet_bytes, pacing, pacing_interval_us, ack_ratio,
// start_jitter_us, warmup_s, receiver_offset_us, receiver_skew_ppm,
// max_sim_s.
//
// Setting duration_s clears the default transfer_bytes and vice versa.
// Throws ConfigError with the offending line number.
Scenario ParseScenario(std::string_view text, Scenario base = {});
Scenario LoadScenarioFile(const std::string& path);

// Canonical form: every key in the order above, optional keys only when set.
std::string EmitScenario(const Scenario& s);

}  // namespace dcc::runner

#endif  // DCC_RUNNER_SCENARIO_IO_H_
