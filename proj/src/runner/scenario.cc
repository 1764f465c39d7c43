#include "dcc/runner/scenario.h"

#include <cmath>

#include "dcc/cc/factory.h"

namespace dcc::runner {

std::uint64_t Scenario::capacity_bps() const {
  return static_cast<std::uint64_t>(std::llround(capacity_mbps * 1e6));
}

ByteCount Scenario::BdpBytes() const {
  return static_cast<ByteCount>(
      std::llround(capacity_mbps * 1e6 * rtt_min_ms * 1e-3 / 8.0));
}

ByteCount Scenario::BufferBytes() const {
  if (buffer_bytes) return *buffer_bytes;
  return static_cast<ByteCount>(
      std::llround(buffer_bdp * static_cast<double>(BdpBytes())));
}

netsim::LinkModel Scenario::Link() const {
  netsim::LinkModel link;
  link.capacity_bps = capacity_bps();
  const auto rtt_us = static_cast<std::int64_t>(std::llround(rtt_min_ms * 1e3));
  link.prop_fwd = Duration(rtt_us / 2);
  link.prop_bwd = Duration(rtt_us - rtt_us / 2);
  link.buffer_bytes = BufferBytes();
  return link;
}

const std::string& Scenario::CcaFor(std::uint32_t flow) const {
  return cca.size() == 1 ? cca.front() : cca.at(flow);
}

Duration Scenario::StartOffset(std::uint32_t flow) const {
  if (flow_start_offsets_ms.empty()) return Duration(0);
  return Duration(static_cast<std::int64_t>(
      std::llround(flow_start_offsets_ms.at(flow) * 1e3)));
}

bool Scenario::HasDelayControlFlow() const {
  for (const auto& c : cca) {
    if (c == "dc") return true;
  }
  return false;
}

std::optional<Duration> Scenario::OwqdThreshold() const {
  if (owqd_th_us) return Duration(*owqd_th_us);
  if (owqd_th_frac) {
    const double drain_us = 8e6 * static_cast<double>(BufferBytes()) /
                            static_cast<double>(capacity_bps());
    return Duration(static_cast<std::int64_t>(
        std::llround(*owqd_th_frac * drain_us)));
  }
  return std::nullopt;
}

void Scenario::Validate() const {
  auto fail = [this](const std::string& what) {
    throw ConfigError((name.empty() ? std::string("scenario") : name) + ": " +
                      what);
  };
  if (!(capacity_mbps > 0.0)) fail("capacity_mbps must be positive");
  if (!(rtt_min_ms >= 0.0)) fail("rtt_min_ms must be non-negative");
  if (!buffer_bytes && !(buffer_bdp > 0.0)) fail("buffer_bdp must be positive");
  if (packet_bytes == 0) fail("packet_bytes must be positive");
  if (BufferBytes() < packet_bytes) fail("buffer smaller than one packet");
  if (flows == 0) fail("flows must be at least 1");
  if (cca.empty()) fail("cca must name at least one controller");
  if (cca.size() != 1 && cca.size() != flows) {
    fail("cca needs one entry or one per flow");
  }
  for (const auto& c : cca) {
    if (!cc::IsKnownController(c)) fail("unknown cca '" + c + "'");
  }
  if (owqd_th_frac && owqd_th_us) {
    fail("set owqd_th_frac or owqd_th_us, not both");
  }
  const bool has_threshold = owqd_th_frac || owqd_th_us;
  if (has_threshold && !HasDelayControlFlow()) {
    fail("a delay threshold requires a 'dc' flow");
  }
  if (!has_threshold && HasDelayControlFlow()) {
    fail("'dc' flows need owqd_th_frac or owqd_th_us");
  }
  if (owqd_th_frac && !(*owqd_th_frac > 0.0)) {
    fail("owqd_th_frac must be positive");
  }
  if (owqd_th_us && *owqd_th_us <= 0) fail("owqd_th_us must be positive");
  if (!flow_start_offsets_ms.empty()) {
    if (flow_start_offsets_ms.size() != flows) {
      fail("flow_start_offsets_ms needs one entry per flow");
    }
    for (std::size_t i = 0; i < flow_start_offsets_ms.size(); ++i) {
      if (flow_start_offsets_ms[i] < 0.0) fail("negative flow start offset");
      if (i > 0 && !(flow_start_offsets_ms[i] > flow_start_offsets_ms[i - 1])) {
        fail("flow start offsets must be strictly increasing");
      }
    }
  } else if (flows > 1) {
    fail("multi-flow scenarios need strictly increasing flow_start_offsets_ms");
  }
  if (transfer_bytes.has_value() == duration_s.has_value()) {
    fail("set exactly one of transfer_bytes and duration_s");
  }
  if (transfer_bytes && *transfer_bytes == 0) fail("transfer_bytes is zero");
  if (duration_s && !(*duration_s > 0.0)) fail("duration_s must be positive");
  if (repetitions == 0) fail("repetitions must be at least 1");
  if (pacing_interval_us < 0) fail("pacing_interval_us is negative");
  if (ack_ratio == 0) fail("ack_ratio must be at least 1");
  if (start_jitter_us < 0) fail("start_jitter_us is negative");
  if (!(warmup_s >= 0.0)) fail("warmup_s is negative");
  if (!(max_sim_s > 0.0)) fail("max_sim_s must be positive");
}

}  // namespace dcc::runner
