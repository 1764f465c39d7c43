// Acceptance suite: one PASS/FAIL line per criterion, with the measured
// values underneath. Exit status is nonzero when any criterion fails.

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dcc/cc/bandwidth_estimator.h"
#include "dcc/cc/westwood_controller.h"
#include "dcc/metrics/flow_report.h"
#include "dcc/runner/presets.h"
#include "dcc/runner/runner.h"

namespace {

using dcc::ByteCount;
using dcc::Duration;
using dcc::Timestamp;
using dcc::runner::Preset;
using dcc::runner::RunOptions;
using dcc::runner::RunResult;
using dcc::runner::RunScenario;
using dcc::runner::Scenario;
using dcc::runner::ScenarioReport;

constexpr double kCapacityBps = 10e6;

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}

  void Expect(bool ok, const std::string& what) {
    pass_ = pass_ && ok;
    notes_.push_back(fmt::format("    [{}] {}", ok ? "ok" : "FAIL", what));
  }
  void Note(const std::string& what) {
    notes_.push_back(fmt::format("    {}", what));
  }
  bool Print() const {
    fmt::print("{} {}\n", pass_ ? "PASS" : "FAIL", title_);
    for (const auto& n : notes_) fmt::print("{}\n", n);
    std::fflush(stdout);
    return pass_;
  }

 private:
  std::string title_;
  bool pass_ = true;
  std::vector<std::string> notes_;
};

double Mbps(double bps) { return bps / 1e6; }
double Ms(double us) { return us / 1e3; }

ScenarioReport RunPreset(const std::string& name,
                         const RunOptions& options = {}) {
  return RunScenario(Preset(name), options);
}

// ---------------------------------------------------------------- 1
bool CheckTable1() {
  Criterion c("[1] Table 1 reproduction: 4xBDP, 10 Mbps, 50 ms, 100 MB");
  for (const char* v : {"dc10", "westwood", "cubic", "newreno"}) {
    const auto r = RunPreset(fmt::format("table1-{}", v));
    const double g = Mbps(r.goodput_bps.mean);
    c.Expect(g >= 8.7, fmt::format("{:<9} goodput {:.3f} Mbps >= 8.7", v, g));
    const double rtt = Ms(r.rtt_mean_us.mean);
    const double loss = r.loss_pct.mean;
    if (std::string_view(v) == "dc10") {
      c.Expect(rtt >= 51.0 && rtt <= 65.0,
               fmt::format("dc10 RTT_avg {:.2f} ms in [51, 65]", rtt));
      c.Expect(loss <= 0.1, fmt::format("dc10 loss {:.4f}% <= 0.1%", loss));
    }
    if (std::string_view(v) == "westwood") {
      c.Expect(rtt >= 140.0,
               fmt::format("westwood+ RTT_avg {:.2f} ms >= 140", rtt));
    }
  }
  return c.Print();
}

// ---------------------------------------------------------------- 2
bool CheckThresholdMonotonicity() {
  Criterion c(
      "[2] Threshold monotonicity at 4xBDP: RTT_avg and RTT CDF ordered by "
      "threshold");
  const char* names[] = {"table1-dc10", "table1-dc20", "table1-dc50",
                         "table1-dc80"};
  std::vector<double> means;
  std::vector<std::vector<Duration>> samples;
  for (const char* n : names) {
    const auto r = RunPreset(n);
    means.push_back(Ms(r.rtt_mean_us.mean));
    samples.push_back(r.PooledRttSamples());
  }
  for (std::size_t i = 0; i + 1 < means.size(); ++i) {
    c.Expect(means[i] < means[i + 1],
             fmt::format("RTT_avg {} {:.2f} ms < {} {:.2f} ms", names[i],
                         means[i], names[i + 1], means[i + 1]));
  }
  for (std::size_t lo = 0; lo < samples.size(); ++lo) {
    for (std::size_t hi = lo + 1; hi < samples.size(); ++hi) {
      bool ok = true;
      double worst_q = 0.0;
      for (int k = 10; k <= 100; ++k) {
        const double q = k / 100.0;
        const auto a = dcc::metrics::Quantile(samples[lo], q);
        const auto b = dcc::metrics::Quantile(samples[hi], q);
        if (a > b) {
          ok = false;
          worst_q = q;
          break;
        }
      }
      c.Expect(ok, ok ? fmt::format("CDF {} left of {} for q in [0.10, 1]",
                                    names[lo], names[hi])
                      : fmt::format("CDF {} crosses {} at q={:.2f}", names[lo],
                                    names[hi], worst_q));
    }
  }
  return c.Print();
}

// ---------------------------------------------------------------- 3
struct PhaseStats {
  Timestamp exit_at{0};
  Timestamp settled_at{0};
  ByteCount peak_after = 0;
  std::uint64_t sends_after = 0;
  std::uint64_t drops_after = 0;
  std::uint64_t cycles = 0;
  std::uint64_t cycles_with_drop = 0;
  double loss_after_pct = 0.0;
};

// Slow start ends at the flow's first congestion reaction. Packets sent
// before it may still sit in the buffer for up to one buffer drain time
// plus the forward delay, so queue peaks are read only after that.
PhaseStats SteadyState(const Scenario& s, const RunResult& run) {
  PhaseStats p;
  const auto& trace = run.traces.at(0);
  if (trace.reactions.empty()) return p;
  p.exit_at = trace.reactions.front().at;
  const auto link = s.Link();
  p.settled_at = p.exit_at + link.prop_fwd + link.BufferDrainTime() +
                 link.SerializationTime(s.packet_bytes);
  for (const auto& [t, bytes] : run.queue_trace) {
    if (t >= p.settled_at) p.peak_after = std::max(p.peak_after, bytes);
  }
  auto sent_at = [&trace](dcc::PacketNumber pn) {
    return trace.sends.at(pn).at;
  };
  for (const auto& snd : trace.sends) {
    if (snd.at > p.exit_at) ++p.sends_after;
  }
  for (const auto& d : trace.drops) {
    if (sent_at(d.packet_number) > p.exit_at) ++p.drops_after;
  }
  if (p.sends_after > 0) {
    p.loss_after_pct = 100.0 * static_cast<double>(p.drops_after) /
                       static_cast<double>(p.sends_after);
  }
  // A sawtooth cycle runs between consecutive reactions.
  for (std::size_t k = 1; k < trace.reactions.size(); ++k) {
    const Timestamp from = trace.reactions[k - 1].at;
    const Timestamp to = trace.reactions[k].at;
    ++p.cycles;
    const bool dropped = std::any_of(
        trace.drops.begin(), trace.drops.end(), [&](const auto& d) {
          const Timestamp at = sent_at(d.packet_number);
          return at >= from && at < to;
        });
    if (dropped) ++p.cycles_with_drop;
  }
  return p;
}

bool CheckFig5() {
  Criterion c(
      "[3] Fig. 5 behavior at 2xBDP: DC(80%) keeps the buffer below full "
      "after slow start; Westwood+ drops every cycle");
  RunOptions opts;
  opts.trace_queue = true;
  const Scenario dc = Preset("fig5-dc80");
  const Scenario ww = Preset("fig5-westwood");
  const auto rdc = RunScenario(dc, opts);
  const auto rww = RunScenario(ww, opts);
  double dc_loss = 0.0, ww_loss = 0.0;
  for (std::size_t i = 0; i < rdc.runs.size(); ++i) {
    const auto& run = rdc.runs[i];
    const PhaseStats p = SteadyState(dc, run);
    c.Expect(p.exit_at.count() > 0,
             fmt::format("dc80 seed {}: slow start exits at {:.3f} s",
                         run.seed, dcc::ToSeconds(p.exit_at)));
    c.Expect(p.peak_after < run.buffer_bytes,
             fmt::format("dc80 seed {}: peak occupancy after slow start {} B "
                         "< buffer {} B (whole-run peak {} B)",
                         run.seed, p.peak_after, run.buffer_bytes,
                         run.max_queue_bytes));
    c.Expect(p.drops_after == 0,
             fmt::format("dc80 seed {}: {} tail drops among packets sent after "
                         "slow start ({} in the whole run)",
                         run.seed, p.drops_after, run.traces[0].drops.size()));
    dc_loss += p.loss_after_pct / static_cast<double>(rdc.runs.size());
  }
  for (const auto& run : rww.runs) {
    const PhaseStats p = SteadyState(ww, run);
    c.Expect(p.cycles > 0 && p.cycles_with_drop == p.cycles,
             fmt::format("westwood+ seed {}: {} of {} sawtooth cycles contain "
                         "a tail drop; peak occupancy {} B of {} B",
                         run.seed, p.cycles_with_drop, p.cycles, p.peak_after,
                         run.buffer_bytes));
    ww_loss += p.loss_after_pct / static_cast<double>(rww.runs.size());
  }
  c.Expect(dc_loss * 5.0 <= ww_loss && ww_loss > 0.0,
           fmt::format("loss after slow start: dc80 {:.4f}% vs westwood+ "
                       "{:.4f}% (needs 5x)",
                       dc_loss, ww_loss));
  c.Note(fmt::format(
      "whole-run loss including slow-start overshoot: dc80 {:.4f}%, "
      "westwood+ {:.4f}%",
      rdc.loss_pct.mean, rww.loss_pct.mean));
  return c.Print();
}

// ---------------------------------------------------------------- 4
bool CheckTable5() {
  Criterion c(
      "[4] Table 5 multi-flow: 4 flows, 2xBDP; utilization, fairness, DC "
      "lowest RTT and loss");
  struct Row {
    std::string name;
    double agg, jfi, rtt, loss;
  };
  std::vector<Row> rows;
  for (const char* v : {"dc80", "westwood", "cubic", "newreno"}) {
    const auto r = RunPreset(fmt::format("table5-{}", v));
    rows.push_back({v, r.aggregate_goodput_bps.mean, r.jain_index.mean,
                    Ms(r.rtt_mean_us.mean), r.loss_pct.mean});
    std::string shares;
    for (const auto& f : r.flows) {
      shares += fmt::format(" {:.2f}", Mbps(f.goodput_bps.mean));
    }
    c.Note(fmt::format("{:<9} per-flow goodput (Mbps):{}", v, shares));
  }
  for (const auto& row : rows) {
    c.Expect(row.agg >= 0.9 * kCapacityBps,
             fmt::format("{:<9} aggregate goodput {:.3f} Mbps >= 9.0",
                         row.name, Mbps(row.agg)));
    c.Expect(row.jfi >= 0.99,
             fmt::format("{:<9} JFI {:.4f} >= 0.99", row.name, row.jfi));
  }
  const Row& dc = rows.front();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    c.Expect(dc.rtt < rows[i].rtt,
             fmt::format("dc80 RTT_avg {:.2f} ms < {} {:.2f} ms", dc.rtt,
                         rows[i].name, rows[i].rtt));
    c.Expect(dc.loss < rows[i].loss,
             fmt::format("dc80 loss {:.4f}% < {} {:.4f}%", dc.loss,
                         rows[i].name, rows[i].loss));
  }
  return c.Print();
}

// ---------------------------------------------------------------- 5
bool CheckUndersizedBuffer() {
  Criterion c(
      "[5] Undersized buffers (1x, 0.5xBDP): Cubic >= Westwood family; "
      "Westwood family <= 0.65 C at 0.5xBDP");
  for (const char* table : {"table3", "table4"}) {
    const double cubic =
        RunPreset(fmt::format("{}-cubic", table)).goodput_bps.mean;
    double family_max = 0.0;
    std::string which;
    for (const char* v : {"dc10", "dc20", "dc50", "dc80", "westwood"}) {
      const double g =
          RunPreset(fmt::format("{}-{}", table, v)).goodput_bps.mean;
      if (g > family_max) {
        family_max = g;
        which = v;
      }
    }
    const bool half = std::string_view(table) == "table4";
    c.Expect(cubic >= family_max,
             fmt::format("{} ({}xBDP): cubic {:.3f} Mbps >= best Westwood "
                         "family ({}) {:.3f} Mbps",
                         table, half ? 0.5 : 1.0, Mbps(cubic), which,
                         Mbps(family_max)));
    if (half) {
      c.Expect(family_max <= 0.65 * kCapacityBps,
               fmt::format("table4 (0.5xBDP): best Westwood family ({}) "
                           "{:.3f} Mbps <= 6.5",
                           which, Mbps(family_max)));
    }
  }
  return c.Print();
}

// ---------------------------------------------------------------- 6
Scenario SmallScenario(const std::string& preset, ByteCount bytes) {
  Scenario s = Preset(preset);
  s.repetitions = 1;
  if (s.transfer_bytes) s.transfer_bytes = bytes;
  return s;
}

bool SameTraces(const dcc::metrics::FlowTrace& a,
                const dcc::metrics::FlowTrace& b, std::string* why) {
  auto fail = [why](const char* what) {
    *why = what;
    return false;
  };
  if (a.sends.size() != b.sends.size()) return fail("send count");
  for (std::size_t i = 0; i < a.sends.size(); ++i) {
    const auto &x = a.sends[i], &y = b.sends[i];
    if (x.at != y.at || x.packet_number != y.packet_number ||
        x.bytes != y.bytes || x.retransmission != y.retransmission) {
      return fail("sends");
    }
  }
  if (a.deliveries.size() != b.deliveries.size()) return fail("deliveries");
  for (std::size_t i = 0; i < a.deliveries.size(); ++i) {
    const auto &x = a.deliveries[i], &y = b.deliveries[i];
    if (x.at != y.at || x.bytes != y.bytes || x.new_data != y.new_data ||
        x.latency != y.latency) {
      return fail("deliveries");
    }
  }
  if (a.drops.size() != b.drops.size()) return fail("drops");
  for (std::size_t i = 0; i < a.drops.size(); ++i) {
    if (a.drops[i].at != b.drops[i].at ||
        a.drops[i].packet_number != b.drops[i].packet_number) {
      return fail("drops");
    }
  }
  if (a.rtts.size() != b.rtts.size()) return fail("rtt count");
  for (std::size_t i = 0; i < a.rtts.size(); ++i) {
    if (a.rtts[i].at != b.rtts[i].at || a.rtts[i].rtt != b.rtts[i].rtt) {
      return fail("rtts");
    }
  }
  if (a.series.size() != b.series.size()) return fail("series count");
  for (std::size_t i = 0; i < a.series.size(); ++i) {
    const auto &x = a.series[i], &y = b.series[i];
    if (x.at != y.at || x.cwnd_bytes != y.cwnd_bytes || x.rtt != y.rtt ||
        x.owqd != y.owqd || x.queue_bytes != y.queue_bytes) {
      return fail("series");
    }
  }
  if (a.reactions.size() != b.reactions.size()) return fail("reaction count");
  for (std::size_t i = 0; i < a.reactions.size(); ++i) {
    if (a.reactions[i].at != b.reactions[i].at ||
        a.reactions[i].kind != b.reactions[i].kind ||
        a.reactions[i].cwnd_after != b.reactions[i].cwnd_after) {
      return fail("reactions");
    }
  }
  return true;
}

std::vector<Duration> OwqdTrajectory(const dcc::metrics::FlowTrace& t) {
  std::vector<Duration> out;
  out.reserve(t.series.size());
  for (const auto& row : t.series) out.push_back(row.owqd);
  return out;
}

void OffsetInvariance(Criterion& c) {
  const std::int64_t offsets[] = {7'000'000, -3'000'000, 123'456'789, 1};
  for (const char* preset : {"fig5-dc80", "table5-dc80"}) {
    Scenario base = SmallScenario(preset, 20'000'000);
    if (base.duration_s) base.duration_s = 15.0;
    const auto ref = dcc::runner::RunOnce(base, base.seed);
    bool ok = true;
    std::string detail;
    for (std::int64_t off : offsets) {
      Scenario s = base;
      s.receiver_offset_us = off;
      const auto run = dcc::runner::RunOnce(s, s.seed);
      for (std::size_t f = 0; f < run.traces.size(); ++f) {
        if (OwqdTrajectory(run.traces[f]) != OwqdTrajectory(ref.traces[f])) {
          ok = false;
          detail = fmt::format(" (differs at offset {} us, flow {})", off, f);
        }
        std::string why;
        if (!SameTraces(run.traces[f], ref.traces[f], &why)) {
          ok = false;
          detail = fmt::format(" (trace {} differs at offset {} us)", why, off);
        }
      }
    }
    c.Expect(ok, fmt::format("(a) {}: OWQD trajectory bit-identical under "
                             "receiver offsets {{+7 s, -3 s, +123.46 s, "
                             "+1 us}}{}",
                             preset, detail));
  }
}

void OracleTracking(Criterion& c) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> cap(2.0, 40.0), rtt(10.0, 120.0),
      buf(0.5, 4.0), frac(0.1, 0.95), unit(0.0, 1.0);
  std::uniform_int_distribution<std::int64_t> offset(-10'000'000, 10'000'000);
  std::uniform_int_distribution<ByteCount> bytes(500'000, 3'000'000),
      pkt(600, 1400);
  const std::int64_t pacing[] = {0, 100, 200, 500};
  int traces_ok = 0;
  std::uint64_t checked = 0, skipped = 0, rejected_skips = 0;
  double worst_ratio = 0.0;
  std::string first_failure;
  for (int i = 0; i < 100; ++i) {
    Scenario s;
    s.name = fmt::format("oracle-{}", i);
    s.capacity_mbps = cap(rng);
    s.rtt_min_ms = rtt(rng);
    s.buffer_bdp = buf(rng);
    s.packet_bytes = pkt(rng);
    s.transfer_bytes = bytes(rng);
    s.receiver_offset_us = offset(rng);
    s.pacing_interval_us = pacing[rng() % 4];
    if (unit(rng) < 0.75) {
      s.cca = {"dc"};
      s.owqd_th_frac = frac(rng);
    } else {
      s.cca = {"westwood+"};
    }
    s.repetitions = 1;
    // Keep the buffer above one packet for tiny BDPs.
    if (s.BufferBytes() < 2 * s.packet_bytes) {
      s.buffer_bytes = 2 * s.packet_bytes;
    }
    const double ser_us =
        8e6 * static_cast<double>(s.packet_bytes) / (s.capacity_mbps * 1e6);
    const double tolerance = 2.0 * ser_us;

    std::vector<double> queue_delay;
    bool ok = true;
    bool clamped_since_empty = false;
    std::uint64_t n = 0, prev_rejected = 0;
    RunOptions opts;
    opts.record_series = false;
    opts.on_setup = [&](dcc::netsim::Simulator& sim,
                        dcc::netsim::Network& net,
                        std::span<dcc::transport::Flow* const> flows) {
      net.set_service_observer(
          [&queue_delay](const dcc::transport::Packet& p, double q_us) {
            if (p.packet_number >= queue_delay.size()) {
              queue_delay.resize(p.packet_number + 1, -1.0);
            }
            queue_delay[p.packet_number] = q_us;
          });
      dcc::transport::Flow* flow = flows.front();
      sim.set_post_event_hook([&, flow](Timestamp, dcc::netsim::EventKind k) {
        if (k != dcc::netsim::EventKind::kAckArrivalAtSender) return;
        const auto* w = dynamic_cast<const dcc::cc::WestwoodController*>(
            &flow->controller());
        if (w == nullptr) return;
        const dcc::PacketNumber pn = flow->sender().largest_acked();
        if (pn >= queue_delay.size() || queue_delay[pn] < 0.0) return;
        const double truth = queue_delay[pn];
        // Equal send timestamps (unpaced bursts) are rejected and leave the
        // estimate at the previous accepted packet.
        const std::uint64_t rejected = w->owqd().rejected_samples();
        const bool was_rejected = rejected != prev_rejected;
        prev_rejected = rejected;
        if (was_rejected) {
          ++rejected_skips;
          return;
        }
        if (w->owqd().clamped_last_update()) clamped_since_empty = true;
        if (truth == 0.0) clamped_since_empty = false;
        if (clamped_since_empty) {
          ++skipped;
          return;
        }
        ++checked;
        ++n;
        const double est = static_cast<double>(w->owqd().owqd().count());
        const double err = std::abs(est - truth);
        worst_ratio = std::max(worst_ratio, err / ser_us);
        if (err > tolerance && ok) {
          ok = false;
          if (first_failure.empty()) {
            first_failure = fmt::format(
                "{}: pn {} estimate {:.1f} us vs truth {:.1f} us (tol {:.1f})",
                s.name, pn, est, truth, tolerance);
          }
        }
      });
    };
    dcc::runner::RunOnce(s, 1000 + i, opts);
    if (ok && n > 0) ++traces_ok;
  }
  c.Expect(traces_ok == 100,
           fmt::format("(b) OWQD within 2 serialization times of ground "
                       "truth on {}/100 random traces ({} samples checked, {} "
                       "after a clamp, {} rejected; worst error {:.2f} "
                       "serializations){}",
                       traces_ok, checked, skipped, rejected_skips, worst_ratio,
                       first_failure.empty() ? "" : "; " + first_failure));
}

void ByteConservation(Criterion& c) {
  std::uint64_t events = 0, violations = 0;
  std::string first;
  for (const char* preset : {"table5-dc80", "fig5-westwood", "table4-newreno"}) {
    Scenario s = SmallScenario(preset, 10'000'000);
    if (s.duration_s) s.duration_s = 12.0;
    RunOptions opts;
    opts.on_setup = [&](dcc::netsim::Simulator& sim,
                        dcc::netsim::Network& net,
                        std::span<dcc::transport::Flow* const> flows) {
      std::vector<dcc::transport::Flow*> fs(flows.begin(), flows.end());
      sim.set_post_event_hook([&, fs](Timestamp t, dcc::netsim::EventKind) {
        ++events;
        for (const auto* f : fs) {
          const auto& k = net.counters(f->id());
          const bool conserved =
              k.injected_bytes ==
                  k.delivered_bytes + k.dropped_bytes + k.in_network_bytes &&
              k.in_network_bytes == net.BufferedBytes(f->id()) +
                                        net.InServiceBytes(f->id()) +
                                        net.PropagatingBytes(f->id()) &&
              net.queue_bytes() <= net.link().buffer_bytes;
          if (!conserved) {
            if (first.empty()) {
              first = fmt::format("{} flow {} at {} us", preset, f->id(),
                                  t.count());
            }
            ++violations;
          }
        }
      });
    };
    const auto run = dcc::runner::RunOnce(s, s.seed, opts);
    for (std::size_t f = 0; f < run.traces.size(); ++f) {
      if (run.traces[f].drops.size() != run.counters[f].dropped_packets) {
        ++violations;
        if (first.empty()) first = fmt::format("{} drop tally", preset);
      }
    }
  }
  c.Expect(violations == 0,
           fmt::format("(c) byte conservation held after all {} events{}",
                       events, first.empty() ? "" : "; first break: " + first));
}

std::string ReadFile(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void Determinism(Criterion& c) {
  const auto root = std::filesystem::temp_directory_path() /
                    fmt::format("dcc-accept-{}", ::getpid());
  bool ok = true;
  std::string detail;
  for (const char* preset : {"table1-dc10", "table5-cubic"}) {
    Scenario s = Preset(preset);
    s.repetitions = 1;
    if (s.duration_s) s.duration_s = 20.0;
    const auto a = RunScenario(s);
    const auto b = RunScenario(s);
    dcc::runner::WriteReportFiles(a, root / "a");
    dcc::runner::WriteReportFiles(b, root / "b");
    for (const auto& entry : std::filesystem::directory_iterator(root / "a")) {
      const auto name = entry.path().filename();
      if (ReadFile(entry.path()) != ReadFile(root / "b" / name)) {
        ok = false;
        detail = fmt::format(" ({} differs for {})", name.string(), preset);
      }
    }
    if (a.runs[0].sim.trace_hash != b.runs[0].sim.trace_hash) {
      ok = false;
      detail = fmt::format(" (event hash differs for {})", preset);
    }
    std::filesystem::remove_all(root);
  }
  c.Expect(ok, "(d) identical (scenario, seed) gives identical summary.csv, "
               "cdf and timeseries bytes" + detail);
}

void ReactionEquivalence(Criterion& c) {
  using dcc::cc::CongestionEventKind;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> bwe(0.0, 100e6);
  std::uniform_int_distribution<ByteCount> cwnd(1252, 2'000'000);
  std::uniform_int_distribution<std::int64_t> rtt(1'000, 500'000);
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    dcc::cc::WestwoodConfig cfg;
    cfg.delay.owqd_threshold = dcc::Millis(80);
    dcc::cc::WestwoodController a(cfg), b(cfg);
    const ByteCount w = cwnd(rng), th = cwnd(rng);
    const double bw = bwe(rng);
    const Duration r(rtt(rng));
    a.SetStateForTesting(w, th, bw, r);
    b.SetStateForTesting(w, th, bw, r);
    a.OnCongestionEvent(CongestionEventKind::kDelayThreshold, Timestamp(5));
    b.OnCongestionEvent(CongestionEventKind::kLossDetected, Timestamp(5));
    if (a.cwnd() != b.cwnd() || a.ssthresh() != b.ssthresh()) ++mismatches;
  }

  // The same comparison through the ACK and loss entry points.
  dcc::cc::WestwoodConfig cfg;
  cfg.delay.owqd_threshold = dcc::Millis(80);
  dcc::cc::WestwoodController a(cfg), b(cfg);
  auto ack = [](Timestamp now, ByteCount bytes,
                std::vector<dcc::cc::TimestampPair>& pairs) {
    dcc::cc::AckEvent e;
    e.now = now;
    e.newly_acked_bytes = bytes;
    e.rtt_sample = dcc::Millis(51);
    e.smoothed_rtt = dcc::Millis(51);
    e.largest_acked_sent_at = now - dcc::Millis(51);
    e.timestamps = pairs;
    return e;
  };
  std::vector<dcc::cc::TimestampPair> pairs;
  for (int k = 0; k < 200; ++k) {
    const Timestamp now = dcc::Millis(51) + Duration(k * 1000);
    pairs = {{static_cast<dcc::PacketNumber>(k), now - dcc::Millis(51),
              now - dcc::Millis(26)}};
    a.OnAck(ack(now, 1252, pairs));
    b.OnAck(ack(now, 1252, pairs));
  }
  const Timestamp t = dcc::Millis(300);
  // The previous pair was sent at 199 ms and received at 224 ms.
  std::vector<dcc::cc::TimestampPair> late = {
      {200, dcc::Millis(230), dcc::Millis(355)}};
  std::vector<dcc::cc::TimestampPair> on_time = {
      {200, dcc::Millis(230), dcc::Millis(255)}};
  a.OnAck(ack(t, 0, late));
  b.OnAck(ack(t, 0, on_time));
  dcc::cc::LossEvent loss;
  loss.now = t;
  loss.lost_bytes = 1252;
  loss.largest_lost_sent_at = t - dcc::Millis(60);
  b.OnLossDetected(loss);
  const bool path_ok = a.reactions() == 1 && b.reactions() == 1 &&
                       a.cwnd() == b.cwnd() && a.ssthresh() == b.ssthresh();
  c.Expect(mismatches == 0 && path_ok,
           fmt::format("(e) delay and loss reactions agree on (cwnd, "
                       "ssthresh) for 1000 random states ({} mismatches) and "
                       "through the ACK/loss entry points ({})",
                       mismatches, path_ok ? "equal" : "differ"));
}

void WestwoodEquivalence(Criterion& c) {
  bool ok = true;
  std::string detail;
  for (const char* preset : {"fig5-westwood", "table4-westwood",
                             "table5-westwood"}) {
    Scenario ww = SmallScenario(preset, 20'000'000);
    if (ww.duration_s) ww.duration_s = 20.0;
    Scenario dc = ww;
    dc.cca = {"dc"};
    dc.owqd_th_us = dcc::kInfiniteDuration.count();
    const auto a = dcc::runner::RunOnce(ww, ww.seed);
    const auto b = dcc::runner::RunOnce(dc, dc.seed);
    for (std::size_t f = 0; f < a.traces.size(); ++f) {
      std::string why;
      if (!SameTraces(a.traces[f], b.traces[f], &why)) {
        ok = false;
        detail = fmt::format(" ({}: {} differ)", preset, why);
      }
    }
    if (a.sim.trace_hash != b.sim.trace_hash) {
      ok = false;
      detail = fmt::format(" ({}: event hash differs)", preset);
    }
  }
  c.Expect(ok, "(f) Westwood+ and DC with an infinite threshold produce "
               "identical traces" + detail);
}

bool CheckProperties() {
  Criterion c("[6] Property suite");
  OffsetInvariance(c);
  OracleTracking(c);
  ByteConservation(c);
  Determinism(c);
  ReactionEquivalence(c);
  WestwoodEquivalence(c);
  return c.Print();
}

// ---------------------------------------------------------------- 7
bool CheckFilter() {
  Criterion c("[7] Bandwidth filter recurrence 0.2 prev + 0.8 sample");
  const dcc::cc::FilterGains g;
  // Exact rational oracle: all values below are integers in bit/s and
  // (prev + 4 * sample) / 5 divides evenly.
  auto exact = [](std::int64_t prev, std::int64_t sample) {
    return (prev + 4 * sample) / 5;
  };
  struct Seq {
    std::int64_t start;
    std::vector<std::int64_t> samples;
  };
  const std::vector<Seq> seqs = {
      {10'000'000, {0, 0}},
      {10'000'000, {5'000'000, 20'000'000, 20'000'000}},
      {1'000'000, {6'000'000, 1'000'000, 11'000'000}},
      {25'000'000, {0, 0, 0, 0, 0, 0, 0}},
  };
  bool all = true;
  for (const auto& seq : seqs) {
    dcc::cc::BandwidthEstimator est(g);
    est.AddSample(static_cast<double>(seq.start));
    std::int64_t ref = seq.start;
    bool ok = est.bwe_bps() == static_cast<double>(seq.start);
    std::string trail = fmt::format("{}", seq.start);
    for (std::int64_t s : seq.samples) {
      if ((ref + 4 * s) % 5 != 0) ok = false;
      ref = exact(ref, s);
      est.AddSample(static_cast<double>(s));
      ok = ok && est.bwe_bps() == static_cast<double>(ref) &&
           dcc::cc::FilterStep(0.0, 0.0, g) == 0.0;
      trail += fmt::format(" -> {}", ref);
    }
    all = all && ok;
    c.Expect(ok, fmt::format("sequence {}", trail));
  }
  c.Expect(dcc::cc::FilterStep(0.0, 10e6, g) == 8e6,
           "single step from 0 with a 10 Mbps sample gives 8 Mbps");
  {
    dcc::cc::BandwidthEstimator est(g);
    est.AddSample(10e6);
    c.Expect(est.bwe_bps() == 10e6, "first sample seeds the filter: 10 Mbps");
    est.AddSample(0.0);
    const double first = est.bwe_bps();
    est.AddSample(0.0);
    c.Expect(first == 2e6 && est.bwe_bps() == 4e5,
             fmt::format("10 Mbps then samples 0, 0 -> {} then {} bit/s",
                         first, est.bwe_bps()));
  }
  {
    bool fixed = true;
    for (double s : {1e6, 2e6, 5e6, 10e6, 25e6, 100e6}) {
      dcc::cc::BandwidthEstimator est(g);
      est.AddSample(s);
      for (int k = 0; k < 50; ++k) est.AddSample(s);
      fixed = fixed && est.bwe_bps() == s;
    }
    c.Expect(fixed, "constant samples at 1, 2, 5, 10, 25, 100 Mbps are fixed "
                    "points over 50 steps");
  }
  {
    dcc::cc::BandwidthEstimator est(g);
    est.AddSample(10e6);
    double prev = est.bwe_bps();
    bool decays = true;
    for (int k = 1; k <= 20; ++k) {
      est.AddSample(0.0);
      const double expected = 10e6 * std::pow(0.2, k);
      decays = decays && est.bwe_bps() < prev &&
               std::abs(est.bwe_bps() - expected) <= 1e-9 * expected;
      prev = est.bwe_bps();
    }
    c.Expect(decays, "zero samples decay geometrically as 10 Mbps * 0.2^k");
  }
  return c.Print() && all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> only(argv + 1, argv + argc);
  auto wanted = [&only](const char* id) {
    return only.empty() ||
           std::find(only.begin(), only.end(), id) != only.end();
  };
  const std::vector<std::pair<const char*, std::function<bool()>>> checks = {
      {"1", CheckTable1},           {"2", CheckThresholdMonotonicity},
      {"3", CheckFig5},             {"4", CheckTable5},
      {"5", CheckUndersizedBuffer}, {"6", CheckProperties},
      {"7", CheckFilter},
  };
  int failed = 0, run = 0;
  for (const auto& [id, fn] : checks) {
    if (!wanted(id)) continue;
    ++run;
    if (!fn()) ++failed;
  }
  fmt::print("{} of {} criteria passed\n", run - failed, run);
  return failed == 0 ? 0 : 1;
}
