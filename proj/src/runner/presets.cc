#include "dcc/runner/presets.h"

#include <fmt/format.h>

#include <algorithm>
#include <optional>

namespace dcc::runner {
namespace {

struct Variant {
  const char* suffix;
  const char* cca;
  std::optional<double> threshold;
};

constexpr Variant kSingleFlowVariants[] = {
    {"dc10", "dc", 0.10},       {"dc20", "dc", 0.20},
    {"dc50", "dc", 0.50},       {"dc80", "dc", 0.80},
    {"westwood", "westwood+", std::nullopt},
    {"cubic", "cubic", std::nullopt},
    {"newreno", "newreno", std::nullopt},
};

struct Table {
  const char* prefix;
  const char* label;
  double buffer_bdp;
};

constexpr Table kSingleFlowTables[] = {
    {"table1", "Table 1", 4.0},
    {"table2", "Table 2", 2.0},
    {"table3", "Table 3", 1.0},
    {"table4", "Table 4", 0.5},
    {"fig4", "Fig. 4 (RTT CDF)", 4.0},
};

std::string VariantLabel(const Variant& v) {
  if (v.threshold) {
    return fmt::format("DC with threshold {:.0f}% of buffer drain time",
                       *v.threshold * 100.0);
  }
  return v.cca;
}

Scenario SingleFlow(const Table& t, const Variant& v) {
  Scenario s;
  s.name = fmt::format("{}-{}", t.prefix, v.suffix);
  s.description = fmt::format(
      "{}: single flow, {} x BDP buffer, 10 Mbps, RTT_min 50 ms, 100 MB, {}",
      t.label, t.buffer_bdp, VariantLabel(v));
  s.buffer_bdp = t.buffer_bdp;
  s.cca = {v.cca};
  s.owqd_th_frac = v.threshold;
  s.transfer_bytes = 100'000'000;
  return s;
}

Scenario Fig5(const Variant& v) {
  Table t{"fig5", "Fig. 5 (RTT and cwnd evolution)", 2.0};
  return SingleFlow(t, v);
}

Scenario MultiFlow(const Variant& v) {
  Scenario s;
  s.name = fmt::format("table5-{}", v.suffix);
  s.description = fmt::format(
      "Table 5: four {} flows started 2 s apart, 2 x BDP buffer, 10 Mbps, "
      "RTT_min 50 ms, 60 s after the last start. Capacity follows the "
      "table's per-flow goodput (about 2.29 Mbps, a fully shared 10 Mbps "
      "link); the accompanying text quotes 25 Mbps and about 6 Mbps per "
      "flow, which the table does not support",
      VariantLabel(v));
  s.buffer_bdp = 2.0;
  s.cca = {v.cca};
  s.owqd_th_frac = v.threshold;
  s.flows = 4;
  s.flow_start_offsets_ms = {0.0, 2000.0, 4000.0, 6000.0};
  s.transfer_bytes.reset();
  s.duration_s = 60.0;
  return s;
}

std::vector<Scenario> BuildAll() {
  std::vector<Scenario> all;
  for (const auto& t : kSingleFlowTables) {
    for (const auto& v : kSingleFlowVariants) all.push_back(SingleFlow(t, v));
  }
  for (const auto& v : kSingleFlowVariants) {
    const std::string_view suffix = v.suffix;
    if (suffix == "dc80" || suffix == "westwood") all.push_back(Fig5(v));
  }
  for (const auto& v : kSingleFlowVariants) {
    const std::string_view suffix = v.suffix;
    if (suffix == "dc80" || suffix == "westwood" || suffix == "cubic" ||
        suffix == "newreno") {
      all.push_back(MultiFlow(v));
    }
  }
  return all;
}

const std::vector<Scenario>& All() {
  static const std::vector<Scenario> all = BuildAll();
  return all;
}

}  // namespace

const std::vector<std::string>& PresetNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : All()) n.push_back(s.name);
    return n;
  }();
  return names;
}

bool IsPreset(std::string_view name) {
  const auto& names = PresetNames();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Scenario Preset(std::string_view name) {
  for (const auto& s : All()) {
    if (s.name == name) return s;
  }
  throw ConfigError(fmt::format("unknown preset '{}'", name));
}

}  // namespace dcc::runner
