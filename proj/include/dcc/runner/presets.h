#ifndef DCC_RUNNER_PRESETS_H_
#define DCC_RUNNER_PRESETS_H_

#include <string>
#include <string_view>
#include <vector>

#include "dcc/runner/scenario.h"

namespace dcc::runner {

// Built-in experiment matrix. Single-flow presets transfer 100 MB over a
// 10 Mbps, 50 ms bottleneck; multi-flow presets run four flows started
// 2 s apart for 60 s after the last start.
//
//   table1-*  buffer 4 x BDP      table2-*  buffer 2 x BDP
//   table3-*  buffer 1 x BDP      table4-*  buffer 0.5 x BDP
//   with suffixes dc10, dc20, dc50, dc80, westwood, cubic, newreno
//   table5-{dc80,westwood,cubic,newreno}  four flows, 2 x BDP
//   fig4-{dc10,dc20,dc50,dc80,westwood,cubic,newreno}  RTT CDF, 4 x BDP
//   fig5-{dc80,westwood}  RTT and cwnd evolution, 2 x BDP
const std::vector<std::string>& PresetNames();
bool IsPreset(std::string_view name);
// Throws ConfigError for an unknown name.
Scenario Preset(std::string_view name);

}  // namespace dcc::runner

#endif  // DCC_RUNNER_PRESETS_H_
