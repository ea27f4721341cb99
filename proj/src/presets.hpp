#pragma once

#include <string>
#include <vector>

#include "sweep.hpp"

namespace mosaic {

// Named parameter sets pinned to the published experiment. Changing any of
// these is a breaking change: downstream regression baselines assume them.
enum class preset_kind { evolve, sweep, quench };

struct EvolvePreset {
  std::string name;
  MosaicParams params;
  protocol_kind protocol = protocol_kind::quench_single;
  int j0 = 14;
  int comb_period = 6;
  int comb_offset = 1;
  double tf_ns = 300.0;
  double dt_ns = 1.0;
};

struct QuenchPreset {
  std::string name;
  MosaicParams base;
  std::vector<std::pair<int, int>> states;  // (position, sign)
  double tf_ns = 300.0;
  double dt_ns = 1.0;
};

bool is_preset(const std::string& name);
preset_kind preset_kind_of(const std::string& name);  // throws unknown_preset
EvolvePreset evolve_preset(const std::string& name);
SweepPlan sweep_preset(const std::string& name);
QuenchPreset quench_preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace mosaic
