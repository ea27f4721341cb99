#pragma once

#include <string>
#include <vector>

#include "spectral.hpp"
#include "sweep.hpp"

namespace mosaic {

// shortest decimal form that parses back to the same bits
std::string format_double(double v);
double parse_double(const std::string& s);  // strict full-string parse

void write_trace_csv(const EvolutionRecord& rec, const std::string& path);
void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path);
void write_spectrum_csv(const SpectrumRecord& spec, const std::string& path);

struct TraceTable {
  std::vector<double> times;
  Eigen::MatrixXd densities;
  std::vector<double> d_trace;
  std::vector<double> w_trace;
};

TraceTable read_trace_csv(const std::string& path);
std::vector<SweepRow> read_sweep_csv(const std::string& path);

struct RunManifest {
  int schema_version = 1;
  std::string tool;  // name + version
  std::string protocol;
  MosaicParams params;
  double tf_ns = 0.0;
  double dt_ns = 0.0;
  std::string rows_sorted_by = "grid";
  double wall_seconds = 0.0;
};

// canonical fixed key order; serialize(parse(s)) == s byte for byte
std::string manifest_to_string(const RunManifest& m);
RunManifest manifest_from_string(const std::string& text);
void write_manifest(const RunManifest& m, const std::string& path);
RunManifest read_manifest(const std::string& path);

}  // namespace mosaic
