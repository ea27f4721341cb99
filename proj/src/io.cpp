#include "io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "error.hpp"

namespace mosaic {

std::string format_double(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc())
    throw error(errc::io_failure, "double formatting failed");
  return std::string(buf, ptr);
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const char* b = s.data();
  const char* e = b + s.size();
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e)
    throw error(errc::parse_failure, "not a number: '" + s + "'");
  return v;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw error(errc::io_failure, "cannot open for writing: " + path);
  return f;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw error(errc::io_failure, "cannot open for reading: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (;;) {
    size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start < text.size()) {
    size_t pos = text.find('\n', start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

}  // namespace

void write_trace_csv(const EvolutionRecord& rec, const std::string& path) {
  auto f = open_out(path);
  const auto n = rec.densities.cols();
  f << "t_ns";
  for (Eigen::Index j = 1; j <= n; ++j) f << ",n_" << j;
  f << ",D,W\n";
  for (size_t i = 0; i < rec.times.size(); ++i) {
    f << format_double(rec.times[i]);
    for (Eigen::Index j = 0; j < n; ++j) f << ',' << format_double(rec.densities(i, j));
    f << ',' << format_double(rec.d_trace[i]) << ',' << format_double(rec.w_trace[i]) << '\n';
  }
  if (!f) throw error(errc::io_failure, "write failed: " + path);
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path) {
  auto f = open_out(path);
  f << "param,d_bar,m_integrated,n_r_bar,init_energy_radns\n";
  for (const auto& r : rows) {
    if (r.failed) {
      f << format_double(r.param) << ",nan,nan,nan,nan\n";
      continue;
    }
    f << format_double(r.param) << ',' << format_double(r.d_bar) << ','
      << format_double(r.m_integrated) << ',' << format_double(r.n_r_bar) << ','
      << format_double(r.init_energy_radns) << '\n';
  }
  if (!f) throw error(errc::io_failure, "write failed: " + path);
}

void write_spectrum_csv(const SpectrumRecord& spec, const std::string& path) {
  auto f = open_out(path);
  f << "k,E_radns,D,class\n";
  for (Eigen::Index k = 0; k < spec.energies.size(); ++k) {
    f << (k + 1) << ',' << format_double(spec.energies[k]) << ','
      << format_double(spec.d_values[k]) << ',' << state_class_name(spec.classes[k]) << '\n';
  }
  if (!f) throw error(errc::io_failure, "write failed: " + path);
}

TraceTable read_trace_csv(const std::string& path) {
  auto text = read_file(path);
  auto rows = lines_of(text);
  if (rows.empty()) throw error(errc::parse_failure, "empty trace file: " + path);
  auto header = split(rows[0], ',');
  if (header.size() < 3 || header.front() != "t_ns" || header.back() != "W")
    throw error(errc::parse_failure, "unrecognized trace header in " + path);
  const size_t n = header.size() - 3;
  TraceTable t;
  t.densities.resize(static_cast<Eigen::Index>(rows.size() - 1), static_cast<Eigen::Index>(n));
  for (size_t i = 1; i < rows.size(); ++i) {
    auto cells = split(rows[i], ',');
    if (cells.size() != header.size())
      throw error(errc::parse_failure, "ragged trace row in " + path);
    t.times.push_back(parse_double(cells[0]));
    for (size_t j = 0; j < n; ++j) t.densities(i - 1, j) = parse_double(cells[1 + j]);
    t.d_trace.push_back(parse_double(cells[n + 1]));
    t.w_trace.push_back(parse_double(cells[n + 2]));
  }
  return t;
}

std::vector<SweepRow> read_sweep_csv(const std::string& path) {
  auto text = read_file(path);
  auto rows = lines_of(text);
  if (rows.empty() || rows[0] != "param,d_bar,m_integrated,n_r_bar,init_energy_radns")
    throw error(errc::parse_failure, "unrecognized sweep header in " + path);
  std::vector<SweepRow> out;
  for (size_t i = 1; i < rows.size(); ++i) {
    auto cells = split(rows[i], ',');
    if (cells.size() != 5) throw error(errc::parse_failure, "ragged sweep row in " + path);
    SweepRow r;
    r.param = parse_double(cells[0]);
    if (cells[1] == "nan") {
      r.failed = true;
    } else {
      r.d_bar = parse_double(cells[1]);
      r.m_integrated = parse_double(cells[2]);
      r.n_r_bar = parse_double(cells[3]);
      r.init_energy_radns = parse_double(cells[4]);
    }
    out.push_back(r);
  }
  return out;
}

namespace {

std::string long_range_to_string(const std::vector<LongRangeBond>& lr) {
  if (lr.empty()) return "none";
  std::string s;
  for (size_t i = 0; i < lr.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(lr[i].m) + "-" + std::to_string(lr[i].n) + ":" +
         format_double(lr[i].strength_mhz);
  }
  return s;
}

std::vector<LongRangeBond> long_range_from_string(const std::string& s) {
  std::vector<LongRangeBond> lr;
  if (s == "none") return lr;
  for (const auto& item : split(s, ',')) {
    size_t dash = item.find('-');
    size_t colon = item.find(':', dash == std::string::npos ? 0 : dash);
    if (dash == std::string::npos || colon == std::string::npos)
      throw error(errc::parse_failure, "bad long_range entry: '" + item + "'");
    LongRangeBond b;
    b.m = static_cast<int>(parse_double(item.substr(0, dash)));
    b.n = static_cast<int>(parse_double(item.substr(dash + 1, colon - dash - 1)));
    b.strength_mhz = parse_double(item.substr(colon + 1));
    lr.push_back(b);
  }
  return lr;
}

}  // namespace

std::string manifest_to_string(const RunManifest& m) {
  std::string s;
  s += "schema_version = " + std::to_string(m.schema_version) + "\n";
  s += "tool = " + m.tool + "\n";
  s += "protocol = " + m.protocol + "\n";
  s += "n_sites = " + std::to_string(m.params.n_sites) + "\n";
  s += "j_hop_mhz = " + format_double(m.params.j_hop_mhz) + "\n";
  s += "lambda_mhz = " + format_double(m.params.lambda_mhz) + "\n";
  s += "v0_mhz = " + format_double(m.params.v0_mhz) + "\n";
  s += "theta = " + format_double(m.params.theta) + "\n";
  s += "alpha = " + format_double(m.params.alpha) + "\n";
  s += "periodic = " + std::string(m.params.periodic ? "1" : "0") + "\n";
  s += "long_range = " + long_range_to_string(m.params.long_range) + "\n";
  s += "tf_ns = " + format_double(m.tf_ns) + "\n";
  s += "dt_ns = " + format_double(m.dt_ns) + "\n";
  s += "rows_sorted_by = " + m.rows_sorted_by + "\n";
  s += "wall_seconds = " + format_double(m.wall_seconds) + "\n";
  return s;
}

RunManifest manifest_from_string(const std::string& text) {
  RunManifest m;
  bool seen_schema = false;
  for (const auto& line : lines_of(text)) {
    if (line.empty()) continue;
    size_t sep = line.find(" = ");
    if (sep == std::string::npos)
      throw error(errc::parse_failure, "manifest line without ' = ': '" + line + "'");
    std::string key = line.substr(0, sep);
    std::string val = line.substr(sep + 3);
    if (key == "schema_version") {
      m.schema_version = static_cast<int>(parse_double(val));
      if (m.schema_version != 1)
        throw error(errc::parse_failure,
                    "unknown manifest schema_version " + val + " (this tool reads version 1)");
      seen_schema = true;
    } else if (key == "tool") m.tool = val;
    else if (key == "protocol") m.protocol = val;
    else if (key == "n_sites") m.params.n_sites = static_cast<int>(parse_double(val));
    else if (key == "j_hop_mhz") m.params.j_hop_mhz = parse_double(val);
    else if (key == "lambda_mhz") m.params.lambda_mhz = parse_double(val);
    else if (key == "v0_mhz") m.params.v0_mhz = parse_double(val);
    else if (key == "theta") m.params.theta = parse_double(val);
    else if (key == "alpha") m.params.alpha = parse_double(val);
    else if (key == "periodic") m.params.periodic = val == "1";
    else if (key == "long_range") m.params.long_range = long_range_from_string(val);
    else if (key == "tf_ns") m.tf_ns = parse_double(val);
    else if (key == "dt_ns") m.dt_ns = parse_double(val);
    else if (key == "rows_sorted_by") m.rows_sorted_by = val;
    else if (key == "wall_seconds") m.wall_seconds = parse_double(val);
    else throw error(errc::parse_failure, "unknown manifest key '" + key + "'");
  }
  if (!seen_schema) throw error(errc::parse_failure, "manifest missing schema_version");
  return m;
}

void write_manifest(const RunManifest& m, const std::string& path) {
  auto f = open_out(path);
  f << manifest_to_string(m);
  if (!f) throw error(errc::io_failure, "write failed: " + path);
}

RunManifest read_manifest(const std::string& path) {
  return manifest_from_string(read_file(path));
}

}  // namespace mosaic
