// command line front end; everything goes through the shared C API

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mosaic/mosaic_c.h"

namespace {

[[noreturn]] void die(int code, const std::string& msg) {
  std::fprintf(stderr, "mosaic: %s\n", msg.c_str());
  std::exit(code);
}

void check(int32_t status) {
  if (status != MOSAIC_OK) die(1, mosaic_last_error_message());
}

template <typename T, void (*Free)(T*)>
class Handle {
 public:
  Handle() = default;
  explicit Handle(T* h) : h_(h) {}
  ~Handle() { reset(); }
  Handle(Handle&& other) noexcept : h_(other.h_) { other.h_ = nullptr; }
  Handle& operator=(Handle&& other) noexcept {
    if (this != &other) {
      reset();
      h_ = other.h_;
      other.h_ = nullptr;
    }
    return *this;
  }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  T* get() const { return h_; }
  T** out() {
    reset();
    return &h_;
  }

 private:
  void reset() {
    if (h_) Free(h_);
    h_ = nullptr;
  }
  T* h_ = nullptr;
};

using Params = Handle<mosaic_params, mosaic_params_free>;
using Record = Handle<mosaic_record, mosaic_record_free>;
using Spectrum = Handle<mosaic_spectrum, mosaic_spectrum_free>;
using Sweep = Handle<mosaic_sweep, mosaic_sweep_free>;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double parse_num(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos == s.size()) return v;
  } catch (...) {
  }
  die(2, std::string("bad ") + what + " '" + s + "'");
}

long long parse_int(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos == s.size()) return v;
  } catch (...) {
  }
  die(2, std::string("bad ") + what + " '" + s + "'");
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// config files are flat "key = value" lines whose keys are long option names
// without the dashes. Entries are spliced in right after the subcommand, so
// anything typed on the command line wins.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::string path;
  bool cli_has_long_range = false;
  for (size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (a.rfind("--config=", 0) == 0) path = a.substr(9);
    if (a == "--long-range" || a.rfind("--long-range=", 0) == 0) cli_has_long_range = true;
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) die(2, "cannot read config file '" + path + "'");
  std::vector<std::string> injected;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      die(2, "config " + path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key.empty()) die(2, "config " + path + ":" + std::to_string(lineno) + ": empty key");
    std::replace(key.begin(), key.end(), '_', '-');
    if (key == "long-range" && cli_has_long_range) continue;  // flags replace the file's bonds
    injected.push_back("--" + key + "=" + value);
  }

  static const char* kSubcommands[] = {"evolve", "spectrum", "lyapunov", "sweep", "rg"};
  size_t sub = args.size();
  for (size_t i = 0; i < args.size() && sub == args.size(); ++i)
    for (const char* name : kSubcommands)
      if (args[i] == name) sub = i;
  if (sub == args.size()) die(2, "a config file needs a subcommand on the command line");

  std::vector<std::string> out(args.begin(), args.begin() + sub + 1);
  out.insert(out.end(), injected.begin(), injected.end());
  out.insert(out.end(), args.begin() + sub + 1, args.end());
  return out;
}

struct Common {
  CLI::App* cmd = nullptr;
  std::string config, preset, out;
  int workers = 0;
  int n_sites = 24;
  double j_mhz = 4.0, lambda_mhz = 4.0, v0_mhz = 0.0;
  double theta = 0.6283185307179586;  // help display only; unset flags never reach the library
  double alpha = 0.6180339887498949;
  bool periodic = false;
  std::string alpha_rational;
  std::vector<std::string> long_range;
  double tf_ns = 300.0, dt_ns = 1.0;
  CLI::Option *o_n_sites = nullptr, *o_j = nullptr, *o_lambda = nullptr, *o_v0 = nullptr;
  CLI::Option *o_theta = nullptr, *o_alpha = nullptr, *o_alpha_rational = nullptr;
  CLI::Option *o_periodic = nullptr, *o_long_range = nullptr, *o_tf = nullptr, *o_dt = nullptr;
};

void add_common(CLI::App& app, Common& c, const char* name, const char* desc, bool out_required,
                bool with_time) {
  c.cmd = app.add_subcommand(name, desc);
  c.cmd->add_option("--config", c.config, "flat key = value file; command line flags win");
  c.cmd->add_option("--preset", c.preset, "named parameter set (fig2a..fig2f, fig3b..fig3d, fig4b, fig4c)");
  auto* out = c.cmd->add_option("--out", c.out, "output CSV path; a .manifest companion is written");
  if (out_required) out->required();
  c.cmd->add_option("--workers", c.workers, "worker threads, 0 means all cores")->capture_default_str();
  c.o_n_sites = c.cmd->add_option("--n-sites", c.n_sites, "chain length")->capture_default_str();
  c.o_j = c.cmd->add_option("--j-mhz", c.j_mhz, "even-bond modulation amplitude, MHz")->capture_default_str();
  c.o_lambda = c.cmd->add_option("--lambda-mhz", c.lambda_mhz, "odd-bond coupling, MHz")->capture_default_str();
  c.o_v0 = c.cmd->add_option("--v0-mhz", c.v0_mhz, "on-site modulation amplitude, MHz")->capture_default_str();
  c.o_theta = c.cmd->add_option("--theta", c.theta, "modulation phase, rad (default pi/5)");
  c.o_alpha = c.cmd->add_option("--alpha", c.alpha, "modulation frequency (default inverse golden ratio)");
  c.o_alpha_rational =
      c.cmd->add_option("--alpha-rational", c.alpha_rational, "rational alpha as num/den, e.g. 89/144");
  c.o_periodic = c.cmd->add_flag("--periodic,!--no-periodic", c.periodic, "close the ring");
  c.o_long_range = c.cmd
                       ->add_option("--long-range", c.long_range,
                                    "nnn:<mhz> | nnnn:<mhz> | pairs:m-n:<mhz>[,m-n:<mhz>...] (repeatable)")
                       ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  if (with_time) {
    c.o_tf = c.cmd->add_option("--tf-ns", c.tf_ns, "evolution window, ns")->capture_default_str();
    c.o_dt = c.cmd->add_option("--dt-ns", c.dt_ns, "sample spacing, ns; must divide tf")->capture_default_str();
  }
}

void apply_long_range(mosaic_params* p, const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    die(2, "bad --long-range '" + spec + "': expected nnn:<mhz>, nnnn:<mhz> or pairs:m-n:<mhz>,...");
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "nnn") {
    check(mosaic_params_add_nnn_uniform(p, parse_num(rest, "--long-range nnn strength")));
  } else if (kind == "nnnn") {
    check(mosaic_params_add_nnnn_uniform(p, parse_num(rest, "--long-range nnnn strength")));
  } else if (kind == "pairs") {
    std::stringstream ss(rest);
    std::string item;
    bool any = false;
    while (std::getline(ss, item, ',')) {
      auto dash = item.find('-');
      auto c2 = dash == std::string::npos ? std::string::npos : item.find(':', dash + 1);
      if (dash == std::string::npos || c2 == std::string::npos)
        die(2, "bad --long-range pair '" + item + "': expected m-n:<mhz>");
      int m = static_cast<int>(parse_int(item.substr(0, dash), "--long-range pair site"));
      int n = static_cast<int>(parse_int(item.substr(dash + 1, c2 - dash - 1), "--long-range pair site"));
      double s = parse_num(item.substr(c2 + 1), "--long-range pair strength");
      check(mosaic_params_add_long_range(p, m, n, s));
      any = true;
    }
    if (!any) die(2, "bad --long-range '" + spec + "': no pairs given");
  } else {
    die(2, "bad --long-range kind '" + kind + "'");
  }
}

// flags given on the command line (or via config) land on top of whatever the
// preset chose; untouched fields keep the preset values
void apply_flags(const Common& c, mosaic_params* p) {
  if (c.o_n_sites->count()) check(mosaic_params_set_n_sites(p, c.n_sites));
  if (c.o_j->count()) check(mosaic_params_set_j_mhz(p, c.j_mhz));
  if (c.o_lambda->count()) check(mosaic_params_set_lambda_mhz(p, c.lambda_mhz));
  if (c.o_v0->count()) check(mosaic_params_set_v0_mhz(p, c.v0_mhz));
  if (c.o_theta->count()) check(mosaic_params_set_theta(p, c.theta));
  if (c.o_alpha->count()) check(mosaic_params_set_alpha(p, c.alpha));
  if (c.o_alpha_rational->count()) {
    auto slash = c.alpha_rational.find('/');
    if (slash == std::string::npos)
      die(2, "bad --alpha-rational '" + c.alpha_rational + "': expected num/den");
    long long num = parse_int(c.alpha_rational.substr(0, slash), "--alpha-rational numerator");
    long long den = parse_int(c.alpha_rational.substr(slash + 1), "--alpha-rational denominator");
    check(mosaic_params_set_alpha_rational(p, num, den));
  }
  if (c.o_periodic->count()) check(mosaic_params_set_periodic(p, c.periodic ? 1 : 0));
  if (c.o_long_range->count()) {
    check(mosaic_params_clear_long_range(p));
    for (const auto& spec : c.long_range) apply_long_range(p, spec);
  }
  check(mosaic_params_validate(p));
}

int32_t preset_kind_or_die(const std::string& name) {
  int32_t kind = 0;
  int32_t st = mosaic_preset_kind(name.c_str(), &kind);
  if (st == MOSAIC_ERR_UNKNOWN_PRESET) {
    std::fprintf(stderr, "mosaic: unknown preset '%s'; known presets:\n", name.c_str());
    for (int32_t i = 0; i < mosaic_preset_count(); ++i)
      std::fprintf(stderr, "  %s\n", mosaic_preset_name(i));
    std::exit(2);
  }
  check(st);
  return kind;
}

Params preset_base_params(const std::string& name) {
  Params prm;
  switch (preset_kind_or_die(name)) {
    case MOSAIC_PRESET_EVOLVE:
      check(mosaic_preset_evolve_info(name.c_str(), prm.out(), nullptr, nullptr, nullptr, nullptr,
                                      nullptr, nullptr));
      break;
    case MOSAIC_PRESET_SWEEP: {
      int32_t len = 0;
      check(mosaic_preset_sweep_info(name.c_str(), prm.out(), nullptr, nullptr, nullptr, nullptr,
                                     nullptr, nullptr, nullptr, nullptr, nullptr, 0, &len));
      break;
    }
    default: {
      int32_t count = 0;
      check(mosaic_preset_quench_info(name.c_str(), prm.out(), nullptr, nullptr, 0, &count, nullptr,
                                      nullptr));
      break;
    }
  }
  return prm;
}

Params base_params(const Common& c) {
  Params prm = c.preset.empty() ? Params(mosaic_params_new()) : preset_base_params(c.preset);
  apply_flags(c, prm.get());
  return prm;
}

void write_manifest_or_die(const Common& c, const Params& prm, const char* protocol, double tf_ns,
                           double dt_ns, const char* sorted_by, Clock::time_point t0) {
  check(mosaic_write_manifest((c.out + ".manifest").c_str(), prm.get(), protocol, tf_ns, dt_ns,
                              sorted_by, seconds_since(t0)));
}

void report_outputs(const Common& c) {
  std::printf("wrote %s and %s.manifest\n", c.out.c_str(), c.out.c_str());
}

/* ---- evolve ------------------------------------------------------------- */

struct EvolveOpts {
  std::string initial = "single:14";
  CLI::Option* o_initial = nullptr;
};

int cmd_evolve(const Common& c, const EvolveOpts& eo) {
  auto t0 = Clock::now();
  Params prm;
  std::string init = eo.initial;
  double tf = c.tf_ns, dt = c.dt_ns;
  if (!c.preset.empty()) {
    if (preset_kind_or_die(c.preset) != MOSAIC_PRESET_EVOLVE)
      die(2, "preset '" + c.preset + "' is not an evolve preset; use the sweep subcommand");
    int32_t protocol = 0, j0 = 0, period = 0, offset = 0;
    double ptf = 0, pdt = 0;
    check(mosaic_preset_evolve_info(c.preset.c_str(), prm.out(), &protocol, &j0, &period, &offset,
                                    &ptf, &pdt));
    if (!c.o_tf->count()) tf = ptf;
    if (!c.o_dt->count()) dt = pdt;
    if (!eo.o_initial->count())
      init = protocol == MOSAIC_PROTOCOL_COMB
                 ? "comb:" + std::to_string(period) + ":" + std::to_string(offset)
                 : "single:" + std::to_string(j0);
  } else {
    prm = Params(mosaic_params_new());
  }
  apply_flags(c, prm.get());

  std::vector<std::string> parts;
  std::stringstream ss(init);
  std::string piece;
  while (std::getline(ss, piece, ':')) parts.push_back(piece);

  Record rec;
  const char* protocol = nullptr;
  if (parts.size() == 2 && parts[0] == "single") {
    check(mosaic_evolve_single(prm.get(), static_cast<int32_t>(parse_int(parts[1], "--initial site")),
                               tf, dt, rec.out()));
    protocol = "quench_single";
  } else if (parts.size() == 3 && parts[0] == "dimer") {
    check(mosaic_evolve_dimer(prm.get(), static_cast<int32_t>(parse_int(parts[1], "--initial site")),
                              parse_num(parts[2], "--initial phase"), tf, dt, rec.out()));
    protocol = "quench_dimer";
  } else if (parts.size() == 3 && parts[0] == "comb") {
    check(mosaic_evolve_comb(prm.get(), static_cast<int32_t>(parse_int(parts[1], "--initial period")),
                             static_cast<int32_t>(parse_int(parts[2], "--initial offset")), tf, dt,
                             rec.out()));
    protocol = "comb";
  } else {
    die(2, "bad --initial '" + init + "': expected single:<j0>, dimer:<n>:<phi> or comb:<period>:<offset>");
  }

  check(mosaic_record_write_csv(rec.get(), c.out.c_str()));
  write_manifest_or_die(c, prm, protocol, tf, dt, "time", t0);

  double dbar = 0, m = 0, nr = 0, e0 = 0;
  check(mosaic_record_d_bar(rec.get(), &dbar));
  check(mosaic_record_m_integrated(rec.get(), &m));
  check(mosaic_record_n_r_bar(rec.get(), &nr));
  check(mosaic_record_init_energy(rec.get(), &e0));
  std::printf("D_bar=%.6f M=%.6f n_r_bar=%.6f E0_radns=%.6f\n", dbar, m, nr, e0);
  report_outputs(c);
  return 0;
}

/* ---- spectrum ----------------------------------------------------------- */

struct SpectrumOpts {
  double edge_tol = 1e-9;
};

int cmd_spectrum(const Common& c, const SpectrumOpts& so) {
  auto t0 = Clock::now();
  Params prm = base_params(c);
  Spectrum spec;
  check(mosaic_spectrum_compute(prm.get(), spec.out()));

  int32_t n = 0;
  check(mosaic_spectrum_size(spec.get(), &n));
  int counts[4] = {0, 0, 0, 0};
  for (int32_t k = 0; k < n; ++k) {
    int32_t cls = 0;
    check(mosaic_spectrum_class(spec.get(), k, &cls));
    ++counts[cls];
  }
  double lambda = 0;
  check(mosaic_params_get_lambda_mhz(prm.get(), &lambda));
  int32_t outside = 0, inside = 0, edge = 0;
  check(mosaic_localized_critical_ratio(spec.get(), lambda, so.edge_tol, &outside, &inside, &edge));

  check(mosaic_spectrum_write_csv(spec.get(), c.out.c_str()));
  write_manifest_or_die(c, prm, "spectrum", 0.0, 0.0, "energy", t0);
  std::printf("states=%d localized=%d critical=%d extended=%d unresolved=%d\n", n, counts[0],
              counts[1], counts[2], counts[3]);
  std::printf("|E| against omega(lambda): outside=%d inside=%d edge=%d\n", outside, inside, edge);
  report_outputs(c);
  return 0;
}

/* ---- lyapunov ----------------------------------------------------------- */

struct LyapunovOpts {
  std::vector<double> energies;
  double e_lo = 0.0, e_hi = 0.0;
  int e_n = 0;
  long long chain_length = 100000;
  double tau = 0.15;
  CLI::Option *o_energy = nullptr, *o_lo = nullptr, *o_hi = nullptr, *o_n = nullptr;
};

int cmd_lyapunov(const Common& c, const LyapunovOpts& lo) {
  auto t0 = Clock::now();
  Params prm = base_params(c);

  std::vector<double> grid = lo.energies;
  if (lo.o_lo->count() || lo.o_hi->count() || lo.o_n->count()) {
    if (!(lo.o_lo->count() && lo.o_hi->count() && lo.o_n->count()))
      die(2, "--e-lo, --e-hi and --e-n go together");
    if (lo.e_n < 1 || lo.e_hi < lo.e_lo) die(2, "bad energy grid");
    for (int k = 0; k < lo.e_n; ++k)
      grid.push_back(lo.e_n == 1 ? lo.e_lo : lo.e_lo + (lo.e_hi - lo.e_lo) * k / (lo.e_n - 1));
  }
  if (grid.empty()) die(2, "lyapunov needs --energy values or an --e-lo/--e-hi/--e-n grid");
  std::sort(grid.begin(), grid.end());

  std::vector<double> gamma(grid.size());
  std::vector<int32_t> cls(grid.size());
  int32_t found = 0;
  double cminus = 0, cplus = 0;
  check(mosaic_me_scan(prm.get(), grid.data(), static_cast<int32_t>(grid.size()), lo.chain_length,
                       lo.tau, c.workers, gamma.data(), cls.data(), &found, &cminus, &cplus));

  std::ofstream outf(c.out);
  if (!outf) die(1, "cannot write '" + c.out + "'");
  outf << "E_radns,gamma,class\n";
  static const char* kNames[] = {"localized", "critical", "extended", "unresolved"};
  char buf[80];
  for (size_t i = 0; i < grid.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,", grid[i], gamma[i]);
    outf << buf << kNames[cls[i]] << "\n";
  }
  outf.close();
  if (!outf) die(1, "cannot write '" + c.out + "'");
  write_manifest_or_die(c, prm, "lyapunov", 0.0, 0.0, "energy", t0);

  double gmin = gamma[0], gmax = gamma[0];
  for (double g : gamma) {
    gmin = std::min(gmin, g);
    gmax = std::max(gmax, g);
  }
  std::printf("gamma: min=%.6f max=%.6f (tau=%.3f, L=%lld)\n", gmin, gmax, lo.tau, lo.chain_length);
  if (found)
    std::printf("crossings at E=%.6f and E=%.6f rad/ns\n", cminus, cplus);
  else
    std::printf("no energies below tau\n");
  report_outputs(c);
  return 0;
}

/* ---- sweep ---------------------------------------------------------------- */

struct SweepOpts {
  std::string axis = "lambda", protocol = "single";
  std::string grid_csv;
  double grid_lo = 0.0, grid_hi = 0.0;
  int grid_n = 0;
  int j0 = 14, dimer_n = 12;
  double dimer_phi = 0.0;
  int comb_period = 6, comb_offset = 1;
  CLI::Option *o_axis = nullptr, *o_protocol = nullptr, *o_grid = nullptr, *o_lo = nullptr;
  CLI::Option *o_hi = nullptr, *o_n = nullptr, *o_j0 = nullptr, *o_dimer_n = nullptr;
  CLI::Option *o_dimer_phi = nullptr, *o_period = nullptr, *o_offset = nullptr;
};

int32_t parse_axis(const std::string& s) {
  if (s == "lambda") return MOSAIC_AXIS_LAMBDA_MHZ;
  if (s == "j") return MOSAIC_AXIS_J_HOP_MHZ;
  if (s == "lr-scale") return MOSAIC_AXIS_LR_SCALE;
  if (s == "dimer-phase") return MOSAIC_AXIS_DIMER_PHASE;
  die(2, "bad --axis '" + s + "': expected lambda, j, lr-scale or dimer-phase");
}

int32_t parse_protocol(const std::string& s) {
  if (s == "single") return MOSAIC_PROTOCOL_SINGLE;
  if (s == "dimer") return MOSAIC_PROTOCOL_DIMER;
  if (s == "comb") return MOSAIC_PROTOCOL_COMB;
  die(2, "bad --protocol '" + s + "': expected single, dimer or comb");
}

const char* axis_str(int32_t axis) {
  switch (axis) {
    case MOSAIC_AXIS_LAMBDA_MHZ: return "lambda_mhz";
    case MOSAIC_AXIS_J_HOP_MHZ: return "j_hop_mhz";
    case MOSAIC_AXIS_LR_SCALE: return "lr_scale";
    default: return "dimer_phase";
  }
}

const char* protocol_str(int32_t protocol) {
  switch (protocol) {
    case MOSAIC_PROTOCOL_SINGLE: return "quench_single";
    case MOSAIC_PROTOCOL_DIMER: return "quench_dimer";
    default: return "comb";
  }
}

std::vector<double> build_grid(const SweepOpts& so) {
  std::vector<double> grid;
  if (so.o_grid->count()) {
    std::stringstream ss(so.grid_csv);
    std::string item;
    while (std::getline(ss, item, ',')) grid.push_back(parse_num(trim(item), "--grid entry"));
    if (grid.empty()) die(2, "bad --grid '" + so.grid_csv + "': no values");
    return grid;
  }
  if (!(so.o_lo->count() && so.o_hi->count() && so.o_n->count()))
    die(2, "--grid-lo, --grid-hi and --grid-n go together");
  if (so.grid_n < 1 || so.grid_hi < so.grid_lo) die(2, "bad sweep grid");
  for (int k = 0; k < so.grid_n; ++k)
    grid.push_back(so.grid_n == 1 ? so.grid_lo
                                  : so.grid_lo + (so.grid_hi - so.grid_lo) * k / (so.grid_n - 1));
  return grid;
}

int finish_sweep(const Common& c, const Params& prm, const Sweep& sw, const std::string& protocol,
                 double tf, double dt, const char* sorted_by, Clock::time_point t0) {
  check(mosaic_sweep_write_csv(sw.get(), c.out.c_str()));
  write_manifest_or_die(c, prm, protocol.c_str(), tf, dt, sorted_by, t0);

  int32_t rows = 0;
  check(mosaic_sweep_num_rows(sw.get(), &rows));
  int failed = 0;
  double dmin = 0, dmax = 0;
  bool first = true;
  for (int32_t i = 0; i < rows; ++i) {
    double d = 0;
    int32_t bad = 0;
    check(mosaic_sweep_row(sw.get(), i, nullptr, &d, nullptr, nullptr, nullptr, &bad));
    if (bad) {
      ++failed;
      continue;
    }
    if (first || d < dmin) dmin = d;
    if (first || d > dmax) dmax = d;
    first = false;
  }
  std::printf("rows=%d failed=%d D_bar range [%.6f, %.6f]\n", rows, failed, dmin, dmax);
  report_outputs(c);
  if (failed > 0) {
    std::fprintf(stderr, "mosaic: %d of %d points failed, their rows hold nan\n", failed, rows);
    return 1;
  }
  return 0;
}

int cmd_sweep(const Common& c, const SweepOpts& so) {
  auto t0 = Clock::now();
  Params prm;
  std::vector<double> grid;
  int32_t axis = MOSAIC_AXIS_LAMBDA_MHZ, protocol = MOSAIC_PROTOCOL_SINGLE;
  int32_t j0 = so.j0, dimer_n = so.dimer_n, period = so.comb_period, offset = so.comb_offset;
  double dimer_phi = so.dimer_phi, tf = c.tf_ns, dt = c.dt_ns;

  if (!c.preset.empty()) {
    int32_t kind = preset_kind_or_die(c.preset);
    if (kind == MOSAIC_PRESET_EVOLVE)
      die(2, "preset '" + c.preset + "' is an evolve preset; use the evolve subcommand");
    if (kind == MOSAIC_PRESET_QUENCH) {
      std::vector<int32_t> pos(64), sgn(64);
      int32_t count = 0;
      double qtf = 0, qdt = 0;
      check(mosaic_preset_quench_info(c.preset.c_str(), prm.out(), pos.data(), sgn.data(), 64,
                                      &count, &qtf, &qdt));
      apply_flags(c, prm.get());
      if (c.o_tf->count()) qtf = tf;
      if (c.o_dt->count()) qdt = dt;
      Sweep sw;
      check(mosaic_me_quench_scan(prm.get(), pos.data(), sgn.data(), count, qtf, qdt, c.workers,
                                  sw.out()));
      return finish_sweep(c, prm, sw, "me_quench", qtf, qdt, "init_energy", t0);
    }
    grid.resize(512);
    int32_t glen = 0;
    double ptf = 0, pdt = 0;
    check(mosaic_preset_sweep_info(c.preset.c_str(), prm.out(), &axis, &protocol, &j0, &dimer_n,
                                   &period, &offset, &ptf, &pdt, grid.data(),
                                   static_cast<int32_t>(grid.size()), &glen));
    grid.resize(glen);
    if (!c.o_tf->count()) tf = ptf;
    if (!c.o_dt->count()) dt = pdt;
  } else {
    prm = Params(mosaic_params_new());
  }
  apply_flags(c, prm.get());

  if (so.o_axis->count()) axis = parse_axis(so.axis);
  if (so.o_protocol->count()) protocol = parse_protocol(so.protocol);
  if (so.o_grid->count() || so.o_lo->count() || so.o_hi->count() || so.o_n->count())
    grid = build_grid(so);
  if (grid.empty()) die(2, "sweep needs --preset, --grid or --grid-lo/--grid-hi/--grid-n");
  if (so.o_j0->count()) j0 = so.j0;
  if (so.o_dimer_n->count()) dimer_n = so.dimer_n;
  if (so.o_dimer_phi->count()) dimer_phi = so.dimer_phi;
  if (so.o_period->count()) period = so.comb_period;
  if (so.o_offset->count()) offset = so.comb_offset;

  Sweep sw;
  check(mosaic_sweep_run(prm.get(), axis, grid.data(), static_cast<int32_t>(grid.size()), protocol,
                         j0, dimer_n, dimer_phi, period, offset, tf, dt, c.workers, sw.out()));
  std::string proto = std::string("sweep ") + axis_str(axis) + " " + protocol_str(protocol);
  return finish_sweep(c, prm, sw, proto, tf, dt, "grid", t0);
}

/* ---- rg ------------------------------------------------------------------ */

struct RgOpts {
  double mu_mhz = 0.0;
  bool verify = false;
  double grid_lo = 0.0, grid_hi = 0.0;
  int grid_n = 0;
  int j0 = 14;
  CLI::Option* o_mu = nullptr;
};

int cmd_rg(const Common& c, const RgOpts& ro) {
  auto t0 = Clock::now();
  Params prm = base_params(c);
  double j = 0, lambda = 0;
  check(mosaic_params_get_j_mhz(prm.get(), &j));
  check(mosaic_params_get_lambda_mhz(prm.get(), &lambda));

  double thr = 0;
  check(mosaic_threshold_nnn(j, lambda, &thr));
  std::printf("critical-extended threshold (uniform nnn): %.6f MHz at J=%.6f lambda=%.6f\n", thr, j,
              lambda);
  if (ro.o_mu->count()) {
    double thr_mu = 0;
    int32_t advisory = 0;
    check(mosaic_threshold_with_mu(j, lambda, ro.mu_mhz, &thr_mu, &advisory));
    std::printf("with nnnn mu=%.6f MHz: %.6f MHz%s\n", ro.mu_mhz, thr_mu,
                advisory ? " (advisory: mu above lambda, the closed form degrades)" : "");
  }
  if (!ro.verify) {
    if (!c.out.empty()) die(2, "--out is only written with --verify");
    return 0;
  }

  if (c.out.empty()) die(2, "rg --verify needs --out");
  if (ro.grid_n < 1 || ro.grid_hi < ro.grid_lo)
    die(2, "rg --verify needs --grid-lo/--grid-hi/--grid-n");
  std::vector<double> grid;
  for (int k = 0; k < ro.grid_n; ++k)
    grid.push_back(ro.grid_n == 1 ? ro.grid_lo
                                  : ro.grid_lo + (ro.grid_hi - ro.grid_lo) * k / (ro.grid_n - 1));

  std::vector<double> dbars(grid.size()), nrs(grid.size());
  int32_t found = 0;
  double onset = 0, predicted = 0, dref = 0;
  check(mosaic_verify_threshold(prm.get(), grid.data(), static_cast<int32_t>(grid.size()),
                                ro.mu_mhz, ro.j0, c.tf_ns, c.dt_ns, c.workers, &found, &onset,
                                &predicted, &dref, dbars.data(), nrs.data()));

  std::ofstream outf(c.out);
  if (!outf) die(1, "cannot write '" + c.out + "'");
  outf << "j_nn_mhz,d_bar,n_r_bar\n";
  char buf[100];
  for (size_t i = 0; i < grid.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", grid[i], dbars[i], nrs[i]);
    outf << buf;
  }
  outf.close();
  if (!outf) die(1, "cannot write '" + c.out + "'");
  write_manifest_or_die(c, prm, "rg_verify", c.tf_ns, c.dt_ns, "grid", t0);

  if (found)
    std::printf("onset J_nn=%.6f MHz, predicted %.6f MHz (d_ref=%.6f)\n", onset, predicted, dref);
  else
    std::printf("no onset on the grid; predicted %.6f MHz (d_ref=%.6f)\n", predicted, dref);
  report_outputs(c);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("mosaic lattice simulator ") + mosaic_version()};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  Common ce, cs, cl, cw, cr;
  EvolveOpts eo;
  SpectrumOpts po;
  LyapunovOpts lo;
  SweepOpts so;
  RgOpts ro;

  add_common(app, ce, "evolve", "time evolution of one initial state", true, true);
  eo.o_initial = ce.cmd
                     ->add_option("--initial", eo.initial,
                                  "single:<j0> | dimer:<n>:<phi> | comb:<period>:<offset>")
                     ->capture_default_str();

  add_common(app, cs, "spectrum", "eigenstate analysis and classification", true, false);
  cs.cmd->add_option("--edge-tol", po.edge_tol, "rad/ns margin for edge states in the ratio count")
      ->capture_default_str();

  add_common(app, cl, "lyapunov", "transfer-matrix exponents over an energy grid", true, false);
  lo.o_energy = cl.cmd->add_option("--energy", lo.energies, "energy sample, rad/ns (repeatable)")
                    ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  lo.o_lo = cl.cmd->add_option("--e-lo", lo.e_lo, "energy grid start, rad/ns");
  lo.o_hi = cl.cmd->add_option("--e-hi", lo.e_hi, "energy grid end, rad/ns");
  lo.o_n = cl.cmd->add_option("--e-n", lo.e_n, "energy grid points");
  cl.cmd->add_option("--chain-length", lo.chain_length, "transfer-matrix chain length")
      ->capture_default_str();
  cl.cmd->add_option("--tau", lo.tau, "gamma threshold separating critical from localized")
      ->capture_default_str();

  add_common(app, cw, "sweep", "parameter sweeps and quench scans", true, true);
  so.o_axis = cw.cmd->add_option("--axis", so.axis, "lambda | j | lr-scale | dimer-phase")
                  ->capture_default_str();
  so.o_protocol =
      cw.cmd->add_option("--protocol", so.protocol, "single | dimer | comb")->capture_default_str();
  so.o_grid = cw.cmd->add_option("--grid", so.grid_csv, "explicit grid, comma separated");
  so.o_lo = cw.cmd->add_option("--grid-lo", so.grid_lo, "grid start");
  so.o_hi = cw.cmd->add_option("--grid-hi", so.grid_hi, "grid end");
  so.o_n = cw.cmd->add_option("--grid-n", so.grid_n, "grid points");
  so.o_j0 = cw.cmd->add_option("--j0", so.j0, "single-quench launch site")->capture_default_str();
  so.o_dimer_n = cw.cmd->add_option("--dimer-n", so.dimer_n, "dimer left site")->capture_default_str();
  so.o_dimer_phi =
      cw.cmd->add_option("--dimer-phi", so.dimer_phi, "dimer phase, rad")->capture_default_str();
  so.o_period =
      cw.cmd->add_option("--comb-period", so.comb_period, "comb spacing")->capture_default_str();
  so.o_offset =
      cw.cmd->add_option("--comb-offset", so.comb_offset, "first comb site")->capture_default_str();

  add_common(app, cr, "rg", "closed-form thresholds, optional dynamical verification", false, true);
  ro.o_mu = cr.cmd->add_option("--mu-mhz", ro.mu_mhz, "fixed nnnn strength, MHz");
  cr.cmd->add_flag("--verify,!--no-verify", ro.verify, "sweep nnn strength, detect the onset dynamically");
  cr.cmd->add_option("--grid-lo", ro.grid_lo, "verify grid start, MHz");
  cr.cmd->add_option("--grid-hi", ro.grid_hi, "verify grid end, MHz");
  cr.cmd->add_option("--grid-n", ro.grid_n, "verify grid points");
  cr.cmd->add_option("--j0", ro.j0, "launch site for the verification quench")->capture_default_str();

  std::vector<std::string> args(argv + 1, argv + argc);
  args = expand_config(args);
  std::reverse(args.begin(), args.end());  // CLI11 takes the token list reversed
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (ce.cmd->parsed()) return cmd_evolve(ce, eo);
  if (cs.cmd->parsed()) return cmd_spectrum(cs, po);
  if (cl.cmd->parsed()) return cmd_lyapunov(cl, lo);
  if (cw.cmd->parsed()) return cmd_sweep(cw, so);
  if (cr.cmd->parsed()) return cmd_rg(cr, ro);
  return 2;
}
