#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace mosaic {

// inverse golden ratio, the default incommensurate modulation frequency
inline constexpr double kGoldenAlpha = 0.6180339887498948482;
inline constexpr double kPi = 3.141592653589793238462643383279502884;

struct LongRangeBond {
  int m = 0;  // 1-based site indices, m < n, |m - n| >= 2
  int n = 0;
  double strength_mhz = 0.0;
};

struct MosaicParams {
  int n_sites = 24;
  double j_hop_mhz = 4.0;   // even-bond modulation amplitude J
  double lambda_mhz = 4.0;  // odd-bond uniform coupling
  double v0_mhz = 0.0;      // on-site modulation amplitude
  double theta = kPi / 5.0;
  double alpha = kGoldenAlpha;
  bool periodic = false;
  std::vector<LongRangeBond> long_range;
};

// throws error(errc::invalid_params) naming the offending field
void validate(const MosaicParams& p);

// bond j couples sites (j, j+1), 1-based; odd bonds are uniform lambda,
// even bonds carry the cosine modulation. Values in MHz.
double coupling_at(const MosaicParams& p, int j);

// site potential, 1-based. Odd sites sample the modulation at j-1 so each
// two-site block shares one modulation value with its even bond.
double potential_at(const MosaicParams& p, int j);

struct Sequences {
  std::vector<double> bonds;       // couplings, bond j at index j-1
  std::vector<double> potentials;  // site j at index j-1
};

Sequences build_sequences(const MosaicParams& p);

// even bonds whose |J_j| falls below eps * 2J, ascending
std::vector<int> find_idz_bonds(const MosaicParams& p, double epsilon);

// k-th Fibonacci rational approximant p/q of the inverse golden ratio,
// k = 1 gives 1/2
std::pair<long long, long long> fibonacci_approximant(int k);

}  // namespace mosaic
