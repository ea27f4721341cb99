#include "dynamics.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace mosaic {

namespace {

// time grid with dt exactly dividing tf
std::vector<double> time_grid(double tf_ns, double dt_ns) {
  if (!(tf_ns > 0.0) || !(dt_ns > 0.0))
    throw error(errc::invalid_params, "tf_ns and dt_ns must be positive");
  double steps = tf_ns / dt_ns;
  long long n = std::llround(steps);
  if (n < 1 || std::fabs(steps - static_cast<double>(n)) > 1e-9)
    throw error(errc::invalid_params, "dt_ns must divide tf_ns");
  std::vector<double> t(n + 1);
  for (long long i = 0; i <= n; ++i) t[i] = static_cast<double>(i) * dt_ns;
  return t;
}

double width_of(const Eigen::VectorXd& dens, int j0) {
  double w = 0.0;
  for (int j = 1; j <= dens.size(); ++j) w += std::sqrt(std::fabs(double(j - j0))) * dens[j - 1];
  return w;
}

double right_of(const Eigen::VectorXd& dens, int j0) {
  double s = 0.0;
  for (int j = j0 + 1; j <= dens.size(); ++j) s += dens[j - 1];
  return s;
}

}  // namespace

double trapezoid(const std::vector<double>& values, double dt) {
  if (values.size() < 2) throw error(errc::invalid_params, "trapezoid needs at least two samples");
  double s = 0.5 * (values.front() + values.back());
  for (size_t i = 1; i + 1 < values.size(); ++i) s += values[i];
  return s * dt;
}

Eigensystem diagonalize(const Eigen::MatrixXd& h) {
  if (h.rows() != h.cols()) throw error(errc::dimension_mismatch, "matrix must be square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success)
    throw error(errc::eigensolver_failure, "symmetric eigensolver did not converge");
  Eigensystem es{solver.eigenvalues(), solver.eigenvectors()};
  double scale = h.cwiseAbs().maxCoeff();
  if (scale == 0.0) return es;
  double resid = (h * es.vectors - es.vectors * es.energies.asDiagonal()).cwiseAbs().maxCoeff();
  if (!(resid <= 1e-8 * scale * h.rows()))
    throw error(errc::eigensolver_failure, "eigenpair residual out of tolerance");
  return es;
}

Eigen::VectorXcd make_single(int n_sites, int j) {
  if (n_sites < 1) throw error(errc::invalid_params, "n_sites must be positive");
  if (j < 1 || j > n_sites) throw error(errc::index_range, "site index out of range");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(n_sites);
  psi[j - 1] = 1.0;
  return psi;
}

Eigen::VectorXcd make_dimer(int n_sites, int n, double phi) {
  if (n < 1 || n + 1 > n_sites) throw error(errc::index_range, "dimer sites out of range");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(n_sites);
  double r = 1.0 / std::sqrt(2.0);
  psi[n - 1] = r;
  psi[n] = r * std::complex<double>(std::cos(phi), std::sin(phi));
  return psi;
}

std::vector<int> comb_sites(int n_sites, int period, int offset) {
  if (period < 1) throw error(errc::invalid_params, "comb period must be positive");
  if (offset < 1 || offset > n_sites) throw error(errc::index_range, "comb offset out of range");
  std::vector<int> sites;
  for (int j = offset; j <= n_sites; j += period) sites.push_back(j);
  return sites;
}

Eigen::VectorXcd propagate_to(const Eigensystem& es, const Eigen::VectorXcd& psi0, double t_ns) {
  if (psi0.size() != es.vectors.rows())
    throw error(errc::dimension_mismatch, "state length must match eigensystem size");
  Eigen::VectorXcd c = es.vectors.transpose() * psi0;
  for (Eigen::Index k = 0; k < c.size(); ++k) {
    double ph = -es.energies[k] * t_ns;
    c[k] *= std::complex<double>(std::cos(ph), std::sin(ph));
  }
  return es.vectors * c;
}

Eigen::VectorXd density(const Eigen::VectorXcd& psi) { return psi.cwiseAbs2(); }

double fractal_dimension_density(const Eigen::VectorXd& dens) {
  const auto n = dens.size();
  if (n < 2) throw error(errc::invalid_params, "fractal dimension needs at least two sites");
  double total = dens.sum();
  if (!(total > 0.0)) throw error(errc::invalid_params, "density must have positive weight");
  double p4 = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    double p = dens[j] / total;
    p4 += p * p;
  }
  return -std::log(p4) / std::log(static_cast<double>(n));
}

double fractal_dimension(const Eigen::VectorXcd& psi) {
  return fractal_dimension_density(density(psi));
}

Eigen::VectorXd comb_density(const Eigensystem& es, const std::vector<int>& sites, double t_ns) {
  const auto n = es.vectors.rows();
  if (sites.empty()) throw error(errc::invalid_params, "comb needs at least one site");
  Eigen::MatrixXcd b(n, static_cast<Eigen::Index>(sites.size()));
  for (size_t k = 0; k < sites.size(); ++k) {
    if (sites[k] < 1 || sites[k] > n) throw error(errc::index_range, "comb site out of range");
    b.col(k) = es.vectors.row(sites[k] - 1).transpose().cast<std::complex<double>>();
  }
  for (Eigen::Index k = 0; k < es.energies.size(); ++k) {
    double ph = -es.energies[k] * t_ns;
    b.row(k) *= std::complex<double>(std::cos(ph), std::sin(ph));
  }
  Eigen::MatrixXcd cols = es.vectors * b;
  return cols.cwiseAbs2().rowwise().sum();
}

namespace {

EvolutionRecord finish_record(EvolutionRecord rec, double dt_ns) {
  const double tf = rec.times.back();
  std::vector<double> dd(rec.times.size()), dw(rec.times.size()), nr(rec.times.size());
  for (size_t i = 0; i < rec.times.size(); ++i) {
    dd[i] = rec.d_trace[i] - rec.d_trace[0];
    dw[i] = rec.w_trace[i] - rec.w_trace[0];
    nr[i] = right_of(rec.densities.row(i), rec.j0);
  }
  rec.d_bar = trapezoid(dd, dt_ns) / tf;
  rec.m_integrated = trapezoid(dw, dt_ns) / tf;
  rec.n_r_bar = trapezoid(nr, dt_ns) / tf;
  return rec;
}

}  // namespace

EvolutionRecord evolve_record(const Eigen::MatrixXd& h, const Eigen::VectorXcd& psi0, int j0,
                              double tf_ns, double dt_ns) {
  if (j0 < 1 || j0 > h.rows()) throw error(errc::index_range, "reference site out of range");
  Eigensystem es = diagonalize(h);
  EvolutionRecord rec;
  rec.times = time_grid(tf_ns, dt_ns);
  rec.j0 = j0;
  rec.init_energy_radns = initial_state_energy(h, psi0);
  const auto n = h.rows();
  rec.densities.resize(static_cast<Eigen::Index>(rec.times.size()), n);
  rec.d_trace.resize(rec.times.size());
  rec.w_trace.resize(rec.times.size());
  Eigen::VectorXcd c0 = es.vectors.transpose() * psi0;
  for (size_t i = 0; i < rec.times.size(); ++i) {
    Eigen::VectorXcd c = c0;
    for (Eigen::Index k = 0; k < c.size(); ++k) {
      double ph = -es.energies[k] * rec.times[i];
      c[k] *= std::complex<double>(std::cos(ph), std::sin(ph));
    }
    Eigen::VectorXd dens = (es.vectors * c).cwiseAbs2();
    rec.densities.row(i) = dens;
    rec.d_trace[i] = fractal_dimension_density(dens);
    rec.w_trace[i] = width_of(dens, j0);
  }
  return finish_record(std::move(rec), dt_ns);
}

EvolutionRecord evolve_comb_record(const Eigen::MatrixXd& h, const std::vector<int>& sites,
                                   double tf_ns, double dt_ns) {
  Eigensystem es = diagonalize(h);
  EvolutionRecord rec;
  rec.times = time_grid(tf_ns, dt_ns);
  if (sites.empty()) throw error(errc::invalid_params, "comb needs at least one site");
  rec.j0 = sites.front();
  rec.init_energy_radns = 0.0;
  for (int j : sites) {
    Eigen::VectorXcd e = make_single(static_cast<int>(h.rows()), j);
    rec.init_energy_radns += initial_state_energy(h, e);
  }
  rec.densities.resize(static_cast<Eigen::Index>(rec.times.size()), h.rows());
  rec.d_trace.resize(rec.times.size());
  rec.w_trace.resize(rec.times.size());
  for (size_t i = 0; i < rec.times.size(); ++i) {
    Eigen::VectorXd dens = comb_density(es, sites, rec.times[i]);
    rec.densities.row(i) = dens;
    rec.d_trace[i] = fractal_dimension_density(dens);
    rec.w_trace[i] = width_of(dens, rec.j0);
  }
  return finish_record(std::move(rec), dt_ns);
}

double time_averaged_d(const Eigen::MatrixXd& h, const Eigen::VectorXcd& psi0, double tf_ns,
                       double dt_ns) {
  return evolve_record(h, psi0, 1, tf_ns, dt_ns).d_bar;
}

double integrated_width(const Eigen::MatrixXd& h, const Eigen::VectorXcd& psi0, int j0,
                        double tf_ns, double dt_ns) {
  return evolve_record(h, psi0, j0, tf_ns, dt_ns).m_integrated;
}

double right_population(const Eigen::MatrixXd& h, const Eigen::VectorXcd& psi0, int j0,
                        double tf_ns, double dt_ns) {
  return evolve_record(h, psi0, j0, tf_ns, dt_ns).n_r_bar;
}

}  // namespace mosaic
