#include "skf/priors.hpp"

#include <cmath>
#include <stdexcept>

namespace skf {

double prior_variance_from_pm_snr(double pm_snr_db, double sigma, double amplitude,
                                  int n_sources) {
  if (!(sigma > 0.0)) throw std::invalid_argument("prior variance: sigma must be positive");
  if (!(amplitude > 0.0))
    throw std::invalid_argument("prior variance: amplitude must be positive");
  if (n_sources < 1) throw std::invalid_argument("prior variance: need n_sources >= 1");
  const double theta0_tot = std::pow(10.0, pm_snr_db / 10.0);
  return theta0_tot * sigma * sigma * amplitude * amplitude / n_sources;
}

double evolution_variance_from_ep_snr(double ep_snr_db, double theta0, int n_steps) {
  if (!(theta0 > 0.0)) throw std::invalid_argument("evolution variance: theta0 must be positive");
  if (n_steps < 1) throw std::invalid_argument("evolution variance: need n_steps >= 1");
  const double kappa = std::pow(10.0, ep_snr_db / 20.0);
  return kappa * kappa * theta0 / n_steps;
}

PriorSpec make_prior_spec(double pm_snr_db, double ep_snr_db, double sigma,
                          double amplitude, int n_sources, int n_steps) {
  PriorSpec spec;
  spec.pm_snr_db = pm_snr_db;
  spec.ep_snr_db = ep_snr_db;
  spec.sigma = sigma;
  spec.amplitude = amplitude;
  spec.n_sources = n_sources;
  spec.n_steps = n_steps;
  spec.theta0 = prior_variance_from_pm_snr(pm_snr_db, sigma, amplitude, n_sources);
  spec.tau_i_sq = evolution_variance_from_ep_snr(ep_snr_db, spec.theta0, n_steps);
  return spec;
}

void build_model_matrices(const PriorSpec& spec, int state_dim, Eigen::MatrixXd& P0,
                          Eigen::MatrixXd& Q, Eigen::MatrixXd& A) {
  if (state_dim != 3 * spec.n_sources)
    throw std::invalid_argument("build_model_matrices: state_dim must equal 3 * n_sources");
  A = Eigen::MatrixXd::Identity(state_dim, state_dim);
  P0 = spec.theta0 * Eigen::MatrixXd::Identity(state_dim, state_dim);
  Q = spec.tau_i_sq * Eigen::MatrixXd::Identity(state_dim, state_dim);
}

}
