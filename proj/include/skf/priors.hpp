#ifndef SKF_PRIORS_HPP
#define SKF_PRIORS_HPP

#include <Eigen/Dense>

namespace skf {

/// Decibel value of an amplitude ratio: dB(x) = 20 log10(x).
inline double amplitude_db(double x) { return 20.0 * std::log10(x); }

/// Prior parameterization: PM-SNR fixes the initial covariance
/// P0 = theta0 I, EP-SNR fixes the per-step random-walk drive
/// Q = tau_i_sq I, with the net evolution variance K tau_i_sq = kappa^2 theta0.
struct PriorSpec {
  double pm_snr_db = 0.0;
  double ep_snr_db = 0.0;
  double theta0 = 0.0;    // per-component prior variance
  double tau_i_sq = 0.0;  // per-step evolution variance
  int n_sources = 0;      // node count N
  int n_steps = 0;        // chain length K
  double sigma = 0.0;     // noise std entering the theta0 formula
  double amplitude = 0.0; // peak source amplitude A
};

/// theta0 = theta0_tot sigma^2 A^2 / N with theta0_tot = 10^(pm_snr_db/10).
double prior_variance_from_pm_snr(double pm_snr_db, double sigma, double amplitude,
                                  int n_sources);

/// tau_i^2 = kappa^2 theta0 / K with kappa = 10^(ep_snr_db/20).
double evolution_variance_from_ep_snr(double ep_snr_db, double theta0, int n_steps);

/// Convenience constructor running both formulas and recording the inputs.
PriorSpec make_prior_spec(double pm_snr_db, double ep_snr_db, double sigma,
                          double amplitude, int n_sources, int n_steps);

/// Materializes the model matrices: A = I, P0 = theta0 I, Q = tau_i^2 I.
/// state_dim must equal 3 * n_sources.
void build_model_matrices(const PriorSpec& spec, int state_dim, Eigen::MatrixXd& P0,
                          Eigen::MatrixXd& Q, Eigen::MatrixXd& A);

}

#endif
