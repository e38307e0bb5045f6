#ifndef SKF_FILTER_HPP
#define SKF_FILTER_HPP

#include <Eigen/Dense>
#include <vector>

#include "skf/forward.hpp"
#include "skf/priors.hpp"
#include "skf/signal.hpp"

namespace skf {

/// Gaussian state belief. `cov` may be left empty (0x0) by trajectory
/// storage policies that drop covariances to save memory.
struct GaussianBelief {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;
};

/// Kalman prediction: mean' = A mean, cov' = A cov A^T + Q (symmetrized).
/// When A is exactly the identity the multiplications are skipped, so the
/// result is the elementwise sum cov + Q.
GaussianBelief predict(const GaussianBelief& prev, const Eigen::MatrixXd& A,
                       const Eigen::MatrixXd& Q);

struct UpdateResult {
  GaussianBelief filtered;
  Eigen::MatrixXd gain;            // K = P L^T S^-1
  Eigen::MatrixXd innovation_cov;  // S = L P L^T + R
};

/// Kalman measurement update. S is solved via Cholesky with a one-shot
/// jitter retry (1e-12 trace(S)/m added to the diagonal); if that still
/// fails a skf::numerical_error is thrown. No explicit inverse is formed.
UpdateResult update(const GaussianBelief& pred, const Eigen::MatrixXd& L,
                    const Eigen::MatrixXd& R, const Eigen::VectorXd& y);

/// Spectral factorization of M^(-1/2) kept in factored form so it can be
/// applied to tall matrices in O(n^2 k) instead of materializing an n x n
/// product. Eigenvalues below eps_rel * lambda_max are clamped to that floor.
struct SpectralInvSqrt {
  Eigen::MatrixXd eigvecs;
  Eigen::VectorXd inv_sqrt_eigvals;

  Eigen::MatrixXd apply(const Eigen::MatrixXd& X) const {
    return eigvecs * (inv_sqrt_eigvals.asDiagonal() * (eigvecs.transpose() * X));
  }
  /// Full symmetric inverse square root V diag(lambda^-1/2) V^T.
  Eigen::MatrixXd materialize() const {
    return eigvecs * inv_sqrt_eigvals.asDiagonal() * eigvecs.transpose();
  }
};

/// Factored symmetric inverse square root of an SPD matrix.
/// Throws skf::numerical_error when the largest eigenvalue is <= 0.
SpectralInvSqrt spectral_inv_sqrt(const Eigen::MatrixXd& M, double eps_rel = 1e-12);

/// Symmetric (spectral) inverse square root as a dense matrix.
Eigen::MatrixXd sym_inv_sqrt(const Eigen::MatrixXd& M, double eps_rel = 1e-12);

/// Diagonal of P^(-1/2) K S K^T P^(-1/2) given B = P^(-1/2) K, computed
/// row-wise as d_i = B_i S B_i^T without forming the n x n product.
Eigen::VectorXd standardization_diagonal(const Eigen::MatrixXd& B,
                                         const Eigen::MatrixXd& S);

/// w_i = d_i^(-alpha), with d_i clamped at `floor` (default 1e-300) so
/// numerically silent sources do not produce infinities. Throws
/// skf::numerical_error when the whole diagonal is zero.
Eigen::VectorXd weights_from_diagonal(const Eigen::VectorXd& d, double alpha,
                                      double floor = 1e-300);

/// Standardization weights with tunable exponent; alpha = 0.5 is the
/// original definition Diag[P^(-1/2) K S K^T P^(-1/2)]^(-1/2).
Eigen::VectorXd standardization_weights(const Eigen::MatrixXd& P_inv_sqrt,
                                        const Eigen::MatrixXd& K,
                                        const Eigen::MatrixXd& S, double alpha);

/// Standardized estimate z = diag(weights) P^(-1/2) mean.
Eigen::VectorXd standardize(const Eigen::VectorXd& filtered_mean,
                            const Eigen::MatrixXd& P_inv_sqrt,
                            const Eigen::VectorXd& weights);

/// One filter step: beliefs, gain, innovation covariance, the
/// standardization diagonal d_t, weights d_t^(-alpha) and the
/// standardized estimate z_t. Covariance members may be empty depending
/// on the trajectory's storage policy; their traces are always recorded.
struct StepRecord {
  GaussianBelief predicted;
  GaussianBelief filtered;
  Eigen::MatrixXd gain;
  Eigen::MatrixXd innovation_cov;
  Eigen::VectorXd std_diag;
  Eigen::VectorXd weights;
  Eigen::VectorXd standardized;
  double filtered_cov_trace = 0.0;
  double innovation_norm = 0.0;
};

struct FilterOptions {
  bool store_filtered_cov = false;   // required by the RTS smoother
  bool store_predicted_cov = false;  // debugging only
  double inv_sqrt_eps_rel = 1e-12;
  double weight_floor = 1e-300;
};

/// Full forward pass output plus the model it was run with (A = I,
/// P0 = theta0 I, Q = tau_i_sq I, R = noise_var I).
struct FilterTrajectory {
  std::vector<StepRecord> steps;
  double alpha = 0.5;
  Eigen::MatrixXd gain_matrix;  // the L the filter saw (state units)
  double theta0 = 0.0;
  double tau_i_sq = 0.0;
  double noise_var = 0.0;
  FilterOptions options;

  int n_steps() const { return static_cast<int>(steps.size()); }
  int state_dim() const { return static_cast<int>(gain_matrix.cols()); }
};

/// Standardized Kalman filter over all measurement columns: predict,
/// update, standardization weights, standardized estimate, in that order.
/// Standardization never feeds back into the mean/covariance recursion.
/// Numerical failures carry the 1-based step index.
FilterTrajectory run_filter(const Eigen::MatrixXd& gain_matrix, const PriorSpec& prior,
                            const Eigen::MatrixXd& measurements, double noise_std,
                            double alpha, const FilterOptions& options = {});

/// Spec-level convenience overload operating on the forward-model types.
FilterTrajectory run_filter(const LeadField& lead, const PriorSpec& prior,
                            const MeasurementSet& measurements, double alpha,
                            const FilterOptions& options = {});

}

#endif
