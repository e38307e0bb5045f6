#include "skf/filter.hpp"

#include <cmath>
#include <stdexcept>

#include "skf/errors.hpp"

namespace skf {

namespace {

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& M) {
  return 0.5 * (M + M.transpose());
}

}

GaussianBelief predict(const GaussianBelief& prev, const Eigen::MatrixXd& A,
                       const Eigen::MatrixXd& Q) {
  const Eigen::Index n = prev.mean.size();
  if (A.rows() != n || A.cols() != n || Q.rows() != n || Q.cols() != n ||
      prev.cov.rows() != n || prev.cov.cols() != n)
    throw std::invalid_argument("predict: dimension mismatch");

  GaussianBelief out;
  if (A.isIdentity(0.0)) {
    out.mean = prev.mean;
    out.cov = symmetrized(prev.cov + Q);
  } else {
    out.mean = A * prev.mean;
    out.cov = symmetrized(A * prev.cov * A.transpose() + Q);
  }
  return out;
}

namespace {

/// Cholesky of S with a one-shot jitter retry. Throws on failure.
Eigen::LLT<Eigen::MatrixXd> factor_innovation(const Eigen::MatrixXd& S) {
  Eigen::LLT<Eigen::MatrixXd> llt(S);
  if (llt.info() == Eigen::Success) return llt;
  const double jitter = 1e-12 * S.trace() / static_cast<double>(S.rows());
  Eigen::MatrixXd Sj = S;
  Sj.diagonal().array() += jitter;
  llt.compute(Sj);
  if (llt.info() != Eigen::Success)
    throw numerical_error("innovation covariance is not positive definite");
  return llt;
}

}

UpdateResult update(const GaussianBelief& pred, const Eigen::MatrixXd& L,
                    const Eigen::MatrixXd& R, const Eigen::VectorXd& y) {
  const Eigen::Index n = pred.mean.size();
  const Eigen::Index m = L.rows();
  if (L.cols() != n || pred.cov.rows() != n || pred.cov.cols() != n ||
      R.rows() != m || R.cols() != m || y.size() != m)
    throw std::invalid_argument("update: dimension mismatch");

  const Eigen::MatrixXd PLt = pred.cov * L.transpose();       // n x m
  const Eigen::MatrixXd S = symmetrized(L * PLt + R);         // m x m
  const auto llt = factor_innovation(S);

  UpdateResult out;
  out.innovation_cov = S;
  out.gain = llt.solve(PLt.transpose()).transpose();          // K = P L^T S^-1
  const Eigen::VectorXd innovation = y - L * pred.mean;
  out.filtered.mean = pred.mean + out.gain * innovation;
  out.filtered.cov = symmetrized(pred.cov - out.gain * S * out.gain.transpose());
  return out;
}

SpectralInvSqrt spectral_inv_sqrt(const Eigen::MatrixXd& M, double eps_rel) {
  if (M.rows() != M.cols()) throw std::invalid_argument("spectral_inv_sqrt: non-square input");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(M);
  if (eig.info() != Eigen::Success)
    throw numerical_error("spectral_inv_sqrt: eigendecomposition failed");
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  const double lambda_max = lambda.maxCoeff();
  if (!(lambda_max > 0.0))
    throw numerical_error("spectral_inv_sqrt: matrix has no positive spectrum");

  const double floor = eps_rel * lambda_max;
  SpectralInvSqrt out;
  out.eigvecs = eig.eigenvectors();
  out.inv_sqrt_eigvals = lambda.cwiseMax(floor).cwiseSqrt().cwiseInverse();
  return out;
}

Eigen::MatrixXd sym_inv_sqrt(const Eigen::MatrixXd& M, double eps_rel) {
  return spectral_inv_sqrt(M, eps_rel).materialize();
}

Eigen::VectorXd standardization_diagonal(const Eigen::MatrixXd& B,
                                         const Eigen::MatrixXd& S) {
  if (B.cols() != S.rows() || S.rows() != S.cols())
    throw std::invalid_argument("standardization_diagonal: dimension mismatch");
  return (B.array() * (B * S).array()).rowwise().sum();
}

Eigen::VectorXd weights_from_diagonal(const Eigen::VectorXd& d, double alpha,
                                      double floor) {
  if (!(alpha > 0.0)) throw std::invalid_argument("weights: alpha must be positive");
  if (!(d.maxCoeff() > 0.0))
    throw numerical_error("standardization diagonal is identically zero");
  return d.cwiseMax(floor).array().pow(-alpha);
}

Eigen::VectorXd standardization_weights(const Eigen::MatrixXd& P_inv_sqrt,
                                        const Eigen::MatrixXd& K,
                                        const Eigen::MatrixXd& S, double alpha) {
  if (P_inv_sqrt.cols() != K.rows())
    throw std::invalid_argument("standardization_weights: dimension mismatch");
  const Eigen::MatrixXd B = P_inv_sqrt * K;
  return weights_from_diagonal(standardization_diagonal(B, S), alpha);
}

Eigen::VectorXd standardize(const Eigen::VectorXd& filtered_mean,
                            const Eigen::MatrixXd& P_inv_sqrt,
                            const Eigen::VectorXd& weights) {
  if (P_inv_sqrt.cols() != filtered_mean.size() || weights.size() != P_inv_sqrt.rows())
    throw std::invalid_argument("standardize: dimension mismatch");
  return weights.asDiagonal() * (P_inv_sqrt * filtered_mean);
}

FilterTrajectory run_filter(const Eigen::MatrixXd& gain_matrix, const PriorSpec& prior,
                            const Eigen::MatrixXd& measurements, double noise_std,
                            double alpha, const FilterOptions& options) {
  const Eigen::Index m = gain_matrix.rows();
  const Eigen::Index n = gain_matrix.cols();
  const Eigen::Index n_steps = measurements.cols();
  if (measurements.rows() != m)
    throw std::invalid_argument("run_filter: measurement rows != electrodes");
  if (n_steps < 1) throw std::invalid_argument("run_filter: need at least one step");
  if (!(alpha > 0.0)) throw std::invalid_argument("run_filter: alpha must be positive");
  if (!(noise_std > 0.0)) throw std::invalid_argument("run_filter: noise_std must be positive");

  FilterTrajectory traj;
  traj.alpha = alpha;
  traj.gain_matrix = gain_matrix;
  traj.theta0 = prior.theta0;
  traj.tau_i_sq = prior.tau_i_sq;
  traj.noise_var = noise_std * noise_std;
  traj.options = options;
  traj.steps.reserve(static_cast<std::size_t>(n_steps));

  const Eigen::MatrixXd R = traj.noise_var * Eigen::MatrixXd::Identity(m, m);

  GaussianBelief belief;
  belief.mean = Eigen::VectorXd::Zero(n);  // m0 = 0
  belief.cov = prior.theta0 * Eigen::MatrixXd::Identity(n, n);

  for (Eigen::Index t = 0; t < n_steps; ++t) {
    const int step_index = static_cast<int>(t) + 1;
    try {
      StepRecord rec;

      GaussianBelief pred = belief;
      pred.cov.diagonal().array() += prior.tau_i_sq;  // A = I random walk

      const SpectralInvSqrt pred_inv_sqrt =
          spectral_inv_sqrt(pred.cov, options.inv_sqrt_eps_rel);

      UpdateResult upd = update(pred, gain_matrix, R, measurements.col(t));

      rec.innovation_norm = (measurements.col(t) - gain_matrix * pred.mean).norm();
      rec.filtered_cov_trace = upd.filtered.cov.trace();

      const Eigen::MatrixXd B = pred_inv_sqrt.apply(upd.gain);
      rec.std_diag = standardization_diagonal(B, upd.innovation_cov);
      rec.weights = weights_from_diagonal(rec.std_diag, alpha, options.weight_floor);
      rec.standardized =
          rec.weights.asDiagonal() * pred_inv_sqrt.apply(upd.filtered.mean);

      rec.predicted.mean = std::move(pred.mean);
      if (options.store_predicted_cov) rec.predicted.cov = std::move(pred.cov);
      rec.gain = std::move(upd.gain);
      rec.innovation_cov = std::move(upd.innovation_cov);
      rec.filtered.mean = upd.filtered.mean;
      if (options.store_filtered_cov) rec.filtered.cov = upd.filtered.cov;

      belief = std::move(upd.filtered);
      traj.steps.push_back(std::move(rec));
    } catch (const numerical_error& e) {
      if (e.step() >= 0) throw;
      throw numerical_error(e.what(), step_index);
    }
  }
  return traj;
}

FilterTrajectory run_filter(const LeadField& lead, const PriorSpec& prior,
                            const MeasurementSet& measurements, double alpha,
                            const FilterOptions& options) {
  return run_filter(lead.matrix, prior, measurements.noisy, measurements.noise_std,
                    alpha, options);
}

}
