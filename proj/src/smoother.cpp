#include "skf/smoother.hpp"

#include <stdexcept>

#include "skf/errors.hpp"

namespace skf {

namespace {

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& M) {
  return 0.5 * (M + M.transpose());
}

/// LDLT with a one-shot jitter retry, mirroring the filter's S solve.
Eigen::MatrixXd spd_solve(const Eigen::MatrixXd& M, const Eigen::MatrixXd& rhs,
                          const char* context) {
  Eigen::LLT<Eigen::MatrixXd> llt(M);
  if (llt.info() == Eigen::Success) return llt.solve(rhs);
  const double jitter = 1e-12 * M.trace() / static_cast<double>(M.rows());
  Eigen::MatrixXd Mj = M;
  Mj.diagonal().array() += jitter;
  llt.compute(Mj);
  if (llt.info() != Eigen::Success) throw numerical_error(context);
  return llt.solve(rhs);
}

}

SmoothedTrajectory rts_smooth(const std::vector<Eigen::VectorXd>& filtered_means,
                              const std::vector<Eigen::MatrixXd>& filtered_covs,
                              const Eigen::MatrixXd& A, const Eigen::MatrixXd& Q,
                              const SmootherOptions& options) {
  const int K = static_cast<int>(filtered_means.size());
  if (K < 1) throw std::invalid_argument("rts_smooth: empty trajectory");
  if (filtered_covs.size() != filtered_means.size())
    throw std::invalid_argument("rts_smooth: means/covs length mismatch");
  const Eigen::Index n = filtered_means[0].size();
  if (A.rows() != n || A.cols() != n || Q.rows() != n || Q.cols() != n)
    throw std::invalid_argument("rts_smooth: dimension mismatch");

  const bool identity_A = A.isIdentity(0.0);

  SmoothedTrajectory out;
  out.means.resize(static_cast<std::size_t>(K));
  if (options.store_covs) out.covs.resize(static_cast<std::size_t>(K));
  if (options.store_gains) out.gains.resize(static_cast<std::size_t>(K > 0 ? K - 1 : 0));

  // Initialization: the last smoothed belief is the last filtered one.
  out.means.back() = filtered_means.back();
  Eigen::VectorXd mean_next = filtered_means.back();
  Eigen::MatrixXd cov_next = filtered_covs.back();
  if (options.store_covs) out.covs.back() = cov_next;

  for (int t = K - 2; t >= 0; --t) {
    const std::size_t ti = static_cast<std::size_t>(t);
    const Eigen::VectorXd& xf = filtered_means[ti];
    const Eigen::MatrixXd& Pf = filtered_covs[ti];

    Eigen::VectorXd x_pred;
    Eigen::MatrixXd P_pred;
    if (identity_A) {
      x_pred = xf;
      P_pred = Pf + Q;
    } else {
      x_pred = A * xf;
      P_pred = symmetrized(A * Pf * A.transpose() + Q);
    }

    Eigen::MatrixXd G;
    try {
      // G = Pf A^T P_pred^-1  <=>  G^T = P_pred^-1 A Pf^T.
      Eigen::MatrixXd APfT;
      if (identity_A)
        APfT = Pf.transpose();
      else
        APfT = A * Pf.transpose();
      G = spd_solve(P_pred, APfT, "rts_smooth: predicted covariance not invertible")
              .transpose();
    } catch (const numerical_error& e) {
      throw numerical_error(e.what(), t + 1);
    }

    mean_next = xf + G * (mean_next - x_pred);
    cov_next = symmetrized(Pf + G * (cov_next - P_pred) * G.transpose());

    out.means[ti] = mean_next;
    if (options.store_covs) out.covs[ti] = cov_next;
    if (options.store_gains) out.gains[ti] = std::move(G);
  }
  return out;
}

SmoothedTrajectory rts_backward(const FilterTrajectory& traj,
                                const SmootherOptions& options) {
  const int K = traj.n_steps();
  if (K < 1) throw std::invalid_argument("rts_backward: empty trajectory");
  if (!traj.options.store_filtered_cov)
    throw std::invalid_argument(
        "rts_backward: trajectory was run without store_filtered_cov");

  std::vector<Eigen::VectorXd> means(static_cast<std::size_t>(K));
  std::vector<Eigen::MatrixXd> covs(static_cast<std::size_t>(K));
  for (int t = 0; t < K; ++t) {
    means[static_cast<std::size_t>(t)] = traj.steps[static_cast<std::size_t>(t)].filtered.mean;
    covs[static_cast<std::size_t>(t)] = traj.steps[static_cast<std::size_t>(t)].filtered.cov;
  }
  const int n = traj.state_dim();
  const Eigen::MatrixXd A = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd Q = traj.tau_i_sq * Eigen::MatrixXd::Identity(n, n);
  return rts_smooth(means, covs, A, Q, options);
}

void standardize_smoothed(SmoothedTrajectory& smoothed, const FilterTrajectory& traj,
                          double alpha) {
  const int K = traj.n_steps();
  if (static_cast<int>(smoothed.means.size()) != K)
    throw std::invalid_argument("standardize_smoothed: length mismatch");
  if (K < 1) return;
  if (!traj.options.store_filtered_cov)
    throw std::invalid_argument(
        "standardize_smoothed: trajectory was run without store_filtered_cov");

  const int n = traj.state_dim();
  smoothed.standardized.resize(static_cast<std::size_t>(K));

  // P_{t|t-1} is rebuilt exactly as the filter built it: previous filtered
  // covariance (P0 = theta0 I before the first step) plus the random-walk
  // drive on the diagonal.
  Eigen::MatrixXd P_pred = traj.theta0 * Eigen::MatrixXd::Identity(n, n);
  for (int t = 0; t < K; ++t) {
    const std::size_t ti = static_cast<std::size_t>(t);
    if (t > 0) P_pred = traj.steps[ti - 1].filtered.cov;
    P_pred.diagonal().array() += traj.tau_i_sq;

    const SpectralInvSqrt inv_sqrt =
        spectral_inv_sqrt(P_pred, traj.options.inv_sqrt_eps_rel);
    const Eigen::VectorXd weights =
        weights_from_diagonal(traj.steps[ti].std_diag, alpha, traj.options.weight_floor);
    smoothed.standardized[ti] =
        weights.asDiagonal() * inv_sqrt.apply(smoothed.means[ti]);
  }
}

}
