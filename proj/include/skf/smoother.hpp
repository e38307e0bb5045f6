#ifndef SKF_SMOOTHER_HPP
#define SKF_SMOOTHER_HPP

#include <Eigen/Dense>
#include <vector>

#include "skf/filter.hpp"

namespace skf {

/// Fixed-interval (RTS) smoothing output. Covariances and gains are kept
/// only when requested; at production state dimensions each n x n matrix
/// per step dominates memory (K n^2 8 bytes total).
struct SmoothedTrajectory {
  std::vector<Eigen::VectorXd> means;         // x_t^s, length K
  std::vector<Eigen::MatrixXd> covs;          // P_t^s, length K (optional)
  std::vector<Eigen::MatrixXd> gains;         // G_t, length K-1 (optional)
  std::vector<Eigen::VectorXd> standardized;  // z_t^s, filled by standardize_smoothed
};

struct SmootherOptions {
  bool store_covs = false;
  bool store_gains = false;
};

/// RTS backward recursion over explicitly given filtered beliefs:
///   G_t = P_{t|t} A^T P_{t+1|t}^-1 (SPD solve),
///   x_t^s = x_{t|t} + G_t (x_{t+1}^s - x_{t+1|t}),
///   P_t^s = P_{t|t} + G_t (P_{t+1}^s - P_{t+1|t}) G_t^T,
/// initialized with the last filtered belief. Predicted quantities are
/// recomputed from the filtered ones. When A is exactly the identity the
/// multiplications by A are skipped. Failures carry the 1-based step index.
SmoothedTrajectory rts_smooth(const std::vector<Eigen::VectorXd>& filtered_means,
                              const std::vector<Eigen::MatrixXd>& filtered_covs,
                              const Eigen::MatrixXd& A, const Eigen::MatrixXd& Q,
                              const SmootherOptions& options = {});

/// Backward pass over a filter trajectory (requires store_filtered_cov).
SmoothedTrajectory rts_backward(const FilterTrajectory& traj,
                                const SmootherOptions& options = {});

/// Standardized smoothed estimates z_t^s = W_t^(alpha) P_{t|t-1}^(-1/2) x_t^s,
/// reusing the filter pass's standardization diagonal (re-exponentiated at
/// `alpha`) and recomputing each step's predicted covariance inverse square
/// root from the stored filtered covariances. Fills smoothed.standardized.
void standardize_smoothed(SmoothedTrajectory& smoothed, const FilterTrajectory& traj,
                          double alpha);

}

#endif
