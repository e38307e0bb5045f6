#ifndef SKF_SIGNAL_HPP
#define SKF_SIGNAL_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "skf/forward.hpp"
#include "skf/geometry.hpp"

namespace skf {

/// Two dipoles: one deep (thalamic analog) and one superficial
/// (tangential cortical analog). Moment directions are unit vectors.
struct SourcePlacement {
  int deep_node = -1;
  Eigen::Vector3d deep_moment_dir = Eigen::Vector3d::UnitZ();
  int superficial_node = -1;
  Eigen::Vector3d superficial_moment_dir = Eigen::Vector3d::UnitX();
};

/// Checks the placement invariants against a source space: distinct
/// nodes, the deep node strictly closer to the center, unit moments.
void validate_placement(const SourcePlacement& placement, const SourceSpace& space);

/// Sampled source amplitude time courses. Values are in `amplitude_unit`
/// (nA*m by default); conversion to SI happens at synthesis time.
struct SourceWaveforms {
  double dt = 0.0;
  int n_steps = 0;
  Eigen::VectorXd deep;
  Eigen::VectorXd superficial;
  std::string amplitude_unit = "nA*m";
};

/// Clean and noise-corrupted scalp potentials (volts), plus the noise
/// parameters that produced them.
struct MeasurementSet {
  Eigen::MatrixXd clean;
  Eigen::MatrixXd noisy;
  double noise_std = 0.0;
  double peak_snr_db = 0.0;
  std::uint64_t seed = 0;
};

/// Raised-cosine (Hann) bump of full width `peak_width` centered at
/// `t_peak`, evaluated at time t; `amplitude` at the center, zero at and
/// beyond the edges.
double hann_bump(double t, double t_peak, double peak_width, double amplitude);

/// Builds the two-source SEP analog: one Hann bump per source, sampled
/// at t = k*dt for k = 0..K-1 with K = round(total_duration/dt).
/// Throws std::invalid_argument when a bump's support leaves
/// [0, total_duration], when dt > peak_width/4, or when a sampled
/// waveform attains its maximum at more than one sample.
SourceWaveforms make_sep_waveforms(double dt, double total_duration,
                                   double t_deep_peak, double t_sup_peak,
                                   double peak_width, double amplitude);

/// Zeroes the waveform(s) not listed as active ("both", "deep", "sup").
SourceWaveforms select_active_sources(SourceWaveforms waves, const std::string& mode);

/// Noise-free measurements: column k = L x_k with x_k carrying the two
/// scaled moment vectors at the placement's node blocks (SI units).
Eigen::MatrixXd synthesize_measurements(const LeadField& lead,
                                        const SourcePlacement& placement,
                                        const SourceWaveforms& waves);

/// Adds seeded white Gaussian noise at a given peak-SNR:
///   sigma = max|clean| / 10^(peak_snr_db/20).
/// Throws std::invalid_argument for an all-zero clean matrix.
MeasurementSet add_noise(const Eigen::MatrixXd& clean, double peak_snr_db,
                         std::uint64_t seed);

/// Amplitude-unit scale factor to SI (A*m): "nA*m" -> 1e-9, "A*m" -> 1.
double amplitude_unit_scale(const std::string& unit);

}

#endif
