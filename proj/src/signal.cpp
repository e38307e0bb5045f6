#include "skf/signal.hpp"

#include <cmath>
#include <stdexcept>

#include "skf/rng.hpp"

namespace skf {

void validate_placement(const SourcePlacement& placement, const SourceSpace& space) {
  const int n = space.count();
  if (placement.deep_node < 0 || placement.deep_node >= n ||
      placement.superficial_node < 0 || placement.superficial_node >= n)
    throw std::invalid_argument("placement: node index out of range");
  if (placement.deep_node == placement.superficial_node)
    throw std::invalid_argument("placement: deep and superficial nodes must differ");
  const double r_deep = space.nodes[static_cast<std::size_t>(placement.deep_node)].norm();
  const double r_sup = space.nodes[static_cast<std::size_t>(placement.superficial_node)].norm();
  if (!(r_deep < r_sup))
    throw std::invalid_argument("placement: deep node must be strictly deeper");
  if (std::abs(placement.deep_moment_dir.norm() - 1.0) > 1e-12 ||
      std::abs(placement.superficial_moment_dir.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("placement: moment directions must be unit vectors");
}

double hann_bump(double t, double t_peak, double peak_width, double amplitude) {
  const double u = t - t_peak;
  if (std::abs(u) >= peak_width / 2.0) return 0.0;
  const double c = std::cos(M_PI * u / peak_width);
  return amplitude * c * c;
}

namespace {

void check_unique_max(const Eigen::VectorXd& w, const char* name) {
  if (w.size() == 0) return;
  const double m = w.maxCoeff();
  if (m <= 0.0) return;  // inactive waveform, nothing to check
  int hits = 0;
  for (int k = 0; k < w.size(); ++k)
    if (w(k) == m) ++hits;
  if (hits != 1)
    throw std::invalid_argument(std::string("make_sep_waveforms: ") + name +
                                " waveform attains its maximum at more than one sample; "
                                "align the peak time with the sample grid");
}

}

SourceWaveforms make_sep_waveforms(double dt, double total_duration,
                                   double t_deep_peak, double t_sup_peak,
                                   double peak_width, double amplitude) {
  if (!(peak_width > 0.0))
    throw std::invalid_argument("make_sep_waveforms: peak_width must be positive");
  if (!(dt > 0.0) || dt > peak_width / 4.0)
    throw std::invalid_argument("make_sep_waveforms: need 0 < dt <= peak_width/4");
  if (!(amplitude > 0.0))
    throw std::invalid_argument("make_sep_waveforms: amplitude must be positive");
  for (double tp : {t_deep_peak, t_sup_peak}) {
    if (!(tp > 0.0) || !(tp < total_duration))
      throw std::invalid_argument("make_sep_waveforms: peak time outside (0, total_duration)");
    if (tp - peak_width / 2.0 < 0.0 || tp + peak_width / 2.0 > total_duration)
      throw std::invalid_argument("make_sep_waveforms: bump support leaves [0, total_duration]");
  }

  SourceWaveforms w;
  w.dt = dt;
  w.n_steps = static_cast<int>(std::lround(total_duration / dt));
  if (w.n_steps < 1) throw std::invalid_argument("make_sep_waveforms: no samples");
  w.deep.resize(w.n_steps);
  w.superficial.resize(w.n_steps);
  for (int k = 0; k < w.n_steps; ++k) {
    const double t = k * dt;
    w.deep(k) = hann_bump(t, t_deep_peak, peak_width, amplitude);
    w.superficial(k) = hann_bump(t, t_sup_peak, peak_width, amplitude);
  }
  check_unique_max(w.deep, "deep");
  check_unique_max(w.superficial, "superficial");
  return w;
}

SourceWaveforms select_active_sources(SourceWaveforms waves, const std::string& mode) {
  if (mode == "both") return waves;
  if (mode == "deep") {
    waves.superficial.setZero();
    return waves;
  }
  if (mode == "sup") {
    waves.deep.setZero();
    return waves;
  }
  throw std::invalid_argument("select_active_sources: mode must be both/deep/sup");
}

Eigen::MatrixXd synthesize_measurements(const LeadField& lead,
                                        const SourcePlacement& placement,
                                        const SourceWaveforms& waves) {
  const int n_nodes = lead.n_nodes();
  if (placement.deep_node < 0 || placement.deep_node >= n_nodes ||
      placement.superficial_node < 0 || placement.superficial_node >= n_nodes)
    throw std::invalid_argument("synthesize_measurements: node index out of range");

  const double scale = amplitude_unit_scale(waves.amplitude_unit);
  // Per-source scalp topographies for a unit-amplitude moment (m-vectors).
  const Eigen::VectorXd deep_topo =
      lead.matrix.middleCols(3 * placement.deep_node, 3) * placement.deep_moment_dir;
  const Eigen::VectorXd sup_topo =
      lead.matrix.middleCols(3 * placement.superficial_node, 3) *
      placement.superficial_moment_dir;

  Eigen::MatrixXd clean(lead.n_electrodes(), waves.n_steps);
  for (int k = 0; k < waves.n_steps; ++k)
    clean.col(k) = scale * (waves.deep(k) * deep_topo + waves.superficial(k) * sup_topo);
  return clean;
}

MeasurementSet add_noise(const Eigen::MatrixXd& clean, double peak_snr_db,
                         std::uint64_t seed) {
  const double peak = clean.cwiseAbs().maxCoeff();
  if (!(peak > 0.0))
    throw std::invalid_argument("add_noise: all-zero clean matrix, peak-SNR undefined");

  MeasurementSet out;
  out.clean = clean;
  out.peak_snr_db = peak_snr_db;
  out.seed = seed;
  out.noise_std = peak / std::pow(10.0, peak_snr_db / 20.0);

  GaussianSampler rng(seed);
  out.noisy.resize(clean.rows(), clean.cols());
  // Column-major fill so the draw order matches Eigen's storage order.
  for (Eigen::Index c = 0; c < clean.cols(); ++c)
    for (Eigen::Index r = 0; r < clean.rows(); ++r)
      out.noisy(r, c) = clean(r, c) + out.noise_std * rng.standard_normal();
  return out;
}

double amplitude_unit_scale(const std::string& unit) {
  if (unit == "nA*m") return 1e-9;
  if (unit == "A*m") return 1.0;
  throw std::invalid_argument("amplitude_unit_scale: unknown unit " + unit);
}

}
