#ifndef SKF_FORWARD_HPP
#define SKF_FORWARD_HPP

#include <Eigen/Dense>

#include "skf/geometry.hpp"

namespace skf {

/// Average-referenced gain matrix: m electrodes x 3N source components.
/// Column 3j+a holds the scalp potentials of a unit dipole (1 A*m) at
/// node j oriented along axis a, with the electrode mean subtracted.
struct LeadField {
  Eigen::MatrixXd matrix;
  double conductivity = 0.0;

  int n_electrodes() const { return static_cast<int>(matrix.rows()); }
  int n_nodes() const { return static_cast<int>(matrix.cols()) / 3; }
};

/// Infinite homogeneous medium point-dipole potential,
///   V = moment . (electrode - dipole) / (4 pi sigma |electrode - dipole|^3),
/// before any referencing. Throws skf::numerical_error when electrode and
/// dipole coincide.
double dipole_potential(const Eigen::Vector3d& dipole_pos,
                        const Eigen::Vector3d& moment,
                        const Eigen::Vector3d& electrode_pos,
                        double conductivity);

/// Assembles the full lead field for a source space / electrode pair.
/// Throws skf::numerical_error if any node coincides with an electrode.
LeadField assemble_lead_field(const SourceSpace& space,
                              const ElectrodeArray& electrodes,
                              double conductivity);

}

#endif
