#include "skf/forward.hpp"

#include <cmath>
#include <stdexcept>

#include "skf/errors.hpp"

namespace skf {

double dipole_potential(const Eigen::Vector3d& dipole_pos,
                        const Eigen::Vector3d& moment,
                        const Eigen::Vector3d& electrode_pos,
                        double conductivity) {
  if (!(conductivity > 0.0))
    throw std::invalid_argument("dipole_potential: conductivity must be positive");
  const Eigen::Vector3d d = electrode_pos - dipole_pos;
  const double r = d.norm();
  if (r < 1e-12)
    throw numerical_error("dipole_potential: electrode coincides with dipole");
  return moment.dot(d) / (4.0 * M_PI * conductivity * r * r * r);
}

LeadField assemble_lead_field(const SourceSpace& space,
                              const ElectrodeArray& electrodes,
                              double conductivity) {
  const int m = electrodes.count();
  const int n_nodes = space.count();
  if (m < 2) throw std::invalid_argument("assemble_lead_field: need >= 2 electrodes");
  if (n_nodes < 1) throw std::invalid_argument("assemble_lead_field: empty source space");

  LeadField lead;
  lead.conductivity = conductivity;
  lead.matrix.resize(m, 3 * n_nodes);

  for (int j = 0; j < n_nodes; ++j) {
    const Eigen::Vector3d& node = space.nodes[static_cast<std::size_t>(j)];
    for (int a = 0; a < 3; ++a) {
      const Eigen::Vector3d moment = Eigen::Vector3d::Unit(a);
      Eigen::VectorXd col(m);
      for (int i = 0; i < m; ++i)
        col(i) = dipole_potential(node, moment,
                                  electrodes.positions[static_cast<std::size_t>(i)],
                                  conductivity);
      col.array() -= col.mean();  // average reference
      lead.matrix.col(3 * j + a) = col;
    }
  }
  return lead;
}

}
