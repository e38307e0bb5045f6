#ifndef SKF_GEOMETRY_HPP
#define SKF_GEOMETRY_HPP

#include <Eigen/Dense>
#include <vector>

namespace skf {

/// Scalp electrode layout. All positions sit on the upper hemisphere
/// (z >= 0) of the scalp sphere.
struct ElectrodeArray {
  std::vector<Eigen::Vector3d> positions;
  double scalp_radius = 0.0;

  int count() const { return static_cast<int>(positions.size()); }
};

/// Candidate dipole locations: a regular cubic lattice clipped to the
/// open brain ball, ordered lexicographically in (x, y, z).
struct SourceSpace {
  std::vector<Eigen::Vector3d> nodes;
  double brain_radius = 0.0;
  double node_spacing = 0.0;

  int count() const { return static_cast<int>(nodes.size()); }
};

/// Deterministic Fibonacci-spiral layout on the hemisphere z >= 0.
/// Throws std::invalid_argument for count < 2 or non-positive radius.
ElectrodeArray build_electrode_array(int count, double scalp_radius);

/// Cubic lattice with step `node_spacing`, keeping points with
/// norm strictly below `brain_radius` (the origin is always a node).
/// Throws std::invalid_argument unless 0 < node_spacing < brain_radius.
SourceSpace build_source_space(double node_spacing, double brain_radius);

/// Index of the node closest to `target` (ties broken by lowest index).
int nearest_node(const SourceSpace& space, const Eigen::Vector3d& target);

}

#endif
