#include "skf/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace skf {

ElectrodeArray build_electrode_array(int count, double scalp_radius) {
  if (count < 2)
    throw std::invalid_argument("build_electrode_array: need at least 2 electrodes");
  if (!(scalp_radius > 0.0))
    throw std::invalid_argument("build_electrode_array: scalp_radius must be positive");

  ElectrodeArray arr;
  arr.scalp_radius = scalp_radius;
  arr.positions.reserve(static_cast<std::size_t>(count));

  // Golden-angle spiral with z = (i + 0.5)/count, which stays strictly
  // inside (0, 1) so every electrode lands on the open upper hemisphere.
  const double golden_angle = M_PI * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    const double z = (i + 0.5) / static_cast<double>(count);
    const double rho = std::sqrt(1.0 - z * z);
    const double phi = golden_angle * i;
    arr.positions.emplace_back(scalp_radius * rho * std::cos(phi),
                               scalp_radius * rho * std::sin(phi),
                               scalp_radius * z);
  }
  return arr;
}

SourceSpace build_source_space(double node_spacing, double brain_radius) {
  if (!(node_spacing > 0.0) || !(node_spacing < brain_radius))
    throw std::invalid_argument("build_source_space: need 0 < node_spacing < brain_radius");

  SourceSpace space;
  space.brain_radius = brain_radius;
  space.node_spacing = node_spacing;

  const int imax = static_cast<int>(std::floor(brain_radius / node_spacing));
  const double r2 = brain_radius * brain_radius;
  for (int i = -imax; i <= imax; ++i)
    for (int j = -imax; j <= imax; ++j)
      for (int k = -imax; k <= imax; ++k) {
        Eigen::Vector3d p(i * node_spacing, j * node_spacing, k * node_spacing);
        if (p.squaredNorm() < r2) space.nodes.push_back(p);
      }
  return space;
}

int nearest_node(const SourceSpace& space, const Eigen::Vector3d& target) {
  if (space.nodes.empty())
    throw std::invalid_argument("nearest_node: empty source space");
  int best = 0;
  double best_d2 = (space.nodes[0] - target).squaredNorm();
  for (int j = 1; j < space.count(); ++j) {
    const double d2 = (space.nodes[static_cast<std::size_t>(j)] - target).squaredNorm();
    if (d2 < best_d2) {
      best_d2 = d2;
      best = j;
    }
  }
  return best;
}

}
