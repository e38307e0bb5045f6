#ifndef SKF_RNG_HPP
#define SKF_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

namespace skf {

/// Deterministic Gaussian sampler: std::mt19937_64 (bit-exact across
/// platforms per the C++ standard) driving a Box-Muller transform.
/// std::normal_distribution is avoided on purpose: its algorithm is
/// implementation-defined, which would break seed reproducibility.
class GaussianSampler {
public:
  explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}

  /// One draw from N(0, 1).
  double standard_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1], u2 in [0, 1): 53-bit uniforms from the raw engine.
    double u1, u2;
    do {
      u1 = to_unit(engine_());
    } while (u1 <= 0.0);
    u2 = to_unit(engine_());
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double two_pi = 6.283185307179586476925286766559;
    spare_ = r * std::sin(two_pi * u2);
    have_spare_ = true;
    return r * std::cos(two_pi * u2);
  }

private:
  static double to_unit(std::uint64_t w) {
    return static_cast<double>(w >> 11) * 0x1.0p-53;
  }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// FNV-1a over the bytes of a string; used to derive per-cell seeds from
/// a canonical coordinate string so the mapping is stable and documented.
inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}

#endif
