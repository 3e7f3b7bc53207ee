#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace galilab {

// Seeded RNG with portable uniform draws (mt19937_64 output mapped to
// doubles by hand, so streams are identical across standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  Eigen::Vector3d vec3(double lo, double hi) {
    // evaluation order of braced init is left-to-right
    return Eigen::Vector3d{uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
  }

  // Uniform axis-angle rotation: uniform axis on the sphere, angle in [0, pi].
  Eigen::Matrix3d rotation() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * M_PI);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const Eigen::Vector3d axis{r * std::cos(phi), r * std::sin(phi), z};
    const double angle = uniform(0.0, M_PI);
    return Eigen::AngleAxisd(angle, axis).toRotationMatrix();
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace galilab
