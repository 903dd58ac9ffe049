#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace bfc {

// Seeded uniform generator. Draws doubles directly from mt19937_64 output
// (the engine is fully specified by the standard; the standard distributions
// are not), so identical seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double next01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next01(); }

  /// Integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    int v = lo + static_cast<int>(next01() * (static_cast<double>(hi) - lo + 1.0));
    return v > hi ? hi : v;
  }

  Eigen::VectorXd uniform_vector(int size, double lo, double hi) {
    Eigen::VectorXd v(size);
    for (int i = 0; i < size; ++i) v(i) = uniform(lo, hi);
    return v;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace bfc
