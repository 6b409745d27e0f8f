#pragma once

#include <cmath>
#include <cstdint>

#include "g2alg/types.hpp"

namespace g2alg {

/// SplitMix64 generator (Steele/Lea/Flood).  64-bit state, splittable,
/// and fully pinned down so that every sampled quantity in the test and
/// verification suites is reproducible from a single seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 significant bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller.  One value per call; the sine branch
  /// is discarded so the draw count stays in lockstep with the call count.
  double gaussian() {
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  /// Derive an independent stream.
  SplitMix64 split() { return SplitMix64(next_u64() ^ 0x9e3779b97f4a7c15ull); }

  Vec7 gaussian_vec7() {
    Vec7 v;
    for (int i = 0; i < 7; ++i) v(i) = gaussian();
    return v;
  }

  /// Skew-symmetric 7x7 matrix with independent Gaussian entries above the diagonal.
  Mat7 gaussian_skew() {
    Mat7 m = Mat7::Zero();
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j) {
        const double g = gaussian();
        m(i, j) = g;
        m(j, i) = -g;
      }
    return m;
  }

 private:
  std::uint64_t state_;
};

}  // namespace g2alg
