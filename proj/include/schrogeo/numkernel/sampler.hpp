#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace schrogeo {

struct Interval {
  double lo = -1.0;
  double hi = 1.0;
};

// Seeded uniform sampler over a coordinate box with rejection of an excluded
// locus. Identical seeds give bitwise-identical streams on every platform:
// doubles are built directly from the 64-bit engine output instead of going
// through std::uniform_real_distribution.
class SeededSampler {
 public:
  using Exclusion = std::function<bool(const Eigen::VectorXd&)>;

  SeededSampler(std::uint64_t seed, std::vector<Interval> box, Exclusion excluded = {});

  // Next accepted point; throws std::runtime_error after 10000 straight
  // rejections.
  Eigen::VectorXd sample();

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi);

  // Vector of independent uniforms in [lo, hi).
  Eigen::VectorXd uniform_vector(Eigen::Index n, double lo, double hi);

  std::uint64_t seed() const { return seed_; }
  std::size_t rejected() const { return rejected_; }
  std::size_t accepted() const { return accepted_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(box_.size()); }

 private:
  double unit();

  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::vector<Interval> box_;
  Exclusion excluded_;
  std::size_t rejected_ = 0;
  std::size_t accepted_ = 0;
};

}  // namespace schrogeo
