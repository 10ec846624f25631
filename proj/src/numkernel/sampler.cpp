#include "schrogeo/numkernel/sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace schrogeo {

SeededSampler::SeededSampler(std::uint64_t seed, std::vector<Interval> box, Exclusion excluded)
    : seed_(seed), engine_(seed), box_(std::move(box)), excluded_(std::move(excluded)) {}

double SeededSampler::unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SeededSampler::uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

Eigen::VectorXd SeededSampler::uniform_vector(Eigen::Index n, double lo, double hi) {
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = uniform(lo, hi);
  return v;
}

Eigen::VectorXd SeededSampler::sample() {
  Eigen::VectorXd p(dim());
  for (int attempt = 0; attempt < 10000; ++attempt) {
    for (Eigen::Index i = 0; i < dim(); ++i) p[i] = uniform(box_[i].lo, box_[i].hi);
    if (!excluded_ || !excluded_(p)) {
      ++accepted_;
      return p;
    }
    ++rejected_;
  }
  throw std::runtime_error("SeededSampler: excluded locus covers the sampling box");
}

}  // namespace schrogeo
