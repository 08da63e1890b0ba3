#ifndef OSA_DISTRIBUTIONS_HPP
#define OSA_DISTRIBUTIONS_HPP

#include "osa/errors.hpp"
#include "osa/rng.hpp"

namespace osa {

/// Uniform distribution on [lower, lower + width]. width = 0 degenerates to a
/// constant. Costs and rewards in the model are all of this shape.
struct BoundedUniform {
  double lower = 0.0;
  double width = 0.0;

  BoundedUniform() = default;
  BoundedUniform(double lower_, double width_) : lower(lower_), width(width_) {
    if (!(lower >= 0.0) || !(width >= 0.0)) {
      throw Error(Errc::InvalidDistribution, "require lower >= 0 and width >= 0");
    }
  }

  /// Construct from the (mean, width) parameterization; mean = lower + width/2.
  static BoundedUniform from_mean(double mean, double width) {
    return BoundedUniform(mean - width / 2.0, width);
  }

  double mean() const { return lower + width / 2.0; }
  double upper() const { return lower + width; }

  double sample(RngStream& rng) const { return rng.next_uniform(lower, width); }
};

}  // namespace osa

#endif  // OSA_DISTRIBUTIONS_HPP
