#pragma once

#include <cstdint>
#include <vector>

#include "ptrack/eos.hpp"

namespace ptrack {

/// Which side of the interface a physical front lives on. Fronts never
/// cross the composite front, so the side is fixed at birth.
enum class Side : std::uint8_t { Left, Right };

/// A moving discontinuity of the piecewise-constant approximate solution.
struct Front {
  std::uint64_t id = 0;
  Family family = Family::One;
  double strength = 0.0;     ///< eps for 1/3 fronts, accumulated d20 for the composite
  double position = 0.0;     ///< x at anchor_time
  double anchor_time = 0.0;
  double speed = 0.0;
  State left;
  State right;
  int order = 1;             ///< generation order
  Side side = Side::Left;

  double x_at(double t) const noexcept { return position + speed * (t - anchor_time); }
  bool is_composite() const noexcept { return family == Family::Composite; }
  bool is_rarefaction() const noexcept { return !is_composite() && strength > 0.0; }
  bool is_shock() const noexcept { return !is_composite() && strength < 0.0; }
  /// 1-waves right of the interface and 3-waves left of it move toward x = 0.
  bool approaching() const noexcept {
    return (family == Family::One && side == Side::Right) ||
           (family == Family::Three && side == Side::Left);
  }
};

/// Fronts in spatial order, exactly one of which is the composite front.
using FrontList = std::vector<Front>;

}  // namespace ptrack
