#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "ptrack/eos.hpp"

namespace ptrack {

/// Piecewise-constant (v, u) on the real line. Cell k spans
/// [breaks[k-1], breaks[k]) with breaks[-1] = -inf and breaks[n-1] = +inf.
/// The phase is lambda_l for x < 0 and lambda_r for x > 0, so x = 0 is always
/// a break.
struct Profile {
  std::vector<double> breaks;
  std::vector<double> v;
  std::vector<double> u;

  std::size_t cells() const noexcept { return v.size(); }
  /// Value at x (right-continuous).
  std::pair<double, double> at(double x) const;
  /// Throws DomainError on inconsistent sizes, unsorted breaks, v <= v_min.
  void validate(double v_min = 0.0) const;
  /// Inserts x = 0 as a break if it is missing.
  void ensure_interface_break();
};

/// L1 distance of (v, u) over the whole line.
double l1_distance(const Profile& a, const Profile& b);

/// Initial datum: either an exact piecewise-constant profile or a function of
/// x that is constant outside [x_min, x_max].
class InitialData {
 public:
  using Sampler = std::function<std::pair<double, double>(double)>;

  static InitialData piecewise(Profile profile);
  static InitialData sampled(Sampler f, double x_min, double x_max);

  bool is_piecewise() const noexcept { return !sampler_; }
  const Profile& exact() const { return profile_; }
  std::pair<double, double> at(double x) const;
  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }

  /// Piecewise-constant approximation by exact point samples on a dyadic
  /// grid aligned with x = 0, refined until the estimated L1 error is at most
  /// `l1_tol`. Piecewise data is returned as is.
  Profile approximate(double l1_tol) const;

  /// Fine reference sampling (used for total variation of the datum itself).
  Profile reference(int cells = 1 << 16) const;

 private:
  Profile profile_;
  Sampler sampler_;
  double x_min_ = 0.0;
  double x_max_ = 0.0;
};

}  // namespace ptrack
