#include "ptrack/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ptrack/error.hpp"

namespace ptrack {

std::pair<double, double> Profile::at(double x) const {
  const auto k = static_cast<std::size_t>(
      std::upper_bound(breaks.begin(), breaks.end(), x) - breaks.begin());
  return {v[k], u[k]};
}

void Profile::validate(double v_min) const {
  if (v.empty() || u.size() != v.size() || breaks.size() + 1 != v.size()) {
    throw DomainError("profile: inconsistent sizes");
  }
  for (std::size_t k = 1; k < breaks.size(); ++k) {
    if (!(breaks[k] > breaks[k - 1])) throw DomainError("profile: breaks must increase strictly");
  }
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!(v[k] > 0.0) || v[k] < v_min || !std::isfinite(v[k]) || !std::isfinite(u[k])) {
      std::ostringstream os;
      os << "profile: cell " << k << " has v = " << v[k] << " (lower bound " << v_min << ")";
      throw DomainError(os.str());
    }
  }
}

void Profile::ensure_interface_break() {
  const auto it = std::lower_bound(breaks.begin(), breaks.end(), 0.0);
  if (it != breaks.end() && *it == 0.0) return;
  const auto k = static_cast<std::size_t>(it - breaks.begin());
  breaks.insert(it, 0.0);
  v.insert(v.begin() + static_cast<std::ptrdiff_t>(k), v[k]);
  u.insert(u.begin() + static_cast<std::ptrdiff_t>(k), u[k]);
}

double l1_distance(const Profile& a, const Profile& b) {
  if (a.v.front() != b.v.front() || a.u.front() != b.u.front() ||
      a.v.back() != b.v.back() || a.u.back() != b.u.back()) {
    return std::numeric_limits<double>::infinity();
  }
  std::vector<double> xs = a.breaks;
  xs.insert(xs.end(), b.breaks.begin(), b.breaks.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  double total = 0.0;
  for (std::size_t k = 1; k < xs.size(); ++k) {
    const double mid = 0.5 * (xs[k - 1] + xs[k]);
    const auto [va, ua] = a.at(mid);
    const auto [vb, ub] = b.at(mid);
    total += (std::abs(va - vb) + std::abs(ua - ub)) * (xs[k] - xs[k - 1]);
  }
  return total;
}

InitialData InitialData::piecewise(Profile profile) {
  profile.validate();
  profile.ensure_interface_break();
  InitialData d;
  d.x_min_ = profile.breaks.front();
  d.x_max_ = profile.breaks.back();
  d.profile_ = std::move(profile);
  return d;
}

InitialData InitialData::sampled(Sampler f, double x_min, double x_max) {
  if (!(x_max > x_min)) throw DomainError("sampled data: need x_min < x_max");
  InitialData d;
  d.sampler_ = std::move(f);
  d.x_min_ = x_min;
  d.x_max_ = x_max;
  return d;
}

std::pair<double, double> InitialData::at(double x) const {
  if (!sampler_) return profile_.at(x);
  if (x < x_min_) return sampler_(x_min_ - 1.0);
  if (x > x_max_) return sampler_(x_max_ + 1.0);
  return sampler_(x);
}

namespace {

// Cells of width dx aligned with x = 0, covering [x_min, x_max]; each cell
// carries the exact sample at its midpoint. Adjacent equal cells are merged.
Profile sample_grid(const InitialData& d, double dx, double* l1_estimate) {
  const auto j0 = static_cast<long long>(std::floor(d.x_min() / dx));
  const auto j1 = static_cast<long long>(std::ceil(d.x_max() / dx));
  Profile p;
  const auto left = d.at(d.x_min() - 1.0);
  p.v.push_back(left.first);
  p.u.push_back(left.second);
  constexpr int kSub = 32;
  double err = 0.0;
  for (long long j = j0; j < j1; ++j) {
    const double a = static_cast<double>(j) * dx;
    const auto s = d.at(a + 0.5 * dx);
    for (int q = 0; q < kSub; ++q) {
      const auto f = d.at(a + (q + 0.5) * dx / kSub);
      err += (std::abs(f.first - s.first) + std::abs(f.second - s.second)) * dx / kSub;
    }
    if (s.first != p.v.back() || s.second != p.u.back()) {
      p.breaks.push_back(a);
      p.v.push_back(s.first);
      p.u.push_back(s.second);
    }
  }
  const auto right = d.at(d.x_max() + 1.0);
  if (right.first != p.v.back() || right.second != p.u.back()) {
    p.breaks.push_back(static_cast<double>(j1) * dx);
    p.v.push_back(right.first);
    p.u.push_back(right.second);
  }
  if (l1_estimate) *l1_estimate = err;
  return p;
}

}  // namespace

Profile InitialData::approximate(double l1_tol) const {
  if (!sampler_) return profile_;
  const double span = std::max(std::abs(x_min_), std::abs(x_max_));
  double dx = std::exp2(std::ceil(std::log2(span))) / 4.0;
  for (int level = 0; level < 24; ++level) {
    double err = 0.0;
    Profile p = sample_grid(*this, dx, &err);
    if (err <= l1_tol) {
      p.validate();
      p.ensure_interface_break();
      return p;
    }
    dx *= 0.5;
  }
  throw DomainError("initial data: L1 tolerance not reached on the finest grid");
}

Profile InitialData::reference(int cells) const {
  if (!sampler_) return profile_;
  const double span = std::max(std::abs(x_min_), std::abs(x_max_));
  const double dx = 2.0 * std::exp2(std::ceil(std::log2(span))) / cells;
  Profile p = sample_grid(*this, dx, nullptr);
  p.ensure_interface_break();
  return p;
}

}  // namespace ptrack
