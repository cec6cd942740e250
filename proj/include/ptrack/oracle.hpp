#pragma once

#include <string>
#include <vector>

namespace ptrack::oracle {

/// Cancellation threshold: the root x >= 0 of sinh(x - z) - sinh z + x = 0.
/// A shock of size z and a same-family rarefaction of size x_o(z) cancel.
double x_o(double z);

/// Reflected size after full cancellation: root y >= 0 of
/// sinh y + y = sinh z - z.
double y_pure(double z);

/// Reflected shock for a rarefaction of size x <= x_o(z) against a shock of
/// size z: root of sinh y + sinh(y - x + z) - sinh z + x = 0 with
/// max{0, x - z} <= y <= min{x, z}. Throws DomainError when x > x_o(z).
double y_mixed(double x, double z);

/// Size of the reflected shock for alpha < 0 < beta.
double reflected_size(double alpha, double beta);

/// Mixed grid on (0, cap]: half the points log-spaced from 1e-4 cap to
/// 0.1 cap, the rest linear up to cap.
std::vector<double> magnitude_grid(int n, double cap);

struct SweepReport {
  std::string name;
  std::string grid;
  std::size_t cases = 0;
  double max_deviation = 0.0;  ///< worst error, or worst excess over a bound
  double tolerance = 0.0;
  std::string worst_inputs;
  bool passed = true;
};

/// Suites: lemma53, identities, pseudo-estimates, schochet, k-threshold.
const std::vector<std::string>& suite_names();

/// Runs one suite; `grid` is the number of points per axis (0 = default 50).
/// Throws std::invalid_argument for an unknown name.
std::vector<SweepReport> run_suite(const std::string& name, int grid = 0, unsigned long long seed = 1);

}  // namespace ptrack::oracle
