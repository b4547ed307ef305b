#pragma once

#include <Eigen/Core>

#include <string>

#include "opke/types.hpp"

namespace opke {

enum class WeightFamily { chebyshev, legendre, jacobi, table };

/// A probability measure on a compact interval [lo, hi]: a catalog family
/// (arcsine, uniform, Jacobi) or a tabulated density. Densities are scaled to
/// unit total mass at construction and treated as immutable afterwards.
struct WeightSpec {
  WeightFamily family = WeightFamily::legendre;
  double lo = -1.0;
  double hi = 1.0;
  double jac_a = 0.0;  // Jacobi exponent on (1 - u)
  double jac_b = 0.0;  // Jacobi exponent on (1 + u)
  double norm = 1.0;   // normalization making the density a probability density
  Eigen::VectorXd grid_t;  // table family: strictly increasing abscissae
  Eigen::VectorXd grid_w;  // table family: normalized density samples

  static WeightSpec chebyshev(double lo = -1.0, double hi = 1.0);
  static WeightSpec legendre(double lo = -1.0, double hi = 1.0);
  static WeightSpec jacobi(double a, double b, double lo = -1.0, double hi = 1.0);
  /// Tabulated density on a strictly increasing grid; the trapezoidal mass of
  /// the samples is scaled to 1.
  static WeightSpec table(Eigen::VectorXd t, Eigen::VectorXd w);

  /// Probability density w(t). Throws hypothesis_error outside (lo, hi) or,
  /// for table weights, outside the grid range.
  double density(double t) const;

  /// Half-width and center of the affine map t = center + scale * u that
  /// carries the reference interval [-1, 1] onto [lo, hi].
  double scale() const { return 0.5 * (hi - lo); }
  double center() const { return 0.5 * (hi + lo); }

  std::string describe() const;
};

/// Loads a line-oriented key=value weight-spec file (family=, alpha=, beta=,
/// support=lo,hi, file=<table path>). Table paths are resolved relative to the
/// spec file's directory.
WeightSpec load_weight_spec(const std::string& path);

/// Two-column (t, w) delimited text, optional header line, strictly
/// increasing t.
WeightSpec load_weight_table(const std::string& path);

}  // namespace opke
