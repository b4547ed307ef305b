#pragma once

#include <Eigen/Core>

#include <string>

#include "opke/types.hpp"
#include "opke/weight.hpp"

namespace opke {

/// Three-term recurrence coefficients of the orthonormal polynomials of a
/// probability measure:
///   b_{k+1} p_{k+1}(z) = (z - a_{k+1}) p_k(z) - b_k p_{k-1}(z),
/// with p_0 = 1, p_{-1} = 0. Entry a[k-1] holds a_k and b[k-1] holds b_k.
struct RecurrenceTable {
  Eigen::VectorXd a;
  Eigen::VectorXd b;

  int depth() const { return static_cast<int>(a.size()); }
};

/// Exact analytic coefficients for the catalog families, to depth N.
RecurrenceTable catalog_recurrence(const WeightSpec& spec, int N);

/// Coefficients from an m-point quadrature discretization of the measure,
/// via the Stieltjes/Lanczos recursion on the discrete inner product.
/// Requires m >= 4N; table weights need at least 2m grid points.
RecurrenceTable stieltjes_recurrence(const WeightSpec& spec, int N, int m);

/// catalog_recurrence for catalog families, stieltjes_recurrence (m = 4N)
/// for tabulated densities.
RecurrenceTable recurrence(const WeightSpec& spec, int N);

/// Values p_0(z) .. p_n(z) of the orthonormal polynomials by the forward
/// recurrence. Needs n < rec.depth(). Scalar is double or Complex.
template <class Scalar>
Eigen::Vector<Scalar, Eigen::Dynamic> eval_orthonormal(
    const RecurrenceTable& rec, int n, Scalar z) {
  if (n < 0) throw hypothesis_error("eval_orthonormal: n must be >= 0");
  if (n >= rec.depth())
    throw hypothesis_error("eval_orthonormal: n=" + std::to_string(n) +
                           " requires recurrence depth > n (have " +
                           std::to_string(rec.depth()) + ")");
  Eigen::Vector<Scalar, Eigen::Dynamic> p(n + 1);
  p[0] = Scalar(1.0);
  if (n >= 1) p[1] = (z - Scalar(rec.a[0])) * p[0] / Scalar(rec.b[0]);
  for (int k = 1; k < n; ++k)
    p[k + 1] = ((z - Scalar(rec.a[k])) * p[k] - Scalar(rec.b[k - 1]) * p[k - 1]) /
               Scalar(rec.b[k]);
  return p;
}

/// Leading coefficient gamma_n = 1 / (b_1 ... b_n) of p_n; gamma_0 = 1.
double leading_coeff(const RecurrenceTable& rec, int n);

}  // namespace opke
