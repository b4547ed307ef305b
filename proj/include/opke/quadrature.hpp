#pragma once

#include <Eigen/Core>

#include <cmath>
#include <functional>
#include <string>
#include <type_traits>
#include <utility>

#include "opke/types.hpp"

namespace opke {

struct RecurrenceTable;

/// Gauss rule: ascending nodes, positive weights summing to the total mass of
/// the measure (1 for the probability measures used here).
struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
  int degree_exact = 0;  // 2 * node count - 1

  int size() const { return static_cast<int>(nodes.size()); }
};

/// Eigenvalues (ascending) of the symmetric tridiagonal matrix with the given
/// diagonal and positive off-diagonal, paired with the first component of each
/// normalized eigenvector. Implicit-shift QL sweeps; rotations are accumulated
/// into the first row only, so the cost is O(n^2).
std::pair<Eigen::VectorXd, Eigen::VectorXd> tridiag_eigen(
    const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag);

/// m-point Gauss rule for the measure behind `rec`: nodes are the eigenvalues
/// of the m x m Jacobi matrix, weights the squared first eigenvector
/// components (unit total mass).
QuadratureRule golub_welsch(const RecurrenceTable& rec, int m);

/// Sum of weights[i] * f(nodes[i]); exact for polynomials of degree up to
/// rule.degree_exact. f may return double or Complex.
template <class F>
auto integrate(const QuadratureRule& rule, F&& f) {
  using R = std::invoke_result_t<F, double>;
  R acc{};
  for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
    R v = f(rule.nodes[i]);
    if (!std::isfinite(std::abs(static_cast<Complex>(v))))
      throw numerical_error("integrate: non-finite integrand value at node t=" +
                            std::to_string(rule.nodes[i]));
    acc += rule.weights[i] * v;
  }
  return acc;
}

namespace detail {
Complex adaptive_gk(const std::function<Complex(double)>& f, double lo,
                    double hi, double tol);
}

/// Adaptive integration of f over [lo, hi] to absolute tolerance `tol`,
/// by interval bisection with an embedded 7/15-point Gauss-Kronrod pair.
/// Throws numerical_error (carrying the best estimate and the achieved error
/// bound) if the refinement budget is exhausted first.
template <class F>
  requires std::invocable<F, double>
Complex adaptive_integrate(F&& f, double lo, double hi, double tol) {
  return detail::adaptive_gk(
      std::function<Complex(double)>(
          [&f](double t) { return static_cast<Complex>(f(t)); }),
      lo, hi, tol);
}

}  // namespace opke
