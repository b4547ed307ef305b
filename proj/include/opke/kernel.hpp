#pragma once

#include "opke/recurrence.hpp"
#include "opke/types.hpp"
#include "opke/weight.hpp"

namespace opke {

/// Reproducing kernel K_n(x, y) = sum_{k<n} p_k(x) p_k(y) of an n-particle
/// orthogonal polynomial ensemble. Holds the measure, its recurrence table
/// (depth > n) and the order n; immutable after construction.
struct KernelEvaluator {
  RecurrenceTable rec;
  WeightSpec spec;
  int n = 1;

  KernelEvaluator(RecurrenceTable rec_, WeightSpec spec_, int n_);
};

/// Builds an evaluator with enough recurrence depth for the kernel and the
/// Gauss rules of the two-point machinery.
KernelEvaluator make_kernel_evaluator(const WeightSpec& spec, int n);

/// Direct sum form, O(n) polynomial evaluations. The oracle path.
Complex kernel_sum(const KernelEvaluator& ev, Complex x, Complex y);

/// Christoffel-Darboux form; falls back to the sum on the near-diagonal
/// |x - y| < 1e-8 (1 + |x|) where the quotient cancels. The production path.
Complex kernel_cd(const KernelEvaluator& ev, Complex x, Complex y);

/// Normalized diagonal w(x) K_n(x, x); x must be interior to the support
/// with positive density.
double kernel_normalized_diag(const KernelEvaluator& ev, double x);

/// K_n(x + a/Kt, x + b/Kt) / K_n(x, x) with Kt the normalized diagonal at x;
/// converges to the sine kernel at bulk points.
Complex scaled_kernel(const KernelEvaluator& ev, double x, Complex a, Complex b);

}  // namespace opke
