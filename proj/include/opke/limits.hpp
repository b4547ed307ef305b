#pragma once

#include "opke/types.hpp"

namespace opke {

/// sin(pi(a-b)) / (pi(a-b)), with the removable singularity at a = b.
Complex sinc_kernel(Complex a, Complex b);

/// Closed form of the limiting two-point function:
/// exp(+i pi (beta-alpha)) / (beta-alpha) for Im beta > 0, the conjugate
/// branch for Im beta < 0.
Complex w_limit_closed(Complex beta, Complex alpha);

/// Truncation and tolerance for the integral form of the limit.
struct LimitParams {
  double truncation = 200.0;  // half-width L of the s-window, >= 10
  double tol = 1e-8;
};

struct TruncatedIntegral {
  Complex value;
  double tail_bound;  // analytic bound on the discarded |s - alpha| > L mass
};

/// Integral form 1/(beta-alpha) + int_{alpha-L}^{alpha+L} sinc(s-alpha) /
/// (s-beta) ds, reported with its truncation bound. Exists as a check of the
/// closed form.
TruncatedIntegral w_limit_integral(Complex beta, double alpha,
                                   const LimitParams& p);

/// Limit of the scaled Cauchy transform of the kernel:
/// (exp(+-i pi (beta-alpha)) - 1) / (beta-alpha), sign by Im beta.
Complex cauchy_limit(double alpha, Complex beta);

}  // namespace opke
