#pragma once

#include "opke/kernel.hpp"
#include "opke/types.hpp"

namespace opke {

enum class PoleMethod {
  pole_extraction,   // exact Gauss on the polynomial part + measure transform
  direct_quadrature  // dense Gauss rule applied to the raw integrand
};

/// Evaluation context for Cauchy transforms against the measure behind `ev`.
struct TwoPointContext {
  KernelEvaluator ev;
  PoleMethod pole_method = PoleMethod::pole_extraction;
  double transform_tol = 1e-10;  // tolerance for measure transforms with no closed form
};

/// h_l(beta) = integral of p_l(t) d(mu)(t) / (t - beta), Im beta != 0.
/// Pole extraction: (p_l(t) - p_l(beta))/(t - beta) is a polynomial of degree
/// l-1, integrated exactly; the remainder is p_l(beta) G(beta).
Complex cauchy_orthopoly(const TwoPointContext& ctx, int l, Complex beta);

/// Two-point function W_n(beta, alpha) = 1/(beta-alpha)
/// + integral of K_n(t, alpha) d(mu)(t) / (t - beta).
Complex w_two_point(const TwoPointContext& ctx, Complex beta, Complex alpha);

/// Equivalent Christoffel-Darboux-type representation
/// (gamma_{n-1}/gamma_n) (h_n(beta) p_{n-1}(alpha) - h_{n-1}(beta) p_n(alpha))
/// / (beta - alpha); must agree with w_two_point.
Complex w_two_point_cd(const TwoPointContext& ctx, Complex beta, Complex alpha);

/// Scaled Cauchy transform of the kernel at bulk point x:
/// (W_n(x + beta/Kt, x + alpha/Kt) - Kt/(beta-alpha)) / Kt with
/// Kt = w(x) K_n(x,x); converges to cauchy_limit(alpha, beta).
Complex scaled_cauchy(const TwoPointContext& ctx, double x, double alpha,
                      Complex beta);

}  // namespace opke
