#include "opke/limits.hpp"

#include <cmath>
#include <numbers>

#include "opke/quadrature.hpp"

namespace opke {

Complex sinc_kernel(Complex a, Complex b) {
  const Complex d = std::numbers::pi * (a - b);
  if (std::abs(d) < 1e-8 * std::numbers::pi) return 1.0 - d * d / 6.0;
  return std::sin(d) / d;
}

Complex w_limit_closed(Complex beta, Complex alpha) {
  if (beta.imag() == 0.0)
    throw hypothesis_error("w_limit_closed: beta must be non-real");
  const double sign = beta.imag() > 0.0 ? 1.0 : -1.0;
  const Complex d = beta - alpha;
  return std::exp(Complex(0.0, sign * std::numbers::pi) * d) / d;
}

TruncatedIntegral w_limit_integral(Complex beta, double alpha,
                                   const LimitParams& p) {
  if (beta.imag() == 0.0)
    throw hypothesis_error("w_limit_integral: beta must be non-real");
  if (!(p.truncation >= 10.0))
    throw hypothesis_error("w_limit_integral: truncation must be >= 10");
  if (!(p.tol > 0.0)) throw hypothesis_error("w_limit_integral: tol must be > 0");

  const double L = p.truncation;
  const double r = std::abs(beta - alpha);
  if (!(r < 0.5 * L))
    throw hypothesis_error("w_limit_integral: |beta - alpha| must be < L/2");

  auto f = [&](double s) -> Complex {
    return sinc_kernel(s, alpha) / (s - beta);
  };
  const Complex integral =
      adaptive_integrate(f, alpha - L, alpha + L, p.tol);

  // |integrand| <= 1/(pi |u| (|u| - r)) for u = s-alpha, |u| > L > r;
  // integrating both tails gives (2/(pi r)) log(L/(L-r)), -> 2/(pi L) as r -> 0.
  const double tail =
      r < 1e-12 ? 2.0 / (std::numbers::pi * L)
                : 2.0 * std::log(L / (L - r)) / (std::numbers::pi * r);

  return {1.0 / (beta - alpha) + integral, tail};
}

Complex cauchy_limit(double alpha, Complex beta) {
  return w_limit_closed(beta, alpha) - 1.0 / (beta - alpha);
}

}  // namespace opke
