#include "opke/stieltjes.hpp"

#include <cmath>
#include <numbers>

#include "opke/quadrature.hpp"

namespace opke {

namespace {

// sqrt(z^2 - 1) with branch cut on [-1, 1] and value ~ z at infinity.
Complex sqrt_plane_cut(Complex z) {
  return std::sqrt(z - 1.0) * std::sqrt(z + 1.0);
}

}  // namespace

Complex stieltjes_transform(const WeightSpec& spec, Complex beta, double tol) {
  if (beta.imag() == 0.0)
    throw hypothesis_error(
        "stieltjes_transform: beta must be non-real (pole would sit on the support)");

  const double s = spec.scale(), c = spec.center();
  switch (spec.family) {
    case WeightFamily::chebyshev: {
      const Complex u = (beta - c) / s;
      return -1.0 / (s * sqrt_plane_cut(u));
    }
    case WeightFamily::legendre: {
      const Complex u = (beta - c) / s;
      return 0.5 / s * std::log((u - 1.0) / (u + 1.0));
    }
    case WeightFamily::jacobi: {
      // t = c + s*cos(theta) removes the endpoint singularities for
      // exponents >= -1/2
      auto f = [&](double theta) -> Complex {
        const double u = std::cos(theta);
        const double rho = spec.norm * std::pow(1.0 - u, spec.jac_a) *
                           std::pow(1.0 + u, spec.jac_b) * std::sin(theta);
        return rho / (c + s * u - beta);
      };
      return adaptive_integrate(f, 0.0, std::numbers::pi, tol);
    }
    case WeightFamily::table: {
      auto f = [&](double t) -> Complex { return spec.density(t) / (t - beta); };
      return adaptive_integrate(f, spec.lo, spec.hi, tol);
    }
  }
  throw hypothesis_error("stieltjes_transform: unknown family");
}

}  // namespace opke
