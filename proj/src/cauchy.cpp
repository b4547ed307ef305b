#include "opke/cauchy.hpp"

#include <cmath>

#include "opke/quadrature.hpp"
#include "opke/stieltjes.hpp"

namespace opke {

namespace {

void require_offaxis(Complex beta, const char* who) {
  if (beta.imag() == 0.0)
    throw hypothesis_error(std::string(who) + ": beta must be non-real");
}

// Gauss rule exact for polynomials of degree `deg`, with a little margin when
// the recurrence depth allows it.
QuadratureRule rule_for_degree(const RecurrenceTable& rec, int deg) {
  const int needed = std::max(1, (deg + 2) / 2);  // 2m - 1 >= deg
  const int m = std::min(needed + 2, rec.depth());
  if (m < needed)
    throw hypothesis_error("rule_for_degree: recurrence too shallow for degree " +
                           std::to_string(deg));
  return golub_welsch(rec, m);
}

}  // namespace

Complex cauchy_orthopoly(const TwoPointContext& ctx, int l, Complex beta) {
  require_offaxis(beta, "cauchy_orthopoly");
  if (l < 0 || l >= ctx.ev.rec.depth())
    throw hypothesis_error("cauchy_orthopoly: l out of recurrence range");

  const Complex g = stieltjes_transform(ctx.ev.spec, beta, ctx.transform_tol);
  if (l == 0) return g;

  const Complex pl_beta = eval_orthonormal(ctx.ev.rec, l, beta)[l];

  if (ctx.pole_method == PoleMethod::direct_quadrature) {
    QuadratureRule rule = golub_welsch(ctx.ev.rec, 10 * l);
    return integrate(rule, [&](double t) -> Complex {
      return eval_orthonormal(ctx.ev.rec, l, Complex(t))[l] / (t - beta);
    });
  }

  QuadratureRule rule = rule_for_degree(ctx.ev.rec, l - 1);
  Complex poly_part = integrate(rule, [&](double t) -> Complex {
    return (eval_orthonormal(ctx.ev.rec, l, Complex(t))[l] - pl_beta) / (t - beta);
  });
  return poly_part + pl_beta * g;
}

Complex w_two_point(const TwoPointContext& ctx, Complex beta, Complex alpha) {
  require_offaxis(beta, "w_two_point");
  if (beta == alpha)
    throw hypothesis_error("w_two_point: shifts must be pairwise distinct");
  const int n = ctx.ev.n;

  Complex transform;  // integral of K_n(t, alpha) d(mu)(t) / (t - beta)
  if (ctx.pole_method == PoleMethod::direct_quadrature) {
    QuadratureRule rule = golub_welsch(ctx.ev.rec, 10 * n);
    transform = integrate(rule, [&](double t) -> Complex {
      return kernel_cd(ctx.ev, Complex(t), alpha) / (t - beta);
    });
  } else {
    const Complex g = stieltjes_transform(ctx.ev.spec, beta, ctx.transform_tol);
    const Complex k_beta = kernel_cd(ctx.ev, beta, alpha);
    if (n == 1) {
      transform = k_beta * g;  // K_1 is constant
    } else {
      QuadratureRule rule = rule_for_degree(ctx.ev.rec, n - 2);
      Complex poly_part = integrate(rule, [&](double t) -> Complex {
        return (kernel_cd(ctx.ev, Complex(t), alpha) - k_beta) / (t - beta);
      });
      transform = poly_part + k_beta * g;
    }
  }
  return 1.0 / (beta - alpha) + transform;
}

Complex w_two_point_cd(const TwoPointContext& ctx, Complex beta, Complex alpha) {
  require_offaxis(beta, "w_two_point_cd");
  if (beta == alpha)
    throw hypothesis_error("w_two_point_cd: shifts must be pairwise distinct");
  const int n = ctx.ev.n;
  const auto p = eval_orthonormal(ctx.ev.rec, n, alpha);
  const Complex h_n = cauchy_orthopoly(ctx, n, beta);
  const Complex h_nm1 = cauchy_orthopoly(ctx, n - 1, beta);
  // gamma_{n-1}/gamma_n = b_n
  return ctx.ev.rec.b[n - 1] * (h_n * p[n - 1] - h_nm1 * p[n]) / (beta - alpha);
}

Complex scaled_cauchy(const TwoPointContext& ctx, double x, double alpha,
                      Complex beta) {
  require_offaxis(beta, "scaled_cauchy");
  const double kt = kernel_normalized_diag(ctx.ev, x);
  const Complex w = w_two_point(ctx, x + beta / kt, x + alpha / kt);
  return (w - kt / (beta - alpha)) / kt;
}

}  // namespace opke
