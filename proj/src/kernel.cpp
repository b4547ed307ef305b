#include "opke/kernel.hpp"

#include <cmath>

namespace opke {

KernelEvaluator::KernelEvaluator(RecurrenceTable rec_, WeightSpec spec_, int n_)
    : rec(std::move(rec_)), spec(std::move(spec_)), n(n_) {
  if (n < 1) throw hypothesis_error("KernelEvaluator: need n >= 1");
  if (n >= rec.depth())
    throw hypothesis_error("KernelEvaluator: recurrence depth must exceed n");
}

KernelEvaluator make_kernel_evaluator(const WeightSpec& spec, int n) {
  if (n < 1) throw hypothesis_error("make_kernel_evaluator: need n >= 1");
  return KernelEvaluator(recurrence(spec, n + 4), spec, n);
}

Complex kernel_sum(const KernelEvaluator& ev, Complex x, Complex y) {
  const auto px = eval_orthonormal(ev.rec, ev.n - 1, x);
  const auto py = eval_orthonormal(ev.rec, ev.n - 1, y);
  // accumulate low degrees first
  Complex acc{};
  for (int k = 0; k < ev.n; ++k) acc += px[k] * py[k];
  return acc;
}

Complex kernel_cd(const KernelEvaluator& ev, Complex x, Complex y) {
  if (std::abs(x - y) < 1e-8 * (1.0 + std::abs(x))) return kernel_sum(ev, x, y);
  const int n = ev.n;
  const auto px = eval_orthonormal(ev.rec, n, x);
  const auto py = eval_orthonormal(ev.rec, n, y);
  // gamma_{n-1}/gamma_n = b_n
  return ev.rec.b[n - 1] * (px[n] * py[n - 1] - px[n - 1] * py[n]) / (x - y);
}

double kernel_normalized_diag(const KernelEvaluator& ev, double x) {
  const double w = ev.spec.density(x);
  if (!(w > 0.0) || !std::isfinite(w))
    throw hypothesis_error(
        "kernel_normalized_diag: density must be positive and finite at x");
  return w * kernel_sum(ev, x, x).real();
}

Complex scaled_kernel(const KernelEvaluator& ev, double x, Complex a, Complex b) {
  const double kt = kernel_normalized_diag(ev, x);
  return kernel_cd(ev, x + a / kt, x + b / kt) / kernel_sum(ev, x, x).real();
}

}  // namespace opke
