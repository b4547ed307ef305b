#include "opke/recurrence.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "opke/quadrature.hpp"

namespace opke {

namespace {

// Monic Jacobi recurrence (alpha_k, beta_k), k from 0; the orthonormal
// coefficients are a_{k+1} = alpha_k and b_k = sqrt(beta_k).
double jacobi_alpha(double a, double b, int k) {
  if (k == 0) return (b - a) / (a + b + 2.0);
  const double s = 2.0 * k + a + b;
  return (b * b - a * a) / (s * (s + 2.0));
}

double jacobi_beta(double a, double b, int k) {
  if (k == 1)
    return 4.0 * (a + 1.0) * (b + 1.0) /
           ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0));
  const double s = 2.0 * k + a + b;
  return 4.0 * k * (k + a) * (k + b) * (k + a + b) /
         (s * s * (s + 1.0) * (s - 1.0));
}

}  // namespace

RecurrenceTable catalog_recurrence(const WeightSpec& spec, int N) {
  if (N < 1) throw hypothesis_error("catalog_recurrence: need N >= 1");
  if (spec.family == WeightFamily::table)
    throw hypothesis_error(
        "catalog_recurrence: tabulated densities have no closed form; use "
        "stieltjes_recurrence");
  RecurrenceTable rec;
  rec.a.setZero(N);
  rec.b.resize(N);
  switch (spec.family) {
    case WeightFamily::chebyshev:
      rec.b[0] = 1.0 / std::numbers::sqrt2;
      for (int k = 2; k <= N; ++k) rec.b[k - 1] = 0.5;
      break;
    case WeightFamily::legendre:
      for (int k = 1; k <= N; ++k)
        rec.b[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
      break;
    case WeightFamily::jacobi:
      for (int k = 1; k <= N; ++k) {
        rec.a[k - 1] = jacobi_alpha(spec.jac_a, spec.jac_b, k - 1);
        rec.b[k - 1] = std::sqrt(jacobi_beta(spec.jac_a, spec.jac_b, k));
      }
      break;
    default:
      throw hypothesis_error("catalog_recurrence: unknown family");
  }
  // affine map [-1,1] -> [lo,hi] shifts a_k and scales b_k
  const double s = spec.scale(), c = spec.center();
  rec.a = (rec.a.array() * s + c).matrix();
  rec.b *= s;
  return rec;
}

namespace {

// Discrete approximation of the measure: nodes and positive weights whose
// weighted sums approximate integrals against d(mu).
struct DiscreteMeasure {
  Eigen::VectorXd x;
  Eigen::VectorXd w;
};

// Catalog densities: substitute t = center + scale*cos(theta) and lay
// composite Gauss-Legendre panels in theta. The substitution absorbs the
// arcsine-type endpoint behavior, so the theta-integrand is smooth for every
// catalog family with exponents >= -1/2.
DiscreteMeasure discretize_catalog(const WeightSpec& spec, int m) {
  constexpr int kPanelPts = 24;
  const int panels = (m + kPanelPts - 1) / kPanelPts;

  // reference Gauss-Legendre nodes for one panel
  WeightSpec ref = WeightSpec::legendre();
  QuadratureRule gl = golub_welsch(catalog_recurrence(ref, kPanelPts), kPanelPts);

  const double s = spec.scale(), c = spec.center();
  DiscreteMeasure d;
  d.x.resize(panels * kPanelPts);
  d.w.resize(panels * kPanelPts);
  const double h = std::numbers::pi / panels;
  int idx = 0;
  for (int p = 0; p < panels; ++p) {
    const double th0 = p * h;
    for (int j = 0; j < kPanelPts; ++j) {
      // gl covers [-1,1] with weights summing to 1; panel measure is h
      const double theta = th0 + 0.5 * h * (gl.nodes[j] + 1.0);
      const double wgt = h * gl.weights[j];
      const double u = std::cos(theta);
      double rho;  // density of the pushed-forward measure in theta
      switch (spec.family) {
        case WeightFamily::chebyshev:
          rho = 1.0 / std::numbers::pi;
          break;
        case WeightFamily::legendre:
          rho = 0.5 * std::sin(theta);
          break;
        case WeightFamily::jacobi:
          rho = spec.norm * std::pow(1.0 - u, spec.jac_a) *
                std::pow(1.0 + u, spec.jac_b) * std::sin(theta);
          break;
        default:
          throw hypothesis_error("discretize: unsupported family");
      }
      d.x[idx] = c + s * u;
      d.w[idx] = wgt * rho;
      ++idx;
    }
  }
  return d;
}

// Tabulated densities: two Gauss-Legendre points per grid cell applied to the
// linear interpolant, which integrates the trapezoidal mass exactly.
DiscreteMeasure discretize_table(const WeightSpec& spec, int m) {
  const Eigen::Index cells = spec.grid_t.size() - 1;
  if (spec.grid_t.size() < 2 * static_cast<Eigen::Index>(m))
    throw hypothesis_error(
        "stieltjes_recurrence: table needs at least 2m grid points (m=" +
        std::to_string(m) + ", points=" + std::to_string(spec.grid_t.size()) + ")");
  const double g = 1.0 / std::sqrt(3.0);  // 2-point Gauss abscissa
  DiscreteMeasure d;
  d.x.resize(2 * cells);
  d.w.resize(2 * cells);
  for (Eigen::Index i = 0; i < cells; ++i) {
    const double t0 = spec.grid_t[i], t1 = spec.grid_t[i + 1];
    const double w0 = spec.grid_w[i], w1 = spec.grid_w[i + 1];
    const double mid = 0.5 * (t0 + t1), half = 0.5 * (t1 - t0);
    for (int sgn : {-1, 1}) {
      const double t = mid + sgn * g * half;
      const double frac = (t - t0) / (t1 - t0);
      d.x[2 * i + (sgn + 1) / 2] = t;
      d.w[2 * i + (sgn + 1) / 2] = half * (w0 + frac * (w1 - w0));
    }
  }
  return d;
}

}  // namespace

RecurrenceTable stieltjes_recurrence(const WeightSpec& spec, int N, int m) {
  if (N < 1) throw hypothesis_error("stieltjes_recurrence: need N >= 1");
  if (m < 4 * N)
    throw hypothesis_error("stieltjes_recurrence: need m >= 4N discretization points");

  DiscreteMeasure d = spec.family == WeightFamily::table
                          ? discretize_table(spec, m)
                          : discretize_catalog(spec, m);

  const Eigen::Index pts = d.x.size();
  const Eigen::ArrayXd x = d.x.array();
  const Eigen::ArrayXd w = d.w.array();
  Eigen::ArrayXd q_prev = Eigen::ArrayXd::Zero(pts);
  Eigen::ArrayXd q = Eigen::ArrayXd::Constant(pts, 1.0 / std::sqrt(w.sum()));

  RecurrenceTable rec;
  rec.a.resize(N);
  rec.b.resize(N);
  double b_prev = 0.0;
  const double tiny = 1e-14 * (std::abs(spec.lo) + std::abs(spec.hi) + 1.0);
  for (int k = 1; k <= N; ++k) {
    const double ak = (w * x * q.square()).sum();
    Eigen::ArrayXd r = (x - ak) * q - b_prev * q_prev;
    const double bk = std::sqrt((w * r.square()).sum());
    if (!(bk > tiny))
      throw numerical_error(
          "stieltjes_recurrence: discrete measure exhausted; achievable depth " +
          std::to_string(k - 1));
    rec.a[k - 1] = ak;
    rec.b[k - 1] = bk;
    q_prev = q;
    q = r / bk;
    b_prev = bk;
  }
  return rec;
}

RecurrenceTable recurrence(const WeightSpec& spec, int N) {
  if (spec.family == WeightFamily::table)
    return stieltjes_recurrence(spec, N, 4 * N);
  return catalog_recurrence(spec, N);
}

double leading_coeff(const RecurrenceTable& rec, int n) {
  if (n < 0 || n >= rec.depth() + 1)
    throw hypothesis_error("leading_coeff: n exceeds recurrence depth");
  double g = 1.0;
  for (int k = 0; k < n; ++k) g /= rec.b[k];
  return g;
}

}  // namespace opke
