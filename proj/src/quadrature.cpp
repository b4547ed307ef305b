#include "opke/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "opke/recurrence.hpp"

namespace opke {

std::pair<Eigen::VectorXd, Eigen::VectorXd> tridiag_eigen(
    const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag) {
  const int n = static_cast<int>(diag.size());
  if (n < 1) throw hypothesis_error("tridiag_eigen: empty diagonal");
  if (offdiag.size() != n - 1)
    throw hypothesis_error("tridiag_eigen: offdiag length must be diag length - 1");
  for (int i = 0; i < n - 1; ++i)
    if (!(offdiag[i] > 0))
      throw hypothesis_error("tridiag_eigen: off-diagonal entries must be positive");

  Eigen::VectorXd d = diag;
  Eigen::VectorXd e(n);  // e[i] couples d[i] and d[i+1]; e[n-1] is scratch
  e.setZero();
  e.head(n - 1) = offdiag;
  Eigen::VectorXd q = Eigen::VectorXd::Zero(n);  // first row of the rotation product
  q[0] = 1.0;

  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 50)
          throw numerical_error(
              "tridiag_eigen: QL sweep failed to converge at index " +
              std::to_string(l));
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            // rotation chain collapsed early; deflate and retry the sweep
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = q[i + 1];
          q[i + 1] = s * q[i] + c * f;
          q[i] = c * q[i] - s * f;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&d](int i, int j) { return d[i] < d[j]; });
  Eigen::VectorXd vals(n), firsts(n);
  for (int i = 0; i < n; ++i) {
    vals[i] = d[order[i]];
    firsts[i] = q[order[i]];
  }
  return {vals, firsts};
}

QuadratureRule golub_welsch(const RecurrenceTable& rec, int m) {
  if (m < 1) throw hypothesis_error("golub_welsch: need m >= 1");
  if (m > rec.depth())
    throw hypothesis_error("golub_welsch: m=" + std::to_string(m) +
                           " exceeds recurrence depth " +
                           std::to_string(rec.depth()) +
                           "; build a deeper RecurrenceTable");
  auto [vals, firsts] = tridiag_eigen(rec.a.head(m), rec.b.head(m - 1));
  QuadratureRule rule;
  rule.nodes = vals;
  rule.weights = firsts.array().square();  // total mass 1 for probability measures
  rule.degree_exact = 2 * m - 1;
  return rule;
}

namespace detail {
namespace {

// 7/15-point Gauss-Kronrod pair on [-1, 1]; nodes are symmetric about 0.
constexpr int kGkPoints = 8;
constexpr double kGkNode[kGkPoints] = {
    0.00000000000000000, 0.20778495500789847, 0.40584515137739717,
    0.58608723546769113, 0.74153118559939444, 0.86486442335976907,
    0.94910791234275852, 0.99145537112081264};
constexpr double kKronrodW[kGkPoints] = {
    0.20948214108472783, 0.20443294007529889, 0.19035057806478541,
    0.16900472663926790, 0.14065325971552592, 0.10479001032225018,
    0.06309209262997855, 0.02293532201052922};
constexpr double kGaussW[kGkPoints] = {
    0.41795918367346939, 0.0, 0.38183005050511894, 0.0,
    0.27970539148927667, 0.0, 0.12948496616886969, 0.0};

struct PanelResult {
  Complex value;
  double err;
};

PanelResult gk15(const std::function<Complex(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Complex g7{}, k15{};
  for (int i = 0; i < kGkPoints; ++i) {
    Complex v = f(mid + half * kGkNode[i]);
    if (i > 0) v += f(mid - half * kGkNode[i]);
    if (!std::isfinite(std::abs(v)))
      throw numerical_error("adaptive_integrate: non-finite integrand near t=" +
                            std::to_string(mid + half * kGkNode[i]));
    k15 += kKronrodW[i] * v;
    g7 += kGaussW[i] * v;
  }
  k15 *= half;
  g7 *= half;
  return {k15, std::abs(k15 - g7)};
}

}  // namespace

Complex adaptive_gk(const std::function<Complex(double)>& f, double lo,
                    double hi, double tol) {
  if (!(tol > 0)) throw hypothesis_error("adaptive_integrate: tol must be > 0");
  if (lo == hi) return Complex(0.0);

  constexpr int kMaxDepth = 50;
  constexpr std::size_t kMaxPanels = 500000;

  struct Panel {
    double a, b;
    int depth;
  };
  std::vector<Panel> stack{{lo, hi, 0}};
  const double span = std::abs(hi - lo);
  Complex total{};
  double err_total = 0.0;
  std::size_t panels = 0;
  bool exhausted = false;

  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    PanelResult r = gk15(f, p.a, p.b);
    const double local_tol = tol * std::abs(p.b - p.a) / span;
    if (r.err <= local_tol || p.depth >= kMaxDepth || ++panels > kMaxPanels) {
      total += r.value;
      err_total += r.err;
      if (r.err > local_tol) exhausted = true;
      continue;
    }
    const double mid = 0.5 * (p.a + p.b);
    stack.push_back({p.a, mid, p.depth + 1});
    stack.push_back({mid, p.b, p.depth + 1});
  }

  if (exhausted && err_total > tol)
    throw numerical_error(
        "adaptive_integrate: refinement exhausted; best estimate (" +
        std::to_string(total.real()) + "," + std::to_string(total.imag()) +
        ") with error bound " + std::to_string(err_total) + " > tol " +
        std::to_string(tol));
  return total;
}

}  // namespace detail
}  // namespace opke
