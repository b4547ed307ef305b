#include "opke/weight.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <vector>

namespace opke {

namespace {

void check_support(double lo, double hi) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw hypothesis_error("WeightSpec: support must be a finite interval lo < hi");
}

double log_beta(double x, double y) {
  return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y);
}

}  // namespace

WeightSpec WeightSpec::chebyshev(double lo, double hi) {
  check_support(lo, hi);
  WeightSpec s;
  s.family = WeightFamily::chebyshev;
  s.lo = lo;
  s.hi = hi;
  s.norm = 1.0 / std::numbers::pi;
  return s;
}

WeightSpec WeightSpec::legendre(double lo, double hi) {
  check_support(lo, hi);
  WeightSpec s;
  s.family = WeightFamily::legendre;
  s.lo = lo;
  s.hi = hi;
  s.norm = 0.5;
  return s;
}

WeightSpec WeightSpec::jacobi(double a, double b, double lo, double hi) {
  check_support(lo, hi);
  if (!(a > -1.0) || !(b > -1.0))
    throw hypothesis_error("WeightSpec: Jacobi exponents must exceed -1 for finite moments");
  WeightSpec s;
  s.family = WeightFamily::jacobi;
  s.lo = lo;
  s.hi = hi;
  s.jac_a = a;
  s.jac_b = b;
  // mass of (1-u)^a (1+u)^b over [-1,1] is 2^(a+b+1) B(a+1, b+1)
  s.norm = std::exp(-((a + b + 1.0) * std::numbers::ln2 + log_beta(a + 1.0, b + 1.0)));
  return s;
}

WeightSpec WeightSpec::table(Eigen::VectorXd t, Eigen::VectorXd w) {
  if (t.size() != w.size() || t.size() < 2)
    throw hypothesis_error("WeightSpec: table needs matching t/w columns with >= 2 rows");
  for (Eigen::Index i = 0; i + 1 < t.size(); ++i)
    if (!(t[i] < t[i + 1]))
      throw hypothesis_error("WeightSpec: table abscissae must be strictly increasing");
  if ((w.array() < 0).any())
    throw hypothesis_error("WeightSpec: table density values must be >= 0");
  double mass = 0.0;
  for (Eigen::Index i = 0; i + 1 < t.size(); ++i)
    mass += 0.5 * (w[i] + w[i + 1]) * (t[i + 1] - t[i]);
  if (!(mass > 0))
    throw hypothesis_error("WeightSpec: table density has no mass");
  WeightSpec s;
  s.family = WeightFamily::table;
  s.lo = t[0];
  s.hi = t[t.size() - 1];
  s.grid_t = std::move(t);
  s.grid_w = w / mass;
  s.norm = 1.0;
  return s;
}

double WeightSpec::density(double t) const {
  if (family == WeightFamily::table) {
    if (t < grid_t[0] || t > grid_t[grid_t.size() - 1])
      throw hypothesis_error("WeightSpec: point outside the tabulated density domain");
    auto it = std::upper_bound(grid_t.data(), grid_t.data() + grid_t.size(), t);
    Eigen::Index i = std::max<Eigen::Index>(1, it - grid_t.data()) - 1;
    i = std::min(i, grid_t.size() - 2);
    double frac = (t - grid_t[i]) / (grid_t[i + 1] - grid_t[i]);
    return grid_w[i] + frac * (grid_w[i + 1] - grid_w[i]);
  }
  if (!(t > lo && t < hi))
    throw hypothesis_error("WeightSpec: point outside the open support interval");
  const double s = scale();
  const double u = (t - center()) / s;
  switch (family) {
    case WeightFamily::chebyshev:
      return norm / (std::sqrt((1.0 - u) * (1.0 + u)) * s);
    case WeightFamily::legendre:
      return norm / s;
    case WeightFamily::jacobi:
      return norm * std::pow(1.0 - u, jac_a) * std::pow(1.0 + u, jac_b) / s;
    default:
      throw hypothesis_error("WeightSpec: unknown family");
  }
}

std::string WeightSpec::describe() const {
  std::ostringstream os;
  switch (family) {
    case WeightFamily::chebyshev: os << "chebyshev"; break;
    case WeightFamily::legendre: os << "legendre"; break;
    case WeightFamily::jacobi: os << "jacobi(" << jac_a << "," << jac_b << ")"; break;
    case WeightFamily::table: os << "table[" << grid_t.size() << "]"; break;
  }
  os << " on [" << lo << "," << hi << "]";
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  auto e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

WeightSpec load_weight_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hypothesis_error("cannot open table file: " + path);
  std::vector<double> ts, ws;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream ls(t);
    double a, b;
    if (ls >> a >> b) {
      ts.push_back(a);
      ws.push_back(b);
    } else if (!ts.empty()) {
      throw hypothesis_error("table file: malformed row '" + line + "'");
    }
    // a non-numeric first line is treated as a header and skipped
  }
  if (ts.size() < 2)
    throw hypothesis_error("table file: need at least 2 data rows: " + path);
  Eigen::VectorXd t = Eigen::Map<Eigen::VectorXd>(ts.data(), ts.size());
  Eigen::VectorXd w = Eigen::Map<Eigen::VectorXd>(ws.data(), ws.size());
  return WeightSpec::table(std::move(t), std::move(w));
}

WeightSpec load_weight_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hypothesis_error("cannot open weight spec: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw hypothesis_error("weight spec: expected key=value, got '" + line + "'");
    kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  if (!kv.count("family"))
    throw hypothesis_error("weight spec: missing family=");

  double lo = -1.0, hi = 1.0;
  if (kv.count("support")) {
    std::string s = kv["support"];
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream ss(s);
    if (!(ss >> lo >> hi))
      throw hypothesis_error("weight spec: support must be 'lo,hi'");
  }

  const std::string fam = kv["family"];
  if (fam == "chebyshev") return WeightSpec::chebyshev(lo, hi);
  if (fam == "legendre") return WeightSpec::legendre(lo, hi);
  if (fam == "jacobi") {
    if (!kv.count("alpha") || !kv.count("beta"))
      throw hypothesis_error("weight spec: jacobi needs alpha= and beta=");
    return WeightSpec::jacobi(std::stod(kv["alpha"]), std::stod(kv["beta"]), lo, hi);
  }
  if (fam == "table") {
    if (!kv.count("file"))
      throw hypothesis_error("weight spec: table needs file=<path>");
    std::filesystem::path p(kv["file"]);
    if (p.is_relative()) p = std::filesystem::path(path).parent_path() / p;
    return load_weight_table(p.string());
  }
  throw hypothesis_error("weight spec: unknown family '" + fam + "'");
}

}  // namespace opke
