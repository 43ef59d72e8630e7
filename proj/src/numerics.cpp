#include "levelwidth/numerics.hpp"

#include <charconv>
#include <map>
#include <memory>
#include <mutex>

#include <Eigen/Eigenvalues>

namespace lw::numerics {

namespace {

// Legendre P_n(x) and its derivative by the three-term recurrence.
void legendre(int n, double x, double& p, double& dp) {
  double p0 = 1.0;
  double p1 = x;
  if (n == 0) {
    p = 1.0;
    dp = 0.0;
    return;
  }
  for (int k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = pk;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0);
}

GaussRule build_rule(int n) {
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  GaussRule rule;
  rule.nodes = solver.eigenvalues();
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = rule.nodes[i];
    double p = 0.0;
    double dp = 0.0;
    for (int it = 0; it < 3; ++it) {
      legendre(n, x, p, dp);
      x -= p / dp;
    }
    legendre(n, x, p, dp);
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
  if (order < 1) throw DomainError("gauss_legendre: order must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) {
    it = cache.emplace(order, std::make_unique<GaussRule>(build_rule(order))).first;
  }
  return *it->second;
}

std::vector<double> graded_edges(std::span<const double> breaks, int uniform, int levels,
                                 double ratio) {
  std::vector<double> edges;
  if (breaks.size() < 2) return edges;
  uniform = std::max(uniform, 1);
  edges.push_back(breaks[0]);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i];
    const double b = breaks[i + 1];
    const double h = (b - a) / uniform;
    std::vector<double> local;
    double g = h;
    for (int k = 0; k < levels; ++k) {
      g *= ratio;
      local.push_back(a + g);
    }
    for (int k = 1; k < uniform; ++k) local.push_back(a + k * h);
    g = h;
    for (int k = 0; k < levels; ++k) {
      g *= ratio;
      local.push_back(b - g);
    }
    local.push_back(b);
    std::sort(local.begin(), local.end());
    for (double x : local) {
      if (x > edges.back()) edges.push_back(x);
    }
  }
  return edges;
}

LineFit fit_line(const Eigen::Ref<const Eigen::VectorXd>& x, const Eigen::Ref<const Eigen::VectorXd>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw DomainError("fit_line: need at least two matching points");
  }
  Eigen::MatrixXd design(x.size(), 2);
  design.col(0) = x;
  design.col(1).setOnes();
  const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(y);
  LineFit fit;
  fit.slope = coef[0];
  fit.intercept = coef[1];
  fit.rms_residual = std::sqrt((design * coef - y).squaredNorm() / static_cast<double>(x.size()));
  return fit;
}

std::string format_shortest(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last || first == last) {
    throw DomainError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace lw::numerics
