#ifndef LEVELWIDTH_NUMERICS_HPP
#define LEVELWIDTH_NUMERICS_HPP

// Quadrature, bracketed root finding and small least-squares helpers shared
// by the physics modules.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "levelwidth/errors.hpp"

namespace lw::numerics {

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double eps = std::numeric_limits<double>::epsilon();

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Cached rule of the given order (Golub-Welsch, Newton-polished). Thread safe.
const GaussRule& gauss_legendre(int order);

/// Fixed-order Gauss-Legendre integral of f over [a, b].
template <class F>
double integrate_gauss(F&& f, double a, double b, int order = 20) {
  const GaussRule& rule = gauss_legendre(order);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

/// One Gauss-Kronrod panel.
struct Segment {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = false;
  /// Final panels sorted by left edge.
  std::vector<Segment> segments;
};

namespace detail {

inline constexpr double kronrod_nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kronrod_weights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double gauss7_weights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

// QUADPACK qk15 error model.
template <class F>
Segment kronrod15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double res_g = fc * gauss7_weights[3];
  double res_k = fc * kronrod_weights[7];
  double res_abs = std::abs(res_k);
  double fv1[7];
  double fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kronrod_nodes[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv1[j] = f1;
    fv2[j] = f2;
    res_k += kronrod_weights[j] * (f1 + f2);
    res_abs += kronrod_weights[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) res_g += gauss7_weights[j / 2] * (f1 + f2);
  }
  const double mean = 0.5 * res_k;
  double res_asc = kronrod_weights[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    res_asc += kronrod_weights[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
  }
  const double ah = std::abs(half);
  res_abs *= ah;
  res_asc *= ah;
  double err = std::abs((res_k - res_g) * half);
  if (res_asc != 0.0 && err != 0.0) {
    err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  }
  if (res_abs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * res_abs, err);
  }
  return {a, b, res_k * half, err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7-15) over the intervals delimited by
/// `edges` (sorted, at least two entries). Stops when the summed error
/// estimate drops below max(abs_tol, rel_tol * |integral|).
template <class F>
QuadResult integrate_adaptive(F&& f, std::span<const double> edges, double rel_tol,
                              double abs_tol = 0.0, int max_segments = 20000) {
  std::vector<Segment> heap;
  heap.reserve(edges.size() + 64);
  auto by_error = [](const Segment& x, const Segment& y) { return x.error < y.error; };
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (!(edges[i + 1] > edges[i])) continue;
    heap.push_back(detail::kronrod15(f, edges[i], edges[i + 1]));
    total += heap.back().value;
    total_err += heap.back().error;
  }
  std::make_heap(heap.begin(), heap.end(), by_error);

  QuadResult out;
  while (true) {
    if (total_err <= std::max(abs_tol, rel_tol * std::abs(total))) {
      out.converged = true;
      break;
    }
    if (static_cast<int>(heap.size()) >= max_segments) break;
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const Segment worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Interval exhausted at machine resolution; keep it and stop refining.
      heap.push_back(worst);
      std::push_heap(heap.begin(), heap.end(), by_error);
      break;
    }
    const Segment left = detail::kronrod15(f, worst.a, mid);
    const Segment right = detail::kronrod15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), by_error);
  }
  std::sort(heap.begin(), heap.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
  out.value = 0.0;
  out.error = 0.0;
  for (const Segment& s : heap) {
    out.value += s.value;
    out.error += s.error;
  }
  out.segments = std::move(heap);
  return out;
}

/// Panel edges on [b_0, b_k] for sorted breakpoints `breaks`: each interval is
/// cut into `uniform` equal pieces and the outermost pieces are further graded
/// geometrically (ratio `ratio`, `levels` times) toward the breakpoints.
std::vector<double> graded_edges(std::span<const double> breaks, int uniform, int levels,
                                 double ratio = 0.2);

/// Root of f on [lo, hi] where f(lo) and f(hi) differ in sign. Regula falsi
/// (Illinois variant) with a bisection step whenever the bracket fails to
/// halve. Terminates when the bracket is below abs_tol + 4 eps |x|.
template <class F>
double find_root(F&& f, double lo, double hi, double abs_tol, int max_iter = 400) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw DomainError("find_root: interval does not bracket a sign change");
  }
  int side = 0;
  for (int iter = 0; iter < max_iter; ++iter) {
    const double width = hi - lo;
    if (width <= abs_tol + 4.0 * eps * std::max(std::abs(lo), std::abs(hi))) break;
    double x = (lo * fhi - hi * flo) / (fhi - flo);
    // Force a bisection every third step so the bracket always shrinks.
    if (!(x > lo && x < hi) || iter % 3 == 2) x = 0.5 * (lo + hi);
    const double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx > 0.0) == (fhi > 0.0)) {
      hi = x;
      fhi = fx;
      if (side == 1) flo *= 0.5;
      side = 1;
    } else {
      lo = x;
      flo = fx;
      if (side == -1) fhi *= 0.5;
      side = -1;
    }
  }
  return std::abs(flo) < std::abs(fhi) ? lo : hi;
}

/// Least-squares line y = slope * x + intercept.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
};

LineFit fit_line(const Eigen::Ref<const Eigen::VectorXd>& x, const Eigen::Ref<const Eigen::VectorXd>& y);

/// Shortest decimal text that reads back to the same double.
std::string format_shortest(double x);

/// Parse a full string as a double; throws DomainError otherwise.
double parse_double(std::string_view text);

}  // namespace lw::numerics

#endif  // LEVELWIDTH_NUMERICS_HPP
