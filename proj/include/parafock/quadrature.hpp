#pragma once

#include <vector>

namespace parafock {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (n >= 1). Nodes come from Newton iteration on
/// the Legendre three-term recurrence; results are memoized per n.
const GaussRule& gauss_legendre(int n);

/// Integral of f over [a, b] split into `panels` equal panels of an n-point rule.
template <class F>
double integrate_panels(F&& f, double a, double b, int panels, int n) {
  const auto& rule = gauss_legendre(n);
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double lo = a + i * h;
    const double mid = lo + 0.5 * h;
    double s = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q)
      s += rule.weights[q] * f(mid + 0.5 * h * rule.nodes[q]);
    total += 0.5 * h * s;
  }
  return total;
}

}  // namespace parafock
