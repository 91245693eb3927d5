#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fortcalc {

// Gauss-Legendre rule on [-1, 1]. Nodes are found by Newton iteration on
// P_n starting from the Chebyshev-like guess cos(π(i − 1/4)/(n + 1/2)).
class GaussLegendre {
 public:
  explicit GaussLegendre(int order);

  int order() const { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }

  // ∫_a^b f over a single panel.
  template <typename F>
  double integrate(F&& f, double a, double b) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      sum += weights_[i] * f(mid + half * nodes_[i]);
    }
    return half * sum;
  }

  // ∫_a^b f over `panels` equal panels, summed in panel order.
  template <typename F>
  double integrate_panels(F&& f, double a, double b, std::size_t panels) const {
    const double width = (b - a) / static_cast<double>(panels);
    double sum = 0.0;
    for (std::size_t k = 0; k < panels; ++k) {
      const double lo = a + width * static_cast<double>(k);
      const double hi = (k + 1 == panels) ? b : lo + width;
      sum += integrate(f, lo, hi);
    }
    return sum;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace fortcalc
