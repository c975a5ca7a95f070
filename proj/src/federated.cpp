// Curvature-weighted aggregation point and the smallest gradient bound that
// keeps it attainable.
#include "minregion/federated.hpp"

#include "minregion/region.hpp"

namespace minregion {

double min_gradient_bound(const ProblemInstance& inst) {
  const double d = distance(inst.x1_star, inst.x2_star);
  return d / (1.0 / inst.sigma1 + 1.0 / inst.sigma2);
}

AggregationResult fed_point(const ProblemInstance& inst) {
  const std::size_t n = inst.dim();
  const double wsum = inst.sigma1 + inst.sigma2;
  Vec p(n);
  for (std::size_t i = 0; i < n; ++i)
    p[i] = (inst.sigma1 * inst.x1_star[i] + inst.sigma2 * inst.x2_star[i]) /
           wsum;
  AggregationResult out;
  out.point = std::move(p);
  out.L_min = min_gradient_bound(inst);
  out.regime_at_L = regime(inst).kind;
  out.membership = classify(inst, out.point);
  return out;
}

}  // namespace minregion
