// The curvature-weighted aggregation point and the smallest gradient bound
// under which it (and anything else) is attainable.
#pragma once

#include "minregion/region.hpp"

namespace minregion {

/// Where naive curvature-weighted averaging of the two minimizers lands,
/// and how it relates to the attainable region of the instance.
struct AggregationResult {
  Vec point;               ///< (sigma1 x1* + sigma2 x2*) / (sigma1 + sigma2)
  double L_min = 0.0;      ///< smallest gradient bound with a nonempty region
  RegimeCase regime_at_L;  ///< regime under the instance's own L
  Membership membership;   ///< classification of `point` under the instance's own L
};

/// The aggregation point always lies on the segment between the minimizers
/// and is attainable for every gradient bound >= L_min; at L = L_min it is
/// exactly the single attainable point.
AggregationResult fed_point(const ProblemInstance& inst);

/// L_min = |x2* - x1*| / (1/sigma1 + 1/sigma2): the region is empty for
/// L < L_min and nonempty (growing with L) above.  Zero when the minimizers
/// coincide.
double min_gradient_bound(const ProblemInstance& inst);

}  // namespace minregion
