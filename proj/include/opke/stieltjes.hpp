#pragma once

#include "opke/types.hpp"
#include "opke/weight.hpp"

namespace opke {

/// G(beta) = integral of d(mu)(t) / (t - beta) for non-real beta.
/// Closed forms for the arcsine and uniform families, pinned to the branch
/// with G(beta) ~ -1/beta at infinity; adaptive quadrature of the density
/// otherwise (absolute tolerance `tol`).
Complex stieltjes_transform(const WeightSpec& spec, Complex beta,
                            double tol = 1e-10);

}  // namespace opke
