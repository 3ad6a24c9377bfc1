#pragma once

#include "poisson_ore/poly.hpp"

namespace poisson_ore {

/// Greatest common divisor, monic under grevlex. Computed recursively:
/// content/primitive-part split on one variable, subresultant PRS on the
/// primitive parts. gcd(p, 0) is monic(p); both zero throws
/// PreconditionError.
Poly gcd(const Poly& p, const Poly& q);

/// Content of p as a polynomial in `var` (gcd of its coefficients).
Poly content_in(const Poly& p, std::size_t var);

}  // namespace poisson_ore
