#pragma once

#include <vector>

#include "types.hpp"

namespace hypres {

// Evaluate a real-coefficient polynomial (ascending coefficients) at z.
cplx polyval(const std::vector<double>& coeff, cplx z);
cplx polyval_deriv(const std::vector<double>& coeff, cplx z);

// All complex roots of a real polynomial via the companion matrix, Newton
// polished.  Conjugate pairs are returned exactly symmetric and real roots
// exactly real.  Leading zero coefficients are trimmed.
std::vector<cplx> poly_roots(const std::vector<double>& coeff);

}  // namespace hypres
