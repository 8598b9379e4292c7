#pragma once

// Internal basis reduction. Not part of the public API: the enumeration
// engine and the glue construction use it to get short, nearly orthogonal
// bases before running Fincke-Pohst.

#include "unimod/quadform.hpp"

namespace unimod::detail {

struct ReducedBasis {
  GramMatrix gram;  // Gram matrix of the reduced basis
  IntMatrix transform;  // rows: reduced basis vectors in the input basis
};

// Integral LLL (delta = 3/4) working on the Gram matrix only, exact in GMP
// integers. Requires a positive definite input.
ReducedBasis lll_reduce(const GramMatrix& gram);

}  // namespace unimod::detail
