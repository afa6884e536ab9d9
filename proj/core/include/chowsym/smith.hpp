#pragma once

#include <vector>

#include "chowsym/int_matrix.hpp"

namespace chowsym {

/// D = U * M * V with U, V unimodular and D diagonal, d1 | d2 | ... .
struct SmithDecomposition {
  IntMatrix diagonal;  // D, same shape as M
  IntMatrix left;      // U, rows(M) x rows(M)
  IntMatrix right;     // V, cols(M) x cols(M)
  std::vector<BigInt> invariant_factors;  // nonzero diagonal entries, all positive
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

}  // namespace chowsym
