#pragma once

#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "eta/partition.hpp"
#include "eta/poly.hpp"

namespace eta {

/*****************************************************************************
 * Double eta polynomials via raising operator expansions.
 *****************************************************************************/

struct RaisingMonomial {
  std::map<std::pair<int, int>, int> exps;  // (i,j) -> n_ij > 0
  mpz_class coeff;

  int inflow(int row) const;   // boxes gained: sum of n_{row,j}
  int outflow(int row) const;  // boxes lost: sum of n_{i,row}
};

struct StarContext {
  int k = 1;
  std::vector<int> beta;  // characteristic sequence, 1-based rows
  int type = 0;
  int m = 1;           // ell_k + 1
  bool hatted = false;  // hatted class: type-0-style rule on any shape
};

StarContext star_context(const TypedPartition& la);
StarContext star_context_hatted(const std::vector<int>& parts, int k);

// the full expansion of prod_{i<j}(1-R_ij) prod_{C}(1+R_ij)^{-1} applied to
// lambda, pruned to nonnegative exponent vectors
std::vector<RaisingMonomial> expand_raising(const TypedPartition& la);

// one summand: the starred product for R applied to lambda
Polynomial star_apply(const RaisingMonomial& R, const TypedPartition& la,
                      const StarContext& ctx);

Polynomial double_eta(const TypedPartition& la);
Polynomial double_eta_hat(const std::vector<int>& parts, int k);
Polynomial single_eta(const TypedPartition& la);

// the class of the top cell, computed from the direct all-pairs expansion
Polynomial top_class(int k, int n);
// divided-difference reconstruction from the top class down to lambda
Polynomial eta_via_divided_differences(const TypedPartition& la, int k, int n);

}  // namespace eta
