#pragma once

#include <string>
#include <vector>

#include "eta/partition.hpp"
#include "eta/poly.hpp"

namespace eta {

/*****************************************************************************
 * Type A Schubert polynomials in the t variables, and the expansion of a
 * double polynomial as sum of single polynomials times Schubert polynomials
 * coming from reduced factorizations of the indexing group element.
 *****************************************************************************/

struct Permutation {
  std::vector<int> w;  // one-line notation, positive entries

  int window() const { return static_cast<int>(w.size()); }
};

Permutation make_permutation(std::vector<int> w);
Permutation trim_permutation(Permutation w);
Permutation extend_permutation(Permutation w, int n);
bool permutation_equal(const Permutation& a, const Permutation& b);

int perm_length(const Permutation& w);
Permutation perm_mult(const Permutation& a, const Permutation& b);
Permutation perm_inverse(const Permutation& w);

// (f - f with t_i, t_{i+1} swapped) / (t_i - t_{i+1})
Polynomial dd_type_a(int i, const Polynomial& f);

// computed from the staircase monomial of the trimmed window by divided
// differences; stable under window extension
Polynomial schubert_poly(const Permutation& u);
Polynomial schubert_poly_window(const Permutation& u, int n);

// reduced factorization w_lambda = u w_mu with u free of sign changes
struct RightFactor {
  Permutation u;
  TypedPartition mu;
};

std::vector<RightFactor> reduced_right_factors(const TypedPartition& la);

// sum of H_mu(c) S_{u^{-1}}(-t) over all reduced right factorizations
Polynomial splitting_rhs(const TypedPartition& la);

}  // namespace eta
