#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "eta/partition.hpp"
#include "eta/poly.hpp"

namespace eta {

/*****************************************************************************
 * The quotient B^(k)[t] = Z[b,t] / J^(k), where J^(k) is generated by
 *   b_p^2 + sum_{i=1}^p (-1)^i b_{p+i} c_{p-i}        for p > k, and
 *   b_k bt_k + sum_{i=1}^k (-1)^i b_{k+i} b_{k-i}.
 * Reduced monomials are squarefree in the b_p with p > k and never contain
 * b_k and bt_k together; they biject with typed k-strict partitions.
 *****************************************************************************/

class RewriteSystem {
 public:
  explicit RewriteSystem(int k);

  int k() const { return k_; }
  bool is_reduced(const Monomial& m) const;
  // deterministic normal form: pop the largest monomial, rewrite the
  // largest offending subscript
  Polynomial reduce(const Polynomial& f) const;
  // randomized pop and target choice, for confluence spot checks
  Polynomial reduce_randomized(const Polynomial& f, std::uint64_t seed) const;

  // rewrite targets: b_p^2 -> rhs_square(p) for p > k, and
  // b_k bt_k -> rhs_mixed()
  const Polynomial& rhs_square(int p) const;
  const Polynomial& rhs_mixed() const;

 private:
  int k_;
};

Polynomial normal_form(const Polynomial& f, int k);
bool eq_mod_ideal(const Polynomial& f, const Polynomial& g, int k);

// 2^{-ell_k} c_lambda with row ell_k+1 replaced by b_k (type 1) or bt_k
// (type 2)
Polynomial b_lambda(const TypedPartition& la);

struct BasisExpansion {
  // typed_less order; coefficients are polynomials in t only
  std::vector<std::pair<TypedPartition, Polynomial>> terms;

  const Polynomial* coeff(const TypedPartition& la) const;
};

// triangular extraction against normal forms of basis elements supplied by
// the callback; used for both the monomial and the eta bases
BasisExpansion expand_in_basis(
    const Polynomial& f, int k,
    const std::function<Polynomial(const TypedPartition&)>& basis_nf);

BasisExpansion expand_in_b_basis(const Polynomial& f, int k);
BasisExpansion expand_in_eta_basis(const Polynomial& f, int k);

}  // namespace eta
