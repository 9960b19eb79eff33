#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "eta/poly.hpp"

namespace eta {

// choice of the degree-k generator f_k: b_k, bt_k, or (c_k)/2
enum class FVariant { Bk, BTildeK, Ak };

/*****************************************************************************
 * The graded ring Z[b,t] attached to a fixed k, with the c/a/b families,
 * the type-D Weyl group action, and divided differences. Thread-safe
 * memoization; instances live forever in a registry.
 *****************************************************************************/

class Ring {
 public:
  explicit Ring(int k);
  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

  int k() const { return k_; }

  const Polynomial& c(int p) const;
  const Polynomial& c_r(int p, int r) const;
  Polynomial a_s(int p, int s) const;
  Polynomial b_s(int s) const;
  Polynomial btilde_s(int s) const;
  Polynomial f_poly(FVariant v) const;
  Polynomial f_s(int s, FVariant v) const;
  Polynomial ftilde(FVariant v) const;
  Polynomial ftilde_s(int s, FVariant v) const;
  Polynomial c_hat(int p, int r, FVariant v) const;
  // hat generator chosen by row parity: odd -> bt_k, even -> b_k
  Polynomial c_hat_row(int p, int r, int row) const;

  Polynomial act(int i, const Polynomial& f) const;
  Polynomial dd(int i, const Polynomial& f) const;

 private:
  const Polynomial& s0_power(VarCode v, int e) const;

  int k_;
  mutable std::mutex mu_;
  mutable std::map<int, Polynomial> c_cache_;
  mutable std::map<std::pair<int, int>, Polynomial> cr_cache_;
  mutable std::map<std::pair<VarCode, int>, Polynomial> s0pow_cache_;
};

Ring& ring(int k);

// elementary/complete symmetric polynomials in t_1..t_r; j < 0 gives 0,
// j = 0 gives 1; r < 0 swaps the two families; negate evaluates at -t
Polynomial e_sym(int j, int r, bool negate);
Polynomial h_sym(int j, int r, bool negate);

// free functions mirroring the Ring members
Polynomial c(int p, int k);
Polynomial c_r(int p, int r, int k);
Polynomial a_s(int p, int s, int k);
Polynomial b_s(int s, int k);
Polynomial btilde_s(int s, int k);
Polynomial f_s(int s, int k, FVariant v);
Polynomial ftilde_s(int s, int k, FVariant v);
Polynomial c_hat(int p, int r, int k, FVariant v);
Polynomial weyl_action(int i, const Polynomial& f, int k);
Polynomial divided_difference(int i, const Polynomial& f, int k);

}  // namespace eta
