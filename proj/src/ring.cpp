#include "eta/ring.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace eta {

/*****************************************************************************
 * Symmetric polynomial families (k-independent)
 *****************************************************************************/

namespace {

std::mutex sym_mu;
std::map<std::pair<int, int>, Polynomial> e_cache, h_cache;

const Polynomial& e_plain(int j, int r);

const Polynomial& h_plain(int j, int r) {
  // h_j(t_1..t_r) = h_j(t_1..t_{r-1}) + t_r h_{j-1}(t_1..t_r)
  {
    std::lock_guard<std::mutex> lock(sym_mu);
    auto it = h_cache.find({j, r});
    if (it != h_cache.end()) return it->second;
  }
  Polynomial val;
  if (j == 0) {
    val = Polynomial::one();
  } else if (j > 0 && r > 0) {
    val = h_plain(j, r - 1) + Polynomial::var(var_t(r)) * h_plain(j - 1, r);
  }
  std::lock_guard<std::mutex> lock(sym_mu);
  return h_cache.emplace(std::make_pair(j, r), std::move(val))
      .first->second;
}

const Polynomial& e_plain(int j, int r) {
  // e_j(t_1..t_r) = e_j(t_1..t_{r-1}) + t_r e_{j-1}(t_1..t_{r-1})
  {
    std::lock_guard<std::mutex> lock(sym_mu);
    auto it = e_cache.find({j, r});
    if (it != e_cache.end()) return it->second;
  }
  Polynomial val;
  if (j == 0) {
    val = Polynomial::one();
  } else if (j > 0 && j <= r) {
    val = e_plain(j, r - 1) + Polynomial::var(var_t(r)) * e_plain(j - 1, r - 1);
  }
  std::lock_guard<std::mutex> lock(sym_mu);
  return e_cache.emplace(std::make_pair(j, r), std::move(val))
      .first->second;
}

Polynomial with_sign(const Polynomial& p, int j, bool negate) {
  if (!negate || j % 2 == 0) return p;
  return -p;
}

}  // namespace

Polynomial e_sym(int j, int r, bool negate) {
  if (j < 0) return Polynomial::zero();
  if (r < 0) return h_sym(j, -r, negate);
  return with_sign(e_plain(j, r), j, negate);
}

Polynomial h_sym(int j, int r, bool negate) {
  if (j < 0) return Polynomial::zero();
  if (r < 0) return e_sym(j, -r, negate);
  return with_sign(h_plain(j, r), j, negate);
}

/*****************************************************************************
 * Ring
 *****************************************************************************/

Ring::Ring(int k) : k_(k) {
  if (k < 1) throw std::invalid_argument("ring: k must be >= 1");
}

const Polynomial& Ring::c(int p) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = c_cache_.find(p);
    if (it != c_cache_.end()) return it->second;
  }
  Polynomial val;
  if (p == 0) {
    val = Polynomial::one();
  } else if (p > 0) {
    if (p < k_) {
      val = Polynomial::var(var_b(p));
    } else if (p == k_) {
      val = Polynomial::var(var_b(p)) + Polynomial::var(var_bt(k_));
    } else {
      val = Polynomial::var(var_b(p)) * mpq_class(2);
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  return c_cache_.emplace(p, std::move(val)).first->second;
}

const Polynomial& Ring::c_r(int p, int r) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cr_cache_.find({p, r});
    if (it != cr_cache_.end()) return it->second;
  }
  Polynomial val;
  for (int j = 0; j <= std::max(p, 0); ++j) {
    Polynomial hj = h_sym(j, r, true);
    if (hj.is_zero()) continue;
    val += c(p - j) * hj;
  }
  std::lock_guard<std::mutex> lock(mu_);
  return cr_cache_.emplace(std::make_pair(p, r), std::move(val))
      .first->second;
}

Polynomial Ring::a_s(int p, int s) const {
  if (s != 0 && s != 1) throw std::invalid_argument("a_s: s must be 0 or 1");
  Polynomial val = c(p) * mpq_class(1, 2);
  for (int j = 1; j <= p; ++j) val += c(p - j) * h_sym(j, s, true);
  return val;
}

Polynomial Ring::b_s(int s) const {
  Polynomial val = Polynomial::var(var_b(k_));
  for (int j = 1; j <= k_; ++j) val += c(k_ - j) * h_sym(j, s, true);
  return val;
}

Polynomial Ring::btilde_s(int s) const {
  Polynomial val = Polynomial::var(var_bt(k_));
  for (int j = 1; j <= k_; ++j) val += c(k_ - j) * h_sym(j, s, true);
  return val;
}

Polynomial Ring::f_poly(FVariant v) const {
  switch (v) {
    case FVariant::Bk: return Polynomial::var(var_b(k_));
    case FVariant::BTildeK: return Polynomial::var(var_bt(k_));
    case FVariant::Ak: return c(k_) * mpq_class(1, 2);
  }
  throw std::logic_error("f_poly: bad variant");
}

Polynomial Ring::f_s(int s, FVariant v) const {
  Polynomial val = f_poly(v);
  for (int j = 1; j <= k_; ++j) val += c(k_ - j) * h_sym(j, s, true);
  return val;
}

Polynomial Ring::ftilde(FVariant v) const { return c(k_) - f_poly(v); }

Polynomial Ring::ftilde_s(int s, FVariant v) const {
  return c(k_) - f_poly(v) * mpq_class(2) + f_s(s, v);
}

Polynomial Ring::c_hat(int p, int r, FVariant v) const {
  Polynomial val = c_r(p, r);
  if (r == k_ - p && r < 0) {
    val += (f_poly(v) * mpq_class(2) - c(k_)) * e_sym(p - k_, p - k_, true);
  }
  return val;
}

Polynomial Ring::c_hat_row(int p, int r, int row) const {
  return c_hat(p, r, row % 2 == 1 ? FVariant::BTildeK : FVariant::Bk);
}

/*****************************************************************************
 * Weyl group action and divided differences
 *****************************************************************************/

const Polynomial& Ring::s0_power(VarCode v, int e) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = s0pow_cache_.find({v, e});
    if (it != s0pow_cache_.end()) return it->second;
  }
  Polynomial val;
  if (e == 1) {
    Polynomial ts = Polynomial::var(var_t(1)) + Polynomial::var(var_t(2));
    int p = var_index(v);
    if (var_tag(v) == VarTag::BTilde) {
      val = Polynomial::var(v) - ts * c_r(k_ - 1, 2);
    } else if (p < k_) {
      val = Polynomial::var(v) - ts * c_r(p - 1, 2) * mpq_class(2);
    } else {
      val = Polynomial::var(v) - ts * c_r(p - 1, 2);
    }
  } else {
    val = s0_power(v, e - 1) * s0_power(v, 1);
  }
  std::lock_guard<std::mutex> lock(mu_);
  return s0pow_cache_.emplace(std::make_pair(v, e), std::move(val))
      .first->second;
}

Polynomial Ring::act(int i, const Polynomial& f) const {
  if (i < 0) throw std::invalid_argument("act: negative index");
  if (i >= 1) return f.swap_t(i, i + 1);
  Polynomial out;
  for (const auto& [m, coeff] : f.terms()) {
    std::vector<std::pair<VarCode, int>> tpart;
    Polynomial prod;
    bool have_prod = false;
    int sign = 1;
    for (const auto& [v, e] : m.factors()) {
      if (var_tag(v) == VarTag::T) {
        int idx = var_index(v);
        if (idx == 1) {
          tpart.push_back({var_t(2), e});
          if (e % 2 != 0) sign = -sign;
        } else if (idx == 2) {
          tpart.push_back({var_t(1), e});
          if (e % 2 != 0) sign = -sign;
        } else {
          tpart.push_back({v, e});
        }
      } else {
        const Polynomial& img = s0_power(v, e);
        prod = have_prod ? prod * img : img;
        have_prod = true;
      }
    }
    Polynomial term =
        Polynomial::term(coeff * sign, Monomial(std::move(tpart)));
    out += have_prod ? term * prod : term;
  }
  return out;
}

Polynomial Ring::dd(int i, const Polynomial& f) const {
  if (i == 0) {
    Polynomial g = f - act(0, f);
    if (g.is_zero()) return g;
    return g.divide_linear(var_t(2), -Polynomial::var(var_t(1)));
  }
  // for i >= 1 the quotient is termwise explicit: on t_i^a t_{i+1}^b m
  // with m fixed by s_i, (x - s_i x)/(t_{i+1} - t_i) telescopes to a
  // geometric sum of |a - b| monomials
  VarCode lo = var_t(i), hi = var_t(i + 1);
  Polynomial out;
  for (const auto& [m, coeff] : f.terms()) {
    int a = m.exponent(lo), b = m.exponent(hi);
    if (a == b) continue;
    std::vector<std::pair<VarCode, int>> rest;
    rest.reserve(m.factors().size() + 1);
    for (const auto& [v, e] : m.factors())
      if (v != lo && v != hi) rest.push_back({v, e});
    mpq_class cc = a < b ? coeff : -coeff;
    int base = std::min(a, b), d = std::abs(a - b);
    for (int j = 0; j < d; ++j) {
      std::vector<std::pair<VarCode, int>> fs = rest;
      if (base + j > 0) fs.push_back({lo, base + j});
      if (base + d - 1 - j > 0) fs.push_back({hi, base + d - 1 - j});
      out.add_term(Monomial(std::move(fs)), cc);
    }
  }
  return out;
}

/*****************************************************************************
 * Registry and free functions
 *****************************************************************************/

Ring& ring(int k) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Ring>> rings;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = rings[k];
  if (!slot) slot = std::make_unique<Ring>(k);
  return *slot;
}

Polynomial c(int p, int k) { return ring(k).c(p); }
Polynomial c_r(int p, int r, int k) { return ring(k).c_r(p, r); }
Polynomial a_s(int p, int s, int k) { return ring(k).a_s(p, s); }
Polynomial b_s(int s, int k) { return ring(k).b_s(s); }
Polynomial btilde_s(int s, int k) { return ring(k).btilde_s(s); }
Polynomial f_s(int s, int k, FVariant v) { return ring(k).f_s(s, v); }
Polynomial ftilde_s(int s, int k, FVariant v) { return ring(k).ftilde_s(s, v); }
Polynomial c_hat(int p, int r, int k, FVariant v) {
  return ring(k).c_hat(p, r, v);
}
Polynomial weyl_action(int i, const Polynomial& f, int k) {
  return ring(k).act(i, f);
}
Polynomial divided_difference(int i, const Polynomial& f, int k) {
  return ring(k).dd(i, f);
}

}  // namespace eta
