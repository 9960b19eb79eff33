#include "eta/eta.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "eta/partition.hpp"
#include "eta/poly.hpp"
#include "eta/quotient.hpp"
#include "eta/ring.hpp"
#include "eta/weyl.hpp"

namespace eta {

namespace {

void check(bool ok, const char* msg) {
  if (!ok) throw std::logic_error(msg);
}

/*****************************************************************************
 * Expansion of prod_{i<j}(1-R_ij) prod_C (1+R_ij)^{-1} on a fixed shape.
 * A pair outside C contributes exponent 0 or 1 with sign (-1)^n; a pair in
 * C contributes any n >= 0 with coefficient 2(-1)^n for n >= 1. Groups with
 * a common second index j are filled from j = ell down to 2 under the budget
 * sum_i n_ij <= lambda_j + (boxes already flowing into row j), which prunes
 * exactly the monomials that drive some row negative.
 *****************************************************************************/
struct RaisingEnumerator {
  const std::vector<int>& parts;
  std::function<bool(int, int)> in_c;

  std::vector<RaisingMonomial> out;
  std::vector<int> gained;
  std::vector<std::pair<std::pair<int, int>, int>> cur;
  int sign = 1;
  int twos = 0;

  void run() {
    int ell = static_cast<int>(parts.size());
    gained.assign(ell + 2, 0);
    group(ell);
  }

  void group(int j) {
    if (j < 2) {
      emit();
      return;
    }
    pick(j, j - 1, parts[j - 1] + gained[j]);
  }

  void pick(int j, int i, int rem) {
    if (i == 0) {
      group(j - 1);
      return;
    }
    pick(j, i - 1, rem);
    if (in_c(i, j)) {
      for (int n = 1; n <= rem; ++n) {
        cur.push_back({{i, j}, n});
        gained[i] += n;
        int save_sign = sign, save_twos = twos;
        sign = (n % 2 != 0) ? -sign : sign;
        ++twos;
        pick(j, i - 1, rem - n);
        sign = save_sign;
        twos = save_twos;
        gained[i] -= n;
        cur.pop_back();
      }
    } else if (rem >= 1) {
      cur.push_back({{i, j}, 1});
      gained[i] += 1;
      sign = -sign;
      pick(j, i - 1, rem - 1);
      sign = -sign;
      gained[i] -= 1;
      cur.pop_back();
    }
  }

  void emit() {
    RaisingMonomial rm;
    for (const auto& [ij, n] : cur) rm.exps.emplace(ij, n);
    rm.coeff = sign;
    for (int s = 0; s < twos; ++s) rm.coeff *= 2;
    out.push_back(std::move(rm));
  }
};

std::vector<RaisingMonomial> expand_on_shape(
    const std::vector<int>& parts, const std::function<bool(int, int)>& in_c) {
  RaisingEnumerator en{parts, in_c, {}, {}, {}, 1, 0};
  en.run();
  return en.out;
}

// one c-bar factor: plain when the row lies in the support, hatted otherwise
Polynomial cbar(const Ring& R, int p, int r, int row, std::uint64_t supp) {
  if (row <= 63 && ((supp >> (row - 1)) & 1)) return R.c_r(p, r);
  return R.c_hat_row(p, r, row);
}

Polynomial star_eval(const StarContext& ctx, const std::vector<int>& nu,
                     std::uint64_t supp, bool touch) {
  const Ring& R = ring(ctx.k);
  check(nu.size() <= ctx.beta.size(), "star: characteristic sequence too short");
  Polynomial out = Polynomial::one();
  for (int i = 1; i <= static_cast<int>(nu.size()); ++i) {
    int vi = nu[i - 1];
    int bi = ctx.beta[i - 1];
    if (!ctx.hatted && ctx.type > 0) {
      if (i == ctx.m) {
        if (touch) {
          check(bi == 0 || bi == 1, "star: middle row superscript must be 0 or 1");
          out *= R.a_s(vi, bi);
        } else {
          check(vi == ctx.k, "star: untouched middle row must carry k boxes");
          out *= (ctx.type == 1) ? R.b_s(bi) : R.btilde_s(bi);
        }
        continue;
      }
      if (i > ctx.m) {
        out *= R.c_r(vi, bi);
        continue;
      }
    }
    out *= cbar(R, vi, bi, i, supp);
    if (out.is_zero()) return out;
  }
  return out;
}

// aggregate equal star arguments before evaluating; the key is the exponent
// vector together with the support mask and the middle-row flag
Polynomial eval_expansion(const StarContext& ctx, const std::vector<int>& parts,
                          const std::vector<RaisingMonomial>& monos) {
  check(parts.size() < 64, "eval: shape too long for the support mask");
  using Key = std::tuple<std::vector<int>, std::uint64_t, bool>;
  std::map<Key, mpz_class> agg;
  for (const auto& rm : monos) {
    std::vector<int> nu(parts);
    std::uint64_t supp = 0;
    bool touch = false;
    for (const auto& [ij, n] : rm.exps) {
      if (n <= 0) continue;
      nu[ij.first - 1] += n;
      nu[ij.second - 1] -= n;
      if (ij.first == ctx.m || ij.second == ctx.m) touch = true;
      if (ij.second < ctx.m) {
        supp |= std::uint64_t(1) << (ij.first - 1);
        supp |= std::uint64_t(1) << (ij.second - 1);
      }
    }
    agg[Key{std::move(nu), supp, touch}] += rm.coeff;
  }
  Polynomial out;
  for (const auto& [key, cf] : agg) {
    if (cf == 0) continue;
    out += star_eval(ctx, std::get<0>(key), std::get<1>(key), std::get<2>(key)) *
           mpq_class(cf);
  }
  return out;
}

mpq_class half_power(int lk) {
  mpz_class den(1);
  for (int s = 0; s < lk; ++s) den *= 2;
  return mpq_class(mpz_class(1), den);
}

// memo for the double polynomials; the hatted class is keyed with type -1
std::mutex eta_mu;
std::map<std::tuple<int, std::vector<int>, int>, Polynomial> eta_cache;

Polynomial cached(int k, const std::vector<int>& parts, int typekey,
                  const std::function<Polynomial()>& compute) {
  std::tuple<int, std::vector<int>, int> key{k, parts, typekey};
  {
    std::lock_guard<std::mutex> lock(eta_mu);
    auto it = eta_cache.find(key);
    if (it != eta_cache.end()) return it->second;
  }
  Polynomial h = compute();
  std::lock_guard<std::mutex> lock(eta_mu);
  return eta_cache.emplace(std::move(key), std::move(h)).first->second;
}

std::vector<int> strip_zeros(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return parts;
}

}  // namespace

int RaisingMonomial::inflow(int row) const {
  int s = 0;
  for (const auto& [ij, n] : exps)
    if (ij.first == row) s += n;
  return s;
}

int RaisingMonomial::outflow(int row) const {
  int s = 0;
  for (const auto& [ij, n] : exps)
    if (ij.second == row) s += n;
  return s;
}

StarContext star_context(const TypedPartition& la) {
  validate(la);
  StarContext ctx;
  ctx.k = la.k;
  ctx.type = la.type;
  ctx.m = la.ell_k() + 1;
  ctx.hatted = false;
  ctx.beta = beta(la, std::max(la.length(), ctx.m));
  return ctx;
}

StarContext star_context_hatted(const std::vector<int>& raw, int k) {
  std::vector<int> parts = strip_zeros(raw);
  bool haspk = std::find(parts.begin(), parts.end(), k) != parts.end();
  TypedPartition lift = make_typed(parts, k, haspk ? 1 : 0);
  StarContext ctx;
  ctx.k = k;
  ctx.type = 0;
  ctx.m = lift.ell_k() + 1;
  ctx.hatted = true;
  ctx.beta = beta_bar(parts, k, std::max(lift.length(), ctx.m));
  return ctx;
}

std::vector<RaisingMonomial> expand_raising(const TypedPartition& la) {
  validate(la);
  std::set<std::pair<int, int>> cpairs = c_set(la);
  return expand_on_shape(la.parts, [&cpairs](int i, int j) {
    return cpairs.count({i, j}) > 0;
  });
}

Polynomial star_apply(const RaisingMonomial& R, const TypedPartition& la,
                      const StarContext& ctx) {
  validate(la);
  if (la.k != ctx.k) throw std::invalid_argument("star_apply: k mismatch");
  int maxidx = la.length();
  for (const auto& [ij, n] : R.exps) {
    if (n < 0) throw std::invalid_argument("star_apply: negative exponent");
    if (ij.first < 1 || ij.first >= ij.second)
      throw std::invalid_argument("star_apply: malformed raising pair");
    if (n > 0) maxidx = std::max(maxidx, ij.second);
  }
  std::vector<int> nu(maxidx, 0);
  for (int a = 1; a <= la.length(); ++a) nu[a - 1] = la.part(a);
  std::uint64_t supp = 0;
  bool touch = false;
  for (const auto& [ij, n] : R.exps) {
    if (n <= 0) continue;
    nu[ij.first - 1] += n;
    nu[ij.second - 1] -= n;
    if (ij.first == ctx.m || ij.second == ctx.m) touch = true;
    if (ij.second < ctx.m && ij.second <= 63) {
      supp |= std::uint64_t(1) << (ij.first - 1);
      supp |= std::uint64_t(1) << (ij.second - 1);
    }
  }
  for (int v : nu)
    if (v < 0) return Polynomial::zero();
  // activity beyond the shape with all rows nonnegative cannot happen: the
  // largest active row only loses boxes
  check(maxidx == la.length() || nu[la.length()] >= 0, "star_apply: row audit");
  for (int a = la.length() + 1; a <= maxidx; ++a)
    check(nu[a - 1] == 0, "star_apply: activity beyond the shape");
  nu.resize(la.length());
  return star_eval(ctx, nu, supp, touch);
}

Polynomial double_eta(const TypedPartition& la) {
  validate(la);
  return cached(la.k, la.parts, la.type, [&la]() {
    StarContext ctx = star_context(la);
    std::vector<RaisingMonomial> monos = expand_raising(la);
    Polynomial h = eval_expansion(ctx, la.parts, monos);
    h *= half_power(la.ell_k());
    check(h.is_integral(), "double eta: non-integral expansion");
    check(h.is_homogeneous(la.weight()), "double eta: non-homogeneous expansion");
    return h;
  });
}

Polynomial double_eta_hat(const std::vector<int>& raw, int k) {
  std::vector<int> parts = strip_zeros(raw);
  bool haspk = std::find(parts.begin(), parts.end(), k) != parts.end();
  TypedPartition lift = make_typed(parts, k, haspk ? 1 : 0);
  return cached(k, parts, -1, [&parts, &lift, k]() {
    StarContext ctx = star_context_hatted(parts, k);
    std::vector<RaisingMonomial> monos = expand_raising(lift);
    Polynomial h = eval_expansion(ctx, parts, monos);
    h *= half_power(lift.ell_k());
    check(h.is_integral(), "hatted eta: non-integral expansion");
    check(h.is_homogeneous(lift.weight()), "hatted eta: non-homogeneous expansion");
    return h;
  });
}

Polynomial single_eta(const TypedPartition& la) {
  return double_eta(la).zero_t();
}

Polynomial top_class(int k, int n) {
  TypedPartition top = top_partition(k, n);
  return cached(k, top.parts, -2, [&top, k, n]() {
    int ell = top.length();
    StarContext ctx;
    ctx.k = k;
    ctx.type = 0;
    ctx.m = top.ell_k() + 1;
    ctx.hatted = true;
    for (int i = 1; i <= std::max(ell, ctx.m); ++i) ctx.beta.push_back(i - n);
    std::vector<RaisingMonomial> monos =
        expand_on_shape(top.parts, [](int, int) { return true; });
    Polynomial h = eval_expansion(ctx, top.parts, monos);
    h *= half_power(top.ell_k());
    check(h.is_integral(), "top class: non-integral expansion");
    check(h.is_homogeneous(top.weight()), "top class: non-homogeneous expansion");
    return h;
  });
}

Polynomial eta_via_divided_differences(const TypedPartition& la, int k, int n) {
  std::vector<int> word = reduced_word_to_top(la, k, n);
  Polynomial h = top_class(k, n);
  const Ring& R = ring(k);
  for (auto it = word.rbegin(); it != word.rend(); ++it) h = R.dd(*it, h);
  return h;
}

BasisExpansion expand_in_eta_basis(const Polynomial& f, int k) {
  return expand_in_basis(f, k, [k](const TypedPartition& la) {
    return normal_form(double_eta(la), k);
  });
}

}  // namespace eta
