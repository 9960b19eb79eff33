#include "eta/schubert.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eta/eta.hpp"
#include "eta/poly.hpp"
#include "eta/weyl.hpp"

namespace eta {

namespace {

void check(bool ok, const char* msg) {
  if (!ok) throw std::logic_error(msg);
}

// smallest i with u^{-1}(i) > u^{-1}(i+1), or 0 if u is the identity
int smallest_left_descent(const Permutation& u) {
  std::vector<int> pos(u.window() + 1, 0);
  for (int j = 1; j <= u.window(); ++j) pos[u.w[j - 1]] = j;
  for (int i = 1; i + 1 <= u.window(); ++i)
    if (pos[i] > pos[i + 1]) return i;
  return 0;
}

Permutation swap_values(int i, Permutation u) {
  for (int& x : u.w) {
    if (x == i)
      x = i + 1;
    else if (x == i + 1)
      x = i;
  }
  return u;
}

Polynomial schubert_from_staircase(const Permutation& u, int n) {
  if (n <= 1) return Polynomial::one();
  Polynomial f = Polynomial::one();
  for (int i = 1; i < n; ++i) f *= Polynomial::var(var_t(i), n - i);
  // S_u = dd_{c_1} ... dd_{c_q} applied to the staircase, where
  // u^{-1} w_0 = s_{c_1} ... s_{c_q} is reduced
  Permutation v = perm_inverse(u);
  std::reverse(v.w.begin(), v.w.end());  // v = u^{-1} w_0
  std::vector<int> word;
  for (int i = smallest_left_descent(v); i != 0; i = smallest_left_descent(v)) {
    word.push_back(i);
    v = swap_values(i, v);
  }
  check(std::is_sorted(v.w.begin(), v.w.end()),
        "schubert: peeling did not reach the identity");
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = dd_type_a(*it, f);
  return f;
}

}  // namespace

Permutation make_permutation(std::vector<int> w) {
  int n = static_cast<int>(w.size());
  std::vector<char> seen(n + 1, 0);
  for (int x : w) {
    if (x < 1 || x > n || seen[x])
      throw std::invalid_argument("permutation: entries must be 1..n without repeats");
    seen[x] = 1;
  }
  return Permutation{std::move(w)};
}

Permutation trim_permutation(Permutation w) {
  while (!w.w.empty() && w.w.back() == static_cast<int>(w.w.size()))
    w.w.pop_back();
  return w;
}

Permutation extend_permutation(Permutation w, int n) {
  if (n < w.window())
    throw std::invalid_argument("permutation: cannot extend to a smaller window");
  for (int j = w.window() + 1; j <= n; ++j) w.w.push_back(j);
  return w;
}

bool permutation_equal(const Permutation& a, const Permutation& b) {
  return trim_permutation(a).w == trim_permutation(b).w;
}

int perm_length(const Permutation& w) {
  int n = w.window(), inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w.w[i] > w.w[j]) ++inv;
  return inv;
}

Permutation perm_mult(const Permutation& a, const Permutation& b) {
  int n = std::max(a.window(), b.window());
  Permutation ae = extend_permutation(a, n), be = extend_permutation(b, n);
  Permutation out;
  out.w.reserve(n);
  for (int j = 1; j <= n; ++j) out.w.push_back(ae.w[be.w[j - 1] - 1]);
  return out;
}

Permutation perm_inverse(const Permutation& w) {
  Permutation out;
  out.w.assign(w.window(), 0);
  for (int j = 1; j <= w.window(); ++j) out.w[w.w[j - 1] - 1] = j;
  return out;
}

Polynomial dd_type_a(int i, const Polynomial& f) {
  if (i < 1) throw std::invalid_argument("dd_type_a: index must be positive");
  return (f - f.swap_t(i, i + 1))
      .divide_linear(var_t(i), Polynomial::var(var_t(i + 1)));
}

Polynomial schubert_poly(const Permutation& u) {
  Permutation ut = trim_permutation(u);
  static std::mutex mu;
  static std::map<std::vector<int>, Polynomial> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ut.w);
    if (it != cache.end()) return it->second;
  }
  Polynomial f = schubert_from_staircase(ut, ut.window());
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::move(ut.w), std::move(f)).first->second;
}

Polynomial schubert_poly_window(const Permutation& u, int n) {
  return schubert_from_staircase(extend_permutation(trim_permutation(u), n), n);
}

std::vector<RightFactor> reduced_right_factors(const TypedPartition& la) {
  validate(la);
  SignedPermutation wla = partition_to_perm(la);
  int N = std::max(wla.window(), la.k);
  wla = extended(wla, N);
  int lla = length(wla);
  std::vector<RightFactor> out;
  for (const TypedPartition& mu :
       enumerate_typed(la.k, N - la.k, N + la.k - 1)) {
    SignedPermutation wmu = partition_to_perm(mu);
    if (wmu.window() > N || length(wmu) > lla) continue;
    wmu = extended(wmu, N);
    SignedPermutation u = mult(wla, inverse(wmu));
    bool positive = true;
    for (int x : u.w) positive = positive && x > 0;
    if (!positive) continue;
    if (length(u) + length(wmu) != lla) continue;
    out.push_back({make_permutation(u.w), mu});
  }
  return out;
}

Polynomial splitting_rhs(const TypedPartition& la) {
  Polynomial out;
  for (const RightFactor& rf : reduced_right_factors(la))
    out += single_eta(rf.mu) * schubert_poly(perm_inverse(rf.u)).negate_t();
  return out;
}

}  // namespace eta
