#include "eta/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eta {

namespace {

void check(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("weyl audit: ") + what);
}

}  // namespace

SignedPermutation make_signed_perm(std::vector<int> w) {
  int n = static_cast<int>(w.size());
  std::vector<bool> seen(n + 1, false);
  int negatives = 0;
  for (int v : w) {
    int a = std::abs(v);
    if (a < 1 || a > n || seen[a]) {
      throw std::invalid_argument(
          "signed permutation: entries must be +-1..n, each once");
    }
    seen[a] = true;
    if (v < 0) ++negatives;
  }
  if (negatives % 2 != 0) {
    throw std::invalid_argument(
        "signed permutation: needs an even number of sign changes");
  }
  return SignedPermutation{std::move(w)};
}

SignedPermutation identity_perm(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return SignedPermutation{std::move(w)};
}

SignedPermutation trimmed(SignedPermutation w) {
  while (!w.w.empty() &&
         w.w.back() == static_cast<int>(w.w.size())) {
    w.w.pop_back();
  }
  return w;
}

SignedPermutation extended(SignedPermutation w, int n) {
  for (int j = w.window() + 1; j <= n; ++j) w.w.push_back(j);
  return w;
}

bool perm_equal(const SignedPermutation& a, const SignedPermutation& b) {
  return trimmed(a).w == trimmed(b).w;
}

bool is_identity(const SignedPermutation& w) {
  return trimmed(w).w.empty();
}

int apply(const SignedPermutation& w, int v) {
  int a = std::abs(v);
  if (a == 0) throw std::invalid_argument("apply: zero is not a letter");
  if (a > w.window()) return v;
  return v > 0 ? w.w[a - 1] : -w.w[a - 1];
}

int position_of(const SignedPermutation& w, int v) {
  if (v < 1) throw std::invalid_argument("position_of: value must be >= 1");
  for (int j = 1; j <= w.window(); ++j) {
    if (w.w[j - 1] == v) return j;
    if (w.w[j - 1] == -v) return -j;
  }
  return v;  // fixed beyond the window
}

int length(const SignedPermutation& w) {
  int n = w.window();
  int inv = 0, neg = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (w.w[i] > w.w[j]) ++inv;
    }
    if (w.w[i] < 0) neg += -w.w[i] - 1;
  }
  return inv + neg;
}

SignedPermutation mult(const SignedPermutation& a,
                       const SignedPermutation& b) {
  int n = std::max(a.window(), b.window());
  std::vector<int> w(n);
  for (int j = 1; j <= n; ++j) w[j - 1] = apply(a, apply(b, j));
  return SignedPermutation{std::move(w)};
}

SignedPermutation inverse(const SignedPermutation& w) {
  int n = w.window();
  std::vector<int> inv(n);
  for (int j = 1; j <= n; ++j) {
    int v = w.w[j - 1];
    inv[std::abs(v) - 1] = v > 0 ? j : -j;
  }
  return SignedPermutation{std::move(inv)};
}

SignedPermutation apply_s_left(int i, const SignedPermutation& w) {
  if (i < 0) throw std::invalid_argument("apply_s_left: negative index");
  SignedPermutation r = extended(w, std::max(i + 1, 2));
  for (int& v : r.w) {
    int a = std::abs(v), s = v > 0 ? 1 : -1;
    if (i == 0) {
      if (a == 1) {
        v = -s * 2;
      } else if (a == 2) {
        v = -s * 1;
      }
    } else {
      if (a == i) {
        v = s * (i + 1);
      } else if (a == i + 1) {
        v = s * i;
      }
    }
  }
  return r;
}

bool is_left_descent(int i, const SignedPermutation& w) {
  if (i < 0) throw std::invalid_argument("is_left_descent: negative index");
  if (i == 0) return position_of(w, 1) + position_of(w, 2) < 0;
  return position_of(w, i) > position_of(w, i + 1);
}

bool is_k_grassmannian(const SignedPermutation& w, int k) {
  if (k < 1) throw std::invalid_argument("is_k_grassmannian: k must be >= 1");
  SignedPermutation v = extended(w, std::max(w.window(), k + 1));
  int n = v.window();
  for (int j = 2; j <= k; ++j) {
    if (v.w[j - 1] < 0) return false;
  }
  if (k >= 2 && std::abs(v.w[0]) >= v.w[1]) return false;
  for (int j = 2; j < k; ++j) {
    if (v.w[j - 1] >= v.w[j]) return false;
  }
  for (int j = k + 1; j < n; ++j) {
    if (v.w[j - 1] >= v.w[j]) return false;
  }
  return true;
}

TypedPartition perm_to_partition(const SignedPermutation& w, int k) {
  if (!is_k_grassmannian(w, k)) {
    throw std::invalid_argument("perm_to_partition: not k-Grassmannian");
  }
  SignedPermutation v = extended(w, std::max(w.window(), k + 1));
  int n = v.window();
  std::vector<int> parts;
  for (int j = 1; k + j <= n; ++j) {
    int x = v.w[k + j - 1];
    int lam;
    if (x < 0) {
      lam = k - 1 - x;
    } else {
      lam = 0;
      for (int p = 1; p <= k; ++p) {
        if (std::abs(v.w[p - 1]) > x) ++lam;
      }
    }
    parts.push_back(lam);
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  int w1 = v.w[0];
  int type = std::abs(w1) == 1 ? 0 : (w1 > 0 ? 1 : 2);
  return make_typed(std::move(parts), k, type);
}

SignedPermutation partition_to_perm(const TypedPartition& la) {
  validate(la);
  int k = la.k, L = la.length(), lk = la.ell_k(), tau = la.type;
  int m = lk + 1;
  std::vector<int> v(L + 1, 0);  // 1-based tail values
  std::set<int> used;
  for (int j = 1; j <= lk; ++j) {
    v[j] = -(la.part(j) - k + 1);
    used.insert(-v[j]);
  }
  bool variant_a = tau > 0 && (lk + tau) % 2 == 0;
  if (variant_a) {
    check(m <= L && la.part(m) == k, "variant-a row must carry a k part");
    v[m] = -1;
    used.insert(1);
  }
  std::vector<int> head;
  int jrow = 1;
  while (jrow <= L && v[jrow] != 0) ++jrow;
  int x = 1;
  while (jrow <= L || static_cast<int>(head.size()) < k) {
    if (used.count(x)) {
      ++x;
      continue;
    }
    int h = static_cast<int>(head.size());
    if (jrow <= L && la.part(jrow) == k - h) {
      v[jrow] = x;
      used.insert(x);
      ++jrow;
      while (jrow <= L && v[jrow] != 0) ++jrow;
    } else {
      check(h < k, "head overflow");
      check(jrow > L || la.part(jrow) < k - h, "row skipped out of order");
      head.push_back(x);
      used.insert(x);
    }
    ++x;
  }
  int maxused = used.empty() ? 0 : *used.rbegin();
  int n = std::max(maxused, k + L);
  std::vector<int> w(n);
  std::sort(head.begin(), head.end());
  for (int p = 2; p <= k; ++p) w[p - 1] = head[p - 1];
  for (int j = 1; j <= L; ++j) w[k + j - 1] = v[j];
  std::vector<int> trailing;
  for (int y = 1; y <= n; ++y) {
    if (!used.count(y)) trailing.push_back(y);
  }
  for (std::size_t t = 0; t < trailing.size(); ++t) {
    w[k + L + t] = trailing[t];
  }
  int negs = lk + (variant_a ? 1 : 0);
  if (tau == 0) {
    check(head[0] == 1, "type 0 needs |w_1| = 1");
    w[0] = negs % 2 == 0 ? head[0] : -head[0];
  } else {
    check(head[0] > 1, "positive type needs |w_1| > 1");
    w[0] = tau == 1 ? head[0] : -head[0];
    check((negs + (tau == 2 ? 1 : 0)) % 2 == 0, "sign parity");
  }
  SignedPermutation out = make_signed_perm(std::move(w));
  check(is_k_grassmannian(out, k), "constructed element not k-Grassmannian");
  check(perm_to_partition(out, k) == la, "round trip failed");
  check(length(out) == la.weight(), "length must equal the weight");
  return out;
}

std::vector<int> beta(const TypedPartition& la, int len) {
  if (len < 0) throw std::invalid_argument("beta: negative length");
  SignedPermutation w = partition_to_perm(la);
  w = extended(std::move(w), la.k + len);
  std::vector<int> out;
  for (int j = 1; j <= len; ++j) {
    int x = w.w[la.k + j - 1];
    out.push_back(x < 0 ? x + 1 : x);
  }
  return out;
}

std::string cover_case_name(CoverCase c) {
  switch (c) {
    case CoverCase::a: return "a";
    case CoverCase::b: return "b";
    case CoverCase::c: return "c";
    case CoverCase::d1: return "d1";
    case CoverCase::d2: return "d2";
    case CoverCase::e: return "e";
    case CoverCase::f: return "f";
    case CoverCase::g: return "g";
  }
  throw std::logic_error("cover_case_name: bad case");
}

namespace {

// single changed row of a one-box cover
int changed_row(const TypedPartition& la, const TypedPartition& mu) {
  int len = std::max(la.length(), mu.length());
  int row = 0;
  for (int j = 1; j <= len; ++j) {
    if (la.part(j) != mu.part(j)) {
      check(row == 0, "more than one changed row");
      check(la.part(j) == mu.part(j) + 1, "changed row must lose one box");
      row = j;
    }
  }
  check(row > 0, "no changed row");
  return row;
}

void audit_cover(const TypedPartition& la, const SignedPermutation& w,
                 const CoverDatum& cd) {
  const TypedPartition& mu = cd.mu;
  int k = la.k, i = cd.i, p = cd.p;
  check(mu.weight() + 1 == la.weight(), "weight must drop by one");
  check(la.type + mu.type != 3, "types 1 and 2 never related by a cover");
  int blen = std::max({la.length(), mu.length(), cd.q, p}) + 2;
  std::vector<int> bla = beta(la, blen), bmu = beta(mu, blen);
  for (int j = 1; j <= blen; ++j) {
    if (j != p && j != cd.q) {
      check(bla[j - 1] == bmu[j - 1], "beta must agree off the changed rows");
    }
  }
  auto cla = c_set(la), cmu = c_set(mu);
  switch (cd.cse) {
    case CoverCase::a:
      check(i >= 1, "case a needs i >= 1");
      check(position_of(w, i + 1) <= k, "case a: i+1 sits in the head");
      check(position_of(w, i) > k, "case a: i sits in the tail");
      check(position_of(w, i) - k == p, "case a: p is the row of i");
      check(bla[p - 1] == i && bmu[p - 1] == i + 1, "case a: beta at p");
      check(cla == cmu, "case a: pair sets agree");
      break;
    case CoverCase::b:
      check(i >= 1, "case b needs i >= 1");
      check(position_of(w, i) <= k, "case b: i sits in the head");
      check(-position_of(w, i + 1) - k == p, "case b: p is the row of -(i+1)");
      check(bla[p - 1] == -i && bmu[p - 1] == -i + 1, "case b: beta at p");
      check(cla == cmu, "case b: pair sets agree");
      break;
    case CoverCase::c:
      check(i >= 1 && apply(w, 1) == -i, "case c: w_1 = -i");
      check(-position_of(w, i + 1) - k == p, "case c: p is the row of -(i+1)");
      check(bla[p - 1] == -i && bmu[p - 1] == -i + 1, "case c: beta at p");
      check(cla == cmu, "case c: pair sets agree");
      check(la.type == (i >= 2 ? 2 : 0), "case c: type of lambda");
      check(mu.type == 2, "case c: type of mu");
      break;
    case CoverCase::d1: {
      check(i >= 1, "case d1 needs i >= 1");
      int q = cd.q;
      check(-position_of(w, i + 1) - k == p, "case d1: p is the row of -(i+1)");
      check(position_of(w, i) - k == q, "case d1: q is the row of i");
      check(0 < p && p < q, "case d1: p < q");
      check(bla[p - 1] == -i && bmu[p - 1] == -i + 1, "case d1: beta at p");
      check(bla[q - 1] == i && bmu[q - 1] == i + 1, "case d1: beta at q");
      check(la.part(q) == mu.part(q), "case d1: row q keeps its boxes");
      auto want = cmu;
      check(!want.count({p, q}), "case d1: (p,q) fresh");
      want.insert({p, q});
      check(cla == want, "case d1: pair sets differ by (p,q)");
      break;
    }
    case CoverCase::d2:
      check(i >= 1 && apply(w, 1) == -(i + 1), "case d2: w_1 = -(i+1)");
      check(position_of(w, i) - k == p, "case d2: p is the row of i");
      check(position_of(w, i) > k, "case d2: i sits in the tail");
      check(bla[p - 1] == i && bmu[p - 1] == i + 1, "case d2: beta at p");
      check(cla == cmu, "case d2: pair sets agree");
      check(la.type == 2, "case d2: type of lambda");
      check(mu.type == (i == 1 ? 0 : 2), "case d2: type of mu");
      break;
    case CoverCase::e:
      check(i == 0, "case e is an s_0 cover");
      check(std::abs(apply(w, 1)) == 1, "case e: |w_1| = 1");
      check(-position_of(w, 2) - k == p, "case e: p is the row of -2");
      check(la.part(p) == k + 1, "case e: lambda_p = k+1");
      check(bla[p - 1] == -1 && bmu[p - 1] == 1, "case e: beta at p");
      check(cla == cmu, "case e: pair sets agree");
      check(la.type == 0, "case e: type of lambda");
      check(mu.type == (apply(w, 1) == 1 ? 2 : 1), "case e: type of mu");
      check(p == la.ell_k() && p == mu.ell_k() + 1, "case e: p = m(mu)");
      break;
    case CoverCase::f:
      check(i == 0, "case f is an s_0 cover");
      check(std::abs(apply(w, 1)) == 2, "case f: |w_1| = 2");
      check(-position_of(w, 1) - k == p, "case f: p is the row of -1");
      check(la.part(p) == k && mu.part(p) == k - 1, "case f: box at column k");
      check(bla[p - 1] == 0 && bmu[p - 1] == 2, "case f: beta at p");
      check(cla == cmu, "case f: pair sets agree");
      check(la.type == (apply(w, 1) == 2 ? 1 : 2), "case f: type of lambda");
      check(mu.type == 0, "case f: type of mu");
      check(p == la.ell_k() + 1, "case f: p = m(lambda)");
      break;
    case CoverCase::g: {
      check(i == 0, "case g is an s_0 cover");
      check(std::abs(apply(w, 1)) > 2, "case g: |w_1| > 2");
      check(-position_of(w, 2) - k == p, "case g: p is the row of -2");
      check(-position_of(w, 1) - k == p + 1, "case g: -1 adjacent");
      check(cd.q == p + 1, "case g: q is the adjacent row");
      check(la.part(p) == k + 1 && la.part(p + 1) == k, "case g: rows p, p+1");
      check(mu.part(p) == k && mu.part(p + 1) == k, "case g: mu rows");
      check(bla[p - 1] == -1 && bla[p] == 0, "case g: beta of lambda");
      check(bmu[p - 1] == 1 && bmu[p] == 2, "case g: beta of mu");
      auto want = cmu;
      check(!want.count({p, p + 1}), "case g: (p,p+1) fresh");
      want.insert({p, p + 1});
      check(cla == want, "case g: pair sets differ by (p,p+1)");
      break;
    }
  }
}

}  // namespace

std::vector<CoverDatum> covers(const TypedPartition& la) {
  SignedPermutation w = partition_to_perm(la);
  int n = std::max(w.window(), 2);
  std::vector<CoverDatum> out;
  for (int i = 0; i < n; ++i) {
    if (!is_left_descent(i, w)) continue;
    SignedPermutation wp = apply_s_left(i, w);
    check(length(wp) + 1 == length(w), "descent must drop the length");
    check(is_k_grassmannian(wp, la.k),
          "s_i of a Grassmannian descent stays Grassmannian");
    CoverDatum cd;
    cd.mu = perm_to_partition(wp, la.k);
    cd.i = i;
    cd.p = changed_row(la, cd.mu);
    if (i == 0) {
      int a = std::abs(apply(w, 1));
      cd.cse = a == 1   ? CoverCase::e
               : a == 2 ? CoverCase::f
                        : CoverCase::g;
      if (cd.cse == CoverCase::g) cd.q = cd.p + 1;
    } else {
      int pi = position_of(w, i), pi1 = position_of(w, i + 1);
      if (pi > 0 && pi1 > 0) {
        cd.cse = CoverCase::a;
      } else if (pi < 0) {
        cd.cse = CoverCase::c;
      } else if (pi < -pi1) {
        cd.cse = CoverCase::b;
      } else if (apply(w, 1) == -(i + 1)) {
        cd.cse = CoverCase::d2;
      } else {
        cd.cse = CoverCase::d1;
        cd.q = pi - la.k;
      }
    }
    audit_cover(la, w, cd);
    out.push_back(std::move(cd));
  }
  return out;
}

TypedPartition top_partition(int k, int n) {
  if (k < 1 || n < k) {
    throw std::invalid_argument("top_partition: need n >= k >= 1");
  }
  std::vector<int> parts;
  for (int j = 0; j < n - k; ++j) parts.push_back(n + k - 1 - j);
  return make_typed(std::move(parts), k, 0);
}

std::vector<int> reduced_word_to_top(const TypedPartition& la, int k, int n) {
  validate(la);
  if (la.k != k) throw std::invalid_argument("reduced_word_to_top: k mismatch");
  TypedPartition top = top_partition(k, n);
  if (la.length() > n - k || (la.length() > 0 && la.parts[0] > n + k - 1)) {
    throw std::invalid_argument(
        "reduced_word_to_top: partition does not fit the k x n box");
  }
  SignedPermutation u = mult(partition_to_perm(la), partition_to_perm(top));
  std::vector<int> word;
  int bound = std::max(u.window(), 2);
  while (!is_identity(u)) {
    int found = -1;
    for (int i = 0; i < bound; ++i) {
      if (is_left_descent(i, u)) {
        found = i;
        break;
      }
    }
    check(found >= 0, "word peeling found no descent");
    word.push_back(found);
    u = apply_s_left(found, u);
  }
  check(static_cast<int>(word.size()) == top.weight() - la.weight(),
        "word length must be the weight difference");
  return word;
}

std::vector<SignedPermutation> all_signed_perms(int n) {
  std::vector<SignedPermutation> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
      std::vector<int> w(perm);
      for (int j = 0; j < n; ++j) {
        if (mask & (1 << j)) w[j] = -w[j];
      }
      out.push_back(SignedPermutation{std::move(w)});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SignedPermutation parse_signed_perm(const std::string& text) {
  std::vector<int> w;
  int cur = 0;
  bool neg = false, have = false;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    char ch = i < text.size() ? text[i] : ',';
    if (ch == '-') {
      if (have || neg) {
        throw std::invalid_argument("permutation '" + text +
                                    "': misplaced '-' at position " +
                                    std::to_string(i));
      }
      neg = true;
    } else if (ch >= '0' && ch <= '9') {
      cur = cur * 10 + (ch - '0');
      have = true;
      if (cur > 1000000) {
        throw std::invalid_argument("permutation '" + text +
                                    "': entry too large at position " +
                                    std::to_string(i));
      }
    } else if (ch == ',') {
      if (!have) {
        if (i == text.size() && w.empty() && !neg) break;  // empty input
        throw std::invalid_argument("permutation '" + text +
                                    "': expected a number at position " +
                                    std::to_string(i));
      }
      w.push_back(neg ? -cur : cur);
      cur = 0;
      neg = false;
      have = false;
    } else {
      throw std::invalid_argument("permutation '" + text +
                                  "': unexpected character '" + ch +
                                  "' at position " + std::to_string(i));
    }
  }
  return make_signed_perm(std::move(w));
}

std::string format_signed_perm(const SignedPermutation& w) {
  std::ostringstream os;
  for (int j = 0; j < w.window(); ++j) {
    if (j) os << ",";
    os << w.w[j];
  }
  return os.str();
}

}  // namespace eta
