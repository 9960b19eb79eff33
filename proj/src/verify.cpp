#include "eta/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "eta/eta.hpp"
#include "eta/partition.hpp"
#include "eta/poly.hpp"
#include "eta/quotient.hpp"
#include "eta/ring.hpp"
#include "eta/schubert.hpp"
#include "eta/weyl.hpp"

namespace eta {

int SuiteReport::passed() const {
  int n = 0;
  for (const CheckResult& c : checks) n += c.pass ? 1 : 0;
  return n;
}

namespace {

/*****************************************************************************
 * Reporting helpers
 *****************************************************************************/

std::string istr(int v) { return std::to_string(v); }

std::string clip(const std::string& s) {
  return s.size() <= 160 ? s : s.substr(0, 157) + "...";
}

std::string diff_detail(const Polynomial& lhs, const Polynomial& rhs) {
  return "difference " + clip((lhs - rhs).to_string());
}

struct Suite {
  SuiteReport rep;

  explicit Suite(std::string name) { rep.suite = std::move(name); }

  void add(std::string name, bool pass, std::string detail = "") {
    rep.checks.push_back({std::move(name), pass,
                          pass ? std::string() : std::move(detail)});
  }
  void eq(std::string name, const Polynomial& lhs, const Polynomial& rhs) {
    bool ok = lhs == rhs;
    add(std::move(name), ok, ok ? "" : diff_detail(lhs, rhs));
  }
  SuiteReport done() {
    std::sort(rep.checks.begin(), rep.checks.end(),
              [](const CheckResult& a, const CheckResult& b) {
                return a.name < b.name;
              });
    return std::move(rep);
  }
};

// one reported check covering a family of instances; the first failing
// instance becomes the witness
struct Agg {
  int count = 0;
  int failed = 0;
  std::string first;

  void note(bool ok, const std::string& witness) {
    ++count;
    if (!ok && failed++ == 0) first = witness;
  }
  void flush(Suite& s, const std::string& name) {
    std::string d;
    if (failed > 0)
      d = "first failure at " + first + " (" + istr(failed) + "/" +
          istr(count) + " instances)";
    s.add(name, failed == 0 && count > 0,
          count == 0 ? "empty instance set" : d);
  }
};

const char* fname(FVariant v) {
  switch (v) {
    case FVariant::Bk: return "b";
    case FVariant::BTildeK: return "bt";
    case FVariant::Ak: return "a";
  }
  return "?";
}

/*****************************************************************************
 * Small polynomial builders
 *****************************************************************************/

Polynomial bP(int p) { return Polynomial::var(var_b(p)); }
Polynomial btP(int p) { return Polynomial::var(var_bt(p)); }
Polynomial tP(int i) { return Polynomial::var(var_t(i)); }
Polynomial qc(long num, long den = 1) {
  return Polynomial(mpq_class(num, den));
}
Polynomial E(int j, int r) { return e_sym(j, r, true); }
Polynomial Hs(int j, int r) { return h_sym(j, r, true); }

int env_threads() {
  const char* s = std::getenv("ETA_THREADS");
  if (s == nullptr) return 1;
  int n = std::atoi(s);
  return n < 1 ? 1 : n;
}

// fn(i) over [0, count), fanning out over ETA_THREADS workers; callers
// write to disjoint slots
template <typename Fn>
void parallel_for(int count, const Fn& fn) {
  int nt = std::min(env_threads(), count);
  if (nt <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) fn(i);
    });
  for (auto& th : pool) th.join();
}

/*****************************************************************************
 * Identity batteries over one ring
 *****************************************************************************/

constexpr int kPMax = 8;
constexpr int kRMax = 6;

// c^r_p = c^{r-1}_p - t_r c^r_{p-1} (r >= 1), c^r_p = c^{r-1}_p
// + t_{1-r} c^r_{p-1} (r <= 0)
void check_ctlem1(Suite& s, const Ring& R) {
  Agg a;
  for (int r = -kRMax; r <= kRMax; ++r)
    for (int p = 0; p <= kPMax; ++p) {
      Polynomial rhs = r >= 1
                           ? R.c_r(p, r - 1) - tP(r) * R.c_r(p - 1, r)
                           : R.c_r(p, r - 1) + tP(1 - r) * R.c_r(p - 1, r);
      a.note(R.c_r(p, r) == rhs, "r=" + istr(r) + " p=" + istr(p));
    }
  a.flush(s, "id/ctlem1/k" + istr(R.k()));
}

// the generating series of c^r against an independently computed series
// transform, and the s_0 action on the base series
void check_series(Suite& s, const Ring& R) {
  int k = R.k();
  std::vector<Polynomial> base(kPMax + 1);
  for (int p = 0; p <= kPMax; ++p) base[p] = R.c(p);

  Agg a;
  for (int r = -kRMax; r <= kRMax; ++r) {
    if (r == 0) continue;
    std::vector<Polynomial> S = base;
    if (r >= 1) {
      // divide by (1 + t_j u) for j = 1..r
      for (int j = 1; j <= r; ++j)
        for (int p = 1; p <= kPMax; ++p) S[p] -= tP(j) * S[p - 1];
    } else {
      // multiply by (1 - t_j u) for j = 1..|r|
      for (int j = 1; j <= -r; ++j)
        for (int p = kPMax; p >= 1; --p) S[p] -= tP(j) * S[p - 1];
    }
    for (int p = 0; p <= kPMax; ++p)
      a.note(R.c_r(p, r) == S[p], "r=" + istr(r) + " p=" + istr(p));
  }
  a.flush(s, "id/series/k" + istr(k));

  // s_0 multiplies the series by (1-t_1u)(1-t_2u)/((1+t_1u)(1+t_2u))
  Agg b;
  std::vector<Polynomial> S = base;
  for (int j = 1; j <= 2; ++j)
    for (int p = kPMax; p >= 1; --p) S[p] -= tP(j) * S[p - 1];
  for (int j = 1; j <= 2; ++j)
    for (int p = 1; p <= kPMax; ++p) S[p] -= tP(j) * S[p - 1];
  for (int p = 0; p <= kPMax; ++p)
    b.note(R.act(0, base[p]) == S[p], "p=" + istr(p));
  b.flush(s, "id/series-s0/k" + istr(k));
}

// simple reflections on c^r_p
void check_lem1(Suite& s, const Ring& R) {
  int k = R.k();
  for (int i = 1; i <= kRMax; ++i) {
    Agg a;
    for (int r = -kRMax; r <= kRMax; ++r)
      for (int p = 0; p <= kPMax; ++p) {
        Polynomial rhs;
        if (r == i)
          rhs = R.c_r(p, i + 1) + tP(i) * R.c_r(p - 1, i + 1);
        else if (r == -i)
          rhs = R.c_r(p, -i + 1) - tP(i + 1) * R.c_r(p - 1, -i + 1);
        else
          rhs = R.c_r(p, r);
        a.note(R.act(i, R.c_r(p, r)) == rhs,
               "r=" + istr(r) + " p=" + istr(p));
      }
    a.flush(s, "id/lem1/k" + istr(k) + "/s" + istr(i));
  }
  Agg a0;
  for (int r = -kRMax; r <= kRMax; ++r)
    for (int p = 0; p <= kPMax; ++p) {
      Polynomial rhs;
      if (r == 1)
        rhs = R.c_r(p, 2) - tP(1) * R.c_r(p - 1, 2);
      else if (r == 0)
        rhs = R.c_r(p, 2) - (tP(1) + tP(2)) * R.c_r(p - 1, 2) +
              tP(1) * tP(2) * R.c_r(p - 2, 2);
      else if (r == -1)
        rhs = R.c_r(p, 1) - (tP(1) + tP(2)) * R.c_r(p - 1, 1) +
              tP(1) * tP(2) * R.c_r(p - 2, 1);
      else
        rhs = R.c_r(p, r);
      a0.note(R.act(0, R.c_r(p, r)) == rhs,
              "r=" + istr(r) + " p=" + istr(p));
    }
  a0.flush(s, "id/lem1/k" + istr(k) + "/s0");
}

// divided differences on c^r_p, with the refined forms at r = -1
void check_prop1(Suite& s, const Ring& R) {
  int k = R.k();
  for (int i = 1; i <= kRMax; ++i) {
    Agg a;
    for (int r = -kRMax; r <= kRMax; ++r)
      for (int p = 0; p <= kPMax; ++p) {
        Polynomial rhs = (r == i || r == -i) ? R.c_r(p - 1, r + 1)
                                             : Polynomial::zero();
        a.note(R.dd(i, R.c_r(p, r)) == rhs,
               "r=" + istr(r) + " p=" + istr(p));
      }
    a.flush(s, "id/prop1/k" + istr(k) + "/dd" + istr(i));
  }
  Agg a0;
  for (int r = -kRMax; r <= kRMax; ++r)
    for (int p = 0; p <= kPMax; ++p) {
      Polynomial rhs;
      if (r == 1)
        rhs = R.c_r(p - 1, 2);
      else if (r == 0)
        rhs = qc(2) * R.c_r(p - 1, 2);
      else if (r == -1)
        rhs = qc(2) * R.c_r(p - 1, 1) - R.c(p - 1);
      a0.note(R.dd(0, R.c_r(p, r)) == rhs,
              "r=" + istr(r) + " p=" + istr(p));
    }
  a0.flush(s, "id/prop1/k" + istr(k) + "/dd0");

  Agg b;
  for (int p = 0; p <= kPMax; ++p) {
    const Polynomial& cm1 = R.c_r(p, -1);
    b.note(R.dd(0, cm1) == qc(2) * R.a_s(p - 1, 1), "dd0 p=" + istr(p));
    b.note(R.dd(1, cm1) == qc(2) * R.a_s(p - 1, 0), "dd1 p=" + istr(p));
    b.note(R.dd(0, cm1) + R.dd(1, cm1) == qc(2) * R.c_r(p - 1, 1),
           "sum p=" + istr(p));
  }
  b.flush(s, "id/beq/k" + istr(k));
}

// dd_i(c^{-i}_p c^i_q) and the i = 0, 1 product rules
void check_products(Suite& s, const Ring& R) {
  int k = R.k();
  for (int i = 1; i <= kRMax; ++i) {
    Agg a;
    std::map<std::pair<int, int>, Polynomial> memo;
    auto prod = [&](int x, int y) -> const Polynomial& {
      auto it = memo.find({x, y});
      if (it == memo.end())
        it = memo.emplace(std::make_pair(x, y),
                          x < 0 || y < 0
                              ? Polynomial::zero()
                              : R.c_r(x, -i + 1) * R.c_r(y, i + 1))
                 .first;
      return it->second;
    };
    for (int p = 0; p <= kPMax; ++p)
      for (int q = 0; q <= kPMax; ++q) {
        Polynomial lhs = R.dd(i, R.c_r(p, -i) * R.c_r(q, i));
        Polynomial rhs = prod(p - 1, q) + prod(p, q - 1);
        a.note(lhs == rhs, "p=" + istr(p) + " q=" + istr(q));
      }
    a.flush(s, "id/iieq/k" + istr(k) + "/i" + istr(i));
  }
  Agg a12;
  for (int p = 0; p <= kPMax; ++p)
    for (int q = 0; q <= kPMax; ++q) {
      Polynomial f = R.c_r(p, -1) * R.c_r(q, 1);
      Polynomial d0 = R.dd(0, f);
      Polynomial d1 = R.dd(1, f);
      std::string at = "p=" + istr(p) + " q=" + istr(q);
      a12.note(d0 == qc(2) * (R.a_s(p - 1, 1) * R.c_r(q, 2) +
                              R.a_s(p, 1) * R.c_r(q - 1, 2)),
               "dd0 " + at);
      a12.note(d1 == qc(2) * (R.a_s(p - 1, 0) * R.c_r(q, 2) +
                              R.a_s(p, 0) * R.c_r(q - 1, 2)),
               "dd1 " + at);
      a12.note(d0 + d1 == qc(2) * (R.c_r(p - 1, 1) * R.c_r(q, 2) +
                                   R.c_r(p, 1) * R.c_r(q - 1, 2)),
               "sum " + at);
    }
  a12.flush(s, "id/12eq/k" + istr(k));
}

// simple reflections on the hatted family. Instances where no hat
// correction is active on either side coincide with the plain family
// checks, so only the hat-active band is evaluated here. The displayed
// r = -i recursion fails precisely at i = 1, p = k+1, where the corrected
// closed form s_1(chat^{-1}_{k+1}) = c_{k+1} - 2 t_2 f_k holds instead.
void check_lem11(Suite& s, const Ring& R, FVariant v) {
  int k = R.k();
  Polynomial corr = qc(2) * R.f_poly(v) - R.c(k);
  Agg a;
  for (int i = 1; i <= kRMax; ++i) {
    // recursion branch r = -i where the hat on the left is active; the
    // stated form needs a correction at i = 1, and at p = k+i-1 (i >= 2)
    // only the plain recursion holds, which the unhatted suite covers
    if (int p = k + i; p <= kPMax) {
      Polynomial lhs = R.act(i, R.c_hat(p, -i, v));
      Polynomial rhs;
      if (i == 1)
        rhs = R.c(k + 1) - qc(2) * tP(2) * R.f_poly(v);
      else
        rhs = R.c_hat(p, -i + 1, v) - tP(i + 1) * R.c_hat(p - 1, -i + 1, v);
      a.note(lhs == rhs, "r=" + istr(-i) + " p=" + istr(p));
    }
    // invariance branch r != +-i with the hat active on the left
    for (int r = -kRMax; r < 0; ++r) {
      if (r == -i) continue;
      int p = k - r;
      if (p > kPMax) continue;
      a.note(R.act(i, R.c_hat(p, r, v)) == R.c_hat(p, r, v),
             "r=" + istr(r) + " p=" + istr(p) + " s" + istr(i));
    }
  }
  // s_0 invariance for |r| >= 2 on the hat-active band
  for (int r = -kRMax; r <= -2; ++r) {
    int p = k - r;
    if (p > kPMax) continue;
    a.note(R.act(0, R.c_hat(p, r, v)) == R.c_hat(p, r, v),
           "r=" + istr(r) + " p=" + istr(p) + " s0");
  }
  a.flush(s, "id/lem11/k" + istr(k) + "/f" + fname(v));

  // witnesses that the stated recursion fails where the hats land on the
  // two sides asymmetrically, by the exact residual in each case
  Agg w;
  {
    Polynomial displayed = R.c_hat(k + 1, 0, v) - tP(2) * R.c_hat(k, 0, v);
    Polynomial actual = R.act(1, R.c_hat(k + 1, -1, v));
    w.note(displayed - actual == tP(2) * corr, "i=1 p=k+1");
  }
  for (int i = 2; i <= kRMax; ++i) {
    int p = k + i - 1;
    if (p > kPMax) continue;
    Polynomial displayed =
        R.c_hat(p, -i + 1, v) - tP(i + 1) * R.c_hat(p - 1, -i + 1, v);
    Polynomial actual = R.act(i, R.c_hat(p, -i, v));
    w.note(displayed - actual == corr * E(i - 1, i - 1),
           "i=" + istr(i) + " p=k+i-1");
  }
  w.flush(s, "id/lem11-erratum/k" + istr(k) + "/f" + fname(v));
}

// divided differences of the hatted class generators
void check_prop1h(Suite& s, const Ring& R, FVariant v) {
  int k = R.k();
  Agg a;
  for (int p = k + 1; p <= kPMax; ++p) {
    Polynomial chat = R.c_hat(p, k - p, v);
    for (int i = 1; i <= kRMax; ++i) {
      Polynomial rhs;
      if (i == p - k && i >= 2)
        rhs = R.c_hat(p - 1, k - p + 1, v);
      else if (i == p - k)
        rhs = qc(2) * R.f_poly(v);
      a.note(R.dd(i, chat) == rhs, "dd" + istr(i) + " p=" + istr(p));
    }
    Polynomial rhs0 = p == k + 1 ? qc(2) * R.ftilde_s(1, v)
                                 : Polynomial::zero();
    a.note(R.dd(0, chat) == rhs0, "dd0 p=" + istr(p));
  }
  Polynomial ch = R.c_hat(k + 1, -1, v);
  a.note(R.dd(0, ch) + R.dd(1, ch) == qc(2) * R.c_r(k, 1), "sum p=k+1");
  a.flush(s, "id/prop1h/k" + istr(k) + "/f" + fname(v));
}

// dd_i(chat^{-i}_p c^i_q) on the hat-active band, plus the i = 0, 1
// product rules at p = k+1
void check_products_hat(Suite& s, const Ring& R, FVariant v) {
  int k = R.k();
  Polynomial corr = qc(2) * R.f_poly(v) - R.c(k);
  for (int i = 2; i <= kRMax; ++i) {
    Agg a;
    // the product rule holds at p = k+i, where the hats on the two sides
    // cancel; at p = k+i-1 only the right picks up a correction and the
    // stated form misses it by corr * e^{i-1}_{i-1}(-t) * c^{i+1}_{q-1}
    if (int p = k + i; p <= kPMax)
      for (int q = 0; q <= kPMax; ++q) {
        Polynomial lhs = R.dd(i, R.c_hat(p, -i, v) * R.c_r(q, i));
        Polynomial rhs = R.c_hat(p - 1, -i + 1, v) * R.c_r(q, i + 1);
        if (q > 0) rhs += R.c_hat(p, -i + 1, v) * R.c_r(q - 1, i + 1);
        a.note(lhs == rhs, "p=" + istr(p) + " q=" + istr(q));
      }
    if (int p = k + i - 1; p <= kPMax)
      for (int q = 1; q <= 2; ++q) {
        Polynomial lhs = R.dd(i, R.c_hat(p, -i, v) * R.c_r(q, i));
        Polynomial rhs = R.c_hat(p - 1, -i + 1, v) * R.c_r(q, i + 1) +
                         R.c_hat(p, -i + 1, v) * R.c_r(q - 1, i + 1);
        a.note(rhs - lhs == corr * E(i - 1, i - 1) * R.c_r(q - 1, i + 1),
               "residual p=" + istr(p) + " q=" + istr(q));
      }
    a.flush(s, "id/iieqh/k" + istr(k) + "/i" + istr(i) + "/f" + fname(v));
  }
  Agg b;
  Polynomial ch = R.c_hat(k + 1, -1, v);
  for (int q = 0; q <= kPMax; ++q) {
    Polynomial f = ch * R.c_r(q, 1);
    Polynomial d0 = R.dd(0, f);
    Polynomial d1 = R.dd(1, f);
    b.note(d0 == qc(2) * (R.ftilde_s(1, v) * R.c_r(q, 2) +
                          R.a_s(k + 1, 1) * R.c_r(q - 1, 2)),
           "dd0 q=" + istr(q));
    b.note(d1 == qc(2) * (R.f_poly(v) * R.c_r(q, 2) +
                          R.a_s(k + 1, 0) * R.c_r(q - 1, 2)),
           "dd1 q=" + istr(q));
    b.note(d0 + d1 == qc(2) * (R.c_r(k, 1) * R.c_r(q, 2) +
                               R.c_r(k + 1, 1) * R.c_r(q - 1, 2)),
           "sum q=" + istr(q));
  }
  b.flush(s, "id/12eqh/k" + istr(k) + "/f" + fname(v));
}

// products against the a and f families under dd_0 and dd_1
void check_proprel(Suite& s, const Ring& R) {
  int k = R.k();
  const Polynomial two = qc(2);

  Agg a;
  for (int p = 0; p <= kPMax; ++p)
    for (int q = 0; q <= kPMax; ++q) {
      std::string at = "p=" + istr(p) + " q=" + istr(q);
      Polynomial l1 = R.dd(0, R.c_r(p, -1) * R.a_s(q, 0));
      Polynomial r1 = two * (R.a_s(p - 1, 1) * R.c_r(q, 2) +
                             R.a_s(p, 1) * R.c_r(q - 1, 2)) -
                      two * R.a_s(p - 1, 1) * R.a_s(q, 1);
      a.note(l1 == r1, "dd0-a " + at);
      Polynomial l5 = R.dd(1, R.c_r(p, -1) * R.a_s(q, 1));
      Polynomial r5 = two * (R.a_s(p - 1, 0) * R.c_r(q, 2) +
                             R.a_s(p, 0) * R.c_r(q - 1, 2)) -
                      two * R.a_s(p - 1, 0) * R.a_s(q, 0);
      a.note(l5 == r5, "dd1-a " + at);
    }
  a.flush(s, "id/proprel/k" + istr(k) + "/plain");

  for (FVariant v : {FVariant::Bk, FVariant::BTildeK}) {
    Agg b;
    for (int ss : {0, 1})
      b.note(R.ftilde_s(ss, v) == R.c_r(k, ss) - R.f_poly(v),
             "ftilde-def s=" + istr(ss));
    for (int p = 0; p <= kPMax; ++p) {
      std::string at = "p=" + istr(p);
      Polynomial l2 = R.dd(0, R.c_r(p, -1) * R.ftilde_s(0, v));
      Polynomial r2 = two * (R.a_s(p - 1, 1) * R.c_r(k, 2) +
                             R.a_s(p, 1) * R.c_r(k - 1, 2)) -
                      two * R.a_s(p - 1, 1) * R.f_s(1, v);
      b.note(l2 == r2, "dd0-ft " + at);
      Polynomial l6 = R.dd(1, R.c_r(p, -1) * R.f_s(1, v));
      Polynomial r6 = two * (R.a_s(p - 1, 0) * R.c_r(k, 2) +
                             R.a_s(p, 0) * R.c_r(k - 1, 2)) -
                      two * R.a_s(p - 1, 0) * R.ftilde(v);
      b.note(l6 == r6, "dd1-f " + at);
    }
    Polynomial ch = R.c_hat(k + 1, -1, v);
    for (int q = 0; q <= kPMax; ++q) {
      std::string at = "q=" + istr(q);
      Polynomial l3 = R.dd(0, ch * R.a_s(q, 0));
      Polynomial r3 = two * (R.ftilde_s(1, v) * R.c_r(q, 2) +
                             R.a_s(k + 1, 1) * R.c_r(q - 1, 2)) -
                      two * R.ftilde_s(1, v) * R.a_s(q, 1);
      b.note(l3 == r3, "dd0-hat-a " + at);
      Polynomial l7 = R.dd(1, ch * R.a_s(q, 1));
      Polynomial r7 = two * (R.f_s(0, v) * R.c_r(q, 2) +
                             R.a_s(k + 1, 0) * R.c_r(q - 1, 2)) -
                      two * R.f_poly(v) * R.a_s(q, 0);
      b.note(l7 == r7, "dd1-hat-a " + at);
    }
    Polynomial l4 = R.dd(0, ch * R.ftilde_s(0, v));
    Polynomial r4 = two * (R.ftilde_s(1, v) * R.c_r(k, 2) +
                           R.a_s(k + 1, 1) * R.c_r(k - 1, 2)) -
                    two * R.ftilde_s(1, v) * R.f_s(1, v);
    b.note(l4 == r4, "dd0-hat-ft");
    Polynomial l8 = R.dd(1, ch * R.f_s(1, v));
    Polynomial r8 = two * (R.f_s(0, v) * R.c_r(k, 2) +
                           R.a_s(k + 1, 0) * R.c_r(k - 1, 2)) -
                    two * R.f_poly(v) * R.ftilde(v);
    b.note(l8 == r8, "dd1-hat-f");
    b.flush(s, "id/proprel/k" + istr(k) + "/f" + fname(v));
  }
}

// quadratic relations between the f, a, and b families
void check_keylemma(Suite& s, const Ring& R) {
  int k = R.k();
  auto bnum = [](int d) {
    return d == 0 ? Polynomial::one() : Polynomial::var(var_b(d));
  };
  Polynomial rhs = bP(k) * btP(k);
  for (int r = 1; r <= k; ++r)
    rhs += qc(r % 2 ? -1 : 1) * bP(k + r) * bnum(k - r);
  for (FVariant v : {FVariant::Bk, FVariant::BTildeK}) {
    Polynomial lhs = R.f_poly(v) * R.ftilde(v);
    for (int r = 1; r <= k; ++r)
      lhs += qc(r % 2 ? -2 : 2) * R.a_s(k + r, 0) * R.a_s(k - r, 0);
    std::string sfx = "/k" + istr(k) + "/f" + fname(v);
    s.eq("id/keylemma/zb" + sfx, lhs, rhs);
    s.add("id/keylemma/ideal" + sfx, normal_form(lhs, k).is_zero(),
          "quadratic relation does not reduce to zero");
    Polynomial lhs2 = R.ftilde_s(1, v) * R.f_s(1, v);
    for (int r = 1; r <= k; ++r)
      lhs2 += qc(r % 2 ? -2 : 2) * R.a_s(k + r, 1) * R.a_s(k - r, 1);
    s.add("id/keylemma/s1" + sfx, normal_form(lhs2, k).is_zero(),
          "shifted quadratic relation does not reduce to zero");
  }
}

/*****************************************************************************
 * Alternating binary power sums
 *****************************************************************************/

void check_elem(Suite& s) {
  Agg a;
  for (int n = 0; n <= 8; ++n) {
    long total = 0;
    for (int i = 0; i <= n; ++i) {
      int nz = (n - i != 0 ? 1 : 0) + (i != 0 ? 1 : 0);
      total += (i % 2 ? -1L : 1L) * (1L << nz);
    }
    a.note(total == (n == 0 ? 1 : 0), "s=" + istr(n));
  }
  a.flush(s, "elem/single");

  Agg b;
  for (int len = 0; len <= 4; ++len) {
    std::vector<int> rho(len, 0);
    std::vector<int> al(len, 0);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
      if (pos == len) {
        long total = 0;
        std::function<void(int, int)> rec2 = [&](int pos2, int asum) {
          if (pos2 == len) {
            int nz = 0;
            for (int j = 0; j < len; ++j)
              nz += (rho[j] - al[j] != 0 ? 1 : 0) + (al[j] != 0 ? 1 : 0);
            total += (asum % 2 ? -1L : 1L) * (1L << nz);
            return;
          }
          for (al[pos2] = 0; al[pos2] <= rho[pos2]; ++al[pos2])
            rec2(pos2 + 1, asum + al[pos2]);
        };
        rec2(0, 0);
        bool zero_rho = true;
        std::string w = "rho=";
        for (int j = 0; j < len; ++j) {
          zero_rho = zero_rho && rho[j] == 0;
          w += (j ? "," : "") + istr(rho[j]);
        }
        b.note(total == (zero_rho ? 1 : 0), w);
        return;
      }
      for (rho[pos] = 0; rho[pos] <= rem; ++rho[pos])
        rec(pos + 1, rem - rho[pos]);
    };
    rec(0, 6);
  }
  b.flush(s, "elem/multi");
}

/*****************************************************************************
 * Weyl group action laws on random polynomials
 *****************************************************************************/

Monomial random_monomial(std::mt19937_64& g, int k, int d) {
  std::vector<std::pair<VarCode, int>> fac;
  int used = 0;
  while (used < d) {
    int room = d - used;
    std::vector<VarCode> cand;
    for (int i = 1; i <= 4; ++i) cand.push_back(var_t(i));
    for (int p = 1; p <= std::min(room, 6); ++p) cand.push_back(var_b(p));
    if (k <= room) cand.push_back(var_bt(k));
    VarCode v = cand[g() % cand.size()];
    fac.push_back({v, 1});
    used += var_degree(v);
  }
  return Monomial(std::move(fac));
}

mpq_class random_coeff(std::mt19937_64& g) {
  long cf = 1 + static_cast<long>(g() % 9);
  return mpq_class(g() & 1 ? -cf : cf);
}

Polynomial random_poly(std::mt19937_64& g, int k, int dmax, int nterms) {
  Polynomial f;
  for (int t = 0; t < nterms; ++t) {
    int d = 1 + static_cast<int>(g() % static_cast<std::uint64_t>(dmax));
    f.add_term(random_monomial(g, k, d), random_coeff(g));
  }
  return f;
}

Polynomial random_homogeneous(std::mt19937_64& g, int k, int d, int nterms) {
  Polynomial f;
  for (int t = 0; t < nterms; ++t)
    f.add_term(random_monomial(g, k, d), random_coeff(g));
  return f;
}

void check_weyl_laws(Suite& s, const VerifyOptions& opt) {
  std::mt19937_64 g(opt.seed);
  Agg invo, braid, comm, ddsq, leib, grad;
  for (int it = 0; it < 200; ++it) {
    int k = 1 + it % 3;
    const Ring& R = ring(k);
    Polynomial f = random_poly(g, k, 6, 6);
    Polynomial h = random_poly(g, k, 3, 4);
    std::string at = "poly " + istr(it);

    for (int i = 0; i <= 3; ++i)
      invo.note(R.act(i, R.act(i, f)) == f, at + " s" + istr(i));

    braid.note(R.act(0, R.act(2, R.act(0, f))) ==
                   R.act(2, R.act(0, R.act(2, f))),
               at + " (0,2)");
    for (int i = 1; i <= 2; ++i)
      braid.note(R.act(i, R.act(i + 1, R.act(i, f))) ==
                     R.act(i + 1, R.act(i, R.act(i + 1, f))),
                 at + " (" + istr(i) + "," + istr(i + 1) + ")");

    comm.note(R.act(0, R.act(1, f)) == R.act(1, R.act(0, f)), at + " (0,1)");
    comm.note(R.act(0, R.act(3, f)) == R.act(3, R.act(0, f)), at + " (0,3)");
    comm.note(R.act(1, R.act(3, f)) == R.act(3, R.act(1, f)), at + " (1,3)");
    comm.note(R.act(2, R.act(4, f)) == R.act(4, R.act(2, f)), at + " (2,4)");

    for (int i = 0; i <= 3; ++i)
      ddsq.note(R.dd(i, R.dd(i, f)).is_zero(), at + " dd" + istr(i));

    for (int i = 0; i <= 3; ++i)
      leib.note(R.dd(i, f * h) ==
                    R.dd(i, f) * h + R.act(i, f) * R.dd(i, h),
                at + " dd" + istr(i));

    int d = 1 + it % 6;
    Polynomial fh = random_homogeneous(g, k, d, 5);
    for (int i = 0; i <= 2; ++i) {
      Polynomial sf = R.act(i, fh);
      grad.note(sf.is_zero() || sf.is_homogeneous(d),
                at + " act" + istr(i));
      Polynomial df = R.dd(i, fh);
      grad.note(df.is_zero() || df.is_homogeneous(d - 1),
                at + " dd" + istr(i));
    }
  }
  invo.flush(s, "weyl/involution");
  braid.flush(s, "weyl/braid");
  comm.flush(s, "weyl/commute");
  ddsq.flush(s, "weyl/dd-square");
  leib.flush(s, "weyl/leibnitz");
  grad.flush(s, "weyl/grading");
}

/*****************************************************************************
 * Reduced monomial enumeration (independent of the rewrite system walk)
 *****************************************************************************/

long count_reduced_monomials(const RewriteSystem& rs, int k, int d) {
  long count = 0;
  std::vector<VarCode> vars;
  for (int p = d; p >= 1; --p) vars.push_back(var_b(p));
  if (k <= d) vars.push_back(var_bt(k));
  std::vector<std::pair<VarCode, int>> fac;
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int rem) {
    if (rem == 0) {
      count += rs.is_reduced(Monomial(fac)) ? 1 : 0;
      return;
    }
    if (idx == vars.size()) return;
    int vd = var_degree(vars[idx]);
    for (int e = 0; e * vd <= rem; ++e) {
      if (e > 0) fac.push_back({vars[idx], e});
      rec(idx + 1, rem - e * vd);
      if (e > 0) fac.pop_back();
    }
  };
  rec(0, d);
  return count;
}

}  // namespace

/*****************************************************************************
 * Suites
 *****************************************************************************/

SuiteReport verify_tables(const VerifyOptions&) {
  Suite s("tables");
  auto add1 = [&](int k, const std::string& la, const Polynomial& rhs) {
    s.eq("table1/k" + istr(k) + "/" + la,
         double_eta(parse_partition(la, k)), rhs);
  };
  auto add2 = [&](int k, const std::string& sh, const Polynomial& rhs) {
    s.eq("table2/k" + istr(k) + "/" + sh,
         double_eta_hat(parse_shape(sh, k), k), rhs);
  };
  const mpq_class half(1, 2), quarter(1, 4);

  {
    const Polynomial c1 = c(1, 1), c2 = c(2, 1), c3 = c(3, 1), c4 = c(4, 1),
                     c5 = c(5, 1);
    add1(1, "0:t0", Polynomial::one());
    add1(1, "1:t1", bP(1) + Hs(1, 1));
    add1(1, "1:t2", btP(1));
    add1(1, "2:t0", bP(2) + btP(1) * E(1, 1));
    add1(1, "1,1:t1", (bP(1) + Hs(1, 1)) * (c1 + Hs(1, 2)) -
                          (bP(2) + c1 * Hs(1, 1) + Hs(2, 1)));
    add1(1, "1,1:t2", btP(1) * (c1 + Hs(1, 2)) - bP(2));
    add1(1, "3:t0", bP(3) + bP(2) * E(1, 2) + btP(1) * E(2, 2));
    add1(1, "2,1:t1",
         (bP(2) + btP(1) * E(1, 1)) * bP(1) - (bP(3) + bP(2) * E(1, 1)));
    add1(1, "2,1:t2", (bP(2) + btP(1) * E(1, 1)) * (btP(1) + Hs(1, 1)) -
                          (bP(3) + bP(2) * E(1, 1)));
    add1(1, "3,1:t1", (bP(3) + bP(2) * E(1, 2) + btP(1) * E(2, 2)) * bP(1) -
                          (bP(4) + bP(3) * E(1, 2) + bP(2) * E(2, 2)));
    add1(1, "3,1:t2",
         (bP(3) + bP(2) * E(1, 2) + btP(1) * E(2, 2)) * (btP(1) + Hs(1, 1)) -
             (bP(4) + bP(3) * E(1, 2) + bP(2) * E(2, 2)));
    add1(1, "3,2:t0",
         (bP(3) + bP(2) * E(1, 2) + btP(1) * E(2, 2)) *
                 (bP(2) + bP(1) * E(1, 1)) -
             (bP(4) + bP(3) * E(1, 2) + bP(2) * E(2, 2)) * (c1 + E(1, 1)) +
             (bP(5) + bP(4) * E(1, 2) + bP(3) * E(2, 2)));

    add2(1, "0", Polynomial::one());
    add2(1, "1", c1 + Hs(1, 1));
    add2(1, "2", (c2 + qc(2) * btP(1) * E(1, 1)) * half);
    add2(1, "1,1", (c1 + Hs(1, 1)) * (c1 + Hs(1, 2)) -
                       (c2 + c1 * Hs(1, 1) + Hs(2, 1)));
    add2(1, "3", (c3 + c2 * E(1, 2) + qc(2) * btP(1) * E(2, 2)) * half);
    add2(1, "2,1", ((c2 + qc(2) * btP(1) * E(1, 1)) * (c1 + Hs(1, 1)) -
                    qc(2) * (c3 + c2 * E(1, 1))) *
                       half);
    add2(1, "3,1",
         ((c3 + c2 * E(1, 2) + qc(2) * btP(1) * E(2, 2)) * (c1 + Hs(1, 1)) -
          qc(2) * (c4 + c3 * E(1, 2) + c2 * E(2, 2))) *
             half);
    add2(1, "3,2",
         ((c3 + c2 * E(1, 2) + qc(2) * btP(1) * E(2, 2)) *
              (c2 + qc(2) * bP(1) * E(1, 1)) -
          qc(2) * (c4 + c3 * E(1, 2) + c2 * E(2, 2)) * (c1 + E(1, 1)) +
          qc(2) * (c5 + c4 * E(1, 2) + c3 * E(2, 2))) *
             quarter);
  }
  {
    const Polynomial c1 = c(1, 2), c2 = c(2, 2), c3 = c(3, 2), c4 = c(4, 2);
    add1(2, "1:t0", bP(1) + Hs(1, 2));
    add1(2, "2:t1", bP(2) + bP(1) * Hs(1, 1) + Hs(2, 1));
    add1(2, "2:t2", btP(2));
    add1(2, "3:t0", bP(3) + btP(2) * E(1, 1));
    add1(2, "4:t0", bP(4) + bP(3) * E(1, 2) + btP(2) * E(2, 2));

    add2(2, "0", Polynomial::one());
    add2(2, "1", c1 + Hs(1, 2));
    add2(2, "2", c2 + c1 * Hs(1, 1) + Hs(2, 1));
    add2(2, "3", (c3 + qc(2) * btP(2) * E(1, 1)) * half);
    add2(2, "4", (c4 + c3 * E(1, 2) + qc(2) * btP(2) * E(2, 2)) * half);
  }
  return s.done();
}

SuiteReport verify_identities(const VerifyOptions& opt) {
  Suite s("identities");
  for (int k = 1; k <= opt.kmax; ++k) {
    const Ring& R = ring(k);
    check_ctlem1(s, R);
    check_series(s, R);
    check_lem1(s, R);
    check_prop1(s, R);
    check_products(s, R);
    check_proprel(s, R);
    check_keylemma(s, R);
    for (FVariant v : {FVariant::Bk, FVariant::BTildeK}) {
      check_lem11(s, R, v);
      check_prop1h(s, R, v);
      check_products_hat(s, R, v);
    }
  }
  check_elem(s);
  check_weyl_laws(s, opt);
  return s.done();
}

SuiteReport verify_covers(const VerifyOptions& opt) {
  Suite s("covers");
  // claim shapes already certified, keyed by shapes and claim form
  std::set<std::tuple<std::vector<int>, std::vector<int>, std::string>> seen;
  for (int k = 1; k <= opt.kmax; ++k) {
    auto typed = enumerate_typed(k, opt.n - k, opt.n + k - 1);
    parallel_for(static_cast<int>(typed.size()),
                 [&](int i) { double_eta(typed[i]); });
    for (const TypedPartition& la : typed) {
      const Polynomial Hla = double_eta(la);
      for (const CoverDatum& cd : covers(la)) {
        const Polynomial Hmu = double_eta(cd.mu);
        Polynomial lhs = divided_difference(cd.i, Hla, k);
        std::string base = "uniq/k" + istr(k) + "/" + format_partition(la) +
                           "/s" + istr(cd.i);
        s.add(base, eq_mod_ideal(lhs, Hmu, k),
              "dd image differs from the covered class mod the ideal");
        bool exact = lhs == Hmu;
        bool may_need_ideal = (cd.cse == CoverCase::d1 && cd.i == 1) ||
                              (cd.cse == CoverCase::g && cd.i == 0);
        if (!may_need_ideal) {
          s.add(base + "/exact", exact,
                "dd image differs from the covered class in the free ring");
        } else if (k == 1 && la.parts == std::vector<int>{2, 1}) {
          // pinned instances where the quadratic relation is genuinely
          // needed: the equality must fail before reduction
          s.add(base + "/ideal-required", !exact,
                "dd image unexpectedly exact in the free ring");
        }

        // hatted cover recursions, deduped per shape pair and claim
        std::string claim;
        bool okrange = true;
        if (la.type == 0 && cd.mu.type == 0) {
          claim = "dd" + istr(cd.i);
          okrange = cd.i >= 2;
        } else if (la.type == 0 && cd.mu.type > 0) {
          claim = "ddsum";
          okrange = cd.i <= 1;
        } else if (la.type > 0 && cd.mu.type == 0) {
          claim = "ddboth";
          okrange = cd.i <= 1;
        } else {
          claim = cd.i >= 2 ? "dd" + istr(cd.i) : "ddsum";
        }
        auto key = std::make_tuple(la.parts, cd.mu.parts, claim);
        if (!seen.insert(key).second) continue;
        const Polynomial hla = double_eta_hat(la.parts, k);
        const Polynomial hmu = double_eta_hat(cd.mu.parts, k);
        bool holds;
        if (claim == "ddsum")
          holds = divided_difference(0, hla, k) +
                      divided_difference(1, hla, k) ==
                  hmu;
        else if (claim == "ddboth")
          holds = divided_difference(0, hla, k) == hmu &&
                  divided_difference(1, hla, k) == hmu;
        else
          holds = divided_difference(cd.i, hla, k) == hmu;
        s.add("uniq0/k" + istr(k) + "/" + format_shape(la.parts) + ">" +
                  format_shape(cd.mu.parts) + "/" + claim,
              okrange && holds,
              okrange ? "hatted recursion fails in the free ring"
                      : "reflection index outside the claimed range");
      }
    }
  }

  // reconstruction from the top class by divided differences
  {
    const int n = std::min(opt.n, 4);
    auto typed = enumerate_typed(1, n - 1, n);
    parallel_for(static_cast<int>(typed.size()),
                 [&](int i) { double_eta(typed[i]); });
    for (const TypedPartition& la : typed) {
      Polynomial rec = eta_via_divided_differences(la, 1, n);
      s.add("reconstruction/k1/" + format_partition(la),
            eq_mod_ideal(rec, double_eta(la), 1),
            "descended top class differs mod the ideal");
    }
  }
  return s.done();
}

SuiteReport verify_hat(const VerifyOptions& opt) {
  Suite s("hat");
  for (int k = 1; k <= opt.kmax; ++k) {
    std::vector<std::vector<int>> shapes;
    for (const auto& sh : enumerate_shapes(k, opt.max_weight, opt.max_weight)) {
      int w = 0;
      for (int x : sh) w += x;
      if (w <= opt.max_weight) shapes.push_back(sh);
    }
    std::vector<Polynomial> lhs(shapes.size()), rhs(shapes.size());
    parallel_for(static_cast<int>(shapes.size()), [&](int i) {
      lhs[i] = double_eta_hat(shapes[i], k);
      Polynomial sum;
      for (const TypedPartition& la : typed_lifts(shapes[i], k))
        sum += double_eta(la);
      rhs[i] = sum;
    });
    for (std::size_t i = 0; i < shapes.size(); ++i)
      s.eq("hat-sum/k" + istr(k) + "/" + format_shape(shapes[i]), lhs[i],
           rhs[i]);
  }
  return s.done();
}

SuiteReport verify_splitting(const VerifyOptions& opt) {
  Suite s("splitting");
  bool found_strict = false;
  for (int k = 1; k <= opt.kmax; ++k) {
    std::vector<TypedPartition> typed;
    for (const TypedPartition& la :
         enumerate_typed(k, opt.max_weight, opt.max_weight))
      if (la.weight() <= opt.max_weight) typed.push_back(la);
    std::vector<Polynomial> lhs(typed.size()), rhs(typed.size());
    parallel_for(static_cast<int>(typed.size()), [&](int i) {
      lhs[i] = double_eta(typed[i]);
      rhs[i] = splitting_rhs(typed[i]);
    });
    for (std::size_t i = 0; i < typed.size(); ++i) {
      s.add("splitting/k" + istr(k) + "/" + format_partition(typed[i]),
            eq_mod_ideal(lhs[i], rhs[i], k),
            "splitting sum differs mod the ideal");
      found_strict = found_strict || lhs[i] != rhs[i];
    }
  }
  // the splitting holds only modulo the ideal: some instance in this range
  // must fail before reduction
  s.add("splitting/strict-inequality-witness", found_strict,
        "every instance was exact in the free ring");
  return s.done();
}

SuiteReport verify_basis(const VerifyOptions& opt) {
  Suite s("basis");
  for (int k = 1; k <= opt.kmax; ++k) {
    std::vector<TypedPartition> typed;
    for (const TypedPartition& la :
         enumerate_typed(k, opt.max_weight, opt.max_weight))
      if (la.weight() <= opt.max_weight) typed.push_back(la);
    parallel_for(static_cast<int>(typed.size()),
                 [&](int i) { double_eta(typed[i]); });
    for (const TypedPartition& la : typed) {
      BasisExpansion ex = expand_in_b_basis(double_eta(la), k);
      bool ok = true;
      std::string why;
      const Polynomial* lead = ex.coeff(la);
      if (lead == nullptr || *lead != Polynomial::one()) {
        ok = false;
        why = "leading coefficient is not 1";
      }
      for (const auto& [mu, cf] : ex.terms) {
        if (!ok) break;
        if (mu == la || cf.is_zero()) continue;
        bool t_only = true;
        for (const auto& [m, q] : cf.terms())
          t_only = t_only && m.t_degree() == m.degree();
        if (!t_only || !cf.is_integral()) {
          ok = false;
          why = "coefficient of " + format_partition(mu) +
                " is not integral in t alone";
        } else if (mu.weight() == la.weight()) {
          if (!dominates_strictly(mu.parts, la.parts)) {
            ok = false;
            why = "equal-weight term " + format_partition(mu) +
                  " does not strictly dominate";
          }
        } else if (mu.weight() < la.weight()) {
          if (!cf.is_homogeneous(la.weight() - mu.weight())) {
            ok = false;
            why = "coefficient of " + format_partition(mu) +
                  " is not homogeneous of the complementary degree";
          }
        } else {
          ok = false;
          why = "term " + format_partition(mu) + " has larger weight";
        }
      }
      s.add("triangular/k" + istr(k) + "/" + format_partition(la), ok, why);
    }
  }

  for (int k = 1; k <= opt.dim_kmax; ++k) {
    RewriteSystem rs(k);
    for (int d = 0; d <= opt.dim_degree; ++d) {
      long monos = count_reduced_monomials(rs, k, d);
      long parts = 0;
      for (const TypedPartition& la :
           enumerate_typed(k, std::max(d, 1), std::max(d, 1)))
        if (la.weight() == d) ++parts;
      s.add("dimension/k" + istr(k) + "/d" + istr(d), monos == parts,
            istr(static_cast<int>(monos)) + " reduced monomials vs " +
                istr(static_cast<int>(parts)) + " typed partitions");
    }
  }
  return s.done();
}

std::vector<SuiteReport> verify_suites(const std::string& name,
                                       const VerifyOptions& opt) {
  std::vector<SuiteReport> out;
  bool all = name == "all";
  if (all || name == "tables") out.push_back(verify_tables(opt));
  if (all || name == "identities") out.push_back(verify_identities(opt));
  if (all || name == "covers") out.push_back(verify_covers(opt));
  if (all || name == "hat" || name == "hat-sum")
    out.push_back(verify_hat(opt));
  if (all || name == "splitting") out.push_back(verify_splitting(opt));
  if (all || name == "basis") out.push_back(verify_basis(opt));
  if (out.empty())
    throw std::invalid_argument("unknown verify suite: " + name);
  return out;
}

void print_report(std::ostream& os, const SuiteReport& rep) {
  for (const CheckResult& c : rep.checks) {
    if (c.pass)
      os << "ok " << c.name << "\n";
    else
      os << "FAIL " << c.name << ": " << c.detail << "\n";
  }
  os << "suite " << rep.suite << ": passed " << rep.passed() << "/"
     << rep.total() << "\n";
}

}  // namespace eta
