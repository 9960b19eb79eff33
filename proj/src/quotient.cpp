#include "eta/quotient.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

#include "eta/ring.hpp"

namespace eta {

namespace {

void require_bt_index(const Polynomial& f, int k) {
  for (const auto& [m, c] : f.terms()) {
    for (const auto& [v, e] : m.factors()) {
      if (var_tag(v) == VarTag::BTilde && var_index(v) != k) {
        throw std::invalid_argument(
            "quotient: polynomial mentions bt" +
            std::to_string(var_index(v)) + " but k = " + std::to_string(k));
      }
    }
  }
}

// offending subscripts of a monomial: p > k with exponent >= 2, and k when
// b_k and bt_k are both present
std::vector<int> offenders(const Monomial& m, int k) {
  std::vector<int> out;
  bool has_bk = false, has_btk = false;
  for (const auto& [v, e] : m.factors()) {
    if (var_tag(v) == VarTag::B) {
      int p = var_index(v);
      if (p > k && e >= 2) out.push_back(p);
      if (p == k) has_bk = true;
    } else if (var_tag(v) == VarTag::BTilde) {
      has_btk = true;
    }
  }
  if (has_bk && has_btk) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

Monomial strip(const Monomial& m, VarCode v1, int e1, VarCode v2, int e2) {
  std::vector<std::pair<VarCode, int>> fs;
  for (auto [v, e] : m.factors()) {
    if (v == v1) e -= e1;
    if (v == v2) e -= e2;
    if (e < 0) throw std::logic_error("quotient: strip underflow");
    if (e > 0) fs.push_back({v, e});
  }
  return Monomial(std::move(fs));
}

}  // namespace

RewriteSystem::RewriteSystem(int k) : k_(k) {
  if (k < 1) throw std::invalid_argument("rewrite system: k must be >= 1");
}

bool RewriteSystem::is_reduced(const Monomial& m) const {
  return offenders(m, k_).empty();
}

const Polynomial& RewriteSystem::rhs_square(int p) const {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Polynomial> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({k_, p});
    if (it != cache.end()) return it->second;
  }
  // b_p^2 -> sum_{i=1}^p (-1)^{i+1} b_{p+i} c_{p-i}
  Polynomial val;
  const Ring& R = ring(k_);
  for (int i = 1; i <= p; ++i) {
    Polynomial term = Polynomial::var(var_b(p + i)) * R.c(p - i);
    val += i % 2 == 1 ? term : -term;
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(k_, p), std::move(val)).first->second;
}

const Polynomial& RewriteSystem::rhs_mixed() const {
  static std::mutex mu;
  static std::map<int, Polynomial> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k_);
    if (it != cache.end()) return it->second;
  }
  // b_k bt_k -> sum_{i=1}^k (-1)^{i+1} b_{k+i} b_{k-i}  (b_0 = 1)
  Polynomial val;
  for (int i = 1; i <= k_; ++i) {
    Polynomial term = Polynomial::var(var_b(k_ + i));
    if (k_ - i > 0) term *= Polynomial::var(var_b(k_ - i));
    val += i % 2 == 1 ? term : -term;
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(k_, std::move(val)).first->second;
}

namespace {

template <typename PickTerm, typename PickTarget>
Polynomial reduce_loop(const RewriteSystem& rs, const Polynomial& f, int k,
                       PickTerm pick_term, PickTarget pick_target) {
  std::map<Monomial, mpq_class> pending(f.terms().begin(), f.terms().end());
  Polynomial out;
  while (!pending.empty()) {
    auto it = pick_term(pending);
    Monomial m = it->first;
    mpq_class coeff = it->second;
    pending.erase(it);
    std::vector<int> offs = offenders(m, k);
    if (offs.empty()) {
      out.add_term(m, coeff);
      continue;
    }
    int p = pick_target(offs);
    Monomial rest;
    const Polynomial* rhs;
    if (p > k) {
      rest = strip(m, var_b(p), 2, 0, 0);
      rhs = &rs.rhs_square(p);
    } else {
      rest = strip(m, var_b(k), 1, var_bt(k), 1);
      rhs = &rs.rhs_mixed();
    }
    for (const auto& [rm, rc] : rhs->terms()) {
      Monomial nm = rest * rm;
      auto [slot, fresh] = pending.emplace(nm, coeff * rc);
      if (!fresh) {
        slot->second += coeff * rc;
        if (slot->second == 0) pending.erase(slot);
      }
    }
  }
  return out;
}

}  // namespace

Polynomial RewriteSystem::reduce(const Polynomial& f) const {
  require_bt_index(f, k_);
  return reduce_loop(
      *this, f, k_,
      [](std::map<Monomial, mpq_class>& pending) {
        return std::prev(pending.end());
      },
      [](const std::vector<int>& offs) { return offs.back(); });
}

Polynomial RewriteSystem::reduce_randomized(const Polynomial& f,
                                            std::uint64_t seed) const {
  require_bt_index(f, k_);
  std::mt19937_64 rng(seed);
  return reduce_loop(
      *this, f, k_,
      [&rng](std::map<Monomial, mpq_class>& pending) {
        auto it = pending.begin();
        std::advance(it, rng() % pending.size());
        return it;
      },
      [&rng](const std::vector<int>& offs) {
        return offs[rng() % offs.size()];
      });
}

Polynomial normal_form(const Polynomial& f, int k) {
  return RewriteSystem(k).reduce(f);
}

bool eq_mod_ideal(const Polynomial& f, const Polynomial& g, int k) {
  if (f == g) return true;
  return normal_form(f - g, k).is_zero();
}

Polynomial b_lambda(const TypedPartition& la) {
  validate(la);
  const Ring& R = ring(la.k);
  int m = la.ell_k() + 1;
  mpq_class scale(1);
  for (int i = 1; i <= la.ell_k(); ++i) scale /= 2;
  Polynomial out(scale);
  for (int i = 1; i <= la.length(); ++i) {
    if (la.type > 0 && i == m) {
      out *= Polynomial::var(la.type == 1 ? var_b(la.k) : var_bt(la.k));
    } else {
      out *= R.c(la.part(i));
    }
  }
  return out;
}

/*****************************************************************************
 * Basis expansion
 *****************************************************************************/

const Polynomial* BasisExpansion::coeff(const TypedPartition& la) const {
  for (const auto& [mu, c] : terms) {
    if (mu == la) return &c;
  }
  return nullptr;
}

namespace {

int b_weight(const Monomial& m) {
  return m.degree() - m.t_degree();
}

// typed partition named by the b-part of a reduced monomial
TypedPartition monomial_partition(const Monomial& m, int k) {
  std::vector<int> parts;
  int type = 0;
  for (const auto& [v, e] : m.factors()) {
    if (var_tag(v) == VarTag::T) continue;
    int p = var_index(v);
    if (var_tag(v) == VarTag::BTilde) type = 2;
    if (var_tag(v) == VarTag::B && p == k) type = 1;
    for (int c = 0; c < e; ++c) parts.push_back(p);
  }
  std::sort(parts.rbegin(), parts.rend());
  return make_typed(std::move(parts), k, type);
}

Monomial partition_monomial(const TypedPartition& la) {
  std::vector<std::pair<VarCode, int>> fs;
  for (int i = 1; i <= la.length(); ++i) {
    int p = la.part(i);
    VarCode v = (p == la.k && la.type == 2) ? var_bt(la.k) : var_b(p);
    fs.push_back({v, 1});
  }
  return Monomial(std::move(fs));
}

}  // namespace

BasisExpansion expand_in_basis(
    const Polynomial& f, int k,
    const std::function<Polynomial(const TypedPartition&)>& basis_nf) {
  require_bt_index(f, k);
  RewriteSystem rs(k);
  Polynomial residual = rs.reduce(f);
  std::vector<std::pair<TypedPartition, Polynomial>> got;
  while (!residual.is_zero()) {
    int d = 0;
    for (const auto& [m, c] : residual.terms()) {
      d = std::max(d, b_weight(m));
    }
    // dominance-minimal b-partition among weight-d terms: typed_less puts
    // more dominant shapes first, so the typed_less-largest candidate is
    // dominance-minimal (ties resolved towards type 2)
    bool have = false;
    TypedPartition best;
    for (const auto& [m, c] : residual.terms()) {
      if (b_weight(m) != d) continue;
      TypedPartition cand = monomial_partition(m, k);
      if (!have || typed_less(best, cand)) {
        best = cand;
        have = true;
      }
    }
    if (!have) throw std::logic_error("expand_in_basis: weight scan failed");
    Monomial lead = partition_monomial(best);
    // collect the t-coefficient of the leading monomial
    Polynomial coeff;
    for (const auto& [m, c] : residual.terms()) {
      std::vector<std::pair<VarCode, int>> bpart, tpart;
      for (const auto& [v, e] : m.factors()) {
        (var_tag(v) == VarTag::T ? tpart : bpart).push_back({v, e});
      }
      if (Monomial(std::move(bpart)) == lead) {
        coeff.add_term(Monomial(std::move(tpart)), c);
      }
    }
    if (coeff.is_zero()) {
      throw std::logic_error("expand_in_basis: leading coefficient vanished");
    }
    Polynomial base = basis_nf(best);
    residual -= coeff * base;
    got.push_back({best, std::move(coeff)});
  }
  std::sort(got.begin(), got.end(), [](const auto& a, const auto& b) {
    return typed_less(a.first, b.first);
  });
  BasisExpansion out;
  out.terms = std::move(got);
  return out;
}

BasisExpansion expand_in_b_basis(const Polynomial& f, int k) {
  return expand_in_basis(f, k, [k](const TypedPartition& la) {
    return normal_form(b_lambda(la), k);
  });
}

}  // namespace eta
