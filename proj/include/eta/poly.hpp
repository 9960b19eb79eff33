#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace eta {

/*****************************************************************************
 * Variables of the graded ring Z[b,t].
 *
 * Three families: bt<k> (the split generator of degree k), b<p> (degree p),
 * t<i> (degree 1). Encoded in one 32-bit code with the family tag in the
 * high byte so that bt < b_1 < b_2 < ... < t_1 < t_2 < ... is the
 * significance order used by the monomial comparator.
 *****************************************************************************/

using VarCode = std::uint32_t;

enum class VarTag : std::uint32_t { BTilde = 0, B = 1, T = 2 };

constexpr VarCode make_var(VarTag tag, int index) {
  return (static_cast<std::uint32_t>(tag) << 24) |
         static_cast<std::uint32_t>(index);
}
constexpr VarCode var_bt(int k) { return make_var(VarTag::BTilde, k); }
constexpr VarCode var_b(int p) { return make_var(VarTag::B, p); }
constexpr VarCode var_t(int i) { return make_var(VarTag::T, i); }

constexpr VarTag var_tag(VarCode v) {
  return static_cast<VarTag>(v >> 24);
}
constexpr int var_index(VarCode v) {
  return static_cast<int>(v & 0xffffffu);
}
constexpr int var_degree(VarCode v) {
  return var_tag(v) == VarTag::T ? 1 : var_index(v);
}

std::string var_name(VarCode v);
std::string var_latex(VarCode v);
VarCode parse_var_name(const std::string& name);

/*****************************************************************************
 * Monomials: sorted (VarCode, exponent>0) pairs with cached total degree.
 *****************************************************************************/

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<VarCode, int>> factors);

  static Monomial unit() { return Monomial(); }
  static Monomial var(VarCode v, int exp = 1) {
    return Monomial({{v, exp}});
  }

  const std::vector<std::pair<VarCode, int>>& factors() const { return f_; }
  int degree() const { return deg_; }
  bool is_unit() const { return f_.empty(); }
  int exponent(VarCode v) const;
  int t_degree() const;
  bool has_t() const;

  Monomial operator*(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return f_ == o.f_; }
  bool operator!=(const Monomial& o) const { return f_ != o.f_; }
  // graded, then exponent-lex on the significance order; total
  bool operator<(const Monomial& o) const;

 private:
  std::vector<std::pair<VarCode, int>> f_;
  int deg_ = 0;
};

/*****************************************************************************
 * Polynomials: map monomial -> nonzero rational coefficient.
 *****************************************************************************/

class Polynomial {
 public:
  using Terms = std::map<Monomial, mpq_class>;

  Polynomial() = default;
  explicit Polynomial(const mpq_class& c);

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial(mpq_class(1)); }
  static Polynomial var(VarCode v, int exp = 1);
  static Polynomial term(const mpq_class& c, const Monomial& m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const mpq_class& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator*=(const Polynomial& o);
  Polynomial operator*(const mpq_class& c) const;
  Polynomial& operator*=(const mpq_class& c);
  Polynomial pow(int e) const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return terms_ != o.terms_; }

  int degree() const;  // -1 for the zero polynomial
  bool is_homogeneous(int d) const;
  bool is_integral() const;
  bool is_constant() const;
  mpq_class constant_term() const;

  // t_i <-> t_j everywhere
  Polynomial swap_t(int i, int j) const;
  // t_i -> -t_i for all i
  Polynomial negate_t() const;
  // t_i -> 0 for all i
  Polynomial zero_t() const;

  // split f = sum_e coeff_e(x) * x^e with coeff_e free of x
  std::map<int, Polynomial> decompose_by_var(VarCode x) const;
  // exact division by (x - a) for a free of x; throws std::logic_error
  // if the remainder is nonzero
  Polynomial divide_linear(VarCode x, const Polynomial& a) const;

  std::string to_string() const;
  std::string to_latex() const;
  std::string to_json() const;
  static Polynomial from_json(const std::string& text);

 private:
  Terms terms_;
};

inline Polynomial operator*(const mpq_class& c, const Polynomial& p) {
  return p * c;
}

}  // namespace eta
