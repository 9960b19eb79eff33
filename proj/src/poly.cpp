#include "eta/poly.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace eta {

/*****************************************************************************
 * Variables
 *****************************************************************************/

std::string var_name(VarCode v) {
  switch (var_tag(v)) {
    case VarTag::BTilde: return "bt" + std::to_string(var_index(v));
    case VarTag::B: return "b" + std::to_string(var_index(v));
    case VarTag::T: return "t" + std::to_string(var_index(v));
  }
  throw std::logic_error("var_name: bad tag");
}

std::string var_latex(VarCode v) {
  switch (var_tag(v)) {
    case VarTag::BTilde:
      return "\\wt{b}_{" + std::to_string(var_index(v)) + "}";
    case VarTag::B: return "b_{" + std::to_string(var_index(v)) + "}";
    case VarTag::T: return "t_{" + std::to_string(var_index(v)) + "}";
  }
  throw std::logic_error("var_latex: bad tag");
}

VarCode parse_var_name(const std::string& name) {
  VarTag tag;
  std::size_t pos;
  if (name.rfind("bt", 0) == 0) {
    tag = VarTag::BTilde;
    pos = 2;
  } else if (name.rfind("b", 0) == 0) {
    tag = VarTag::B;
    pos = 1;
  } else if (name.rfind("t", 0) == 0) {
    tag = VarTag::T;
    pos = 1;
  } else {
    throw std::invalid_argument("unknown variable '" + name + "'");
  }
  if (pos >= name.size()) {
    throw std::invalid_argument("variable '" + name + "' lacks an index");
  }
  int index = 0;
  for (std::size_t i = pos; i < name.size(); ++i) {
    char ch = name[i];
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("variable '" + name +
                                  "': bad character at position " +
                                  std::to_string(i));
    }
    index = index * 10 + (ch - '0');
    if (index > 0xffffff) {
      throw std::invalid_argument("variable '" + name + "': index too large");
    }
  }
  if (index < 1) {
    throw std::invalid_argument("variable '" + name + "': index must be >=1");
  }
  return make_var(tag, index);
}

/*****************************************************************************
 * Monomial
 *****************************************************************************/

Monomial::Monomial(std::vector<std::pair<VarCode, int>> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [v, e] : factors) {
    if (e < 0) throw std::invalid_argument("monomial: negative exponent");
    if (e == 0) continue;
    if (!f_.empty() && f_.back().first == v) {
      f_.back().second += e;
    } else {
      f_.push_back({v, e});
    }
  }
  for (const auto& [v, e] : f_) deg_ += var_degree(v) * e;
}

int Monomial::exponent(VarCode v) const {
  for (const auto& [w, e] : f_) {
    if (w == v) return e;
    if (w > v) break;
  }
  return 0;
}

int Monomial::t_degree() const {
  int d = 0;
  for (const auto& [v, e] : f_) {
    if (var_tag(v) == VarTag::T) d += e;
  }
  return d;
}

bool Monomial::has_t() const {
  return !f_.empty() && var_tag(f_.back().first) == VarTag::T;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  std::size_t i = 0, j = 0;
  while (i < f_.size() && j < o.f_.size()) {
    if (f_[i].first == o.f_[j].first) {
      r.f_.push_back({f_[i].first, f_[i].second + o.f_[j].second});
      ++i, ++j;
    } else if (f_[i].first < o.f_[j].first) {
      r.f_.push_back(f_[i++]);
    } else {
      r.f_.push_back(o.f_[j++]);
    }
  }
  while (i < f_.size()) r.f_.push_back(f_[i++]);
  while (j < o.f_.size()) r.f_.push_back(o.f_[j++]);
  r.deg_ = deg_ + o.deg_;
  return r;
}

bool Monomial::operator<(const Monomial& o) const {
  if (deg_ != o.deg_) return deg_ < o.deg_;
  // same degree: the monomial with the higher exponent on the first
  // differing variable (in significance order) is the larger one
  std::size_t i = 0, j = 0;
  while (i < f_.size() && j < o.f_.size()) {
    if (f_[i].first == o.f_[j].first) {
      if (f_[i].second != o.f_[j].second) {
        return f_[i].second < o.f_[j].second;
      }
      ++i, ++j;
    } else {
      // the side owning the more significant variable has positive
      // exponent there, the other side zero
      return f_[i].first > o.f_[j].first;
    }
  }
  if (i < f_.size()) return false;
  if (j < o.f_.size()) return true;
  return false;
}

/*****************************************************************************
 * Polynomial
 *****************************************************************************/

Polynomial::Polynomial(const mpq_class& c) {
  if (c != 0) terms_[Monomial::unit()] = c;
}

Polynomial Polynomial::var(VarCode v, int exp) {
  Polynomial p;
  if (exp == 0) return one();
  p.terms_[Monomial::var(v, exp)] = 1;
  return p;
}

Polynomial Polynomial::term(const mpq_class& c, const Monomial& m) {
  Polynomial p;
  if (c != 0) p.terms_[m] = c;
  return p;
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      r.add_term(m1 * m2, c1 * c2);
    }
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::operator*(const mpq_class& c) const {
  if (c == 0) return zero();
  Polynomial r = *this;
  for (auto& [m, cc] : r.terms_) cc *= c;
  return r;
}

Polynomial& Polynomial::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, cc] : terms_) cc *= c;
  return *this;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  Polynomial r = one();
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base = (e >>= 1) ? base * base : base;
  }
  return r;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

bool Polynomial::is_homogeneous(int d) const {
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return false;
  }
  return true;
}

bool Polynomial::is_integral() const {
  for (const auto& [m, c] : terms_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

mpq_class Polynomial::constant_term() const {
  auto it = terms_.find(Monomial::unit());
  return it == terms_.end() ? mpq_class(0) : it->second;
}

Polynomial Polynomial::swap_t(int i, int j) const {
  VarCode vi = var_t(i), vj = var_t(j);
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    std::vector<std::pair<VarCode, int>> fs = m.factors();
    for (auto& [v, e] : fs) {
      if (v == vi) {
        v = vj;
      } else if (v == vj) {
        v = vi;
      }
    }
    r.add_term(Monomial(std::move(fs)), c);
  }
  return r;
}

Polynomial Polynomial::negate_t() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    r.add_term(m, (m.t_degree() % 2 == 0) ? c : -c);
  }
  return r;
}

Polynomial Polynomial::zero_t() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    if (!m.has_t()) r.add_term(m, c);
  }
  return r;
}

std::map<int, Polynomial> Polynomial::decompose_by_var(VarCode x) const {
  std::map<int, Polynomial> out;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(x);
    if (e == 0) {
      out[0].add_term(m, c);
      continue;
    }
    std::vector<std::pair<VarCode, int>> fs;
    for (const auto& [v, ee] : m.factors()) {
      if (v != x) fs.push_back({v, ee});
    }
    out[e].add_term(Monomial(std::move(fs)), c);
  }
  return out;
}

Polynomial Polynomial::divide_linear(VarCode x, const Polynomial& a) const {
  if (is_zero()) return zero();
  for (const auto& [m, c] : a.terms()) {
    if (m.exponent(x) != 0) {
      throw std::logic_error("divide_linear: shift depends on the variable");
    }
  }
  std::map<int, Polynomial> parts = decompose_by_var(x);
  int dmax = parts.rbegin()->first;
  std::vector<Polynomial> f(dmax + 1);
  for (auto& [e, p] : parts) f[e] = std::move(p);
  // f = q*(x - a) + r via Horner from the top coefficient down
  Polynomial q, carry;
  for (int e = dmax; e >= 1; --e) {
    carry = f[e] + a * carry;
    q += carry * Polynomial::var(x, e - 1);
  }
  Polynomial rem = f[0] + a * carry;
  if (!rem.is_zero()) {
    throw std::logic_error("divide_linear: nonzero remainder");
  }
  return q;
}

/*****************************************************************************
 * Formatting
 *****************************************************************************/

namespace {

std::string coeff_string(const mpq_class& c) {
  return c.get_str();
}

void append_coeff(std::ostringstream& os, const mpq_class& c, bool first,
                  bool unit_monomial) {
  mpq_class a = abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (a != 1 || unit_monomial) {
    os << a.get_str();
    if (!unit_monomial) os << "*";
  }
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    append_coeff(os, c, first, m.is_unit());
    bool firstvar = true;
    for (const auto& [v, e] : m.factors()) {
      if (!firstvar) os << "*";
      firstvar = false;
      os << var_name(v);
      if (e > 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

std::string Polynomial::to_latex() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    mpq_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (a != 1 || m.is_unit()) {
      if (a.get_den() == 1) {
        os << a.get_num().get_str();
      } else {
        os << "\\frac{" << a.get_num().get_str() << "}{"
           << a.get_den().get_str() << "}";
      }
      if (!m.is_unit()) os << " ";
    }
    bool firstvar = true;
    for (const auto& [v, e] : m.factors()) {
      if (!firstvar) os << " ";
      firstvar = false;
      os << var_latex(v);
      if (e > 1) os << "^{" << e << "}";
    }
  }
  return os.str();
}

std::string Polynomial::to_json() const {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    nlohmann::ordered_json vars = nlohmann::ordered_json::object();
    for (const auto& [v, e] : m.factors()) vars[var_name(v)] = e;
    terms.push_back({{"coeff", coeff_string(c)}, {"vars", vars}});
  }
  nlohmann::ordered_json j;
  j["terms"] = terms;
  return j.dump();
}

Polynomial Polynomial::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("polynomial JSON: parse error at byte " +
                                std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw std::invalid_argument(
        "polynomial JSON: expected an object with a 'terms' array");
  }
  Polynomial p;
  std::size_t idx = 0;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("vars") ||
        !t["coeff"].is_string() || !t["vars"].is_object()) {
      throw std::invalid_argument(
          "polynomial JSON: term " + std::to_string(idx) +
          " must be {\"coeff\": string, \"vars\": object}");
    }
    mpq_class c;
    if (c.set_str(t["coeff"].get<std::string>(), 10) != 0 ||
        c.get_den() == 0) {
      throw std::invalid_argument("polynomial JSON: term " +
                                  std::to_string(idx) + ": bad coefficient '" +
                                  t["coeff"].get<std::string>() + "'");
    }
    c.canonicalize();
    std::vector<std::pair<VarCode, int>> fs;
    for (auto it = t["vars"].begin(); it != t["vars"].end(); ++it) {
      if (!it.value().is_number_integer() || it.value().get<int>() < 1) {
        throw std::invalid_argument(
            "polynomial JSON: term " + std::to_string(idx) + ": exponent of " +
            it.key() + " must be a positive integer");
      }
      fs.push_back({parse_var_name(it.key()), it.value().get<int>()});
    }
    p.add_term(Monomial(std::move(fs)), c);
    ++idx;
  }
  return p;
}

}  // namespace eta
