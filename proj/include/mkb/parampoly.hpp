#ifndef MKB_PARAMPOLY_HPP
#define MKB_PARAMPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "mkb/rational.hpp"

namespace mkb {

using Sym = std::uint32_t;

// process-wide interning of parameter names (c1_8, tau, T, ...)
class SymbolTable {
 public:
  static SymbolTable& instance() {
    static SymbolTable t;
    return t;
  }
  Sym intern(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    Sym id = static_cast<Sym>(names_.size());
    names_.push_back(name);
    ids_.emplace(name, id);
    return id;
  }
  const std::string& name(Sym id) const { return names_.at(id); }
  bool known(const std::string& name) const { return ids_.count(name) != 0; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Sym> ids_;
};

inline Sym intern(const std::string& name) { return SymbolTable::instance().intern(name); }
inline const std::string& sym_name(Sym id) { return SymbolTable::instance().name(id); }

// monomial in the parameter symbols: sorted (symbol, exponent) pairs
using PMono = std::vector<std::pair<Sym, std::uint32_t>>;

inline int pmono_degree(const PMono& m) {
  int d = 0;
  for (auto& [s, e] : m) d += static_cast<int>(e);
  return d;
}

inline PMono pmono_mul(const PMono& a, const PMono& b) {
  PMono r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    } else if (a[i].first < b[j].first) {
      r.push_back(a[i++]);
    } else {
      r.push_back(b[j++]);
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) r.push_back(b[j]);
  return r;
}

// Sparse multivariate polynomial over Q in interned parameter symbols.
// Terms are kept sorted (by PMono's lexicographic container order) with no
// zero coefficients; no division is ever needed.
class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(const Rational& c) {
    if (!mkb::is_zero(c)) terms_.emplace_back(PMono{}, c);
  }
  ParamPoly(long c) : ParamPoly(Rational(c)) {}
  static ParamPoly symbol(Sym s, const Rational& coef = 1) {
    ParamPoly p;
    if (!mkb::is_zero(coef)) p.terms_.emplace_back(PMono{{s, 1}}, coef);
    return p;
  }
  static ParamPoly symbol(const std::string& name) { return symbol(intern(name)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty()); }
  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("ParamPoly not constant");
    return terms_[0].second;
  }
  int degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, pmono_degree(m));
    return d;
  }
  size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<PMono, Rational>>& terms() const { return terms_; }

  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) { return merged(a, b, false); }
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return merged(a, b, true); }
  ParamPoly operator-() const {
    ParamPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  ParamPoly& operator+=(const ParamPoly& b) { return *this = *this + b; }
  ParamPoly& operator-=(const ParamPoly& b) { return *this = *this - b; }

  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.terms_.size() == 1) return a.times(b.terms_[0].first, b.terms_[0].second);
    if (a.terms_.size() == 1) return b.times(a.terms_[0].first, a.terms_[0].second);
    std::map<PMono, Rational> acc;
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) {
        PMono m = pmono_mul(ma, mb);
        auto [it, fresh] = acc.emplace(std::move(m), ca * cb);
        if (!fresh) it->second += ca * cb;
      }
    ParamPoly r;
    for (auto& [m, c] : acc)
      if (!mkb::is_zero(c)) r.terms_.emplace_back(m, c);
    return r;
  }

  ParamPoly times(const PMono& m, const Rational& c) const {
    ParamPoly r;
    if (mkb::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (auto& [mm, cc] : terms_) r.terms_.emplace_back(pmono_mul(mm, m), cc * c);
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return r;
  }
  ParamPoly times(const Rational& c) const { return times(PMono{}, c); }

  bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const ParamPoly& o) const { return terms_ != o.terms_; }

  Rational evaluate(const std::unordered_map<Sym, Rational>& vals) const {
    Rational total(0);
    for (auto& [m, c] : terms_) {
      Rational t = c;
      for (auto& [s, e] : m) {
        auto it = vals.find(s);
        if (it == vals.end()) throw std::domain_error("unbound symbol " + sym_name(s));
        for (std::uint32_t k = 0; k < e; ++k) t *= it->second;
      }
      total += t;
    }
    return total;
  }

  // substitute polynomials for some symbols (others stay symbolic)
  ParamPoly substitute(const std::unordered_map<Sym, ParamPoly>& map) const {
    ParamPoly total;
    for (auto& [m, c] : terms_) {
      ParamPoly t{c};
      PMono keep;
      for (auto& [s, e] : m) {
        auto it = map.find(s);
        if (it == map.end()) {
          keep.emplace_back(s, e);
        } else {
          for (std::uint32_t k = 0; k < e; ++k) t = t * it->second;
        }
      }
      total += t.times(keep, Rational(1));
    }
    return total;
  }

  std::string str() const;

 private:
  static ParamPoly merged(const ParamPoly& a, const ParamPoly& b, bool negate_b) {
    ParamPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      const auto& [ma, ca] = a.terms_[i];
      const auto& [mb, cb] = b.terms_[j];
      if (ma == mb) {
        Rational c = negate_b ? Rational(ca - cb) : Rational(ca + cb);
        if (!mkb::is_zero(c)) r.terms_.emplace_back(ma, c);
        ++i, ++j;
      } else if (ma < mb) {
        r.terms_.push_back(a.terms_[i++]);
      } else {
        r.terms_.emplace_back(mb, negate_b ? Rational(-cb) : cb);
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j)
      r.terms_.emplace_back(b.terms_[j].first, negate_b ? Rational(-b.terms_[j].second) : b.terms_[j].second);
    return r;
  }

  std::vector<std::pair<PMono, Rational>> terms_;
};

inline std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [m, c] : terms_) {
    Rational a = c;
    bool neg = sgn(a) < 0;
    if (neg) a = -a;
    if (first) {
      if (neg) s += "-";
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    std::string mono;
    for (auto& [sym, e] : m) {
      if (!mono.empty()) mono += "*";
      mono += sym_name(sym);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string cs = to_string(a);
    if (mono.empty())
      s += cs;
    else if (cs == "1")
      s += mono;
    else
      s += cs + "*" + mono;
  }
  return s;
}

}  // namespace mkb

#endif
