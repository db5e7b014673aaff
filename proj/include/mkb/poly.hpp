#ifndef MKB_POLY_HPP
#define MKB_POLY_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mkb/parampoly.hpp"
#include "mkb/rational.hpp"
#include "mkb/term.hpp"

namespace mkb {

inline bool is_zero(const ParamPoly& p) { return p.is_zero(); }

// Sparse polynomial with terms over x_0..x_n and coefficients in an exact
// commutative ring (Rational, ParamPoly, Dual).  Terms are stored strictly
// descending in pure lex; zero coefficients are never stored, so the support
// is exactly the stored key set.
template <class Coef>
class Poly {
 public:
  using Entry = std::pair<Term, Coef>;

  Poly() : n_(0) {}
  explicit Poly(int nvars) : n_(nvars) {}
  Poly(const Term& t, Coef c) : n_(t.nvars()) {
    if (!mkb::is_zero(c)) terms_.emplace_back(t, std::move(c));
  }

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<Entry>& terms() const { return terms_; }

  int degree() const {
    int d = -1;
    for (auto& [t, c] : terms_) d = std::max(d, t.degree());
    return d;  // -1 for the zero polynomial
  }

  // leading entry w.r.t. the storage order (pure lex)
  const Entry& lead() const {
    if (terms_.empty()) throw std::domain_error("lead of zero polynomial");
    return terms_.front();
  }

  const Coef* coeff(const Term& t) const {
    auto it = find(t);
    return it != terms_.end() && it->first == t ? &it->second : nullptr;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merged(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merged(a, b, true); }
  Poly operator-() const {
    Poly r(*this);
    for (auto& [t, c] : r.terms_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }

  Poly times(const Coef& c) const {
    Poly r(n_);
    if (mkb::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (auto& [t, v] : terms_) {
      Coef w = v * c;
      if (!mkb::is_zero(w)) r.terms_.emplace_back(t, std::move(w));
    }
    return r;
  }
  Poly times(const Term& m) const {
    Poly r(n_);
    r.terms_.reserve(terms_.size());
    for (auto& [t, v] : terms_) r.terms_.emplace_back(t * m, v);
    return r;  // multiplying by a fixed term preserves lex order
  }
  Poly times(const Term& m, const Coef& c) const { return times(m).times(c); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.n_);
    for (auto& [t, c] : b.terms_) r += a.times(t, c);
    return r;
  }

  bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // largest stored term that lies in the given set (predicate on terms);
  // returns terms_.end() if none
  template <class Pred>
  typename std::vector<Entry>::const_iterator first_term_where(Pred&& p) const {
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
      if (p(it->first)) return it;
    return terms_.end();
  }

  void add_term(const Term& t, const Coef& c) {
    if (mkb::is_zero(c)) return;
    auto it = find(t);
    if (it != terms_.end() && it->first == t) {
      it->second += c;
      if (mkb::is_zero(it->second)) terms_.erase(it);
    } else {
      terms_.insert(it, Entry(t, c));
    }
  }

  static Poly from_entries(int nvars, std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return LexDesc()(a.first, b.first); });
    Poly r(nvars);
    for (auto& [t, c] : entries) r.append_sorted(t, c);
    return r;
  }

  std::string str(const TermOrder& display = TermOrder::lex()) const;

 private:
  typename std::vector<Entry>::iterator find(const Term& t) {
    return std::lower_bound(terms_.begin(), terms_.end(), t,
                            [](const Entry& e, const Term& key) { return LexDesc()(e.first, key); });
  }
  typename std::vector<Entry>::const_iterator find(const Term& t) const {
    return std::lower_bound(terms_.begin(), terms_.end(), t,
                            [](const Entry& e, const Term& key) { return LexDesc()(e.first, key); });
  }

  void append_sorted(const Term& t, const Coef& c) {
    if (mkb::is_zero(c)) return;
    if (!terms_.empty() && terms_.back().first == t) {
      terms_.back().second += c;
      if (mkb::is_zero(terms_.back().second)) terms_.pop_back();
    } else {
      terms_.emplace_back(t, c);
    }
  }

  static Poly merged(const Poly& a, const Poly& b, bool neg) {
    Poly r(std::max(a.n_, b.n_));
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    LexDesc lt;
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      const auto& ea = a.terms_[i];
      const auto& eb = b.terms_[j];
      if (ea.first == eb.first) {
        Coef c = neg ? Coef(ea.second - eb.second) : Coef(ea.second + eb.second);
        if (!mkb::is_zero(c)) r.terms_.emplace_back(ea.first, std::move(c));
        ++i, ++j;
      } else if (lt(ea.first, eb.first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else {
        r.terms_.emplace_back(eb.first, neg ? Coef(-eb.second) : eb.second);
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j)
      r.terms_.emplace_back(b.terms_[j].first, neg ? Coef(-b.terms_[j].second) : b.terms_[j].second);
    return r;
  }

  int n_;
  std::vector<Entry> terms_;
};

using QPoly = Poly<Rational>;
using PPoly = Poly<ParamPoly>;

// exact evaluation of a rational-coefficient polynomial at a rational point
// (point[i] is the value of x_{i+1}; affine terms only)
inline Rational evaluate(const QPoly& f, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != f.nvars())
    throw std::invalid_argument("evaluate: point dimension mismatch");
  Rational total(0);
  for (auto& [t, c] : f.terms()) {
    if (t.exp(0) != 0) throw std::invalid_argument("evaluate: homogenized term");
    Rational v = c;
    for (int k = 1; k <= f.nvars(); ++k)
      for (int e = 0; e < t.exp(k); ++e) v *= point[static_cast<size_t>(k - 1)];
    total += v;
  }
  return total;
}

// f^h = x0^deg(f) * f(x1/x0, ...): every term is padded to top degree with x0
inline QPoly homogenize(const QPoly& f) {
  int d = f.degree();
  std::vector<QPoly::Entry> entries;
  for (auto& [t, c] : f.terms()) {
    Term h = t;
    h.set_exp(0, d - t.degree());
    entries.emplace_back(h, c);
  }
  return QPoly::from_entries(f.nvars(), std::move(entries));
}

// F^a = F(1, x1, ..., xn)
inline QPoly dehomogenize(const QPoly& F) {
  std::vector<QPoly::Entry> entries;
  for (auto& [t, c] : F.terms()) {
    Term a = t;
    a.set_exp(0, 0);
    entries.emplace_back(a, c);
  }
  return QPoly::from_entries(F.nvars(), std::move(entries));
}

// coefficient-ring conversions -------------------------------------------

inline PPoly to_param_poly(const QPoly& f) {
  std::vector<PPoly::Entry> entries;
  for (auto& [t, c] : f.terms()) entries.emplace_back(t, ParamPoly(c));
  return PPoly::from_entries(f.nvars(), std::move(entries));
}

inline QPoly to_rational_poly(const PPoly& f) {
  std::vector<QPoly::Entry> entries;
  for (auto& [t, c] : f.terms()) entries.emplace_back(t, c.constant_value());
  return QPoly::from_entries(f.nvars(), std::move(entries));
}

inline QPoly specialize(const PPoly& f, const std::unordered_map<Sym, Rational>& vals) {
  std::vector<QPoly::Entry> entries;
  for (auto& [t, c] : f.terms()) entries.emplace_back(t, c.evaluate(vals));
  return QPoly::from_entries(f.nvars(), std::move(entries));
}

template <class Coef>
std::string Poly<Coef>::str(const TermOrder& display) const {
  if (terms_.empty()) return "0";
  std::vector<const Entry*> order;
  order.reserve(terms_.size());
  for (auto& e : terms_) order.push_back(&e);
  std::sort(order.begin(), order.end(),
            [&](const Entry* a, const Entry* b) { return display.greater(a->first, b->first); });
  std::string s;
  bool first = true;
  for (const Entry* e : order) {
    std::string cs, body;
    bool neg = false;
    if constexpr (std::is_same_v<Coef, Rational>) {
      Rational a = e->second;
      neg = sgn(a) < 0;
      if (neg) a = -a;
      cs = to_string(a);
    } else {
      // ring coefficients print parenthesized, sign outside only for leading
      cs = "(" + e->second.str() + ")";
    }
    if (e->first.is_one())
      body = cs;
    else if (cs == "1")
      body = e->first.str();
    else
      body = cs + "*" + e->first.str();
    if (first) {
      s += (neg ? "-" : "") + body;
      first = false;
    } else {
      s += neg ? " - " + body : " + " + body;
    }
  }
  return s;
}

}  // namespace mkb

#endif
