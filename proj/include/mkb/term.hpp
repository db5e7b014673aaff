#ifndef MKB_TERM_HPP
#define MKB_TERM_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mkb {

// A term (power product) over x_0..x_n.  Slot k holds the exponent of x_k;
// slot 0 is the homogenizing variable and stays 0 for affine terms.
// Variable precedence is x_0 < x_1 < ... < x_n throughout.
class Term {
 public:
  Term() = default;
  explicit Term(int nvars) : e_(static_cast<size_t>(nvars) + 1, 0) {}
  explicit Term(std::vector<std::uint8_t> exps) : e_(std::move(exps)) {}

  static Term one(int nvars) { return Term(nvars); }
  static Term var(int k, int nvars, int exp = 1) {
    Term t(nvars);
    t.e_[static_cast<size_t>(k)] = static_cast<std::uint8_t>(exp);
    return t;
  }

  int nvars() const { return static_cast<int>(e_.size()) - 1; }
  int exp(int k) const { return e_[static_cast<size_t>(k)]; }
  void set_exp(int k, int v) { e_[static_cast<size_t>(k)] = static_cast<std::uint8_t>(v); }

  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](std::uint8_t v) { return v == 0; });
  }

  // largest / smallest index of a variable occurring; 0 if constant
  int max_var() const {
    for (int k = nvars(); k >= 0; --k)
      if (e_[static_cast<size_t>(k)]) return k;
    return 0;
  }
  int min_var() const {
    for (int k = 0; k <= nvars(); ++k)
      if (e_[static_cast<size_t>(k)]) return k;
    return 0;
  }

  bool divides(const Term& t) const {
    for (size_t k = 0; k < e_.size(); ++k)
      if (e_[k] > t.e_[k]) return false;
    return true;
  }

  Term operator*(const Term& t) const {
    Term r(*this);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = static_cast<std::uint8_t>(r.e_[k] + t.e_[k]);
    return r;
  }
  // exact quotient; caller guarantees divisibility
  Term operator/(const Term& t) const {
    Term r(*this);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = static_cast<std::uint8_t>(r.e_[k] - t.e_[k]);
    return r;
  }
  Term times_var(int k, int exp = 1) const {
    Term r(*this);
    r.e_[static_cast<size_t>(k)] = static_cast<std::uint8_t>(r.e_[static_cast<size_t>(k)] + exp);
    return r;
  }

  bool operator==(const Term& t) const { return e_ == t.e_; }
  bool operator!=(const Term& t) const { return e_ != t.e_; }
  // arbitrary strict order for container keys (not a term order)
  bool operator<(const Term& t) const { return e_ < t.e_; }

  const std::vector<std::uint8_t>& exps() const { return e_; }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (auto v : e_) h = (h ^ v) * 1099511628211ull;
    return h;
  }

  std::string str() const;

 private:
  std::vector<std::uint8_t> e_;
};

struct TermHash {
  size_t operator()(const Term& t) const { return t.hash(); }
};

inline std::string Term::str() const {
  if (is_one()) return "1";
  std::string s;
  for (int k = 0; k <= nvars(); ++k) {
    int x = exp(k);
    if (!x) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(k);
    if (x > 1) s += "^" + std::to_string(x);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Term orders.  All are total and multiplicative; pure lex is the library
// default and is NOT degree-compatible.

enum class OrderKind { Lex, DegRevLex, WeightedLex };

class TermOrder {
 public:
  TermOrder() : kind_(OrderKind::Lex) {}
  static TermOrder lex() { return TermOrder(); }
  static TermOrder degrevlex() {
    TermOrder o;
    o.kind_ = OrderKind::DegRevLex;
    return o;
  }
  // weights[k] = weight of x_{k+1} (ascending variable index); ties by lex
  static TermOrder weighted_lex(std::vector<long> weights) {
    TermOrder o;
    o.kind_ = OrderKind::WeightedLex;
    o.weights_ = std::move(weights);
    return o;
  }

  OrderKind kind() const { return kind_; }

  // -1, 0, +1 for u < v, u == v, u > v
  int compare(const Term& u, const Term& v) const {
    if (u.nvars() != v.nvars()) throw std::invalid_argument("term order: mixed variable counts");
    switch (kind_) {
      case OrderKind::Lex:
        return cmp_lex(u, v);
      case OrderKind::DegRevLex: {
        if (int d = u.degree() - v.degree()) return d > 0 ? 1 : -1;
        // revlex tie-break: first difference scanning from the smallest
        // variable; smaller exponent there means the larger term
        for (int k = 0; k <= u.nvars(); ++k)
          if (int d = u.exp(k) - v.exp(k)) return d < 0 ? 1 : -1;
        return 0;
      }
      case OrderKind::WeightedLex: {
        long wu = weight(u), wv = weight(v);
        if (wu != wv) return wu > wv ? 1 : -1;
        return cmp_lex(u, v);
      }
    }
    return 0;
  }

  bool less(const Term& u, const Term& v) const { return compare(u, v) < 0; }
  bool greater(const Term& u, const Term& v) const { return compare(u, v) > 0; }

  long weight(const Term& u) const {
    long w = 0;
    for (int k = 1; k <= u.nvars(); ++k)
      w += static_cast<long>(u.exp(k)) * (static_cast<size_t>(k - 1) < weights_.size() ? weights_[static_cast<size_t>(k - 1)] : 0);
    return w;
  }

 private:
  static int cmp_lex(const Term& u, const Term& v) {
    for (int k = u.nvars(); k >= 0; --k)
      if (int d = u.exp(k) - v.exp(k)) return d > 0 ? 1 : -1;
    return 0;
  }

  OrderKind kind_;
  std::vector<long> weights_;
};

// storage comparator: descending pure lex
struct LexDesc {
  bool operator()(const Term& a, const Term& b) const {
    for (int k = a.nvars(); k >= 0; --k)
      if (int d = a.exp(k) - b.exp(k)) return d > 0;
    return false;
  }
};

// Enumerate all terms in x_1..x_n (slot 0 unused) of degree <= cap,
// in no particular order.
std::vector<Term> terms_up_to_degree(int nvars, int cap);
// Enumerate all terms of exact degree d.
std::vector<Term> terms_of_degree(int nvars, int d);

}  // namespace mkb

#endif
