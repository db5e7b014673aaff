#ifndef MKB_MONIDEAL_HPP
#define MKB_MONIDEAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "mkb/term.hpp"

namespace mkb {

// Monomial ideal in K[x_1..x_n], held by its minimal generator set
// (pairwise non-dividing, affine terms).  Normalization is idempotent.
class MonomialIdeal {
 public:
  MonomialIdeal() : n_(0) {}
  explicit MonomialIdeal(int nvars) : n_(nvars) {}
  MonomialIdeal(int nvars, std::vector<Term> gens);

  static MonomialIdeal zero(int nvars) { return MonomialIdeal(nvars); }
  static MonomialIdeal from_text(const std::string& text, int nvars);

  int nvars() const { return n_; }
  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_unit_ideal() const { return gens_.size() == 1 && gens_[0].is_one(); }
  const std::vector<Term>& generators() const { return gens_; }

  bool contains(const Term& t) const {
    for (auto& g : gens_)
      if (g.divides(t)) return true;
    return false;
  }

  int max_generator_degree() const {
    int d = 0;
    for (auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }

  bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && gens_ == o.gens_; }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }
  bool operator<(const MonomialIdeal& o) const;  // canonical container order

  std::string str() const;

 private:
  int n_;
  std::vector<Term> gens_;  // minimal, sorted descending lex
};

// ------------------------------------------------------------------ staircase

// Terms of degree <= t_max outside j, sorted descending in `order`
// (default degrevlex: the order the generic-marked-set tails are indexed by).
std::vector<Term> quotient_staircase(const MonomialIdeal& j, int t_max,
                                     const TermOrder& order = TermOrder::degrevlex());

struct HilbertTable {
  std::vector<long> graded;      // h(t) = #{staircase terms of degree t}, t = 0..t_max
  std::vector<long> cumulative;  // H(t) = sum_{s<=t} h(s)
  std::optional<long> constant;  // eventual value of H when Artinian within t_max
};

HilbertTable hilbert_table(const MonomialIdeal& j, int t_max);

// ----------------------------------------------------------------- stability

bool is_strongly_stable(const MonomialIdeal& j);
bool is_stable(const MonomialIdeal& j);
bool is_quasi_stable(const MonomialIdeal& j);

// ------------------------------------------------------------------ Pommaret

// Multiplicative variables of x^alpha are x_1..x_{min(x^alpha)}; constants
// have all variables multiplicative.
inline bool is_multiplicative_for(const Term& head, int var) {
  return head.is_one() || var <= head.min_var();
}

struct PommaretBasis {
  std::vector<Term> elements;  // sorted descending lex

  // the unique element dividing t with multiplicative quotient, if any
  std::optional<Term> divisor_of(const Term& t) const {
    for (auto& e : elements)
      if (e.divides(t)) {
        Term q = t / e;
        if (q.is_one() || q.max_var() <= e.min_var()) return e;
      }
    return std::nullopt;
  }
};

// Pommaret completion; throws std::domain_error("not quasi-stable") when the
// completion exceeds degree max_generator_degree() + nvars.
PommaretBasis pommaret_basis(const MonomialIdeal& j);

// ---------------------------------------------------------------- saturation

// j : (x_1..x_n)^infty.  Quasi-stable fast path: strip x_1 powers from the
// generators; generic ideals go through the iterated colon-by-variables path.
MonomialIdeal saturation(const MonomialIdeal& j);

// least t with j_s = sat(j)_s for all s >= t
int satiety(const MonomialIdeal& j);

}  // namespace mkb

#endif
