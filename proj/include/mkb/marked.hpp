#ifndef MKB_MARKED_HPP
#define MKB_MARKED_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "mkb/dual.hpp"
#include "mkb/monideal.hpp"
#include "mkb/poly.hpp"

namespace mkb {

// Monic polynomial with a designated head term; the full polynomial is
// head - tail and the tail is supported outside the ambient monomial ideal.
template <class Coef>
struct MarkedPoly {
  Term head;
  Poly<Coef> tail;

  Poly<Coef> full() const {
    Poly<Coef> h(head.nvars());
    h = Poly<Coef>(head, Coef(1));
    return h - tail;
  }
};

struct ReductionStats {
  long steps = 0;
};

// A [P(j),m]-marked set: one marked polynomial per Pommaret basis element,
// tails supported in N(j)_{<= max(m, deg head)}.
template <class Coef>
class MarkedSet {
 public:
  MarkedSet(MonomialIdeal j, int m, std::vector<MarkedPoly<Coef>> elems)
      : j_(std::move(j)), m_(m), pommaret_(pommaret_basis(j_)), elems_(std::move(elems)) {
    validate();
    long terms_below = static_cast<long>(terms_up_to_degree(j_.nvars(), satiety(j_) + 1).size());
    step_cap_ = 10 * terms_below;
  }

  // Builds from full polynomials: the head of each is its unique support
  // term lying in j (must be monic).
  static MarkedSet from_polynomials(MonomialIdeal j, int m, const std::vector<Poly<Coef>>& polys) {
    std::vector<MarkedPoly<Coef>> elems;
    for (auto& f : polys) {
      std::optional<Term> head;
      for (auto& [t, c] : f.terms()) {
        if (!j.contains(t)) continue;
        if (head) throw std::invalid_argument("two support terms lie in the ideal: " + head->str() + ", " + t.str());
        if (!(c == Coef(1))) throw std::invalid_argument("head term " + t.str() + " is not monic");
        head = t;
      }
      if (!head) throw std::invalid_argument("no support term lies in the ideal");
      Poly<Coef> tail = Poly<Coef>(*head, Coef(1)) - f;
      elems.push_back({*head, std::move(tail)});
    }
    return MarkedSet(std::move(j), m, std::move(elems));
  }

  const MonomialIdeal& ideal() const { return j_; }
  int m() const { return m_; }
  int nvars() const { return j_.nvars(); }
  const std::vector<MarkedPoly<Coef>>& elements() const { return elems_; }
  const PommaretBasis& pommaret() const { return pommaret_; }
  long step_cap() const { return step_cap_; }
  void set_step_cap(long cap) { step_cap_ = cap; }

  const MarkedPoly<Coef>& element_with_head(const Term& h) const {
    auto it = by_head_.find(h);
    if (it == by_head_.end()) throw std::invalid_argument("no element with head " + h.str());
    return elems_[it->second];
  }

  std::vector<Poly<Coef>> polynomials() const {
    std::vector<Poly<Coef>> out;
    out.reserve(elems_.size());
    for (auto& e : elems_) out.push_back(e.full());
    return out;
  }

 private:
  void validate() {
    // heads must form P(j) exactly, pairwise distinct
    std::vector<Term> heads;
    for (size_t i = 0; i < elems_.size(); ++i) {
      heads.push_back(elems_[i].head);
      if (!by_head_.emplace(elems_[i].head, i).second)
        throw std::invalid_argument("duplicate head " + elems_[i].head.str());
    }
    std::sort(heads.begin(), heads.end(), LexDesc());
    if (heads != pommaret_.elements)
      throw std::invalid_argument("heads do not form the Pommaret basis of the ideal");
    std::sort(elems_.begin(), elems_.end(),
              [](const MarkedPoly<Coef>& a, const MarkedPoly<Coef>& b) {
                return LexDesc()(a.head, b.head);
              });
    by_head_.clear();
    for (size_t i = 0; i < elems_.size(); ++i) by_head_.emplace(elems_[i].head, i);
    for (auto& e : elems_) {
      int t_bound = std::max(m_, e.head.degree());
      for (auto& [t, c] : e.tail.terms()) {
        if (j_.contains(t))
          throw std::invalid_argument("tail term " + t.str() + " lies in the ideal");
        if (t.degree() > t_bound)
          throw std::invalid_argument("tail term " + t.str() + " exceeds degree bound " +
                                      std::to_string(t_bound));
      }
    }
  }

  MonomialIdeal j_;
  int m_;
  PommaretBasis pommaret_;
  std::vector<MarkedPoly<Coef>> elems_;
  std::unordered_map<Term, size_t, TermHash> by_head_;
  long step_cap_ = 0;
};

// Marked (involutive) reduction: repeatedly rewrite the lex-largest term of
// the work polynomial that lies in j, through the marked polynomial of its
// unique Pommaret divisor.  The result is supported in N(j).  Terminates for
// marked sets over quasi-stable ideals; the step cap turns malformed inputs
// into a typed error.  `trace`, when given, collects the subtracted
// multiples c * x^eta * f.
template <class Coef>
Poly<Coef> normal_form(Poly<Coef> work, const MarkedSet<Coef>& G, ReductionStats* stats = nullptr,
                       std::vector<Poly<Coef>>* trace = nullptr) {
  const MonomialIdeal& j = G.ideal();
  long steps = 0;
  for (;;) {
    auto it = work.first_term_where([&](const Term& t) { return j.contains(t); });
    if (it == work.terms().end()) break;
    if (++steps > G.step_cap()) throw std::runtime_error("reduction cap exceeded");
    Term t = it->first;
    Coef c = it->second;
    auto div = G.pommaret().divisor_of(t);
    if (!div) throw std::runtime_error("no Pommaret divisor for " + t.str());
    const auto& f = G.element_with_head(*div);
    Term quotient = t / *div;
    Poly<Coef> multiple = f.full().times(quotient).times(c);
    work -= multiple;
    if (trace) trace->push_back(std::move(multiple));
  }
  if (stats) stats->steps += steps;
  return work;
}

template <class Coef>
struct MarkedBasisCertificate {
  bool verdict = true;
  long prolongations = 0;
  long steps = 0;
  struct Failure {
    Term head;
    int var;
    Poly<Coef> remainder;
  };
  std::vector<Failure> failures;
};

// Basis test via non-multiplicative prolongations: G is a [P(j),m]-marked
// basis iff NF(x_k * f) = 0 for every f in G and every non-multiplicative
// variable x_k of its head.
template <class Coef>
MarkedBasisCertificate<Coef> is_marked_basis(const MarkedSet<Coef>& G) {
  MarkedBasisCertificate<Coef> cert;
  for (auto& e : G.elements()) {
    int minv = e.head.is_one() ? G.nvars() : e.head.min_var();
    for (int k = minv + 1; k <= G.nvars(); ++k) {
      ++cert.prolongations;
      ReductionStats stats;
      Poly<Coef> nf = normal_form(e.full().times(Term::var(k, G.nvars())), G, &stats);
      cert.steps += stats.steps;
      if (!nf.is_zero()) {
        cert.verdict = false;
        cert.failures.push_back({e.head, k, std::move(nf)});
      }
    }
  }
  return cert;
}

// Lemma-style decomposition check by degree-truncated exact linear algebra:
// span{x^eta * f}_{<=t} (+) <N(j)_{<=t}> = R_{<=t} for m <= t <= t_max.
bool membership_decomposition(const std::vector<QPoly>& gens, const MonomialIdeal& j, int m,
                              int t_max);

// substitution of parameter values into every tail coefficient
MarkedSet<Rational> specialize(const MarkedSet<ParamPoly>& G,
                               const std::unordered_map<Sym, Rational>& assignment);

}  // namespace mkb

#endif
