#ifndef MKB_BOREL_HPP
#define MKB_BOREL_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "mkb/monideal.hpp"

namespace mkb {

struct BorelStratum {
  MonomialIdeal ideal;
  std::vector<long> graded_hf;  // h(t) for t = 0..max staircase degree
};

// All strongly stable Artinian monomial ideals with dim_K R/j = d, sorted
// canonically.  Equivalently: Borel-closed order ideals of d terms.
struct BorelStratumList {
  int nvars = 0;
  long colength = 0;
  std::vector<BorelStratum> strata;
};

struct EnumerationCapError : std::runtime_error {
  long partial_count;
  EnumerationCapError(long count)
      : std::runtime_error("enumeration cap exceeded"), partial_count(count) {}
};

BorelStratumList enumerate_strongly_stable(int nvars, long d, long state_cap = 50'000'000);

// Weight vector in the paper's display convention: entries[0] weighs the
// LARGEST variable x_n, entries back to x_1.
struct WeightVector {
  std::vector<long> entries;

  long weight_of_var(int k, int nvars) const {
    return entries.at(static_cast<size_t>(nvars - k));
  }
  long weight(const Term& t) const {
    long w = 0;
    for (int k = 1; k <= t.nvars(); ++k)
      w += static_cast<long>(t.exp(k)) * weight_of_var(k, t.nvars());
    return w;
  }
};

enum class GgResult { Equal, Greater, Less, Incomparable };

// The >> order of double-generic-initial-ideal theory: compare the sorted
// degree-r monomial bases of (j*S)_{>=r} and (h*S)_{>=r} componentwise, with
// r the Gotzmann number (= d for the constant polynomial d).  Streams the
// terms of S_r in descending order keeping only prefix counters.
GgResult gg_compare(const MonomialIdeal& j, const MonomialIdeal& h,
                    const TermOrder& order = TermOrder::lex());

// the candidate >>-greater-or-equal to all others, if one exists
std::optional<MonomialIdeal> gg_maximum(const std::vector<MonomialIdeal>& candidates,
                                        const TermOrder& order = TermOrder::lex());

struct SegmentReport {
  bool verdict = true;
  // violating pair (generator, staircase term) when false
  std::optional<std::pair<Term, Term>> counterexample;
};

// affine m-segment test: every generator omega-dominates all staircase terms
// of degree <= max(m, deg generator)
SegmentReport is_affine_segment(const MonomialIdeal& j, int m, const WeightVector& omega);

}  // namespace mkb

#endif
