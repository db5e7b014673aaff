#include "mkb/borel.hpp"

#include <algorithm>
#include <unordered_set>

namespace mkb {

namespace {

using TermSet = std::unordered_set<Term, TermHash>;

// minimal generators of the complement ideal of a Borel order ideal
MonomialIdeal complement_ideal(int n, const TermSet& order_ideal) {
  std::vector<Term> gens;
  TermSet seen;
  for (auto& u : order_ideal)
    for (int k = 1; k <= n; ++k) {
      Term t = u.times_var(k);
      if (order_ideal.count(t) || seen.count(t)) continue;
      bool minimal = true;
      for (int i = 1; i <= n && minimal; ++i)
        if (t.exp(i) && !order_ideal.count(t / Term::var(i, n))) minimal = false;
      if (minimal) {
        gens.push_back(t);
        seen.insert(t);
      }
    }
  return MonomialIdeal(n, std::move(gens));
}

struct EnumState {
  int n;
  long d;
  long cap;
  long states = 0;
  std::vector<MonomialIdeal> out;

  // N is a Borel order ideal; last is the lex-largest member.  Additions are
  // restricted to terms lex-greater than `last`, which makes every target
  // reachable along exactly one chain (peeling the lex-largest element of a
  // Borel order ideal leaves a Borel order ideal).
  void grow(TermSet& N, const Term& last) {
    if (++states > cap) throw EnumerationCapError(static_cast<long>(out.size()));
    if (static_cast<long>(N.size()) == d) {
      out.push_back(complement_ideal(n, N));
      return;
    }
    std::vector<Term> candidates;
    TermSet dedup;
    LexDesc gt;
    for (auto& u : N)
      for (int k = 1; k <= n; ++k) {
        Term t = u.times_var(k);
        if (N.count(t) || dedup.count(t) || !gt(t, last)) continue;
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i)
          if (t.exp(i) && !N.count(t / Term::var(i, n))) ok = false;  // order ideal
        for (int jv = 2; jv <= n && ok; ++jv) {
          if (!t.exp(jv)) continue;
          for (int i = 1; i < jv && ok; ++i)
            if (!N.count((t / Term::var(jv, n)).times_var(i))) ok = false;  // Borel moves
        }
        if (ok) {
          candidates.push_back(t);
          dedup.insert(t);
        }
      }
    for (auto& t : candidates) {
      N.insert(t);
      grow(N, t);
      N.erase(t);
    }
  }
};

}  // namespace

BorelStratumList enumerate_strongly_stable(int nvars, long d, long state_cap) {
  if (nvars < 1 || d < 1) throw std::invalid_argument("enumerate_strongly_stable: need n,d >= 1");
  EnumState st{nvars, d, state_cap};
  TermSet N;
  Term one = Term::one(nvars);
  N.insert(one);
  if (d == 1) {
    st.out.push_back(complement_ideal(nvars, N));
  } else {
    st.grow(N, one);
  }
  std::sort(st.out.begin(), st.out.end());
  BorelStratumList list;
  list.nvars = nvars;
  list.colength = d;
  for (auto& j : st.out) {
    BorelStratum s;
    s.ideal = j;
    int top = j.max_generator_degree();
    auto table = hilbert_table(j, top);
    while (!table.graded.empty() && table.graded.back() == 0) table.graded.pop_back();
    s.graded_hf = table.graded;
    list.strata.push_back(std::move(s));
  }
  return list;
}

namespace {

// stream affine terms of degree <= maxdeg in descending pure lex; these are
// the degree-r S-terms x0^(r-|t|) * t in descending lex order
template <class Fn>
void stream_desc_lex(Term& scratch, int k, int remaining, Fn&& fn) {
  if (k == 0) {
    fn(const_cast<const Term&>(scratch));
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    scratch.set_exp(k, e);
    stream_desc_lex(scratch, k - 1, remaining - e, fn);
  }
  scratch.set_exp(k, 0);
}

// colength of an Artinian monomial ideal, or nullopt when not Artinian;
// the staircase lives under the corner of the minimal pure powers
std::optional<long> artinian_colength(const MonomialIdeal& j) {
  int corner = 0;
  for (int k = 1; k <= j.nvars(); ++k) {
    int best = -1;
    for (auto& g : j.generators())
      if (g.exp(k) == g.degree() && g.degree() > 0)
        best = best < 0 ? g.degree() : std::min(best, g.degree());
    if (best < 0) return std::nullopt;
    corner += best - 1;
  }
  long count = 0;
  for (auto& t : terms_up_to_degree(j.nvars(), corner))
    if (!j.contains(t)) ++count;
  return count;
}

}  // namespace

GgResult gg_compare(const MonomialIdeal& j, const MonomialIdeal& h, const TermOrder& order) {
  if (j.nvars() != h.nvars()) throw std::invalid_argument("gg_compare: mixed ambient rings");
  if (order.kind() != OrderKind::Lex)
    throw std::invalid_argument("gg_compare: only the lex order is supported");
  if (j == h) return GgResult::Equal;
  int n = j.nvars();
  // both must be Artinian with the same colength d; r = Gotzmann number = d
  auto dj = artinian_colength(j), dh = artinian_colength(h);
  if (!dj || !dh || *dj != *dh)
    throw std::invalid_argument("gg_compare: Hilbert polynomials differ or not Artinian");
  int r = static_cast<int>(*dj);

  // tau_i >= sigma_i for all i  <=>  every descending prefix of S_r holds at
  // least as many j-members as h-members
  bool j_ge_h = true, h_ge_j = true;
  long cj = 0, ch = 0;
  Term scratch(n);
  stream_desc_lex(scratch, n, r, [&](const Term& t) {
    if (j.contains(t)) ++cj;
    if (h.contains(t)) ++ch;
    if (cj < ch) j_ge_h = false;
    if (ch < cj) h_ge_j = false;
  });
  if (j_ge_h && h_ge_j) return GgResult::Equal;  // unreachable for j != h
  if (j_ge_h) return GgResult::Greater;
  if (h_ge_j) return GgResult::Less;
  return GgResult::Incomparable;
}

std::optional<MonomialIdeal> gg_maximum(const std::vector<MonomialIdeal>& candidates,
                                        const TermOrder& order) {
  if (candidates.empty()) return std::nullopt;
  // tournament pass, then a full verification pass
  size_t best = 0;
  for (size_t i = 1; i < candidates.size(); ++i) {
    GgResult r = gg_compare(candidates[i], candidates[best], order);
    if (r == GgResult::Greater) best = i;
  }
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (i == best) continue;
    GgResult r = gg_compare(candidates[best], candidates[i], order);
    if (r != GgResult::Greater && r != GgResult::Equal) return std::nullopt;
  }
  return candidates[best];
}

SegmentReport is_affine_segment(const MonomialIdeal& j, int m, const WeightVector& omega) {
  SegmentReport report;
  for (auto& alpha : j.generators()) {
    int t = std::max(m, alpha.degree());
    long wa = omega.weight(alpha);
    for (auto& gamma : quotient_staircase(j, t)) {
      if (omega.weight(gamma) >= wa) {
        report.verdict = false;
        report.counterexample = {alpha, gamma};
        return report;
      }
    }
  }
  return report;
}

}  // namespace mkb
