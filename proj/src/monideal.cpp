#include "mkb/monideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "mkb/parser.hpp"

namespace mkb {

static std::vector<Term> minimalize(std::vector<Term> gens) {
  std::sort(gens.begin(), gens.end(), LexDesc());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Term> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (auto& h : gens)
      if (h != g && h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Term> gens) : n_(nvars) {
  for (auto& g : gens)
    if (g.nvars() != nvars) throw std::invalid_argument("generator has wrong variable count");
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::from_text(const std::string& text, int nvars) {
  std::vector<Term> gens;
  for (auto& p : parse_rational_poly_list(text, nvars)) {
    if (p.term_count() != 1 || p.lead().second != 1)
      throw std::invalid_argument("monomial ideal text must list monic terms");
    gens.push_back(p.lead().first);
  }
  return MonomialIdeal(nvars, std::move(gens));
}

bool MonomialIdeal::operator<(const MonomialIdeal& o) const {
  LexDesc lt;
  size_t m = std::min(gens_.size(), o.gens_.size());
  for (size_t i = 0; i < m; ++i) {
    if (gens_[i] != o.gens_[i]) return lt(gens_[i], o.gens_[i]);
  }
  return gens_.size() < o.gens_.size();
}

std::string MonomialIdeal::str() const {
  std::string s;
  for (auto& g : gens_) {
    if (!s.empty()) s += ", ";
    s += g.str();
  }
  return s;
}

std::vector<Term> quotient_staircase(const MonomialIdeal& j, int t_max, const TermOrder& order) {
  std::vector<Term> out;
  for (auto& t : terms_up_to_degree(j.nvars(), t_max))
    if (!j.contains(t)) out.push_back(t);
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return order.greater(a, b); });
  return out;
}

HilbertTable hilbert_table(const MonomialIdeal& j, int t_max) {
  HilbertTable table;
  table.graded.assign(static_cast<size_t>(t_max) + 1, 0);
  for (auto& t : quotient_staircase(j, t_max)) ++table.graded[static_cast<size_t>(t.degree())];
  long acc = 0;
  for (long h : table.graded) table.cumulative.push_back(acc += h);
  if (t_max >= 1 && table.graded[static_cast<size_t>(t_max)] == 0) table.constant = acc;
  return table;
}

bool is_strongly_stable(const MonomialIdeal& j) {
  for (auto& g : j.generators()) {
    if (g.is_one()) continue;
    for (int i = 1; i <= j.nvars(); ++i) {
      if (!g.exp(i)) continue;
      for (int k = i + 1; k <= j.nvars(); ++k)
        if (!j.contains((g / Term::var(i, j.nvars())).times_var(k))) return false;
    }
  }
  return true;
}

bool is_stable(const MonomialIdeal& j) {
  for (auto& g : j.generators()) {
    if (g.is_one()) continue;
    int i = g.min_var();
    for (int k = i + 1; k <= j.nvars(); ++k)
      if (!j.contains((g / Term::var(i, j.nvars())).times_var(k))) return false;
  }
  return true;
}

PommaretBasis pommaret_basis(const MonomialIdeal& j) {
  PommaretBasis basis;
  if (j.is_zero_ideal()) return basis;
  int cap = j.max_generator_degree() + j.nvars();
  std::vector<Term> work = j.generators();
  // completion: add non-multiplicative prolongations that have no divisor in
  // the current set with multiplicative quotient
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Term> fresh;
    for (auto& e : work) {
      for (int k = (e.is_one() ? j.nvars() + 1 : e.min_var() + 1); k <= j.nvars(); ++k) {
        Term p = e.times_var(k);
        bool covered = false;
        for (auto& h : work)
          if (h.divides(p)) {
            Term q = p / h;
            if (q.is_one() || q.max_var() <= h.min_var()) {
              covered = true;
              break;
            }
          }
        if (!covered) {
          if (p.degree() > cap) throw std::domain_error("not quasi-stable");
          fresh.push_back(p);
        }
      }
    }
    if (!fresh.empty()) {
      std::sort(fresh.begin(), fresh.end(), LexDesc());
      fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
      for (auto& p : fresh)
        if (std::find(work.begin(), work.end(), p) == work.end()) {
          work.push_back(p);
          grew = true;
        }
    }
  }
  std::sort(work.begin(), work.end(), LexDesc());
  basis.elements = std::move(work);
  return basis;
}

bool is_quasi_stable(const MonomialIdeal& j) {
  try {
    pommaret_basis(j);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

MonomialIdeal saturation(const MonomialIdeal& j) {
  if (j.is_zero_ideal()) return j;
  if (is_quasi_stable(j)) {
    // colon by x_1^infty: strip all x_1 powers off the generators
    std::vector<Term> gens;
    for (auto& g : j.generators()) {
      Term s = g;
      s.set_exp(1, 0);
      gens.push_back(s);
    }
    return MonomialIdeal(j.nvars(), std::move(gens));
  }
  // generic path: iterate I -> I : m until stable, degree-bounded per round
  MonomialIdeal cur = j;
  for (;;) {
    int cap = cur.max_generator_degree();
    std::vector<Term> gens = cur.generators();
    bool grew = false;
    for (auto& t : terms_up_to_degree(cur.nvars(), cap)) {
      if (cur.contains(t)) continue;
      bool all_in = true;
      for (int k = 1; k <= cur.nvars() && all_in; ++k)
        if (!cur.contains(t.times_var(k))) all_in = false;
      if (all_in) {
        gens.push_back(t);
        grew = true;
      }
    }
    if (!grew) return cur;
    cur = MonomialIdeal(cur.nvars(), std::move(gens));
  }
}

int satiety(const MonomialIdeal& j) {
  MonomialIdeal sat = saturation(j);
  if (sat == j) return 0;
  // graded pieces of j and sat(j) agree from the satiety on; for quasi-stable
  // ideals the satiety is bounded by the Pommaret completion degree, and
  // max-degree + nvars covers that window
  int bound = std::max(j.max_generator_degree(), sat.max_generator_degree()) + j.nvars();
  int last_diff = 0;
  for (int d = 0; d <= bound; ++d)
    for (auto& m : terms_of_degree(j.nvars(), d))
      if (j.contains(m) != sat.contains(m)) {
        last_diff = d;
        break;
      }
  return last_diff + 1;
}

}  // namespace mkb
