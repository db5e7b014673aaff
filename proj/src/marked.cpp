#include "mkb/marked.hpp"

#include "mkb/linalg.hpp"

namespace mkb {

bool membership_decomposition(const std::vector<QPoly>& gens, const MonomialIdeal& j, int m,
                              int t_max) {
  if (t_max < m) throw std::invalid_argument("t_max below m");
  int n = j.nvars();
  for (int t = m; t <= t_max; ++t) {
    auto all = terms_up_to_degree(n, t);
    std::unordered_map<Term, int, TermHash> col;
    for (auto& u : all) col.emplace(u, static_cast<int>(col.size()));
    long dim = static_cast<long>(all.size());

    long staircase = 0;
    for (auto& u : all)
      if (!j.contains(u)) ++staircase;

    SparseQMatrix w(static_cast<int>(dim));
    SparseQMatrix wn(static_cast<int>(dim));
    for (auto& f : gens) {
      if (f.is_zero()) continue;
      int d = f.degree();
      if (d > t) continue;
      for (auto& eta : terms_up_to_degree(n, t - d)) {
        QPoly g = f.times(eta);
        std::vector<std::pair<int, Rational>> row;
        for (auto& [u, c] : g.terms()) row.emplace_back(col.at(u), c);
        w.add_row(row);
        wn.add_row(std::move(row));
      }
    }
    for (auto& u : all)
      if (!j.contains(u)) wn.add_row({{col.at(u), Rational(1)}});

    long rank_w = w.exact_rank();
    // direct sum: the generator span has full complementary dimension and
    // meets the staircase span trivially
    if (rank_w != dim - staircase) return false;
    if (wn.exact_rank() != dim) return false;
  }
  return true;
}

MarkedSet<Rational> specialize(const MarkedSet<ParamPoly>& G,
                               const std::unordered_map<Sym, Rational>& assignment) {
  std::vector<MarkedPoly<Rational>> elems;
  for (auto& e : G.elements()) elems.push_back({e.head, specialize(e.tail, assignment)});
  return MarkedSet<Rational>(G.ideal(), G.m(), std::move(elems));
}

}  // namespace mkb
