#include "mkb/term.hpp"

namespace mkb {

static void extend(std::vector<Term>& out, Term& cur, int k, int remaining) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur.set_exp(k, e);
    extend(out, cur, k - 1, remaining - e);
  }
  cur.set_exp(k, 0);
}

std::vector<Term> terms_up_to_degree(int nvars, int cap) {
  std::vector<Term> out;
  Term cur(nvars);
  extend(out, cur, nvars, cap);
  return out;
}

std::vector<Term> terms_of_degree(int nvars, int d) {
  std::vector<Term> out;
  for (auto& t : terms_up_to_degree(nvars, d))
    if (t.degree() == d) out.push_back(t);
  return out;
}

}  // namespace mkb
