#include "mkb/groebner.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace mkb {

const QPoly::Entry& leading_entry(const QPoly& f, const TermOrder& order) {
  if (f.is_zero()) throw std::domain_error("leading term of zero polynomial");
  const QPoly::Entry* best = &f.terms().front();
  if (order.kind() != OrderKind::Lex)
    for (auto& e : f.terms())
      if (order.greater(e.first, best->first)) best = &e;
  return *best;
}

QPoly gb_normal_form(QPoly g, const std::vector<QPoly>& basis, const TermOrder& order,
                     long step_cap) {
  // cache leading data
  std::vector<const QPoly::Entry*> leads;
  leads.reserve(basis.size());
  for (auto& f : basis) leads.push_back(&leading_entry(f, order));

  long steps = 0;
  QPoly result(g.nvars());
  while (!g.is_zero()) {
    if (++steps > step_cap) throw std::runtime_error("normal form step cap exceeded");
    const auto& [t, c] = leading_entry(g, order);
    bool reduced_here = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (!leads[i]->first.divides(t)) continue;
      Rational scale = c / leads[i]->second;
      g -= basis[i].times(t / leads[i]->first, scale);
      reduced_here = true;
      break;
    }
    if (!reduced_here) {
      // move the order-leading term to the remainder
      result += QPoly(t, c);
      g -= QPoly(t, c);
    }
  }
  return result;
}

namespace {

Term lcm(const Term& a, const Term& b) {
  Term r = a;
  for (int k = 0; k <= a.nvars(); ++k) r.set_exp(k, std::max(a.exp(k), b.exp(k)));
  return r;
}

bool coprime(const Term& a, const Term& b) {
  for (int k = 0; k <= a.nvars(); ++k)
    if (a.exp(k) && b.exp(k)) return false;
  return true;
}

struct Pair {
  size_t i, j;
  Term l;  // lcm of the leading terms
};

}  // namespace

GroebnerBasis buchberger(const std::vector<QPoly>& gens, const TermOrder& order, long pair_cap) {
  std::vector<QPoly> basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(g.times(Rational(1) / leading_entry(g, order).second));
  if (basis.empty()) throw std::invalid_argument("buchberger: no nonzero generators");

  auto lt = [&](size_t i) -> const Term& { return leading_entry(basis[i], order).first; };

  std::vector<Pair> pairs;
  auto update_pairs = [&](size_t t) {
    // Gebauer-Moeller update for the new element t
    std::vector<Pair> fresh;
    for (size_t i = 0; i < t; ++i) fresh.push_back({i, t, lcm(lt(i), lt(t))});
    // drop old pairs whose lcm is a proper multiple of lcm(i,t) lcms
    std::vector<Pair> kept;
    for (auto& p : pairs) {
      Term l_it = lcm(lt(p.i), lt(t)), l_jt = lcm(lt(p.j), lt(t));
      if (lt(t).divides(p.l) && p.l != l_it && p.l != l_jt) continue;
      kept.push_back(p);
    }
    pairs = std::move(kept);
    // within the fresh pairs keep one representative per lcm; drop strict
    // multiples of another fresh lcm, and drop coprime pairs
    std::sort(fresh.begin(), fresh.end(), [](const Pair& a, const Pair& b) {
      if (a.l.degree() != b.l.degree()) return a.l.degree() < b.l.degree();
      return LexDesc()(b.l, a.l);
    });
    std::vector<Pair> chosen;
    for (auto& p : fresh) {
      bool skip = false;
      for (auto& q : chosen)
        if (q.l.divides(p.l)) {
          skip = true;
          break;
        }
      if (!skip && !coprime(lt(p.i), lt(p.j))) chosen.push_back(p);
    }
    for (auto& p : chosen) pairs.push_back(p);
  };

  for (size_t t = 1; t < basis.size(); ++t) update_pairs(t);

  long processed = 0;
  while (!pairs.empty()) {
    if (++processed > pair_cap) throw std::runtime_error("buchberger pair cap exceeded");
    // normal selection: minimal lcm in the order
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k)
      if (order.less(pairs[k].l, pairs[best].l)) best = k;
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));

    QPoly s = basis[p.i].times(p.l / lt(p.i)) - basis[p.j].times(p.l / lt(p.j));
    QPoly r = gb_normal_form(std::move(s), basis, order);
    if (r.is_zero()) continue;
    basis.push_back(r.times(Rational(1) / leading_entry(r, order).second));
    update_pairs(basis.size() - 1);
  }

  // interreduce: minimal leading terms, then tail-reduce each element
  std::vector<QPoly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t k = 0; k < basis.size() && !redundant; ++k)
      if (k != i && lt(k).divides(lt(i)) && !(lt(k) == lt(i) && k > i)) redundant = true;
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<QPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<QPoly> others;
    for (size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    QPoly r = others.empty() ? minimal[i] : gb_normal_form(minimal[i], others, order);
    reduced.push_back(r.times(Rational(1) / leading_entry(r, order).second));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const QPoly& a, const QPoly& b) {
    return order.greater(leading_entry(a, order).first, leading_entry(b, order).first);
  });

  GroebnerBasis gb;
  gb.order = order;
  gb.elements = std::move(reduced);
  return gb;
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
  std::vector<Term> lts;
  int n = gb.elements.empty() ? 0 : gb.elements[0].nvars();
  for (auto& f : gb.elements) lts.push_back(leading_entry(f, gb.order).first);
  return MonomialIdeal(n, std::move(lts));
}

QPoly apply_linear_change(const QPoly& f, const std::vector<std::vector<long>>& a) {
  int n = f.nvars();
  std::vector<QPoly> images;
  for (int i = 1; i <= n; ++i) {
    QPoly img(n);
    for (int j = 1; j <= n; ++j)
      img += QPoly(Term::var(j, n), Rational(a[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]));
    images.push_back(img);
  }
  QPoly out(n);
  for (auto& [t, c] : f.terms()) {
    QPoly prod(Term::one(n), c);
    for (int k = 1; k <= n; ++k)
      for (int e = 0; e < t.exp(k); ++e) prod = prod * images[static_cast<size_t>(k - 1)];
    out += prod;
  }
  return out;
}

namespace {

long det_mod_p(std::vector<std::vector<long>> m, long p) {
  size_t n = m.size();
  for (auto& row : m)
    for (auto& v : row) v = ((v % p) + p) % p;
  long det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = p - det;
    }
    det = det * m[c][c] % p;
    long inv = 1, base = m[c][c], e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (size_t r = c + 1; r < n; ++r) {
      long f = m[r][c] * inv % p;
      for (size_t cc = c; cc < n; ++cc) m[r][cc] = ((m[r][cc] - f * m[c][cc]) % p + p) % p;
    }
  }
  return det % p;
}

}  // namespace

MonomialIdeal gin_probabilistic(const std::vector<QPoly>& gens, const TermOrder& order,
                                std::uint64_t seed, int trials) {
  if (trials < 2) throw std::invalid_argument("gin: need at least 2 trials");
  if (gens.empty()) throw std::invalid_argument("gin: no generators");
  int n = gens[0].nvars();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-50, 50);

  std::optional<MonomialIdeal> common;
  for (int t = 0; t < trials; ++t) {
    std::vector<std::vector<long>> a;
    do {
      a.assign(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
      for (auto& row : a)
        for (auto& v : row) v = entry(rng);
    } while (det_mod_p(a, 2147483647) == 0);

    std::vector<QPoly> moved;
    for (auto& g : gens) moved.push_back(apply_linear_change(g, a));
    MonomialIdeal in_t = initial_ideal(buchberger(moved, order));
    if (!common) {
      common = in_t;
    } else if (*common != in_t) {
      throw std::runtime_error("gin: trials disagree (inconclusive)");
    }
  }
  return *common;
}

}  // namespace mkb
