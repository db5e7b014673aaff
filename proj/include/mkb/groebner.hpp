#ifndef MKB_GROEBNER_HPP
#define MKB_GROEBNER_HPP

#include <cstdint>
#include <vector>

#include "mkb/monideal.hpp"
#include "mkb/poly.hpp"

namespace mkb {

struct GroebnerBasis {
  TermOrder order;
  std::vector<QPoly> elements;  // monic, interreduced, sorted by leading term desc
  bool reduced = true;
};

// leading term w.r.t. an arbitrary order (storage is lex-sorted)
const QPoly::Entry& leading_entry(const QPoly& f, const TermOrder& order);

// full normal form modulo a set of monic polynomials
QPoly gb_normal_form(QPoly g, const std::vector<QPoly>& basis, const TermOrder& order,
                     long step_cap = 2'000'000);

// Buchberger with normal pair selection and Gebauer-Moeller pruning;
// returns the unique reduced basis.
GroebnerBasis buchberger(const std::vector<QPoly>& gens, const TermOrder& order,
                         long pair_cap = 5'000'000);

MonomialIdeal initial_ideal(const GroebnerBasis& gb);

// polynomial after the linear substitution x_i -> sum_j A[i-1][j-1] x_j
QPoly apply_linear_change(const QPoly& f, const std::vector<std::vector<long>>& a);

// Probabilistic generic initial ideal: `trials` independent random invertible
// changes of coordinates (entries in [-50,50], seeded); all trials must agree
// or the computation reports "inconclusive".
MonomialIdeal gin_probabilistic(const std::vector<QPoly>& gens, const TermOrder& order,
                                std::uint64_t seed, int trials);

}  // namespace mkb

#endif
