#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "mkb/fixtures.hpp"
#include "mkb/monideal.hpp"
#include "mkb/parser.hpp"

using namespace mkb;

namespace {

MonomialIdeal fixture_ideal(const char* name, int n) {
  return MonomialIdeal::from_text(fixture_text(name), n);
}

MonomialIdeal mi(const std::string& text, int n) { return MonomialIdeal::from_text(text, n); }

// exhaustive Borel-move oracle on the full truncated ideal
bool oracle_strongly_stable(const MonomialIdeal& j, int cap) {
  for (auto& t : terms_up_to_degree(j.nvars(), cap)) {
    if (!j.contains(t)) continue;
    for (int i = 1; i <= j.nvars(); ++i) {
      if (!t.exp(i)) continue;
      for (int k = i + 1; k <= j.nvars(); ++k)
        if (!j.contains((t / Term::var(i, j.nvars())).times_var(k))) return false;
    }
  }
  return true;
}

MonomialIdeal random_ideal(std::mt19937_64& rng, int n, int maxdeg, int ngens) {
  std::uniform_int_distribution<int> expo(0, maxdeg);
  std::vector<Term> gens;
  for (int i = 0; i < ngens; ++i) {
    Term t(n);
    int budget = maxdeg;
    for (int k = 1; k <= n; ++k) {
      int e = expo(rng) % (budget + 1);
      t.set_exp(k, e);
      budget -= e;
    }
    if (!t.is_one()) gens.push_back(t);
  }
  return MonomialIdeal(n, gens);
}

// brute-force colon-by-maximal-ideal saturation oracle, degree-capped
MonomialIdeal oracle_saturation(const MonomialIdeal& j, int cap) {
  MonomialIdeal cur = j;
  for (;;) {
    std::vector<Term> gens = cur.generators();
    bool grew = false;
    for (auto& t : terms_up_to_degree(j.nvars(), cap)) {
      if (cur.contains(t)) continue;
      bool all_in = true;
      for (int k = 1; k <= j.nvars() && all_in; ++k)
        if (!cur.contains(t.times_var(k))) all_in = false;
      if (all_in) {
        gens.push_back(t);
        grew = true;
      }
    }
    if (!grew) return cur;
    cur = MonomialIdeal(j.nvars(), gens);
  }
}

}  // namespace

TEST_CASE("minimal basis normalization is idempotent") {
  MonomialIdeal j = mi("x1^2, x1^3, x2*x1^2, x2", 2);
  CHECK(j.generators().size() == 2);  // x2; x1^2
  MonomialIdeal again(2, j.generators());
  CHECK(again == j);
  CHECK(j.contains(parse_term("x1^2*x2^5", 2)));
  CHECK(!j.contains(parse_term("x1", 2)));
}

TEST_CASE("staircase of j_G (dim 7) in the tail enumeration order") {
  MonomialIdeal jg7 = fixture_ideal("jg7", 7);
  auto stairs = quotient_staircase(jg7, 3);
  REQUIRE(stairs.size() == 16);
  const char* expected[] = {"x1^3", "x3^2",   "x2*x3", "x2^2", "x1*x4", "x1*x3",
                            "x1*x2", "x1^2", "x7",    "x6",   "x5",    "x4",
                            "x3",    "x2",   "x1",    "1"};
  for (int i = 0; i < 16; ++i) CHECK(stairs[static_cast<size_t>(i)] == parse_term(expected[i], 7));
}

TEST_CASE("staircase: zero ideal and dim-5 case") {
  auto z = quotient_staircase(MonomialIdeal::zero(2), 1);
  CHECK(z.size() == 3);  // 1, x1, x2

  MonomialIdeal jg5 = fixture_ideal("jg5", 5);
  auto stairs = quotient_staircase(jg5, 3);
  CHECK(stairs.size() == 12);
  // brute-force divisibility oracle over all C(5+3,3)=56 terms
  size_t count = 0;
  auto all = terms_up_to_degree(5, 3);
  CHECK(all.size() == 56);
  for (auto& t : all)
    if (!jg5.contains(t)) ++count;
  CHECK(count == 12);
}

TEST_CASE("hilbert tables") {
  MonomialIdeal jg7 = fixture_ideal("jg7", 7);
  auto h7 = hilbert_table(jg7, 6);
  CHECK(h7.graded == std::vector<long>{1, 7, 7, 1, 0, 0, 0});
  CHECK(h7.cumulative == std::vector<long>{1, 8, 15, 16, 16, 16, 16});
  REQUIRE(h7.constant.has_value());
  CHECK(*h7.constant == 16);

  MonomialIdeal jg5 = fixture_ideal("jg5", 5);
  auto h5 = hilbert_table(jg5, 5);
  CHECK(h5.graded == std::vector<long>{1, 5, 5, 1, 0, 0});
  CHECK(*h5.constant == 12);

  MonomialIdeal jlex = fixture_ideal("jlex7", 7);
  auto hl = hilbert_table(jlex, 18);
  for (int t = 0; t <= 18; ++t)
    CHECK(hl.cumulative[static_cast<size_t>(t)] == std::min<long>(t + 1, 16));
}

TEST_CASE("hilbert table agrees with staircase counting on random ideals") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);  // 2..4
    MonomialIdeal j = random_ideal(rng, n, 4, 4);
    auto table = hilbert_table(j, 6);
    for (int t = 0; t <= 6; ++t) {
      long count = 0;
      for (auto& m : terms_of_degree(n, t))
        if (!j.contains(m)) ++count;
      CHECK(table.graded[static_cast<size_t>(t)] == count);
    }
  }
}

TEST_CASE("stability predicates") {
  MonomialIdeal jg7 = fixture_ideal("jg7", 7);
  CHECK(is_strongly_stable(jg7));
  CHECK(is_stable(jg7));
  CHECK(is_quasi_stable(jg7));

  MonomialIdeal jg5 = fixture_ideal("jg5", 5);
  CHECK(is_strongly_stable(jg5));

  CHECK(!is_strongly_stable(mi("x1^2", 2)));  // x1*x2 missing
  CHECK(!is_quasi_stable(mi("x1^2", 2)));

  CHECK(is_strongly_stable(mi("x2, x1^3", 2)));
  CHECK(oracle_strongly_stable(mi("x2, x1^3", 2), 6));

  // quasi-stable but not stable
  MonomialIdeal q = mi("x2^3, x1*x2", 2);
  CHECK(is_quasi_stable(q));
  CHECK(!is_stable(q));
  CHECK(!is_strongly_stable(q));

  // predicate matches the exhaustive oracle on random ideals
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 80; ++trial) {
    MonomialIdeal j = random_ideal(rng, 3, 3, 3);
    CHECK(is_strongly_stable(j) == oracle_strongly_stable(j, 6));
  }
}

TEST_CASE("pommaret basis: strongly stable means P = B") {
  MonomialIdeal jg7 = fixture_ideal("jg7", 7);
  auto p = pommaret_basis(jg7);
  CHECK(p.elements.size() == 32);
  CHECK(p.elements == jg7.generators());

  CHECK(pommaret_basis(MonomialIdeal::zero(3)).elements.empty());
}

TEST_CASE("pommaret basis: unique involutive divisor property") {
  for (auto spec : {std::pair{"x2^2", 2}, {"x2^3, x1*x2", 2}, {"x2, x1^3", 2},
                    {"x3^2, x2*x3, x1*x3, x2^2", 3}}) {
    MonomialIdeal j = mi(spec.first, spec.second);
    auto p = pommaret_basis(j);
    for (auto& t : terms_up_to_degree(j.nvars(), 6)) {
      if (!j.contains(t)) {
        CHECK(!p.divisor_of(t).has_value());
        continue;
      }
      int count = 0;
      for (auto& e : p.elements)
        if (e.divides(t)) {
          Term q = t / e;
          if (q.is_one() || q.max_var() <= e.min_var()) ++count;
        }
      CHECK(count == 1);  // exactly one Pommaret divisor
    }
  }

  // (x2^3, x1*x2) needs a completion element
  auto p = pommaret_basis(mi("x2^3, x1*x2", 2));
  CHECK(p.elements.size() == 3);

  CHECK_THROWS_WITH(pommaret_basis(mi("x1^2", 2)), "not quasi-stable");
}

TEST_CASE("saturation and satiety") {
  MonomialIdeal jg7 = fixture_ideal("jg7", 7);
  CHECK(saturation(jg7).is_unit_ideal());
  CHECK(satiety(jg7) == 4);  // j contains all of R_4 but not R_3

  MonomialIdeal jlex = fixture_ideal("jlex7", 7);
  CHECK(saturation(jlex).is_unit_ideal());
  CHECK(satiety(jlex) == 16);

  CHECK(saturation(mi("x2", 2)) == mi("x2", 2));
  CHECK(satiety(mi("x2", 2)) == 0);  // saturated input

  // fast path equals the brute-force colon oracle on quasi-stable ideals;
  // samples come from Borel-closing random ideals
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    MonomialIdeal j = random_ideal(rng, 3, 3, 3);
    if (j.is_zero_ideal()) continue;
    // strongly stable closure: saturate generators under raising moves
    std::vector<Term> gens = j.generators();
    for (size_t i = 0; i < gens.size(); ++i)
      for (int a = 1; a <= 3; ++a) {
        if (!gens[i].exp(a)) continue;
        for (int b = a + 1; b <= 3; ++b) {
          Term up = (gens[i] / Term::var(a, 3)).times_var(b);
          if (std::find(gens.begin(), gens.end(), up) == gens.end()) gens.push_back(up);
        }
      }
    MonomialIdeal closed(3, gens);
    REQUIRE(is_quasi_stable(closed));
    ++checked;
    CHECK(saturation(closed) == oracle_saturation(closed, closed.max_generator_degree() + 4));
  }
  CHECK(checked >= 50);
}
