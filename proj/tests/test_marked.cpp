#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mkb/fixtures.hpp"
#include "mkb/marked.hpp"
#include "mkb/parser.hpp"

using namespace mkb;

namespace {

MonomialIdeal jg7() { return MonomialIdeal::from_text(fixture_text("jg7"), 7); }
MonomialIdeal jg5() { return MonomialIdeal::from_text(fixture_text("jg5"), 5); }

MarkedSet<Rational> f32_set() {
  return MarkedSet<Rational>::from_polynomials(
      jg7(), 3, parse_rational_poly_list(fixture_text("f32_dim7"), 7));
}

MarkedSet<Rational> f17_set() {
  return MarkedSet<Rational>::from_polynomials(
      jg5(), 3, parse_rational_poly_list(fixture_text("f17_dim5"), 5));
}

MarkedSet<ParamPoly> gtau_set() {
  return MarkedSet<ParamPoly>::from_polynomials(jg7(), 3,
                                                parse_poly_list(fixture_text("gtau_dim7"), 7));
}

MarkedSet<Rational> monomial_set(const MonomialIdeal& j, int m) {
  std::vector<MarkedPoly<Rational>> elems;
  for (auto& h : pommaret_basis(j).elements) elems.push_back({h, QPoly(j.nvars())});
  return MarkedSet<Rational>(j, m, std::move(elems));
}

QPoly random_nf_input(std::mt19937_64& rng, int n, int maxdeg) {
  std::uniform_int_distribution<int> coef(-9, 9);
  auto all = terms_up_to_degree(n, maxdeg);
  std::vector<QPoly::Entry> entries;
  for (int i = 0; i < 6; ++i)
    entries.emplace_back(all[rng() % all.size()], Rational(coef(rng)));
  return QPoly::from_entries(n, std::move(entries));
}

}  // namespace

TEST_CASE("marked set construction enforces the invariants") {
  auto G = f32_set();
  CHECK(G.elements().size() == 32);
  // heads are exactly P(j_G) = B(j_G)
  for (size_t i = 0; i < 32; ++i) CHECK(G.elements()[i].head == jg7().generators()[i]);

  // missing element
  auto polys = parse_rational_poly_list(fixture_text("f32_dim7"), 7);
  polys.pop_back();
  CHECK_THROWS(MarkedSet<Rational>::from_polynomials(jg7(), 3, polys));

  // tail term inside the ideal
  std::vector<MarkedPoly<Rational>> elems;
  for (auto& h : pommaret_basis(jg7()).elements) elems.push_back({h, QPoly(7)});
  elems[0].tail = parse_rational_poly("x1*x7", 7);
  CHECK_THROWS(MarkedSet<Rational>(jg7(), 3, elems));
}

TEST_CASE("normal form: N-supported input is fixed") {
  auto G = f32_set();
  QPoly g = parse_rational_poly("3*x1^3 - 1/2*x3^2 + x7 - 5", 7);
  CHECK(normal_form(g, G) == g);
  CHECK(normal_form(QPoly(7), G).is_zero());
}

TEST_CASE("normal form: a head reduces to its tail in one step") {
  auto G = f32_set();
  const auto& f1 = G.element_with_head(parse_term("x7^2", 7));
  ReductionStats stats;
  QPoly nf = normal_form(QPoly(f1.head, Rational(1)), G, &stats);
  CHECK(nf == f1.tail);
  CHECK(stats.steps == 1);
}

TEST_CASE("normal form: x1 * f22 reduces to zero") {
  auto G = f32_set();
  QPoly f22 = parse_rational_poly("x1^2*x4 + x1^3", 7);
  CHECK(normal_form(f22.times(parse_term("x1", 7)), G).is_zero());
}

TEST_CASE("reduction cap raises a typed error") {
  auto G = f32_set();
  G.set_step_cap(0);
  CHECK_THROWS_AS(normal_form(parse_rational_poly("x7^2", 7), G), std::runtime_error);
}

TEST_CASE("marked basis certificates on the paper bases") {
  auto mono = monomial_set(jg7(), 3);
  CHECK(is_marked_basis(mono).verdict);

  auto cert7 = is_marked_basis(f32_set());
  CHECK(cert7.verdict);
  CHECK(cert7.prolongations == 135);

  auto cert5 = is_marked_basis(f17_set());
  CHECK(cert5.verdict);
  CHECK(cert5.prolongations == 48);
}

TEST_CASE("G_tau is a marked basis over Q[tau], and specializations commute") {
  auto G = gtau_set();
  CHECK(is_marked_basis(G).verdict);

  Sym tau = intern("tau");
  auto f32 = f32_set();
  for (long v : {0L, 1L, -1L, 5L}) {
    auto Gv = specialize(G, {{tau, Rational(v)}});
    CHECK(is_marked_basis(Gv).verdict);
    if (v == 0) {
      for (size_t i = 0; i < 32; ++i) CHECK(Gv.elements()[i].tail == f32.elements()[i].tail);
    }
  }
}

TEST_CASE("a perturbed coefficient breaks the basis property both ways") {
  auto polys = parse_rational_poly_list(fixture_text("f17_dim5"), 5);
  polys[0] += parse_rational_poly("x2*x3", 5);  // perturb f1's tail
  auto G = MarkedSet<Rational>::from_polynomials(jg5(), 3, polys);
  CHECK(!is_marked_basis(G).verdict);
  CHECK(!membership_decomposition(polys, jg5(), 3, 5));
}

TEST_CASE("membership decomposition (Lemma-style oracle)") {
  MonomialIdeal j7 = jg7();
  std::vector<QPoly> gens;
  for (auto& g : j7.generators()) gens.emplace_back(g, Rational(1));
  CHECK(membership_decomposition(gens, j7, 3, 4));

  auto f17 = parse_rational_poly_list(fixture_text("f17_dim5"), 5);
  CHECK(membership_decomposition(f17, jg5(), 3, 5));

  // x1^2 - x2 vs (x2, x1^3): x1^2-x2 alone spans too little in high degree
  MonomialIdeal j = MonomialIdeal::from_text("x2, x1^3", 2);
  std::vector<QPoly> small{parse_rational_poly("x1^2 - x2", 2)};
  CHECK(!membership_decomposition(small, j, 1, 4));
}

TEST_CASE("is_marked_basis agrees with membership_decomposition on random dim-5 sets") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> coef(-4, 4);
  auto stairs = quotient_staircase(jg5(), 3);
  for (int trial = 0; trial < 10; ++trial) {
    // random marked set over j_G(dim5): random N-supported tails
    std::vector<MarkedPoly<Rational>> elems;
    for (auto& h : pommaret_basis(jg5()).elements) {
      std::vector<QPoly::Entry> entries;
      for (auto& u : stairs)
        if (rng() % 3 == 0) entries.emplace_back(u, Rational(coef(rng)));
      elems.push_back({h, QPoly::from_entries(5, std::move(entries))});
    }
    MarkedSet<Rational> G(jg5(), 3, elems);
    bool basis = is_marked_basis(G).verdict;
    CHECK(basis == membership_decomposition(G.polynomials(), jg5(), 3, 5));
  }
}

TEST_CASE("normal form is idempotent and linear; trace replays") {
  auto G = f32_set();
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<int> scal(-7, 7);
  for (int trial = 0; trial < 200; ++trial) {
    QPoly g = random_nf_input(rng, 7, 4);
    QPoly h = random_nf_input(rng, 7, 4);
    QPoly nfg = normal_form(g, G);
    CHECK(normal_form(nfg, G) == nfg);
    Rational a(scal(rng)), b(scal(rng));
    CHECK(normal_form(g.times(a) + h.times(b), G) == nfg.times(a) + normal_form(h, G).times(b));

    // g - NF(g) is exactly the sum of the reduction multiples
    std::vector<QPoly> trace;
    QPoly nf2 = normal_form(g, G, nullptr, &trace);
    QPoly sum(7);
    for (auto& m : trace) sum += m;
    CHECK(g - nf2 == sum);
  }
}
