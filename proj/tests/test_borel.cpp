#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mkb/borel.hpp"
#include "mkb/fixtures.hpp"
#include "mkb/parser.hpp"

using namespace mkb;

namespace {

MonomialIdeal fixture_ideal(const char* name, int n) {
  return MonomialIdeal::from_text(fixture_text(name), n);
}

// independent oracle: breadth-first growth of order ideals with set-keyed
// deduplication (no canonical-chain argument involved)
std::set<std::set<Term>> oracle_borel_order_ideals(int n, long d) {
  std::set<std::set<Term>> layer{{Term::one(n)}};
  for (long size = 1; size < d; ++size) {
    std::set<std::set<Term>> next;
    for (auto& N : layer) {
      for (auto& u : N)
        for (int k = 1; k <= n; ++k) {
          Term t = u.times_var(k);
          if (N.count(t)) continue;
          bool ok = true;
          for (int i = 1; i <= n && ok; ++i)
            if (t.exp(i) && !N.count(t / Term::var(i, n))) ok = false;
          for (int jv = 2; jv <= n && ok; ++jv) {
            if (!t.exp(jv)) continue;
            for (int i = 1; i < jv && ok; ++i)
              if (!N.count((t / Term::var(jv, n)).times_var(i))) ok = false;
          }
          if (ok) {
            auto M = N;
            M.insert(t);
            next.insert(std::move(M));
          }
        }
    }
    layer = std::move(next);
  }
  return layer;
}

// materialized >>-comparison at r = d: build both sorted degree-r bases of
// J_{>=r} in S and compare slot by slot
GgResult oracle_gg(const MonomialIdeal& j, const MonomialIdeal& h, int r) {
  auto basis = [&](const MonomialIdeal& I) {
    std::vector<Term> b;
    for (auto& t : terms_up_to_degree(I.nvars(), r))
      if (I.contains(t)) b.push_back(t);  // stands for x0^(r-|t|) * t
    std::sort(b.begin(), b.end(), LexDesc());
    return b;
  };
  auto bj = basis(j), bh = basis(h);
  REQUIRE(bj.size() == bh.size());
  bool jge = true, hge = true;
  LexDesc gt;
  for (size_t i = 0; i < bj.size(); ++i) {
    if (gt(bh[i], bj[i])) jge = false;
    if (gt(bj[i], bh[i])) hge = false;
  }
  if (jge && hge) return GgResult::Equal;
  if (jge) return GgResult::Greater;
  if (hge) return GgResult::Less;
  return GgResult::Incomparable;
}

}  // namespace

TEST_CASE("enumeration matches the exhaustive oracle for n <= 3, d <= 7") {
  for (int n = 1; n <= 3; ++n)
    for (long d = 1; d <= 7; ++d) {
      auto list = enumerate_strongly_stable(n, d);
      auto oracle = oracle_borel_order_ideals(n, d);
      CHECK(list.strata.size() == oracle.size());
      // each enumerated ideal is strongly stable with the right colength
      for (auto& s : list.strata) {
        CHECK(is_strongly_stable(s.ideal));
        long colength = 0;
        for (long h : s.graded_hf) colength += h;
        CHECK(colength == d);
      }
      // pairwise distinct
      std::set<std::string> keys;
      for (auto& s : list.strata) keys.insert(s.ideal.str());
      CHECK(keys.size() == list.strata.size());
    }
}

TEST_CASE("enumeration: the two ideals for (n=2, d=3)") {
  auto list = enumerate_strongly_stable(2, 3);
  REQUIRE(list.strata.size() == 2);
  MonomialIdeal a = MonomialIdeal::from_text("x2, x1^3", 2);
  MonomialIdeal b = MonomialIdeal::from_text("x2^2, x1*x2, x1^2", 2);
  CHECK(((list.strata[0].ideal == a && list.strata[1].ideal == b) ||
         (list.strata[0].ideal == b && list.strata[1].ideal == a)));
}

TEST_CASE("enumeration cap raises a typed error with partial count") {
  CHECK_THROWS_AS(enumerate_strongly_stable(7, 16, 10), EnumerationCapError);
}

TEST_CASE("strata counts: 92 for (5,12)") {
  auto list = enumerate_strongly_stable(5, 12);
  CHECK(list.strata.size() == 92);
  MonomialIdeal jg5 = fixture_ideal("jg5", 5);
  bool found = false;
  for (auto& s : list.strata)
    if (s.ideal == jg5) {
      found = true;
      CHECK(s.graded_hf == std::vector<long>{1, 5, 5, 1});
    }
  CHECK(found);
}

TEST_CASE("gg order: reflexivity-adjacent cases and the oracle") {
  MonomialIdeal a = MonomialIdeal::from_text("x2, x1^3", 2);
  MonomialIdeal b = MonomialIdeal::from_text("x2^2, x1*x2, x1^2", 2);
  CHECK(gg_compare(a, a) == GgResult::Equal);
  GgResult ab = gg_compare(a, b);
  CHECK(ab == oracle_gg(a, b, 3));
  CHECK(gg_compare(b, a) == oracle_gg(b, a, 3));

  // mismatched Hilbert data is an error
  CHECK_THROWS(gg_compare(a, MonomialIdeal::from_text("x2, x1^4", 2)));
  // non-Artinian input is an error
  CHECK_THROWS(gg_compare(MonomialIdeal::from_text("x2", 2), a));
}

TEST_CASE("gg order is a partial order on small strata; streaming = oracle") {
  for (auto [n, d] : {std::pair{2, 4}, {3, 5}, {3, 6}}) {
    auto list = enumerate_strongly_stable(n, d);
    std::vector<MonomialIdeal> ideals;
    for (auto& s : list.strata) ideals.push_back(s.ideal);
    for (auto& x : ideals)
      for (auto& y : ideals) {
        GgResult r = gg_compare(x, y);
        CHECK(r == oracle_gg(x, y, static_cast<int>(d)));
        // antisymmetry
        GgResult rr = gg_compare(y, x);
        if (r == GgResult::Greater) CHECK(rr == GgResult::Less);
        if (r == GgResult::Equal) CHECK(x == y);
        // transitivity
        for (auto& z : ideals)
          if (r == GgResult::Greater && gg_compare(y, z) == GgResult::Greater)
            CHECK(gg_compare(x, z) == GgResult::Greater);
      }
  }
}

TEST_CASE("gg maximum on the dim-5 (1,5,5,1) stratum is j_G") {
  auto list = enumerate_strongly_stable(5, 12);
  std::vector<MonomialIdeal> hf1551;
  for (auto& s : list.strata)
    if (s.graded_hf == std::vector<long>{1, 5, 5, 1}) hf1551.push_back(s.ideal);
  CHECK(hf1551.size() >= 2);
  auto mx = gg_maximum(hf1551);
  REQUIRE(mx.has_value());
  CHECK(*mx == fixture_ideal("jg5", 5));

  // singleton
  auto single = gg_maximum({*mx});
  CHECK(single.has_value());
  CHECK(*single == *mx);

  // a poset with no maximum
  MonomialIdeal a = MonomialIdeal::from_text("x2, x1^3", 2);
  MonomialIdeal b = MonomialIdeal::from_text("x2^2, x1*x2, x1^2", 2);
  if (gg_compare(a, b) == GgResult::Incomparable) CHECK(!gg_maximum({a, b}).has_value());
}

TEST_CASE("affine segment checks from the paper") {
  MonomialIdeal jg7 = fixture_ideal("jg7", 7);
  WeightVector w7{{11, 10, 9, 8, 6, 5, 4}};
  CHECK(w7.weight_of_var(7, 7) == 11);
  CHECK(w7.weight_of_var(1, 7) == 4);
  CHECK(is_affine_segment(jg7, 3, w7).verdict);

  MonomialIdeal jg5 = fixture_ideal("jg5", 5);
  WeightVector w5{{8, 7, 5, 4, 3}};
  CHECK(is_affine_segment(jg5, 3, w5).verdict);

  // all-ones weights fail with a witness
  WeightVector ones{{1, 1, 1, 1, 1, 1, 1}};
  auto rep = is_affine_segment(jg7, 3, ones);
  CHECK(!rep.verdict);
  REQUIRE(rep.counterexample.has_value());
  auto [alpha, gamma] = *rep.counterexample;
  CHECK(jg7.contains(alpha));
  CHECK(!jg7.contains(gamma));
  CHECK(ones.weight(gamma) >= ones.weight(alpha));

  // scaling invariance
  WeightVector w7x3{{33, 30, 27, 24, 18, 15, 12}};
  CHECK(is_affine_segment(jg7, 3, w7x3).verdict);
  for (int m = 1; m <= 4; ++m) {
    WeightVector scaled{{22, 20, 18, 16, 12, 10, 8}};
    CHECK(is_affine_segment(jg7, m, scaled).verdict == is_affine_segment(jg7, m, w7).verdict);
  }
}
