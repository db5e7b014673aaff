#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mkb/linalg.hpp"

using namespace mkb;

TEST_CASE("rank basics") {
  SparseQMatrix m(3);
  m.add_row({{0, Rational(1)}, {1, Rational(2)}});
  m.add_row({{0, Rational(2)}, {1, Rational(4)}});  // dependent
  m.add_row({{2, Rational(5)}});
  CHECK(m.exact_rank() == 2);
  CHECK(m.rank_mod(1000003) == 2);

  SparseQMatrix empty(4);
  CHECK(empty.exact_rank() == 0);
}

TEST_CASE("rank with rational entries and cancellation") {
  SparseQMatrix m(2);
  m.add_row({{0, Rational(1, 3)}, {1, Rational(1, 6)}});
  m.add_row({{0, Rational(2)}, {1, Rational(1)}});  // same line
  CHECK(m.exact_rank() == 1);
  // duplicate columns within a row are summed
  SparseQMatrix s(2);
  s.add_row({{0, Rational(1)}, {0, Rational(-1)}, {1, Rational(1)}});
  CHECK(s.exact_rank() == 1);
}

TEST_CASE("sparse exact rank agrees with dense and modular ranks") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> val(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    size_t rows = 3 + rng() % 8, cols = 3 + rng() % 8;
    std::vector<std::vector<Rational>> dense(rows, std::vector<Rational>(cols, Rational(0)));
    SparseQMatrix sparse(static_cast<int>(cols));
    for (size_t i = 0; i < rows; ++i) {
      std::vector<std::pair<int, Rational>> row;
      for (size_t jcol = 0; jcol < cols; ++jcol) {
        if (rng() % 3 == 0) continue;
        Rational v(val(rng), 1 + static_cast<int>(rng() % 3));
        dense[i][jcol] = v;
        if (!is_zero(v)) row.emplace_back(static_cast<int>(jcol), v);
      }
      sparse.add_row(row);
    }
    long r = sparse.exact_rank();
    CHECK(r == dense_rank(dense));
    CHECK(r >= sparse.rank_mod(1000003));  // modular rank is a lower bound
    CHECK(r == sparse.rank_mod(2147483647));
  }
}

TEST_CASE("kernel basis") {
  // x + y + z = 0 has kernel dimension 2
  std::vector<std::vector<Rational>> m{{Rational(1), Rational(1), Rational(1)}};
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 2);
  for (auto& v : k) {
    Rational dot(0);
    for (size_t i = 0; i < 3; ++i) dot += m[0][i] * v[i];
    CHECK(is_zero(dot));
  }

  // invertible matrix: trivial kernel
  std::vector<std::vector<Rational>> id{{Rational(2), Rational(0)}, {Rational(1), Rational(1)}};
  CHECK(kernel_basis(id).empty());

  // kernel vectors always satisfy M v = 0, and count = cols - rank
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> val(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    size_t rows = 2 + rng() % 5, cols = 2 + rng() % 6;
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols, Rational(0)));
    for (auto& row : a)
      for (auto& x : row) x = Rational(val(rng));
    auto basis = kernel_basis(a);
    CHECK(static_cast<long>(basis.size()) == static_cast<long>(cols) - dense_rank(a));
    for (auto& v : basis)
      for (auto& row : a) {
        Rational dot(0);
        for (size_t i = 0; i < cols; ++i) dot += row[i] * v[i];
        CHECK(is_zero(dot));
      }
  }
}
