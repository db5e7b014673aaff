#include "mkb/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mkb {

void SparseQMatrix::add_row(std::vector<std::pair<int, Rational>> row) {
  std::map<int, Rational> acc;
  mpz_class den_lcm(1);
  for (auto& [c, v] : row) {
    if (c < 0 || c >= ncols_) throw std::out_of_range("column index");
    if (!is_zero(v)) acc[c] += v;
  }
  for (auto& [c, v] : acc)
    if (!is_zero(v)) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  IntRow r;
  mpz_class content(0);
  for (auto& [c, v] : acc) {
    if (is_zero(v)) continue;
    mpz_class z = v.get_num() * (den_lcm / v.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    r.emplace_back(c, std::move(z));
  }
  if (r.empty()) return;  // zero rows carry no rank
  if (content > 1)
    for (auto& [c, z] : r) z /= content;
  rows_.push_back(std::move(r));
}

namespace {

void strip_content(std::vector<std::pair<int, mpz_class>>& row) {
  mpz_class g(0);
  for (auto& [c, z] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, z] : row) z /= g;
}

// r <- pivot_at_col(p)*r - coeff_at_col(r)*p, then content-strip
void eliminate(std::vector<std::pair<int, mpz_class>>& r, const std::vector<std::pair<int, mpz_class>>& p,
               int col, const mpz_class& r_c, const mpz_class& p_c) {
  std::vector<std::pair<int, mpz_class>> out;
  out.reserve(r.size() + p.size());
  size_t i = 0, j = 0;
  while (i < r.size() && j < p.size()) {
    if (r[i].first == p[j].first) {
      mpz_class v = p_c * r[i].second - r_c * p[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i, ++j;
    } else if (r[i].first < p[j].first) {
      out.emplace_back(r[i].first, p_c * r[i].second);
      ++i;
    } else {
      out.emplace_back(p[j].first, -r_c * p[j].second);
      ++j;
    }
  }
  for (; i < r.size(); ++i) out.emplace_back(r[i].first, p_c * r[i].second);
  for (; j < p.size(); ++j) out.emplace_back(p[j].first, -r_c * p[j].second);
  (void)col;
  strip_content(out);
  r = std::move(out);
}

const mpz_class* coeff_at(const std::vector<std::pair<int, mpz_class>>& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, int c) { return e.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

}  // namespace

long SparseQMatrix::exact_rank() const {
  std::vector<IntRow> rows = rows_;
  long rank = 0;
  std::vector<bool> used(rows.size(), false);
  for (;;) {
    // pivot choice: shortest unused row; within it, the column whose total
    // occupancy is smallest (Markowitz-flavoured fill control)
    size_t best = rows.size();
    for (size_t i = 0; i < rows.size(); ++i) {
      if (used[i] || rows[i].empty()) continue;
      if (best == rows.size() || rows[i].size() < rows[best].size()) best = i;
    }
    if (best == rows.size()) break;

    std::vector<long> colcount(static_cast<size_t>(ncols_), 0);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (used[i] || rows[i].empty()) continue;
      for (auto& [c, z] : rows[i]) ++colcount[static_cast<size_t>(c)];
    }
    int pcol = rows[best][0].first;
    for (auto& [c, z] : rows[best])
      if (colcount[static_cast<size_t>(c)] < colcount[static_cast<size_t>(pcol)]) pcol = c;

    used[best] = true;
    ++rank;
    const mpz_class p_c = *coeff_at(rows[best], pcol);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (used[i] || rows[i].empty()) continue;
      const mpz_class* r_c = coeff_at(rows[i], pcol);
      if (r_c) eliminate(rows[i], rows[best], pcol, *r_c, p_c);
    }
  }
  return rank;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

long SparseQMatrix::rank_mod(std::uint64_t p) const {
  std::vector<std::vector<std::uint64_t>> m;
  m.reserve(rows_.size());
  for (auto& row : rows_) {
    std::vector<std::uint64_t> dense(static_cast<size_t>(ncols_), 0);
    for (auto& [c, z] : row) {
      mpz_class r = z % static_cast<long>(p);
      if (r < 0) r += static_cast<long>(p);
      dense[static_cast<size_t>(c)] = r.get_ui();
    }
    m.push_back(std::move(dense));
  }
  long rank = 0;
  size_t rpos = 0;
  for (int col = 0; col < ncols_ && rpos < m.size(); ++col) {
    size_t piv = rpos;
    while (piv < m.size() && m[piv][static_cast<size_t>(col)] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rpos], m[piv]);
    std::uint64_t inv = powmod(m[rpos][static_cast<size_t>(col)], p - 2, p);
    for (size_t i = rpos + 1; i < m.size(); ++i) {
      std::uint64_t f = m[i][static_cast<size_t>(col)];
      if (!f) continue;
      std::uint64_t scale = mulmod(f, inv, p);
      for (int c = col; c < ncols_; ++c) {
        std::uint64_t sub = mulmod(scale, m[rpos][static_cast<size_t>(c)], p);
        std::uint64_t cur = m[i][static_cast<size_t>(c)];
        m[i][static_cast<size_t>(c)] = cur >= sub ? cur - sub : cur + p - sub;
      }
    }
    ++rpos;
    ++rank;
  }
  return rank;
}

long dense_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  size_t ncols = m[0].size();
  long rank = 0;
  size_t rpos = 0;
  for (size_t col = 0; col < ncols && rpos < m.size(); ++col) {
    size_t piv = rpos;
    while (piv < m.size() && is_zero(m[piv][col])) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rpos], m[piv]);
    for (size_t i = rpos + 1; i < m.size(); ++i) {
      if (is_zero(m[i][col])) continue;
      Rational f = m[i][col] / m[rpos][col];
      for (size_t c = col; c < ncols; ++c) m[i][c] -= f * m[rpos][c];
    }
    ++rpos;
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> kernel_basis(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return {};
  size_t ncols = m[0].size();
  std::vector<long> pivot_of_col(ncols, -1);
  size_t rpos = 0;
  for (size_t col = 0; col < ncols && rpos < m.size(); ++col) {
    size_t piv = rpos;
    while (piv < m.size() && is_zero(m[piv][col])) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rpos], m[piv]);
    Rational lead = m[rpos][col];
    for (size_t c = col; c < ncols; ++c) m[rpos][c] /= lead;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == rpos || is_zero(m[i][col])) continue;
      Rational f = m[i][col];
      for (size_t c = col; c < ncols; ++c) m[i][c] -= f * m[rpos][c];
    }
    pivot_of_col[col] = static_cast<long>(rpos);
    ++rpos;
  }
  std::vector<std::vector<Rational>> basis;
  for (size_t col = 0; col < ncols; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<Rational> v(ncols, Rational(0));
    v[col] = 1;
    for (size_t c = 0; c < ncols; ++c)
      if (pivot_of_col[c] >= 0) v[c] = -m[static_cast<size_t>(pivot_of_col[c])][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace mkb
