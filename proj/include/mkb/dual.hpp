#ifndef MKB_DUAL_HPP
#define MKB_DUAL_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "mkb/rational.hpp"

namespace mkb {

// sparse linear form over Q in tangent unknowns (indexed 0..m-1)
class LinForm {
 public:
  LinForm() = default;
  static LinForm unknown(std::uint32_t k, const Rational& c = 1) {
    LinForm f;
    if (!mkb::is_zero(c)) f.terms_.emplace_back(k, c);
    return f;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::pair<std::uint32_t, Rational>>& terms() const { return terms_; }

  friend LinForm operator+(const LinForm& a, const LinForm& b) { return merged(a, b, false); }
  friend LinForm operator-(const LinForm& a, const LinForm& b) { return merged(a, b, true); }
  LinForm operator-() const {
    LinForm r(*this);
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }
  LinForm times(const Rational& c) const {
    LinForm r;
    if (mkb::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (auto& [k, v] : terms_) r.terms_.emplace_back(k, v * c);
    return r;
  }

  bool operator==(const LinForm& o) const { return terms_ == o.terms_; }

 private:
  static LinForm merged(const LinForm& a, const LinForm& b, bool neg) {
    LinForm r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      if (a.terms_[i].first == b.terms_[j].first) {
        Rational c = neg ? Rational(a.terms_[i].second - b.terms_[j].second)
                         : Rational(a.terms_[i].second + b.terms_[j].second);
        if (!mkb::is_zero(c)) r.terms_.emplace_back(a.terms_[i].first, c);
        ++i, ++j;
      } else if (a.terms_[i].first < b.terms_[j].first) {
        r.terms_.push_back(a.terms_[i++]);
      } else {
        r.terms_.emplace_back(b.terms_[j].first, neg ? Rational(-b.terms_[j].second) : b.terms_[j].second);
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j)
      r.terms_.emplace_back(b.terms_[j].first, neg ? Rational(-b.terms_[j].second) : b.terms_[j].second);
    return r;
  }

  std::vector<std::pair<std::uint32_t, Rational>> terms_;
};

// a + b*eps with eps^2 = 0; b is a linear form in the tangent unknowns.
// Ring, not a field; marked reduction never divides.
struct Dual {
  Rational a;
  LinForm b;

  Dual() : a(0) {}
  Dual(const Rational& a0) : a(a0) {}
  Dual(long a0) : a(a0) {}
  Dual(Rational a0, LinForm b0) : a(std::move(a0)), b(std::move(b0)) {}

  bool is_zero() const { return mkb::is_zero(a) && b.is_zero(); }

  friend Dual operator+(const Dual& x, const Dual& y) { return Dual(x.a + y.a, x.b + y.b); }
  friend Dual operator-(const Dual& x, const Dual& y) { return Dual(x.a - y.a, x.b - y.b); }
  Dual operator-() const { return Dual(-a, -b); }
  friend Dual operator*(const Dual& x, const Dual& y) {
    return Dual(x.a * y.a, y.b.times(x.a) + x.b.times(y.a));
  }
  Dual& operator+=(const Dual& y) { return *this = *this + y; }
  Dual& operator-=(const Dual& y) { return *this = *this - y; }

  bool operator==(const Dual& o) const { return a == o.a && b == o.b; }
};

inline bool is_zero(const Dual& d) { return d.is_zero(); }
inline bool is_zero(const LinForm& f) { return f.is_zero(); }

}  // namespace mkb

#endif
