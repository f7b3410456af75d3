#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "affweyl/ints.hpp"

namespace affweyl {

// Exact rational with int64 parts, always normalized (den > 0, gcd 1).
struct Rat {
  i64 num = 0;
  i64 den = 1;

  Rat() = default;
  Rat(i64 n) : num(n), den(1) {}
  Rat(i64 n, i64 d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i64 g = gcd_nonneg(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  Rat operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
  Rat operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
  Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
  Rat operator/(const Rat& o) const {
    if (o.num == 0) throw std::invalid_argument("Rat: division by zero");
    return Rat(num * o.den, den * o.num);
  }
  Rat operator-() const {
    Rat r;
    r.num = -num;
    r.den = den;
    return r;
  }
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const { return num * o.den < o.num * den; }
  bool operator<=(const Rat& o) const { return num * o.den <= o.num * den; }
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator>=(const Rat& o) const { return o <= *this; }

  // Serialized as "p/q", reduced, q >= 1.
  std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
  static Rat parse(const std::string& s);
};

using RatVec = std::vector<Rat>;

RatVec rat_vec(const IVec& v);
RatVec rvec_add(const RatVec& a, const RatVec& b);
RatVec rvec_sub(const RatVec& a, const RatVec& b);
RatVec rvec_scaled(const RatVec& a, const Rat& c);
Rat rdot(const RatVec& a, const IVec& b);
bool rvec_is_zero(const RatVec& a);
bool rvec_less(const RatVec& a, const RatVec& b);  // lexicographic

// Solve A x = b over Q, A given by columns. Returns nullopt if inconsistent;
// requires the columns to be linearly independent (unique solution on span).
std::optional<RatVec> solve_columns(const std::vector<IVec>& columns, const RatVec& b);

// Inverse of an integer matrix over Q; nullopt if singular.
std::optional<std::vector<RatVec>> rat_inverse(const IMat& m);

// Inverse of a unimodular integer matrix, exact; throws if not unimodular.
IMat inverse_unimodular(const IMat& m);

}  // namespace affweyl
