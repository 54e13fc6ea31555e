#pragma once

// Sparse Laurent polynomials in one variable with exact int64 coefficients.
//
// Exponents are stored as integers in a declared unit:
//   Unit::QuarterA  stored k  ->  A^k
//   Unit::HalfT     stored k  ->  t^(k/2)
// Every coefficient and exponent operation is overflow checked and throws
// OverflowError instead of wrapping.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "aaj/errors.hpp"

namespace aaj {

enum class Unit { QuarterA, HalfT };

const char* unit_name(Unit u);

using Exponent = std::int64_t;
using Coeff = std::int64_t;

/// Reduced fraction with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t n, std::int64_t d);
  bool is_integer() const { return den == 1; }
  std::string str() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Coeff>;

  LaurentPoly() = default;
  explicit LaurentPoly(Unit unit) : unit_(unit) {}
  LaurentPoly(Unit unit, const TermMap& terms);

  static LaurentPoly monomial(Unit unit, Coeff c, Exponent k);
  static LaurentPoly constant(Unit unit, Coeff c) { return monomial(unit, c, 0); }

  Unit unit() const { return unit_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Extreme stored exponents; EmptyError on the zero polynomial.
  Exponent min_exponent() const;
  Exponent max_exponent() const;
  Coeff coeff(Exponent k) const;

  LaurentPoly pow(unsigned n) const;

  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator-=(const LaurentPoly& q);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(Exponent k, Coeff c);

  Unit unit_ = Unit::QuarterA;
  TermMap terms_;
};

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q);
/// Multiplies every term by c * x^k (k in stored units).
LaurentPoly monomial_shift(const LaurentPoly& p, Coeff c, Exponent k);

/// max - min exponent in natural units (A-powers or t-powers).
Rational span(const LaurentPoly& p);

struct CoeffVector {
  Exponent min_exp = 0;
  std::vector<Coeff> coeffs;  // one entry per stored unit, ends nonzero

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;
};

CoeffVector to_coeff_vector(const LaurentPoly& p);
/// Leading/trailing zeros in `v.coeffs` are tolerated and dropped.
LaurentPoly from_coeff_vector(Unit unit, const CoeffVector& v);

/// Canonical report text, increasing exponents, e.g.
/// "t^(-17/2) - 3t^(-15/2) + 4t^(-13/2)".
std::string to_string(const LaurentPoly& p);

/// Parses the canonical text (and any reordering of it). The variable must
/// be `A` for QuarterA and `t` for HalfT.
LaurentPoly parse_poly(std::string_view text, Unit unit);

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

}  // namespace aaj
