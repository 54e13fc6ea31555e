#include "aaj/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace aaj {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("int64 overflow in addition");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("int64 overflow in multiplication");
  return r;
}

}  // namespace checked

const char* unit_name(Unit u) {
  return u == Unit::QuarterA ? "QuarterA" : "HalfT";
}

Rational Rational::make(std::int64_t n, std::int64_t d) {
  if (d == 0) throw InternalError("zero denominator");
  if (d < 0) {
    n = checked::mul(n, -1);
    d = -d;
  }
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  return {n / (g == 0 ? 1 : g), d / (g == 0 ? 1 : g)};
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num)
                  : std::to_string(num) + "/" + std::to_string(den);
}

LaurentPoly::LaurentPoly(Unit unit, const TermMap& terms) : unit_(unit) {
  for (auto [k, c] : terms) add_term(k, c);
}

LaurentPoly LaurentPoly::monomial(Unit unit, Coeff c, Exponent k) {
  LaurentPoly p(unit);
  p.add_term(k, c);
  return p;
}

void LaurentPoly::add_term(Exponent k, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second = checked::add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw EmptyError("zero polynomial has no minimum exponent");
  return terms_.begin()->first;
}

Exponent LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw EmptyError("zero polynomial has no maximum exponent");
  return terms_.rbegin()->first;
}

Coeff LaurentPoly::coeff(Exponent k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? 0 : it->second;
}

static void require_same_unit(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.unit() != q.unit())
    throw UnitError(std::string("unit mismatch: ") + unit_name(p.unit()) +
                    " vs " + unit_name(q.unit()));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
  require_same_unit(*this, q);
  for (auto [k, c] : q.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
  require_same_unit(*this, q);
  for (auto [k, c] : q.terms_) add_term(k, checked::mul(c, -1));
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(unit_);
  for (auto [k, c] : terms_) r.terms_.emplace(k, checked::mul(c, -1));
  return r;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  require_same_unit(p, q);
  LaurentPoly r(p.unit());
  for (auto [a, x] : p.terms_)
    for (auto [b, y] : q.terms_) r.add_term(checked::add(a, b), checked::mul(x, y));
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = constant(unit_, 1);
  LaurentPoly base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly monomial_shift(const LaurentPoly& p, Coeff c, Exponent k) {
  if (c == 0) throw InternalError("monomial_shift by zero coefficient");
  LaurentPoly::TermMap out;
  for (auto [e, x] : p.terms()) out.emplace(checked::add(e, k), checked::mul(x, c));
  return LaurentPoly(p.unit(), out);
}

Rational span(const LaurentPoly& p) {
  if (p.is_zero()) throw EmptyError("span of the zero polynomial");
  const std::int64_t width = p.max_exponent() - p.min_exponent();
  return Rational::make(width, p.unit() == Unit::HalfT ? 2 : 1);
}

CoeffVector to_coeff_vector(const LaurentPoly& p) {
  CoeffVector v;
  if (p.is_zero()) return v;
  v.min_exp = p.min_exponent();
  const auto width = static_cast<std::size_t>(p.max_exponent() - v.min_exp);
  v.coeffs.assign(width + 1, 0);
  for (auto [k, c] : p.terms()) v.coeffs[static_cast<std::size_t>(k - v.min_exp)] = c;
  return v;
}

LaurentPoly from_coeff_vector(Unit unit, const CoeffVector& v) {
  LaurentPoly::TermMap terms;
  for (std::size_t i = 0; i < v.coeffs.size(); ++i)
    if (v.coeffs[i] != 0)
      terms.emplace(checked::add(v.min_exp, static_cast<Exponent>(i)), v.coeffs[i]);
  return LaurentPoly(unit, terms);
}

namespace {

std::string exponent_text(Exponent k, Unit unit) {
  const Rational e = Rational::make(k, unit == Unit::HalfT ? 2 : 1);
  if (e.is_integer() && e.num > 0) return e.num == 1 ? "" : "^" + e.str();
  return "^(" + e.str() + ")";
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  const char var = p.unit() == Unit::HalfT ? 't' : 'A';
  std::ostringstream out;
  bool first = true;
  for (auto [k, c] : p.terms()) {
    const bool neg = c < 0;
    const std::uint64_t mag = neg ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (first)
      out << (neg ? "-" : "");
    else
      out << (neg ? " - " : " + ");
    first = false;
    if (k == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << var << exponent_text(k, p.unit());
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, Unit unit) : s_(s), unit_(unit) {}

  LaurentPoly run() {
    LaurentPoly result(unit_);
    skip_ws();
    if (at_end()) fail("empty polynomial text");
    if (s_.substr(pos_) == "0") return result;
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      first = false;
      result += term(sign);
    }
    return result;
  }

 private:
  LaurentPoly term(int sign) {
    Coeff c = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      c = integer();
      have_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        get();
        skip_ws();
      }
    }
    const char var = unit_ == Unit::HalfT ? 't' : 'A';
    Exponent stored = 0;
    if (!at_end() && peek() == var) {
      get();
      Rational e{1, 1};
      if (!at_end() && peek() == '^') {
        get();
        e = exponent();
      }
      if (unit_ == Unit::HalfT) {
        if (2 % e.den != 0) fail("t exponent must be a multiple of 1/2");
        stored = checked::mul(e.num, 2 / e.den);
      } else {
        if (e.den != 1) fail("A exponent must be an integer");
        stored = e.num;
      }
    } else if (!have_coeff) {
      fail(std::string("expected coefficient or variable '") + var + "'");
    }
    return LaurentPoly::monomial(unit_, checked::mul(c, sign), stored);
  }

  Rational exponent() {
    bool paren = false;
    if (!at_end() && peek() == '(') {
      get();
      paren = true;
    }
    int sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) sign = get() == '-' ? -1 : 1;
    std::int64_t num = integer();
    std::int64_t den = 1;
    if (!at_end() && peek() == '/') {
      get();
      den = integer();
      if (den == 0) fail("zero denominator in exponent");
    }
    if (paren) {
      if (at_end() || get() != ')') fail("missing ')' in exponent");
    }
    return Rational::make(sign * num, den);
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      v = checked::add(checked::mul(v, 10), get() - '0');
    if (pos_ == start) fail("expected integer");
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" +
                     std::string(s_) + "\"");
  }

  std::string_view s_;
  Unit unit_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, Unit unit) {
  return PolyParser(text, unit).run();
}

}  // namespace aaj
