#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace armleg {

/// Sparse Laurent polynomial in t with exact int64 coefficients.
/// Zero coefficients are never stored, so equality is coefficient-wise.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, std::int64_t>;

  LaurentPoly() = default;

  /// c * t^e
  static LaurentPoly monomial(std::int64_t exponent, std::int64_t coefficient = 1);

  /// 1 - t^e (e > 0)
  static LaurentPoly one_minus(std::int64_t exponent);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(std::int64_t exponent) const;
  /// Requires !is_zero().
  std::int64_t min_exponent() const { return terms_.begin()->first; }
  std::int64_t max_exponent() const { return terms_.rbegin()->first; }

  /// Sum of all coefficients, i.e. the value at t = 1.
  std::int64_t mass() const;

  /// Adds c * t^e.
  void add_term(std::int64_t exponent, std::int64_t coefficient);

  /// t -> t^{-1}
  LaurentPoly reflected() const;
  /// Multiplication by t^k.
  LaurentPoly shifted(std::int64_t k) const;

  /// Exact quotient. Throws NonExactDivision when divisor does not divide
  /// this polynomial over the integers, ValidationError for a zero divisor.
  LaurentPoly divided_by(const LaurentPoly& divisor) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// e.g. "2 + 2t^2 - t^-3"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace armleg
