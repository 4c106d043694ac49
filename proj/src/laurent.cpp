#include "armleg/laurent.hpp"

#include <sstream>

#include "armleg/checked.hpp"
#include "armleg/errors.hpp"

namespace armleg {

LaurentPoly LaurentPoly::monomial(std::int64_t exponent, std::int64_t coefficient) {
  LaurentPoly out;
  out.add_term(exponent, coefficient);
  return out;
}

LaurentPoly LaurentPoly::one_minus(std::int64_t exponent) {
  LaurentPoly out = monomial(0, 1);
  out.add_term(exponent, -1);
  return out;
}

std::int64_t LaurentPoly::coefficient(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t LaurentPoly::mass() const {
  std::int64_t total = 0;
  for (const auto& [e, c] : terms_) total = checked::add(total, c);
  return total;
}

void LaurentPoly::add_term(std::int64_t exponent, std::int64_t coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second = checked::add(it->second, coefficient);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(checked::sub(0, e), c);
  return out;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(checked::add(e, k), c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, checked::sub(0, c));
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(checked::add(ea, eb), checked::mul(ca, cb));
  }
  return out;
}

LaurentPoly LaurentPoly::divided_by(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw ValidationError("division by the zero polynomial");
  LaurentPoly quotient;
  if (is_zero()) return quotient;

  // Long division from the top. Any exact quotient has lowest exponent
  // min(dividend) - min(divisor); needing a lower term means inexact.
  const std::int64_t lowest_allowed = min_exponent() - divisor.min_exponent();
  const std::int64_t lead_exp = divisor.max_exponent();
  const std::int64_t lead = divisor.terms_.rbegin()->second;
  LaurentPoly rest = *this;
  while (!rest.is_zero()) {
    const std::int64_t e = rest.max_exponent() - lead_exp;
    const std::int64_t c = rest.terms_.rbegin()->second;
    if (e < lowest_allowed || c % lead != 0) {
      throw NonExactDivision("(" + to_string() + ") is not divisible by (" + divisor.to_string() + ")");
    }
    LaurentPoly step = monomial(e, c / lead);
    rest -= step * divisor;
    quotient += step;
  }
  return quotient;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << "t";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

}  // namespace armleg
