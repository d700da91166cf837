#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace hecke {

/// Laurent polynomial in one indeterminate v with integer coefficients.
///
/// The coefficient ring for the whole library.  Stored sparsely as
/// exponent -> coefficient; zero coefficients are never kept.  Units of
/// this ring are exactly the signed monomials +/- v^k.
class LaurentInt {
public:
  using Coeff = long long;

  LaurentInt() = default;
  LaurentInt(Coeff constant) {
    if (constant != 0) coeffs_[0] = constant;
  }

  /// c * v^exp
  static LaurentInt monomial(Coeff c, int exp) {
    LaurentInt p;
    if (c != 0) p.coeffs_[exp] = c;
    return p;
  }
  static LaurentInt v_power(int exp) { return monomial(1, exp); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
           coeffs_.begin()->second == 1;
  }

  /// True iff the value is +/- v^k.
  bool is_unit() const {
    if (coeffs_.size() != 1) return false;
    Coeff c = coeffs_.begin()->second;
    return c == 1 || c == -1;
  }

  /// Inverse of a unit; call only when is_unit() holds.
  LaurentInt unit_inverse() const;

  Coeff coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? 0 : it->second;
  }

  /// Value at v = 1 (the group-ring specialization).
  Coeff eval_at_one() const {
    Coeff s = 0;
    for (auto& [e, c] : coeffs_) s += c;
    return s;
  }

  LaurentInt operator-() const;
  LaurentInt& operator+=(const LaurentInt& o);
  LaurentInt& operator-=(const LaurentInt& o);
  LaurentInt operator+(const LaurentInt& o) const {
    LaurentInt r = *this;
    r += o;
    return r;
  }
  LaurentInt operator-(const LaurentInt& o) const {
    LaurentInt r = *this;
    r -= o;
    return r;
  }
  LaurentInt operator*(const LaurentInt& o) const;
  LaurentInt& operator*=(const LaurentInt& o) {
    *this = *this * o;
    return *this;
  }

  bool operator==(const LaurentInt& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentInt& o) const { return coeffs_ != o.coeffs_; }
  bool operator<(const LaurentInt& o) const { return coeffs_ < o.coeffs_; }

  const std::map<int, Coeff>& terms() const { return coeffs_; }

  /// Canonical rendering, highest exponent first: "v^4 - 2*v + 3*v^-1".
  std::string str() const;

private:
  std::map<int, Coeff> coeffs_;
};

inline LaurentInt operator*(LaurentInt::Coeff c, const LaurentInt& p) {
  return LaurentInt(c) * p;
}

}  // namespace hecke
