#include "hecke/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace hecke {

LaurentInt LaurentInt::unit_inverse() const {
  if (!is_unit()) throw std::logic_error("LaurentInt: inverse of a non-unit");
  auto [e, c] = *coeffs_.begin();
  return monomial(c, -e);
}

LaurentInt LaurentInt::operator-() const {
  LaurentInt r;
  for (auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& o) {
  for (auto& [e, c] : o.coeffs_) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& o) {
  *this += -o;
  return *this;
}

LaurentInt LaurentInt::operator*(const LaurentInt& o) const {
  LaurentInt r;
  for (auto& [e1, c1] : coeffs_)
    for (auto& [e2, c2] : o.coeffs_) {
      int e = e1 + e2;
      auto it = r.coeffs_.find(e);
      if (it == r.coeffs_.end()) {
        if (c1 * c2 != 0) r.coeffs_[e] = c1 * c2;
      } else {
        it->second += c1 * c2;
        if (it->second == 0) r.coeffs_.erase(it);
      }
    }
  return r;
}

std::string LaurentInt::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    auto [e, c] = *it;
    Coeff a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (e == 0) {
      out << a;
    } else {
      if (a != 1) out << a << "*";
      out << "v";
      if (e != 1) out << "^" << e;
    }
    first = false;
  }
  return out.str();
}

}  // namespace hecke
