#include "forestmaps/upoly.hpp"

#include <stdexcept>

namespace fm {

UPoly::UPoly(long c) : c_{Rational(c)} { trim(); }
UPoly::UPoly(const Rational& c) : c_{c} { trim(); }
UPoly::UPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
UPoly::UPoly(std::initializer_list<long> c) {
  for (long v : c) c_.emplace_back(v);
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UPoly::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  Rational t;
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      r[i + j] += t;
    }
  }
  return UPoly(std::move(r));
}

UPoly& UPoly::operator*=(const UPoly& o) { return *this = *this * o; }

UPoly& UPoly::operator*=(const Rational& q) {
  if (sgn(q) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= q;
  return *this;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Rational UPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

UPoly UPoly::shift(const Rational& a) const {
  // Horner in the polynomial ring: p(u+a) = (...(c_n (u+a) + c_{n-1})(u+a) ...)
  UPoly r;
  UPoly lin(std::vector<Rational>{a, 1});
  for (size_t i = c_.size(); i-- > 0;) {
    r = r * lin;
    r += UPoly(c_[i]);
  }
  return r;
}

UPoly UPoly::div_u() const {
  if (c_.empty()) return {};
  if (sgn(c_[0]) != 0) throw std::domain_error("polynomial not divisible by u: " + pretty());
  return UPoly(std::vector<Rational>(c_.begin() + 1, c_.end()));
}

UPoly UPoly::derivative() const {
  std::vector<Rational> r;
  for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * static_cast<long>(i));
  return UPoly(std::move(r));
}

bool UPoly::nonnegative() const {
  for (const auto& x : c_)
    if (sgn(x) < 0) return false;
  return true;
}

std::string UPoly::pretty(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    Rational a = abs(c_[i]);
    bool neg = sgn(c_[i]) < 0;
    if (!out.empty()) out += neg ? "-" : "+";
    else if (neg) out += "-";
    bool unit = (a == 1);
    if (i == 0 || !unit) out += a.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace fm
