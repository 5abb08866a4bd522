#include "qpdo/rm.hpp"

#include <sstream>

namespace qpdo {

bool RmValue::is_zero() const {
  for (const auto& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

RmValue RmValue::operator+(const RmValue& o) const {
  check(o);
  RmValue r(order());
  for (int j = 0; j <= order(); ++j) r.c_[j] = c_[j] + o.c_[j];
  return r;
}

RmValue RmValue::operator-(const RmValue& o) const {
  check(o);
  RmValue r(order());
  for (int j = 0; j <= order(); ++j) r.c_[j] = c_[j] - o.c_[j];
  return r;
}

RmValue RmValue::operator*(const RmValue& o) const {
  check(o);
  RmValue r(order());
  for (int i = 0; i <= order(); ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; i + j <= order(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return r;
}

RmValue RmValue::operator*(const Scalar& s) const {
  RmValue r(order());
  for (int j = 0; j <= order(); ++j) r.c_[j] = c_[j] * s;
  return r;
}

RmValue RmValue::operator-() const {
  RmValue r(order());
  for (int j = 0; j <= order(); ++j) r.c_[j] = -c_[j];
  return r;
}

RmValue RmValue::u_flip() const {
  RmValue r(order());
  for (int j = 0; j <= order(); ++j) r.c_[j] = (j % 2 == 0) ? c_[j] : -c_[j];
  return r;
}

std::string RmValue::str() const {
  std::ostringstream out;
  bool first = true;
  for (int j = 0; j <= order(); ++j) {
    if (c_[j].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << c_[j].str() << ")";
    if (j > 0) out << "*u^" << j;
  }
  if (first) out << "0";
  return out.str();
}

RmValue monomial_jet(long n, const Scalar& value, int m) {
  RmValue r(m);
  r.set_coeff(0, value);
  Rat fact(1), npow(1);
  for (int j = 1; j <= m; ++j) {
    fact *= j;
    npow *= n;
    r.set_coeff(j, value * Scalar::ell(j) * Scalar::from_rat(npow / fact));
  }
  return r;
}

RmValue taylor_jet(const LaurentPoly& f, const Scalar& point, int m) {
  if (point.is_zero()) throw Error("taylor_jet at zero point");
  RmValue r(m);
  for (const auto& [n, fn] : f) {
    if (fn.is_zero()) continue;
    r += monomial_jet(n, fn * point.pow(n), m);
  }
  return r;
}

}  // namespace qpdo
