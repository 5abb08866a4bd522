#pragma once

#include <map>

#include "qpdo/scalar.hpp"

namespace qpdo {

/// Element of R_m = C[u]/(u^{m+1}) with Scalar coefficients.
class RmValue {
 public:
  RmValue() : c_(1) {}
  explicit RmValue(int m) : c_(m + 1) {}
  RmValue(int m, Scalar constant) : c_(m + 1) { c_[0] = std::move(constant); }
  static RmValue one(int m) { return RmValue(m, Scalar::from_rat(Rat(1))); }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& coeff(int j) const { return c_.at(j); }
  void set_coeff(int j, Scalar v) { c_.at(j) = std::move(v); }

  bool is_zero() const;
  bool operator==(const RmValue& o) const { return c_ == o.c_; }
  bool operator!=(const RmValue& o) const { return !(*this == o); }

  RmValue operator+(const RmValue& o) const;
  RmValue operator-(const RmValue& o) const;
  RmValue operator*(const RmValue& o) const;
  RmValue operator*(const Scalar& s) const;
  RmValue operator-() const;
  RmValue& operator+=(const RmValue& o) { return *this = *this + o; }

  /// Substitute u -> -u (negate odd coefficients).
  RmValue u_flip() const;

  std::string str() const;

 private:
  void check(const RmValue& o) const {
    if (c_.size() != o.c_.size()) throw Error("R_m order mismatch");
  }
  std::vector<Scalar> c_;  // c_[j] multiplies u^j
};

/// Laurent polynomial over Scalars, used as the f in z^k f(T_q) E_{ij}.
using LaurentPoly = std::map<long, Scalar>;

/// Order-m jet of f(point * q^u): the u^j coefficient is
/// sum_n f_n point^n (n l)^j / j!.  Requires point != 0.
RmValue taylor_jet(const LaurentPoly& f, const Scalar& point, int m);

/// Jet of the single monomial w^n at the given point (value * q^{nu} jet).
RmValue monomial_jet(long n, const Scalar& value, int m);

}  // namespace qpdo
