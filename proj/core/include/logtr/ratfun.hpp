#pragma once

#include <map>

#include "logtr/poly.hpp"

namespace logtr {

// Rational function num/den, gcd-reduced, denominator monic.
class RatFun {
 public:
  RatFun() : num_(), den_(Scalar(1)) {}
  RatFun(Scalar c) : num_(std::move(c)), den_(Scalar(1)) {}
  RatFun(Poly p) : num_(std::move(p)), den_(Scalar(1)) {}
  RatFun(Poly num, Poly den);
  static RatFun x() { return RatFun(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  Scalar constant_value() const;
  bool is_poly() const { return den_.degree() == 0; }

  RatFun operator-() const;
  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  RatFun operator*(const Scalar& s) const { return *this * RatFun(s); }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun inverse() const;
  RatFun pow(long e) const;

  RatFun derivative() const;
  Scalar eval(const Scalar& z) const;  // throws on pole
  bool is_regular_at(const Scalar& z) const;

  // order of vanishing at a finite point (negative = pole order)
  int order_at(const Scalar& a) const;
  // order of vanishing at infinity (deg den - deg num; conventions of 1-forms
  // are handled by callers)
  int order_at_infinity() const;
  // f(1/w) as a rational function of w
  RatFun at_inverse() const;
  // f((a z + b)/(c z + d))
  RatFun compose_mobius(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) const;
  // f(a z + b)
  RatFun compose_linear(const Scalar& a, const Scalar& b) const;

  bool operator==(const RatFun& o) const;
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void reduce();
  Poly num_, den_;
};

inline RatFun operator*(const Scalar& s, const RatFun& f) { return f * s; }

// Partial fractions: f = poly + sum_{p,k} c_{p,k}/(z-p)^k, where the
// denominator roots must all be discoverable in the field (hints allowed).
struct PartialFractions {
  Poly polynomial;
  std::map<Scalar, std::map<int, Scalar>> pole_parts;  // point -> order -> coeff
};
PartialFractions partial_fractions(const RatFun& f, const std::vector<Scalar>& hints = {});

}  // namespace logtr
