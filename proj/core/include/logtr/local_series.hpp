#pragma once

#include <map>

#include "logtr/ratfun.hpp"

namespace logtr {

// Truncated Laurent series in a local coordinate t. Coefficients with
// exponent <= trunc() are known; beyond that the series is unknown, not zero.
class LSeries {
 public:
  LSeries() : trunc_(-1) {}
  explicit LSeries(int trunc) : trunc_(trunc) {}
  LSeries(const Scalar& c, int trunc);  // constant series

  int trunc() const { return trunc_; }
  bool known_zero() const { return c_.empty(); }
  // lowest stored exponent, or trunc()+1 if no terms are known
  int ord() const { return c_.empty() ? trunc_ + 1 : c_.begin()->first; }

  const Scalar& coeff(int k) const;  // throws past truncation
  void set(int k, const Scalar& v);
  const std::map<int, Scalar>& terms() const { return c_; }

  LSeries operator-() const;
  LSeries operator+(const LSeries& o) const;
  LSeries operator-(const LSeries& o) const;
  LSeries operator*(const LSeries& o) const;
  LSeries operator*(const Scalar& s) const;
  LSeries& operator+=(const LSeries& o) { return *this = *this + o; }

  LSeries inverse() const;                   // exact leading coefficient
  LSeries pow(long e) const;
  LSeries shift(int k) const;                // multiply by t^k
  LSeries truncated(int new_trunc) const;
  LSeries derivative() const;

  // compose with g, ord(g) >= 1; *this must be a power series (ord >= 0)
  LSeries compose(const LSeries& g) const;

  // functional inverse for ord == 1 series with invertible linear coefficient
  LSeries reversion() const;

  // sqrt of a series with leading coefficient exactly 1 at exponent 0
  LSeries sqrt_one() const;

  Scalar residue() const;

  bool operator==(const LSeries& o) const;

  static LSeries of(const RatFun& f, const Scalar& a, int trunc);       // expand at z=a
  static LSeries of_at_infinity(const RatFun& f, int trunc);            // in w = 1/z

 private:
  void clean();
  std::map<int, Scalar> c_;
  int trunc_;
};

}  // namespace logtr
