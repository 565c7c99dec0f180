#pragma once

#include <optional>
#include <vector>

#include "logtr/scalar.hpp"

namespace logtr {

// Dense univariate polynomial over Scalar, ascending coefficients, trimmed.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Scalar c) : c_{std::move(c)} { trim(); }
  explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly x();                                  // the variable
  static Poly monomial(const Scalar& c, int deg);   // c * z^deg
  static Poly from_longs(std::vector<long> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Scalar& operator[](int k) const;
  const std::vector<Scalar>& coeffs() const { return c_; }
  const Scalar& leading() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Scalar& s) const;
  Poly pow(int e) const;

  // Euclidean division (Scalar is a field)
  void divmod(const Poly& d, Poly& q, Poly& r) const;
  Poly operator/(const Poly& d) const;  // exact division, throws on remainder
  static Poly gcd(Poly a, Poly b);      // monic gcd

  Poly derivative() const;
  Scalar eval(const Scalar& z) const;
  Poly monic() const;
  Poly compose_linear(const Scalar& a, const Scalar& b) const;  // p(a*z + b)
  Poly reversed(int upto_deg) const;  // z^d * p(1/z), d = max(degree, upto_deg)

  // divide out (z - r)^k exactly; throws if r is not a root of multiplicity >= k
  Poly deflate(const Scalar& r, int k) const;
  int root_multiplicity(const Scalar& r) const;

  bool operator==(const Poly& o) const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

struct RootData {
  std::vector<std::pair<Scalar, int>> roots;  // (root, multiplicity)
  Poly unsplit;  // nonconstant factor with no root found in the field (or empty)
};

// Find roots in the active scalar field: verified hints first, then linear /
// quadratic closed forms and, for plain rational coefficients, the rational
// root theorem. Float mode uses Durand-Kerner on the deflated polynomial.
RootData find_roots(const Poly& p, const std::vector<Scalar>& hints = {});

// exact square root in the field if one exists (plain Gaussian rationals only)
std::optional<Scalar> exact_sqrt(const Scalar& s);

}  // namespace logtr
