#pragma once

#include <map>

#include "logtr/local_series.hpp"
#include "logtr/ratfun.hpp"

namespace logtr {

// A constant built from exact data plus formal logarithms of scalars:
//   value = s + sum_k  c_k * log(kappa_k).
// log(-1) stands for i*pi (principal), which lets branch constants stay exact.
struct LoggedScalar {
  Scalar value;
  std::map<Scalar, Scalar> logs;  // kappa -> coefficient

  LoggedScalar() = default;
  LoggedScalar(Scalar v) : value(std::move(v)) {}

  bool is_zero() const;        // exact zero-test: log part checked via prod kappa^N = 1
  bool is_plain() const;       // no log terms survive
  LoggedScalar operator+(const LoggedScalar& o) const;
  LoggedScalar operator-(const LoggedScalar& o) const;
  LoggedScalar operator*(const Scalar& s) const;
  LoggedScalar operator-() const;
  bool operator==(const LoggedScalar& o) const { return (*this - o).is_zero(); }
  std::string str() const;
};

// Function of one variable z of the shape
//   f = R(z) + sum_a  L_a(z) * log(z - a) + sum_kappa  C_kappa(z) * log(kappa),
// with R, L_a, C_kappa rational. Closed under +, -, d/dz, multiplication by a
// rational function, and (partially) under primitives. x and y of a spectral
// curve live here with constant L_a; WKB exponents use the general shape.
class LogRatFun {
 public:
  LogRatFun() = default;
  LogRatFun(Scalar c) : rat_(RatFun(std::move(c))) {}
  LogRatFun(RatFun r) : rat_(std::move(r)) {}
  static LogRatFun log_linear(const Scalar& coeff, const Scalar& a);  // coeff*log(z-a)
  static LogRatFun log_of_scalar(const Scalar& coeff, const Scalar& kappa);
  static LogRatFun log_term(RatFun coeff, const Scalar& a);

  const RatFun& rational_part() const { return rat_; }
  const std::map<Scalar, RatFun>& log_terms() const { return logs_; }
  const std::map<Scalar, RatFun>& const_log_terms() const { return clogs_; }
  bool has_logs() const { return !logs_.empty(); }
  bool is_rational() const { return logs_.empty() && clogs_.empty(); }
  bool is_zero() const;
  bool is_constant() const;
  LoggedScalar constant_value() const;

  LogRatFun operator-() const;
  LogRatFun operator+(const LogRatFun& o) const;
  LogRatFun operator-(const LogRatFun& o) const;
  // general product; throws if both factors carry z-dependent logs
  LogRatFun operator*(const LogRatFun& o) const;
  LogRatFun operator*(const Scalar& s) const;
  LogRatFun operator*(const RatFun& r) const;
  LogRatFun& operator+=(const LogRatFun& o) { return *this = *this + o; }
  LogRatFun& operator-=(const LogRatFun& o) { return *this = *this - o; }

  LogRatFun derivative() const;

  // substitute z -> (az+b)/(cz+d); log arguments are renormalized to monic
  // linear form, spilling constants into the const-log ledger
  LogRatFun compose_mobius(const Scalar& a, const Scalar& b, const Scalar& c,
                           const Scalar& d) const;
  LogRatFun at_inverse() const;  // z -> 1/w

  // evaluation at a regular scalar point, logs becoming formal log-constants
  LoggedScalar eval_logged(const Scalar& z) const;

  bool operator==(const LogRatFun& o) const;
  bool operator!=(const LogRatFun& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void clean();
  RatFun rat_;
  std::map<Scalar, RatFun> logs_;    // a -> L_a(z), meaning L_a(z) log(z-a)
  std::map<Scalar, RatFun> clogs_;   // kappa -> C_kappa(z), meaning C(z) log kappa
};

inline LogRatFun operator*(const Scalar& s, const LogRatFun& f) { return f * s; }

// Laurent expansion data of a LogRatFun at a point: main Laurent part, an
// optional log(t) channel, and log-constant contributions per power of t.
struct LoggedSeries {
  LSeries main;                                 // plain scalar coefficients
  LSeries log_channel;                          // coefficient series of log(t)
  std::map<Scalar, LSeries> const_log_channel;  // kappa -> series multiplying log(kappa)

  // the t^0 coefficient with all log-constants, discarding log(t) and 1/t^k
  LoggedScalar finite_part() const;
};

// Expansion of f at z = a (or at infinity in the chart w = 1/z when
// at_infinity is set): substitutes z = a + t and expands every channel.
LoggedSeries expand_logged(const LogRatFun& f, const Scalar& a, int order,
                           bool at_infinity = false);

// Primitive with respect to z. Pole parts of the rational channel must split
// over the field (hints allowed). Products log*log are rejected (they cannot
// arise for the objects this engine integrates at value level).
LogRatFun primitive(const LogRatFun& f, const std::vector<Scalar>& root_hints = {});

}  // namespace logtr
