#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace logtr {

// Error taxonomy shared across the engine. The CLI maps kinds to exit codes.
struct Error : std::runtime_error {
  enum class Kind {
    precondition,
    field_extension,
    admissibility,
    basepoint,
    domain,
    chart,
    parse,
    internal,
  };
  Kind kind;
  Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(Error::Kind k, const std::string& msg) { throw Error(k, msg); }

// Global configuration for the BigFloatComplex mode. Precision and the zero
// tolerance are run configuration, not constants.
struct FloatConfig {
  unsigned precision_bits = 256;
  mpf_class epsilon{"1e-40", 256};

  static FloatConfig& active();
};

// Exact Gaussian rational a + b*i with canonical mpq components.
struct GaussianRational {
  mpq_class re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long v) : re(v), im(0) {}
  GaussianRational(const mpq_class& r) : re(r), im(0) {}
  GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational inverse() const {
    if (is_zero()) fail(Error::Kind::precondition, "division by zero scalar");
    mpq_class n = re * re + im * im;
    return {re / n, -im / n};
  }
  GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }
  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }

  // total order used only for deterministic container keys
  int cmp(const GaussianRational& o) const {
    int c = ::cmp(re, o.re);
    if (c != 0) return c;
    return ::cmp(im, o.im);
  }
};

// A low-degree explicit field extension Q(i)[s] / (m(s)), m monic. Used for
// catalog curves whose ramification points are not Gaussian-rational; the
// extension is supplied explicitly with the curve, never inferred.
struct ExtField {
  // m(s) = s^d + minpoly[d-1] s^{d-1} + ... + minpoly[0]
  std::vector<GaussianRational> minpoly;
  std::string name;  // e.g. "s^2+1/3"

  std::size_t degree() const { return minpoly.size(); }
  bool same(const ExtField& o) const;
};

struct ExtElem {
  std::vector<GaussianRational> c;  // coefficients of s^0..s^{d-1}
  std::shared_ptr<const ExtField> field;
};

struct BigComplex {
  mpf_class re, im;
  BigComplex();
  BigComplex(double r, double i);
  BigComplex(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}
};

// Scalar: exact Gaussian rational by default, optionally an element of an
// explicit extension field, or an arbitrary-precision complex float.
// Immutable value semantics throughout.
class Scalar {
 public:
  enum class Mode { exact_rational, big_float_complex };

  Scalar() : v_(GaussianRational{}) {}
  Scalar(long x) : v_(GaussianRational(x)) {}
  Scalar(const mpq_class& q) : v_(GaussianRational(q)) {}
  Scalar(GaussianRational g) : v_(std::move(g)) {}
  Scalar(ExtElem e);
  Scalar(BigComplex b) : v_(std::move(b)) {}

  static Scalar rational(const std::string& p_over_q);
  static Scalar complex_rational(const std::string& re, const std::string& im);
  static Scalar i();  // imaginary unit (exact)
  static Scalar big(double re, double im);
  // the generator s of an extension field
  static Scalar generator(std::shared_ptr<const ExtField> f);

  Mode mode() const {
    return std::holds_alternative<BigComplex>(v_) ? Mode::big_float_complex : Mode::exact_rational;
  }
  bool is_exact() const { return mode() == Mode::exact_rational; }
  bool is_extension() const { return std::holds_alternative<ExtElem>(v_); }

  bool is_zero() const;
  bool is_one() const { return (*this - Scalar(1)).is_zero(); }
  // exact integer/rational inspection (exact plain mode only)
  bool is_gaussian() const { return std::holds_alternative<GaussianRational>(v_); }
  const GaussianRational& gaussian() const;
  bool is_integer() const;
  long to_long() const;
  const mpq_class& rational_value() const;  // requires plain exact real

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;
  Scalar pow(long e) const;
  Scalar conj() const;  // exact only

  bool operator==(const Scalar& o) const { return (*this - o).is_zero(); }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // deterministic total order on the raw representation (container keys)
  int cmp(const Scalar& o) const;
  bool operator<(const Scalar& o) const { return cmp(o) < 0; }

  std::string str() const;  // canonical textual form
  const BigComplex& big_value() const { return std::get<BigComplex>(v_); }

  std::shared_ptr<const ExtField> ext_field() const;

 private:
  std::variant<GaussianRational, ExtElem, BigComplex> v_;
};

inline Scalar operator*(long a, const Scalar& s) { return Scalar(a) * s; }

// mpq -> "p/q" (or "p") canonical text
std::string rational_str(const mpq_class& q);
mpq_class parse_rational(const std::string& s);

}  // namespace logtr
