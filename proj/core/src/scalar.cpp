#include "logtr/scalar.hpp"

#include <sstream>

namespace logtr {

FloatConfig& FloatConfig::active() {
  static FloatConfig cfg;
  return cfg;
}

bool ExtField::same(const ExtField& o) const {
  if (minpoly.size() != o.minpoly.size()) return false;
  for (std::size_t i = 0; i < minpoly.size(); ++i)
    if (!(minpoly[i] == o.minpoly[i])) return false;
  return true;
}

BigComplex::BigComplex()
    : re(0, FloatConfig::active().precision_bits), im(0, FloatConfig::active().precision_bits) {}

BigComplex::BigComplex(double r, double i)
    : re(r, FloatConfig::active().precision_bits), im(i, FloatConfig::active().precision_bits) {}

namespace {

using GR = GaussianRational;

// ---- polynomial helpers over Q(i), used for extension-field arithmetic ----

using GPoly = std::vector<GR>;  // ascending coefficients

void gtrim(GPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

GPoly gadd(const GPoly& a, const GPoly& b) {
  GPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    GR v;
    if (i < a.size()) v = v + a[i];
    if (i < b.size()) v = v + b[i];
    r[i] = v;
  }
  gtrim(r);
  return r;
}

GPoly gscale(const GPoly& a, const GR& s) {
  GPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  gtrim(r);
  return r;
}

GPoly gmul(const GPoly& a, const GPoly& b) {
  if (a.empty() || b.empty()) return {};
  GPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  gtrim(r);
  return r;
}

// a mod m, m monic given by its low coefficients (degree d = low.size())
GPoly gmod(GPoly a, const std::vector<GR>& low) {
  const std::size_t d = low.size();
  gtrim(a);
  while (a.size() > d) {
    GR lead = a.back();
    std::size_t sh = a.size() - 1 - d;
    a.pop_back();
    for (std::size_t i = 0; i < d; ++i) a[sh + i] = a[sh + i] - lead * low[i];
    gtrim(a);
  }
  return a;
}

// quotient+remainder with arbitrary (nonzero-lead) divisor
void gdivmod(GPoly a, const GPoly& b, GPoly& q, GPoly& r) {
  q.clear();
  gtrim(a);
  if (b.empty()) fail(Error::Kind::internal, "gdivmod by zero");
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, GR{});
  GR binv = b.back().inverse();
  while (a.size() >= b.size()) {
    GR c = a.back() * binv;
    std::size_t sh = a.size() - b.size();
    q[sh] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] = a[sh + i] - c * b[i];
    gtrim(a);
    if (a.size() >= b.size() && a.size() == 0) break;
  }
  r = a;
}

// inverse of a modulo monic m (extended Euclid)
GPoly ginv_mod(const GPoly& a0, const std::vector<GR>& low) {
  GPoly m(low);
  m.push_back(GR(1));
  GPoly r0 = m, r1 = gmod(a0, low);
  GPoly t0 = {}, t1 = {GR(1)};
  if (r1.empty()) fail(Error::Kind::precondition, "division by zero scalar (extension)");
  while (true) {
    if (r1.size() == 1) {  // unit
      return gscale(t1, r1[0].inverse());
    }
    GPoly q, r2;
    gdivmod(r0, r1, q, r2);
    GPoly t2 = gadd(t0, gscale(gmul(q, t1), GR(-1)));
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
    if (r1.empty()) fail(Error::Kind::internal, "non-invertible element in extension field");
  }
}

BigComplex to_big(const GR& g) {
  unsigned p = FloatConfig::active().precision_bits;
  return BigComplex(mpf_class(g.re, p), mpf_class(g.im, p));
}

BigComplex badd(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
BigComplex bsub(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
BigComplex bmul(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
BigComplex binv(const BigComplex& a) {
  mpf_class n = a.re * a.re + a.im * a.im;
  if (n == 0) fail(Error::Kind::precondition, "division by zero scalar (float)");
  return {a.re / n, -a.im / n};
}

}  // namespace

Scalar::Scalar(ExtElem e) : v_(std::move(e)) {
  auto& el = std::get<ExtElem>(v_);
  if (!el.field) fail(Error::Kind::internal, "extension element without field");
  el.c.resize(el.field->degree());
  // collapse to plain Gaussian if the higher coefficients vanish
  bool plain = true;
  for (std::size_t i = 1; i < el.c.size(); ++i)
    if (!el.c[i].is_zero()) plain = false;
  if (plain) v_ = el.c.empty() ? GaussianRational{} : el.c[0];
}

Scalar Scalar::rational(const std::string& s) { return Scalar(parse_rational(s)); }

Scalar Scalar::complex_rational(const std::string& re, const std::string& im) {
  return Scalar(GaussianRational(parse_rational(re), parse_rational(im)));
}

Scalar Scalar::i() { return Scalar(GaussianRational(mpq_class(0), mpq_class(1))); }

Scalar Scalar::big(double re, double im) { return Scalar(BigComplex(re, im)); }

Scalar Scalar::generator(std::shared_ptr<const ExtField> f) {
  ExtElem e;
  e.field = std::move(f);
  e.c.assign(e.field->degree(), GR{});
  if (e.c.size() < 2) fail(Error::Kind::precondition, "extension degree must be >= 2");
  e.c[1] = GR(1);
  return Scalar(std::move(e));
}

bool Scalar::is_zero() const {
  if (auto* g = std::get_if<GaussianRational>(&v_)) return g->is_zero();
  if (auto* e = std::get_if<ExtElem>(&v_)) {
    for (auto& c : e->c)
      if (!c.is_zero()) return false;
    return true;
  }
  const auto& b = std::get<BigComplex>(v_);
  const auto& eps = FloatConfig::active().epsilon;
  return b.re * b.re + b.im * b.im <= eps * eps;
}

const GaussianRational& Scalar::gaussian() const {
  if (!is_gaussian()) fail(Error::Kind::internal, "scalar is not a plain exact value: " + str());
  return std::get<GaussianRational>(v_);
}

bool Scalar::is_integer() const {
  if (!is_gaussian()) return false;
  const auto& g = gaussian();
  return g.im == 0 && g.re.get_den() == 1;
}

long Scalar::to_long() const {
  if (!is_integer()) fail(Error::Kind::internal, "scalar is not an integer: " + str());
  if (!gaussian().re.get_num().fits_slong_p())
    fail(Error::Kind::internal, "integer scalar too large");
  return gaussian().re.get_num().get_si();
}

const mpq_class& Scalar::rational_value() const {
  const auto& g = gaussian();
  if (g.im != 0) fail(Error::Kind::internal, "scalar is not real: " + str());
  return g.re;
}

std::shared_ptr<const ExtField> Scalar::ext_field() const {
  if (auto* e = std::get_if<ExtElem>(&v_)) return e->field;
  return nullptr;
}

namespace {

// lift operands to a common representation kind; returns 0=gaussian, 1=ext, 2=big
int common_kind(const Scalar& a, const Scalar& b) {
  if (a.mode() == Scalar::Mode::big_float_complex || b.mode() == Scalar::Mode::big_float_complex)
    return 2;
  if (a.is_extension() || b.is_extension()) return 1;
  return 0;
}

BigComplex lift_big(const Scalar& s) {
  if (s.mode() == Scalar::Mode::big_float_complex) return s.big_value();
  if (s.is_gaussian()) return to_big(s.gaussian());
  fail(Error::Kind::field_extension, "cannot lift extension element to float mode implicitly");
}

}  // namespace

#define LOGTR_SCALAR_BINOP(OPNAME, GOP, EOP, BOP)                                          \
  Scalar Scalar::OPNAME(const Scalar& o) const {                                           \
    switch (common_kind(*this, o)) {                                                       \
      case 0:                                                                              \
        return Scalar(GOP(gaussian(), o.gaussian()));                                      \
      case 1: {                                                                            \
        auto fa = ext_field(), fb = o.ext_field();                                         \
        if (fa && fb && !fa->same(*fb))                                                    \
          fail(Error::Kind::field_extension, "mixing distinct extension fields");          \
        auto f = fa ? fa : fb;                                                             \
        ExtElem ea, eb;                                                                    \
        if (is_extension())                                                                \
          ea = std::get<ExtElem>(v_);                                                      \
        else {                                                                             \
          ea.field = f;                                                                    \
          ea.c.assign(f->degree(), GR{});                                                  \
          ea.c[0] = gaussian();                                                            \
        }                                                                                  \
        if (o.is_extension())                                                              \
          eb = std::get<ExtElem>(o.v_);                                                    \
        else {                                                                             \
          eb.field = f;                                                                    \
          eb.c.assign(f->degree(), GR{});                                                  \
          eb.c[0] = o.gaussian();                                                          \
        }                                                                                  \
        ExtElem r;                                                                         \
        r.field = f;                                                                       \
        r.c = EOP(ea.c, eb.c, f->minpoly);                                                 \
        r.c.resize(f->degree());                                                           \
        return Scalar(std::move(r));                                                       \
      }                                                                                    \
      default:                                                                             \
        return Scalar(BOP(lift_big(*this), lift_big(o)));                                  \
    }                                                                                      \
  }

namespace {
GR g_add(const GR& a, const GR& b) { return a + b; }
GR g_sub(const GR& a, const GR& b) { return a - b; }
GR g_mul(const GR& a, const GR& b) { return a * b; }
GPoly e_add(const GPoly& a, const GPoly& b, const std::vector<GR>&) { return gadd(a, b); }
GPoly e_sub(const GPoly& a, const GPoly& b, const std::vector<GR>&) {
  return gadd(a, gscale(b, GR(-1)));
}
GPoly e_mul(const GPoly& a, const GPoly& b, const std::vector<GR>& m) {
  return gmod(gmul(a, b), m);
}
}  // namespace

LOGTR_SCALAR_BINOP(operator+, g_add, e_add, badd)
LOGTR_SCALAR_BINOP(operator-, g_sub, e_sub, bsub)
LOGTR_SCALAR_BINOP(operator*, g_mul, e_mul, bmul)

#undef LOGTR_SCALAR_BINOP

Scalar Scalar::operator-() const { return Scalar(-1) * *this; }

Scalar Scalar::inverse() const {
  if (auto* g = std::get_if<GaussianRational>(&v_)) return Scalar(g->inverse());
  if (auto* e = std::get_if<ExtElem>(&v_)) {
    ExtElem r;
    r.field = e->field;
    r.c = ginv_mod(e->c, e->field->minpoly);
    r.c.resize(r.field->degree());
    return Scalar(std::move(r));
  }
  return Scalar(binv(std::get<BigComplex>(v_)));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r(1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Scalar Scalar::conj() const {
  if (auto* g = std::get_if<GaussianRational>(&v_)) return Scalar(GR{g->re, -g->im});
  if (auto* b = std::get_if<BigComplex>(&v_)) return Scalar(BigComplex{b->re, -b->im});
  fail(Error::Kind::internal, "conj of extension element not defined");
}

int Scalar::cmp(const Scalar& o) const {
  auto kind = [](const Scalar& s) {
    if (s.is_gaussian()) return 0;
    if (s.is_extension()) return 1;
    return 2;
  };
  if (kind(*this) != kind(o)) return kind(*this) < kind(o) ? -1 : 1;
  if (is_gaussian()) return gaussian().cmp(o.gaussian());
  if (is_extension()) {
    const auto& a = std::get<ExtElem>(v_).c;
    const auto& b = std::get<ExtElem>(o.v_).c;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      int c = a[i].cmp(b[i]);
      if (c != 0) return c;
    }
    return 0;
  }
  const auto& a = std::get<BigComplex>(v_);
  const auto& b = std::get<BigComplex>(o.v_);
  int c = ::cmp(a.re, b.re);
  if (c != 0) return c;
  return ::cmp(a.im, b.im);
}

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(const std::string& s) {
  if (s.empty()) fail(Error::Kind::parse, "empty rational literal");
  try {
    mpq_class q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail(Error::Kind::parse, "malformed rational literal: '" + s + "'");
  }
}

std::string Scalar::str() const {
  if (is_gaussian()) {
    const auto& g = gaussian();
    if (g.im == 0) return rational_str(g.re);
    std::ostringstream os;
    os << rational_str(g.re) << (g.im > 0 ? "+" : "-") << rational_str(abs(g.im)) << "i";
    return os.str();
  }
  if (is_extension()) {
    const auto& e = std::get<ExtElem>(v_);
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < e.c.size(); ++i) {
      if (i) os << ",";
      os << Scalar(e.c[i]).str();
    }
    os << "]@" << e.field->name;
    return os.str();
  }
  const auto& b = std::get<BigComplex>(v_);
  mp_exp_t er, ei;
  std::string sr = b.re.get_str(er, 10, 20), si = b.im.get_str(ei, 10, 20);
  std::ostringstream os;
  os << "(" << (sr.empty() ? "0" : sr) << "e" << er << "," << (si.empty() ? "0" : si) << "e" << ei
     << ")";
  return os.str();
}

}  // namespace logtr
