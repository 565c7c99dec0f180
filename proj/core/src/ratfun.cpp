#include "logtr/ratfun.hpp"

#include <sstream>

namespace logtr {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

void RatFun::reduce() {
  if (den_.is_zero()) fail(Error::Kind::precondition, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(Scalar(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  Scalar lead = den_.leading();
  if (!(lead == Scalar(1))) {
    Scalar inv = lead.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Scalar RatFun::constant_value() const {
  if (!is_constant()) fail(Error::Kind::internal, "rational function is not constant");
  return num_.is_zero() ? Scalar(0) : num_[0];
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
  return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }

RatFun RatFun::inverse() const {
  if (is_zero()) fail(Error::Kind::precondition, "inverse of zero rational function");
  return RatFun(den_, num_);
}

RatFun RatFun::operator/(const RatFun& o) const { return *this * o.inverse(); }

RatFun RatFun::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFun r{Scalar(1)}, b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

RatFun RatFun::derivative() const {
  return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Scalar RatFun::eval(const Scalar& z) const {
  Scalar d = den_.eval(z);
  if (d.is_zero()) fail(Error::Kind::precondition, "evaluation at a pole");
  return num_.eval(z) / d;
}

bool RatFun::is_regular_at(const Scalar& z) const { return !den_.eval(z).is_zero(); }

int RatFun::order_at(const Scalar& a) const {
  if (is_zero()) fail(Error::Kind::internal, "order of zero function");
  return num_.root_multiplicity(a) - den_.root_multiplicity(a);
}

int RatFun::order_at_infinity() const {
  if (is_zero()) fail(Error::Kind::internal, "order of zero function");
  return den_.degree() - num_.degree();
}

RatFun RatFun::at_inverse() const {
  int d = std::max(num_.degree(), den_.degree());
  return RatFun(num_.reversed(d), den_.reversed(d));
}

RatFun RatFun::compose_mobius(const Scalar& a, const Scalar& b, const Scalar& c,
                              const Scalar& d) const {
  // substitute z -> (a z + b)/(c z + d); clear denominators with (cz+d)^D
  Poly nzd(std::vector<Scalar>{b, a});
  Poly dzd(std::vector<Scalar>{d, c});
  int D = std::max(num_.degree(), den_.degree());
  auto lift = [&](const Poly& p) {
    Poly acc;
    for (int k = 0; k <= p.degree(); ++k) {
      if (p[k].is_zero()) continue;
      acc = acc + nzd.pow(k) * dzd.pow(D - k) * p[k];
    }
    return acc;
  };
  return RatFun(lift(num_), lift(den_));
}

RatFun RatFun::compose_linear(const Scalar& a, const Scalar& b) const {
  return RatFun(num_.compose_linear(a, b), den_.compose_linear(a, b));
}

bool RatFun::operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

std::string RatFun::str() const {
  auto poly_str = [](const Poly& p) {
    if (p.is_zero()) return std::string("0");
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
      if (p[k].is_zero()) continue;
      if (!first) os << " + ";
      os << "(" << p[k].str() << ")";
      if (k > 0) os << "*z^" << k;
      first = false;
    }
    return os.str();
  };
  if (den_.degree() == 0 && den_[0] == Scalar(1)) return poly_str(num_);
  return "(" + poly_str(num_) + ") / (" + poly_str(den_) + ")";
}

PartialFractions partial_fractions(const RatFun& f, const std::vector<Scalar>& hints) {
  PartialFractions out;
  Poly q, r;
  f.num().divmod(f.den(), q, r);
  out.polynomial = q;
  if (r.is_zero()) return out;

  RootData roots = find_roots(f.den(), hints);
  if (!roots.unsplit.is_zero() && roots.unsplit.degree() > 0)
    fail(Error::Kind::field_extension,
         "denominator does not split over the active scalar field; remaining factor: " +
             RatFun(roots.unsplit).str());

  // subtract pole parts one point at a time
  RatFun rest(r, f.den());
  for (const auto& [p, mult] : roots.roots) {
    Poly lin(std::vector<Scalar>{-p, Scalar(1)});
    // h = rest * (z-p)^mult is regular at p; pole coefficients are the
    // Taylor coefficients of h at p.
    RatFun h = rest * RatFun(lin.pow(mult));
    for (int k = mult; k >= 1; --k) {
      Scalar c = h.eval(p);
      if (!c.is_zero()) out.pole_parts[p][k] = c;
      // peel one order: (h - c)/(z-p)
      h = RatFun(h.num() - h.den() * c, h.den() * lin);
    }
  }
  return out;
}

}  // namespace logtr
