#include "logtr/local_series.hpp"

namespace logtr {

LSeries::LSeries(const Scalar& c, int trunc) : trunc_(trunc) {
  if (!c.is_zero() && trunc >= 0) c_[0] = c;
}

void LSeries::clean() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->first > trunc_ || it->second.is_zero())
      it = c_.erase(it);
    else
      ++it;
  }
}

const Scalar& LSeries::coeff(int k) const {
  static const Scalar zero(0);
  if (k > trunc_)
    fail(Error::Kind::internal,
         "requested series coefficient beyond truncation (k=" + std::to_string(k) +
             ", trunc=" + std::to_string(trunc_) + ")");
  auto it = c_.find(k);
  return it == c_.end() ? zero : it->second;
}

void LSeries::set(int k, const Scalar& v) {
  if (k > trunc_) fail(Error::Kind::internal, "set beyond truncation");
  if (v.is_zero())
    c_.erase(k);
  else
    c_[k] = v;
}

LSeries LSeries::operator-() const {
  LSeries r = *this;
  for (auto& [k, v] : r.c_) v = -v;
  return r;
}

LSeries LSeries::operator+(const LSeries& o) const {
  LSeries r(std::min(trunc_, o.trunc_));
  for (const auto& [k, v] : c_)
    if (k <= r.trunc_) r.c_[k] = v;
  for (const auto& [k, v] : o.c_)
    if (k <= r.trunc_) {
      auto it = r.c_.find(k);
      if (it == r.c_.end())
        r.c_[k] = v;
      else
        it->second += v;
    }
  r.clean();
  return r;
}

LSeries LSeries::operator-(const LSeries& o) const { return *this + (-o); }

LSeries LSeries::operator*(const LSeries& o) const {
  LSeries r(std::min(trunc_ + o.ord(), o.trunc_ + ord()));
  for (const auto& [ka, va] : c_)
    for (const auto& [kb, vb] : o.c_) {
      int k = ka + kb;
      if (k > r.trunc_) continue;
      auto it = r.c_.find(k);
      if (it == r.c_.end())
        r.c_[k] = va * vb;
      else
        it->second += va * vb;
    }
  r.clean();
  return r;
}

LSeries LSeries::operator*(const Scalar& s) const {
  LSeries r = *this;
  if (s.is_zero()) {
    r.c_.clear();
    return r;
  }
  for (auto& [k, v] : r.c_) v = v * s;
  r.clean();
  return r;
}

LSeries LSeries::inverse() const {
  if (known_zero()) fail(Error::Kind::precondition, "inverse of (known-)zero series");
  int m = ord();
  const Scalar lead = coeff(m);
  // 1/(t^m * u) with u = lead(1 + v); invert the unit by recursion
  int n = trunc_ - m;  // available relative order of the unit
  LSeries inv(n);
  Scalar l0 = lead.inverse();
  inv.c_[0] = l0;
  for (int k = 1; k <= n; ++k) {
    Scalar s(0);
    for (int j = 1; j <= k; ++j) {
      const Scalar& uj = coeff(m + j);
      if (uj.is_zero()) continue;
      auto it = inv.c_.find(k - j);
      if (it != inv.c_.end()) s += uj * it->second;
    }
    Scalar v = -(s * l0);
    if (!v.is_zero()) inv.c_[k] = v;
  }
  return inv.shift(-m);
}

LSeries LSeries::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  // start the accumulator with a generous truncation; multiplication takes
  // the correct minimum at each step
  int slack = static_cast<int>(e + 1) * (std::abs(ord()) + 2);
  LSeries r(Scalar(1), trunc_ + slack);
  LSeries b = *this;
  long ee = e;
  while (ee) {
    if (ee & 1) r = r * b;
    b = b * b;
    ee >>= 1;
  }
  return r;
}

LSeries LSeries::shift(int k) const {
  LSeries r(trunc_ + k);
  for (const auto& [e, v] : c_) r.c_[e + k] = v;
  return r;
}

LSeries LSeries::truncated(int new_trunc) const {
  LSeries r(std::min(trunc_, new_trunc));
  for (const auto& [k, v] : c_)
    if (k <= r.trunc_) r.c_[k] = v;
  return r;
}

LSeries LSeries::derivative() const {
  LSeries r(trunc_ - 1);
  for (const auto& [k, v] : c_) {
    if (k == 0) continue;
    if (k - 1 <= r.trunc_) r.c_[k - 1] = v * Scalar(k);
  }
  r.clean();
  return r;
}

LSeries LSeries::compose(const LSeries& g) const {
  if (ord() < 0) fail(Error::Kind::precondition, "compose: Laurent head not allowed");
  if (g.ord() < 1) fail(Error::Kind::precondition, "compose: inner series must vanish at 0");
  int T = std::min(trunc_ * std::max(g.ord(), 1), g.trunc_);
  // Horner from the top coefficient down
  LSeries r(T);
  for (int k = trunc_; k >= 0; --k) {
    r = r * g;
    Scalar a = coeff(k);
    if (!a.is_zero()) r = r + LSeries(a, T);
  }
  return r;
}

LSeries LSeries::reversion() const {
  if (ord() != 1) fail(Error::Kind::precondition, "reversion requires a simple zero");
  const Scalar& a1 = coeff(1);
  if (a1.is_zero()) fail(Error::Kind::precondition, "reversion: zero linear coefficient");
  int T = trunc_;
  // iterate w_{n+1} = (t - sum_{k>=2} a_k w_n^k)/a1 in the w-variable
  LSeries t = LSeries(Scalar(1), T).shift(1);
  LSeries w = t * a1.inverse();
  for (int it = 0; it < T; ++it) {
    LSeries acc(T);
    for (int k = 2; k <= trunc_; ++k) {
      const Scalar& ak = coeff(k);
      if (ak.is_zero()) continue;
      acc = acc + w.pow(k) * ak;
    }
    w = (t - acc) * a1.inverse();
  }
  return w;
}

LSeries LSeries::sqrt_one() const {
  if (ord() != 0 || !(coeff(0) == Scalar(1)))
    fail(Error::Kind::precondition, "sqrt_one requires leading coefficient 1 at order 0");
  // Newton: s_{n+1} = (s_n + f/s_n)/2
  LSeries s(Scalar(1), trunc_);
  const Scalar half = Scalar(1) / Scalar(2);
  for (int it = 0; it < trunc_ + 2; ++it) s = (s + *this * s.inverse()) * half;
  return s;
}

Scalar LSeries::residue() const { return coeff(-1); }

bool LSeries::operator==(const LSeries& o) const { return trunc_ == o.trunc_ && c_ == o.c_; }

LSeries LSeries::of(const RatFun& f, const Scalar& a, int trunc) {
  // expand num(a+t)/den(a+t)
  auto expand_poly = [&](const Poly& p) {
    Poly sh = p.compose_linear(Scalar(1), a);
    LSeries s(trunc + std::max(0, p.degree()) + 2);
    for (int k = 0; k <= sh.degree(); ++k)
      if (!sh[k].is_zero()) s.c_[k] = sh[k];
    return s;
  };
  LSeries n = expand_poly(f.num());
  LSeries d = expand_poly(f.den());
  LSeries r = (n * d.inverse()).truncated(trunc);
  return r;
}

LSeries LSeries::of_at_infinity(const RatFun& f, int trunc) {
  return of(f.at_inverse(), Scalar(0), trunc);
}

}  // namespace logtr
