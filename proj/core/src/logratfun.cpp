#include "logtr/logratfun.hpp"

#include <sstream>

namespace logtr {

// ---------------------------------------------------------------- LoggedScalar

bool LoggedScalar::is_zero() const {
  if (!value.is_zero()) return false;
  if (logs.empty()) return true;
  // sum c_k log kappa_k = 0 is certified by prod kappa_k^{N_k} = 1 after
  // clearing the coefficient denominators; requires rational coefficients.
  mpz_class lcm(1);
  for (const auto& [kappa, c] : logs) {
    (void)kappa;
    if (!c.is_gaussian() || c.gaussian().im != 0) return false;  // cannot certify
    mpz_class d = c.gaussian().re.get_den(), g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    lcm = lcm / g * d;
  }
  Scalar prod(1);
  for (const auto& [kappa, c] : logs) {
    mpq_class n = c.gaussian().re * lcm;
    if (!n.get_num().fits_slong_p()) return false;
    prod = prod * kappa.pow(n.get_num().get_si());
  }
  return prod == Scalar(1);
}

bool LoggedScalar::is_plain() const {
  for (const auto& [k, c] : logs) {
    (void)k;
    if (!c.is_zero()) return false;
  }
  return true;
}

LoggedScalar LoggedScalar::operator+(const LoggedScalar& o) const {
  LoggedScalar r = *this;
  r.value += o.value;
  for (const auto& [k, c] : o.logs) {
    auto it = r.logs.find(k);
    if (it == r.logs.end())
      r.logs[k] = c;
    else {
      it->second += c;
      if (it->second.is_zero()) r.logs.erase(it);
    }
  }
  return r;
}

LoggedScalar LoggedScalar::operator-() const {
  LoggedScalar r = *this;
  r.value = -r.value;
  for (auto& [k, c] : r.logs) c = -c;
  return r;
}

LoggedScalar LoggedScalar::operator-(const LoggedScalar& o) const { return *this + (-o); }

LoggedScalar LoggedScalar::operator*(const Scalar& s) const {
  LoggedScalar r = *this;
  r.value *= s;
  if (s.is_zero()) {
    r.logs.clear();
    return r;
  }
  for (auto& [k, c] : r.logs) c *= s;
  return r;
}

std::string LoggedScalar::str() const {
  std::ostringstream os;
  os << value.str();
  for (const auto& [k, c] : logs) os << " + (" << c.str() << ")*log(" << k.str() << ")";
  return os.str();
}

// ---------------------------------------------------------------- LogRatFun

LogRatFun LogRatFun::log_linear(const Scalar& coeff, const Scalar& a) {
  return log_term(RatFun(coeff), a);
}

LogRatFun LogRatFun::log_of_scalar(const Scalar& coeff, const Scalar& kappa) {
  LogRatFun f;
  if (kappa.is_zero()) fail(Error::Kind::precondition, "log(0) is not representable");
  if (!coeff.is_zero() && !(kappa == Scalar(1))) f.clogs_[kappa] = RatFun(coeff);
  return f;
}

LogRatFun LogRatFun::log_term(RatFun coeff, const Scalar& a) {
  LogRatFun f;
  if (!coeff.is_zero()) f.logs_[a] = std::move(coeff);
  return f;
}

void LogRatFun::clean() {
  for (auto it = logs_.begin(); it != logs_.end();)
    it = it->second.is_zero() ? logs_.erase(it) : std::next(it);
  for (auto it = clogs_.begin(); it != clogs_.end();)
    it = it->second.is_zero() ? clogs_.erase(it) : std::next(it);
}

bool LogRatFun::is_zero() const {
  if (!rat_.is_zero()) return false;
  for (const auto& [a, c] : logs_)
    if (!c.is_zero()) return false;
  // z-dependent log-constant coefficients cannot cancel against each other
  // unless the combination certifies as zero pointwise; use the constant
  // criterion when all coefficients are constants.
  if (clogs_.empty()) return true;
  LoggedScalar ls;
  for (const auto& [k, c] : clogs_) {
    if (!c.is_constant()) return false;
    ls.logs[k] = c.constant_value();
  }
  return ls.is_zero();
}

bool LogRatFun::is_constant() const {
  if (!rat_.is_constant()) return false;
  if (!logs_.empty()) return false;
  for (const auto& [k, c] : clogs_)
    if (!c.is_constant()) return false;
  return true;
}

LoggedScalar LogRatFun::constant_value() const {
  if (!is_constant()) fail(Error::Kind::internal, "LogRatFun is not constant");
  LoggedScalar r(rat_.is_zero() ? Scalar(0) : rat_.constant_value());
  for (const auto& [k, c] : clogs_) r.logs[k] = c.constant_value();
  return r;
}

LogRatFun LogRatFun::operator-() const {
  LogRatFun r = *this;
  r.rat_ = -r.rat_;
  for (auto& [a, c] : r.logs_) c = -c;
  for (auto& [a, c] : r.clogs_) c = -c;
  return r;
}

LogRatFun LogRatFun::operator+(const LogRatFun& o) const {
  LogRatFun r = *this;
  r.rat_ += o.rat_;
  for (const auto& [a, c] : o.logs_) {
    auto it = r.logs_.find(a);
    if (it == r.logs_.end())
      r.logs_[a] = c;
    else
      it->second += c;
  }
  for (const auto& [k, c] : o.clogs_) {
    auto it = r.clogs_.find(k);
    if (it == r.clogs_.end())
      r.clogs_[k] = c;
    else
      it->second += c;
  }
  r.clean();
  return r;
}

LogRatFun LogRatFun::operator-(const LogRatFun& o) const { return *this + (-o); }

LogRatFun LogRatFun::operator*(const RatFun& m) const {
  LogRatFun r = *this;
  r.rat_ *= m;
  for (auto& [a, c] : r.logs_) c *= m;
  for (auto& [k, c] : r.clogs_) c *= m;
  r.clean();
  return r;
}

LogRatFun LogRatFun::operator*(const Scalar& s) const { return *this * RatFun(s); }

LogRatFun LogRatFun::operator*(const LogRatFun& o) const {
  if (has_logs() && o.has_logs())
    fail(Error::Kind::precondition,
         "product of two log-bearing functions leaves the closed function class");
  // multiply const-log ledgers only against rational parts
  if (!clogs_.empty() && !(o.clogs_.empty() && o.logs_.empty()))
    fail(Error::Kind::precondition, "product of two log-constant-bearing functions");
  if (o.is_rational()) return *this * o.rat_;
  if (is_rational()) return o * rat_;
  fail(Error::Kind::internal, "unreachable log product case");
}

LogRatFun LogRatFun::derivative() const {
  LogRatFun r;
  r.rat_ = rat_.derivative();
  for (const auto& [a, c] : logs_) {
    // d/dz [c log(z-a)] = c' log(z-a) + c/(z-a)
    RatFun dc = c.derivative();
    if (!dc.is_zero()) r.logs_[a] = dc;
    Poly lin(std::vector<Scalar>{-a, Scalar(1)});
    r.rat_ += c / RatFun(lin);
  }
  for (const auto& [k, c] : clogs_) {
    RatFun dc = c.derivative();
    if (!dc.is_zero()) r.clogs_[k] = dc;
  }
  r.clean();
  return r;
}

LogRatFun LogRatFun::compose_mobius(const Scalar& ma, const Scalar& mb, const Scalar& mc,
                                    const Scalar& md) const {
  LogRatFun r;
  r.rat_ = rat_.compose_mobius(ma, mb, mc, md);
  auto add_clog = [&](const Scalar& kappa, const RatFun& coeff) {
    if (kappa == Scalar(1) || coeff.is_zero()) return;
    auto it = r.clogs_.find(kappa);
    if (it == r.clogs_.end())
      r.clogs_[kappa] = coeff;
    else
      it->second += coeff;
  };
  auto add_log = [&](const Scalar& a, const RatFun& coeff) {
    if (coeff.is_zero()) return;
    auto it = r.logs_.find(a);
    if (it == r.logs_.end())
      r.logs_[a] = coeff;
    else
      it->second += coeff;
  };
  for (const auto& [a, c] : logs_) {
    RatFun cc = c.compose_mobius(ma, mb, mc, md);
    // log((ma z + mb)/(mc z + md) - a) = log((ma - a mc) z + (mb - a md))
    //                                  - log(mc z + md)
    Scalar p = ma - a * mc, q = mb - a * md;
    if (p.is_zero()) {
      if (q.is_zero()) fail(Error::Kind::precondition, "mobius maps log base to zero");
      add_clog(q, cc);
    } else {
      // p(z + q/p): monic base (z - (-q/p)) plus constant log(p)
      add_log(-(q / p), cc);
      add_clog(p, cc);
    }
    if (!mc.is_zero()) {
      // subtract log(mc z + md) = log(mc) + log(z + md/mc)
      add_log(-(md / mc), -cc);
      add_clog(mc, -cc);
    } else if (!(md == Scalar(1))) {
      add_clog(md, -cc);
    }
  }
  for (const auto& [k, c] : clogs_) add_clog(k, c.compose_mobius(ma, mb, mc, md));
  r.clean();
  return r;
}

LogRatFun LogRatFun::at_inverse() const {
  // z -> 1/w is the mobius (0*w + 1)/(1*w + 0)
  return compose_mobius(Scalar(0), Scalar(1), Scalar(1), Scalar(0));
}

LoggedScalar LogRatFun::eval_logged(const Scalar& z) const {
  LoggedScalar r(rat_.eval(z));
  for (const auto& [a, c] : logs_) {
    Scalar base = z - a;
    if (base.is_zero()) fail(Error::Kind::precondition, "eval at a log singularity");
    Scalar cv = c.eval(z);
    if (cv.is_zero()) continue;
    auto it = r.logs.find(base);
    if (it == r.logs.end())
      r.logs[base] = cv;
    else
      it->second += cv;
  }
  for (const auto& [k, c] : clogs_) {
    Scalar cv = c.eval(z);
    if (cv.is_zero()) continue;
    auto it = r.logs.find(k);
    if (it == r.logs.end())
      r.logs[k] = cv;
    else
      it->second += cv;
  }
  for (auto it = r.logs.begin(); it != r.logs.end();)
    it = it->second.is_zero() ? r.logs.erase(it) : std::next(it);
  return r;
}

bool LogRatFun::operator==(const LogRatFun& o) const { return (*this - o).is_zero(); }

std::string LogRatFun::str() const {
  std::ostringstream os;
  os << rat_.str();
  for (const auto& [a, c] : logs_) os << " + (" << c.str() << ")*log(z-(" << a.str() << "))";
  for (const auto& [k, c] : clogs_) os << " + (" << c.str() << ")*log(" << k.str() << ")";
  return os.str();
}

// ---------------------------------------------------------------- expansions

LoggedScalar LoggedSeries::finite_part() const {
  LoggedScalar r;
  if (main.trunc() >= 0) r.value = main.coeff(0);
  for (const auto& [k, s] : const_log_channel) {
    if (s.trunc() >= 0 && !s.coeff(0).is_zero()) r.logs[k] = s.coeff(0);
  }
  return r;
}

LoggedSeries expand_logged(const LogRatFun& f, const Scalar& a, int order, bool at_infinity) {
  LogRatFun g = at_infinity ? f.at_inverse() : f;
  Scalar p = at_infinity ? Scalar(0) : a;

  LoggedSeries out;
  out.main = LSeries::of(g.rational_part(), p, order);
  out.log_channel = LSeries(order);

  auto add_const_channel = [&](const Scalar& kappa, const LSeries& s) {
    if (kappa == Scalar(1) || s.known_zero()) return;
    auto it = out.const_log_channel.find(kappa);
    if (it == out.const_log_channel.end())
      out.const_log_channel[kappa] = s;
    else
      it->second += s;
  };

  for (const auto& [base, coeff] : g.log_terms()) {
    LSeries cs = LSeries::of(coeff, p, order);
    Scalar delta = p - base;  // z - base = delta + t
    if (delta.is_zero()) {
      // log(t) channel
      out.log_channel += cs;
      continue;
    }
    // log(delta + t) = log(delta) + log(1 + t/delta)
    add_const_channel(delta, cs);
    LSeries logser(order);
    Scalar dinv = delta.inverse();
    Scalar power = dinv;
    for (int k = 1; k <= order; ++k) {
      logser.set(k, power * Scalar(mpq_class(k % 2 ? 1 : -1, k)));
      power = power * dinv;
    }
    out.main += cs * logser;
  }
  for (const auto& [kappa, coeff] : g.const_log_terms())
    add_const_channel(kappa, LSeries::of(coeff, p, order));
  return out;
}

LogRatFun primitive(const LogRatFun& f, const std::vector<Scalar>& root_hints) {
  // rational channel: partial fractions
  LogRatFun out;
  {
    PartialFractions pf = partial_fractions(f.rational_part(), root_hints);
    // integrate polynomial part
    Poly ip;
    {
      std::vector<Scalar> v(pf.polynomial.degree() + 2, Scalar(0));
      for (int k = 0; k <= pf.polynomial.degree(); ++k)
        v[k + 1] = pf.polynomial[k] / Scalar(k + 1);
      ip = Poly(std::move(v));
    }
    out += LogRatFun(RatFun(ip));
    for (const auto& [pt, orders] : pf.pole_parts) {
      Poly lin(std::vector<Scalar>{-pt, Scalar(1)});
      for (const auto& [k, c] : orders) {
        if (k == 1) {
          out += LogRatFun::log_linear(c, pt);
        } else {
          // int c/(z-p)^k = -c/(k-1) (z-p)^{1-k}
          out += LogRatFun(RatFun(Poly(c * Scalar(mpq_class(-1, k - 1)))) /
                           RatFun(lin.pow(k - 1)));
        }
      }
    }
  }
  // log channels: integrate by parts, R(z) log(z-a) with P = int R:
  //   int R log(z-a) = P log(z-a) - int P/(z-a)
  for (const auto& [base, coeff] : f.log_terms()) {
    LogRatFun P = primitive(LogRatFun(coeff), root_hints);
    if (!P.is_rational())
      fail(Error::Kind::precondition,
           "primitive would need log^2 terms (coefficient of log(z-(" + base.str() +
               ")) has residues)");
    Poly lin(std::vector<Scalar>{-base, Scalar(1)});
    LogRatFun tail = primitive(LogRatFun(P.rational_part() / RatFun(lin)), root_hints);
    out += LogRatFun::log_term(P.rational_part(), base) - tail;
  }
  for (const auto& [kappa, coeff] : f.const_log_terms()) {
    LogRatFun P = primitive(LogRatFun(coeff), root_hints);
    if (!P.is_rational()) fail(Error::Kind::internal, "nested logs in const-log primitive");
    LogRatFun t;
    t = LogRatFun::log_of_scalar(Scalar(1), kappa) * P.rational_part();
    out += t;
  }
  return out;
}

}  // namespace logtr
