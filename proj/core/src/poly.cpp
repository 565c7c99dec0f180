#include "logtr/poly.hpp"

#include <algorithm>

namespace logtr {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::x() { return Poly(std::vector<Scalar>{Scalar(0), Scalar(1)}); }

Poly Poly::monomial(const Scalar& c, int deg) {
  std::vector<Scalar> v(deg + 1, Scalar(0));
  v[deg] = c;
  return Poly(std::move(v));
}

Poly Poly::from_longs(std::vector<long> coeffs) {
  std::vector<Scalar> v;
  v.reserve(coeffs.size());
  for (long x : coeffs) v.emplace_back(x);
  return Poly(std::move(v));
}

const Scalar& Poly::operator[](int k) const {
  static const Scalar zero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[k];
}

const Scalar& Poly::leading() const {
  if (is_zero()) fail(Error::Kind::internal, "leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Scalar> v(std::max(c_.size(), o.c_.size()), Scalar(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*this)[i] + o[static_cast<int>(i)];
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Scalar> v(c_.size() + o.c_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return Poly(std::move(v));
}

Poly Poly::operator*(const Scalar& s) const {
  Poly r = *this;
  for (auto& c : r.c_) c = c * s;
  r.trim();
  return r;
}

Poly Poly::pow(int e) const {
  Poly r(Scalar(1)), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

void Poly::divmod(const Poly& d, Poly& q, Poly& r) const {
  if (d.is_zero()) fail(Error::Kind::precondition, "polynomial division by zero");
  std::vector<Scalar> rem = c_;
  std::vector<Scalar> quo;
  if (rem.size() >= d.c_.size()) quo.assign(rem.size() - d.c_.size() + 1, Scalar(0));
  Scalar dinv = d.leading().inverse();
  while (rem.size() >= d.c_.size()) {
    Scalar c = rem.back() * dinv;
    std::size_t sh = rem.size() - d.c_.size();
    quo[sh] = c;
    for (std::size_t i = 0; i < d.c_.size(); ++i) rem[sh + i] -= c * d.c_[i];
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
  }
  q = Poly(std::move(quo));
  r = Poly(std::move(rem));
}

Poly Poly::operator/(const Poly& d) const {
  Poly q, r;
  divmod(d, q, r);
  if (!r.is_zero()) fail(Error::Kind::internal, "inexact polynomial division");
  return q;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    a.divmod(b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Scalar> v(c_.size() - 1, Scalar(0));
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Scalar(static_cast<long>(i));
  return Poly(std::move(v));
}

Scalar Poly::eval(const Scalar& z) const {
  Scalar r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * z + *it;
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Poly Poly::compose_linear(const Scalar& a, const Scalar& b) const {
  Poly lin(std::vector<Scalar>{b, a});
  Poly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + Poly(*it);
  return r;
}

Poly Poly::reversed(int upto_deg) const {
  int d = std::max(degree(), upto_deg);
  std::vector<Scalar> v(d + 1, Scalar(0));
  for (int i = 0; i <= degree(); ++i) v[d - i] = (*this)[i];
  return Poly(std::move(v));
}

Poly Poly::deflate(const Scalar& r, int k) const {
  Poly p = *this;
  Poly lin(std::vector<Scalar>{-r, Scalar(1)});
  for (int i = 0; i < k; ++i) {
    Poly q, rem;
    p.divmod(lin, q, rem);
    if (!rem.is_zero())
      fail(Error::Kind::precondition, "claimed root is not a root (or multiplicity too high)");
    p = q;
  }
  return p;
}

int Poly::root_multiplicity(const Scalar& r) const {
  int m = 0;
  Poly p = *this;
  Poly lin(std::vector<Scalar>{-r, Scalar(1)});
  while (!p.is_zero()) {
    Poly q, rem;
    p.divmod(lin, q, rem);
    if (!rem.is_zero()) break;
    ++m;
    p = q;
  }
  return m;
}

bool Poly::operator==(const Poly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

// ------------------------------------------------------------------ roots

std::optional<Scalar> exact_sqrt(const Scalar& s) {
  if (!s.is_gaussian()) return std::nullopt;
  const auto& g = s.gaussian();
  auto rat_sqrt = [](const mpq_class& q) -> std::optional<mpq_class> {
    if (q < 0) return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
      mpz_class rn, rd;
      mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
      return mpq_class(rn, rd);
    }
    return std::nullopt;
  };
  if (g.im == 0) {
    if (auto r = rat_sqrt(g.re)) return Scalar(*r);
    if (auto r = rat_sqrt(-g.re)) return Scalar(GaussianRational(mpq_class(0), *r));
    return std::nullopt;
  }
  // (a+bi)^2 = c+di: a^2 = (c + |c+di|)/2 needs |c+di| rational
  mpq_class norm = g.re * g.re + g.im * g.im;
  auto nr = rat_sqrt(norm);
  if (!nr) return std::nullopt;
  auto a2 = mpq_class((g.re + *nr) / 2);
  auto ar = rat_sqrt(a2);
  if (!ar) return std::nullopt;
  if (*ar == 0) return std::nullopt;
  mpq_class b = g.im / (2 * (*ar));
  return Scalar(GaussianRational(*ar, b));
}

namespace {

// rational roots of a Q-coefficient polynomial via divisor enumeration
std::vector<Scalar> rational_root_candidates(const Poly& p) {
  mpz_class lead(1), tail(1);
  mpz_class den_lcm(1);
  for (const auto& c : p.coeffs()) {
    if (!c.is_gaussian() || c.gaussian().im != 0) return {};
    mpz_class d = c.gaussian().re.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  // clear denominators
  std::vector<mpz_class> ic;
  for (const auto& c : p.coeffs()) {
    mpq_class q = c.gaussian().re * den_lcm;
    ic.push_back(q.get_num());
  }
  int lo = 0;
  while (lo < static_cast<int>(ic.size()) && ic[lo] == 0) ++lo;
  if (lo >= static_cast<int>(ic.size())) return {};
  tail = abs(ic[lo]);
  lead = abs(ic.back());
  auto divisors = [](mpz_class n) {
    std::vector<mpz_class> out;
    if (n == 0) return out;
    for (mpz_class d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
      }
      if (d > 100000) break;  // catalog parameters are small
    }
    return out;
  };
  std::vector<Scalar> cands;
  cands.emplace_back(0);
  for (const auto& pn : divisors(tail))
    for (const auto& qn : divisors(lead)) {
      mpq_class r(pn, qn);
      r.canonicalize();
      cands.emplace_back(r);
      cands.emplace_back(mpq_class(-r));
    }
  return cands;
}

void float_roots_durand_kerner(const Poly& p, RootData& out) {
  int n = p.degree();
  if (n <= 0) return;
  unsigned prec = FloatConfig::active().precision_bits;
  Poly q = p.monic();
  std::vector<BigComplex> r(n);
  // deterministic spread of starting points
  mpf_class c(0.4, prec), s(0.9, prec);
  mpf_class re(1, prec), im(0, prec);
  for (int i = 0; i < n; ++i) {
    mpf_class nre = re * c - im * s + 0.1 * i;
    mpf_class nim = re * s + im * c + 0.05;
    r[i] = BigComplex(nre, nim);
    re = nre;
    im = nim;
  }
  auto ev = [&](const BigComplex& z) {
    Scalar v = q.eval(Scalar(z));
    return v.big_value();
  };
  for (int iter = 0; iter < 400; ++iter) {
    mpf_class worst(0, prec);
    for (int i = 0; i < n; ++i) {
      Scalar num(ev(r[i]));
      Scalar den(1);
      for (int j = 0; j < n; ++j)
        if (j != i) den = den * (Scalar(r[i]) - Scalar(r[j]));
      Scalar d = num / den;
      const auto& db = d.big_value();
      mpf_class mag = db.re * db.re + db.im * db.im;
      if (mag > worst) worst = mag;
      r[i] = BigComplex(r[i].re - db.re, r[i].im - db.im);
    }
    const auto& eps = FloatConfig::active().epsilon;
    if (worst <= eps * eps) break;
  }
  for (auto& z : r) out.roots.emplace_back(Scalar(z), 1);
}

}  // namespace

RootData find_roots(const Poly& p0, const std::vector<Scalar>& hints) {
  RootData out;
  Poly p = p0;
  if (p.degree() <= 0) return out;

  auto absorb = [&](const Scalar& r) {
    int m = p.root_multiplicity(r);
    if (m > 0) {
      out.roots.emplace_back(r, m);
      p = p.deflate(r, m);
    }
  };

  for (const auto& h : hints) absorb(h);

  bool exact = p.leading().is_exact();
  if (exact) {
    bool progress = true;
    while (progress && p.degree() > 0) {
      progress = false;
      if (p.degree() == 1) {
        absorb(-p[0] / p[1]);
        progress = true;
        continue;
      }
      if (p.degree() == 2) {
        Scalar disc = p[1] * p[1] - Scalar(4) * p[2] * p[0];
        if (auto sq = exact_sqrt(disc)) {
          Scalar two_a = Scalar(2) * p[2];
          absorb((-p[1] + *sq) / two_a);
          absorb((-p[1] - *sq) / two_a);
          progress = true;
          continue;
        }
        break;
      }
      for (const auto& cand : rational_root_candidates(p)) {
        if (p.eval(cand).is_zero()) {
          absorb(cand);
          progress = true;
          break;
        }
      }
    }
    if (p.degree() > 0) out.unsplit = p;
  } else {
    float_roots_durand_kerner(p, out);
  }
  return out;
}

}  // namespace logtr
