#pragma once

#include <map>

#include "logtr/scalar.hpp"

namespace logtr {

// Truncated formal series in hbar^{1/2}. Exponents live on the lattice
// (1/2)Z and are stored doubled (exponent field e means hbar^{e/2}), so the
// hbar^m coefficient sits at key 2m. Exponents below -1 (key < -2) are
// rejected: no object in this engine carries them. Truncation is tracked per
// series: keys <= trunc are known, beyond that unknown (not zero).
//
// C must be a commutative ring type with: default ctor (zero), is_zero(),
// operator+, operator-, operator*, and operator*(Scalar).
template <typename C>
class HSeries {
 public:
  HSeries() : trunc_(1 << 28) {}
  explicit HSeries(int trunc_doubled) : trunc_(trunc_doubled) {}
  HSeries(const C& c, int trunc_doubled) : trunc_(trunc_doubled) {
    if (!c.is_zero() && 0 <= trunc_) c_[0] = c;
  }

  static HSeries hbar_power(const C& c, int key, int trunc_doubled) {
    HSeries s(trunc_doubled);
    s.set(key, c);
    return s;
  }

  int trunc() const { return trunc_; }
  bool known_zero() const { return c_.empty(); }
  int ord() const { return c_.empty() ? trunc_ + 1 : c_.begin()->first; }
  const std::map<int, C>& terms() const { return c_; }

  C coeff(int key) const {
    if (key > trunc_)
      fail(Error::Kind::internal, "hbar coefficient requested beyond truncation (key " +
                                      std::to_string(key) + " > " + std::to_string(trunc_) + ")");
    auto it = c_.find(key);
    return it == c_.end() ? C{} : it->second;
  }

  void set(int key, const C& v) {
    check_key(key);
    if (key > trunc_) fail(Error::Kind::internal, "set beyond truncation");
    if (v.is_zero())
      c_.erase(key);
    else
      c_[key] = v;
  }
  void add_to(int key, const C& v) {
    check_key(key);
    if (key > trunc_) return;
    auto it = c_.find(key);
    if (it == c_.end()) {
      if (!v.is_zero()) c_[key] = v;
    } else {
      it->second = it->second + v;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  HSeries operator-() const {
    HSeries r = *this;
    for (auto& [k, v] : r.c_) v = C{} - v;
    return r;
  }
  HSeries operator+(const HSeries& o) const {
    HSeries r(std::min(trunc_, o.trunc_));
    for (const auto& [k, v] : c_)
      if (k <= r.trunc_) r.c_[k] = v;
    for (const auto& [k, v] : o.c_) r.add_to(k, v);
    return r;
  }
  HSeries operator-(const HSeries& o) const { return *this + (-o); }
  HSeries operator*(const HSeries& o) const {
    HSeries r(std::min(trunc_ + o.ord(), o.trunc_ + ord()));
    for (const auto& [ka, va] : c_)
      for (const auto& [kb, vb] : o.c_) {
        if (ka + kb > r.trunc_) continue;
        r.add_to(ka + kb, va * vb);
      }
    return r;
  }
  HSeries operator*(const Scalar& s) const {
    HSeries r = *this;
    for (auto& [k, v] : r.c_) v = v * s;
    for (auto it = r.c_.begin(); it != r.c_.end();)
      it = it->second.is_zero() ? r.c_.erase(it) : std::next(it);
    return r;
  }
  HSeries scaled(const C& s) const {
    HSeries r = *this;
    for (auto& [k, v] : r.c_) v = v * s;
    for (auto it = r.c_.begin(); it != r.c_.end();)
      it = it->second.is_zero() ? r.c_.erase(it) : std::next(it);
    return r;
  }
  HSeries truncated(int t) const {
    HSeries r(std::min(trunc_, t));
    for (const auto& [k, v] : c_)
      if (k <= r.trunc_) r.c_[k] = v;
    return r;
  }
  HSeries shifted(int dk) const {
    HSeries r(trunc_ + dk);
    for (const auto& [k, v] : c_) {
      check_key(k + dk);
      r.c_[k + dk] = v;
    }
    return r;
  }

  // exp of a series with ord >= 1 (i.e. lowest exponent >= hbar^{1/2})
  HSeries exp() const {
    if (!known_zero() && ord() < 1)
      fail(Error::Kind::precondition,
           "exp requires exponents >= 1/2; offending exponent " + std::to_string(ord()) + "/2");
    HSeries r(C{}, trunc_);
    r.c_[0] = one_like();
    HSeries term = r;
    long kmax = trunc_ / std::max(ord(), 1) + 1;
    mpq_class fact(1);
    for (long k = 1; k <= kmax; ++k) {
      term = term * *this;
      fact *= k;
      r = r + term * Scalar(mpq_class(1) / fact);
    }
    return r;
  }

  // log of a series with leading term 1 at exponent 0
  HSeries log() const {
    C c0 = ord() <= 0 ? coeff(0) : C{};
    if (ord() != 0 || !(c0 - one_like()).is_zero())
      fail(Error::Kind::precondition, "log requires leading coefficient 1 at hbar^0");
    HSeries u = *this;
    u.c_.erase(0);  // u = s - 1, ord >= 1
    HSeries r(std::min(trunc_, u.trunc_));
    HSeries term(C{}, r.trunc_);
    term.c_[0] = one_like();
    long kmax = r.trunc_ / std::max(u.ord(), 1) + 1;
    for (long k = 1; k <= kmax; ++k) {
      term = term * u;
      Scalar c = Scalar(mpq_class(k % 2 ? 1 : -1, k));
      r = r + term * c;
    }
    return r;
  }

  bool operator==(const HSeries& o) const { return trunc_ == o.trunc_ && c_ == o.c_; }

 private:
  static C one_like() {
    // C must be constructible from Scalar(1) via multiplication with zero+add;
    // we require C to have a unit obtained from Scalar: C{} + ... is not
    // generally possible, so C must provide C(Scalar) implicitly.
    return C(Scalar(1));
  }
  static void check_key(int key) {
    if (key < -2)
      fail(Error::Kind::precondition,
           "hbar exponent below -1 rejected (key " + std::to_string(key) + ")");
  }
  std::map<int, C> c_;
  int trunc_;
};

// Scalar needs to satisfy the C concept itself (it does: all ops present).

}  // namespace logtr
