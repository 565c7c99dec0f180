#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logtr/hbar_series.hpp"
#include "logtr/scalar.hpp"

using namespace logtr;

TEST_CASE("exact rational arithmetic is exact") {
  Scalar a = Scalar::rational("355/113");
  Scalar b = Scalar::rational("-22/7");
  CHECK((a + b) - b == a);
  CHECK((a * b) / b == a);
  CHECK(a * a.inverse() == Scalar(1));
}

TEST_CASE("gaussian rationals") {
  Scalar i = Scalar::i();
  CHECK(i * i == Scalar(-1));
  Scalar z = Scalar::complex_rational("1/2", "3");
  Scalar w = z * z.conj();
  CHECK(w == Scalar::rational("37/4"));
  CHECK(z / z == Scalar(1));
}

TEST_CASE("float mode zero test uses epsilon") {
  auto& cfg = FloatConfig::active();
  auto saved = cfg;
  cfg.epsilon = mpf_class("1e-10", cfg.precision_bits);
  Scalar tiny = Scalar::big(1e-12, 0);
  CHECK(tiny.is_zero());
  Scalar nottiny = Scalar::big(1e-8, 0);
  CHECK(!nottiny.is_zero());
  cfg = saved;
}

TEST_CASE("explicit quadratic extension field") {
  // s^2 = -1/3  (ramification data of the x-y dual of x=z^2, y=z+z^3)
  auto f = std::make_shared<ExtField>();
  f->minpoly = {GaussianRational(mpq_class(1, 3))};  // s^2 + 1/3 = 0
  f->minpoly.resize(2);
  f->name = "s^2+1/3";
  Scalar s = Scalar::generator(f);
  CHECK(s * s == Scalar::rational("-1/3"));
  Scalar inv = s.inverse();
  CHECK(inv * s == Scalar(1));
  // (1 + s)(1 - s) = 1 - s^2 = 4/3
  CHECK((Scalar(1) + s) * (Scalar(1) - s) == Scalar::rational("4/3"));
}

TEST_CASE("hbar series ring ops and examples") {
  using HS = HSeries<Scalar>;
  // exp(c hbar) = 1 + c hbar + c^2 hbar^2/2 + ...
  Scalar c = Scalar::rational("3/2");
  HS e = HS::hbar_power(c, 2, 8).exp();
  CHECK(e.coeff(0) == Scalar(1));
  CHECK(e.coeff(2) == c);
  CHECK(e.coeff(4) == c * c / Scalar(2));
  CHECK(e.coeff(6) == c * c * c / Scalar(6));

  // log(1 + hbar) = hbar - hbar^2/2 + hbar^3/3 - ...
  HS one_plus = HS(Scalar(1), 8) + HS::hbar_power(Scalar(1), 2, 8);
  HS l = one_plus.log();
  CHECK(l.coeff(2) == Scalar(1));
  CHECK(l.coeff(4) == Scalar::rational("-1/2"));
  CHECK(l.coeff(6) == Scalar::rational("1/3"));

  // hbar^{-1} * hbar^{3/2} = hbar^{1/2}
  HS a = HS::hbar_power(Scalar(1), -2, 6);
  HS b = HS::hbar_power(Scalar(1), 3, 6);
  CHECK((a * b).coeff(1) == Scalar(1));

  // exp(log(s)) == s round trip
  HS s2 = HS(Scalar(1), 6) + HS::hbar_power(Scalar(2), 1, 6) + HS::hbar_power(Scalar(5), 4, 6);
  CHECK(s2.log().exp() == s2);

  // exponents below -1 are rejected at construction
  CHECK_THROWS_AS(HS::hbar_power(Scalar(1), -3, 6), Error);
  // exp precondition names the offending exponent
  CHECK_THROWS_AS(HS(Scalar(1), 6).exp(), Error);

  // truncation: arithmetic never reports beyond the weakest input
  HS t1 = HS(Scalar(1), 4);
  HS t2 = HS(Scalar(1), 10);
  CHECK((t1 * t2).trunc() == 4);
  CHECK((t1 + t2).trunc() == 4);
  CHECK_THROWS_AS((t1 * t2).coeff(6), Error);
}

TEST_CASE("hbar series ring axioms on random small series") {
  using HS = HSeries<Scalar>;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(42);
  auto rand_series = [&]() {
    HS s(12);
    for (int k = 0; k <= 12; ++k) {
      mpz_class num = rng.get_z_range(9) - 4;
      mpz_class den = rng.get_z_range(3) + 1;
      if (num != 0) s.set(k, Scalar(mpq_class(num, den)));
    }
    return s;
  };
  for (int trial = 0; trial < 25; ++trial) {
    HS a = rand_series(), b = rand_series(), c = rand_series();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK_MESSAGE((a * b) * c == a * (b * c), "assoc");
    CHECK(a * (b + c) == a * b + a * c);
  }
}
