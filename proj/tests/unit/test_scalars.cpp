#include "doctest.h"
#include "mpweyl/scalars.hpp"

#include <map>
#include <random>
#include <vector>

using namespace mpweyl;

namespace {

// ---------------------------------------------------------------------------
// Independent oracles. These avoid the canonical-form machinery entirely:
// values are compared through the evaluation homomorphism into Q at generic
// rational points, and quantum integers against their defining finite sum.
// ---------------------------------------------------------------------------

mpq_class eval_monomial(const Monomial& m, const std::map<VarId, mpq_class>& at) {
  mpq_class acc = 1;
  for (const auto& [v, e] : m.entries()) {
    mpq_class base = at.at(v);
    mpq_class pw = 1;
    for (std::int32_t k = 0; k < (e < 0 ? -e : e); ++k) pw *= base;
    if (e < 0) pw = mpq_class(1) / pw;
    acc *= pw;
  }
  return acc;
}

mpq_class eval_poly(const LaurentPoly& p, const std::map<VarId, mpq_class>& at) {
  mpq_class acc = 0;
  for (const auto& [m, c] : p.terms()) acc += c * eval_monomial(m, at);
  return acc;
}

mpq_class eval_scalar(const Scalar& x, const std::map<VarId, mpq_class>& at) {
  return eval_poly(x.num(), at) / eval_poly(x.den(), at);
}

Scalar qint_sum(int i, long k) {
  REQUIRE(k >= 1);
  Scalar acc = Scalar::zero();
  for (long j = 0; j < k; ++j)
    acc += Scalar::r_power(i, 2 * j) * Scalar::s_power(i, 2 * (k - 1 - j));
  return acc;
}

// Canonical-form invariants every Scalar must satisfy.
void check_canonical(const Scalar& x) {
  if (x.is_zero()) {
    CHECK(x.den().is_one());
    return;
  }
  const LaurentPoly& d = x.den();
  CHECK(!d.is_zero());
  CHECK(d.all_exponents_nonnegative());
  CHECK(d.min_exponents().is_one());
  CHECK(d.leading_coeff() > 0);
  mpq_class c = d.content();
  CHECK(c.get_num() == 1);
  CHECK(c.get_den() == 1);
  if (!d.is_one()) {
    Monomial m1 = x.num().min_exponents();
    LaurentPoly p1 = x.num().shifted(m1.inverse());
    CHECK(LaurentPoly::gcd(p1, d).is_one());
  }
}

std::map<VarId, mpq_class> generic_point() {
  // Distinct primes keep every denominator that shows up in these tests
  // nonzero (r^2 - s^2 and friends).
  return {{var_r(1), mpq_class(2)},  {var_s(1), mpq_class(3)},
          {var_r(2), mpq_class(5)},  {var_s(2), mpq_class(7)},
          {var_r(3), mpq_class(11)}, {var_s(3), mpq_class(13)}};
}

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<int> expdist(-2, 3);
  std::uniform_int_distribution<int> coeffdist(-5, 5);
  std::uniform_int_distribution<int> idx(1, 3);
  LaurentPoly p;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m = Monomial::var(var_r(idx(rng)), expdist(rng)) *
                 Monomial::var(var_s(idx(rng)), expdist(rng));
    int c = coeffdist(rng);
    if (c != 0) p.add_term(m, c);
  }
  return p;
}

Scalar random_scalar(std::mt19937& rng) {
  LaurentPoly num = random_poly(rng);
  LaurentPoly den;
  do {
    den = random_poly(rng);
  } while (den.is_zero() || eval_poly(den, generic_point()) == 0);
  return Scalar::fraction(num, den);
}

}  // namespace

TEST_CASE("monomial basics") {
  Monomial one = Monomial::one();
  CHECK(one.is_one());
  CHECK(one.to_string() == "1");
  CHECK(one.total_degree() == 0);

  Monomial r2 = Monomial::var(var_r(1), 2);
  Monomial sm1 = Monomial::var(var_s(1), -1);
  Monomial m = r2 * sm1;
  CHECK(m.exponent(var_r(1)) == 2);
  CHECK(m.exponent(var_s(1)) == -1);
  CHECK(m.exponent(var_r(2)) == 0);
  CHECK(m.total_degree() == 1);
  CHECK(!m.all_nonnegative());
  CHECK(m.to_string() == "r1^2*s1^-1");

  CHECK((m * m.inverse()).is_one());
  CHECK(m / m == one);
  CHECK(Monomial::var(var_r(1), 2) == Monomial::var(var_r(1)) * Monomial::var(var_r(1)));
  CHECK((Monomial::var(var_r(1)) * Monomial::var(var_r(1), -1)).is_one());
}

TEST_CASE("monomial min and divisibility") {
  Monomial a = Monomial::var(var_r(1), 3) * Monomial::var(var_s(1), -2);
  Monomial b = Monomial::var(var_r(1), 1) * Monomial::var(var_r(2), 4);
  Monomial m = Monomial::min(a, b);
  CHECK(m.exponent(var_r(1)) == 1);
  CHECK(m.exponent(var_s(1)) == -2);  // missing from b counts as 0
  CHECK(m.exponent(var_r(2)) == 0);   // missing from a counts as 0

  CHECK(a.divisible_by(Monomial::var(var_r(1), 2) * Monomial::var(var_s(1), -2)));
  CHECK(!a.divisible_by(Monomial::var(var_r(1), 4)));
  CHECK(a.divisible_by(Monomial::one()));
}

TEST_CASE("monomial order is graded then lexicographic") {
  Monomial r = Monomial::var(var_r(1));
  Monomial s = Monomial::var(var_s(1));
  // Degree decides first.
  CHECK(Monomial::cmp(r * r * r, r * s) > 0);
  // Same degree: the first variable in id order with differing exponent,
  // larger exponent wins; r1 precedes s1.
  CHECK(Monomial::cmp(r * r, r * s) > 0);
  CHECK(Monomial::cmp(r * s, s * s) > 0);
  CHECK(Monomial::cmp(r, r) == 0);
  // Laurent case: exponent -1 vs 0 at r1, same total degree.
  Monomial inv = Monomial::var(var_r(1), -1) * Monomial::var(var_s(1), 1);
  CHECK(Monomial::cmp(Monomial::one(), inv) > 0);
  CHECK((inv < Monomial::one()));
}

TEST_CASE("laurent poly arithmetic matches evaluation") {
  auto at = generic_point();
  std::mt19937 rng(12345);
  for (int iter = 0; iter < 100; ++iter) {
    LaurentPoly a = random_poly(rng);
    LaurentPoly b = random_poly(rng);
    CHECK(eval_poly(a + b, at) == eval_poly(a, at) + eval_poly(b, at));
    CHECK(eval_poly(a - b, at) == eval_poly(a, at) - eval_poly(b, at));
    CHECK(eval_poly(a * b, at) == eval_poly(a, at) * eval_poly(b, at));
    CHECK(eval_poly(-a, at) == -eval_poly(a, at));
  }
  LaurentPoly r = LaurentPoly::variable(var_r(1));
  CHECK(eval_poly(r.pow(5), at) == 32);
  CHECK(r.pow(0).is_one());
}

TEST_CASE("laurent poly structure queries") {
  LaurentPoly p = LaurentPoly::variable(var_r(1), 2) -
                  LaurentPoly::variable(var_s(1), 2);
  CHECK(p.term_count() == 2);
  CHECK(p.leading_monomial() == Monomial::var(var_r(1), 2));
  CHECK(p.leading_coeff() == 1);
  CHECK(p.to_string() == "r1^2 - s1^2");
  CHECK(p.degree_in(var_r(1)) == 2);
  CHECK(p.degree_in(var_r(2)) == 0);
  CHECK(p.coeff_of(var_r(1), 2).is_one());
  CHECK(p.coeff_of(var_r(1), 0) == -LaurentPoly::variable(var_s(1), 2));
  CHECK(p.coeff_of(var_r(1), 1).is_zero());

  LaurentPoly q = LaurentPoly::monomial(Monomial::var(var_r(1), 1), mpq_class(4, 3)) +
                  LaurentPoly::monomial(Monomial::var(var_s(1), 1), 2);
  CHECK(q.content() == mpq_class(2, 3));
  CHECK(q.to_string() == "4/3*r1 + 2*s1");

  LaurentPoly lm = LaurentPoly::monomial(
      Monomial::var(var_r(1), -2) * Monomial::var(var_s(1), 1), 3);
  CHECK(!lm.all_exponents_nonnegative());
  CHECK((lm + p).min_exponents() == Monomial::var(var_r(1), -2));
  CHECK(LaurentPoly::zero().to_string() == "0");
  CHECK(LaurentPoly::zero().content() == 0);
}

TEST_CASE("exact division") {
  LaurentPoly r2 = LaurentPoly::variable(var_r(1), 2);
  LaurentPoly s2 = LaurentPoly::variable(var_s(1), 2);
  LaurentPoly diff = r2 - s2;
  LaurentPoly sum = r2 + s2;
  CHECK(LaurentPoly::exact_div(diff * sum, diff) == sum);
  CHECK(LaurentPoly::exact_div(diff * sum, sum) == diff);
  CHECK(LaurentPoly::exact_div(diff, LaurentPoly::one()) == diff);
  CHECK(LaurentPoly::exact_div(LaurentPoly::zero(), diff).is_zero());
  CHECK_THROWS_AS(LaurentPoly::exact_div(r2 + LaurentPoly::one(), diff),
                  std::logic_error);
}

TEST_CASE("polynomial gcd") {
  LaurentPoly r2 = LaurentPoly::variable(var_r(1), 2);
  LaurentPoly s2 = LaurentPoly::variable(var_s(1), 2);
  LaurentPoly diff = r2 - s2;
  LaurentPoly sum = r2 + s2;

  CHECK(LaurentPoly::gcd(diff, diff * sum) == diff);
  CHECK(LaurentPoly::gcd(diff * diff, diff * sum) == diff);
  CHECK(LaurentPoly::gcd(diff, sum).is_one());
  CHECK(LaurentPoly::gcd(diff, LaurentPoly::integer(7)).is_one());
  CHECK(LaurentPoly::gcd(LaurentPoly::zero(), LaurentPoly::zero()).is_zero());
  CHECK(LaurentPoly::gcd(LaurentPoly::zero(), diff.scaled(-3)) == diff);

  // Content is stripped and the sign normalized.
  CHECK(LaurentPoly::gcd(diff.scaled(mpq_class(-4, 3)), diff * sum) == diff);

  // Multivariate: common factor across different index pairs.
  LaurentPoly u = LaurentPoly::variable(var_r(2)) + LaurentPoly::variable(var_s(2));
  LaurentPoly v = LaurentPoly::variable(var_r(2)) - LaurentPoly::variable(var_s(2));
  CHECK(LaurentPoly::gcd(diff * u, diff * v) == diff);
  CHECK(LaurentPoly::gcd(u * diff, u * sum) == u);

  // Random products: gcd(g*a, g*b) divides both and is divisible by g.
  std::mt19937 rng(777);
  auto positive_poly = [&rng]() {
    LaurentPoly p;
    do { p = random_poly(rng); } while (p.is_zero());
    return p.shifted(p.min_exponents().inverse());
  };
  for (int iter = 0; iter < 25; ++iter) {
    LaurentPoly g = positive_poly();
    LaurentPoly a = positive_poly();
    LaurentPoly b = positive_poly();
    LaurentPoly d = LaurentPoly::gcd(g * a, g * b);
    CHECK(d.leading_coeff() > 0);
    CHECK_NOTHROW(LaurentPoly::exact_div(g * a, d));
    CHECK_NOTHROW(LaurentPoly::exact_div(g * b, d));
    CHECK_NOTHROW(LaurentPoly::exact_div(d, g.normalized_primitive()));
  }
}

TEST_CASE("scalar canonical form is unique per value") {
  LaurentPoly r2 = LaurentPoly::variable(var_r(1), 2);
  LaurentPoly s2 = LaurentPoly::variable(var_s(1), 2);
  LaurentPoly diff = r2 - s2;
  LaurentPoly sum = r2 + s2;

  // (r^4 - s^4)/(r^2 - s^2) collapses to the polynomial r^2 + s^2.
  Scalar q = Scalar::fraction(diff * sum, diff);
  Scalar direct = Scalar::from_poly(sum);
  CHECK(q == direct);
  CHECK(q.num() == direct.num());
  CHECK(q.den() == direct.den());
  CHECK(q.den().is_one());
  check_canonical(q);

  // Common factors and scalings never survive reduction.
  std::mt19937 rng(4242);
  for (int iter = 0; iter < 40; ++iter) {
    Scalar x = random_scalar(rng);
    check_canonical(x);
    LaurentPoly c;
    do { c = random_poly(rng); } while (c.is_zero());
    Scalar y = Scalar::fraction(x.num() * c, x.den() * c);
    CHECK(y.num() == x.num());
    CHECK(y.den() == x.den());
  }

  // Monomial denominators clear entirely.
  Scalar m = Scalar::fraction(LaurentPoly::one(),
                              LaurentPoly::variable(var_r(1), 3).scaled(2));
  CHECK(m.den().is_one());
  CHECK(m.num() == LaurentPoly::monomial(Monomial::var(var_r(1), -3), mpq_class(1, 2)));
  check_canonical(m);

  // Denominator sign and content normalize into the numerator.
  Scalar t = Scalar::fraction(LaurentPoly::one(), diff.scaled(mpq_class(-3, 2)));
  CHECK(t.den() == diff);
  CHECK(t.num() == LaurentPoly::rational(mpq_class(-2, 3)));
  check_canonical(t);
}

TEST_CASE("scalar arithmetic matches rational evaluation") {
  auto at = generic_point();
  std::mt19937 rng(999);
  for (int iter = 0; iter < 100; ++iter) {
    Scalar x = random_scalar(rng);
    Scalar y = random_scalar(rng);
    Scalar z = random_scalar(rng);
    CHECK(eval_scalar(x + y, at) == eval_scalar(x, at) + eval_scalar(y, at));
    CHECK(eval_scalar(x - y, at) == eval_scalar(x, at) - eval_scalar(y, at));
    CHECK(eval_scalar(x * y, at) == eval_scalar(x, at) * eval_scalar(y, at));
    check_canonical(x + y);
    check_canonical(x * y);
    // Field axioms, exercised structurally (not just at one point).
    CHECK(x + y == y + x);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == Scalar::zero());
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == Scalar::one());
      CHECK(x / x == Scalar::one());
      CHECK(eval_scalar(x.inverse(), at) == 1 / eval_scalar(x, at));
    }
    CHECK(x.pow(3) == x * x * x);
    if (!x.is_zero()) CHECK(x.pow(-2) == (x * x).inverse());
  }
  CHECK(Scalar::zero().pow(0) == Scalar::one());
  CHECK_THROWS_AS(Scalar::one() / Scalar::zero(), DivisionByZero);
  CHECK_THROWS_AS(Scalar::zero().inverse(), DivisionByZero);
  CHECK_THROWS_AS(Scalar::fraction(LaurentPoly::one(), LaurentPoly::zero()),
                  DivisionByZero);
}

TEST_CASE("scalar constructors and accessors") {
  CHECK(Scalar().is_zero());
  CHECK(Scalar(5) - Scalar(2) == Scalar(3));
  CHECK(Scalar(mpq_class(1, 2)) + Scalar(mpq_class(1, 3)) == Scalar(mpq_class(5, 6)));
  CHECK(Scalar::param_r(2).to_string() == "r2");
  CHECK(Scalar::param_s(3).to_string() == "s3");
  CHECK(Scalar::r_power(1, -2).is_monomial());
  CHECK(Scalar::r_power(1, 2) * Scalar::r_power(1, -2) == Scalar::one());
  CHECK(Scalar::one().is_one());
  CHECK(!Scalar::zero().is_one());
  CHECK(Scalar(0).is_zero());

  Scalar lam = Scalar::parameter("lambda1");
  Scalar lam2 = Scalar::parameter("lambda1");
  CHECK(lam == lam2);
  CHECK(lam.to_string() == "lambda1");
  CHECK(lam != Scalar::parameter("lambda2"));
  // Deformation parameters outrank named params at equal degree.
  CHECK(Monomial::cmp(Monomial::var(register_parameter("lambda1")),
                      Monomial::var(var_r(1))) < 0);

  Scalar frac = Scalar::fraction(
      LaurentPoly::one(),
      LaurentPoly::variable(var_r(1), 2) - LaurentPoly::variable(var_s(1), 2));
  CHECK(frac.to_string() == "(1)/(r1^2 - s1^2)");
}

TEST_CASE("quantum integers match the defining sum") {
  for (int i : {1, 2, 3}) {
    CHECK(quantum_integer(i, 0).is_zero());
    CHECK(quantum_integer(i, 1).is_one());
    for (long k = 1; k <= 20; ++k) {
      Scalar expect = qint_sum(i, k);
      CHECK(quantum_integer(i, k) == expect);
      // Negative values: [-k] = -(r s)^{-2k} [k].
      Scalar neg = Scalar::zero() -
                   Scalar::r_power(i, -2 * k) * Scalar::s_power(i, -2 * k) * expect;
      CHECK(quantum_integer(i, -k) == neg);
    }
  }
  // [2] in lowest terms is the polynomial r^2 + s^2.
  Scalar two = quantum_integer(1, 2);
  CHECK(two.den().is_one());
  CHECK(two.to_string() == "r1^2 + s1^2");
  CHECK(quantum_integer(2, 2).to_string() == "r2^2 + s2^2");
  CHECK_THROWS_AS(quantum_integer(0, 2), IndexOutOfRange);
}

TEST_CASE("signed power ratio recognition") {
  for (int j : {1, 2}) {
    for (long p = -10; p <= 10; ++p) {
      Scalar plus = Scalar::r_power(j, p) * Scalar::s_power(j, -p);
      auto got = ratio_as_signed_power(plus, j);
      REQUIRE(got.has_value());
      CHECK(got->sign == 1);
      CHECK(got->power == p);

      Scalar minus = Scalar::zero() - plus;
      auto gotm = ratio_as_signed_power(minus, j);
      REQUIRE(gotm.has_value());
      CHECK(gotm->sign == -1);
      CHECK(gotm->power == p);
    }
  }
  // Wrong shapes are rejected, never misread.
  CHECK(!ratio_as_signed_power(Scalar::r_power(1, 2), 1).has_value());
  CHECK(!ratio_as_signed_power(Scalar(2), 1).has_value());
  CHECK(!ratio_as_signed_power(
          Scalar::r_power(1, 1) * Scalar::s_power(1, -1) * Scalar(2), 1).has_value());
  CHECK(!ratio_as_signed_power(quantum_integer(1, 2), 1).has_value());
  CHECK(!ratio_as_signed_power(Scalar::r_power(2, 1) * Scalar::s_power(2, -1), 1)
             .has_value());
  CHECK(!ratio_as_signed_power(
          Scalar::r_power(1, 1) * Scalar::s_power(1, -2), 1).has_value());
  // The trivial ratio is +(r/s)^0.
  auto unit = ratio_as_signed_power(Scalar::one(), 1);
  REQUIRE(unit.has_value());
  CHECK(unit->sign == 1);
  CHECK(unit->power == 0);
  CHECK_THROWS_AS(ratio_as_signed_power(Scalar::zero(), 1), ZeroInput);
}

TEST_CASE("variable naming") {
  CHECK(variable_name(var_r(1)) == "r1");
  CHECK(variable_name(var_s(1)) == "s1");
  CHECK(variable_name(var_r(4)) == "r4");
  CHECK(variable_name(var_s(7)) == "s7");
  VarId xi = register_parameter("xi1");
  CHECK(is_named_param(xi));
  CHECK(!is_named_param(var_r(100)));
  CHECK(variable_name(xi) == "xi1");
  CHECK(register_parameter("xi1") == xi);
  CHECK_THROWS_AS(register_parameter(""), InvalidParameter);
}
