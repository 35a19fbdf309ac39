#include <doctest.h>

#include <mvk/errors.hpp>
#include <mvk/scalar.hpp>

#include <complex>
#include <random>

using namespace mvk;

namespace {

GaussianRational random_gaussian(std::mt19937& rng) {
  auto small = [&rng]() {
    int num = static_cast<int>(rng() % 9) - 4;
    int den = 1 + static_cast<int>(rng() % 4);
    Rational q(num, den);
    q.canonicalize();
    return q;
  };
  return GaussianRational(small(), small());
}

}  // namespace

TEST_CASE("field mode names") {
  CHECK(std::string(field_mode_name(FieldMode::rational)) == "exact-rational");
  CHECK(std::string(field_mode_name(FieldMode::gaussian_rational)) ==
        "gaussian-rational");
  CHECK(std::string(field_mode_name(FieldMode::complex_float)) ==
        "complex-float");
  CHECK(field_mode_from_name("complex-float") == FieldMode::complex_float);
  CHECK_THROWS_AS(field_mode_from_name("float"), input_error);
}

TEST_CASE("equality policy validation") {
  auto p = EqualityPolicy::tolerance(1e-6);
  CHECK(!p.is_exact());
  CHECK(p.epsilon == doctest::Approx(1e-6));
  CHECK(EqualityPolicy::exact().is_exact());
  CHECK_THROWS_AS(EqualityPolicy::tolerance(0.0), input_error);
  CHECK_THROWS_AS(EqualityPolicy::tolerance(-1e-9), input_error);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("0") == 0);
  CHECK(parse_rational("-0") == 0);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational(" 12/8 ") == Rational(3, 2));
  CHECK(parse_rational("+5/3") == Rational(5, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), input_error);
  CHECK_THROWS_AS(parse_rational("abc"), input_error);
  CHECK_THROWS_AS(parse_rational(""), input_error);
  CHECK_THROWS_AS(parse_rational("1 /2"), input_error);
  CHECK_THROWS_AS(parse_rational("1/2/3"), input_error);
  CHECK_THROWS_AS(parse_rational("1.5"), input_error);
  CHECK_THROWS_AS(parse_rational("2+i"), input_error);
}

TEST_CASE("rational formatting is canonical") {
  CHECK(format_scalar(Rational(3, 2)) == "3/2");
  CHECK(format_scalar(Rational(-1, 2)) == "-1/2");
  CHECK(format_scalar(Rational(5)) == "5");
  CHECK(format_scalar(Rational(0)) == "0");
  Rational q(6, -4);
  q.canonicalize();
  CHECK(format_scalar(q) == "-3/2");
}

TEST_CASE("gaussian rational parsing") {
  CHECK(parse_gaussian("1/2+1/3i") == GaussianRational(Rational(1, 2), Rational(1, 3)));
  CHECK(parse_gaussian("-i") == GaussianRational(0, -1));
  CHECK(parse_gaussian("i") == GaussianRational(0, 1));
  CHECK(parse_gaussian("+i") == GaussianRational(0, 1));
  CHECK(parse_gaussian("3i") == GaussianRational(0, 3));
  CHECK(parse_gaussian("1-2i") == GaussianRational(1, -2));
  CHECK(parse_gaussian("1/2") == GaussianRational(Rational(1, 2), 0));
  CHECK(parse_gaussian("2+0i") == GaussianRational(2, 0));
  CHECK(parse_gaussian("-2/4i") == GaussianRational(0, Rational(-1, 2)));
  CHECK_THROWS_AS(parse_gaussian("i+1"), input_error);
  CHECK_THROWS_AS(parse_gaussian("1+2"), input_error);
  CHECK_THROWS_AS(parse_gaussian("1+i+2"), input_error);
  CHECK_THROWS_AS(parse_gaussian("1/0i"), input_error);
  CHECK_THROWS_AS(parse_gaussian(""), input_error);
  CHECK_THROWS_AS(parse_gaussian("2.5i"), input_error);
}

TEST_CASE("gaussian formatting") {
  CHECK(format_scalar(GaussianRational(Rational(1, 2), Rational(1, 3))) == "1/2+1/3i");
  CHECK(format_scalar(GaussianRational(0, -1)) == "-1i");
  CHECK(format_scalar(GaussianRational(2, 0)) == "2");
  CHECK(format_scalar(GaussianRational(0, 0)) == "0");
  CHECK(format_scalar(GaussianRational(-1, Rational(-3, 2))) == "-1-3/2i");
}

TEST_CASE("gaussian parse format round trip") {
  std::mt19937 rng(41);
  for (int k = 0; k < 200; ++k) {
    GaussianRational z = random_gaussian(rng);
    CHECK(parse_gaussian(format_scalar(z)) == z);
  }
}

TEST_CASE("complex parsing and formatting") {
  using C = std::complex<double>;
  CHECK(parse_complex("1.5-2.25i") == C(1.5, -2.25));
  CHECK(parse_complex("3") == C(3.0, 0.0));
  CHECK(parse_complex("0.5i") == C(0.0, 0.5));
  CHECK(parse_complex("1e-3+2i") == C(1e-3, 2.0));
  CHECK(parse_complex("i") == C(0.0, 1.0));
  CHECK(parse_complex("-i") == C(0.0, -1.0));
  CHECK_THROWS_AS(parse_complex("nan"), input_error);
  CHECK_THROWS_AS(parse_complex("1+"), input_error);
  CHECK_THROWS_AS(parse_complex("i2"), input_error);

  CHECK(format_scalar(C(3.0, 0.0)) == "3");
  CHECK(format_scalar(C(0.0, 1.0)) == "1i");  // pure imaginary, like gaussian

  std::mt19937 rng(42);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int k = 0; k < 200; ++k) {
    C z(dist(rng), dist(rng));
    CHECK(parse_complex(format_scalar(z)) == z);  // exact round trip
  }
  C third(1.0 / 3.0, -2.0 / 7.0);
  CHECK(parse_complex(format_scalar(third)) == third);
}

TEST_CASE("parse errors report the offending position") {
  try {
    parse_rational("12x");
    FAIL("expected input_error");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("offset") != std::string::npos);
  }
}

TEST_CASE("gaussian arithmetic") {
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1, 0));
  GaussianRational z(1, 1);
  CHECK(z / z == GaussianRational(1, 0));
  CHECK(GaussianRational(2, 3) / GaussianRational(1, -1) ==
        GaussianRational(Rational(-1, 2), Rational(5, 2)));
  CHECK(z - z == GaussianRational(0, 0));
  CHECK(-z == GaussianRational(-1, -1));
  CHECK(z.norm() == Rational(2));
  CHECK_THROWS_AS(z / GaussianRational(0, 0), input_error);
}

TEST_CASE("gaussian algebraic laws on random values") {
  std::mt19937 rng(43);
  for (int k = 0; k < 100; ++k) {
    GaussianRational a = random_gaussian(rng);
    GaussianRational b = random_gaussian(rng);
    GaussianRational c = random_gaussian(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(conjugate(conjugate(a)) == a);
    CHECK(conjugate(a + b) == conjugate(a) + conjugate(b));
    CHECK(conjugate(a * b) == conjugate(a) * conjugate(b));
    CHECK((a * b).norm() == a.norm() * b.norm());
  }
}

TEST_CASE("conjugate overloads") {
  CHECK(conjugate(Rational(3, 2)) == Rational(3, 2));
  CHECK(conjugate(std::complex<double>(1.0, 2.0)) ==
        std::complex<double>(1.0, -2.0));
}

TEST_CASE("is_zero under policies") {
  auto exact = EqualityPolicy::exact();
  auto tol = EqualityPolicy::tolerance(1e-9);
  CHECK(is_zero(Rational(0), exact));
  CHECK(!is_zero(Rational(1, 1000000000), exact));
  CHECK(is_zero(GaussianRational(0, 0), exact));
  CHECK(!is_zero(GaussianRational(0, Rational(1, 7)), exact));
  CHECK(is_zero(std::complex<double>(1e-12, 0.0), tol));
  CHECK(!is_zero(std::complex<double>(1e-3, 0.0), tol));
  CHECK(is_zero(std::complex<double>(1e-6, 0.0), tol, 1e5));  // scaled
  CHECK_THROWS_AS(is_zero(std::complex<double>(0.0, 0.0), exact),
                  internal_error);
}

TEST_CASE("scalars_equal") {
  auto tol = EqualityPolicy::tolerance(1e-9);
  CHECK(scalars_equal(Rational(1, 2), parse_rational("2/4"),
                      EqualityPolicy::exact()));
  CHECK(scalars_equal(std::complex<double>(1.0, 0.0),
                      std::complex<double>(1.0 + 1e-13, 0.0), tol));
  CHECK(!scalars_equal(std::complex<double>(1.0, 0.0),
                       std::complex<double>(1.1, 0.0), tol));
}

TEST_CASE("checked_div") {
  CHECK(checked_div(Rational(1), Rational(4)) == Rational(1, 4));
  CHECK_THROWS_AS(checked_div(Rational(1), Rational(0)), input_error);
  CHECK_THROWS_AS(checked_div(GaussianRational(1, 0), GaussianRational(0, 0)),
                  input_error);
  CHECK_THROWS_AS(checked_div(std::complex<double>(1.0, 0.0),
                              std::complex<double>(0.0, 0.0)),
                  input_error);
}

TEST_CASE("scalar_pow") {
  CHECK(scalar_pow(Rational(1, 2), 3) == Rational(1, 8));
  CHECK(scalar_pow(Rational(5), 0) == Rational(1));
  CHECK(scalar_pow(GaussianRational::i(), 3) == GaussianRational(0, -1));
  CHECK_THROWS_AS(scalar_pow(Rational(2), -1), input_error);
}

TEST_CASE("nth root of unity check") {
  auto exact = EqualityPolicy::exact();
  auto tol = EqualityPolicy::tolerance(1e-9);
  CHECK(nth_root_of_unity_check(Rational(-1), 2, exact));
  CHECK(!nth_root_of_unity_check(Rational(-1), 3, exact));
  CHECK(nth_root_of_unity_check(Rational(1), 1, exact));
  CHECK(nth_root_of_unity_check(GaussianRational::i(), 4, exact));
  CHECK(!nth_root_of_unity_check(GaussianRational(2, 0), 4, exact));
  std::complex<double> w = std::polar(1.0, 2.0 * 3.14159265358979323846 / 3.0);
  CHECK(nth_root_of_unity_check(w, 3, tol));
  CHECK(!nth_root_of_unity_check(std::complex<double>(1.1, 0.0), 5, tol));
  CHECK_THROWS_AS(nth_root_of_unity_check(Rational(1), 0, exact), input_error);
}

TEST_CASE("field traits") {
  CHECK(field_traits<Rational>::mode == FieldMode::rational);
  CHECK(field_traits<GaussianRational>::mode == FieldMode::gaussian_rational);
  CHECK(field_traits<std::complex<double>>::mode == FieldMode::complex_float);
  CHECK(field_traits<Rational>::default_policy().is_exact());
  CHECK(!field_traits<std::complex<double>>::default_policy().is_exact());
  CHECK(field_traits<GaussianRational>::from_mpq(Rational(2, 3)) ==
        GaussianRational(Rational(2, 3), 0));
  CHECK(field_traits<std::complex<double>>::from_mpq(Rational(1, 2)) ==
        std::complex<double>(0.5, 0.0));
  CHECK(parse_scalar<Rational>("5/6") == Rational(5, 6));
  CHECK(parse_scalar<GaussianRational>("1+i") == GaussianRational(1, 1));
  CHECK(parse_scalar<std::complex<double>>("2.5") ==
        std::complex<double>(2.5, 0.0));
}
