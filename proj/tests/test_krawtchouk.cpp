#include <doctest.h>

#include <mvk/krawtchouk.hpp>

#include "test_support.hpp"

#include <complex>
#include <random>

using namespace mvk;
using mvk::testing::hadamard_parameters;
using mvk::testing::random_parameter_matrix;

TEST_CASE("parameter matrix border is enforced") {
  CHECK_THROWS_AS(ParameterMatrix<Rational>(Matrix<Rational>{
                      {Rational(1), Rational(2)}, {Rational(1), Rational(1)}}),
                  input_error);
  CHECK_THROWS_AS(ParameterMatrix<Rational>(Matrix<Rational>{
                      {Rational(1), Rational(1)}, {Rational(0), Rational(1)}}),
                  input_error);
  CHECK_THROWS_AS(ParameterMatrix<Rational>(Matrix<Rational>(2, 3, Rational(1))),
                  input_error);
  CHECK(ParameterMatrix<Rational>().dim() == 1);
}

TEST_CASE("parameter matrix from_inner and edits") {
  Matrix<Rational> inner(1, 1, Rational(-1));
  auto A0 = ParameterMatrix<Rational>::from_inner(inner);
  CHECK(A0.dim() == 2);
  CHECK(A0.at(0, 0) == Rational(1));
  CHECK(A0.at(0, 1) == Rational(1));
  CHECK(A0.at(1, 0) == Rational(1));
  CHECK(A0.at(1, 1) == Rational(-1));
  auto B = A0.with_inner_entry(1, 1, Rational(5));
  CHECK(B.at(1, 1) == Rational(5));
  CHECK(A0.at(1, 1) == Rational(-1));  // original untouched
  CHECK_THROWS_AS(A0.with_inner_entry(0, 1, Rational(2)), input_error);
  auto T = ParameterMatrix<Rational>::from_inner(
               Matrix<Rational>{{Rational(2), Rational(3)},
                                {Rational(4), Rational(5)}})
               .transposed();
  CHECK(T.at(1, 2) == Rational(4));
  CHECK(T.at(2, 1) == Rational(3));
}

TEST_CASE("generating expansion of a single factor") {
  auto H = hadamard_parameters();
  // x = (1,0): expansion of t0 + t1
  auto e = generating_expansion(H, Composition({1, 0}));
  REQUIRE(e.size() == 2);
  CHECK(e.at(Composition({1, 0})) == Rational(1));
  CHECK(e.at(Composition({0, 1})) == Rational(1));
  // x = (0,1): expansion of t0 - t1
  auto f = generating_expansion(H, Composition({0, 1}));
  CHECK(f.at(Composition({0, 1})) == Rational(-1));
}

TEST_CASE("generating expansion drops bounded monomials") {
  auto H = hadamard_parameters();
  Composition bound({2, 0});
  auto e = generating_expansion(H, Composition({1, 1}), &bound);
  // only t0^2 survives the bound
  REQUIRE(e.size() == 1);
  CHECK(e.at(Composition({2, 0})) == Rational(1));
}

TEST_CASE("phi values for the sign matrix") {
  auto H = hadamard_parameters();
  Composition x({1, 1});
  CHECK(phi_generating(H, x, Composition({2, 0})) == Rational(1));
  CHECK(phi_generating(H, x, Composition({1, 1})) == Rational(0));
  CHECK(phi_generating(H, x, Composition({0, 2})) == Rational(-1));
  CHECK(phi_hypergeometric(H, x, Composition({2, 0})) == Rational(1));
  CHECK(phi_hypergeometric(H, x, Composition({1, 1})) == Rational(0));
  CHECK(phi_hypergeometric(H, x, Composition({0, 2})) == Rational(-1));
}

TEST_CASE("phi argument validation") {
  auto H = hadamard_parameters();
  CHECK_THROWS_AS(phi_generating(H, Composition({1, 1}), Composition({1, 0})),
                  input_error);
  CHECK_THROWS_AS(phi_generating(H, Composition({1, 1, 0}), Composition({2, 0})),
                  input_error);
  CHECK_THROWS_AS(
      phi_hypergeometric(H, Composition({1, 1}), Composition({3, 0})),
      input_error);
}

TEST_CASE("phi table canonical layout") {
  auto H = hadamard_parameters();
  auto t = phi_table(H, 2, PhiMethod::generating);
  CHECK(t.n == 2);
  CHECK(t.N == 2);
  REQUIRE(t.size() == 3);
  CHECK(t.order[0] == Composition({2, 0}));
  // row x = (1,1)
  int r = t.index_of(Composition({1, 1}));
  CHECK(r == 1);
  CHECK(t.at(r, 0) == Rational(1));
  CHECK(t.at(r, 1) == Rational(0));
  CHECK(t.at(r, 2) == Rational(-1));
  // first row and first column are all ones
  for (int c = 0; c < t.size(); ++c) CHECK(t.at(0, c) == Rational(1));
  for (int rr = 0; rr < t.size(); ++rr) CHECK(t.at(rr, 0) == Rational(1));
  CHECK_THROWS_AS(t.index_of(Composition({3, 0})), input_error);
  CHECK_THROWS_AS(phi_table(H, -1, PhiMethod::generating), input_error);
}

TEST_CASE("level zero and level one tables") {
  std::mt19937 rng(7);
  auto A0 = random_parameter_matrix<Rational>(3, rng);
  auto t0 = phi_table(A0, 0, PhiMethod::hypergeometric);
  REQUIRE(t0.size() == 1);
  CHECK(t0.at(0, 0) == Rational(1));
  // at level one the table reproduces the parameter matrix itself
  auto t1 = phi_table(A0, 1, PhiMethod::generating);
  REQUIRE(t1.size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(t1.at(i, j) == A0.at(i, j));
}

TEST_CASE("the two evaluators agree on random exact instances") {
  std::mt19937 rng(11);
  for (int n = 2; n <= 3; ++n) {
    for (int N = 1; N <= 4; ++N) {
      for (int trial = 0; trial < 3; ++trial) {
        auto A0 = random_parameter_matrix<Rational>(n, rng);
        auto g = phi_table(A0, N, PhiMethod::generating);
        auto h = phi_table(A0, N, PhiMethod::hypergeometric);
        CHECK(g.values == h.values);
      }
    }
  }
}

TEST_CASE("the two evaluators agree on a gaussian instance") {
  Matrix<GaussianRational> inner{
      {GaussianRational::i(), GaussianRational(1, -1)},
      {GaussianRational(0, 0), GaussianRational(Rational(1, 2), Rational(1, 3))}};
  auto A0 = ParameterMatrix<GaussianRational>::from_inner(inner);
  auto g = phi_table(A0, 3, PhiMethod::generating);
  auto h = phi_table(A0, 3, PhiMethod::hypergeometric);
  CHECK(g.values == h.values);
}

TEST_CASE("the two evaluators agree on a floating instance") {
  using C = std::complex<double>;
  Matrix<C> inner{{C(0.25, 0.5), C(-1.0, 0.0)}, {C(0.0, -0.75), C(2.0, 1.0)}};
  auto A0 = ParameterMatrix<C>::from_inner(inner);
  auto g = phi_table(A0, 3, PhiMethod::generating);
  auto h = phi_table(A0, 3, PhiMethod::hypergeometric);
  REQUIRE(g.values.size() == h.values.size());
  for (std::size_t i = 0; i < g.values.size(); ++i)
    CHECK(std::abs(g.values[i] - h.values[i]) < 1e-9);
}

TEST_CASE("duality against the transposed matrix") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    auto A0 = random_parameter_matrix<Rational>(3, rng);
    auto t = phi_table(A0, 3, PhiMethod::generating);
    auto td = phi_table(A0.transposed(), 3, PhiMethod::generating);
    for (int r = 0; r < t.size(); ++r)
      for (int c = 0; c < t.size(); ++c) CHECK(t.at(r, c) == td.at(c, r));
  }
}

TEST_CASE("generating identity at a scalar point") {
  // sum_m multinomial(N,m) phi(x;m) tau^m equals the factored product at tau
  std::mt19937 rng(17);
  const int n = 3, N = 3;
  auto A0 = random_parameter_matrix<Rational>(n, rng);
  std::vector<Rational> tau = {Rational(1, 2), Rational(-1), Rational(2)};
  auto t = phi_table(A0, N, PhiMethod::generating);
  for (int r = 0; r < t.size(); ++r) {
    const Composition& x = t.order[static_cast<std::size_t>(r)];
    Rational lhs(0);
    for (int c = 0; c < t.size(); ++c) {
      const Composition& m = t.order[static_cast<std::size_t>(c)];
      Rational term = Rational(multinomial(N, m)) * t.at(r, c);
      for (int j = 0; j < n; ++j) term *= scalar_pow(tau[static_cast<std::size_t>(j)], m[j]);
      lhs += term;
    }
    Rational rhs(1);
    for (int i = 0; i < n; ++i) {
      Rational row(0);
      for (int j = 0; j < n; ++j)
        row += A0.at(i, j) * tau[static_cast<std::size_t>(j)];
      rhs *= scalar_pow(row, x[i]);
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("tables are identical for any worker count") {
  using C = std::complex<double>;
  Matrix<C> inner{{C(0.3, 0.7), C(-0.2, 0.1)}, {C(1.5, -0.4), C(0.0, 1.0)}};
  auto A0 = ParameterMatrix<C>::from_inner(inner);
  for (auto method : {PhiMethod::generating, PhiMethod::hypergeometric}) {
    auto serial = phi_table(A0, 4, method, 1);
    auto parallel = phi_table(A0, 4, method, 4);
    CHECK(serial.values == parallel.values);  // bitwise equality
  }
}

TEST_CASE("hypergeometric series worked example") {
  // single inner cell, a_11 = -1, so 1 - a_11 = 2; x = (1,1) caps the cell
  // count at 1 and the series has exactly two terms
  auto H = hadamard_parameters();
  // m = (0,2): 1 + (-1)(-2)/(-2) * 2 = 1 - 2
  CHECK(phi_hypergeometric(H, Composition({1, 1}), Composition({0, 2})) ==
        Rational(-1));
  // m = (1,1): 1 + (-1)(-1)/(-2) * 2 = 1 - 1
  CHECK(phi_hypergeometric(H, Composition({1, 1}), Composition({1, 1})) ==
        Rational(0));
}
