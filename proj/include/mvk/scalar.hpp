#ifndef MVK_SCALAR_HPP
#define MVK_SCALAR_HPP

#include <cmath>
#include <complex>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "mvk/errors.hpp"

namespace mvk {

// Exact rational scalar.  mpq_class keeps values in lowest terms with a
// positive denominator after every operation.
using Rational = mpq_class;

enum class FieldMode { rational, gaussian_rational, complex_float };

const char* field_mode_name(FieldMode m);  // "exact-rational", ...
FieldMode field_mode_from_name(std::string_view name);

inline constexpr double kDefaultEpsilon = 1e-9;

// Equality semantics: structural comparison for exact fields, |.| <= eps*scale
// for floating point.  Exact mode on a floating scalar is a programming error.
struct EqualityPolicy {
  enum class Mode { exact, tolerance };
  Mode mode = Mode::exact;
  double epsilon = 0.0;

  static EqualityPolicy exact() { return {Mode::exact, 0.0}; }
  static EqualityPolicy tolerance(double eps);
  bool is_exact() const { return mode == Mode::exact; }
};

// Element of Q(i) with exact rational components.
class GaussianRational {
public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(int v) : re_(v), im_(0) {}
  GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  Rational norm() const { return re_ * re_ + im_ * im_; }  // |z|^2, exact

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
    a += b;
    return a;
  }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
    a -= b;
    return a;
  }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
    a *= b;
    return a;
  }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) {
    a /= b;
    return a;
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

private:
  Rational re_, im_;
};

inline Rational conjugate(const Rational& s) { return s; }
inline GaussianRational conjugate(const GaussianRational& s) {
  return {s.real(), -s.imag()};
}
inline std::complex<double> conjugate(const std::complex<double>& s) {
  return std::conj(s);
}

double to_double(const Rational& q);

// |s| as a double; for reporting and pivot selection, never for exact verdicts.
inline double abs_value(const Rational& s) { return std::fabs(to_double(s)); }
inline double abs_value(const GaussianRational& s) {
  return std::sqrt(to_double(s.norm()));
}
inline double abs_value(const std::complex<double>& s) { return std::abs(s); }

bool is_zero(const Rational& s, const EqualityPolicy& p, double scale = 1.0);
bool is_zero(const GaussianRational& s, const EqualityPolicy& p, double scale = 1.0);
bool is_zero(const std::complex<double>& s, const EqualityPolicy& p,
             double scale = 1.0);

template <class S>
bool scalars_equal(const S& a, const S& b, const EqualityPolicy& p,
                   double scale = 1.0) {
  return is_zero(a - b, p, scale);
}

// Division with an explicit zero-divisor check; raw operator/ on mpq_class
// would trap at the GMP level instead of reporting.
template <class S>
S checked_div(const S& a, const S& b) {
  if (b == S(0)) throw input_error("division by zero");
  return a / b;
}

template <class S>
S scalar_pow(const S& base, int k) {
  if (k < 0) throw input_error("scalar_pow exponent must be nonnegative");
  S acc(1);
  for (int j = 0; j < k; ++j) acc *= base;
  return acc;
}

// z^N == 1 under the policy; tolerance mode additionally requires the
// magnitude itself to sit within eps of 1.
template <class S>
bool nth_root_of_unity_check(const S& z, int N, const EqualityPolicy& policy) {
  if (N < 1) throw input_error("root-of-unity order must be positive");
  if (!policy.is_exact() && std::fabs(abs_value(z) - 1.0) > policy.epsilon)
    return false;
  return is_zero(scalar_pow(z, N) - S(1), policy, 1.0);
}

template <class S>
struct field_traits;

template <>
struct field_traits<Rational> {
  static constexpr FieldMode mode = FieldMode::rational;
  static Rational from_mpz(const mpz_class& z) { return Rational(z); }
  static Rational from_mpq(const mpq_class& q) { return q; }
  static EqualityPolicy default_policy() { return EqualityPolicy::exact(); }
};

template <>
struct field_traits<GaussianRational> {
  static constexpr FieldMode mode = FieldMode::gaussian_rational;
  static GaussianRational from_mpz(const mpz_class& z) {
    return GaussianRational(Rational(z));
  }
  static GaussianRational from_mpq(const mpq_class& q) {
    return GaussianRational(q);
  }
  static EqualityPolicy default_policy() { return EqualityPolicy::exact(); }
};

template <>
struct field_traits<std::complex<double>> {
  static constexpr FieldMode mode = FieldMode::complex_float;
  static std::complex<double> from_mpz(const mpz_class& z) {
    return {z.get_d(), 0.0};
  }
  static std::complex<double> from_mpq(const mpq_class& q);
  static EqualityPolicy default_policy() {
    return EqualityPolicy::tolerance(kDefaultEpsilon);
  }
};

// Text grammar, locale independent.
//   rational:  p or p/q with integer p, q
//   gaussian:  a, bi, or a+bi / a-bi with rational components ("i" alone is 1i)
//   complex:   same shape with decimal floating components
Rational parse_rational(std::string_view text);
GaussianRational parse_gaussian(std::string_view text);
std::complex<double> parse_complex(std::string_view text);

std::string format_scalar(const Rational& s);
std::string format_scalar(const GaussianRational& s);
std::string format_scalar(const std::complex<double>& s);

template <class S>
S parse_scalar(std::string_view text);

template <>
inline Rational parse_scalar<Rational>(std::string_view t) {
  return parse_rational(t);
}
template <>
inline GaussianRational parse_scalar<GaussianRational>(std::string_view t) {
  return parse_gaussian(t);
}
template <>
inline std::complex<double> parse_scalar<std::complex<double>>(
    std::string_view t) {
  return parse_complex(t);
}

}  // namespace mvk

#endif
