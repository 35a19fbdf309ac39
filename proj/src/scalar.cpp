#include "mvk/scalar.hpp"

#include <cctype>
#include <charconv>

namespace mvk {

const char* field_mode_name(FieldMode m) {
  switch (m) {
    case FieldMode::rational: return "exact-rational";
    case FieldMode::gaussian_rational: return "gaussian-rational";
    case FieldMode::complex_float: return "complex-float";
  }
  throw internal_error("unknown field mode");
}

FieldMode field_mode_from_name(std::string_view name) {
  if (name == "exact-rational") return FieldMode::rational;
  if (name == "gaussian-rational") return FieldMode::gaussian_rational;
  if (name == "complex-float") return FieldMode::complex_float;
  throw input_error("unknown field mode '" + std::string(name) +
                    "' (expected exact-rational, gaussian-rational or "
                    "complex-float)");
}

EqualityPolicy EqualityPolicy::tolerance(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw input_error("tolerance must be a positive finite number");
  return {Mode::tolerance, eps};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.norm();
  if (n == 0) throw input_error("division by zero");
  // z/w = z * conj(w) / |w|^2
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

double to_double(const Rational& q) { return mpq_get_d(q.get_mpq_t()); }

std::complex<double> field_traits<std::complex<double>>::from_mpq(
    const mpq_class& q) {
  return {to_double(q), 0.0};
}

bool is_zero(const Rational& s, const EqualityPolicy& p, double scale) {
  if (p.is_exact()) return sgn(s) == 0;
  return abs_value(s) <= p.epsilon * scale;
}

bool is_zero(const GaussianRational& s, const EqualityPolicy& p, double scale) {
  if (p.is_exact()) return sgn(s.real()) == 0 && sgn(s.imag()) == 0;
  return abs_value(s) <= p.epsilon * scale;
}

bool is_zero(const std::complex<double>& s, const EqualityPolicy& p,
             double scale) {
  if (p.is_exact())
    throw internal_error("exact equality policy applied to a floating scalar");
  return std::abs(s) <= p.epsilon * scale;
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  bool eof() const { return pos >= s.size(); }
  char peek() const { return eof() ? '\0' : s[pos]; }
  char take() { return s[pos++]; }
};

[[noreturn]] void fail(const Cursor& c, const std::string& what) {
  throw input_error("scalar parse error in '" + std::string(c.s) +
                    "' at offset " + std::to_string(c.pos) + ": " + what);
}

std::string_view trimmed(std::string_view t) {
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front())))
    t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back())))
    t.remove_suffix(1);
  return t;
}

int parse_sign(Cursor& c) {
  if (c.peek() == '+') {
    c.take();
    return 1;
  }
  if (c.peek() == '-') {
    c.take();
    return -1;
  }
  return 1;
}

mpz_class parse_digits(Cursor& c) {
  std::size_t start = c.pos;
  while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) c.take();
  if (c.pos == start) fail(c, "expected digits");
  return mpz_class(std::string(c.s.substr(start, c.pos - start)), 10);
}

struct RationalTerm {
  Rational value;
  bool imaginary = false;
};

// [+|-] ( i | digits [/digits] [i] )
RationalTerm parse_rational_term(Cursor& c, bool allow_imag) {
  int sign = parse_sign(c);
  if (c.peek() == 'i') {
    if (!allow_imag) fail(c, "'i' is not a rational");
    c.take();
    return {Rational(sign), true};
  }
  mpz_class num = parse_digits(c);
  mpz_class den(1);
  if (c.peek() == '/') {
    c.take();
    den = parse_digits(c);
    if (den == 0) fail(c, "zero denominator");
  }
  bool imag = false;
  if (c.peek() == 'i') {
    if (!allow_imag) fail(c, "'i' is not allowed here");
    c.take();
    imag = true;
  }
  Rational q(num, den);
  q.canonicalize();
  if (sign < 0) q = -q;
  return {q, imag};
}

struct DoubleTerm {
  double value = 0.0;
  bool imaginary = false;
};

// [+|-] ( i | decimal-literal [i] )
DoubleTerm parse_double_term(Cursor& c) {
  int sign = parse_sign(c);
  if (c.peek() == 'i') {
    c.take();
    return {static_cast<double>(sign), true};
  }
  const char* begin = c.s.data() + c.pos;
  const char* end = c.s.data() + c.s.size();
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr == begin) fail(c, "expected a decimal number");
  if (!std::isfinite(v)) fail(c, "value must be finite");
  c.pos += static_cast<std::size_t>(ptr - begin);
  bool imag = false;
  if (c.peek() == 'i') {
    c.take();
    imag = true;
  }
  return {sign * v, imag};
}

}  // namespace

Rational parse_rational(std::string_view text) {
  Cursor c{trimmed(text)};
  if (c.eof()) fail(c, "empty scalar");
  RationalTerm t = parse_rational_term(c, /*allow_imag=*/false);
  if (!c.eof()) fail(c, "trailing characters");
  return t.value;
}

GaussianRational parse_gaussian(std::string_view text) {
  Cursor c{trimmed(text)};
  if (c.eof()) fail(c, "empty scalar");
  RationalTerm first = parse_rational_term(c, /*allow_imag=*/true);
  if (c.eof())
    return first.imaginary ? GaussianRational(Rational(0), first.value)
                           : GaussianRational(first.value);
  if (first.imaginary) fail(c, "imaginary component must come last");
  if (c.peek() != '+' && c.peek() != '-') fail(c, "expected '+' or '-'");
  RationalTerm second = parse_rational_term(c, /*allow_imag=*/true);
  if (!second.imaginary) fail(c, "second component must carry an 'i' suffix");
  if (!c.eof()) fail(c, "trailing characters");
  return {first.value, second.value};
}

std::complex<double> parse_complex(std::string_view text) {
  Cursor c{trimmed(text)};
  if (c.eof()) fail(c, "empty scalar");
  DoubleTerm first = parse_double_term(c);
  if (c.eof())
    return first.imaginary ? std::complex<double>(0.0, first.value)
                           : std::complex<double>(first.value, 0.0);
  if (first.imaginary) fail(c, "imaginary component must come last");
  if (c.peek() != '+' && c.peek() != '-') fail(c, "expected '+' or '-'");
  DoubleTerm second = parse_double_term(c);
  if (!second.imaginary) fail(c, "second component must carry an 'i' suffix");
  if (!c.eof()) fail(c, "trailing characters");
  return {first.value, second.value};
}

namespace {

std::string double_str(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw internal_error("double formatting failed");
  return std::string(buf, ptr);
}

}  // namespace

std::string format_scalar(const Rational& s) { return s.get_str(); }

std::string format_scalar(const GaussianRational& s) {
  if (sgn(s.imag()) == 0) return s.real().get_str();
  std::string im = s.imag().get_str() + "i";
  if (sgn(s.real()) == 0) return im;
  std::string out = s.real().get_str();
  if (sgn(s.imag()) > 0) out += '+';
  return out + im;
}

std::string format_scalar(const std::complex<double>& s) {
  const double re = s.real(), im = s.imag();
  if (im == 0.0) return double_str(re);
  std::string imtxt = double_str(im) + "i";
  if (re == 0.0) return imtxt;
  std::string out = double_str(re);
  if (!(im < 0.0) && imtxt[0] != '-') out += '+';
  return out + imtxt;
}

}  // namespace mvk
