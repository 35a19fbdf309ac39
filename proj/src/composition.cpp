#include "mvk/composition.hpp"

namespace mvk {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw input_error("composition must be nonempty");
  degree_ = 0;
  for (int p : parts_) {
    if (p < 0) throw input_error("composition parts must be nonnegative");
    degree_ += p;
  }
}

Composition Composition::zero(int n) {
  if (n < 1) throw input_error("composition length must be positive");
  return Composition(std::vector<int>(n, 0));
}

std::string Composition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ']';
  return s;
}

std::size_t CompositionHash::operator()(const Composition& c) const {
  std::size_t h = 1469598103934665603ull;  // FNV-1a over the parts
  for (int p : c.parts()) {
    h ^= static_cast<std::size_t>(p);
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

void fill_compositions(int pos, int n, int remaining, std::vector<int>& cur,
                       std::vector<Composition>& out) {
  if (pos == n - 1) {
    cur[static_cast<std::size_t>(pos)] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[static_cast<std::size_t>(pos)] = v;
    fill_compositions(pos + 1, n, remaining - v, cur, out);
  }
}

}  // namespace

std::vector<Composition> enumerate_compositions(int n, int N) {
  if (n < 1) throw input_error("composition length must be positive");
  if (N < 0) throw input_error("composition degree must be nonnegative");
  std::vector<Composition> out;
  mpz_class count = binomial(static_cast<unsigned long>(N + n - 1),
                             static_cast<unsigned long>(n - 1));
  if (count.fits_ulong_p()) out.reserve(count.get_ui());
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  fill_compositions(0, n, N, cur, out);
  return out;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class multinomial(int N, const Composition& x) {
  if (x.size() < 1) throw input_error("multinomial needs a nonempty composition");
  if (x.degree() != N)
    throw input_error("multinomial: composition parts must sum to N");
  mpz_class r(1);
  int rem = N;
  for (int i = 0; i < x.size(); ++i) {
    r *= binomial(static_cast<unsigned long>(rem),
                  static_cast<unsigned long>(x[i]));
    rem -= x[i];
  }
  return r;
}

mpz_class falling_factorial(long t, long k) {
  if (k < 0) throw input_error("falling factorial order must be nonnegative");
  mpz_class r(1);
  for (long j = 0; j < k; ++j) r *= mpz_class(t - j);
  return r;
}

bool verify_multinomial_pochhammer_identity(int N, const Composition& p,
                                            const Composition& m,
                                            const Composition& z) {
  const int n = m.size();
  if (p.size() != n || z.size() != n)
    throw input_error("identity check: composition lengths must agree");
  if (m.degree() != N) throw input_error("identity check: |m| must equal N");
  if (p.degree() > N) throw input_error("identity check: |p| must not exceed N");
  if (z.degree() != N - p.degree())
    throw input_error("identity check: |z| must equal N - |p|");
  for (int i = 0; i < n; ++i)
    if (m[i] < z[i])
      throw input_error("identity check: m - z must be nonnegative");

  mpz_class lhs = multinomial(N - p.degree(), z);

  // (-t)_k = (-1)^k * t (t-1) ... (t-k+1)
  mpz_class num = multinomial(N, m);
  long sign_parity = 0;
  for (int i = 0; i < n; ++i) {
    long k = m[i] - z[i];
    num *= falling_factorial(m[i], k);
    sign_parity += k;
  }
  mpz_class den = falling_factorial(N, p.degree());
  sign_parity += p.degree();  // sign of (-N)_|p| joins the numerator signs
  if (sign_parity % 2 != 0) num = -num;

  mpq_class rhs(num, den);
  rhs.canonicalize();
  return mpq_class(lhs) == rhs;
}

}  // namespace mvk
