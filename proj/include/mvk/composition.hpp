#ifndef MVK_COMPOSITION_HPP
#define MVK_COMPOSITION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mvk/errors.hpp"

namespace mvk {

// Ordered tuple of nonnegative integers.  X(n,N) = { x : len(x) = n, |x| = N }
// indexes both arguments of phi; the same type doubles as a monomial exponent
// vector during series expansion.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  static Composition zero(int n);

  int size() const { return static_cast<int>(parts_.size()); }
  int degree() const { return degree_; }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& parts() const { return parts_; }

  std::string to_string() const;  // "[1,0,2]"

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Composition& a, const Composition& b) {
    return !(a == b);
  }
  // lexicographic on the parts vector; gives maps a deterministic order
  friend bool operator<(const Composition& a, const Composition& b) {
    return a.parts_ < b.parts_;
  }

private:
  std::vector<int> parts_;
  int degree_ = 0;
};

struct CompositionHash {
  std::size_t operator()(const Composition& c) const;
};

// All of X(n,N) in lexicographically decreasing order: (N,0,...,0) first,
// (0,...,0,N) last.  This is the canonical row/column order everywhere.
std::vector<Composition> enumerate_compositions(int n, int N);

mpz_class binomial(unsigned long n, unsigned long k);

// N! / (x_0! ... x_{n-1}!), exact; requires |x| == N.
mpz_class multinomial(int N, const Composition& x);

// t (t-1) ... (t-k+1); zero once k exceeds a nonnegative t.
mpz_class falling_factorial(long t, long k);

// Rising factorial (a)_k over any commutative ring scalar.
template <class S>
S pochhammer(const S& a, int k) {
  if (k < 0) throw input_error("pochhammer order must be nonnegative");
  S acc(1);
  for (int j = 0; j < k; ++j) acc *= a + S(j);
  return acc;
}

// Exact check of the contraction identity behind the series evaluator:
//   binom(N-|p|; z) == binom(N; m) * prod_i (-m_i)_(m_i - z_i) / (-N)_|p|
// for |m| = N, |z| = N - |p|, m - z >= 0 componentwise.
bool verify_multinomial_pochhammer_identity(int N, const Composition& p,
                                            const Composition& m,
                                            const Composition& z);

}  // namespace mvk

#endif
