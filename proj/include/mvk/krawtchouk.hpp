#ifndef MVK_KRAWTCHOUK_HPP
#define MVK_KRAWTCHOUK_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "mvk/composition.hpp"
#include "mvk/matrix.hpp"
#include "mvk/parallel.hpp"
#include "mvk/scalar.hpp"

namespace mvk {

// n x n coefficient matrix A0 with first row and first column pinned to one.
// The inner (n-1)x(n-1) block carries the actual parameters.
template <class S>
class ParameterMatrix {
public:
  ParameterMatrix() : a_(1, 1, S(1)) {}
  explicit ParameterMatrix(Matrix<S> entries) : a_(std::move(entries)) {
    if (a_.rows() != a_.cols())
      throw input_error("parameter matrix must be square");
    const S one(1);
    for (int j = 0; j < a_.cols(); ++j)
      if (!(a_(0, j) == one))
        throw input_error("parameter matrix first row must be all ones");
    for (int i = 0; i < a_.rows(); ++i)
      if (!(a_(i, 0) == one))
        throw input_error("parameter matrix first column must be all ones");
  }

  static ParameterMatrix from_inner(const Matrix<S>& inner) {
    if (inner.rows() != inner.cols())
      throw input_error("inner block must be square");
    const int n = inner.rows() + 1;
    Matrix<S> m(n, n, S(1));
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) m(i, j) = inner(i - 1, j - 1);
    return ParameterMatrix(std::move(m));
  }

  int dim() const { return a_.rows(); }
  const S& at(int i, int j) const { return a_(i, j); }
  const Matrix<S>& entries() const { return a_; }

  ParameterMatrix transposed() const { return ParameterMatrix(a_.transpose()); }

  // Copy with one inner entry replaced; the border stays ones.
  ParameterMatrix with_inner_entry(int i, int j, const S& v) const {
    if (i < 1 || j < 1 || i >= dim() || j >= dim())
      throw input_error("only inner entries may be replaced");
    Matrix<S> m = a_;
    m(i, j) = v;
    return ParameterMatrix(std::move(m));
  }

private:
  Matrix<S> a_;
};

enum class PhiMethod { generating, hypergeometric };

inline const char* phi_method_name(PhiMethod m) {
  return m == PhiMethod::generating ? "generating" : "hypergeometric";
}

// Sparse multivariate polynomial: monomial exponent vector -> coefficient.
// std::map keeps iteration deterministic, which keeps float sums reproducible.
template <class S>
using ExponentMap = std::map<Composition, S>;

// Expansion of prod_i (sum_j a_ij t_j)^(x_i).  With `bound` set, monomials
// exceeding the bound in any coordinate are dropped as they appear, so the
// dense coefficient space is never materialized.
template <class S>
ExponentMap<S> generating_expansion(const ParameterMatrix<S>& A0,
                                    const Composition& x,
                                    const Composition* bound = nullptr) {
  const int n = A0.dim();
  if (x.size() != n)
    throw input_error("composition length must match the matrix dimension");

  // smallest factor first keeps the intermediate maps small
  std::vector<int> rows(static_cast<std::size_t>(n));
  std::iota(rows.begin(), rows.end(), 0);
  std::stable_sort(rows.begin(), rows.end(),
                   [&](int a, int b) { return x[a] < x[b]; });

  ExponentMap<S> acc;
  acc.emplace(Composition::zero(n), S(1));
  for (int i : rows) {
    const int e = x[i];
    if (e == 0) continue;
    // one factor, by the multinomial theorem
    std::vector<std::vector<S>> pw(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      pw[static_cast<std::size_t>(j)].reserve(static_cast<std::size_t>(e) + 1);
      pw[static_cast<std::size_t>(j)].push_back(S(1));
      for (int t = 1; t <= e; ++t)
        pw[static_cast<std::size_t>(j)].push_back(
            pw[static_cast<std::size_t>(j)].back() * A0.at(i, j));
    }
    std::vector<std::pair<Composition, S>> factor;
    for (const Composition& k : enumerate_compositions(n, e)) {
      S coeff = field_traits<S>::from_mpz(multinomial(e, k));
      for (int j = 0; j < n; ++j)
        coeff *= pw[static_cast<std::size_t>(j)][static_cast<std::size_t>(k[j])];
      if (coeff == S(0)) continue;
      factor.emplace_back(k, std::move(coeff));
    }

    ExponentMap<S> next;
    std::vector<int> exp(static_cast<std::size_t>(n));
    for (const auto& [e1, c1] : acc) {
      for (const auto& [e2, c2] : factor) {
        bool keep = true;
        for (int j = 0; j < n; ++j) {
          exp[static_cast<std::size_t>(j)] = e1[j] + e2[j];
          if (bound && exp[static_cast<std::size_t>(j)] > (*bound)[j]) {
            keep = false;
            break;
          }
        }
        if (!keep) continue;
        next[Composition(exp)] += c1 * c2;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

namespace detail {

template <class S>
void check_phi_args(const ParameterMatrix<S>& A0, const Composition& x,
                    const Composition& m) {
  if (x.size() != A0.dim() || m.size() != A0.dim())
    throw input_error("composition length must match the matrix dimension");
  if (x.degree() != m.degree())
    throw input_error("x and m must have the same degree");
}

}  // namespace detail

// phi as the coefficient of t^m in the factored product, normalized by the
// multinomial coefficient of m.
template <class S>
S phi_generating(const ParameterMatrix<S>& A0, const Composition& x,
                 const Composition& m) {
  detail::check_phi_args(A0, x, m);
  ExponentMap<S> expansion = generating_expansion(A0, x, &m);
  S num(0);
  if (auto it = expansion.find(m); it != expansion.end()) num = it->second;
  return checked_div(num, field_traits<S>::from_mpz(multinomial(x.degree(), m)));
}

// phi as a terminating series over inner (n-1)x(n-1) count matrices c:
//   sum_c [ prod_i (-x_i)_(row_i) prod_j (-m_j)_(col_j) / (-N)_(|c|) ]
//         [ prod_ij (1 - a_ij)^(c_ij) / c_ij! ]
// Cells are visited depth-first in row-major order; each unit increment in a
// cell multiplies the running term by an exact small-integer ratio, so no
// factorial or Pochhammer values are ever recomputed.  Rows/columns are cut
// off as soon as their budget (x_i resp. m_j) is exhausted, where the
// Pochhammer factors vanish.
template <class S>
S phi_hypergeometric(const ParameterMatrix<S>& A0, const Composition& x,
                     const Composition& m) {
  detail::check_phi_args(A0, x, m);
  const int n = A0.dim();
  const int N = x.degree();
  const int d = n - 1;

  std::vector<S> beta;  // 1 - a_ij over the inner block, row-major
  beta.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) beta.push_back(S(1) - A0.at(i, j));

  std::vector<int> row_rem(static_cast<std::size_t>(d)),
      col_rem(static_cast<std::size_t>(d));
  for (int i = 1; i < n; ++i) row_rem[static_cast<std::size_t>(i - 1)] = x[i];
  for (int j = 1; j < n; ++j) col_rem[static_cast<std::size_t>(j - 1)] = m[j];

  S total(0);
  int sigma = 0;  // |c| so far
  auto rec = [&](auto&& self, int cell, mpq_class q, const S& bprod) -> void {
    if (cell == d * d) {
      total += field_traits<S>::from_mpq(q) * bprod;
      return;
    }
    const int i = cell / d, j = cell % d;
    self(self, cell + 1, q, bprod);  // c_ij = 0
    const int cmax = std::min(row_rem[static_cast<std::size_t>(i)],
                              col_rem[static_cast<std::size_t>(j)]);
    S bp = bprod;
    for (int c = 1; c <= cmax; ++c) {
      // ratio of consecutive terms when c_ij steps up by one
      mpq_class step(
          -static_cast<long>(row_rem[static_cast<std::size_t>(i)]) *
              col_rem[static_cast<std::size_t>(j)],
          static_cast<long>(N - sigma) * c);
      step.canonicalize();
      q *= step;
      bp *= beta[static_cast<std::size_t>(cell)];
      --row_rem[static_cast<std::size_t>(i)];
      --col_rem[static_cast<std::size_t>(j)];
      ++sigma;
      self(self, cell + 1, q, bp);
    }
    row_rem[static_cast<std::size_t>(i)] += cmax;
    col_rem[static_cast<std::size_t>(j)] += cmax;
    sigma -= cmax;
  };
  rec(rec, 0, mpq_class(1), S(1));
  return total;
}

// Full evaluation table over X(n,N) x X(n,N) in canonical order;
// values[row(x)][col(m)] = phi(x; m).
template <class S>
struct PhiTable {
  int n = 0;
  int N = 0;
  PhiMethod method = PhiMethod::generating;
  std::vector<Composition> order;
  std::vector<S> values;  // row-major, |order|^2 entries

  int size() const { return static_cast<int>(order.size()); }
  const S& at(int r, int c) const {
    return values[static_cast<std::size_t>(r) * order.size() +
                  static_cast<std::size_t>(c)];
  }
  int index_of(const Composition& c) const {
    // order is sorted lexicographically decreasing
    auto it = std::lower_bound(order.begin(), order.end(), c,
                               [](const Composition& a, const Composition& b) {
                                 return b < a;
                               });
    if (it == order.end() || !(*it == c))
      throw input_error("composition " + c.to_string() + " is not in X(" +
                        std::to_string(n) + "," + std::to_string(N) + ")");
    return static_cast<int>(it - order.begin());
  }
};

// Fills the table row by row.  Workers own whole rows and write to disjoint
// preallocated slots, so any worker count produces identical bytes.
template <class S>
PhiTable<S> phi_table(const ParameterMatrix<S>& A0, int N, PhiMethod method,
                      int jobs = 1) {
  if (N < 0) throw input_error("N must be nonnegative");
  PhiTable<S> t;
  t.n = A0.dim();
  t.N = N;
  t.method = method;
  t.order = enumerate_compositions(t.n, N);
  const int sz = t.size();
  t.values.assign(static_cast<std::size_t>(sz) * static_cast<std::size_t>(sz),
                  S(0));

  std::vector<S> divisor(static_cast<std::size_t>(sz));
  for (int c = 0; c < sz; ++c)
    divisor[static_cast<std::size_t>(c)] =
        field_traits<S>::from_mpz(multinomial(N, t.order[static_cast<std::size_t>(c)]));

  parallel_for(0, sz, jobs, [&](int r) {
    const Composition& x = t.order[static_cast<std::size_t>(r)];
    if (method == PhiMethod::generating) {
      ExponentMap<S> expansion = generating_expansion(A0, x);
      for (int c = 0; c < sz; ++c) {
        S num(0);
        auto it = expansion.find(t.order[static_cast<std::size_t>(c)]);
        if (it != expansion.end()) num = it->second;
        t.values[static_cast<std::size_t>(r) * sz + c] =
            checked_div(num, divisor[static_cast<std::size_t>(c)]);
      }
    } else {
      for (int c = 0; c < sz; ++c)
        t.values[static_cast<std::size_t>(r) * sz + c] =
            phi_hypergeometric(A0, x, t.order[static_cast<std::size_t>(c)]);
    }
  });
  return t;
}

}  // namespace mvk

#endif
