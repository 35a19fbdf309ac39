#ifndef MVK_ORTHOGONALITY_HPP
#define MVK_ORTHOGONALITY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mvk/krawtchouk.hpp"

namespace mvk {

// Nonzero scalar weights, one per coordinate.
template <class S>
class WeightVector {
public:
  explicit WeightVector(std::vector<S> entries) : w_(std::move(entries)) {
    if (w_.empty()) throw input_error("weight vector must be nonempty");
    for (const S& e : w_)
      if (e == S(0)) throw input_error("weights must be nonzero");
  }

  int size() const { return static_cast<int>(w_.size()); }
  const S& operator[](int i) const { return w_[static_cast<std::size_t>(i)]; }
  const std::vector<S>& entries() const { return w_; }

  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.w_ == b.w_;
  }

private:
  std::vector<S> w_;
};

// b(x) = multinomial(N, x) * prod_j eta_j^(x_j)
template <class S>
S weight(const Composition& x, int N, const WeightVector<S>& eta) {
  if (eta.size() != x.size())
    throw input_error("weight vector length must match the composition");
  if (x.degree() != N)
    throw input_error("composition degree must equal N");
  S acc = field_traits<S>::from_mpz(multinomial(N, x));
  for (int j = 0; j < x.size(); ++j) acc *= scalar_pow(eta[j], x[j]);
  return acc;
}

enum class Verdict { orthogonal, not_orthogonal };
enum class CheckMethod { condition_a, condition_b };

inline const char* verdict_name(Verdict v) {
  return v == Verdict::orthogonal ? "orthogonal" : "not-orthogonal";
}
inline const char* check_method_name(CheckMethod m) {
  return m == CheckMethod::condition_a ? "condition-a" : "condition-b";
}

template <class S>
struct OrthogonalityCertificate {
  CheckMethod method = CheckMethod::condition_a;
  Verdict verdict = Verdict::not_orthogonal;
  std::optional<S> zeta;                 // present for condition-b
  double max_deviation = 0.0;            // exact passes report 0
  // worst-violation pair (m, m') for the sum check
  std::optional<std::pair<Composition, Composition>> witness;
  // offending entry of A0* D1 A0 for the matrix check
  std::optional<std::pair<int, int>> failing_entry;

  bool ok() const { return verdict == Verdict::orthogonal; }
};

// sum_x b(x) phi(x;m) conj(phi(x;m')) over a precomputed table.
template <class S>
S gram_sum(const PhiTable<S>& table, const WeightVector<S>& eta1,
           const Composition& m, const Composition& m_prime) {
  if (eta1.size() != table.n)
    throw input_error("weight vector length must match the table");
  const int mi = table.index_of(m);
  const int mj = table.index_of(m_prime);
  const int sz = table.size();
  S acc(0);
  for (int r = 0; r < sz; ++r) {
    S b = weight(table.order[static_cast<std::size_t>(r)], table.N, eta1);
    acc += b * table.at(r, mi) * conjugate(table.at(r, mj));
  }
  return acc;
}

template <class S>
S gram_sum(const ParameterMatrix<S>& A0, const WeightVector<S>& eta1,
           const Composition& m, const Composition& m_prime, int N) {
  PhiTable<S> table = phi_table(A0, N, PhiMethod::generating);
  return gram_sum(table, eta1, m, m_prime);
}

// Brute-force orthogonality: every pair (m, m') is compared against
// delta_(m,m') eta2^m / multinomial(N, m).  The scan over pairs is an
// associative max-combine, merged in row order, so the outcome does not
// depend on the worker count.
template <class S>
OrthogonalityCertificate<S> check_condition_a(const PhiTable<S>& table,
                                              const WeightVector<S>& eta1,
                                              const WeightVector<S>& eta2,
                                              const EqualityPolicy& policy,
                                              int jobs = 1) {
  const int n = table.n, N = table.N, sz = table.size();
  if (eta1.size() != n || eta2.size() != n)
    throw input_error("weight vector length must match the table");

  std::vector<S> b(static_cast<std::size_t>(sz));
  std::vector<S> rhs(static_cast<std::size_t>(sz));
  std::vector<S> conj_vals(table.values.size());
  for (int r = 0; r < sz; ++r)
    b[static_cast<std::size_t>(r)] =
        weight(table.order[static_cast<std::size_t>(r)], N, eta1);
  for (int c = 0; c < sz; ++c) {
    const Composition& m = table.order[static_cast<std::size_t>(c)];
    S v(1);
    for (int j = 0; j < n; ++j) v *= scalar_pow(eta2[j], m[j]);
    rhs[static_cast<std::size_t>(c)] =
        checked_div(v, field_traits<S>::from_mpz(multinomial(N, m)));
  }
  for (std::size_t idx = 0; idx < table.values.size(); ++idx)
    conj_vals[idx] = conjugate(table.values[idx]);

  struct RowStat {
    double maxdev = 0.0;
    double worst_violation = -1.0;
    int vj = -1;
  };
  std::vector<RowStat> stats(static_cast<std::size_t>(sz));
  parallel_for(0, sz, jobs, [&](int mi) {
    RowStat st;
    for (int mj = 0; mj < sz; ++mj) {
      S lhs(0);
      for (int r = 0; r < sz; ++r)
        lhs += b[static_cast<std::size_t>(r)] * table.at(r, mi) *
               conj_vals[static_cast<std::size_t>(r) * sz + mj];
      const bool diag = (mi == mj);
      S diff = diag ? S(lhs - rhs[static_cast<std::size_t>(mi)]) : lhs;
      const double scale =
          diag ? std::max(1.0, abs_value(rhs[static_cast<std::size_t>(mi)]))
               : 1.0;
      const double dev = abs_value(diff);
      st.maxdev = std::max(st.maxdev, dev);
      if (!is_zero(diff, policy, scale) && dev > st.worst_violation) {
        st.worst_violation = dev;
        st.vj = mj;
      }
    }
    stats[static_cast<std::size_t>(mi)] = st;
  });

  OrthogonalityCertificate<S> cert;
  cert.method = CheckMethod::condition_a;
  double worst = -1.0;
  int vi = -1, vj = -1;
  for (int mi = 0; mi < sz; ++mi) {
    const RowStat& st = stats[static_cast<std::size_t>(mi)];
    cert.max_deviation = std::max(cert.max_deviation, st.maxdev);
    if (st.vj >= 0 && st.worst_violation > worst) {
      worst = st.worst_violation;
      vi = mi;
      vj = st.vj;
    }
  }
  if (vi >= 0) {
    cert.verdict = Verdict::not_orthogonal;
    cert.witness = {table.order[static_cast<std::size_t>(vi)],
                    table.order[static_cast<std::size_t>(vj)]};
  } else {
    cert.verdict = Verdict::orthogonal;
  }
  return cert;
}

template <class S>
OrthogonalityCertificate<S> check_condition_a(const ParameterMatrix<S>& A0,
                                              const WeightVector<S>& eta1,
                                              const WeightVector<S>& eta2,
                                              int N,
                                              const EqualityPolicy& policy,
                                              int jobs = 1) {
  PhiTable<S> table = phi_table(A0, N, PhiMethod::generating, jobs);
  return check_condition_a(table, eta1, eta2, policy, jobs);
}

// Matrix-identity orthogonality: A0* D1 A0 must be diagonal, the diagonal
// ratios against eta2 must agree on a single zeta, and zeta^N must be 1.
// Work is O(n^3) regardless of N, bar the power in the root check.
template <class S>
OrthogonalityCertificate<S> check_condition_b(const ParameterMatrix<S>& A0,
                                              const WeightVector<S>& eta1,
                                              const WeightVector<S>& eta2,
                                              int N,
                                              const EqualityPolicy& policy) {
  const int n = A0.dim();
  if (eta1.size() != n || eta2.size() != n)
    throw input_error("weight vector length must match the matrix");
  if (N < 1) throw input_error("the matrix check needs N >= 1");

  Matrix<S> M = A0.entries().conj_transpose() *
                scale_rows(A0.entries(), eta1.entries());
  double scale = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, abs_value(M(i, j)));

  OrthogonalityCertificate<S> cert;
  cert.method = CheckMethod::condition_b;

  bool violated = false;
  double worst = -1.0;
  std::pair<int, int> worst_entry{0, 0};
  auto consider = [&](double dev, bool bad, int i, int j) {
    cert.max_deviation = std::max(cert.max_deviation, dev);
    if (bad && dev > worst) {
      violated = true;
      worst = dev;
      worst_entry = {i, j};
    }
  };

  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (k == l) continue;
      consider(abs_value(M(k, l)), !is_zero(M(k, l), policy, scale), k, l);
    }

  S zeta = checked_div(M(0, 0), eta2[0]);
  for (int i = 1; i < n; ++i) {
    S diff = M(i, i) - zeta * eta2[i];
    consider(abs_value(diff), !is_zero(diff, policy, scale), i, i);
  }

  const double root_residual = abs_value(scalar_pow(zeta, N) - S(1));
  if (nth_root_of_unity_check(zeta, N, policy))
    cert.max_deviation = std::max(cert.max_deviation, root_residual);
  else
    consider(std::max(root_residual, std::fabs(abs_value(zeta) - 1.0)), true,
             0, 0);  // zeta was read off entry (0,0)

  cert.zeta = zeta;
  cert.verdict = violated ? Verdict::not_orthogonal : Verdict::orthogonal;
  if (violated) cert.failing_entry = worst_entry;
  return cert;
}

enum class SolveFailure { no_solution, non_unique, zero_weight };

inline const char* solve_failure_name(SolveFailure f) {
  switch (f) {
    case SolveFailure::no_solution: return "no-solution";
    case SolveFailure::non_unique: return "non-unique";
    case SolveFailure::zero_weight: return "zero-weight";
  }
  return "unknown";
}

template <class S>
struct SolveResult {
  std::optional<std::pair<WeightVector<S>, WeightVector<S>>> weights;
  SolveFailure reason = SolveFailure::no_solution;

  bool ok() const { return weights.has_value(); }
  const WeightVector<S>& eta1() const { return weights->first; }
  const WeightVector<S>& eta2() const { return weights->second; }
};

// Recovers weights making A0* D1 A0 diagonal: solve the homogeneous system
// sum_i conj(a_ik) eta_i a_il = 0 over every ordered pair k != l (both
// orders, so complex solutions kill both off-diagonal triangles), pin
// eta_0 = 1, and read eta2 off the resulting diagonal.  Zeta is 1 by
// construction since no extra phase is split off.
template <class S>
SolveResult<S> solve_weights(const ParameterMatrix<S>& A0,
                             const EqualityPolicy& policy) {
  const int n = A0.dim();
  SolveResult<S> out;
  if (n == 1) {
    out.weights = {WeightVector<S>({S(1)}), WeightVector<S>({S(1)})};
    return out;
  }

  Matrix<S> B(n * (n - 1), n);
  int row = 0;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (k == l) continue;
      for (int i = 0; i < n; ++i)
        B(row, i) = conjugate(A0.at(i, k)) * A0.at(i, l);
      ++row;
    }

  Nullspace<S> ns = nullspace(std::move(B), policy);
  if (ns.basis.empty()) {
    out.reason = SolveFailure::no_solution;
    return out;
  }
  if (ns.basis.size() > 1) {
    out.reason = SolveFailure::non_unique;
    return out;
  }

  std::vector<S>& v = ns.basis.front();
  double vmax = 1.0;
  for (const S& e : v) vmax = std::max(vmax, abs_value(e));
  for (const S& e : v)
    if (is_zero(e, policy, vmax)) {
      out.reason = SolveFailure::zero_weight;
      return out;
    }
  std::vector<S> eta1(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) eta1[i] = checked_div(v[i], v[0]);

  Matrix<S> M = A0.entries().conj_transpose() *
                scale_rows(A0.entries(), eta1);
  double mmax = 1.0;
  for (int i = 0; i < n; ++i) mmax = std::max(mmax, abs_value(M(i, i)));
  std::vector<S> eta2(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (is_zero(M(i, i), policy, mmax)) {
      out.reason = SolveFailure::zero_weight;
      return out;
    }
    eta2[static_cast<std::size_t>(i)] = M(i, i);
  }
  out.weights = {WeightVector<S>(std::move(eta1)),
                 WeightVector<S>(std::move(eta2))};
  return out;
}

}  // namespace mvk

#endif
