#ifndef MVK_CONSTRUCTORS_HPP
#define MVK_CONSTRUCTORS_HPP

#include <numbers>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mvk/orthogonality.hpp"

namespace mvk {

enum class InstanceKind { classical, dft, grunbaum_rahman, kronecker, raw };

inline const char* instance_kind_name(InstanceKind k) {
  switch (k) {
    case InstanceKind::classical: return "classical";
    case InstanceKind::dft: return "dft";
    case InstanceKind::grunbaum_rahman: return "grunbaum-rahman";
    case InstanceKind::kronecker: return "kronecker";
    case InstanceKind::raw: return "raw";
  }
  return "raw";
}

inline InstanceKind instance_kind_from_name(std::string_view name) {
  if (name == "classical") return InstanceKind::classical;
  if (name == "dft") return InstanceKind::dft;
  if (name == "grunbaum-rahman") return InstanceKind::grunbaum_rahman;
  if (name == "kronecker") return InstanceKind::kronecker;
  if (name == "raw") return InstanceKind::raw;
  throw input_error("unknown instance kind '" + std::string(name) + "'");
}

// A parameter matrix bundled with how it was made and, when known, weights
// under which it is orthogonal.
template <class S>
struct InstanceSpec {
  InstanceKind kind = InstanceKind::raw;
  std::vector<S> parameters;
  ParameterMatrix<S> A0;
  std::optional<std::pair<WeightVector<S>, WeightVector<S>>> weights;
};

namespace detail {

template <class S>
void attach_solved_weights(InstanceSpec<S>& spec) {
  SolveResult<S> r = solve_weights(spec.A0, field_traits<S>::default_policy());
  if (r.ok()) spec.weights = std::move(r.weights);
}

}  // namespace detail

// 2x2 family [[1,1],[1,1-1/p]]; the one-dimensional classical case.
template <class S>
InstanceSpec<S> classical_krawtchouk(const S& p) {
  if (p == S(0)) throw input_error("classical parameter p must be nonzero");
  Matrix<S> inner(1, 1, S(1) - checked_div(S(1), p));
  InstanceSpec<S> spec;
  spec.kind = InstanceKind::classical;
  spec.parameters = {p};
  spec.A0 = ParameterMatrix<S>::from_inner(inner);
  detail::attach_solved_weights(spec);
  return spec;
}

// Character table of Z/k: a_ij = omega^(ij) with omega a primitive k-th root
// of unity.  Exact Gaussian rationals exist only for k in {1, 2, 4}; any k
// works in floating point.  Weights are eta1 = ones, eta2 = (k, ..., k).
template <class S>
InstanceSpec<S> dft_character(int k) {
  if (k < 1) throw input_error("character table order must be at least 1");
  Matrix<S> a(k, k);
  if constexpr (field_traits<S>::mode == FieldMode::rational) {
    throw input_error(
        "character tables need gaussian-rational or complex-float scalars");
  } else if constexpr (field_traits<S>::mode == FieldMode::gaussian_rational) {
    if (k != 1 && k != 2 && k != 4)
      throw input_error(
          "exact Gaussian-rational character tables exist only for orders "
          "1, 2 and 4");
    const GaussianRational omega =
        k == 1 ? GaussianRational(1)
               : (k == 2 ? GaussianRational(-1) : GaussianRational::i());
    std::vector<GaussianRational> pow(static_cast<std::size_t>(k));
    pow[0] = GaussianRational(1);
    for (int t = 1; t < k; ++t) pow[static_cast<std::size_t>(t)] =
        pow[static_cast<std::size_t>(t - 1)] * omega;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        a(i, j) = pow[static_cast<std::size_t>((i * j) % k)];
  } else {
    const double tau = 2.0 * std::numbers::pi_v<double>;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        a(i, j) = std::polar(1.0, tau * static_cast<double>((i * j) % k) /
                                      static_cast<double>(k));
  }
  InstanceSpec<S> spec;
  spec.kind = InstanceKind::dft;
  spec.parameters = {S(k)};
  spec.A0 = ParameterMatrix<S>(std::move(a));
  std::vector<S> eta1(static_cast<std::size_t>(k), S(1));
  std::vector<S> eta2(static_cast<std::size_t>(k), S(k));
  spec.weights = {WeightVector<S>(std::move(eta1)),
                  WeightVector<S>(std::move(eta2))};
  return spec;
}

// 3x3 family with inner block [[1-u1, 1-u2], [1-v1, 1-v2]].  Generic
// parameters admit no orthogonality weights; admissibility is decided by
// running the solver, not by a closed-form constraint.
template <class S>
InstanceSpec<S> grunbaum_rahman(const S& u1, const S& u2, const S& v1,
                                const S& v2) {
  Matrix<S> inner(2, 2);
  inner(0, 0) = S(1) - u1;
  inner(0, 1) = S(1) - u2;
  inner(1, 0) = S(1) - v1;
  inner(1, 1) = S(1) - v2;
  InstanceSpec<S> spec;
  spec.kind = InstanceKind::grunbaum_rahman;
  spec.parameters = {u1, u2, v1, v2};
  spec.A0 = ParameterMatrix<S>::from_inner(inner);
  detail::attach_solved_weights(spec);
  return spec;
}

// Tensor product instance.  Row-major index pairing keeps the ones border in
// place; weights multiply entrywise, so both factors must carry them.
template <class S>
InstanceSpec<S> kronecker_instance(const InstanceSpec<S>& lhs,
                                   const InstanceSpec<S>& rhs) {
  if (!lhs.weights || !rhs.weights)
    throw input_error("kronecker factors must carry weights");
  InstanceSpec<S> spec;
  spec.kind = InstanceKind::kronecker;
  spec.A0 = ParameterMatrix<S>(kronecker(lhs.A0.entries(), rhs.A0.entries()));
  auto product = [](const WeightVector<S>& a, const WeightVector<S>& b) {
    std::vector<S> w;
    w.reserve(static_cast<std::size_t>(a.size()) *
              static_cast<std::size_t>(b.size()));
    for (int i = 0; i < a.size(); ++i)
      for (int j = 0; j < b.size(); ++j) w.push_back(a[i] * b[j]);
    return WeightVector<S>(std::move(w));
  };
  spec.weights = {product(lhs.weights->first, rhs.weights->first),
                  product(lhs.weights->second, rhs.weights->second)};
  return spec;
}

}  // namespace mvk

#endif
