#pragma once

// String operations μ_Σ for surfaces of type (g, p, q).
//
// string_operation uses the closed forms: zero when g >= 1 or q >= 3, the
// iterated loop product for (0, p, 1), and the split coproduct for
// (0, p, 2). string_operation_by_pants evaluates the pants decomposition
// S(p,1) # T # ... # T # S(1,q) literally, and the two must agree.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "loopcalc/coproduct.hpp"
#include "loopcalc/model.hpp"
#include "loopcalc/surface.hpp"
#include "loopcalc/tensor.hpp"

namespace loopcalc {

namespace detail {

inline void check_input(const LoopModel& model, const Surface& s,
                        const TensorElement& input) {
  if (s.inputs < 1)
    throw std::invalid_argument(
        "surfaces without inputs are not supported; pass the unit 1 instead");
  if (input.algebra_ptr() != model.algebra_ptr())
    throw std::invalid_argument("input does not belong to this model");
  if (input.arity() != static_cast<std::size_t>(s.inputs))
    throw std::invalid_argument("input arity " + std::to_string(input.arity()) +
                                " does not match " + std::to_string(s.inputs) +
                                " incoming circles");
}

// Applies f to every pure tensor, viewed as its list of factors.
template <class F>
TensorElement map_pure(const LoopModel& model, const TensorElement& input,
                       std::size_t out_arity, F&& f) {
  TensorElement acc = zero_tensor(model.algebra_ptr(), out_arity);
  for (const auto& [tuple, c] : input.terms()) {
    std::vector<Element> factors;
    factors.reserve(tuple.size());
    for (const auto& m : tuple) factors.push_back(model.algebra().monomial(m));
    acc = tensor_add(acc, tensor_scale(c, f(factors)));
  }
  return acc;
}

}  // namespace detail

inline TensorElement string_operation(const LoopModel& model, const Surface& s,
                                      const TensorElement& input) {
  detail::check_input(model, s, input);
  const auto q = static_cast<std::size_t>(s.outputs);
  if (vanishing_certificate(s) != Vanishing::NotAPriori)
    return zero_tensor(model.algebra_ptr(), q);
  if (q == 1) {
    return detail::map_pure(model, input, 1, [&](const auto& factors) {
      return to_tensor(product_of(model, factors, 0, factors.size()));
    });
  }
  return detail::map_pure(model, input, 2, [&](const auto& factors) {
    return psi_split(model, factors, 0);
  });
}

/// μ_{S(1,q)} ∘ μ_T^g ∘ μ_{S(p,1)}, with μ_T = μ ∘ Ψ and μ_{S(1,q)} the
/// iterated coproduct on the first factor.
inline TensorElement string_operation_by_pants(const LoopModel& model,
                                               const Surface& s,
                                               const TensorElement& input) {
  detail::check_input(model, s, input);
  TensorElement t = input;
  while (t.arity() > 1) t = contract(t, 1);
  for (std::int64_t i = 0; i < s.genus; ++i) t = contract(psi_at(model, t, 1), 1);
  for (std::int64_t i = 1; i < s.outputs; ++i) t = psi_at(model, t, 1);
  return t;
}

}  // namespace loopcalc
