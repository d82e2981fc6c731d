#pragma once

// Loop coproduct by closed formula:
//   Ψ(a) = χ(M) ([c0]·a) ⊗ [c0]
//   Ψ(a_1 ⋯ a_p) = χ(M) ([c0]·a_1⋯a_ℓ) ⊗ ([c0]·a_{ℓ+1}⋯a_p)  for 0 <= ℓ <= p.
// On a model that honestly presents loop homology every ℓ gives the same
// value; check mode verifies this instead of assuming it.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "loopcalc/algebra.hpp"
#include "loopcalc/model.hpp"
#include "loopcalc/tensor.hpp"

namespace loopcalc {

inline Element product_of(const LoopModel& model,
                          const std::vector<Element>& factors,
                          std::size_t begin, std::size_t end) {
  Element acc = model.algebra().one();
  for (std::size_t i = begin; i < end; ++i) {
    require_model_element(model, factors[i]);
    acc = mul(acc, factors[i]);
  }
  return acc;
}

inline TensorElement psi(const LoopModel& model, const Element& a) {
  require_model_element(model, a);
  return tensor({scale(model.euler(), mul(model.c0(), a)), model.c0()});
}

/// χ(M) [c0] ⊗ ([c0]·a), the mirror form of psi.
inline TensorElement psi_mirror(const LoopModel& model, const Element& a) {
  require_model_element(model, a);
  return tensor({scale(model.euler(), model.c0()), mul(model.c0(), a)});
}

inline TensorElement psi_split(const LoopModel& model,
                               const std::vector<Element>& factors,
                               std::size_t ell = 0) {
  if (ell > factors.size())
    throw std::out_of_range("split point must satisfy 0 <= ell <= p");
  const Element left = mul(model.c0(), product_of(model, factors, 0, ell));
  const Element right =
      mul(model.c0(), product_of(model, factors, ell, factors.size()));
  return tensor({scale(model.euler(), left), right});
}

/// Applies psi to factor `slot` (1-based), raising the arity by one.
inline TensorElement psi_at(const LoopModel& model, const TensorElement& t,
                            std::size_t slot) {
  if (t.algebra_ptr() != model.algebra_ptr())
    throw std::invalid_argument("tensor does not belong to this model");
  return map_slot(t, slot, -model.dim(), [&](const Monomial& m) {
    return psi(model, model.algebra().monomial(m));
  });
}

/// (Δ ⊗ 1 + 1 ⊗ Δ) applied to an arity-2 tensor, with the Koszul sign on
/// the second slot.
inline TensorElement delta_factorwise(const LoopModel& model,
                                      const TensorElement& t) {
  if (t.arity() != 2)
    throw std::invalid_argument("factorwise delta needs arity 2");
  auto d = [&](const Monomial& m) {
    return to_tensor(delta(model, model.algebra().monomial(m)));
  };
  return tensor_add(map_slot(t, 1, 1, d), map_slot(t, 2, 1, d));
}

}  // namespace loopcalc
