#pragma once

// Integer combinations of pure q-fold tensors over one algebra.
//
// Canonical form: every pure tensor is expanded into a tuple of normal
// monomials, and its coefficient is reduced modulo the gcd of the factor
// moduli (Z/m ⊗ Z/n = Z/gcd(m, n)).

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "loopcalc/algebra.hpp"
#include "loopcalc/integer.hpp"

namespace loopcalc {

using MonomialTuple = std::vector<Monomial>;

struct MonomialTupleOrder {
  bool operator()(const MonomialTuple& a, const MonomialTuple& b) const {
    MonomialOrder less;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (less(a[i], b[i])) return true;
      if (less(b[i], a[i])) return false;
    }
    return a.size() < b.size();
  }
};

using TensorTerms = std::map<MonomialTuple, Integer, MonomialTupleOrder>;

class TensorElement {
 public:
  TensorElement(std::shared_ptr<const GradedAlgebra> algebra,
                std::size_t arity)
      : algebra_(std::move(algebra)), arity_(arity) {
    if (!algebra_) throw std::invalid_argument("tensor needs an algebra");
    if (arity_ == 0) throw std::invalid_argument("tensor arity must be >= 1");
  }

  /// Normalises a formal combination of monomial tuples.
  static TensorElement from_raw(
      std::shared_ptr<const GradedAlgebra> algebra, std::size_t arity,
      std::vector<std::pair<Integer, MonomialTuple>> raw) {
    TensorElement t(std::move(algebra), arity);
    for (auto& [c, tuple] : raw) {
      if (tuple.size() != arity)
        throw std::invalid_argument("tensor term has wrong arity");
      if (c == 0) continue;
      auto [it, inserted] = t.terms_.try_emplace(std::move(tuple), c);
      if (!inserted) it->second += c;
    }
    for (auto it = t.terms_.begin(); it != t.terms_.end();) {
      const Integer mod = t.modulus(it->first);
      it->second = reduce_mod(it->second, mod);
      if (it->second == 0 || mod == 1)
        it = t.terms_.erase(it);
      else
        ++it;
    }
    return t;
  }

  const GradedAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const GradedAlgebra>& algebra_ptr() const {
    return algebra_;
  }
  std::size_t arity() const { return arity_; }
  const TensorTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer modulus(const MonomialTuple& tuple) const {
    Integer g = 0;
    for (const auto& m : tuple) {
      g = gcd(g, algebra_->modulus(m));
      if (g == 1) break;
    }
    return g;
  }

  std::int64_t degree(const MonomialTuple& tuple) const {
    std::int64_t d = 0;
    for (const auto& m : tuple) d = checked_add(d, algebra_->degree(m));
    return d;
  }

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.algebra_ == b.algebra_ && a.arity_ == b.arity_ &&
           a.terms_ == b.terms_;
  }

 private:
  std::shared_ptr<const GradedAlgebra> algebra_;
  std::size_t arity_;
  TensorTerms terms_;
};

inline void require_same_algebra(const TensorElement& a,
                                 const TensorElement& b) {
  if (a.algebra_ptr() != b.algebra_ptr())
    throw std::invalid_argument("tensors belong to different models");
}

inline std::vector<std::pair<Integer, MonomialTuple>> raw_terms(
    const TensorElement& t) {
  std::vector<std::pair<Integer, MonomialTuple>> raw;
  raw.reserve(t.terms().size());
  for (const auto& [tuple, c] : t.terms()) raw.emplace_back(c, tuple);
  return raw;
}

/// x_1 ⊗ ... ⊗ x_q, expanded multilinearly.
inline TensorElement tensor(const std::vector<Element>& xs) {
  if (xs.empty()) throw std::invalid_argument("tensor of no factors");
  const auto& alg = xs.front().algebra_ptr();
  for (const auto& x : xs)
    if (x.algebra_ptr() != alg)
      throw std::invalid_argument("tensor factors belong to different models");
  std::vector<std::pair<Integer, MonomialTuple>> acc{{Integer(1), {}}};
  for (const auto& x : xs) {
    std::vector<std::pair<Integer, MonomialTuple>> next;
    next.reserve(acc.size() * x.terms().size());
    for (const auto& [c, tuple] : acc) {
      for (const auto& [m, cm] : x.terms()) {
        MonomialTuple t = tuple;
        t.push_back(m);
        next.emplace_back(c * cm, std::move(t));
      }
    }
    acc = std::move(next);
  }
  return TensorElement::from_raw(alg, xs.size(), std::move(acc));
}

inline TensorElement to_tensor(const Element& x) { return tensor({x}); }

inline Element to_element(const TensorElement& t) {
  if (t.arity() != 1)
    throw std::invalid_argument("only arity-1 tensors convert to elements");
  std::vector<std::pair<Integer, Monomial>> raw;
  for (const auto& [tuple, c] : t.terms()) raw.emplace_back(c, tuple[0]);
  return t.algebra().normal_form(std::move(raw));
}

inline TensorElement tensor_add(const TensorElement& a,
                                const TensorElement& b) {
  require_same_algebra(a, b);
  if (a.arity() != b.arity())
    throw std::invalid_argument("cannot add tensors of different arity");
  auto raw = raw_terms(a);
  for (const auto& [tuple, c] : b.terms()) raw.emplace_back(c, tuple);
  return TensorElement::from_raw(a.algebra_ptr(), a.arity(), std::move(raw));
}

inline TensorElement tensor_scale(const Integer& k, const TensorElement& t) {
  auto raw = raw_terms(t);
  for (auto& term : raw) term.first *= k;
  return TensorElement::from_raw(t.algebra_ptr(), t.arity(), std::move(raw));
}

inline TensorElement tensor_subtract(const TensorElement& a,
                                     const TensorElement& b) {
  return tensor_add(a, tensor_scale(-1, b));
}

/// Outer product: (a_1 ⊗ ... ⊗ a_p) ⊗ (b_1 ⊗ ... ⊗ b_q).
inline TensorElement tensor_concat(const TensorElement& a,
                                   const TensorElement& b) {
  require_same_algebra(a, b);
  std::vector<std::pair<Integer, MonomialTuple>> raw;
  for (const auto& [ta, ca] : a.terms()) {
    for (const auto& [tb, cb] : b.terms()) {
      MonomialTuple t = ta;
      t.insert(t.end(), tb.begin(), tb.end());
      raw.emplace_back(ca * cb, std::move(t));
    }
  }
  return TensorElement::from_raw(a.algebra_ptr(), a.arity() + b.arity(),
                                 std::move(raw));
}

/// x ⊗ y  ->  (-1)^{|x||y|} y ⊗ x
inline TensorElement twist(const TensorElement& t) {
  if (t.arity() != 2) throw std::invalid_argument("twist needs arity 2");
  const auto& alg = t.algebra();
  std::vector<std::pair<Integer, MonomialTuple>> raw;
  for (const auto& [tuple, c] : t.terms()) {
    const bool odd = is_odd(alg.degree(tuple[0])) && is_odd(alg.degree(tuple[1]));
    raw.emplace_back(odd ? Integer(-c) : c, MonomialTuple{tuple[1], tuple[0]});
  }
  return TensorElement::from_raw(t.algebra_ptr(), 2, std::move(raw));
}

/// Replaces factor `slot` (1-based) of every pure tensor by op(factor),
/// an arity-r tensor. An operator of degree `op_degree` passing the
/// earlier factors picks up the Koszul sign (-1)^{op_degree * (their degree)}.
inline TensorElement map_slot(
    const TensorElement& t, std::size_t slot, std::int64_t op_degree,
    const std::function<TensorElement(const Monomial&)>& op) {
  if (slot < 1 || slot > t.arity())
    throw std::out_of_range("tensor slot out of range");
  const auto& alg = t.algebra();
  std::vector<std::pair<Integer, MonomialTuple>> raw;
  std::optional<std::size_t> out_arity;
  for (const auto& [tuple, c] : t.terms()) {
    std::int64_t before = 0;
    for (std::size_t i = 0; i + 1 < slot; ++i)
      before = checked_add(before, alg.degree(tuple[i]));
    const bool flip = is_odd(op_degree) && is_odd(before);
    TensorElement image = op(tuple[slot - 1]);
    require_same_algebra(t, image);
    out_arity = t.arity() - 1 + image.arity();
    for (const auto& [itup, ic] : image.terms()) {
      MonomialTuple nt(tuple.begin(), tuple.begin() + static_cast<long>(slot - 1));
      nt.insert(nt.end(), itup.begin(), itup.end());
      nt.insert(nt.end(), tuple.begin() + static_cast<long>(slot), tuple.end());
      Integer coeff = c * ic;
      if (flip) coeff = -coeff;
      raw.emplace_back(std::move(coeff), std::move(nt));
    }
  }
  if (!out_arity) {
    // Zero input: probe the operator's arity on the unit.
    out_arity = t.arity() - 1 + op(alg.unit_monomial()).arity();
  }
  return TensorElement::from_raw(t.algebra_ptr(), *out_arity, std::move(raw));
}

/// Multiplies factors `slot` and `slot + 1` (1-based) with the loop product.
inline TensorElement contract(const TensorElement& t, std::size_t slot) {
  if (slot < 1 || slot >= t.arity())
    throw std::out_of_range("contract slot out of range");
  const auto& alg = t.algebra();
  std::vector<std::pair<Integer, MonomialTuple>> raw;
  for (const auto& [tuple, c] : t.terms()) {
    const Element prod =
        mul(alg.monomial(tuple[slot - 1]), alg.monomial(tuple[slot]));
    for (const auto& [m, cm] : prod.terms()) {
      MonomialTuple nt;
      nt.reserve(tuple.size() - 1);
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i == slot - 1)
          nt.push_back(m);
        else if (i != slot)
          nt.push_back(tuple[i]);
      }
      raw.emplace_back(c * cm, std::move(nt));
    }
  }
  return TensorElement::from_raw(t.algebra_ptr(), t.arity() - 1,
                                 std::move(raw));
}

/// a · (x_1 ⊗ ... ) = (a x_1) ⊗ ...
inline TensorElement left_action(const Element& a, const TensorElement& t) {
  if (a.algebra_ptr() != t.algebra_ptr())
    throw std::invalid_argument("element and tensor belong to different models");
  return contract(tensor_concat(to_tensor(a), t), 1);
}

/// (... ⊗ x_q) · b = ... ⊗ (x_q b)
inline TensorElement right_action(const TensorElement& t, const Element& b) {
  if (b.algebra_ptr() != t.algebra_ptr())
    throw std::invalid_argument("element and tensor belong to different models");
  return contract(tensor_concat(t, to_tensor(b)), t.arity());
}

/// Total degree of the tensor, if homogeneous.
inline Degree degree_of(const TensorElement& t) {
  if (t.is_zero()) return Degree::zero();
  std::optional<std::int64_t> d;
  for (const auto& [tuple, c] : t.terms()) {
    const auto dt = t.degree(tuple);
    if (d && *d != dt) return Degree::inhomogeneous();
    d = dt;
  }
  return Degree::of(*d);
}

inline TensorElement zero_tensor(std::shared_ptr<const GradedAlgebra> alg,
                                 std::size_t arity) {
  return TensorElement(std::move(alg), arity);
}

}  // namespace loopcalc
