#pragma once

// Loop models: a presented algebra standing in for the loop homology of a
// closed oriented manifold, together with its dimension, Euler
// characteristic, constant-loop class and optional BV data (Δ on
// generators, loop bracket on generator pairs).

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "loopcalc/algebra.hpp"
#include "loopcalc/error.hpp"
#include "loopcalc/integer.hpp"

namespace loopcalc {

/// One term of a formal sum: coefficient times a word of generator powers,
/// multiplied in the written order.
struct RawTerm {
  Integer coefficient;
  std::vector<std::pair<std::string, std::int64_t>> factors;
};
using RawPolynomial = std::vector<RawTerm>;

inline Element from_raw(const GradedAlgebra& algebra,
                        const RawPolynomial& poly) {
  std::vector<std::pair<Integer, Monomial>> raw;
  for (const auto& t : poly) {
    auto [m, sign] = algebra.monomial_from_word(t.factors);
    raw.emplace_back(sign > 0 ? t.coefficient : Integer(-t.coefficient),
                     std::move(m));
  }
  return algebra.normal_form(std::move(raw));
}

struct BracketEntry {
  std::string left;
  std::string right;
  Element value;
};

/// Everything needed to build a LoopModel over an already-built algebra.
struct LoopModelData {
  std::shared_ptr<const GradedAlgebra> algebra;
  std::int64_t dim = 0;
  Integer euler = 0;
  std::optional<Element> c0;
  bool has_delta = false;
  std::vector<std::pair<std::string, Element>> delta;
  bool has_bracket = false;
  std::vector<BracketEntry> bracket;
  bool simply_connected = false;
};

/// A fully name-based model description, the input of validate_model.
struct ModelSpec {
  std::int64_t dim = 0;
  Integer euler = 0;
  std::vector<GeneratorSpec> generators;
  std::vector<RelationSpec> relations;
  std::optional<RawPolynomial> c0;
  std::optional<std::vector<std::pair<std::string, RawPolynomial>>> delta;
  std::optional<std::vector<std::tuple<std::string, std::string, RawPolynomial>>>
      bracket;
  bool simply_connected = false;
};

class LoopModel {
 public:
  static LoopModel create(LoopModelData data);

  const GradedAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const GradedAlgebra>& algebra_ptr() const {
    return algebra_;
  }
  std::int64_t dim() const { return dim_; }
  const Integer& euler() const { return euler_; }
  const Element& c0() const { return c0_; }
  bool has_delta() const { return has_delta_; }
  bool has_bracket() const { return has_bracket_; }
  bool simply_connected() const { return simply_connected_; }

  const Element& delta_of_generator(std::size_t i) const {
    if (!has_delta_) throw MissingDataError("model has no delta data");
    return delta_.at(i);
  }

  /// {g_i, g_j}; pairs not stored directly are obtained by antisymmetry.
  Element bracket_of_generators(std::size_t i, std::size_t j) const {
    if (!has_bracket_) throw MissingDataError("model has no bracket data");
    if (i <= j) {
      auto it = bracket_.find({i, j});
      return it == bracket_.end() ? algebra_->zero() : it->second;
    }
    return scale(-swap_sign(j, i), bracket_of_generators(j, i));
  }

  /// Stored bracket values, keyed by (i, j) with i <= j.
  const std::map<std::pair<std::size_t, std::size_t>, Element>& bracket_table()
      const {
    return bracket_;
  }

  /// (-1)^{(|g_i|+1)(|g_j|+1)}
  int swap_sign(std::size_t i, std::size_t j) const {
    const auto a = algebra_->generator_spec(i).degree + 1;
    const auto b = algebra_->generator_spec(j).degree + 1;
    return (is_odd(a) && is_odd(b)) ? -1 : 1;
  }

 private:
  LoopModel(std::shared_ptr<const GradedAlgebra> algebra, Element c0)
      : algebra_(std::move(algebra)), c0_(std::move(c0)) {}

  std::shared_ptr<const GradedAlgebra> algebra_;
  std::int64_t dim_ = 0;
  Integer euler_ = 0;
  Element c0_;
  bool has_delta_ = false;
  bool has_bracket_ = false;
  bool simply_connected_ = false;
  std::vector<Element> delta_;
  std::map<std::pair<std::size_t, std::size_t>, Element> bracket_;
};

// ---------------------------------------------------------------------------
// Loop bracket and BV operator

inline int sign_of_parity(std::int64_t exponent) {
  return is_odd(exponent) ? -1 : 1;
}

inline void require_model_element(const LoopModel& model, const Element& x) {
  if (x.algebra_ptr() != model.algebra_ptr())
    throw std::invalid_argument("element does not belong to this model");
}

/// Bracket of two (not necessarily normal) monomials, expanded by the
/// graded Leibniz rule in the right slot and graded antisymmetry.
inline Element bracket_monomials(const LoopModel& model, const Monomial& a,
                                 const Monomial& b) {
  const auto& alg = model.algebra();
  if (a.is_unit() || b.is_unit()) return alg.zero();
  if (b.total() >= 2) {
    // {a, g*r} = {a,g}*r + (-1)^{(|a|+1)|g|} g*{a,r}
    const std::size_t g = *b.leading_generator();
    Monomial rest = b;
    rest[g] -= 1;
    const Monomial gm = alg.generator_monomial(g);
    Element first = mul(bracket_monomials(model, a, gm), alg.monomial(rest));
    Element second = mul(alg.generator(g), bracket_monomials(model, a, rest));
    const auto exponent =
        checked_mul(checked_add(alg.degree(a), 1), alg.generator_spec(g).degree);
    return add(first, scale(sign_of_parity(exponent), second));
  }
  const std::size_t h = *b.leading_generator();
  if (a.total() == 1) return model.bracket_of_generators(*a.leading_generator(), h);
  // {a, h} = -(-1)^{(|a|+1)(|h|+1)} {h, a}
  const auto exponent = checked_mul(checked_add(alg.degree(a), 1),
                                    alg.generator_spec(h).degree + 1);
  return scale(-sign_of_parity(exponent),
               bracket_monomials(model, alg.generator_monomial(h), a));
}

inline Element bracket(const LoopModel& model, const Element& x,
                       const Element& y) {
  if (!model.has_bracket()) throw MissingDataError("model has no bracket data");
  require_model_element(model, x);
  require_model_element(model, y);
  Element acc = model.algebra().zero();
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms())
      acc = add(acc, scale(cx * cy, bracket_monomials(model, mx, my)));
  return acc;
}

/// Δ on a (not necessarily normal) monomial via
/// Δ(g*r) = Δ(g)*r + (-1)^{|g|} g*Δ(r) + (-1)^{|g|} {g, r}.
inline Element delta_monomial(const LoopModel& model, const Monomial& m) {
  const auto& alg = model.algebra();
  if (m.is_unit()) return alg.zero();
  const std::size_t g = *m.leading_generator();
  Monomial rest = m;
  rest[g] -= 1;
  const int sign = sign_of_parity(alg.generator_spec(g).degree);
  Element first = mul(model.delta_of_generator(g), alg.monomial(rest));
  Element second = mul(alg.generator(g), delta_monomial(model, rest));
  Element third =
      bracket_monomials(model, alg.generator_monomial(g), rest);
  return add(first, scale(sign, add(second, third)));
}

inline Element delta(const LoopModel& model, const Element& x) {
  if (!model.has_delta()) throw MissingDataError("model has no delta data");
  if (!model.has_bracket())
    throw MissingDataError("delta needs bracket data as well");
  require_model_element(model, x);
  Element acc = model.algebra().zero();
  for (const auto& [m, c] : x.terms())
    acc = add(acc, scale(c, delta_monomial(model, m)));
  return acc;
}

// ---------------------------------------------------------------------------
// Construction and validation

inline LoopModel LoopModel::create(LoopModelData data) {
  std::vector<ModelIssue> issues;
  if (!data.algebra) throw std::invalid_argument("model needs an algebra");
  const auto& alg = *data.algebra;

  if (data.dim < 1) issues.push_back({"dim", "dimension must be positive"});
  if (is_odd(data.dim) && data.euler != 0)
    issues.push_back({"euler",
                      "odd-dimensional manifolds have Euler characteristic 0"});

  if (!data.c0) {
    issues.push_back({"c0", "c0 required"});
    throw ModelError(std::move(issues));
  }
  const Element& c0 = *data.c0;
  if (c0.algebra_ptr() != data.algebra) {
    issues.push_back({"c0", "c0 belongs to a different algebra"});
    throw ModelError(std::move(issues));
  }
  const Degree c0deg = degree_of(c0);
  if (!c0deg.homogeneous() || c0deg.value != -data.dim) {
    std::string got = c0deg.is_zero()       ? "zero"
                      : c0deg.homogeneous() ? std::to_string(c0deg.value)
                                            : "inhomogeneous";
    issues.push_back({"c0", "c0 must be nonzero and homogeneous of degree " +
                                std::to_string(-data.dim) + " (got " + got +
                                ")"});
  }

  LoopModel model(data.algebra, c0);
  model.dim_ = data.dim;
  model.euler_ = data.euler;
  model.simply_connected_ = data.simply_connected;
  model.has_delta_ = data.has_delta;
  model.has_bracket_ = data.has_bracket;

  if (data.has_delta) {
    model.delta_.assign(alg.size(), alg.zero());
    std::set<std::size_t> seen;
    for (const auto& [name, value] : data.delta) {
      const std::string where = "delta:" + name;
      auto idx = alg.find(name);
      if (!idx) {
        issues.push_back({where, "delta of unknown generator '" + name + "'"});
        continue;
      }
      if (!seen.insert(*idx).second) {
        issues.push_back({where, "delta of '" + name + "' given twice"});
        continue;
      }
      if (value.algebra_ptr() != data.algebra) {
        issues.push_back({where, "value belongs to a different algebra"});
        continue;
      }
      const Degree d = degree_of(value);
      const auto expected = alg.generator_spec(*idx).degree + 1;
      if (!d.is_zero() && !(d.homogeneous() && d.value == expected)) {
        issues.push_back({where, "delta(" + name +
                                     ") must be homogeneous of degree " +
                                     std::to_string(expected)});
        continue;
      }
      model.delta_[*idx] = value;
    }
  }

  if (data.has_bracket) {
    for (const auto& entry : data.bracket) {
      const std::string where = "bracket:" + entry.left + "," + entry.right;
      auto i = alg.find(entry.left);
      auto j = alg.find(entry.right);
      if (!i || !j) {
        issues.push_back({where, "bracket of unknown generator"});
        continue;
      }
      if (entry.value.algebra_ptr() != data.algebra) {
        issues.push_back({where, "value belongs to a different algebra"});
        continue;
      }
      const Degree d = degree_of(entry.value);
      const auto expected =
          alg.generator_spec(*i).degree + alg.generator_spec(*j).degree + 1;
      if (!d.is_zero() && !(d.homogeneous() && d.value == expected)) {
        issues.push_back({where, "bracket must be homogeneous of degree " +
                                     std::to_string(expected)});
        continue;
      }
      // Store as (lo, hi); {g_j, g_i} = -(-1)^{(|g_i|+1)(|g_j|+1)} {g_i, g_j}.
      std::pair<std::size_t, std::size_t> key{*i, *j};
      Element value = entry.value;
      if (*i > *j) {
        key = {*j, *i};
        value = scale(-model.swap_sign(*j, *i), value);
      }
      if (key.first == key.second) {
        const Element swapped = scale(-model.swap_sign(*i, *i), value);
        if (!(swapped == value)) {
          issues.push_back(
              {where, "self-bracket violates graded antisymmetry"});
          continue;
        }
      }
      auto [it, inserted] = model.bracket_.try_emplace(key, value);
      if (!inserted && !(it->second == value))
        issues.push_back({where,
                          "bracket given inconsistently for both orders"});
    }
  }

  if (data.has_delta && !data.has_bracket)
    issues.push_back({"delta", "delta data requires bracket data"});

  if (!issues.empty()) throw ModelError(std::move(issues));

  if (model.has_delta_) {
    const Element dc0 = delta(model, model.c0_);
    if (!dc0.is_zero())
      throw ModelError("c0", "delta(c0) must vanish");
  }
  return model;
}

/// Builds the algebra and the model from a name-based description,
/// enforcing every model invariant. Throws ModelError.
inline LoopModel validate_model(const ModelSpec& spec) {
  auto algebra = GradedAlgebra::create(spec.generators, spec.relations);
  LoopModelData data;
  data.algebra = algebra;
  data.dim = spec.dim;
  data.euler = spec.euler;
  data.simply_connected = spec.simply_connected;
  std::vector<ModelIssue> issues;
  auto convert = [&](const std::string& where, const RawPolynomial& poly)
      -> std::optional<Element> {
    try {
      return from_raw(*algebra, poly);
    } catch (const std::invalid_argument& e) {
      issues.push_back({where, e.what()});
      return std::nullopt;
    }
  };
  if (spec.c0) data.c0 = convert("c0", *spec.c0);
  if (spec.delta) {
    data.has_delta = true;
    for (const auto& [name, poly] : *spec.delta)
      if (auto v = convert("delta:" + name, poly))
        data.delta.emplace_back(name, std::move(*v));
  }
  if (spec.bracket) {
    data.has_bracket = true;
    for (const auto& [l, r, poly] : *spec.bracket)
      if (auto v = convert("bracket:" + l + "," + r, poly))
        data.bracket.push_back({l, r, std::move(*v)});
  }
  if (!issues.empty()) throw ModelError(std::move(issues));
  if (spec.c0 && !data.c0) throw ModelError("c0", "invalid c0");
  return LoopModel::create(std::move(data));
}

inline Element generator_element(const LoopModel& model, std::string_view name) {
  return model.algebra().generator(name);
}

}  // namespace loopcalc
