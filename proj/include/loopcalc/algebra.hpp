#pragma once

// Finitely presented graded-commutative algebras over Z.
//
// An algebra is given by generators of integer degree (odd generators are
// exterior) and monomial relations k*m = 0. Because every relation is a
// single term, the quotient is the direct sum over monomials m of
// Z/modulus(m), where modulus(m) is the gcd of the k over all relations
// whose monomial divides m. Elements store exactly one representative per
// monomial, so equality is structural.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "loopcalc/error.hpp"
#include "loopcalc/integer.hpp"

namespace loopcalc {

struct GeneratorSpec {
  std::string name;
  std::int64_t degree = 0;  // loop-algebra grading: H-degree minus dim
  bool geometric = false;   // lies in the image of H_*(M)

  bool odd() const { return is_odd(degree); }
};

/// Exponent vector indexed by generator position in the owning algebra.
struct Monomial {
  std::vector<std::int64_t> exponents;

  Monomial() = default;
  explicit Monomial(std::size_t n) : exponents(n, 0) {}
  explicit Monomial(std::vector<std::int64_t> e) : exponents(std::move(e)) {}

  std::size_t size() const { return exponents.size(); }
  std::int64_t operator[](std::size_t i) const { return exponents[i]; }
  std::int64_t& operator[](std::size_t i) { return exponents[i]; }

  bool is_unit() const {
    return std::all_of(exponents.begin(), exponents.end(),
                       [](std::int64_t e) { return e == 0; });
  }

  std::int64_t total() const {
    std::int64_t t = 0;
    for (auto e : exponents) t = checked_add(t, e);
    return t;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exponents.size(); ++i)
      if (exponents[i] > other.exponents[i]) return false;
    return true;
  }

  // Index of the first generator with nonzero exponent, if any.
  std::optional<std::size_t> leading_generator() const {
    for (std::size_t i = 0; i < exponents.size(); ++i)
      if (exponents[i] != 0) return i;
    return std::nullopt;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = checked_add(a[i], b[i]);
  return r;
}

/// Print/storage order: total exponent ascending, then exponent vector
/// descending, so the unit comes first followed by generators in
/// declaration order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto ta = a.total();
    const auto tb = b.total();
    if (ta != tb) return ta < tb;
    return b.exponents < a.exponents;
  }
};

struct Relation {
  Integer coefficient;  // k >= 1; the relation is k*monomial = 0
  Monomial monomial;
  bool implicit = false;  // exterior square of an odd generator
};

/// Relation as written by a user: coefficient and a product of named
/// generator powers.
struct RelationSpec {
  Integer coefficient;
  std::vector<std::pair<std::string, std::int64_t>> factors;
};

struct BasisEntry {
  Monomial monomial;
  Integer modulus;  // 0 = free summand Z

  friend bool operator==(const BasisEntry&, const BasisEntry&) = default;
};

/// Homogeneity of an element.
struct Degree {
  enum class Kind { Homogeneous, Zero, Inhomogeneous };
  Kind kind = Kind::Zero;
  std::int64_t value = 0;

  bool homogeneous() const { return kind == Kind::Homogeneous; }
  bool is_zero() const { return kind == Kind::Zero; }

  friend bool operator==(const Degree&, const Degree&) = default;

  static Degree of(std::int64_t v) { return {Kind::Homogeneous, v}; }
  static Degree zero() { return {Kind::Zero, 0}; }
  static Degree inhomogeneous() { return {Kind::Inhomogeneous, 0}; }
};

/// Loop-algebra degree k corresponds to homological degree k + dim.
inline std::int64_t to_homological_degree(std::int64_t loop_degree,
                                          std::int64_t dim) {
  return checked_add(loop_degree, dim);
}
inline std::int64_t to_loop_degree(std::int64_t homological_degree,
                                   std::int64_t dim) {
  return checked_add(homological_degree, -dim);
}

using Terms = std::map<Monomial, Integer, MonomialOrder>;

class Element;

inline bool is_reserved_name(std::string_view name) {
  return name == "psi" || name == "delta" || name == "bracket" ||
         name == "mu";
}

inline bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
    return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

class GradedAlgebra : public std::enable_shared_from_this<GradedAlgebra> {
 public:
  /// Validates and builds an algebra. Throws ModelError listing every
  /// problem found (bad or duplicate names, unknown generators in
  /// relations, non-positive coefficients, relations on the unit,
  /// non-nilpotent generators of degree <= 0).
  static std::shared_ptr<const GradedAlgebra> create(
      std::vector<GeneratorSpec> generators,
      std::vector<RelationSpec> relations);

  std::size_t size() const { return generators_.size(); }
  const std::vector<GeneratorSpec>& generators() const { return generators_; }
  const GeneratorSpec& generator_spec(std::size_t i) const {
    return generators_.at(i);
  }
  const std::vector<Relation>& relations() const { return relations_; }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(std::string_view name) const {
    auto i = find(name);
    if (!i) throw std::invalid_argument("unknown generator '" +
                                        std::string(name) + "'");
    return *i;
  }

  std::int64_t degree(const Monomial& m) const {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0)
        d = checked_add(d, checked_mul(m[i], generators_[i].degree));
    return d;
  }

  /// gcd of the coefficients of all relations whose monomial divides m.
  Integer modulus(const Monomial& m) const {
    Integer g = 0;
    for (const auto& r : relations_) {
      if (!r.monomial.divides(m)) continue;
      g = gcd(g, r.coefficient);
      if (g == 1) break;
    }
    return g;
  }

  /// Largest exponent of generator i in a nonzero monomial, or nullopt when
  /// the generator is not nilpotent.
  std::optional<std::int64_t> exponent_bound(std::size_t i) const {
    return bounds_.at(i);
  }

  /// Sign acquired when the product left*right is reordered into canonical
  /// generator order: one factor of -1 per odd/odd transposition.
  int koszul_sign(const Monomial& left, const Monomial& right) const {
    // odd_after = number of odd-weight factors of `left` at positions > j
    std::int64_t odd_after = 0;
    for (std::size_t i = 0; i < left.size(); ++i)
      if (odd_weight(i, left[i])) ++odd_after;
    std::int64_t transpositions = 0;
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (odd_weight(j, left[j])) --odd_after;
      if (odd_weight(j, right[j])) transpositions += odd_after;
    }
    return (transpositions % 2 == 0) ? 1 : -1;
  }

  Monomial unit_monomial() const { return Monomial(size()); }

  Monomial generator_monomial(std::size_t i, std::int64_t e = 1) const {
    Monomial m(size());
    m[i] = e;
    return m;
  }

  /// Monomial from named factors, multiplied in the written order. Returns
  /// the canonical monomial and the Koszul sign of the reordering.
  std::pair<Monomial, int> monomial_from_word(
      const std::vector<std::pair<std::string, std::int64_t>>& word) const {
    Monomial acc = unit_monomial();
    int sign = 1;
    for (const auto& [name, e] : word) {
      if (e < 0) throw std::invalid_argument("negative exponent");
      Monomial f = generator_monomial(index_of(name), e);
      sign *= koszul_sign(acc, f);
      acc = acc * f;
    }
    return {acc, sign};
  }

  Element normal_form(std::vector<std::pair<Integer, Monomial>> raw) const;
  Element zero() const;
  Element one() const;
  Element constant(const Integer& k) const;
  Element generator(std::size_t i) const;
  Element generator(std::string_view name) const;
  Element monomial(const Monomial& m, const Integer& coefficient = 1) const;

  /// Every nonzero normal monomial of the given degree with its modulus, in
  /// MonomialOrder.
  std::vector<BasisEntry> enumerate_basis(std::int64_t degree) const;

  /// Basis monomials of every degree in [-max_abs_degree, max_abs_degree],
  /// ordered by degree, then MonomialOrder.
  std::vector<BasisEntry> basis_window(std::int64_t max_abs_degree) const {
    std::vector<BasisEntry> out;
    for (std::int64_t k = -max_abs_degree; k <= max_abs_degree; ++k) {
      auto part = enumerate_basis(k);
      out.insert(out.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
    return out;
  }

 private:
  GradedAlgebra() = default;

  bool odd_weight(std::size_t gen, std::int64_t e) const {
    return is_odd(e) && generators_[gen].odd();
  }

  std::vector<GeneratorSpec> generators_;
  std::vector<Relation> relations_;
  std::vector<std::optional<std::int64_t>> bounds_;
  std::unordered_map<std::string, std::size_t> index_;
};

class Element {
 public:
  explicit Element(std::shared_ptr<const GradedAlgebra> algebra)
      : algebra_(std::move(algebra)) {
    if (!algebra_) throw std::invalid_argument("element needs an algebra");
  }

  const GradedAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const GradedAlgebra>& algebra_ptr() const {
    return algebra_;
  }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
  }

 private:
  friend class GradedAlgebra;
  Element(std::shared_ptr<const GradedAlgebra> algebra, Terms terms)
      : algebra_(std::move(algebra)), terms_(std::move(terms)) {}

  std::shared_ptr<const GradedAlgebra> algebra_;
  Terms terms_;
};

// ---------------------------------------------------------------------------
// GradedAlgebra implementation

inline std::shared_ptr<const GradedAlgebra> GradedAlgebra::create(
    std::vector<GeneratorSpec> generators,
    std::vector<RelationSpec> relations) {
  std::vector<ModelIssue> issues;
  std::shared_ptr<GradedAlgebra> alg(new GradedAlgebra());

  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    const std::string where = "generator:" + g.name;
    if (!is_identifier(g.name)) {
      issues.push_back({where, "invalid generator name '" + g.name + "'"});
      continue;
    }
    if (is_reserved_name(g.name)) {
      issues.push_back({where, "'" + g.name + "' is a reserved name"});
      continue;
    }
    if (!alg->index_.emplace(g.name, i).second)
      issues.push_back({where, "duplicate generator '" + g.name + "'"});
  }
  alg->generators_ = std::move(generators);
  const std::size_t n = alg->generators_.size();

  for (std::size_t r = 0; r < relations.size(); ++r) {
    const auto& spec = relations[r];
    const std::string where = "relation:" + std::to_string(r);
    if (spec.coefficient < 1) {
      issues.push_back({where, "relation coefficient must be positive"});
      continue;
    }
    Monomial m(n);
    bool ok = true;
    for (const auto& [name, e] : spec.factors) {
      auto it = alg->index_.find(name);
      if (it == alg->index_.end()) {
        issues.push_back(
            {where, "relation references unknown generator '" + name + "'"});
        ok = false;
        continue;
      }
      if (e < 0) {
        issues.push_back({where, "negative exponent in relation"});
        ok = false;
        continue;
      }
      m[it->second] = checked_add(m[it->second], e);
    }
    if (!ok) continue;
    if (m.is_unit()) {
      issues.push_back({where, "relation on the unit monomial is not allowed"});
      continue;
    }
    alg->relations_.push_back({spec.coefficient, std::move(m), false});
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (alg->generators_[i].odd()) {
      Monomial sq(n);
      sq[i] = 2;
      alg->relations_.push_back({Integer(1), std::move(sq), true});
    }
  }

  // Nilpotency bound from the pure-power relations of each generator.
  alg->bounds_.assign(n, std::nullopt);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::pair<std::int64_t, Integer>> powers;
    for (const auto& rel : alg->relations_) {
      bool pure = rel.monomial[i] > 0;
      for (std::size_t j = 0; j < n && pure; ++j)
        if (j != i && rel.monomial[j] != 0) pure = false;
      if (pure) powers.emplace_back(rel.monomial[i], rel.coefficient);
    }
    std::sort(powers.begin(), powers.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Integer g = 0;
    for (const auto& [e, k] : powers) {
      g = gcd(g, k);
      if (g == 1) {
        alg->bounds_[i] = e - 1;
        break;
      }
    }
    const auto& gen = alg->generators_[i];
    if (gen.degree <= 0 && !alg->bounds_[i])
      issues.push_back({"generator:" + gen.name,
                        "generator '" + gen.name + "' of degree " +
                            std::to_string(gen.degree) +
                            " is not nilpotent under the relations"});
  }

  if (!issues.empty()) throw ModelError(std::move(issues));
  return alg;
}

inline Element GradedAlgebra::normal_form(
    std::vector<std::pair<Integer, Monomial>> raw) const {
  Terms acc;
  for (auto& [c, m] : raw) {
    if (m.size() != size())
      throw std::invalid_argument("monomial has wrong number of generators");
    if (c == 0) continue;
    auto [it, inserted] = acc.try_emplace(std::move(m), c);
    if (!inserted) it->second += c;
  }
  for (auto it = acc.begin(); it != acc.end();) {
    const Integer mod = modulus(it->first);
    it->second = reduce_mod(it->second, mod);
    if (it->second == 0 || mod == 1)
      it = acc.erase(it);
    else
      ++it;
  }
  return Element(shared_from_this(), std::move(acc));
}

inline Element GradedAlgebra::zero() const {
  return Element(shared_from_this());
}

inline Element GradedAlgebra::one() const { return constant(1); }

inline Element GradedAlgebra::constant(const Integer& k) const {
  return normal_form({{k, unit_monomial()}});
}

inline Element GradedAlgebra::generator(std::size_t i) const {
  return normal_form({{Integer(1), generator_monomial(i)}});
}

inline Element GradedAlgebra::generator(std::string_view name) const {
  return generator(index_of(name));
}

inline Element GradedAlgebra::monomial(const Monomial& m,
                                       const Integer& coefficient) const {
  return normal_form({{coefficient, m}});
}

inline std::vector<BasisEntry> GradedAlgebra::enumerate_basis(
    std::int64_t target) const {
  const std::size_t n = size();
  // suffix_min[i]: most negative degree reachable with generators i..n-1.
  // suffix_max[i]: most positive, nullopt when unbounded.
  std::vector<std::int64_t> suffix_min(n + 1, 0);
  std::vector<std::optional<std::int64_t>> suffix_max(n + 1, 0);
  for (std::size_t k = n; k-- > 0;) {
    const auto d = generators_[k].degree;
    const auto& b = bounds_[k];
    suffix_min[k] = suffix_min[k + 1];
    suffix_max[k] = suffix_max[k + 1];
    if (d < 0) {
      suffix_min[k] = checked_add(suffix_min[k], checked_mul(*b, d));
    } else if (d > 0) {
      if (b && suffix_max[k])
        suffix_max[k] = checked_add(*suffix_max[k], checked_mul(*b, d));
      else
        suffix_max[k] = std::nullopt;
    }
  }

  std::vector<BasisEntry> out;
  Monomial cur(n);
  auto dfs = [&](auto&& self, std::size_t i, std::int64_t partial) -> void {
    if (i == n) {
      if (partial != target) return;
      Integer mod = modulus(cur);
      if (mod != 1) out.push_back({cur, std::move(mod)});
      return;
    }
    if (partial + suffix_min[i] > target) return;
    if (suffix_max[i] && partial + *suffix_max[i] < target) return;
    const auto d = generators_[i].degree;
    const auto& bound = bounds_[i];
    for (std::int64_t e = 0;; ++e) {
      if (bound && e > *bound) break;
      const std::int64_t s = checked_add(partial, checked_mul(e, d));
      if (d > 0 && s + suffix_min[i + 1] > target) break;
      cur[i] = e;
      // Divisibility is monotone: once cur is killed, so is every extension.
      if (e > 0 && modulus(cur) == 1) break;
      self(self, i + 1, s);
    }
    cur[i] = 0;
  };
  dfs(dfs, 0, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return MonomialOrder{}(a.monomial, b.monomial);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Arithmetic

inline void require_same_algebra(const Element& x, const Element& y) {
  if (x.algebra_ptr() != y.algebra_ptr())
    throw std::invalid_argument("elements belong to different models");
}

inline std::vector<std::pair<Integer, Monomial>> raw_terms(const Element& x) {
  std::vector<std::pair<Integer, Monomial>> raw;
  raw.reserve(x.terms().size());
  for (const auto& [m, c] : x.terms()) raw.emplace_back(c, m);
  return raw;
}

inline Element add(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  auto raw = raw_terms(x);
  for (const auto& [m, c] : y.terms()) raw.emplace_back(c, m);
  return x.algebra().normal_form(std::move(raw));
}

inline Element scale(const Integer& k, const Element& x) {
  auto raw = raw_terms(x);
  for (auto& t : raw) t.first *= k;
  return x.algebra().normal_form(std::move(raw));
}

inline Element negate(const Element& x) { return scale(-1, x); }

inline Element subtract(const Element& x, const Element& y) {
  return add(x, negate(y));
}

/// Loop product: bilinear extension of monomial concatenation with Koszul
/// signs.
inline Element mul(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  const auto& alg = x.algebra();
  std::vector<std::pair<Integer, Monomial>> raw;
  raw.reserve(x.terms().size() * y.terms().size());
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      Integer c = cx * cy;
      if (alg.koszul_sign(mx, my) < 0) c = -c;
      raw.emplace_back(std::move(c), mx * my);
    }
  }
  return alg.normal_form(std::move(raw));
}

inline Element power(const Element& x, std::uint64_t e) {
  Element result = x.algebra().one();
  Element base = x;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

inline Degree degree_of(const Element& x) {
  if (x.is_zero()) return Degree::zero();
  std::optional<std::int64_t> d;
  for (const auto& [m, c] : x.terms()) {
    const auto dm = x.algebra().degree(m);
    if (d && *d != dm) return Degree::inhomogeneous();
    d = dm;
  }
  return Degree::of(*d);
}

/// Splits x into its homogeneous components, keyed by degree.
inline std::map<std::int64_t, Element> homogeneous_parts(const Element& x) {
  std::map<std::int64_t, std::vector<std::pair<Integer, Monomial>>> parts;
  for (const auto& [m, c] : x.terms())
    parts[x.algebra().degree(m)].emplace_back(c, m);
  std::map<std::int64_t, Element> out;
  for (auto& [d, raw] : parts)
    out.emplace(d, x.algebra().normal_form(std::move(raw)));
  return out;
}

inline Element operator+(const Element& x, const Element& y) {
  return add(x, y);
}
inline Element operator-(const Element& x, const Element& y) {
  return subtract(x, y);
}
inline Element operator-(const Element& x) { return negate(x); }
inline Element operator*(const Element& x, const Element& y) {
  return mul(x, y);
}
inline Element operator*(const Integer& k, const Element& x) {
  return scale(k, x);
}

}  // namespace loopcalc
