#pragma once

// Check mode: runs every algebraic law of the calculator over the basis
// window |degree| <= W and over seeded random elements. Failures carry a
// witness expression. Reports are deterministic in (model, window, seed).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "loopcalc/coproduct.hpp"
#include "loopcalc/format.hpp"
#include "loopcalc/model.hpp"
#include "loopcalc/model_file.hpp"
#include "loopcalc/surface.hpp"
#include "loopcalc/tensor.hpp"
#include "loopcalc/tqft.hpp"

namespace loopcalc {

enum class CheckStatus { Pass, Fail, Skip };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::size_t cases = 0;
  std::string note;     // e.g. why a law holds trivially or was skipped
  std::string witness;  // first counterexample
};

struct CheckReport {
  std::string model;
  std::int64_t window = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> results;

  bool passed() const {
    return std::none_of(results.begin(), results.end(), [](const auto& r) {
      return r.status == CheckStatus::Fail;
    });
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& r : results)
      if (r.name == name) return &r;
    return nullptr;
  }
};

struct CheckOptions {
  std::int64_t window = 12;
  std::uint64_t seed = 1;
  std::size_t random_cases = 200;
  std::size_t max_exhaustive = 20000;  // cap on exhaustive triple loops
};

namespace check_names {
inline constexpr const char* kNormalForm = "normal form is canonical";
inline constexpr const char* kUnit = "ring: unit law";
inline constexpr const char* kAssociativity = "ring: associativity";
inline constexpr const char* kDistributivity = "ring: distributivity";
inline constexpr const char* kAdditive = "ring: additive group laws";
inline constexpr const char* kCommutativity = "ring: graded commutativity";
inline constexpr const char* kTorsion = "torsion identity chi*c0*m = 0 in nonzero degree";
inline constexpr const char* kPsiForms = "coproduct: left and right forms agree";
inline constexpr const char* kPsiSymmetry = "coproduct: symmetric under twist";
inline constexpr const char* kPsiConcentration = "coproduct: concentrated in degree 0";
inline constexpr const char* kPsiUnitPlusDecomposable = "coproduct: unit plus decomposables";
inline constexpr const char* kPsiZeroEuler = "coproduct: vanishes identically when chi = 0";
inline constexpr const char* kFrobenius = "coproduct: Frobenius compatibility";
inline constexpr const char* kSplit = "coproduct: independent of split point";
inline constexpr const char* kCoassociativity = "coproduct: coassociativity";
inline constexpr const char* kTqftVanishing = "tqft: vanishes for genus >= 1 or >= 3 outputs";
inline constexpr const char* kTqftClosedForm = "tqft: closed form matches pants decomposition";
inline constexpr const char* kTqftFunctoriality = "tqft: functorial under sewing";
inline constexpr const char* kTqftDegree = "tqft: degree shift chi(surface)*dim";
inline constexpr const char* kTqftSewGenus = "tqft: sewing preserves positive genus";
inline constexpr const char* kDeltaUnit = "bv: delta(1) = 0";
inline constexpr const char* kDeltaDegree = "bv: delta raises degree by 1";
inline constexpr const char* kDeltaSquare = "bv: delta squares to zero";
inline constexpr const char* kBvIdentity = "bv: BV identity";
inline constexpr const char* kBvRelations = "bv: data compatible with relations";
inline constexpr const char* kDeltaPsi = "bv: factorwise delta of coproduct vanishes";
inline constexpr const char* kBracketUnit = "bracket: unit is central";
inline constexpr const char* kBracketAntisymmetry = "bracket: graded antisymmetry";
inline constexpr const char* kBracketTorsion = "bracket: chi*{c0,m} = 0";
inline constexpr const char* kBracketGeometric = "bracket: coproduct of bracket with geometric class vanishes";
}  // namespace check_names

/// Deterministic draws from a 64-bit Mersenne twister. Reduction is done
/// by hand so results do not depend on the standard library's
/// distributions.
class CheckRng {
 public:
  explicit CheckRng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

constexpr const char* kZeroEulerNote =
    "vanishes identically: Euler characteristic is 0";

class LawRecorder {
 public:
  explicit LawRecorder(std::string name) { result_.name = std::move(name); }

  // Records one case; `witness` is called only on failure.
  void expect(bool ok, const std::function<std::string()>& witness) {
    ++result_.cases;
    if (!ok && result_.status != CheckStatus::Fail) {
      result_.status = CheckStatus::Fail;
      result_.witness = witness();
    }
  }
  void note(std::string n) { result_.note = std::move(n); }
  void skip(std::string why) {
    result_.status = CheckStatus::Skip;
    result_.note = std::move(why);
  }
  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

class Checker {
 public:
  Checker(const LoopModel& model, const CheckOptions& opt)
      : model_(model), alg_(model.algebra()), opt_(opt), rng_(opt.seed),
        basis_(model.algebra().basis_window(opt.window)) {}

  std::vector<CheckResult> run() {
    std::vector<CheckResult> out;
    out.push_back(normal_form());
    out.push_back(unit_law());
    out.push_back(associativity());
    out.push_back(distributivity());
    out.push_back(additive());
    out.push_back(commutativity());
    out.push_back(torsion());
    out.push_back(psi_forms());
    out.push_back(psi_symmetry());
    out.push_back(psi_concentration());
    out.push_back(psi_unit_plus_decomposable());
    out.push_back(psi_zero_euler());
    out.push_back(frobenius());
    out.push_back(split_independence());
    out.push_back(coassociativity());
    out.push_back(tqft_vanishing());
    out.push_back(tqft_closed_form());
    out.push_back(tqft_functoriality());
    out.push_back(tqft_degree_shift());
    out.push_back(tqft_sew_genus());
    out.push_back(delta_unit());
    out.push_back(delta_degree());
    out.push_back(delta_square());
    out.push_back(bv_identity());
    out.push_back(bv_relations());
    out.push_back(delta_psi());
    out.push_back(bracket_unit());
    out.push_back(bracket_antisymmetry());
    out.push_back(bracket_torsion());
    out.push_back(bracket_geometric());
    return out;
  }

 private:
  // -- sampling ------------------------------------------------------------

  Element basis_element(std::size_t i) const { return alg_.monomial(basis_[i].monomial); }

  Element random_basis_element() {
    if (basis_.empty()) return alg_.one();
    return basis_element(rng_.below(basis_.size()));
  }

  // Up to three basis monomials with coefficients in [-5, 5].
  Element random_element() {
    std::vector<std::pair<Integer, Monomial>> raw;
    const std::size_t n = 1 + rng_.below(3);
    for (std::size_t i = 0; i < n && !basis_.empty(); ++i)
      raw.emplace_back(Integer(rng_.between(-5, 5)),
                       basis_[rng_.below(basis_.size())].monomial);
    return alg_.normal_form(std::move(raw));
  }

  // A homogeneous combination: all terms share the degree of a random pick.
  Element random_homogeneous() {
    if (basis_.empty()) return alg_.one();
    const auto d = alg_.degree(basis_[rng_.below(basis_.size())].monomial);
    std::vector<std::size_t> same;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (alg_.degree(basis_[i].monomial) == d) same.push_back(i);
    std::vector<std::pair<Integer, Monomial>> raw;
    const std::size_t n = 1 + rng_.below(2);
    for (std::size_t i = 0; i < n; ++i)
      raw.emplace_back(Integer(rng_.between(-5, 5)),
                       basis_[same[rng_.below(same.size())]].monomial);
    return alg_.normal_form(std::move(raw));
  }

  std::int64_t hdeg(const Element& x) const {
    const Degree d = degree_of(x);
    return d.homogeneous() ? d.value : 0;
  }

  std::string fmt(const Element& x) const { return format_element(x); }
  std::string fmt(const TensorElement& t) const { return format_tensor(t); }
  std::string fmt_list(const std::vector<Element>& xs) const {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
      out += (i ? ", " : "") + fmt(xs[i]);
    return out;
  }

  TensorElement basis_tensor(const std::vector<std::size_t>& idx) const {
    std::vector<Element> xs;
    for (auto i : idx) xs.push_back(basis_element(i));
    return tensor(xs);
  }

  // Input tuples for a p-input surface: every basis element for p = 1,
  // seeded random basis tuples otherwise.
  std::vector<TensorElement> surface_inputs(std::int64_t p, std::size_t samples) {
    std::vector<TensorElement> out;
    if (basis_.empty()) return out;
    if (p == 1) {
      for (std::size_t i = 0; i < basis_.size(); ++i) out.push_back(basis_tensor({i}));
      return out;
    }
    for (std::size_t k = 0; k < samples; ++k) {
      std::vector<std::size_t> idx;
      for (std::int64_t j = 0; j < p; ++j) idx.push_back(rng_.below(basis_.size()));
      out.push_back(basis_tensor(idx));
    }
    return out;
  }

  static std::string surface_text(const Surface& s) {
    std::ostringstream os;
    os << s;
    return os.str();
  }

  bool zero_euler() const { return model_.euler() == 0; }

  // -- ring ----------------------------------------------------------------

  CheckResult normal_form() {
    LawRecorder law(check_names::kNormalForm);
    for (std::size_t k = 0; k < opt_.random_cases; ++k) {
      std::vector<std::pair<Integer, Monomial>> raw;
      const std::size_t n = 1 + rng_.below(5);
      for (std::size_t i = 0; i < n && !basis_.empty(); ++i) {
        Monomial m = basis_[rng_.below(basis_.size())].monomial;
        // Occasionally push past the relations.
        if (rng_.below(3) == 0) m = m * basis_[rng_.below(basis_.size())].monomial;
        raw.emplace_back(Integer(rng_.between(-7, 7)), m);
      }
      const Element once = alg_.normal_form(raw);
      auto shuffled = raw;
      for (std::size_t i = shuffled.size(); i > 1; --i)
        std::swap(shuffled[i - 1], shuffled[rng_.below(i)]);
      const Element again = alg_.normal_form(shuffled);
      const Element twice = alg_.normal_form(raw_terms(once));
      law.expect(once == again && once == twice, [&] {
        return "normal form of " + std::to_string(raw.size()) +
               " terms depends on order or is not idempotent: " + fmt(once) +
               " vs " + fmt(again) + " vs " + fmt(twice);
      });
    }
    return law.take();
  }

  CheckResult unit_law() {
    LawRecorder law(check_names::kUnit);
    const Element one = alg_.one();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Element m = basis_element(i);
      law.expect(mul(one, m) == m && mul(m, one) == m,
                 [&] { return "1*" + fmt(m) + " != " + fmt(m); });
    }
    for (std::size_t k = 0; k < opt_.random_cases; ++k) {
      const Element x = random_element();
      law.expect(mul(one, x) == x && mul(x, one) == x,
                 [&] { return "1*(" + fmt(x) + ") != " + fmt(x); });
    }
    return law.take();
  }

  CheckResult associativity() {
    LawRecorder law(check_names::kAssociativity);
    const std::size_t n = basis_.size();
    const bool exhaustive = n * n * n <= opt_.max_exhaustive;
    auto check = [&](const Element& x, const Element& y, const Element& z) {
      law.expect(mul(mul(x, y), z) == mul(x, mul(y, z)), [&] {
        return "(" + fmt(x) + ")*(" + fmt(y) + ")*(" + fmt(z) +
               ") depends on bracketing";
      });
    };
    if (exhaustive) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            check(basis_element(i), basis_element(j), basis_element(k));
    } else {
      for (std::size_t c = 0; c < opt_.max_exhaustive; ++c)
        check(random_basis_element(), random_basis_element(), random_basis_element());
      law.note("basis triples sampled; window too large for all of them");
    }
    for (std::size_t c = 0; c < opt_.random_cases; ++c)
      check(random_element(), random_element(), random_element());
    return law.take();
  }

  CheckResult distributivity() {
    LawRecorder law(check_names::kDistributivity);
    for (std::size_t c = 0; c < opt_.random_cases; ++c) {
      const Element x = random_element(), y = random_element(), z = random_element();
      law.expect(mul(x, add(y, z)) == add(mul(x, y), mul(x, z)) &&
                     mul(add(x, y), z) == add(mul(x, z), mul(y, z)),
                 [&] {
                   return "x = " + fmt(x) + ", y = " + fmt(y) + ", z = " + fmt(z);
                 });
    }
    return law.take();
  }

  CheckResult additive() {
    LawRecorder law(check_names::kAdditive);
    for (std::size_t c = 0; c < opt_.random_cases; ++c) {
      const Element x = random_element(), y = random_element(), z = random_element();
      const bool ok = add(x, y) == add(y, x) &&
                      add(add(x, y), z) == add(x, add(y, z)) &&
                      add(x, negate(x)).is_zero() && scale(0, x).is_zero() &&
                      add(x, alg_.zero()) == x;
      law.expect(ok, [&] {
        return "x = " + fmt(x) + ", y = " + fmt(y) + ", z = " + fmt(z);
      });
    }
    return law.take();
  }

  CheckResult commutativity() {
    LawRecorder law(check_names::kCommutativity);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      for (std::size_t j = 0; j < basis_.size(); ++j) {
        const Element x = basis_element(i), y = basis_element(j);
        const bool odd = is_odd(hdeg(x)) && is_odd(hdeg(y));
        const Element yx = mul(y, x);
        law.expect(mul(x, y) == (odd ? negate(yx) : yx), [&] {
          return fmt(x) + "*" + fmt(y) + " = " + fmt(mul(x, y)) + " but " +
                 fmt(y) + "*" + fmt(x) + " = " + fmt(yx);
        });
      }
    }
    return law.take();
  }

  // -- coproduct -----------------------------------------------------------

  CheckResult torsion() {
    LawRecorder law(check_names::kTorsion);
    const std::string chi = to_string(model_.euler());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Element m = basis_element(i);
      if (hdeg(m) == 0) continue;
      const Element value = scale(model_.euler(), mul(model_.c0(), m));
      law.expect(value.is_zero(), [&] {
        return "m = " + fmt(m) + ": chi*c0*m = " + fmt(value) + " != 0 (chi = " +
               chi + ", c0 = " + fmt(model_.c0()) + ")";
      });
    }
    if (zero_euler()) law.note(kZeroEulerNote);
    return law.take();
  }

  CheckResult psi_forms() {
    LawRecorder law(check_names::kPsiForms);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Element m = basis_element(i);
      const auto left = psi(model_, m), right = psi_mirror(model_, m);
      law.expect(left == right, [&] {
        return "psi(" + fmt(m) + ") = " + fmt(left) + " but mirror form gives " +
               fmt(right);
      });
    }
    if (zero_euler()) law.note(kZeroEulerNote);
    return law.take();
  }

  CheckResult psi_symmetry() {
    LawRecorder law(check_names::kPsiSymmetry);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Element m = basis_element(i);
      const auto t = psi(model_, m);
      law.expect(twist(t) == t, [&] {
        return "twist(psi(" + fmt(m) + ")) = " + fmt(twist(t)) + " != " + fmt(t);
      });
    }
    if (zero_euler()) law.note(kZeroEulerNote);
    return law.take();
  }

  // True when t = k*(c0 (x) c0) for some integer k.
  bool multiple_of_c0c0(const TensorElement& t) const {
    if (t.is_zero()) return true;
    const TensorElement base = tensor({model_.c0(), model_.c0()});
    if (base.is_zero()) return false;
    const auto& [tuple, b] = *base.terms().begin();
    auto it = t.terms().find(tuple);
    if (it == t.terms().end()) return false;
    if (it->second % b != 0) return false;
    return tensor_scale(it->second / b, base) == t;
  }

  CheckResult psi_concentration() {
    LawRecorder law(check_names::kPsiConcentration);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Element m = basis_element(i);
      const auto t = psi(model_, m);
      if (hdeg(m) != 0) {
        law.expect(t.is_zero(), [&] {
          return "psi(" + fmt(m) + ") = " + fmt(t) + " in degree " +
                 std::to_string(hdeg(m));
        });
      } else {
        law.expect(multiple_of_c0c0(t), [&] {
          return "psi(" + fmt(m) + ") = " + fmt(t) + " is not a multiple of c0 (x) c0";
        });
      }
    }
    if (zero_euler()) law.note(kZeroEulerNote);
    return law.take();
  }

  // psi(k + sum of products of nonzero-degree classes) = k*psi(1).
  CheckResult psi_unit_plus_decomposable() {
    LawRecorder law(check_names::kPsiUnitPlusDecomposable);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = 0; j < basis_.size(); ++j) {
        const auto di = alg_.degree(basis_[i].monomial);
        const auto dj = alg_.degree(basis_[j].monomial);
        if (di != 0 && di + dj == 0) pairs.emplace_back(i, j);
      }
    const TensorElement unit_image = psi(model_, alg_.one());
    for (std::size_t c = 0; c < opt_.random_cases; ++c) {
      const Integer k = rng_.between(-5, 5);
      Element x = alg_.constant(k);
      if (!pairs.empty()) {
        const auto [i, j] = pairs[rng_.below(pairs.size())];
        x = add(x, scale(Integer(rng_.between(-5, 5)),
                         mul(basis_element(i), basis_element(j))));
      }
      const auto lhs = psi(model_, x);
      const auto rhs = tensor_scale(k, unit_image);
      law.expect(lhs == rhs, [&] {
        return "psi(" + fmt(x) + ") = " + fmt(lhs) + " != " + fmt(rhs);
      });
    }
    if (zero_euler()) law.note(kZeroEulerNote);
    return law.take();
  }

  CheckResult psi_zero_euler() {
    LawRecorder law(check_names::kPsiZeroEuler);
    if (!zero_euler()) {
      law.skip("Euler characteristic is nonzero");
      return law.take();
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Element m = basis_element(i);
      const auto t = psi(model_, m);
      law.expect(t.is_zero(), [&] { return "psi(" + fmt(m) + ") = " + fmt(t); });
    }
    law.note(kZeroEulerNote);
    return law.take();
  }

  CheckResult frobenius() {
    LawRecorder law(check_names::kFrobenius);
    for (std::size_t c = 0; c < opt_.random_cases; ++c) {
      const Element a = random_element(), b = random_element();
      const auto whole = psi(model_, mul(a, b));
      const auto left = left_action(a, psi(model_, b));
      const auto right = right_action(psi(model_, a), b);
      law.expect(whole == left && whole == right, [&] {
        return "a = " + fmt(a) + ", b = " + fmt(b) + ": psi(ab) = " + fmt(whole) +
               ", a*psi(b) = " + fmt(left) + ", psi(a)*b = " + fmt(right);
      });
    }
    if (zero_euler()) law.note(kZeroEulerNote);
    return law.take();
  }

  CheckResult split_independence() {
    LawRecorder law(check_names::kSplit);
    for (std::size_t c = 0; c < opt_.random_cases; ++c) {
      std::vector<Element> factors;
      const std::size_t p = rng_.below(5);
      for (std::size_t i = 0; i < p; ++i) factors.push_back(random_element());
      const auto ref = psi(model_, product_of(model_, factors, 0, p));
      for (std::size_t ell = 0; ell <= p; ++ell) {
        const auto t = psi_split(model_, factors, ell);
        law.expect(t == ref, [&] {
          return "factors [" + fmt_list(factors) + "], ell = " +
                 std::to_string(ell) + ": " + fmt(t) + " != " + fmt(ref);
        });
      }
    }
    if (zero_euler()) law.note(kZeroEulerNote);
    return law.take();
  }

  CheckResult coassociativity() {
    LawRecorder law(check_names::kCoassociativity);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Element m = basis_element(i);
      const auto t = psi(model_, m);
      const auto first = psi_at(model_, t, 1), second = psi_at(model_, t, 2);
      law.expect(first == second, [&] {
        return "m = " + fmt(m) + ": (psi (x) 1)psi = " + fmt(first) +
               ", (1 (x) psi)psi = " + fmt(second);
      });
    }
    if (zero_euler()) law.note(kZeroEulerNote);
    return law.take();
  }

  // -- tqft ----------------------------------------------------------------

  CheckResult tqft_vanishing() {
    LawRecorder law(check_names::kTqftVanishing);
    for (std::int64_t g = 0; g <= 2; ++g)
      for (std::int64_t p = 1; p <= 3; ++p)
        for (std::int64_t q = 1; q <= 3; ++q) {
          const Surface s = Surface::make(g, p, q);
          if (vanishing_certificate(s) == Vanishing::NotAPriori) continue;
          for (const auto& x : surface_inputs(p, opt_.random_cases / 4)) {
            const auto closed = string_operation(model_, s, x);
            const auto pants = string_operation_by_pants(model_, s, x);
            law.expect(closed.is_zero() && pants.is_zero(), [&] {
              return "mu" + surface_text(s) + "(" + fmt(x) + ") = " + fmt(pants);
            });
          }
        }
    return law.take();
  }

  CheckResult tqft_closed_form() {
    LawRecorder law(check_names::kTqftClosedForm);
    for (std::int64_t g = 0; g <= 2; ++g)
      for (std::int64_t p = 1; p <= 3; ++p)
        for (std::int64_t q = 1; q <= 3; ++q) {
          const Surface s = Surface::make(g, p, q);
          for (const auto& x : surface_inputs(p, opt_.random_cases / 4)) {
            const auto closed = string_operation(model_, s, x);
            const auto pants = string_operation_by_pants(model_, s, x);
            law.expect(closed == pants, [&] {
              return "mu" + surface_text(s) + "(" + fmt(x) + "): closed form " +
                     fmt(closed) + ", pants " + fmt(pants);
            });
          }
        }
    return law.take();
  }

  Surface random_surface(std::int64_t inputs) {
    return Surface::make(rng_.between(0, 2), inputs, rng_.between(1, 3));
  }

  CheckResult tqft_functoriality() {
    LawRecorder law(check_names::kTqftFunctoriality);
    if (basis_.empty()) return law.take();
    const std::size_t pairs = std::max<std::size_t>(opt_.random_cases / 2, 1);
    for (std::size_t c = 0; c < pairs; ++c) {
      const Surface s1 = random_surface(rng_.between(1, 3));
      const Surface s2 = random_surface(s1.outputs);
      const Surface s = sew(s1, s2);
      std::vector<std::size_t> idx;
      for (std::int64_t j = 0; j < s1.inputs; ++j) idx.push_back(rng_.below(basis_.size()));
      const TensorElement x = basis_tensor(idx);
      const auto lhs = string_operation(model_, s2, string_operation(model_, s1, x));
      const auto rhs = string_operation(model_, s, x);
      law.expect(lhs == rhs, [&] {
        return "s1 = " + surface_text(s1) + ", s2 = " + surface_text(s2) +
               ", x = " + fmt(x) + ": " + fmt(lhs) + " != " + fmt(rhs);
      });
    }
    return law.take();
  }

  // Sum over factors of H-degree = ℍ-degree + d.
  std::int64_t homological_total(std::int64_t loop_total, std::size_t arity) const {
    return loop_total + static_cast<std::int64_t>(arity) * model_.dim();
  }

  CheckResult tqft_degree_shift() {
    LawRecorder law(check_names::kTqftDegree);
    for (std::int64_t g = 0; g <= 2; ++g)
      for (std::int64_t p = 1; p <= 3; ++p)
        for (std::int64_t q = 1; q <= 3; ++q) {
          const Surface s = Surface::make(g, p, q);
          for (const auto& x : surface_inputs(p, opt_.random_cases / 4)) {
            const auto y = string_operation(model_, s, x);
            if (y.is_zero() || x.is_zero()) continue;
            const Degree dx = degree_of(x), dy = degree_of(y);
            const bool ok =
                dy.homogeneous() && dx.homogeneous() &&
                homological_total(dy.value, y.arity()) ==
                    homological_total(dx.value, x.arity()) + euler_char(s) * model_.dim();
            law.expect(ok, [&] {
              return "mu" + surface_text(s) + "(" + fmt(x) + ") = " + fmt(y) +
                     " has the wrong degree";
            });
          }
        }
    return law.take();
  }

  CheckResult tqft_sew_genus() {
    LawRecorder law(check_names::kTqftSewGenus);
    for (std::int64_t g1 = 0; g1 <= 2; ++g1)
      for (std::int64_t g2 = 0; g2 <= 2; ++g2)
        for (std::int64_t p = 0; p <= 3; ++p)
          for (std::int64_t m = 1; m <= 3; ++m)
            for (std::int64_t q = 1; q <= 3; ++q) {
              const Surface s1 = Surface::make(g1, p, m), s2 = Surface::make(g2, m, q);
              const Surface s = sew(s1, s2);
              const bool ok = euler_char(s) == euler_char(s1) + euler_char(s2) &&
                              (g1 + g2 == 0 ||
                               vanishing_certificate(s) == Vanishing::GenusAtLeastOne);
              law.expect(ok, [&] {
                return "sew(" + surface_text(s1) + ", " + surface_text(s2) +
                       ") = " + surface_text(s);
              });
            }
    return law.take();
  }

  // -- bv ------------------------------------------------------------------

  bool skip_without_delta(LawRecorder& law) const {
    if (model_.has_delta() && model_.has_bracket()) return false;
    law.skip("model has no delta data");
    return true;
  }

  bool skip_without_bracket(LawRecorder& law) const {
    if (model_.has_bracket()) return false;
    law.skip("model has no bracket data");
    return true;
  }

  CheckResult delta_unit() {
    LawRecorder law(check_names::kDeltaUnit);
    if (skip_without_delta(law)) return law.take();
    const Element d1 = delta(model_, alg_.one());
    law.expect(d1.is_zero(), [&] { return "delta(1) = " + fmt(d1); });
    return law.take();
  }

  CheckResult delta_degree() {
    LawRecorder law(check_names::kDeltaDegree);
    if (skip_without_delta(law)) return law.take();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Element m = basis_element(i);
      const Element dm = delta(model_, m);
      const Degree d = degree_of(dm);
      law.expect(d.is_zero() || (d.homogeneous() && d.value == hdeg(m) + 1), [&] {
        return "delta(" + fmt(m) + ") = " + fmt(dm);
      });
    }
    return law.take();
  }

  CheckResult delta_square() {
    LawRecorder law(check_names::kDeltaSquare);
    if (skip_without_delta(law)) return law.take();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Element m = basis_element(i);
      const Element dd = delta(model_, delta(model_, m));
      law.expect(dd.is_zero(), [&] {
        return "delta(delta(" + fmt(m) + ")) = " + fmt(dd) +
               ": model is inconsistent";
      });
    }
    return law.take();
  }

  CheckResult bv_identity() {
    LawRecorder law(check_names::kBvIdentity);
    if (skip_without_delta(law)) return law.take();
    for (std::size_t c = 0; c < opt_.random_cases; ++c) {
      const Element a = random_homogeneous(), b = random_element();
      const Integer sign = sign_of_parity(hdeg(a));
      Element residual = delta(model_, mul(a, b));
      residual = subtract(residual, mul(delta(model_, a), b));
      residual = subtract(residual, scale(sign, mul(a, delta(model_, b))));
      residual = subtract(residual, scale(sign, bracket(model_, a, b)));
      law.expect(residual.is_zero(), [&] {
        return "a = " + fmt(a) + ", b = " + fmt(b) + ": residual " + fmt(residual);
      });
    }
    return law.take();
  }

  // k*m = 0 in the ring, so k*delta(m) and k*{g, m} must vanish as well.
  CheckResult bv_relations() {
    LawRecorder law(check_names::kBvRelations);
    if (skip_without_bracket(law)) return law.take();
    for (const auto& rel : alg_.relations()) {
      const std::string lhs =
          to_string(rel.coefficient) + "*" + format_monomial(alg_, rel.monomial);
      if (model_.has_delta()) {
        const Element value = scale(rel.coefficient, delta_monomial(model_, rel.monomial));
        law.expect(value.is_zero(), [&] {
          return "delta(" + lhs + ") = " + fmt(value) + " although " + lhs + " = 0";
        });
      }
      for (std::size_t g = 0; g < alg_.size(); ++g) {
        const Element value = scale(
            rel.coefficient,
            bracket_monomials(model_, alg_.generator_monomial(g), rel.monomial));
        law.expect(value.is_zero(), [&] {
          return "{" + alg_.generator_spec(g).name + ", " + lhs + "} = " + fmt(value) +
                 " although " + lhs + " = 0";
        });
      }
    }
    return law.take();
  }

  CheckResult delta_psi() {
    LawRecorder law(check_names::kDeltaPsi);
    if (skip_without_delta(law)) return law.take();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Element m = basis_element(i);
      const auto t = delta_factorwise(model_, psi(model_, m));
      law.expect(t.is_zero(), [&] {
        return "(delta (x) 1 + 1 (x) delta)psi(" + fmt(m) + ") = " + fmt(t);
      });
    }
    if (zero_euler()) law.note(kZeroEulerNote);
    return law.take();
  }

  CheckResult bracket_unit() {
    LawRecorder law(check_names::kBracketUnit);
    if (skip_without_bracket(law)) return law.take();
    const Element one = alg_.one();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Element m = basis_element(i);
      const Element l = bracket(model_, one, m), r = bracket(model_, m, one);
      law.expect(l.is_zero() && r.is_zero(), [&] {
        return "{1, " + fmt(m) + "} = " + fmt(l) + ", {" + fmt(m) + ", 1} = " + fmt(r);
      });
    }
    return law.take();
  }

  CheckResult bracket_antisymmetry() {
    LawRecorder law(check_names::kBracketAntisymmetry);
    if (skip_without_bracket(law)) return law.take();
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = 0; j < basis_.size(); ++j) {
        const Element x = basis_element(i), y = basis_element(j);
        const Element xy = bracket(model_, x, y), yx = bracket(model_, y, x);
        const bool even = !is_odd(checked_mul(hdeg(x) + 1, hdeg(y) + 1));
        law.expect(xy == (even ? negate(yx) : yx), [&] {
          return "{" + fmt(x) + ", " + fmt(y) + "} = " + fmt(xy) + ", {" + fmt(y) +
                 ", " + fmt(x) + "} = " + fmt(yx);
        });
      }
    return law.take();
  }

  CheckResult bracket_torsion() {
    LawRecorder law(check_names::kBracketTorsion);
    if (skip_without_bracket(law)) return law.take();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Element m = basis_element(i);
      const auto d = hdeg(m);
      if (d == -1 || (d == 0 && !model_.simply_connected())) continue;
      const Element value = scale(model_.euler(), bracket(model_, model_.c0(), m));
      law.expect(value.is_zero(), [&] {
        return "m = " + fmt(m) + ": chi*{c0, m} = " + fmt(value);
      });
    }
    if (zero_euler()) law.note(kZeroEulerNote);
    return law.take();
  }

  CheckResult bracket_geometric() {
    LawRecorder law(check_names::kBracketGeometric);
    if (skip_without_bracket(law)) return law.take();
    for (std::size_t g = 0; g < alg_.size(); ++g) {
      if (!alg_.generator_spec(g).geometric) continue;
      const Element ge = alg_.generator(g);
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Element b = basis_element(i);
        const auto t = psi(model_, bracket(model_, ge, b));
        law.expect(t.is_zero(), [&] {
          return "psi({" + alg_.generator_spec(g).name + ", " + fmt(b) + "}) = " + fmt(t);
        });
      }
    }
    if (zero_euler()) law.note(kZeroEulerNote);
    return law.take();
  }

  const LoopModel& model_;
  const GradedAlgebra& alg_;
  CheckOptions opt_;
  CheckRng rng_;
  std::vector<BasisEntry> basis_;
};

}  // namespace detail

inline CheckReport run_checks(const LoopModel& model, std::string name,
                              const CheckOptions& options = {}) {
  if (options.window < 0) throw std::invalid_argument("window must be >= 0");
  CheckReport report;
  report.model = std::move(name);
  report.window = options.window;
  report.seed = options.seed;
  report.results = detail::Checker(model, options).run();
  return report;
}

inline CheckReport run_checks(const ModelDoc& doc, const CheckOptions& options = {}) {
  return run_checks(doc.model, doc.provenance, options);
}

/// Plain-text report: one line per law, then a summary line.
inline std::string format_report(const CheckReport& report) {
  std::ostringstream os;
  os << "model: " << report.model << "\n"
     << "window: " << report.window << "\n"
     << "seed: " << report.seed << "\n";
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : report.results) {
    ++counts[static_cast<int>(r.status)];
    const char* tag = r.status == CheckStatus::Pass   ? "PASS"
                      : r.status == CheckStatus::Fail ? "FAIL"
                                                      : "SKIP";
    os << tag << "  " << r.name;
    if (r.status != CheckStatus::Skip) os << "  [" << r.cases << " cases]";
    if (!r.note.empty()) os << "  (" << r.note << ")";
    os << "\n";
    if (!r.witness.empty()) os << "      witness: " << r.witness << "\n";
  }
  os << "summary: " << counts[0] << " passed, " << counts[1] << " failed, "
     << counts[2] << " skipped\n";
  return os.str();
}

}  // namespace loopcalc
