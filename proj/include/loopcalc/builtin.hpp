#pragma once

// Built-in presentations of loop homology.
//
//   sphere:N (N even)  Λ(b) ⊗ Z[a,v]/(a², ab, 2av),  b:-1, a:-N, v:2N-2,
//                      c0 = a, χ = 2
//   sphere:N (N odd)   Λ(a) ⊗ Z[u],  a:-N, u:N-1, c0 = a, χ = 0
//   cpn:N              Λ(w) ⊗ Z[c,u]/(c^{N+1}, (N+1)c^N u, w c^N),
//                      w:-1, c:-2, u:2N, c0 = c^N, χ = N+1
//   toy:bv0            Λ(x,y),  x,y:-1, c0 = xy, dim 2, χ = 2, Δ = 0 and
//                      all brackets 0

#include <charconv>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "loopcalc/model.hpp"

namespace loopcalc::builtin {

inline ModelSpec sphere_spec(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("sphere:N needs N >= 2");
  ModelSpec s;
  s.dim = n;
  s.simply_connected = true;
  if (n % 2 == 0) {
    s.euler = 2;
    s.generators = {{"b", -1, false}, {"a", -n, true}, {"v", 2 * n - 2, false}};
    s.relations = {{1, {{"a", 2}}}, {1, {{"a", 1}, {"b", 1}}},
                   {2, {{"a", 1}, {"v", 1}}}};
  } else {
    s.euler = 0;
    s.generators = {{"a", -n, true}, {"u", n - 1, false}};
  }
  s.c0 = RawPolynomial{{1, {{"a", 1}}}};
  return s;
}

inline ModelSpec cpn_spec(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cpn:N needs N >= 1");
  ModelSpec s;
  s.dim = 2 * n;
  s.euler = n + 1;
  s.simply_connected = true;
  s.generators = {{"w", -1, false}, {"c", -2, true}, {"u", 2 * n, false}};
  s.relations = {{1, {{"c", n + 1}}},
                 {n + 1, {{"c", n}, {"u", 1}}},
                 {1, {{"w", 1}, {"c", n}}}};
  s.c0 = RawPolynomial{{1, {{"c", n}}}};
  return s;
}

inline ModelSpec toy_bv0_spec() {
  ModelSpec s;
  s.dim = 2;
  s.euler = 2;
  s.simply_connected = true;
  s.generators = {{"x", -1, true}, {"y", -1, false}};
  s.c0 = RawPolynomial{{1, {{"x", 1}, {"y", 1}}}};
  s.delta = std::vector<std::pair<std::string, RawPolynomial>>{
      {"x", {}}, {"y", {}}};
  s.bracket = std::vector<std::tuple<std::string, std::string, RawPolynomial>>{
      {"x", "x", {}}, {"x", "y", {}}, {"y", "y", {}}};
  return s;
}

inline LoopModel sphere(std::int64_t n) { return validate_model(sphere_spec(n)); }
inline LoopModel cpn(std::int64_t n) { return validate_model(cpn_spec(n)); }
inline LoopModel toy_bv0() { return validate_model(toy_bv0_spec()); }

inline bool looks_builtin(std::string_view name) {
  return name.starts_with("sphere:") || name.starts_with("cpn:") ||
         name.starts_with("toy:");
}

/// Resolves "sphere:N", "cpn:N" or "toy:bv0"; nullopt for other names.
inline std::optional<ModelSpec> spec_by_name(std::string_view name) {
  auto number = [](std::string_view text) -> std::int64_t {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw std::invalid_argument("bad built-in model parameter '" +
                                  std::string(text) + "'");
    return v;
  };
  if (name.starts_with("sphere:")) return sphere_spec(number(name.substr(7)));
  if (name.starts_with("cpn:")) return cpn_spec(number(name.substr(4)));
  if (name == "toy:bv0") return toy_bv0_spec();
  return std::nullopt;
}

}  // namespace loopcalc::builtin
